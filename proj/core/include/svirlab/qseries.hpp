#pragma once

#include "svirlab/types.hpp"

#include <map>
#include <string>

namespace svirlab {

// Truncated series sum_E c_E q^E with rational coefficients and half-integer exponents E
// in [0, order].
class QSeries {
 public:
  QSeries() = default;
  explicit QSeries(HalfInt order) : order_(order) {}

  static QSeries constant(const Rational& c, HalfInt order);
  static QSeries monomial(const Rational& c, HalfInt exponent, HalfInt order);

  HalfInt order() const { return order_; }
  Rational coefficient(HalfInt e) const;
  void add(HalfInt e, const Rational& c);
  const std::map<HalfInt, Rational>& terms() const { return terms_; }

  QSeries operator+(const QSeries& o) const;
  QSeries operator*(const QSeries& o) const;
  QSeries truncated(HalfInt order) const;

  // sum_E c_E exp(-t (E + shift))
  double heat(double t, double shift = 0.0) const;
  std::string str() const;

 private:
  HalfInt order_;
  std::map<HalfInt, Rational> terms_;
};

}  // namespace svirlab
