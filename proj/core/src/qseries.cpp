#include "svirlab/qseries.hpp"

#include <cmath>
#include <sstream>

namespace svirlab {

QSeries QSeries::constant(const Rational& c, HalfInt order) { return monomial(c, HalfInt(0), order); }

QSeries QSeries::monomial(const Rational& c, HalfInt exponent, HalfInt order) {
  QSeries s(order);
  s.add(exponent, c);
  return s;
}

Rational QSeries::coefficient(HalfInt e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

void QSeries::add(HalfInt e, const Rational& c) {
  if (e < HalfInt(0)) fail(ErrorCode::invalid_argument, "negative exponent in q-series");
  if (e > order_ || c == 0) return;
  Rational& slot = terms_[e];
  slot += c;
  if (slot == 0) terms_.erase(e);
}

QSeries QSeries::operator+(const QSeries& o) const {
  QSeries r(min(order_, o.order_));
  for (const auto& [e, c] : terms_) r.add(e, c);
  for (const auto& [e, c] : o.terms_) r.add(e, c);
  return r;
}

QSeries QSeries::operator*(const QSeries& o) const {
  QSeries r(min(order_, o.order_));
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) r.add(e1 + e2, c1 * c2);
  return r;
}

QSeries QSeries::truncated(HalfInt order) const {
  QSeries r(min(order, order_));
  for (const auto& [e, c] : terms_) r.add(e, c);
  return r;
}

double QSeries::heat(double t, double shift) const {
  double s = 0.0;
  for (const auto& [e, c] : terms_) s += to_double(c) * std::exp(-t * (e.value() + shift));
  return s;
}

std::string QSeries::str() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << to_string(c);
    if (e != HalfInt(0)) os << " q^" << e.str();
  }
  if (first) os << "0";
  os << " + O(q^" << (order_ + HalfInt::from_twice(1)).str() << ")";
  return os.str();
}

}  // namespace svirlab
