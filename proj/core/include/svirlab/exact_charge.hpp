#pragma once

#include "svirlab/lie_core.hpp"
#include "svirlab/types.hpp"

#include <map>
#include <utility>

namespace svirlab {

// a + b i sqrt(2), closed under the arithmetic needed when f_abc = q sqrt(2).
struct QI2 {
  Rational a, b;
  QI2 operator+(const QI2& o) const { return {a + o.a, b + o.b}; }
  QI2 operator*(const QI2& o) const { return {a * o.a - 2 * b * o.b, a * o.b + b * o.a}; }
  QI2& operator+=(const QI2& o) {
    a += o.a;
    b += o.b;
    return *this;
  }
  bool zero() const { return a == 0 && b == 0; }
  Rational norm2() const { return a * a + 2 * b * b; }
};

struct ExactCentralCharge {
  Rational formula;  // d/2 + d l/(l + h_vee)
  Rational from_g;   // (3/2) ||G_{-3/2} Omega||^2
  Rational from_l;   // 2 ||L_{-2} Omega||^2
};

// NS vacuum of (d fermions as a level h_vee current module) (x) (d NS fermions), evaluated
// with exact arithmetic in Q(i sqrt 2).
ExactCentralCharge exact_central_charge_fermionic(const SimpleLieAlgebra& g);

}  // namespace svirlab
