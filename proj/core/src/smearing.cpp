#include "svirlab/smearing.hpp"

#include <cmath>

namespace svirlab {

TrigPoly TrigPoly::single(int a, HalfInt r, cplx c) {
  TrigPoly f;
  f.add(a, r, c);
  return f;
}

TrigPoly& TrigPoly::add(int a, HalfInt r, cplx c) {
  coeff[{a, r}] += c;
  return *this;
}

TrigPoly TrigPoly::derivative() const {
  TrigPoly g;
  for (const auto& [k, c] : coeff)
    if (k.second != HalfInt(0)) g.coeff[k] = I * k.second.value() * c;
  return g;
}

TrigPoly TrigPoly::conjugate() const {
  TrigPoly g;
  for (const auto& [k, c] : coeff) g.coeff[{k.first, -k.second}] = std::conj(c);
  return g;
}

TrigPoly TrigPoly::scaled(cplx s) const {
  TrigPoly g;
  for (const auto& [k, c] : coeff) g.coeff[k] = s * c;
  return g;
}

double TrigPoly::l2_norm() const {
  double s = 0.0;
  for (const auto& [k, c] : coeff) s += std::norm(c);
  return std::sqrt(s);
}

HalfInt TrigPoly::max_abs_mode() const {
  HalfInt m(0);
  for (const auto& [k, c] : coeff)
    if (c != 0.0) m = max(m, abs(k.second));
  return m;
}

bool TrigPoly::real_valued(double tol) const {
  for (const auto& [k, c] : coeff) {
    auto it = coeff.find({k.first, -k.second});
    cplx partner = it == coeff.end() ? cplx(0.0) : it->second;
    if (std::abs(c - std::conj(partner)) > tol) return false;
  }
  return true;
}

}  // namespace svirlab
