#include "svirlab/lie_core.hpp"

#include <cmath>

namespace svirlab {

double SimpleLieAlgebra::f(int a, int b, int c) const { return to_double(f_coeff(a, b, c)) * std::sqrt(2.0); }

bool SimpleLieAlgebra::abelian() const {
  for (const auto& q : f_over_sqrt2)
    if (q != 0) return false;
  return true;
}

SimpleLieAlgebra build_su2() {
  SimpleLieAlgebra g;
  g.name = "su2";
  g.d = 3;
  g.h_vee = 2;
  g.f_over_sqrt2.assign(27, Rational(0));
  const int perm[6][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {1, 0, 2}, {0, 2, 1}, {2, 1, 0}};
  for (int p = 0; p < 6; ++p) {
    const auto* e = perm[p];
    g.f_over_sqrt2[(e[0] * 3 + e[1]) * 3 + e[2]] = Rational(p < 3 ? 1 : -1);
  }
  return g;
}

SimpleLieAlgebra build_abelian(int d) {
  if (d < 1) fail(ErrorCode::invalid_argument, "abelian algebra needs d >= 1");
  SimpleLieAlgebra g;
  g.name = "u1^" + std::to_string(d);
  g.d = d;
  g.h_vee = 0;
  g.f_over_sqrt2.assign(static_cast<std::size_t>(d) * d * d, Rational(0));
  return g;
}

InvariantReport check_invariants(const SimpleLieAlgebra& g) {
  InvariantReport r;
  const int d = g.d;
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b)
      for (int c = 0; c < d; ++c) {
        if (g.f_coeff(a, b, c) != -g.f_coeff(b, a, c) || g.f_coeff(a, b, c) != -g.f_coeff(a, c, b))
          r.antisymmetric = false;
      }
  // (sqrt2)^2 = 2 multiplies every quadratic expression
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b)
      for (int c = 0; c < d; ++c)
        for (int h = 0; h < d; ++h) {
          Rational s = 0;
          for (int e = 0; e < d; ++e)
            s += g.f_coeff(a, b, e) * g.f_coeff(e, c, h) + g.f_coeff(b, c, e) * g.f_coeff(e, a, h) +
                 g.f_coeff(c, a, e) * g.f_coeff(e, b, h);
          if (s != 0) r.jacobi = false;
        }
  for (int a = 0; a < d; ++a)
    for (int a2 = 0; a2 < d; ++a2) {
      Rational s = 0;
      for (int b = 0; b < d; ++b)
        for (int c = 0; c < d; ++c) s += 2 * g.f_coeff(a, b, c) * g.f_coeff(a2, b, c);
      if (s != (a == a2 ? Rational(2 * g.h_vee) : Rational(0))) r.normalized = false;
    }
  return r;
}

std::vector<WeightLabel> admissible_weights(int level) {
  if (level < 0) fail(ErrorCode::invalid_argument, "level must be nonnegative");
  std::vector<WeightLabel> out;
  for (int t = 0; t <= level; ++t) out.push_back({t, level});
  return out;
}

Rational conformal_dimension(const WeightLabel& w, const SimpleLieAlgebra& g) {
  if (w.twice_spin < 0 || w.twice_spin > w.level)
    fail(ErrorCode::invalid_argument, "weight 2j=" + std::to_string(w.twice_spin) + " not admissible at level " +
                                          std::to_string(w.level));
  if (w.level + g.h_vee == 0) fail(ErrorCode::invalid_argument, "l + h_vee must be positive");
  Rational j(w.twice_spin, 2);
  return j * (j + 1) / Rational(w.level + g.h_vee);
}

}  // namespace svirlab
