#pragma once

#include "svirlab/types.hpp"

#include <string>
#include <vector>

namespace svirlab {

// Structure constants in an orthonormal basis of the basic inner product, stored exactly as
// q * sqrt(2) with q rational (abelian algebras have q = 0).
struct SimpleLieAlgebra {
  std::string name;
  int d = 0;
  int h_vee = 0;
  std::vector<Rational> f_over_sqrt2;  // d^3 entries, index (a,b,c) zero-based

  Rational f_coeff(int a, int b, int c) const { return f_over_sqrt2[(a * d + b) * d + c]; }
  double f(int a, int b, int c) const;  // zero-based indices
  bool abelian() const;
};

SimpleLieAlgebra build_su2();
// u(1)^d: f = 0 and h_vee = 0; used for the even-dimensional current models.
SimpleLieAlgebra build_abelian(int d);

struct InvariantReport {
  bool antisymmetric = true;
  bool jacobi = true;
  bool normalized = true;
};
// Exact checks of antisymmetry, Jacobi and sum_{bc} f_abc f_a'bc = 2 h_vee delta_aa'.
InvariantReport check_invariants(const SimpleLieAlgebra& g);

struct WeightLabel {
  int twice_spin = 0;
  int level = 0;
  auto operator<=>(const WeightLabel&) const = default;
};

std::vector<WeightLabel> admissible_weights(int level);
Rational conformal_dimension(const WeightLabel& w, const SimpleLieAlgebra& g);

}  // namespace svirlab
