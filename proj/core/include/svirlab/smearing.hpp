#pragma once

#include "svirlab/linalg.hpp"
#include "svirlab/types.hpp"

#include <map>
#include <utility>

namespace svirlab {

// Trigonometric polynomial on the circle valued in a d-dimensional space: sum f_{a,r} e^{i r theta} e_a,
// colour index a = 0..d-1. The normalization of the basis functions is 1 (c_r = 1).
struct TrigPoly {
  std::map<std::pair<int, HalfInt>, cplx> coeff;

  static TrigPoly single(int a, HalfInt r, cplx c = 1.0);
  TrigPoly& add(int a, HalfInt r, cplx c);

  // f'(theta): coefficients i r f_{a,r}.
  TrigPoly derivative() const;
  // complex conjugate function: coefficients conj(f_{a,-r}).
  TrigPoly conjugate() const;
  TrigPoly scaled(cplx s) const;
  double l2_norm() const;
  HalfInt max_abs_mode() const;
  bool real_valued(double tol = 1e-14) const;
};

}  // namespace svirlab
