#pragma once

#include "svirlab/linalg.hpp"
#include "svirlab/types.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace svirlab {

// Orthonormal basis of all states up to an energy cutoff. Levels are excitation energies
// above the lowest L_0 eigenvalue and are nondecreasing along the basis.
struct TruncatedModule {
  std::vector<HalfInt> level;
  HalfInt cutoff;
  Rational lowest_energy;
  std::optional<std::vector<int>> parity;  // +1 / -1 per basis state when a grading exists
  std::vector<std::string> label;

  int dim() const { return static_cast<int>(level.size()); }
  bool graded() const { return parity.has_value(); }
  std::vector<int> states_up_to(HalfInt bound) const;
  std::vector<int> states_at(HalfInt lvl) const;
  std::map<HalfInt, int> level_dims() const;
  SpMat grading() const;  // requires graded()
  RVec level_values() const;
};

// Energy-graded operator: L_n, G_r, J^a_n and F^a_r lower the level by `mode`; `reach`
// bounds |mode| over all constituents and fixes the safe subspace of relation checks.
struct ModeOperator {
  SpMat mat;
  std::optional<HalfInt> mode;
  HalfInt reach;
};

// States of two truncated modules with total level at most the cutoff. The left factor is
// treated as even: operators of both factors act without Koszul signs.
class TensorProduct {
 public:
  TensorProduct(const TruncatedModule& left, const TruncatedModule& right, HalfInt cutoff);

  const TruncatedModule& module() const { return module_; }
  SpMat left(const SpMat& a) const;
  SpMat right(const SpMat& b) const;
  SpMat product(const SpMat& a, const SpMat& b) const;  // a (x) b
  const std::vector<std::pair<int, int>>& pairs() const { return pairs_; }
  int index(int i, int j) const;  // -1 if outside the truncation

 private:
  TruncatedModule module_;
  std::vector<std::pair<int, int>> pairs_;
  std::vector<int> index_;
  int left_dim_ = 0, right_dim_ = 0;
};

}  // namespace svirlab
