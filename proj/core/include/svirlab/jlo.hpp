#pragma once

#include "svirlab/linalg.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace svirlab {

// Divided difference e^{-x}[x_0, ..., x_n]; confluent nodes allowed.
double divided_difference_exp(std::vector<double> nodes, double taylor_spread = 2.0);
// Taylor evaluation around the node midpoint, accurate for small spread.
double divided_difference_exp_taylor(const std::vector<double>& nodes);

struct JloOptions {
  int n_max = 6;
  double cluster_tol = 1e-9;     // Q^2 eigenvalues closer than this share a cluster
  double taylor_spread = 2.0;
  double block_floor = 1e-15;    // cluster blocks with smaller Frobenius norm (relative) are dropped
  std::size_t work_budget = 400'000'000;  // dense multiply-adds allowed per component
  std::size_t state_budget = 1'000'000;   // live (start, cluster, counts) blocks
};

// tau_n(a_0, ..., a_n) = int_{simplex} tr(Gamma a_0 e^{-s_0 Q^2} [Q,a_1] e^{-s_1 Q^2} ... [Q,a_n] e^{-s_n Q^2}) ds
// evaluated in the eigenbasis of Q: each index tuple carries (-1)^n e^{-x}[mu_{j_0}, ..., mu_{j_n}]. Paths are grouped
// by the multiset of visited Q^2 clusters, so only the nonzero cluster blocks of [Q, a_i] are ever multiplied.
class JloEvaluator {
 public:
  JloEvaluator(const Mat& q, std::optional<RVec> gamma, JloOptions opts = {});

  cplx tau(const std::vector<Mat>& a) const;
  // the same with a_0 Gamma and [Q, a_i] supplied in the eigenbasis
  cplx tau_eigen(const Mat& gamma_a0, const std::vector<Mat>& commutators) const;

  const RVec& q_eigenvalues() const { return lambda_; }
  const Mat& eigenvectors() const { return v_; }
  int clusters() const { return static_cast<int>(cluster_value_.size()); }
  const JloOptions& options() const { return opts_; }
  Mat to_eigen(const Mat& a) const { return v_.adjoint() * a * v_; }
  Mat commutator_eigen(const Mat& a_eigen) const;

 private:
  Mat block(const Mat& m, int r, int c) const;

  JloOptions opts_;
  RVec lambda_;
  Mat v_;
  std::optional<Mat> gamma_eigen_;
  std::vector<std::vector<int>> cluster_;
  std::vector<double> cluster_value_;
};

}  // namespace svirlab
