#include "svirlab/jlo.hpp"

#include "svirlab/types.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace svirlab {

double divided_difference_exp_taylor(const std::vector<double>& nodes) {
  if (nodes.empty()) fail(ErrorCode::invalid_argument, "divided difference needs at least one node");
  const auto [lo, hi] = std::minmax_element(nodes.begin(), nodes.end());
  const double c = 0.5 * (*lo + *hi);
  const int m = static_cast<int>(nodes.size()) - 1;
  // e^{-x} = e^{-c} sum_k (-1)^k (x-c)^k / k!  and  (x-c)^k [y_0..y_m] = h_{k-m}(y)
  const int J = 80;
  std::vector<double> h(J + 1, 0.0);
  h[0] = 1.0;
  for (double x : nodes) {
    const double y = x - c;
    for (int j = 1; j <= J; ++j) h[j] += y * h[j - 1];
  }
  double inv_fact = 1.0;
  for (int k = 2; k <= m; ++k) inv_fact /= k;
  const double r = std::max(std::abs(*lo - c), std::abs(*hi - c));
  // |h_j| / (m+j)! <= r^j / (m! j!); single terms may vanish (symmetric nodes), so stop on the bound
  double tail = inv_fact;
  double sum = 0.0;
  for (int j = 0; j <= J; ++j) {
    const int k = m + j;
    if (j > 0) {
      inv_fact /= k;
      tail *= r / j;
    }
    sum += ((k % 2) ? -1.0 : 1.0) * inv_fact * h[j];
    if (tail < 1e-18 * std::abs(sum)) break;
  }
  return std::exp(-c) * sum;
}

double divided_difference_exp(std::vector<double> x, double taylor_spread) {
  if (x.empty()) fail(ErrorCode::invalid_argument, "divided difference needs at least one node");
  std::sort(x.begin(), x.end());
  const int n = static_cast<int>(x.size());
  if (x.back() - x.front() <= taylor_spread) return divided_difference_exp_taylor(x);
  // table t[i] holds f[x_i .. x_{i+len}]
  std::vector<double> t(n);
  for (int i = 0; i < n; ++i) t[i] = std::exp(-x[i]);
  for (int len = 1; len < n; ++len)
    for (int i = 0; i + len < n; ++i) {
      const int j = i + len;
      if (x[j] - x[i] <= taylor_spread)
        t[i] = divided_difference_exp_taylor(std::vector<double>(x.begin() + i, x.begin() + j + 1));
      else
        t[i] = (t[i + 1] - t[i]) / (x[j] - x[i]);
    }
  return t[0];
}

JloEvaluator::JloEvaluator(const Mat& q, std::optional<RVec> gamma, JloOptions opts) : opts_(opts) {
  if (q.rows() != q.cols()) fail(ErrorCode::invalid_argument, "Q must be square");
  if (hermiticity_defect(q) > 1e-10) fail(ErrorCode::invalid_argument, "Q must be Hermitian");
  Eigen::SelfAdjointEigenSolver<Mat> es(0.5 * (q + q.adjoint()));
  lambda_ = es.eigenvalues();
  v_ = es.eigenvectors();
  if (gamma) {
    if (gamma->size() != q.rows()) fail(ErrorCode::invalid_argument, "grading has the wrong size");
    gamma_eigen_ = v_.adjoint() * gamma->cast<cplx>().asDiagonal() * v_;
  }
  const int n = static_cast<int>(lambda_.size());
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](int a, int b) { return lambda_[a] * lambda_[a] < lambda_[b] * lambda_[b]; });
  double first = 0.0;  // smallest member of the open cluster
  for (int i : order) {
    const double mu = lambda_[i] * lambda_[i];
    if (cluster_.empty() || mu - first > opts_.cluster_tol * std::max(1.0, mu)) {
      cluster_.push_back({});
      cluster_value_.push_back(0.0);
      first = mu;
    }
    cluster_.back().push_back(i);
  }
  for (std::size_t c = 0; c < cluster_.size(); ++c) {
    double s = 0;
    for (int i : cluster_[c]) s += lambda_[i] * lambda_[i];
    cluster_value_[c] = s / cluster_[c].size();
  }
}

Mat JloEvaluator::commutator_eigen(const Mat& a) const {
  Mat b = a;
  for (int j = 0; j < a.cols(); ++j)
    for (int i = 0; i < a.rows(); ++i) b(i, j) *= lambda_[i] - lambda_[j];
  return b;
}

Mat JloEvaluator::block(const Mat& m, int r, int c) const {
  const auto& R = cluster_[r];
  const auto& C = cluster_[c];
  Mat b(R.size(), C.size());
  for (std::size_t j = 0; j < C.size(); ++j)
    for (std::size_t i = 0; i < R.size(); ++i) b(i, j) = m(R[i], C[j]);
  return b;
}

cplx JloEvaluator::tau(const std::vector<Mat>& a) const {
  if (a.empty()) fail(ErrorCode::invalid_argument, "tau needs a_0");
  const int dim = static_cast<int>(lambda_.size());
  for (const auto& x : a)
    if (x.rows() != dim || x.cols() != dim) fail(ErrorCode::invalid_argument, "operator size differs from Q");
  Mat ga0 = to_eigen(a[0]);
  if (gamma_eigen_) ga0 = (*gamma_eigen_) * ga0;
  std::vector<Mat> b;
  for (std::size_t i = 1; i < a.size(); ++i) b.push_back(commutator_eigen(to_eigen(a[i])));
  return tau_eigen(ga0, b);
}

cplx JloEvaluator::tau_eigen(const Mat& ga0, const std::vector<Mat>& b) const {
  const int n = static_cast<int>(b.size());
  if (n > opts_.n_max)
    fail(ErrorCode::budget, "tau_" + std::to_string(n) + " exceeds n_max=" + std::to_string(opts_.n_max));
  const int K = clusters();
  if (n >= 255) fail(ErrorCode::budget, "component degree too large");

  // nonzero cluster blocks of each commutator
  std::vector<std::vector<std::vector<std::pair<int, Mat>>>> nz(n, std::vector<std::vector<std::pair<int, Mat>>>(K));
  for (int i = 0; i < n; ++i) {
    const double scale = std::max(1e-300, b[i].norm());
    for (int r = 0; r < K; ++r)
      for (int c = 0; c < K; ++c) {
        Mat blk = block(b[i], r, c);
        if (blk.norm() > opts_.block_floor * scale) nz[i][r].emplace_back(c, std::move(blk));
      }
  }

  struct Key {
    int start, cur;
    std::vector<unsigned char> counts;
    bool operator<(const Key& o) const {
      if (start != o.start) return start < o.start;
      if (cur != o.cur) return cur < o.cur;
      return counts < o.counts;
    }
  };
  std::map<Key, Mat> states;
  for (int s = 0; s < K; ++s) {
    Key k{s, s, std::vector<unsigned char>(K, 0)};
    k.counts[s] = 1;
    const int m = static_cast<int>(cluster_[s].size());
    states.emplace(std::move(k), Mat::Identity(m, m));
  }
  std::size_t work = 0;
  for (int i = 0; i < n; ++i) {
    std::map<Key, Mat> next;
    for (const auto& [k, M] : states)
      for (const auto& [c, blk] : nz[i][k.cur]) {
        Key k2{k.start, c, k.counts};
        ++k2.counts[c];
        work += static_cast<std::size_t>(M.rows()) * M.cols() * blk.cols();
        if (work > opts_.work_budget) fail(ErrorCode::budget, "JLO contraction exceeds the work budget");
        Mat prod = M * blk;
        auto it = next.find(k2);
        if (it == next.end() && next.size() >= opts_.state_budget)
          fail(ErrorCode::budget, "JLO contraction exceeds the state budget");
        if (it == next.end())
          next.emplace(std::move(k2), std::move(prod));
        else
          it->second += prod;
      }
    if (next.size() > opts_.state_budget) fail(ErrorCode::budget, "JLO contraction exceeds the state budget");
    states = std::move(next);
  }

  std::map<std::vector<unsigned char>, double> dd_cache;
  cplx total = 0.0;
  for (const auto& [k, M] : states) {
    const Mat g = block(ga0, k.cur, k.start);
    const cplx tr = (g.transpose().cwiseProduct(M)).sum();
    if (tr == 0.0) continue;
    auto it = dd_cache.find(k.counts);
    if (it == dd_cache.end()) {
      std::vector<double> nodes;
      for (int c = 0; c < K; ++c)
        for (int t = 0; t < k.counts[c]; ++t) nodes.push_back(cluster_value_[c]);
      it = dd_cache.emplace(k.counts, divided_difference_exp(nodes, opts_.taylor_spread)).first;
    }
    total += it->second * tr;
  }
  return (n % 2 ? -1.0 : 1.0) * total;
}

}  // namespace svirlab
