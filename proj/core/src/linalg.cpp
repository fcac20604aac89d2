#include "svirlab/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace svirlab {

SpMat sparse_identity(int n) {
  SpMat m(n, n);
  m.setIdentity();
  return m;
}

SpMat sparse_diagonal(const RVec& d) {
  SpMat m(d.size(), d.size());
  std::vector<Eigen::Triplet<cplx>> t;
  t.reserve(d.size());
  for (int i = 0; i < d.size(); ++i)
    if (d[i] != 0.0) t.emplace_back(i, i, d[i]);
  m.setFromTriplets(t.begin(), t.end());
  return m;
}

SpMat commutator(const SpMat& a, const SpMat& b) {
  SpMat r = a * b;
  r -= SpMat(b * a);
  return r;
}

SpMat anticommutator(const SpMat& a, const SpMat& b) {
  SpMat r = a * b;
  r += SpMat(b * a);
  return r;
}

Mat commutator(const Mat& a, const Mat& b) { return a * b - b * a; }

double frobenius_columns(const SpMat& a, const std::vector<int>& cols) {
  double s = 0.0;
  for (int c : cols)
    for (SpMat::InnerIterator it(a, c); it; ++it) s += std::norm(it.value());
  return std::sqrt(s);
}

double frobenius_columns(const Mat& a, const std::vector<int>& cols) {
  double s = 0.0;
  for (int c : cols) s += a.col(c).squaredNorm();
  return std::sqrt(s);
}

double frobenius_block(const Mat& a, const std::vector<int>& idx) {
  double s = 0.0;
  for (int c : idx)
    for (int r : idx) s += std::norm(a(r, c));
  return std::sqrt(s);
}

double operator_norm(const Mat& a) {
  if (a.size() == 0) return 0.0;
  Eigen::BDCSVD<Mat> svd(a);
  return svd.singularValues()(0);
}

double hermiticity_defect(const Mat& a) {
  if (a.size() == 0) return 0.0;
  return (a - a.adjoint()).cwiseAbs().maxCoeff();
}

double hermiticity_defect(const SpMat& a) {
  SpMat d = a - SpMat(a.adjoint());
  double m = 0.0;
  for (int k = 0; k < d.outerSize(); ++k)
    for (SpMat::InnerIterator it(d, k); it; ++it) m = std::max(m, std::abs(it.value()));
  return m;
}

Mat expi_hermitian(const Mat& x) {
  Mat h = 0.5 * (x + x.adjoint());
  Eigen::SelfAdjointEigenSolver<Mat> es(h);
  const auto& ev = es.eigenvalues();
  Vec ph(ev.size());
  for (int i = 0; i < ev.size(); ++i) ph[i] = std::exp(I * ev[i]);
  return es.eigenvectors() * ph.asDiagonal() * es.eigenvectors().adjoint();
}

Mat columns(const Mat& a, const std::vector<int>& cols) {
  Mat r(a.rows(), static_cast<int>(cols.size()));
  for (std::size_t k = 0; k < cols.size(); ++k) r.col(k) = a.col(cols[k]);
  return r;
}

Mat submatrix(const Mat& a, const std::vector<int>& rows, const std::vector<int>& cols) {
  Mat r(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (std::size_t i = 0; i < rows.size(); ++i) r(i, j) = a(rows[i], cols[j]);
  return r;
}

Mat range_basis(const Mat& a, double tol) {
  if (a.cols() == 0 || a.rows() == 0) return Mat(a.rows(), 0);
  Eigen::BDCSVD<Mat> svd(a, Eigen::ComputeFullU);
  int r = 0;
  for (int i = 0; i < svd.singularValues().size(); ++i)
    if (svd.singularValues()(i) > tol) ++r;
  return svd.matrixU().leftCols(r);
}

KernelInfo kernel(const Mat& a, double tol) {
  KernelInfo info;
  const int n = static_cast<int>(a.cols());
  info.gap = std::numeric_limits<double>::infinity();
  if (n == 0) {
    info.basis = Mat(0, 0);
    return info;
  }
  if (a.rows() == 0) {
    info.basis = Mat::Identity(n, n);
    return info;
  }
  Eigen::BDCSVD<Mat> svd(a, Eigen::ComputeFullV);
  const auto& s = svd.singularValues();
  int rank = 0;
  for (int i = 0; i < s.size(); ++i) {
    if (s(i) > tol) {
      ++rank;
      info.gap = std::min(info.gap, s(i));
    } else {
      info.largest_null = std::max(info.largest_null, s(i));
    }
  }
  info.basis = svd.matrixV().rightCols(n - rank);
  return info;
}

}  // namespace svirlab
