#pragma once

#include <Eigen/Dense>
#include <Eigen/Sparse>

#include <complex>
#include <vector>

namespace svirlab {

using cplx = std::complex<double>;
using SpMat = Eigen::SparseMatrix<cplx>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;
using RVec = Eigen::VectorXd;

inline constexpr cplx I{0.0, 1.0};

SpMat sparse_identity(int n);
SpMat sparse_diagonal(const RVec& d);
SpMat commutator(const SpMat& a, const SpMat& b);
SpMat anticommutator(const SpMat& a, const SpMat& b);
Mat commutator(const Mat& a, const Mat& b);

// Frobenius norm of A restricted to the given columns.
double frobenius_columns(const SpMat& a, const std::vector<int>& cols);
double frobenius_columns(const Mat& a, const std::vector<int>& cols);
// Frobenius norm of P A P with P the coordinate projection onto idx.
double frobenius_block(const Mat& a, const std::vector<int>& idx);

// Largest singular value.
double operator_norm(const Mat& a);
double hermiticity_defect(const Mat& a);
double hermiticity_defect(const SpMat& a);

// exp(i X) for Hermitian X.
Mat expi_hermitian(const Mat& x);

Mat columns(const Mat& a, const std::vector<int>& cols);
Mat submatrix(const Mat& a, const std::vector<int>& rows, const std::vector<int>& cols);

// Orthonormal basis of the column range (singular values above tol).
Mat range_basis(const Mat& a, double tol);
// Orthonormal basis of the kernel and the smallest retained singular value.
struct KernelInfo {
  Mat basis;
  double gap = 0.0;        // smallest singular value above the threshold (inf if none)
  double largest_null = 0.0;
};
KernelInfo kernel(const Mat& a, double tol);

}  // namespace svirlab
