#pragma once

#include "svirlab/jlo.hpp"
#include "svirlab/module.hpp"
#include "svirlab/sugawara.hpp"

#include <optional>
#include <string>
#include <vector>

namespace svirlab {

struct SpectralTripleData {
  TruncatedModule space;
  Mat Q;
  std::optional<RVec> gamma;  // diagonal of Gamma
  Rational lw;
  Rational c;

  int dim() const { return static_cast<int>(Q.rows()); }
  bool graded() const { return gamma.has_value(); }
  Mat grading() const;
};

SpectralTripleData make_triple(const SvirGenerators& gens);
// Checks Hermiticity, Gamma^2 = 1 and Gamma Q Gamma = -Q.
SpectralTripleData make_triple(TruncatedModule space, Mat q, std::optional<RVec> gamma, Rational lw, Rational c);
// Same triple with Q replaced by v* Q v.
SpectralTripleData conjugated(const SpectralTripleData& st, const Mat& v);

Mat derivation(const SpectralTripleData& st, const Mat& x);
// ||[Q, x]|| on states up to bound (operator norm of the column block)
double derivation_norm(const SpectralTripleData& st, const Mat& x, std::optional<HalfInt> bound = std::nullopt);

// chi_1(e^{-(L_0 - lw)}) (1 + Gamma)/2: even lowest-level states
Mat characteristic_projection(const SpectralTripleData& st);

struct GradedIndex {
  int index = 0;
  int ker_plus = 0, ker_minus = 0;
  double gap = 0.0;
};
// ind(p_- Q_+ p_+) on the truncated space; p defaults to the identity.
GradedIndex graded_index(const SpectralTripleData& st, const std::optional<Mat>& p = std::nullopt, double tol = 1e-8);

double heat_trace(const SpectralTripleData& st, double t);

struct OddIndex {
  int index = 0;
  int ker = 0, coker = 0;
  double gap = 0.0;
  HalfInt window;
};
// ind(P u P) with P = chi_[0,inf)(Q), counting kernel vectors supported on levels <= window
// (default: cutoff - 2, below the boundary of a wrapped shift).
OddIndex odd_index(const SpectralTripleData& st, const Mat& u, std::optional<HalfInt> window = std::nullopt,
                   double tol = 1e-8);

struct ShiftData {
  double lambda0 = 0.0;
  int copies = 0;
  int top = 0;  // ladder runs over n = -(top) .. top
  std::vector<std::vector<Vec>> xi_plus, xi_minus;  // [n][copy]
  std::vector<double> eigen_residual;               // max over copies and signs, per n
  double orthogonality_defect = 0.0;                // before re-orthonormalization
  Mat u;
  double commutator_norm = 0.0;       // ||[Q, u_s]|| on the ladder, including the crossing xi_0 -> xi_-1
  double wrap_commutator = 0.0;       // |<xi_top, [Q, u_s] xi_-top>|
  double same_sign_commutator = 0.0;  // sup over steps within one sign of the spectrum
  OddIndex index;
};

// Ladder xi_{+-n} = (L_{-n} + (1/2)(-lambda0 +- sqrt(lambda0^2 + n)) G_{-n}) xi_0 on n <= cutoff - 1 and the
// left shift xi_n -> xi_{n-1} with wrap xi_{-top} -> xi_{top}; identity on the complement.
ShiftData spectrum_shift(const SpectralTripleData& st, const SvirGenerators& gens);

// Analytic ladder: copies x {xi_n : |n| <= top}, Q xi_{+-n} = +-sqrt(lambda0^2 + n) xi_{+-n}, together with its shift.
struct LadderModel {
  SpectralTripleData st;
  Mat u;
};
LadderModel ladder_model(double lambda0, int top, int copies);

struct PairingSeries {
  std::vector<double> terms;
  std::vector<double> partial;
  double value = 0.0;
  double last_term = 0.0;
  double imag = 0.0;  // largest imaginary part met (diagnostic)
};

// phi(p) = tau_0(p) + sum_{k>=1} (-1)^k (2k)!/k! tau_{2k}(p - 1/2, p, ..., p)
PairingSeries even_pairing(const SpectralTripleData& st, const Mat& p, int k_max, double stop = 0.0,
                           JloOptions opts = {});

enum class OddOrder { u_first, u_inverse_first };
// (1/sqrt(pi)) sum_k (-1)^k k! tau_{2k+1}(x_0, x_1, ...) alternating u and u^{-1}, starting as chosen.
PairingSeries odd_pairing(const SpectralTripleData& st, const Mat& u, int k_max, OddOrder order = OddOrder::u_first,
                          double stop = 0.0, JloOptions opts = {});

cplx jlo_component(const SpectralTripleData& st, const std::vector<Mat>& a, JloOptions opts = {});

struct EntirenessRow {
  int n = 0;
  double max_tau = 0.0;
  double growth = 0.0;  // (sqrt(n!) max|tau_n|)^{1/n}
};
// a_i drawn from the family (each normalized to unit operator norm); all tuples of equal elements.
std::vector<EntirenessRow> entireness_report(const SpectralTripleData& st, const std::vector<Mat>& family, int n_max,
                                             JloOptions opts = {});

}  // namespace svirlab
