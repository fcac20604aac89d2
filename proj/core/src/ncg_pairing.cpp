#include "svirlab/ncg_pairing.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace svirlab {

namespace {

double factorial(int n) {
  double f = 1.0;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

void require_graded(const SpectralTripleData& st, const char* what) {
  if (!st.graded()) fail(ErrorCode::unsupported, std::string(what) + " needs a graded triple");
}

int numerical_rank(const Mat& a, double tol) {
  if (a.rows() == 0 || a.cols() == 0) return 0;
  Eigen::BDCSVD<Mat> svd(a);
  int r = 0;
  for (int i = 0; i < svd.singularValues().size(); ++i)
    if (svd.singularValues()(i) > tol) ++r;
  return r;
}

JloOptions with_degree(JloOptions o, int n) {
  o.n_max = std::max(o.n_max, n);
  return o;
}

}  // namespace

Mat SpectralTripleData::grading() const {
  if (!gamma) fail(ErrorCode::unsupported, "triple carries no grading");
  return gamma->cast<cplx>().asDiagonal();
}

SpectralTripleData make_triple(TruncatedModule space, Mat q, std::optional<RVec> gamma, Rational lw, Rational c) {
  if (q.rows() != q.cols() || q.rows() != space.dim()) fail(ErrorCode::invalid_argument, "Q does not match the space");
  if (hermiticity_defect(q) > 1e-10) fail(ErrorCode::invalid_argument, "Q is not Hermitian");
  if (gamma) {
    for (int i = 0; i < gamma->size(); ++i)
      if (std::abs(std::abs((*gamma)[i]) - 1.0) > 1e-15) fail(ErrorCode::invalid_argument, "Gamma^2 != 1");
    Mat g = gamma->cast<cplx>().asDiagonal();
    if ((g * q * g + q).norm() > 1e-10 * std::max(1.0, q.norm()))
      fail(ErrorCode::invalid_argument, "Q is not odd for Gamma");
  }
  return {std::move(space), std::move(q), std::move(gamma), std::move(lw), std::move(c)};
}

SpectralTripleData make_triple(const SvirGenerators& gens) {
  std::optional<RVec> gamma;
  if (gens.host.graded()) {
    gamma = RVec(gens.dim());
    for (int i = 0; i < gens.dim(); ++i) (*gamma)[i] = (*gens.host.parity)[i];
  }
  return make_triple(gens.host, Mat(supercharge(gens)), gamma, gens.h, gens.c);
}

SpectralTripleData conjugated(const SpectralTripleData& st, const Mat& v) {
  SpectralTripleData out = st;
  out.Q = v.adjoint() * st.Q * v;
  out.Q = 0.5 * (out.Q + out.Q.adjoint());
  return out;
}

Mat derivation(const SpectralTripleData& st, const Mat& x) {
  if (x.rows() != st.dim() || x.cols() != st.dim()) fail(ErrorCode::invalid_argument, "operator shape mismatch");
  return st.Q * x - x * st.Q;
}

double derivation_norm(const SpectralTripleData& st, const Mat& x, std::optional<HalfInt> bound) {
  Mat d = derivation(st, x);
  if (!bound) return operator_norm(d);
  return operator_norm(columns(d, st.space.states_up_to(*bound)));
}

Mat characteristic_projection(const SpectralTripleData& st) {
  require_graded(st, "characteristic projection");
  Mat p = Mat::Zero(st.dim(), st.dim());
  for (int i = 0; i < st.dim(); ++i)
    if (st.space.level[i] == HalfInt(0) && (*st.gamma)[i] > 0) p(i, i) = 1.0;
  return p;
}

GradedIndex graded_index(const SpectralTripleData& st, const std::optional<Mat>& p, double tol) {
  require_graded(st, "graded index");
  const int n = st.dim();
  Mat P = p ? *p : Mat::Identity(n, n);
  const Mat g = st.grading();
  if ((P * g - g * P).norm() > 1e-9) fail(ErrorCode::invalid_argument, "projection does not commute with Gamma");
  Mat pp = P * (0.5 * (Mat::Identity(n, n) + g));
  Mat pm = P * (0.5 * (Mat::Identity(n, n) - g));
  Mat bp = range_basis(pp, 1e-8), bm = range_basis(pm, 1e-8);
  GradedIndex out;
  Mat t = bm.adjoint() * st.Q * bp;
  KernelInfo k = kernel(t, tol);
  KernelInfo kc = kernel(Mat(t.adjoint()), tol);
  out.ker_plus = static_cast<int>(k.basis.cols());
  out.ker_minus = static_cast<int>(kc.basis.cols());
  out.index = out.ker_plus - out.ker_minus;
  out.gap = std::min(k.gap, kc.gap);
  return out;
}

double heat_trace(const SpectralTripleData& st, double t) {
  if (!(t > 0)) fail(ErrorCode::invalid_argument, "heat trace needs t > 0");
  Eigen::SelfAdjointEigenSolver<Mat> es(st.Q);
  const RVec& l = es.eigenvalues();
  double s = 0;
  for (int i = 0; i < l.size(); ++i) {
    double w = 1.0;
    if (st.gamma) w = (es.eigenvectors().col(i).adjoint() * st.gamma->cast<cplx>().asDiagonal() *
                       es.eigenvectors().col(i))(0, 0).real();
    s += w * std::exp(-t * l[i] * l[i]);
  }
  return s;
}

OddIndex odd_index(const SpectralTripleData& st, const Mat& u, std::optional<HalfInt> window, double tol) {
  const int n = st.dim();
  if (u.rows() != n || u.cols() != n) fail(ErrorCode::invalid_argument, "unitary shape mismatch");
  if ((u.adjoint() * u - Mat::Identity(n, n)).norm() > 1e-9 * std::sqrt(double(n)))
    fail(ErrorCode::invalid_argument, "odd index needs a unitary");
  OddIndex out;
  out.window = window ? *window : st.space.cutoff - HalfInt(2);
  Eigen::SelfAdjointEigenSolver<Mat> es(st.Q);
  std::vector<int> pos;
  for (int i = 0; i < n; ++i)
    if (es.eigenvalues()[i] >= -tol) pos.push_back(i);
  Mat b = columns(es.eigenvectors(), pos);
  Mat t = b.adjoint() * u * b;
  std::vector<int> outside;
  for (int i = 0; i < n; ++i)
    if (st.space.level[i] > out.window) outside.push_back(i);
  auto windowed = [&](const KernelInfo& k) {
    if (k.basis.cols() == 0) return 0;
    Mat v = b * k.basis;
    Mat o(outside.size(), v.cols());
    for (std::size_t r = 0; r < outside.size(); ++r) o.row(r) = v.row(outside[r]);
    return static_cast<int>(k.basis.cols()) - numerical_rank(o, tol);
  };
  KernelInfo k = kernel(t, tol);
  KernelInfo kc = kernel(Mat(t.adjoint()), tol);
  out.ker = windowed(k);
  out.coker = windowed(kc);
  out.index = out.ker - out.coker;
  out.gap = std::min(k.gap, kc.gap);
  return out;
}

ShiftData spectrum_shift(const SpectralTripleData& st, const SvirGenerators& gens) {
  if (!st.space.cutoff.is_integer() || st.space.cutoff < HalfInt(2))
    fail(ErrorCode::invalid_argument, "spectrum shift needs an integer cutoff >= 2");
  const int N = st.space.cutoff.twice() / 2;
  ShiftData sd;
  sd.top = N - 1;
  const double l2 = to_double(st.lw - st.c / 24);
  if (l2 < -1e-12) fail(ErrorCode::numerical, "h - c/24 is negative");
  sd.lambda0 = std::sqrt(std::max(0.0, l2));

  const std::vector<int> ground = st.space.states_at(HalfInt(0));
  Mat q0 = submatrix(st.Q, ground, ground);
  Eigen::SelfAdjointEigenSolver<Mat> es(q0);
  std::vector<Vec> xi0;
  for (int i = 0; i < es.eigenvalues().size(); ++i)
    if (std::abs(es.eigenvalues()[i] - sd.lambda0) < 1e-8) {
      Vec v = Vec::Zero(st.dim());
      for (std::size_t k = 0; k < ground.size(); ++k) v[ground[k]] = es.eigenvectors()(k, i);
      xi0.push_back(v);
    }
  if (xi0.empty()) fail(ErrorCode::numerical, "no +lambda0 eigenvector at the lowest level");
  sd.copies = static_cast<int>(xi0.size());

  sd.xi_plus.assign(sd.top + 1, {});
  sd.xi_minus.assign(sd.top + 1, {});
  sd.eigen_residual.assign(sd.top + 1, 0.0);
  sd.xi_plus[0] = xi0;
  for (const auto& v : xi0) sd.eigen_residual[0] = std::max(sd.eigen_residual[0], (st.Q * v - sd.lambda0 * v).norm());
  auto orthonormalize = [&](std::vector<Vec>& vs) {
    for (std::size_t i = 0; i < vs.size(); ++i) {
      for (std::size_t j = 0; j < i; ++j) {
        sd.orthogonality_defect = std::max(sd.orthogonality_defect, std::abs(vs[j].dot(vs[i])) / vs[i].norm());
        vs[i] -= vs[j].dot(vs[i]) * vs[j];
      }
      vs[i].normalize();
    }
  };
  for (int n = 1; n <= sd.top; ++n) {
    const double ln = std::sqrt(sd.lambda0 * sd.lambda0 + n);
    for (int s : {1, -1}) {
      std::vector<Vec> vs;
      for (const auto& v : xi0) {
        Vec w = gens.l(-n) * v + 0.5 * (-sd.lambda0 + s * ln) * (gens.g(HalfInt(-n)) * v);
        if (w.norm() < 1e-12) fail(ErrorCode::numerical, "vanishing ladder vector at level " + std::to_string(n));
        w.normalize();
        sd.eigen_residual[n] = std::max(sd.eigen_residual[n], (st.Q * w - (s * ln) * w).norm());
        vs.push_back(w);
      }
      orthonormalize(vs);
      (s > 0 ? sd.xi_plus : sd.xi_minus)[n] = std::move(vs);
    }
  }

  // columns ordered n = -top..top within each copy
  const int len = 2 * sd.top + 1;
  Mat xi(st.dim(), len * sd.copies);
  auto pos = [&](int copy, int n) { return copy * len + n + sd.top; };
  for (int c = 0; c < sd.copies; ++c)
    for (int n = -sd.top; n <= sd.top; ++n)
      xi.col(pos(c, n)) = n > 0 ? sd.xi_plus[n][c] : (n < 0 ? sd.xi_minus[-n][c] : sd.xi_plus[0][c]);
  Mat shift = Mat::Zero(len * sd.copies, len * sd.copies);
  for (int c = 0; c < sd.copies; ++c) {
    for (int n = -sd.top + 1; n <= sd.top; ++n) shift(pos(c, n - 1), pos(c, n)) = 1.0;
    shift(pos(c, sd.top), pos(c, -sd.top)) = 1.0;
  }
  const Mat id = Mat::Identity(st.dim(), st.dim());
  sd.u = xi * shift * xi.adjoint() + (id - xi * xi.adjoint());
  Mat comm = st.Q * sd.u - sd.u * st.Q;
  // the wrap column xi_-top -> xi_top is a truncation artifact and is reported apart
  std::vector<int> chain;
  for (int c = 0; c < sd.copies; ++c)
    for (int n = -sd.top + 1; n <= sd.top; ++n) chain.push_back(pos(c, n));
  Mat xc(st.dim(), static_cast<Eigen::Index>(chain.size()));
  for (std::size_t i = 0; i < chain.size(); ++i) xc.col(static_cast<Eigen::Index>(i)) = xi.col(chain[i]);
  sd.commutator_norm = operator_norm(Mat(comm * xc));
  sd.wrap_commutator = std::abs((xi.col(pos(0, sd.top)).adjoint() * comm * xi.col(pos(0, -sd.top)))(0, 0));
  for (int c = 0; c < sd.copies; ++c)
    for (int n = -sd.top + 1; n <= sd.top; ++n) {
      if (n == 0) continue;  // xi_0 -> xi_-1 crosses zero
      const double e = std::abs((xi.col(pos(c, n - 1)).adjoint() * comm * xi.col(pos(c, n)))(0, 0));
      sd.same_sign_commutator = std::max(sd.same_sign_commutator, e);
    }
  sd.index = odd_index(st, sd.u);
  return sd;
}

LadderModel ladder_model(double lambda0, int top, int copies) {
  if (top < 2 || copies < 1) fail(ErrorCode::invalid_argument, "ladder needs top >= 2 and copies >= 1");
  const int len = 2 * top + 1, dim = len * copies;
  TruncatedModule space;
  space.cutoff = HalfInt(top);
  Mat q = Mat::Zero(dim, dim), u = Mat::Zero(dim, dim);
  for (int c = 0; c < copies; ++c)
    for (int n = -top; n <= top; ++n) {
      const int i = c * len + n + top;
      space.level.push_back(HalfInt(std::abs(n)));
      space.label.push_back("xi" + std::to_string(n) + "#" + std::to_string(c));
      const double l = std::sqrt(lambda0 * lambda0 + std::abs(n));
      q(i, i) = n < 0 ? -l : l;
      if (n > -top) u(i - 1, i) = 1.0;
    }
  for (int c = 0; c < copies; ++c) u(c * len + len - 1, c * len) = 1.0;
  // levels must be nondecreasing along the basis for the module conventions
  std::vector<int> order(dim);
  for (int i = 0; i < dim; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return space.level[a] < space.level[b]; });
  TruncatedModule sorted;
  sorted.cutoff = space.cutoff;
  Mat perm = Mat::Zero(dim, dim);
  for (int k = 0; k < dim; ++k) {
    perm(order[k], k) = 1.0;
    sorted.level.push_back(space.level[order[k]]);
    sorted.label.push_back(space.label[order[k]]);
  }
  LadderModel lm{make_triple(sorted, perm.adjoint() * q * perm, std::nullopt, Rational(0), Rational(0)),
                 perm.adjoint() * u * perm};
  return lm;
}

cplx jlo_component(const SpectralTripleData& st, const std::vector<Mat>& a, JloOptions opts) {
  JloEvaluator ev(st.Q, st.gamma, opts);
  return ev.tau(a);
}

PairingSeries even_pairing(const SpectralTripleData& st, const Mat& p, int k_max, double stop, JloOptions opts) {
  require_graded(st, "even pairing");
  const int n = st.dim();
  if ((p * p - p).norm() > 1e-8 || hermiticity_defect(p) > 1e-8)
    fail(ErrorCode::invalid_argument, "even pairing needs a Hermitian idempotent");
  const Mat g = st.grading();
  if ((p * g - g * p).norm() > 1e-8) fail(ErrorCode::invalid_argument, "projection is not Gamma-even");
  JloEvaluator ev(st.Q, st.gamma, with_degree(opts, 2 * k_max));
  const Mat pe = ev.to_eigen(p);
  const Mat gam = ev.to_eigen(g);
  const Mat b = ev.commutator_eigen(pe);
  const Mat a0 = gam * (pe - 0.5 * Mat::Identity(n, n));
  PairingSeries s;
  double sum = 0.0;
  for (int k = 0; k <= k_max; ++k) {
    cplx tau = k == 0 ? ev.tau_eigen(gam * pe, {}) : ev.tau_eigen(a0, std::vector<Mat>(2 * k, b));
    const double coef = k == 0 ? 1.0 : ((k % 2) ? -1.0 : 1.0) * factorial(2 * k) / factorial(k);
    const double term = coef * tau.real();
    s.imag = std::max(s.imag, std::abs(coef * tau.imag()));
    s.terms.push_back(term);
    sum += term;
    s.partial.push_back(sum);
    s.last_term = std::abs(term);
    if (k > 0 && stop > 0 && s.last_term < stop) break;
  }
  s.value = sum;
  return s;
}

PairingSeries odd_pairing(const SpectralTripleData& st, const Mat& u, int k_max, OddOrder order, double stop,
                          JloOptions opts) {
  const int n = st.dim();
  if ((u.adjoint() * u - Mat::Identity(n, n)).norm() > 1e-9 * std::sqrt(double(n)))
    fail(ErrorCode::invalid_argument, "odd pairing needs a unitary");
  JloEvaluator ev(st.Q, std::nullopt, with_degree(opts, 2 * k_max + 1));
  const Mat ue = ev.to_eigen(u);
  const Mat ui = ue.adjoint();
  const Mat& x0 = order == OddOrder::u_first ? ue : ui;
  const Mat& x1 = order == OddOrder::u_first ? ui : ue;
  const Mat b0 = ev.commutator_eigen(x0), b1 = ev.commutator_eigen(x1);
  PairingSeries s;
  double sum = 0.0;
  const double norm = 1.0 / std::sqrt(std::numbers::pi);
  for (int k = 0; k <= k_max; ++k) {
    std::vector<Mat> bs;
    for (int i = 1; i <= 2 * k + 1; ++i) bs.push_back(i % 2 ? b1 : b0);
    const cplx tau = ev.tau_eigen(x0, bs);
    const double coef = norm * ((k % 2) ? -1.0 : 1.0) * factorial(k);
    const double term = coef * tau.real();
    s.imag = std::max(s.imag, std::abs(coef * tau.imag()));
    s.terms.push_back(term);
    sum += term;
    s.partial.push_back(sum);
    s.last_term = std::abs(term);
    if (stop > 0 && s.last_term < stop && k > 0) break;
  }
  s.value = sum;
  return s;
}

std::vector<EntirenessRow> entireness_report(const SpectralTripleData& st, const std::vector<Mat>& family, int n_max,
                                             JloOptions opts) {
  JloEvaluator ev(st.Q, st.gamma, with_degree(opts, n_max));
  std::vector<Mat> ae, be;
  for (const auto& a : family) {
    const double nrm = operator_norm(a);
    const Mat x = nrm > 0 ? Mat(a / nrm) : a;
    ae.push_back(ev.to_eigen(x));
    be.push_back(ev.commutator_eigen(ae.back()));
  }
  const Mat gam = st.gamma ? ev.to_eigen(st.grading()) : Mat::Identity(st.dim(), st.dim());
  std::vector<EntirenessRow> rows;
  for (int n = 1; n <= n_max; ++n) {
    EntirenessRow r;
    r.n = n;
    for (std::size_t j = 0; j < ae.size(); ++j)
      r.max_tau = std::max(r.max_tau, std::abs(ev.tau_eigen(gam * ae[j], std::vector<Mat>(n, be[j]))));
    r.growth = std::pow(std::sqrt(factorial(n)) * r.max_tau, 1.0 / n);
    rows.push_back(r);
  }
  return rows;
}

}  // namespace svirlab
