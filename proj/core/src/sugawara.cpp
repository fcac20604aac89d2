#include "svirlab/sugawara.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace svirlab {

namespace {

Rational central_charge_q(int d, const Rational& l, int h_vee) {
  if (l + h_vee <= 0) fail(ErrorCode::invalid_argument, "l + h_vee must be positive");
  return Rational(d, 2) + Rational(d) * l / (l + h_vee);
}

// largest mode applied first; returns the ordered operator list and the permutation sign
template <std::size_t K>
int sort_modes(std::array<std::pair<HalfInt, const SpMat*>, K>& f) {
  int sign = 1;
  for (std::size_t i = 1; i < K; ++i)
    for (std::size_t j = i; j > 0 && f[j - 1].first > f[j].first; --j) {
      std::swap(f[j - 1], f[j]);
      sign = -sign;
    }
  return sign;
}

std::vector<int> safe_columns(const TruncatedModule& m, HalfInt a, HalfInt b) {
  return m.states_up_to(m.cutoff - abs(a) - abs(b));
}

}  // namespace

const SpMat& SvirGenerators::l(int n) const {
  auto it = L.find(n);
  if (it == L.end()) fail(ErrorCode::invalid_argument, "L_" + std::to_string(n) + " not available");
  return it->second;
}

const SpMat& SvirGenerators::g(HalfInt r) const {
  auto it = G.find(r.twice());
  if (it == G.end()) fail(ErrorCode::invalid_argument, "G_" + r.str() + " not available");
  return it->second;
}

const SpMat& FieldContent::fermion(int a, HalfInt r) const {
  auto it = F.find({a, r.twice()});
  if (it == F.end()) fail(ErrorCode::invalid_argument, "F^" + std::to_string(a + 1) + "_" + r.str() + " not available");
  return it->second;
}

SpMat FieldContent::smeared_fermion(const TrigPoly& f) const {
  SpMat s(diagonal.host_dim, diagonal.host_dim);
  for (const auto& [k, c] : f.coeff)
    if (c != 0.0) s += c * fermion(k.first, k.second);
  return s;
}

Rational central_charge(int d, int l, int h_vee) {
  if (l < 0) fail(ErrorCode::invalid_argument, "level must be nonnegative");
  return central_charge_q(d, Rational(l), h_vee);
}

SugawaraModel build_svir_generators(const TruncatedModule& bosonic_host, const CurrentSet& bosonic,
                                    const FockSpace& fermions, const SimpleLieAlgebra& g, HalfInt cutoff) {
  const int d = g.d;
  const Sector sec = fermions.sector().kind;
  if (fermions.d() != d || bosonic.d != d) fail(ErrorCode::invalid_argument, "dimension mismatch in Sugawara input");
  cutoff = floor_cutoff(sec, cutoff);
  if (cutoff > fermions.cutoff() || cutoff > bosonic_host.cutoff)
    fail(ErrorCode::invalid_argument, "factor cutoffs below the requested cutoff");
  const int M = std::min(cutoff.twice() / 2, bosonic.cutoff);
  if (sec == Sector::R && M < 0) fail(ErrorCode::invalid_argument, "cutoff too small to form G_0");

  SugawaraModel model;
  model.tp = std::make_shared<TensorProduct>(bosonic_host, fermions.module(), cutoff);
  const TensorProduct& tp = *model.tp;
  const int n = tp.module().dim();

  FieldContent& fc = model.fields;
  fc.d = d;
  fc.sector = sec;
  fc.khat = bosonic.level + g.h_vee;
  if (fc.khat <= 0) fail(ErrorCode::invalid_argument, "l + h_vee must be positive");
  for (int a = 0; a < d; ++a)
    for (int t = -cutoff.twice(); t <= cutoff.twice(); ++t) {
      HalfInt r = HalfInt::from_twice(t);
      if (on_grid(sec, r)) fc.F[{a, t}] = tp.right(fermions.mode(a, r));
    }
  CurrentSet none;
  CurrentSet bos_trunc = bosonic;
  for (auto it = bos_trunc.J.begin(); it != bos_trunc.J.end();)
    it = std::abs(it->first.second) > M ? bos_trunc.J.erase(it) : std::next(it);
  bos_trunc.cutoff = M;
  fc.bosonic = diagonal_currents(bos_trunc, none, tp);
  fc.bosonic.level = bosonic.level;
  fc.diagonal = diagonal_currents(bos_trunc, fermionic_currents(fermions, g), tp);

  SvirGenerators& gens = model.gens;
  gens.host = tp.module();
  gens.sector = sec;
  gens.c = central_charge_q(d, bosonic.level, g.h_vee);
  gens.h = tp.module().lowest_energy;
  if (tp.module().graded()) gens.grading = tp.module().grading();

  const double khat = to_double(fc.khat);
  const double inv_sqrt_k = 1.0 / std::sqrt(khat);
  auto Jb = [&](int a, int m) -> const SpMat& { return fc.bosonic.at(a, m); };
  auto Fm = [&](int a, HalfInt r) -> const SpMat& { return fc.fermion(a, r); };
  const HalfInt N = cutoff;

  for (int k = -M; k <= M; ++k) {
    SpMat acc(n, n);
    for (int a = 0; a < d; ++a)
      for (int m = -M; m <= M; ++m) {
        const int p = k - m;
        if (std::abs(p) > M) continue;
        const int lo = std::min(m, p), hi = std::max(m, p);
        acc += (0.5 / khat) * SpMat(Jb(a, lo) * Jb(a, hi));
      }
    for (int a = 0; a < d; ++a)
      for (int t = -N.twice(); t <= N.twice(); ++t) {
        const HalfInt r = HalfInt::from_twice(t);
        const HalfInt x = HalfInt(k) - r;
        if (!on_grid(sec, r) || abs(x) > N || x == r) continue;
        const double coef = 0.5 * (r.value() - 0.5 * k);
        if (x < r)
          acc += coef * SpMat(Fm(a, x) * Fm(a, r));
        else
          acc -= coef * SpMat(Fm(a, r) * Fm(a, x));
      }
    if (k == 0 && sec == Sector::R) acc += (d / 16.0) * sparse_identity(n);
    acc.prune(cplx(0.0), 1e-14);
    gens.L[k] = acc;
  }

  for (int t = -N.twice(); t <= N.twice(); ++t) {
    const HalfInt r = HalfInt::from_twice(t);
    if (!on_grid(sec, r)) continue;
    SpMat acc(n, n);
    for (int a = 0; a < d; ++a)
      for (int m = -M; m <= M; ++m) {
        const HalfInt x = r - HalfInt(m);
        if (abs(x) > N) continue;
        // the two factors act on different tensor legs and commute
        if (HalfInt(m) > x)
          acc += SpMat(Fm(a, x) * Jb(a, m));
        else
          acc += SpMat(Jb(a, m) * Fm(a, x));
      }
    SpMat cubic(n, n);
    for (int a = 0; a < d; ++a)
      for (int b = a + 1; b < d; ++b)
        for (int c = b + 1; c < d; ++c) {
          const double f = g.f(a, b, c);
          if (f == 0.0) continue;
          for (int tx = -N.twice(); tx <= N.twice(); ++tx)
            for (int ty = -N.twice(); ty <= N.twice(); ++ty) {
              const HalfInt x = HalfInt::from_twice(tx), y = HalfInt::from_twice(ty), z = r - x - y;
              if (!on_grid(sec, x) || !on_grid(sec, y) || abs(z) > N) continue;
              std::array<std::pair<HalfInt, const SpMat*>, 3> ops{
                  {{x, &Fm(a, x)}, {y, &Fm(b, y)}, {z, &Fm(c, z)}}};
              const int s = sort_modes(ops);
              cubic += (s * f) * SpMat(*ops[0].second * SpMat(*ops[1].second * *ops[2].second));
            }
        }
    // -(i/6) sum_{abc} f_abc F^a F^b F^c = -i sum_{a<b<c} f_abc (...)
    acc += cplx(0.0, -1.0) * cubic;
    acc *= inv_sqrt_k;
    acc.prune(cplx(0.0), 1e-14);
    gens.G[t] = acc;
  }
  gens.measured_c = measure_central_charge(gens);
  return model;
}

double measure_central_charge(const SvirGenerators& gens) {
  const HalfInt r = gens.sector == Sector::NS ? HalfInt::from_twice(3) : HalfInt(1);
  if (!gens.has_g(r) || gens.cutoff() < r + r) return std::nan("");
  const SpMat ac = anticommutator(gens.g(r), gens.g(-r));
  std::vector<int> ground = gens.host.states_at(HalfInt(0));
  if (ground.empty()) return std::nan("");
  double s = 0;
  const double w = r.value() * r.value() - 0.25;
  const double h = to_double(gens.h);
  for (int i : ground) s += (ac.coeff(i, i).real() - 2.0 * h) * 3.0 / w;
  return s / ground.size();
}

SpMat supercharge(const SvirGenerators& gens) {
  if (gens.sector != Sector::R) fail(ErrorCode::unsupported, "the supercharge G_0 exists only in the Ramond sector");
  return gens.g(HalfInt(0));
}

std::vector<RelationResidual> verify_svir_relations(const SvirGenerators& gens, const std::vector<SvirSample>& samples) {
  std::vector<RelationResidual> out;
  const double c = to_double(gens.c);
  const int n = gens.dim();
  for (const auto& s : samples) {
    RelationResidual r;
    r.safe_bound = gens.cutoff() - abs(s.a) - abs(s.b);
    std::vector<int> safe = safe_columns(gens.host, s.a, s.b);
    SpMat res;
    switch (s.kind) {
      case SvirSample::LL: {
        const int m = s.a.twice() / 2, k = s.b.twice() / 2;
        r.id = "[L_" + s.a.str() + ",L_" + s.b.str() + "]";
        res = commutator(gens.l(m), gens.l(k)) - double(m - k) * gens.l(m + k);
        if (m + k == 0) res -= (c / 12.0) * double(m * m * m - m) * sparse_identity(n);
        break;
      }
      case SvirSample::LG: {
        const int m = s.a.twice() / 2;
        r.id = "[L_" + s.a.str() + ",G_" + s.b.str() + "]";
        res = commutator(gens.l(m), gens.g(s.b)) - (m / 2.0 - s.b.value()) * gens.g(s.a + s.b);
        break;
      }
      case SvirSample::GG: {
        r.id = "[G_" + s.a.str() + ",G_" + s.b.str() + "]+";
        const HalfInt sum = s.a + s.b;
        res = anticommutator(gens.g(s.a), gens.g(s.b)) - 2.0 * gens.l(sum.twice() / 2);
        if (sum == HalfInt(0)) res -= (c / 3.0) * (s.a.value() * s.a.value() - 0.25) * sparse_identity(n);
        break;
      }
    }
    r.residual = safe.empty() ? 0.0 : frobenius_columns(res, safe);
    out.push_back(r);
  }
  return out;
}

std::vector<SvirSample> default_svir_samples(const SvirGenerators& gens, HalfInt max_mode) {
  std::vector<SvirSample> out;
  const HalfInt N = gens.cutoff();
  std::vector<HalfInt> ints, odds;
  for (int t = -max_mode.twice(); t <= max_mode.twice(); ++t) {
    HalfInt x = HalfInt::from_twice(t);
    if (x.is_integer() && gens.has_l(t / 2)) ints.push_back(x);
    if (on_grid(gens.sector, x) && gens.has_g(x)) odds.push_back(x);
  }
  auto ok = [&](HalfInt a, HalfInt b) { return abs(a) + abs(b) <= N; };
  for (auto a : ints)
    for (auto b : ints)
      if (ok(a, b) && gens.has_l((a + b).twice() / 2)) out.push_back({SvirSample::LL, a, b});
  for (auto a : ints)
    for (auto b : odds)
      if (ok(a, b) && gens.has_g(a + b)) out.push_back({SvirSample::LG, a, b});
  for (auto a : odds)
    for (auto b : odds)
      if (ok(a, b) && (a + b).is_integer() && gens.has_l((a + b).twice() / 2)) out.push_back({SvirSample::GG, a, b});
  return out;
}

double max_residual(const std::vector<RelationResidual>& r) {
  double m = 0;
  for (const auto& x : r) m = std::max(m, x.residual);
  return m;
}

RelationResidual supercharge_identity(const SvirGenerators& gens) {
  const SpMat q = supercharge(gens);
  SpMat res = SpMat(q * q) - gens.l(0) + (to_double(gens.c) / 24.0) * sparse_identity(gens.dim());
  RelationResidual r{"Q^2-L_0+c/24", 0.0, gens.cutoff()};
  r.residual = frobenius_columns(res, gens.host.states_up_to(gens.cutoff()));
  return r;
}

Mat weyl_exponential(const Mat& x, double herm_tol) {
  const double defect = hermiticity_defect(x);
  if (defect > herm_tol) fail(ErrorCode::invalid_argument, "weyl_exponential needs a Hermitian argument (defect " +
                                                               std::to_string(defect) + ")");
  return expi_hermitian(x);
}

std::vector<RelationResidual> susy_relation_report(const SugawaraModel& model, const TrigPoly& f) {
  const SvirGenerators& gens = model.gens;
  const FieldContent& fc = model.fields;
  const SpMat Q = supercharge(gens);
  const double sk = std::sqrt(to_double(fc.khat));
  const HalfInt reach = f.max_abs_mode();
  const std::vector<int> safe = gens.host.states_up_to(gens.cutoff() - reach);
  const SpMat Jf = fc.smeared_current(f);
  const SpMat Ff = fc.smeared_fermion(f);
  const SpMat Fd = fc.smeared_fermion(f.derivative());

  std::vector<RelationResidual> out;
  SpMat r1 = anticommutator(Q, Ff) - (1.0 / sk) * Jf;
  out.push_back({"[Q,F(f)]+ - J(f)/sqrt(khat)", safe.empty() ? 0.0 : frobenius_columns(r1, safe),
                 gens.cutoff() - reach});
  SpMat r2 = commutator(Q, Jf) - cplx(0.0, sk) * Fd;
  out.push_back({"[Q,J(f)] - i sqrt(khat) F(f')", safe.empty() ? 0.0 : frobenius_columns(r2, safe),
                 gens.cutoff() - reach});

  const Mat E = weyl_exponential(Mat(Jf));
  const Mat Qd(Q), Fdd(Fd);
  const Mat comm = Qd * E - E * Qd;
  const Mat rhs = sk * Fdd * E;
  const std::vector<int> low = gens.host.states_at(HalfInt(0));
  out.push_back({"[Q,e^{iJ(f)}] - sqrt(khat) F(f') e^{iJ(f)}", frobenius_columns(Mat(comm - rhs), low), HalfInt(0)});
  out.push_back({"[Q,e^{iJ(f)}] + sqrt(khat) F(f') e^{iJ(f)}", frobenius_columns(Mat(comm + rhs), low), HalfInt(0)});
  return out;
}

double weyl_tail(const SugawaraModel& model, const TrigPoly& f) {
  const SvirGenerators& gens = model.gens;
  const Mat E = weyl_exponential(Mat(model.fields.smeared_current(f)));
  const std::vector<int> low = gens.host.states_at(HalfInt(0));
  std::vector<int> top;
  for (int i = 0; i < gens.dim(); ++i)
    if (gens.host.level[i] > gens.cutoff() - HalfInt(1)) top.push_back(i);
  if (top.empty()) return 0.0;
  return submatrix(E, top, low).norm();
}

double leb_ratio(const SugawaraModel& model, const TrigPoly& f) {
  const SvirGenerators& gens = model.gens;
  SpMat G(gens.dim(), gens.dim());
  for (const auto& [k, c] : f.coeff) {
    if (k.first != 0) fail(ErrorCode::invalid_argument, "leb_ratio takes scalar smearing functions (colour 0)");
    if (c != 0.0) G += c * gens.g(k.second);
  }
  const std::vector<int> safe = gens.host.states_up_to(gens.cutoff() - f.max_abs_mode());
  if (safe.empty()) return 0.0;
  Mat cols = columns(Mat(G), safe);
  const double h = to_double(gens.h);
  for (std::size_t j = 0; j < safe.size(); ++j) cols.col(j) /= std::sqrt(1.0 + h + gens.host.level[safe[j]].value());
  return operator_norm(cols);
}

}  // namespace svirlab
