#include "svirlab/affine_module.hpp"

#include <cmath>
#include <ostream>

namespace svirlab {

using pbw::Bracket;
using pbw::Gen;
using pbw::Term;

namespace {

enum Su2Type { T3 = 0, TP = 1, TM = 2 };

SpMat zero_like(int n) { return SpMat(n, n); }

}  // namespace

const SpMat& CurrentSet::at(int a, int n) const {
  auto it = J.find({a, n});
  if (it == J.end())
    fail(ErrorCode::invalid_argument, "current J^" + std::to_string(a + 1) + "_" + std::to_string(n) + " not available");
  return it->second;
}

Bracket AffineSu2Algebra::bracket(Gen x, Gen y) const {
  Bracket b;
  const int tm = x.twice_mode + y.twice_mode;
  const int m = x.twice_mode / 2;
  const bool central = tm == 0;
  auto add = [&](int coef, int type) { b.terms.push_back({Rational(coef), Gen{type, tm}}); };
  switch (x.type * 3 + y.type) {
    case T3 * 3 + T3:
      if (central) b.central = Rational(level_ * m, 2);
      break;
    case T3 * 3 + TP: add(1, TP); break;
    case T3 * 3 + TM: add(-1, TM); break;
    case TP * 3 + T3: add(-1, TP); break;
    case TM * 3 + T3: add(1, TM); break;
    case TP * 3 + TM:
      add(2, T3);
      if (central) b.central = Rational(level_ * m);
      break;
    case TM * 3 + TP:
      add(-2, T3);
      if (central) b.central = Rational(level_ * m);
      break;
    default: break;  // [T+,T+] = [T-,T-] = 0
  }
  return b;
}

Term AffineSu2Algebra::adjoint(Gen x) const {
  const int t = x.type == T3 ? T3 : (x.type == TP ? TM : TP);
  return {Rational(1), Gen{t, -x.twice_mode}};
}

std::string AffineSu2Algebra::type_name(int type) const {
  static const char* names[] = {"T3", "T+", "T-"};
  return names[type];
}

Bracket HeisenbergAlgebra::bracket(Gen x, Gen y) const {
  Bracket b;
  if (x.type == y.type && x.twice_mode + y.twice_mode == 0) b.central = level_ * (x.twice_mode / 2);
  return b;
}

Term HeisenbergAlgebra::adjoint(Gen x) const { return {Rational(1), Gen{x.type, -x.twice_mode}}; }

std::string HeisenbergAlgebra::type_name(int type) const { return "J" + std::to_string(type + 1); }

void AffineModule::write_dimensions_csv(std::ostream& os) const {
  os << "level,dimension\n";
  for (const auto& [lvl, n] : graded_dimensions()) os << lvl.str() << "," << n << "\n";
}

AffineModule build_pbw_module(const SimpleLieAlgebra& g, int level, WeightLabel weight, int cutoff,
                              AffineOptions opts) {
  if (g.name != "su2") fail(ErrorCode::unsupported, "PBW construction is implemented for su2 only");
  if (weight.level != level) fail(ErrorCode::invalid_argument, "weight level differs from module level");
  const Rational h = conformal_dimension(weight, g);
  if (cutoff < 0 || cutoff > opts.max_cutoff)
    fail(ErrorCode::budget, "cutoff " + std::to_string(cutoff) + " outside [0, " + std::to_string(opts.max_cutoff) + "]");

  // spin-j top: v_k = (T-_0)^k v_0
  const int n = weight.twice_spin + 1;
  pbw::TopSpace top;
  top.dim = n;
  top.gram.assign(n, std::vector<Rational>(n, Rational(0)));
  top.parity.assign(n, 0);
  Rational norm = 1;
  for (int k = 0; k < n; ++k) {
    if (k > 0) norm *= Rational(k * (weight.twice_spin - k + 1));
    top.gram[k][k] = norm;
  }
  pbw::RatMatrix t3(n, std::vector<Rational>(n)), tp = t3, tm = t3;
  for (int k = 0; k < n; ++k) {
    t3[k][k] = Rational(weight.twice_spin - 2 * k, 2);
    if (k + 1 < n) tm[k + 1][k] = 1;
    if (k > 0) tp[k - 1][k] = Rational(k * (weight.twice_spin - k + 1));
  }
  top.zero_modes = {{T3, t3}, {TP, tp}, {TM, tm}};

  AffineModule m;
  m.algebra = g;
  m.level = level;
  m.weight = weight;
  m.cutoff = cutoff;
  pbw::EngineOptions eo;
  eo.exact_rank_check = opts.exact_rank_check;
  m.engine = std::make_shared<pbw::Engine>(std::make_shared<AffineSu2Algebra>(level), top, HalfInt(cutoff), h, eo);

  CurrentSet& cs = m.currents;
  cs.d = 3;
  cs.cutoff = cutoff;
  cs.host_dim = m.module().dim();
  cs.level = level;
  cs.lowest_energy = h;
  const double r2 = std::sqrt(2.0);
  for (int k = -cutoff; k <= cutoff; ++k) {
    SpMat a = m.engine->generator({T3, 2 * k});
    SpMat p = m.engine->generator({TP, 2 * k});
    SpMat q = m.engine->generator({TM, 2 * k});
    cs.J[{0, k}] = (p + q) / r2;
    cs.J[{1, k}] = (p - q) * cplx(0.0, -1.0 / r2);
    cs.J[{2, k}] = a * r2;
  }
  std::vector<int> top_states = m.module().states_at(HalfInt(0));
  cs.measured_level = cutoff >= 1 ? measure_level(cs, top_states) : to_double(cs.level);
  return m;
}

AffineModule build_heisenberg_module(int d, Rational level, std::vector<Rational> charge, int cutoff,
                                     AffineOptions opts) {
  if (d < 1 || static_cast<int>(charge.size()) != d) fail(ErrorCode::invalid_argument, "charge vector must have d entries");
  if (level <= 0) fail(ErrorCode::invalid_argument, "Heisenberg level must be positive");
  if (cutoff < 0 || cutoff > opts.max_cutoff)
    fail(ErrorCode::budget, "cutoff " + std::to_string(cutoff) + " outside [0, " + std::to_string(opts.max_cutoff) + "]");
  pbw::TopSpace top;
  Rational mu2 = 0;
  for (int a = 0; a < d; ++a) {
    top.zero_modes[a] = {{charge[a]}};
    mu2 += charge[a] * charge[a];
  }
  AffineModule m;
  m.algebra = build_abelian(d);
  m.charge = charge;
  m.cutoff = cutoff;
  pbw::EngineOptions eo;
  eo.exact_rank_check = opts.exact_rank_check;
  const Rational h = mu2 / (2 * level);
  m.engine = std::make_shared<pbw::Engine>(std::make_shared<HeisenbergAlgebra>(d, level), top, HalfInt(cutoff), h, eo);
  CurrentSet& cs = m.currents;
  cs.d = d;
  cs.cutoff = cutoff;
  cs.host_dim = m.module().dim();
  cs.level = level;
  cs.lowest_energy = h;
  for (int a = 0; a < d; ++a)
    for (int k = -cutoff; k <= cutoff; ++k) cs.J[{a, k}] = m.engine->generator({a, 2 * k});
  cs.measured_level = cutoff >= 1 ? measure_level(cs, {0}) : to_double(level);
  return m;
}

int ordered_pair_sign(HalfInt x, HalfInt y) { return x > y ? -1 : 1; }

CurrentSet fermionic_currents(const FockSpace& space, const SimpleLieAlgebra& g) {
  if (space.d() != g.d)
    fail(ErrorCode::invalid_argument, "fermion space has d=" + std::to_string(space.d()) + " but algebra has d=" +
                                          std::to_string(g.d));
  const Sector sec = space.sector().kind;
  const HalfInt N = space.cutoff();
  const int n_int = N.twice() / 2;
  const int dim = space.dim();

  std::map<std::pair<int, int>, SpMat> F;  // (colour, twice r)
  for (int a = 0; a < g.d; ++a)
    for (int t = -N.twice(); t <= N.twice(); ++t)
      if (on_grid(sec, HalfInt::from_twice(t))) F[{a, t}] = space.mode(a, HalfInt::from_twice(t));

  CurrentSet cs;
  cs.d = g.d;
  cs.cutoff = n_int;
  cs.host_dim = dim;
  cs.level = g.h_vee;
  cs.lowest_energy = space.module().lowest_energy;
  for (int a = 0; a < g.d; ++a)
    for (int n = -n_int; n <= n_int; ++n) {
      SpMat acc = zero_like(dim);
      for (int b = 0; b < g.d; ++b)
        for (int c = 0; c < g.d; ++c) {
          const double f = g.f(a, b, c);
          if (f == 0.0) continue;
          for (int tr = -N.twice(); tr <= N.twice(); ++tr) {
            const HalfInt r = HalfInt::from_twice(tr);
            const HalfInt x = HalfInt(n) - r;
            if (!on_grid(sec, r) || abs(x) > N) continue;
            const SpMat& fx = F.at({b, x.twice()});
            const SpMat& fy = F.at({c, tr});
            // b != c, so the two factors anticommute exactly
            if (ordered_pair_sign(x, r) < 0)
              acc -= f * SpMat(fy * fx);
            else
              acc += f * SpMat(fx * fy);
          }
        }
      acc *= cplx(0.0, -0.5);
      acc.prune(cplx(0.0), 1e-15);
      cs.J[{a, n}] = acc;
    }
  std::vector<int> ground = space.module().states_at(HalfInt(0));
  cs.measured_level = n_int >= 1 ? measure_level(cs, ground) : to_double(cs.level);
  return cs;
}

double measure_level(const CurrentSet& cs, const std::vector<int>& states) {
  if (cs.cutoff < 1 || states.empty()) fail(ErrorCode::invalid_argument, "level measurement needs cutoff >= 1");
  double s = 0;
  int count = 0;
  for (int a = 0; a < cs.d; ++a) {
    SpMat c = commutator(cs.at(a, 1), cs.at(a, -1));
    for (int i : states) {
      s += c.coeff(i, i).real();
      ++count;
    }
  }
  return s / count;
}

CurrentSet diagonal_currents(const CurrentSet& left, const CurrentSet& right, const TensorProduct& tp) {
  const bool left_zero = left.J.empty(), right_zero = right.J.empty();
  if (!left_zero && !right_zero && left.d != right.d)
    fail(ErrorCode::invalid_argument, "diagonal currents need equal dimensions");
  CurrentSet out;
  out.d = left_zero ? right.d : left.d;
  out.cutoff = static_cast<int>(tp.module().cutoff.twice() / 2);
  if (!left_zero && !right_zero) out.cutoff = std::min({out.cutoff, left.cutoff, right.cutoff});
  else out.cutoff = std::min(out.cutoff, left_zero ? right.cutoff : left.cutoff);
  out.host_dim = tp.module().dim();
  out.level = (left_zero ? Rational(0) : left.level) + (right_zero ? Rational(0) : right.level);
  out.lowest_energy = tp.module().lowest_energy;
  for (int a = 0; a < out.d; ++a)
    for (int n = -out.cutoff; n <= out.cutoff; ++n) {
      SpMat m(out.host_dim, out.host_dim);
      if (!left_zero) m += tp.left(left.at(a, n));
      if (!right_zero) m += tp.right(right.at(a, n));
      out.J[{a, n}] = m;
    }
  std::vector<int> ground = tp.module().states_at(HalfInt(0));
  out.measured_level = out.cutoff >= 1 && !ground.empty() ? measure_level(out, ground) : to_double(out.level);
  return out;
}

SpMat smear_current(const CurrentSet& cs, const TrigPoly& f) {
  SpMat s(cs.host_dim, cs.host_dim);
  for (const auto& [k, c] : f.coeff) {
    if (c == 0.0) continue;
    if (!k.second.is_integer()) fail(ErrorCode::invalid_argument, "current modes must be integers");
    if (abs(k.second) > HalfInt(cs.cutoff)) fail(ErrorCode::invalid_argument, "smearing modes exceed the cutoff");
    s += c * cs.at(k.first, k.second.twice() / 2);
  }
  return s;
}

double affine_relation_residual(const CurrentSet& cs, const SimpleLieAlgebra& g, const TruncatedModule& host, int a,
                                int m, int b, int n) {
  const HalfInt bound = host.cutoff - HalfInt(std::abs(m)) - HalfInt(std::abs(n));
  std::vector<int> safe = host.states_up_to(bound);
  if (safe.empty()) return 0.0;
  SpMat r = commutator(cs.at(a, m), cs.at(b, n));
  for (int c = 0; c < cs.d; ++c) {
    const double f = g.f(a, b, c);
    if (f != 0.0) r -= cplx(0.0, f) * cs.at(c, m + n);
  }
  if (a == b && m + n == 0) r -= (m * to_double(cs.level)) * sparse_identity(cs.host_dim);
  return frobenius_columns(r, safe);
}

}  // namespace svirlab
