#include "svirlab/svir_module.hpp"

#include "svirlab/ncg_pairing.hpp"

#include <cmath>

namespace svirlab {

using pbw::Bracket;
using pbw::Gen;

Bracket SuperVirasoroAlgebra::bracket(Gen x, Gen y) const {
  Bracket b;
  const int tm = x.twice_mode + y.twice_mode;
  const Rational m = Rational(x.twice_mode, 2), n = Rational(y.twice_mode, 2);
  if (x.type == 0 && y.type == 0) {
    if (m != n) b.terms.push_back({m - n, Gen{0, tm}});
    if (tm == 0) b.central = c_ / 12 * (m * m * m - m);
  } else if (x.type == 0 && y.type == 1) {
    Rational k = m / 2 - n;
    if (k != 0) b.terms.push_back({k, Gen{1, tm}});
  } else if (x.type == 1 && y.type == 0) {
    Rational k = -(n / 2 - m);
    if (k != 0) b.terms.push_back({k, Gen{1, tm}});
  } else {
    b.terms.push_back({Rational(2), Gen{0, tm}});
    if (tm == 0) b.central = c_ / 3 * (m * m - Rational(1, 4));
  }
  return b;
}

bool AbstractSvirModule::exact_ranks_agree() const {
  const auto& er = engine->exact_ranks();
  const auto& sp = engine->spectra();
  if (er.size() != sp.size()) return false;
  for (std::size_t i = 0; i < er.size(); ++i)
    if (er[i] != sp[i].rank) return false;
  return true;
}

AbstractSvirModule build_svir_module(const Rational& c, const Rational& h, Sector sector, HalfInt cutoff,
                                     SvirModuleOptions opts) {
  if (c <= 0) fail(ErrorCode::invalid_argument, "central charge must be positive");
  if (h < 0) fail(ErrorCode::invalid_argument, "lowest energy must be nonnegative");
  cutoff = floor_cutoff(sector, cutoff);
  if (cutoff < HalfInt(0) || cutoff > opts.max_cutoff)
    fail(ErrorCode::budget, "cutoff " + cutoff.str() + " outside [0, " + opts.max_cutoff.str() + "]");

  pbw::TopSpace top;
  if (sector == Sector::NS) {
    top.zero_modes[0] = {{h}};
  } else {
    const Rational gap = h - c / 24;
    if (gap < 0) fail(ErrorCode::numerical, "non-unitary: h < c/24 in the Ramond sector");
    top.dim = 2;
    top.gram = {{Rational(1), Rational(0)}, {Rational(0), gap}};
    top.parity = {0, 1};
    top.zero_modes[0] = {{h, Rational(0)}, {Rational(0), h}};
    // G_0 v = w, G_0 w = (h - c/24) v
    top.zero_modes[1] = {{Rational(0), gap}, {Rational(1), Rational(0)}};
  }

  AbstractSvirModule m;
  m.c = c;
  m.h = h;
  m.sector = sector;
  m.cutoff = cutoff;
  pbw::EngineOptions eo;
  eo.exact_rank_check = opts.exact_rank_check;
  m.engine = std::make_shared<pbw::Engine>(std::make_shared<SuperVirasoroAlgebra>(c, sector), top, cutoff, h, eo);

  SvirGenerators& g = m.gens;
  g.host = m.module();
  g.sector = sector;
  g.c = c;
  g.h = h;
  if (g.host.graded()) g.grading = g.host.grading();
  const int n_int = cutoff.twice() / 2;
  for (int k = -n_int; k <= n_int; ++k) g.L[k] = m.engine->generator({0, 2 * k});
  for (int t = -cutoff.twice(); t <= cutoff.twice(); ++t)
    if (on_grid(sector, HalfInt::from_twice(t))) g.G[t] = m.engine->generator({1, t});
  g.measured_c = measure_central_charge(g);
  return m;
}

IndexResult ramond_ground_index(const AbstractSvirModule& m, double tol) {
  if (m.sector != Sector::R) fail(ErrorCode::unsupported, "Ramond ground index needs the R sector");
  SpectralTripleData st = make_triple(m.gens);
  GradedIndex gi = graded_index(st, std::nullopt, tol);
  return {gi.index, gi.ker_plus, gi.ker_minus, gi.gap};
}

}  // namespace svirlab
