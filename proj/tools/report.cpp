#include "report.hpp"

#include "svirlab/exact_charge.hpp"
#include "svirlab/fermion_fock.hpp"
#include "svirlab/fusion_ring.hpp"
#include "svirlab/models.hpp"
#include "svirlab/ncg_pairing.hpp"
#include "svirlab/svir_module.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <set>

namespace svirlab::cli {

using nlohmann::json;

namespace {

const std::set<std::string> kCommands = {"svir-check", "supercharge", "index", "jlo", "shift", "fusion", "characters"};
const char* kCoset = "su2_4-in-su2_2xsu2_2";

double tol_or(const ExperimentConfig& cfg, double fallback) { return cfg.tol.value_or(fallback); }

CheckResult bound(std::string name, double value, double limit) {
  return {std::move(name), value, nullptr, std::nullopt, std::isfinite(value) && value <= limit};
}

CheckResult near(std::string name, double value, double target, double tol, std::optional<double> gap = {}) {
  return {std::move(name), value, target, gap, std::abs(value - target) <= tol};
}

CheckResult equal_int(std::string name, int value, int target, std::optional<double> gap = {}) {
  return {std::move(name), value, target, gap, value == target};
}

std::optional<double> finite_gap(double g) {
  if (!std::isfinite(g)) return std::nullopt;
  return g;
}

struct Model {
  std::string name;
  std::optional<LoopModel> loop;
  std::optional<AbstractSvirModule> abstract;

  const SvirGenerators& gens() const { return loop ? loop->gens() : abstract->gens; }
};

FermionSector fermion_sector(const ExperimentConfig& cfg, int d) {
  const bool variant = cfg.sector == Sector::R && d % 2 == 1;
  return {cfg.sector, variant ? cfg.variant : ZeroModeVariant::unique};
}

Model build_model(const ExperimentConfig& cfg, HalfInt cutoff) {
  Model m;
  if (cfg.c) {
    m.abstract = build_svir_module(*cfg.c, *cfg.h, cfg.sector, cutoff);
    m.name = "svir(c=" + to_string(*cfg.c) + ",h=" + to_string(*cfg.h) + ")";
    return m;
  }
  if (cfg.group == "su2") {
    if (cfg.realization == "fermionic")
      m.loop = fermionic_pair_model(fermion_sector(cfg, 3), cutoff);
    else
      m.loop = pbw_model(cfg.level, 0, fermion_sector(cfg, 3), cutoff);
  } else {
    m.loop = heisenberg_model(cfg.d, fermion_sector(cfg, cfg.d), cutoff);
  }
  m.name = m.loop->name;
  return m;
}

json rational_json(const Rational& q) { return to_string(q); }

json matrix_json(const Mat& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(m(i, j).real());
    rows.push_back(row);
  }
  return rows;
}

json table_json(const PairingTable& t) {
  return {{"rows", t.rows}, {"cols", t.cols}, {"value", t.value}, {"note", t.note}};
}

// number of +lambda0 eigenvectors of Q on the lowest level, with the distance to the rest of that spectrum
std::pair<int, double> positive_ground(const SpectralTripleData& st) {
  const auto ground = st.space.states_at(HalfInt(0));
  Eigen::SelfAdjointEigenSolver<Mat> es(submatrix(st.Q, ground, ground));
  const double l0 = std::sqrt(std::max(0.0, to_double(st.lw - st.c / 24)));
  int count = 0;
  double gap = INFINITY;
  for (int i = 0; i < es.eigenvalues().size(); ++i) {
    const double e = es.eigenvalues()[i];
    if (std::abs(e - l0) < 1e-8)
      ++count;
    else
      gap = std::min(gap, std::abs(e - l0));
  }
  return {count, gap};
}

// distance from the lowest Q^2 eigenvalue to the next one: the gap protecting p_{0,+}
double level_gap(const SpectralTripleData& st) {
  Eigen::SelfAdjointEigenSolver<Mat> es(st.Q, Eigen::EigenvaluesOnly);
  const RVec q2 = es.eigenvalues().array().square();
  const double lo = q2.minCoeff();
  double gap = INFINITY;
  for (double x : q2)
    if (x - lo > 1e-8) gap = std::min(gap, x - lo);
  return gap;
}

// ind Q_+ on the whole space: lowest-level pairs cancel unless h = c/24, where the even top vector survives alone
int full_index_target(const SpectralTripleData& st) { return st.lw == st.c / 24 ? 1 : 0; }

void run_svir_check(const ExperimentConfig& cfg, Report& r) {
  const Model m = build_model(cfg, cfg.cutoff);
  const auto& g = m.gens();
  const auto res = verify_svir_relations(g, default_svir_samples(g, HalfInt(2)));
  json rows = json::array();
  for (const auto& x : res) rows.push_back({{"relation", x.id}, {"residual", x.residual}, {"safe_bound", x.safe_bound.str()}});
  r.data["model"] = m.name;
  r.data["dimension"] = g.dim();
  r.data["relations"] = rows;
  r.results.push_back(bound("svir_relations_max_residual", max_residual(res), tol_or(cfg, 1e-9)));
  r.results.push_back(near("central_charge_measured", g.measured_c, to_double(g.c), tol_or(cfg, 1e-9)));
  r.data["central_charge_formula"] = rational_json(g.c);
  if (m.loop && cfg.group == "su2" && cfg.level == 2) {
    const auto ec = exact_central_charge_fermionic(build_su2());
    const bool ok = ec.from_g == ec.formula && ec.from_l == ec.formula;
    r.results.push_back({"central_charge_exact", json{{"from_G", rational_json(ec.from_g)}, {"from_L", rational_json(ec.from_l)}},
                         rational_json(ec.formula), std::nullopt, ok});
  }
}

void run_supercharge(const ExperimentConfig& cfg, Report& r) {
  const Model m = build_model(cfg, cfg.cutoff);
  const auto& g = m.gens();
  if (g.sector != Sector::R) throw ConfigError("supercharge needs --sector r");
  const auto id = supercharge_identity(g);
  r.data["model"] = m.name;
  r.data["dimension"] = g.dim();
  r.data["safe_bound"] = id.safe_bound.str();
  r.results.push_back(bound("q_squared_identity", id.residual, tol_or(cfg, 1e-10)));
  const SpectralTripleData st = make_triple(g);
  Eigen::SelfAdjointEigenSolver<Mat> es(st.Q, Eigen::EigenvaluesOnly);
  Series s{"q_spectrum", "i", "lambda_i", {}};
  for (int i = 0; i < es.eigenvalues().size(); ++i) s.points.emplace_back(i, es.eigenvalues()[i]);
  r.series.push_back(std::move(s));
  if (m.abstract) {
    const auto ir = ramond_ground_index(*m.abstract);
    const int target = m.abstract->h == m.abstract->c / 24 ? 1 : 0;
    r.results.push_back(equal_int("index", ir.index, target, finite_gap(ir.gap)));
  } else if (st.graded()) {
    const auto gi = graded_index(st);
    r.results.push_back(equal_int("index", gi.index, full_index_target(st), finite_gap(gi.gap)));
  }
}

void heat_checks(const ExperimentConfig& cfg, const SpectralTripleData& st, int index, Report& r) {
  Series s{"heat_trace", "t", "str_exp_tQ2", {}};
  double dev = 0.0;
  for (double t : {0.5, 1.0, 2.0, 4.0}) {
    const double h = heat_trace(st, t);
    s.points.emplace_back(t, h);
    dev = std::max(dev, std::abs(h - index));
  }
  r.series.push_back(std::move(s));
  r.results.push_back(bound("mckean_singer_max_deviation", dev, tol_or(cfg, 1e-8)));
}

void run_index(const ExperimentConfig& cfg, Report& r) {
  if (!cfg.c) {
    for (int d = 1; d <= 4; ++d) {
      FockSpace f(d, FermionSector{Sector::R, d % 2 ? ZeroModeVariant::plus : ZeroModeVariant::unique}, HalfInt(0));
      r.results.push_back(equal_int("zero_mode_dim_d" + std::to_string(d), f.zero_mode_dim(), 1 << (d / 2)));
      if (d % 2 == 0) {
        const auto& par = *f.module().parity;
        int even = 0;
        for (int i : f.module().states_at(HalfInt(0))) even += par[i] == 1;
        r.results.push_back(equal_int("zero_mode_dim_even_d" + std::to_string(d), even, 1 << (d / 2 - 1)));
      }
    }
  }
  const Model m = build_model(cfg, cfg.cutoff);
  const auto& g = m.gens();
  const SpectralTripleData st = make_triple(g);
  r.data["model"] = m.name;
  r.data["dimension"] = st.dim();
  if (m.abstract) {
    const auto ir = ramond_ground_index(*m.abstract);
    const int target = m.abstract->h == m.abstract->c / 24 ? 1 : 0;
    r.results.push_back(equal_int("ramond_ground_index", ir.index, target, finite_gap(ir.gap)));
    r.data["kernel"] = {{"plus", ir.ker_plus}, {"minus", ir.ker_minus}};
  }
  if (st.graded()) {
    const auto full = graded_index(st);
    const auto p = graded_index(st, characteristic_projection(st));
    const int target_p = m.abstract ? full_index_target(st) : 1 << (std::max(cfg.d, 2) / 2 - 1);
    r.results.push_back(equal_int("graded_index", full.index, full_index_target(st), finite_gap(full.gap)));
    r.results.push_back(equal_int("graded_index_p0plus", p.index, target_p, finite_gap(level_gap(st))));
    heat_checks(cfg, st, full.index, r);
  } else {
    const auto [plus, gap0] = positive_ground(st);
    const ShiftData sd = spectrum_shift(st, g);
    r.results.push_back(equal_int("odd_index_shift", sd.index.index, plus, finite_gap(sd.index.gap)));
    r.data["odd_index"] = {{"ker", sd.index.ker}, {"coker", sd.index.coker}, {"window", sd.index.window.str()}};
    r.data["dim_H_R0_plus"] = plus;
    r.data["dim_H_R0_plus_gap"] = std::isfinite(gap0) ? json(gap0) : json(nullptr);
  }
}

void run_shift(const ExperimentConfig& cfg, Report& r) {
  if (cfg.sector != Sector::R) throw ConfigError("shift needs --sector r");
  const Model m = build_model(cfg, cfg.cutoff);
  const SpectralTripleData st = make_triple(m.gens());
  const ShiftData sd = spectrum_shift(st, m.gens());
  r.data["model"] = m.name;
  r.data["lambda0"] = sd.lambda0;
  r.data["copies"] = sd.copies;
  r.data["top"] = sd.top;
  r.data["orthogonality_defect"] = sd.orthogonality_defect;
  r.data["wrap_commutator"] = sd.wrap_commutator;
  r.data["same_sign_commutator"] = sd.same_sign_commutator;
  double er = 0.0;
  for (double e : sd.eigen_residual) er = std::max(er, e);
  r.results.push_back(bound("xi_eigen_residual", er, tol_or(cfg, 1e-9)));
  r.results.push_back(bound("commutator_norm", sd.commutator_norm, 1.0 + tol_or(cfg, 1e-9)));
  const auto [plus, gap0] = positive_ground(st);
  r.results.push_back(equal_int("odd_index_shift", sd.index.index, plus, finite_gap(sd.index.gap)));

  Series s{"lambda_n", "n", "lambda_n", {}};
  json expected = json::array();
  for (int n = -sd.top; n <= sd.top; ++n) {
    const Vec& v = n > 0 ? sd.xi_plus[n][0] : (n < 0 ? sd.xi_minus[-n][0] : sd.xi_plus[0][0]);
    s.points.emplace_back(n, v.dot(st.Q * v).real());
    expected.push_back((n < 0 ? -1.0 : 1.0) * std::sqrt(sd.lambda0 * sd.lambda0 + std::abs(n)));
  }
  r.series.push_back(std::move(s));
  r.data["lambda_n_expected"] = expected;

  ExperimentConfig next = cfg;
  next.cutoff = cfg.cutoff + HalfInt(1);
  const Model m2 = build_model(next, next.cutoff);
  const SpectralTripleData st2 = make_triple(m2.gens());
  const ShiftData sd2 = spectrum_shift(st2, m2.gens());
  r.results.push_back(equal_int("odd_index_stable_next_cutoff", sd2.index.index, sd.index.index, finite_gap(sd2.index.gap)));
}

void series_data(const PairingSeries& ps, const std::string& name, Report& r) {
  Series s{name, "k", "partial_sum", {}};
  for (std::size_t k = 0; k < ps.partial.size(); ++k) s.points.emplace_back(static_cast<double>(k), ps.partial[k]);
  r.series.push_back(std::move(s));
  r.data[name] = {{"terms", ps.terms}, {"partial", ps.partial}, {"last_term", ps.last_term}, {"imag", ps.imag}};
}

json entireness_json(const std::vector<EntirenessRow>& rows) {
  json out = json::array();
  for (const auto& e : rows) out.push_back({{"n", e.n}, {"max_tau", e.max_tau}, {"growth", e.growth}});
  return out;
}

void run_jlo(const ExperimentConfig& cfg, Report& r) {
  const Model m = build_model(cfg, cfg.cutoff);
  const SpectralTripleData st = make_triple(m.gens());
  r.data["model"] = m.name;
  JloOptions opts;
  if (st.graded()) {
    const Mat p = characteristic_projection(st);
    const auto gi = graded_index(st, p);
    const PairingSeries ps = even_pairing(st, p, cfg.kmax, 1e-4, opts);
    series_data(ps, "even_pairing", r);
    r.results.push_back(bound("even_pairing_last_term", ps.last_term, 1e-4));
    r.results.push_back(near("even_pairing", ps.value, gi.index, tol_or(cfg, 1e-3), finite_gap(level_gap(st))));
    if (m.loop) {
      TrigPoly f = TrigPoly::single(0, HalfInt(1), 0.1).add(0, HalfInt(-1), 0.1);
      const Mat v = weyl_exponential(Mat(m.loop->fields().smeared_current(f)));
      // the same truncation order on both sides, so the comparison is exact term by term
      const int k = std::min(3, cfg.kmax);
      const PairingSeries a = even_pairing(st, v * p * v.adjoint(), k, 0.0, opts);
      const PairingSeries b = even_pairing(conjugated(st, v), p, k, 0.0, opts);
      r.results.push_back(bound("conjugation_stability", std::abs(a.value - b.value), tol_or(cfg, 1e-6)));
    }
    r.data["entireness"] = entireness_json(entireness_report(st, {p}, std::min(cfg.nmax, 8), opts));
  } else {
    const ShiftData sd = spectrum_shift(st, m.gens());
    const LadderModel lad = ladder_model(sd.lambda0, 40, sd.copies);
    const PairingSeries ps = odd_pairing(lad.st, lad.u, cfg.kmax, OddOrder::u_first, 1e-4, opts);
    const PairingSeries lit = odd_pairing(lad.st, lad.u, static_cast<int>(ps.terms.size()) - 1, OddOrder::u_inverse_first,
                                          0.0, opts);
    series_data(ps, "odd_pairing", r);
    r.data["odd_pairing_u_inverse_first"] = lit.value;
    r.data["ladder"] = {{"lambda0", sd.lambda0}, {"top", 40}, {"copies", sd.copies}};
    r.results.push_back(near("odd_pairing", ps.value, sd.index.index, tol_or(cfg, 1e-2), finite_gap(sd.index.gap)));
  }
}

void fusion_checks(const ModularData& md, const FusionTensor& f, const std::string& prefix, double tol, Report& r) {
  const auto mc = check_modular(md);
  r.results.push_back(bound(prefix + "_s_unitarity", std::max(mc.unitarity, mc.symmetry), tol));
  r.results.push_back({prefix + "_s_first_row_positive", mc.first_row_positive, true, std::nullopt, mc.first_row_positive});
  r.results.push_back(bound(prefix + "_verlinde_integrality", f.max_deviation, tol));
  const auto fc = check_fusion(f);
  const bool ok = fc.unit && fc.commutative && fc.associative && fc.nonnegative;
  r.results.push_back({prefix + "_fusion_ring_axioms", ok, true, std::nullopt, ok});
}

json fusion_json(const ModularData& md, const FusionTensor& f) {
  json nz = json::array();
  for (int a = 0; a < f.n; ++a)
    for (int b = a; b < f.n; ++b)
      for (int c = 0; c < f.n; ++c)
        if (f.at(a, b, c)) nz.push_back({md.labels[a], md.labels[b], md.labels[c], f.at(a, b, c)});
  json qd = json::array();
  for (int a = 0; a < md.size(); ++a) qd.push_back(quantum_dimension(md, a));
  return {{"labels", md.labels}, {"S", matrix_json(md.S)}, {"N_nonzero", nz}, {"quantum_dimensions", qd}};
}

void run_fusion(const ExperimentConfig& cfg, Report& r) {
  const double tol = tol_or(cfg, 1e-9);
  if (!cfg.coset.empty()) {
    const CosetData cd = coset_sectors();
    fusion_checks(cd.md, cd.fusion, "coset", tol, r);
    r.data["coset"] = fusion_json(cd.md, cd.fusion);
    const auto delta = disjointness_filter(cd, ramond_labels());
    const auto golden = expected_delta();
    json got = json::array(), want = json::array();
    for (const auto& s : delta) got.push_back(s.str());
    for (const auto& s : golden) want.push_back(s.str());
    bool same = delta.size() == golden.size();
    for (const auto& s : golden)
      same = same && std::any_of(delta.begin(), delta.end(), [&](const CosetSector& x) { return x.same_orbit(s); });
    r.results.push_back({"disjointness_filter", got, want, std::nullopt, same});

    const auto c1 = build_svir_module(Rational(1), Rational(1, 24), Sector::R, HalfInt(6));
    const auto ir = ramond_ground_index(c1);
    const PairingTable t = pairing_table(cd, delta, ramond_labels(), ir.index);
    bool diag = true;
    for (std::size_t i = 0; i < delta.size(); ++i)
      diag = diag && t.value[i][0] == (cd.index_of(delta[i]) == cd.md.vacuum_index ? 1 : 0);
    r.results.push_back({"separation_table", table_json(t), "delta_{rho,id}", finite_gap(ir.gap), diag});
    return;
  }
  const ModularData md = su2_s_matrix(cfg.level);
  const FusionTensor f = verlinde_fusion(md);
  const std::string prefix = "su2_" + std::to_string(cfg.level);
  fusion_checks(md, f, prefix, tol, r);
  r.data[prefix] = fusion_json(md, f);
  if (cfg.d == 2 || cfg.d == 4) {
    FockSpace fs(cfg.d, FermionSector{Sector::R, ZeroModeVariant::unique}, HalfInt(0));
    int even = 0;
    for (int i : fs.module().states_at(HalfInt(0))) even += (*fs.module().parity)[i] == 1;
    std::vector<std::string> labels;
    const FusionTensor sf = spin_level1_fusion(cfg.d, &labels);
    const PairingTable t = pairing_table(sf, labels, even);
    bool diag = true;
    for (int a = 0; a < sf.n; ++a)
      for (int b = 0; b < sf.n; ++b) diag = diag && t.value[a][b] == (a == b ? (1 << (cfg.d / 2 - 1)) : 0);
    r.results.push_back({"separation_table_spin" + std::to_string(cfg.d), table_json(t),
                         std::to_string(1 << (cfg.d / 2 - 1)) + " delta_{lambda,mu}", std::nullopt, diag});
  }
}

void run_characters(const ExperimentConfig& cfg, Report& r) {
  const FermionSector fsec = fermion_sector(cfg, cfg.d);
  FockSpace fs(cfg.d, fsec, cfg.cutoff);
  const QSeries ch = fermion_character(cfg.d, cfg.sector, fs.cutoff());
  bool same = true;
  json rows = json::array();
  for (const auto& [lvl, n] : fs.module().level_dims()) {
    const Rational want = ch.coefficient(lvl);
    same = same && want == Rational(n);
    rows.push_back({{"level", lvl.str()}, {"dim", n}, {"character", rational_json(want)}});
  }
  r.data["fermion_character"] = ch.str();
  r.data["fermion_levels"] = rows;
  r.results.push_back({"fermion_character_matches_fock", same, true, std::nullopt, same});
  if (fs.graded()) {
    const QSeries gch = fermion_graded_character(cfg.d, cfg.sector, fs.cutoff());
    r.data["fermion_graded_character"] = gch.str();
  }

  const Model m = build_model(cfg, cfg.cutoff);
  const SpectralTripleData st = make_triple(m.gens());
  r.data["model"] = m.name;
  Series s{"heat_trace", "t", st.graded() ? "str_exp_tQ2" : "tr_exp_tQ2", {}};
  double lo = INFINITY, hi = -INFINITY;
  for (double t : {0.25, 0.5, 1.0, 2.0, 4.0}) {
    const double h = heat_trace(st, t);
    s.points.emplace_back(t, h);
    lo = std::min(lo, h);
    hi = std::max(hi, h);
  }
  r.series.push_back(std::move(s));
  if (st.graded()) {
    const auto gi = graded_index(st);
    r.results.push_back(bound("heat_trace_spread", hi - lo, tol_or(cfg, 1e-8)));
    r.results.push_back(near("heat_trace_equals_index", lo, gi.index, tol_or(cfg, 1e-8), finite_gap(gi.gap)));
  }
}

}  // namespace

void validate(ExperimentConfig& cfg) {
  if (cfg.command.empty()) throw ConfigError("no command given");
  if (!kCommands.count(cfg.command)) throw ConfigError("unknown command '" + cfg.command + "'");
  if (cfg.d < 1 || cfg.d > 4) throw ConfigError("--d must be in 1..4");
  if (cfg.group.empty()) cfg.group = cfg.d == 3 ? "su2" : "u1";
  if (cfg.group != "su2" && cfg.group != "u1") throw ConfigError("--group must be su2 or u1");
  if (cfg.group == "su2" && cfg.d != 3) throw ConfigError("su2 has dimension 3; use --d 3");
  if (cfg.command == "fusion") {
    if (cfg.level < 1 || cfg.level > 12) throw ConfigError("fusion --level must be in 1..12");
  } else if (cfg.group == "su2" && (cfg.level < 1 || cfg.level > 2)) {
    throw ConfigError("--level must be 1 or 2 for su2 modules");
  }
  if (cfg.realization != "pbw" && cfg.realization != "fermionic") throw ConfigError("--realization must be pbw or fermionic");
  if (cfg.realization == "fermionic" && (cfg.group != "su2" || cfg.level != 2))
    throw ConfigError("the fermionic realization is su2 at level 2");
  if (cfg.cutoff < HalfInt(1) || cfg.cutoff > HalfInt(8)) throw ConfigError("--cutoff must be in [1, 8]");
  if (cfg.kmax < 0 || cfg.kmax > 12) throw ConfigError("--kmax must be in 0..12");
  if (cfg.nmax < 1 || cfg.nmax > 16) throw ConfigError("--nmax must be in 1..16");
  if (cfg.tol && !(*cfg.tol > 0)) throw ConfigError("--tol must be positive");
  if (cfg.c.has_value() != cfg.h.has_value()) throw ConfigError("--c and --h go together");
  if (cfg.c) {
    if (*cfg.c <= 0) throw ConfigError("--c must be positive");
    if (*cfg.h < 0) throw ConfigError("--h must be nonnegative");
    if (cfg.sector == Sector::R && *cfg.h < *cfg.c / 24) throw ConfigError("Ramond unitarity needs h >= c/24");
  }
  if (!cfg.coset.empty() && cfg.coset != kCoset) throw ConfigError(std::string("supported coset: ") + kCoset);
  if (!cfg.coset.empty() && cfg.command != "fusion") throw ConfigError("--coset belongs to the fusion command");
  const bool needs_cutoff_integer = cfg.command == "shift" || (cfg.command == "index" && cfg.sector == Sector::R);
  if (needs_cutoff_integer && !cfg.cutoff.is_integer()) throw ConfigError("Ramond commands need an integer cutoff");
  if (cfg.command == "shift" && cfg.c) throw ConfigError("shift runs on loop models");
  const bool ramond_only = cfg.command == "supercharge" || cfg.command == "index" || cfg.command == "jlo" ||
                           cfg.command == "shift";
  if (ramond_only && cfg.sector != Sector::R) throw ConfigError(cfg.command + " needs --sector r");
}

bool Report::all_pass() const { return first_failure() == nullptr; }

const CheckResult* Report::first_failure() const {
  for (const auto& c : results)
    if (!c.pass) return &c;
  return nullptr;
}

Report run(const ExperimentConfig& cfg) {
  Report r;
  r.config = cfg;
  if (cfg.command == "svir-check") run_svir_check(cfg, r);
  else if (cfg.command == "supercharge") run_supercharge(cfg, r);
  else if (cfg.command == "index") run_index(cfg, r);
  else if (cfg.command == "jlo") run_jlo(cfg, r);
  else if (cfg.command == "shift") run_shift(cfg, r);
  else if (cfg.command == "fusion") run_fusion(cfg, r);
  else if (cfg.command == "characters") run_characters(cfg, r);
  return r;
}

json config_json(const ExperimentConfig& cfg) {
  json j = {{"command", cfg.command},
            {"group", cfg.group},
            {"level", cfg.level},
            {"d", cfg.d},
            {"sector", cfg.sector == Sector::R ? "r" : "ns"},
            {"variant", to_string(cfg.variant)},
            {"realization", cfg.realization},
            {"cutoff", cfg.cutoff.str()},
            {"kmax", cfg.kmax},
            {"nmax", cfg.nmax},
            {"tol", cfg.tol ? json(*cfg.tol) : json(nullptr)},
            {"seed", cfg.seed},
            {"format", cfg.format == Format::json ? "json" : "csv"}};
  if (cfg.c) {
    j["c"] = to_string(*cfg.c);
    j["h"] = to_string(*cfg.h);
  }
  if (!cfg.coset.empty()) j["coset"] = cfg.coset;
  return j;
}

json to_json(const Report& r) {
  json results = json::array();
  for (const auto& c : r.results)
    results.push_back({{"check", c.check},
                       {"value", c.value},
                       {"target", c.target},
                       {"gap", c.gap ? json(*c.gap) : json(nullptr)},
                       {"pass", c.pass}});
  json series = json::array();
  for (const auto& s : r.series) {
    json pts = json::array();
    for (const auto& [x, y] : s.points) pts.push_back({x, y});
    series.push_back({{"name", s.name}, {"x", s.x}, {"y", s.y}, {"points", pts}});
  }
  return {{"schema_version", kSchemaVersion}, {"config", config_json(r.config)}, {"results", results},
          {"series", series}, {"data", r.data}};
}

void emit_plot_data(const Report& r, std::ostream& os) {
  bool first = true;
  for (const auto& s : r.series) {
    if (!first) os << '\n';
    first = false;
    os << s.x << ',' << s.y << '\n';
    os.precision(17);
    for (const auto& [x, y] : s.points) os << x << ',' << y << '\n';
  }
}

int exit_code(const Report& r) { return r.all_pass() ? 0 : 1; }

}  // namespace svirlab::cli
