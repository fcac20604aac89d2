// Acceptance run: one line per criterion with the measured value and its tolerance.
// Exit status is nonzero only for failures that are not listed in kKnownFailures.
#include "svirlab/exact_charge.hpp"
#include "svirlab/fermion_fock.hpp"
#include "svirlab/fusion_ring.hpp"
#include "svirlab/models.hpp"
#include "svirlab/ncg_pairing.hpp"
#include "svirlab/svir_module.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <set>
#include <string>

using namespace svirlab;

namespace {

// 7b: the wrapped shift has ||[Q,u_s]|| = lambda0 + lambda1 at the crossing xi_0 -> xi_-1.
// 9a: on the truncated space the pairing converges to the full finite-dimensional index of u_s, which is 0;
//     the windowed odd index (2) is recovered on the untruncated ladder (9b).
// 10c: the literal sign of the exponential identity; the opposite sign (10d) holds.
const std::set<std::string> kKnownFailures = {"7b", "9a", "10c"};

int unexpected = 0, known = 0, passed = 0;

void line(const std::string& id, const std::string& what, bool pass, const std::string& detail) {
  const bool expected_fail = kKnownFailures.count(id) > 0;
  const char* tag = pass ? "PASS" : (expected_fail ? "FAIL (known)" : "FAIL");
  std::printf("%-4s %-13s %s: %s\n", id.c_str(), tag, what.c_str(), detail.c_str());
  std::fflush(stdout);
  if (pass)
    ++passed;
  else if (expected_fail)
    ++known;
  else
    ++unexpected;
}

std::string fmt(const char* f, double a) {
  char buf[128];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

std::string fmt(const char* f, double a, double b) {
  char buf[160];
  std::snprintf(buf, sizeof buf, f, a, b);
  return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// runs a criterion body and turns a library error into a failed line
void guarded(const std::string& id, const std::string& what, const std::function<void()>& body) {
  try {
    body();
  } catch (const std::exception& e) {
    line(id, what, false, std::string("error: ") + e.what());
  }
}

int even_ground_count(int d) {
  FockSpace f(d, FermionSector{Sector::R, d % 2 ? ZeroModeVariant::plus : ZeroModeVariant::unique}, HalfInt(0));
  int even = 0;
  for (int i : f.module().states_at(HalfInt(0))) even += (*f.module().parity)[i] == 1;
  return even;
}

int positive_ground(const SpectralTripleData& st) {
  const auto ground = st.space.states_at(HalfInt(0));
  Eigen::SelfAdjointEigenSolver<Mat> es(submatrix(st.Q, ground, ground));
  const double l0 = std::sqrt(std::max(0.0, to_double(st.lw - st.c / 24)));
  int count = 0;
  for (int i = 0; i < es.eigenvalues().size(); ++i) count += std::abs(es.eigenvalues()[i] - l0) < 1e-8;
  return count;
}

void criterion1() {
  guarded("1", "super-Virasoro relations, su(2)_2 fermionic x fermionic, cutoff 4", [] {
    const auto t0 = std::chrono::steady_clock::now();
    double worst = 0.0;
    for (auto sec : {FermionSector{Sector::NS, ZeroModeVariant::unique}, FermionSector{Sector::R, ZeroModeVariant::plus}}) {
      const LoopModel m = fermionic_pair_model(sec, HalfInt(4));
      worst = std::max(worst, max_residual(verify_svir_relations(m.gens(), default_svir_samples(m.gens(), HalfInt(2)))));
    }
    const double t = seconds_since(t0);
    line("1", "super-Virasoro relations, su(2)_2 fermionic x fermionic, cutoff 4", worst <= 1e-9 && t <= 60,
         fmt("max residual %.3g (<= 1e-9), %.1f s (<= 60 s)", worst, t));
  });
}

void criterion2() {
  guarded("2", "exact central charge (d,l,h) = (3,2,2)", [] {
    const auto t0 = std::chrono::steady_clock::now();
    const auto ec = exact_central_charge_fermionic(build_su2());
    const double t = seconds_since(t0);
    const bool ok = ec.from_g == Rational(3) && ec.from_l == Rational(3) && ec.formula == Rational(3);
    line("2", "exact central charge (d,l,h) = (3,2,2)", ok && t <= 10,
         "from G " + to_string(ec.from_g) + ", from L " + to_string(ec.from_l) + ", formula " + to_string(ec.formula) +
             fmt(" (= 3), %.2f s (<= 10 s)", t));
  });
}

void criterion3() {
  guarded("3", "Q^2 = L_0 - c/24", [] {
    const double a = supercharge_identity(loop_model(2, 3).gens()).residual;
    const double b = supercharge_identity(loop_model(3, 3).gens()).residual;
    const auto c1 = build_svir_module(Rational(1), Rational(1, 24), Sector::R, HalfInt(6));
    const double c = supercharge_identity(c1.gens).residual;
    const double worst = std::max({a, b, c});
    line("3", "Q^2 = L_0 - c/24", worst <= 1e-10,
         fmt("loop d=2 %.3g, loop d=3 %.3g", a, b) + fmt(", c=1 cutoff 6 %.3g (<= 1e-10)", c));
  });
}

void criterion4() {
  guarded("4", "zero-mode dimensions", [] {
    bool ok = true;
    std::string detail;
    for (int d = 1; d <= 4; ++d) {
      FockSpace f(d, FermionSector{Sector::R, d % 2 ? ZeroModeVariant::plus : ZeroModeVariant::unique}, HalfInt(0));
      ok = ok && f.zero_mode_dim() == (1 << (d / 2));
      detail += "d=" + std::to_string(d) + ":" + std::to_string(f.zero_mode_dim()) + " ";
    }
    for (int d : {2, 4}) {
      const int e = even_ground_count(d);
      ok = ok && e == (1 << (d / 2 - 1));
      detail += "even d=" + std::to_string(d) + ":" + std::to_string(e) + " ";
    }
    line("4", "zero-mode dimensions", ok, detail + "(2^floor(d/2), 2^(d/2-1))");
  });
}

void criterion5() {
  guarded("5", "McKean-Singer", [] {
    bool ok = true;
    std::string detail;
    for (auto [d, cut] : {std::pair{2, 3}, std::pair{4, 2}}) {
      const auto st = make_triple(loop_model(d, cut).gens());
      const int idx = graded_index(st).index;
      double dev = 0.0;
      for (double t : {0.5, 1.0, 2.0, 4.0}) dev = std::max(dev, std::abs(heat_trace(st, t) - idx));
      ok = ok && dev <= 1e-8;
      detail += "d=" + std::to_string(d) + " cutoff " + std::to_string(cut) + ": ind " + std::to_string(idx) +
                fmt(", max |str e^{-tQ^2} - ind| %.3g; ", dev);
    }
    const auto c1 = build_svir_module(Rational(1), Rational(1, 24), Sector::R, HalfInt(6));
    const auto st = make_triple(c1.gens);
    const int idx = graded_index(st).index;
    double dev = 0.0;
    for (double t : {0.5, 1.0, 2.0, 4.0}) dev = std::max(dev, std::abs(heat_trace(st, t) - idx));
    ok = ok && dev <= 1e-8;
    detail += "c=1: ind " + std::to_string(idx) + fmt(", %.3g (<= 1e-8)", dev);
    line("5", "McKean-Singer", ok, detail);
  });
}

void criterion6() {
  guarded("6", "c=1, h=1/24 Ramond index", [] {
    const auto a = ramond_ground_index(build_svir_module(Rational(1), Rational(1, 24), Sector::R, HalfInt(4)));
    const auto b = ramond_ground_index(build_svir_module(Rational(1), Rational(1, 24), Sector::R, HalfInt(6)));
    line("6", "c=1, h=1/24 Ramond index", a.index == 1 && b.index == 1,
         "cutoff 4: " + std::to_string(a.index) + ", cutoff 6: " + std::to_string(b.index) + fmt(" (= 1), gap %.3g", b.gap));
  });
}

void criterion7() {
  try {
    const LoopModel m = loop_model(3, 3);
    const auto st = make_triple(m.gens());
    const ShiftData sd = spectrum_shift(st, m.gens());
    double er = 0.0;
    for (int n = 0; n < static_cast<int>(sd.eigen_residual.size()) && n <= 3; ++n) er = std::max(er, sd.eigen_residual[n]);
    line("7a", "shift ladder eigen-residuals, d=3 cutoff 3", er <= 1e-9, fmt("%.3g (<= 1e-9)", er));
    line("7b", "||[Q,u_s]||", sd.commutator_norm <= 1.0 + 1e-9,
         fmt("%.6f (<= 1 + 1e-9); lambda0 + lambda1 = %.6f", sd.commutator_norm,
             sd.lambda0 + std::sqrt(sd.lambda0 * sd.lambda0 + 1)) +
             fmt("; same-sign steps %.4f, wrap %.4f", sd.same_sign_commutator, sd.wrap_commutator));
    const int plus = positive_ground(st);
    line("7c", "odd_index(u_s) = dim H_{R,0,+}", sd.index.index == plus,
         std::to_string(sd.index.index) + " (= " + std::to_string(plus) + "), gap " + fmt("%.3g", sd.index.gap));
    const LoopModel m4 = loop_model(3, 4);
    const auto st4 = make_triple(m4.gens());
    const ShiftData sd4 = spectrum_shift(st4, m4.gens());
    line("7d", "odd index stable 3 -> 4", sd4.index.index == sd.index.index,
         std::to_string(sd.index.index) + " -> " + std::to_string(sd4.index.index));
  } catch (const std::exception& e) {
    line("7", "spectrum shift", false, std::string("error: ") + e.what());
  }
}

void criterion8() {
  guarded("8", "even pairing of p_{0,+}, d=2 cutoff 3", [] {
    const auto t0 = std::chrono::steady_clock::now();
    const auto st = make_triple(loop_model(2, 3).gens());
    const Mat p = characteristic_projection(st);
    const auto ps = even_pairing(st, p, 12, 1e-4);
    const int target = even_ground_count(2);
    const double t = seconds_since(t0);
    line("8", "even pairing of p_{0,+}, d=2 cutoff 3",
         ps.last_term < 1e-4 && std::abs(ps.value - target) <= 1e-3 && t <= 300,
         fmt("%.7f", ps.value) + " (target " + std::to_string(target) + fmt(" within 1e-3), last term %.2g, ", ps.last_term) +
             std::to_string(ps.terms.size()) + fmt(" terms, %.1f s (<= 300 s)", t));
  });
}

void criterion9() {
  const LoopModel m = loop_model(3, 3);
  const auto st = make_triple(m.gens());
  const ShiftData sd = spectrum_shift(st, m.gens());
  guarded("9a", "odd pairing on the truncated d=3 model", [&] {
    JloOptions opts;
    opts.n_max = 21;
    opts.state_budget = 4'000'000;
    const auto ps = odd_pairing(st, sd.u, 10, OddOrder::u_first, 1e-4, opts);
    line("9a", "odd pairing on the truncated d=3 model", std::abs(ps.value - sd.index.index) <= 1e-2,
         fmt("%.6f", ps.value) + " (target " + std::to_string(sd.index.index) +
             fmt(" within 1e-2), last term %.2g; ind(PuP) of a unitary on a finite space is 0", ps.last_term));
  });
  guarded("9b", "odd pairing on the shift ladder (lambda0, copies of d=3)", [&] {
    const LadderModel lad = ladder_model(sd.lambda0, 40, sd.copies);
    const auto ps = odd_pairing(lad.st, lad.u, 8, OddOrder::u_first, 1e-4);
    const int target = odd_index(lad.st, lad.u).index;
    line("9b", "odd pairing on the shift ladder (lambda0, copies of d=3)",
         std::abs(ps.value - target) <= 1e-2 && target == sd.index.index,
         fmt("%.6f", ps.value) + " (odd index " + std::to_string(target) + " within 1e-2; d=3 model index " +
             std::to_string(sd.index.index) + ")");
  });
}

void criterion10() {
  try {
    const LoopModel m = loop_model(3, 4);
    TrigPoly f = TrigPoly::single(0, HalfInt(0), 0.025);
    f.add(0, HalfInt(1), cplx(0.05, 0.025)).add(0, HalfInt(-1), cplx(0.05, -0.025));
    const auto r = susy_relation_report(m.sugawara, f);
    line("10a", "[Q,F(f)]_+ = J(f)/sqrt(l+h)", r[0].residual <= 1e-6, fmt("%.3g (<= 1e-6)", r[0].residual));
    line("10b", "[Q,J(f)] = i sqrt(l+h) F(f')", r[1].residual <= 1e-6, fmt("%.3g (<= 1e-6)", r[1].residual));
    line("10c", "[Q,e^{iJ(fX)}] = +sqrt(l+h) F(f'X) e^{iJ(fX)}", r[2].residual <= 1e-6,
         fmt("%.3g (<= 1e-6)", r[2].residual));
    line("10d", "[Q,e^{iJ(fX)}] = -sqrt(l+h) F(f'X) e^{iJ(fX)}", r[3].residual <= 1e-6,
         fmt("%.3g (<= 1e-6), truncation tail %.2g", r[3].residual, weyl_tail(m.sugawara, f)));
  } catch (const std::exception& e) {
    line("10", "derivation identities", false, std::string("error: ") + e.what());
  }
}

void criterion11() {
  guarded("11", "fusion golden test", [] {
    const auto t0 = std::chrono::steady_clock::now();
    double dev = 0.0;
    for (int k : {1, 2, 4}) dev = std::max(dev, verlinde_fusion(su2_s_matrix(k)).max_deviation);
    const CosetData cd = coset_sectors();
    dev = std::max(dev, cd.fusion.max_deviation);
    const auto delta = disjointness_filter(cd, ramond_labels());
    const auto golden = expected_delta();
    bool same = delta.size() == golden.size();
    for (const auto& s : golden)
      same = same && std::any_of(delta.begin(), delta.end(), [&](const CosetSector& x) { return x.same_orbit(s); });
    std::string got;
    for (const auto& s : delta) got += s.str() + " ";
    const double t = seconds_since(t0);
    line("11", "fusion golden test", same && dev <= 1e-9 && t <= 5,
         "Delta = { " + got + fmt("}, Verlinde deviation %.3g (<= 1e-9), %.3f s (<= 5 s)", dev, t));
  });
}

void criterion12() {
  guarded("12", "separation tables", [] {
    const CosetData cd = coset_sectors();
    const auto delta = disjointness_filter(cd, ramond_labels());
    const int c1 = ramond_ground_index(build_svir_module(Rational(1), Rational(1, 24), Sector::R, HalfInt(6))).index;
    const PairingTable t = pairing_table(cd, delta, ramond_labels(), c1);
    bool ok = true;
    for (std::size_t i = 0; i < delta.size(); ++i)
      ok = ok && t.value[i][0] == (cd.index_of(delta[i]) == cd.md.vacuum_index ? 1 : 0);
    std::string detail = std::string("c=1 ") + (ok ? "delta_{rho,id}" : "mismatch");
    for (int d : {2, 4}) {
      std::vector<std::string> labels;
      const FusionTensor sf = spin_level1_fusion(d, &labels);
      const PairingTable st = pairing_table(sf, labels, even_ground_count(d));
      bool diag = true;
      for (int a = 0; a < sf.n; ++a)
        for (int b = 0; b < sf.n; ++b) diag = diag && st.value[a][b] == (a == b ? (1 << (d / 2 - 1)) : 0);
      ok = ok && diag;
      detail += "; d=" + std::to_string(d) + " " + (diag ? std::to_string(1 << (d / 2 - 1)) + " delta_{lambda,mu}" : "mismatch");
    }
    line("12", "separation tables", ok, detail);
  });
}

void criterion13() {
  guarded("13", "conjugation stability", [] {
    const LoopModel m = loop_model(2, 3);
    const auto st = make_triple(m.gens());
    const Mat p = characteristic_projection(st);
    TrigPoly f = TrigPoly::single(0, HalfInt(1), 0.1).add(0, HalfInt(-1), 0.1);
    const Mat v = weyl_exponential(Mat(m.fields().smeared_current(f)));
    const auto a = even_pairing(st, v * p * v.adjoint(), 3);
    const auto b = even_pairing(conjugated(st, v), p, 3);
    const double dev = std::abs(a.value - b.value);
    line("13", "conjugation stability", dev <= 1e-6, fmt("|phi(vpv*) - phi_v(p)| = %.3g (<= 1e-6)", dev));
  });
}

}  // namespace

int main() {
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  criterion9();
  criterion10();
  criterion11();
  criterion12();
  criterion13();
  std::printf("summary: %d passed, %d known failures, %d unexpected failures\n", passed, known, unexpected);
  return unexpected == 0 ? 0 : 1;
}
