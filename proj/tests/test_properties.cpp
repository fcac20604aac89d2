// Seeded property tests: invariants checked on random inputs.
#include "svirlab/fusion_ring.hpp"
#include "svirlab/jlo.hpp"
#include "svirlab/models.hpp"
#include "svirlab/ncg_pairing.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

using namespace svirlab;

namespace {

constexpr unsigned kSeed = 20261014;

Mat random_hermitian(int n, std::mt19937& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  Mat a(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a(i, j) = cplx(g(rng), g(rng));
  return 0.5 * (a + a.adjoint());
}

TrigPoly random_real_function(std::mt19937& rng, int colours, double amp) {
  std::uniform_real_distribution<double> u(-amp, amp);
  TrigPoly f;
  for (int a = 0; a < colours; ++a) {
    f.add(a, HalfInt(0), u(rng));
    const cplx c(u(rng), u(rng));
    f.add(a, HalfInt(1), c).add(a, HalfInt(-1), std::conj(c));
  }
  return f;
}

}  // namespace

TEST_CASE("property: divided differences lie between the mean-value bounds") {
  std::mt19937 rng(kSeed);
  std::uniform_real_distribution<double> u(0.0, 8.0);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + trial % 9;
    std::vector<double> x;
    for (int i = 0; i <= n; ++i) x.push_back(u(rng));
    const double v = divided_difference_exp(x) * std::pow(-1.0, n) * std::tgamma(n + 1.0);
    const auto [lo, hi] = std::minmax_element(x.begin(), x.end());
    CHECK(v <= std::exp(-*lo) * (1 + 1e-9));
    CHECK(v >= std::exp(-*hi) * (1 - 1e-9));
    std::shuffle(x.begin(), x.end(), rng);
    CHECK(divided_difference_exp(x) * std::pow(-1.0, n) * std::tgamma(n + 1.0) == doctest::Approx(v).epsilon(1e-10));
  }
}

TEST_CASE("property: derivation identities for random real test functions") {
  const LoopModel m = loop_model(3, 3);
  std::mt19937 rng(kSeed + 1);
  for (int trial = 0; trial < 5; ++trial) {
    const auto r = susy_relation_report(m.sugawara, random_real_function(rng, 3, 0.3));
    CHECK(r[0].residual < 1e-9);
    CHECK(r[1].residual < 1e-9);
  }
}

TEST_CASE("property: even pairing is invariant under Gamma-even unitary conjugation") {
  const LoopModel m = loop_model(2, 2);
  const auto st = make_triple(m.gens());
  const Mat p = characteristic_projection(st);
  const Mat g = st.grading();
  std::mt19937 rng(kSeed + 2);
  for (int trial = 0; trial < 3; ++trial) {
    Mat h = random_hermitian(st.dim(), rng);
    h = 0.5 * (h + g * h * g);  // commutes with Gamma
    const Mat v = weyl_exponential(0.3 * h);
    const auto a = even_pairing(st, v * p * v.adjoint(), 3);
    const auto b = even_pairing(conjugated(st, v), p, 3);
    CHECK(std::abs(a.value - b.value) < 1e-6);
  }
}

TEST_CASE("property: McKean-Singer for random odd perturbations of Q") {
  const LoopModel m = loop_model(2, 2);
  const auto st = make_triple(m.gens());
  const Mat g = st.grading();
  std::mt19937 rng(kSeed + 3);
  for (int trial = 0; trial < 3; ++trial) {
    Mat k = random_hermitian(st.dim(), rng);
    k = 0.5 * (k - g * k * g);  // anticommutes with Gamma
    auto pert = make_triple(st.space, st.Q + 0.2 * k, st.gamma, st.lw, st.c);
    const int idx = graded_index(pert).index;
    CHECK(idx == graded_index(st).index);
    for (double t : {0.5, 2.0}) CHECK(std::abs(heat_trace(pert, t) - idx) < 1e-8);
  }
}

TEST_CASE("property: ladder odd pairing counts copies") {
  std::mt19937 rng(kSeed + 4);
  std::uniform_real_distribution<double> u(0.1, 1.0);
  for (int copies = 1; copies <= 3; ++copies) {
    const LadderModel lad = ladder_model(u(rng), 40, copies);
    const auto ps = odd_pairing(lad.st, lad.u, 6, OddOrder::u_first, 1e-4);
    CHECK(std::abs(ps.value - copies) < 1e-2);
  }
}

TEST_CASE("property: Verlinde coefficients form a commutative associative ring") {
  for (int k = 1; k <= 8; ++k) {
    const auto md = su2_s_matrix(k);
    const auto f = verlinde_fusion(md);
    const auto fc = check_fusion(f);
    CHECK(fc.associative);
    CHECK(fc.commutative);
    CHECK(fc.nonnegative);
    for (int a = 0; a <= k; ++a) CHECK(f.conjugate(a) == a);  // su(2) labels are self-conjugate
  }
}
