#include "svirlab/models.hpp"
#include "svirlab/ncg_pairing.hpp"
#include "svirlab/svir_module.hpp"

#include <doctest.h>

#include <cmath>

using namespace svirlab;

namespace {

const LoopModel& d2() {
  static const LoopModel m = loop_model(2, 3);
  return m;
}

const LoopModel& d3() {
  static const LoopModel m = loop_model(3, 3);
  return m;
}

}  // namespace

TEST_CASE("triple validation") {
  TruncatedModule sp;
  sp.level = {HalfInt(0), HalfInt(0)};
  sp.label = {"a", "b"};
  Mat q = Mat::Zero(2, 2);
  q(0, 1) = 1.0;
  CHECK_THROWS_AS(make_triple(sp, q, std::nullopt, Rational(0), Rational(0)), Error);  // not Hermitian
  q(1, 0) = 1.0;
  RVec even(2);
  even << 1, 1;
  CHECK_THROWS_AS(make_triple(sp, q, even, Rational(0), Rational(0)), Error);  // Q not odd
  RVec g(2);
  g << 1, -1;
  const auto st = make_triple(sp, q, g, Rational(0), Rational(0));
  CHECK(st.graded());
  CHECK(graded_index(st).index == 0);
}

TEST_CASE("graded loop model: index, projection and McKean-Singer") {
  const auto st = make_triple(d2().gens());
  CHECK(st.graded());
  const Mat p = characteristic_projection(st);
  CHECK(p.trace().real() == doctest::Approx(1.0));
  CHECK(graded_index(st, p).index == 1);
  const int full = graded_index(st).index;
  CHECK(full == 0);
  for (double t : {0.5, 1.0, 2.0, 4.0}) CHECK(std::abs(heat_trace(st, t) - full) < 1e-8);
}

TEST_CASE("c = 1 abstract module: McKean-Singer equals the Ramond index") {
  const auto m = build_svir_module(Rational(1), Rational(1, 24), Sector::R, HalfInt(6));
  const auto st = make_triple(m.gens);
  for (double t : {0.5, 1.0, 2.0, 4.0}) CHECK(heat_trace(st, t) == doctest::Approx(1.0).epsilon(1e-10));
  const auto ep = even_pairing(st, characteristic_projection(st), 4, 1e-4);
  CHECK(ep.value == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("even pairing converges to the index") {
  const auto st = make_triple(d2().gens());
  const Mat p = characteristic_projection(st);
  const auto ps = even_pairing(st, p, 10, 1e-4);
  CHECK(ps.last_term < 1e-4);
  CHECK(std::abs(ps.value - 1.0) < 1e-3);
  CHECK(ps.imag < 1e-10);
  // partial sums increase towards 1 from below
  for (std::size_t k = 1; k < ps.partial.size(); ++k) CHECK(ps.partial[k] >= ps.partial[k - 1] - 1e-12);
  CHECK_THROWS_AS(even_pairing(st, 0.5 * p, 2), Error);
}

TEST_CASE("conjugation stability of the even pairing") {
  const auto st = make_triple(d2().gens());
  const Mat p = characteristic_projection(st);
  TrigPoly f = TrigPoly::single(0, HalfInt(1), 0.2).add(0, HalfInt(-1), 0.2);
  const Mat v = weyl_exponential(Mat(d2().fields().smeared_current(f)));
  const auto a = even_pairing(st, v * p * v.adjoint(), 3);
  const auto b = even_pairing(conjugated(st, v), p, 3);
  CHECK(std::abs(a.value - b.value) < 1e-6);
}

TEST_CASE("spectrum shift on the su2 loop model") {
  const auto st = make_triple(d3().gens());
  const ShiftData sd = spectrum_shift(st, d3().gens());
  CHECK(sd.lambda0 == doctest::Approx(0.25));
  CHECK(sd.copies == 2);
  for (double e : sd.eigen_residual) CHECK(e < 1e-9);
  CHECK((sd.u.adjoint() * sd.u - Mat::Identity(st.dim(), st.dim())).norm() < 1e-9);
  // crossing xi_0 -> xi_{-1}: lambda_0 + lambda_1
  CHECK(sd.commutator_norm == doctest::Approx(0.25 + std::sqrt(1.0625)).epsilon(1e-9));
  CHECK(sd.same_sign_commutator < 1.0);
  CHECK(sd.index.index == 2);
  const LoopModel m4 = loop_model(3, 4);
  const auto st4 = make_triple(m4.gens());
  CHECK(spectrum_shift(st4, m4.gens()).index.index == 2);
}

TEST_CASE("analytic ladder: odd pairing and its argument order") {
  const LadderModel lad = ladder_model(0.25, 40, 2);
  const auto a = odd_pairing(lad.st, lad.u, 6, OddOrder::u_first, 1e-4);
  CHECK(std::abs(a.value - 2.0) < 1e-2);
  const auto b = odd_pairing(lad.st, lad.u, 6, OddOrder::u_inverse_first, 1e-4);
  CHECK(std::abs(b.value + 2.0) < 1e-2);
  CHECK(odd_index(lad.st, lad.u).index == 2);
  CHECK_THROWS_AS(ladder_model(0.25, 1, 1), Error);
}

TEST_CASE("derivations and growth diagnostics") {
  const auto st = make_triple(d2().gens());
  const Mat p = characteristic_projection(st);
  const Mat dp = derivation(st, p);
  CHECK((dp - (st.Q * p - p * st.Q)).norm() < 1e-14);
  CHECK(derivation_norm(st, p) > 0.0);
  CHECK(derivation_norm(st, Mat::Identity(st.dim(), st.dim())) < 1e-14);
  const auto rows = entireness_report(st, {p}, 6);
  REQUIRE(rows.size() == 6);
  for (const auto& r : rows) CHECK(std::isfinite(r.growth));
}
