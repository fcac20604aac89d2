#include "svirlab/exact_charge.hpp"
#include "svirlab/models.hpp"
#include "svirlab/sugawara.hpp"

#include <doctest.h>

#include <cmath>

using namespace svirlab;

namespace {

TrigPoly test_function(double amp) {
  // real, colour 0, modes |n| <= 1
  TrigPoly f = TrigPoly::single(0, HalfInt(0), 0.5 * amp);
  f.add(0, HalfInt(1), cplx(amp, 0.5 * amp)).add(0, HalfInt(-1), cplx(amp, -0.5 * amp));
  return f;
}

}  // namespace

TEST_CASE("central charge formula d/2 + d l/(l + h_vee)") {
  CHECK(central_charge(3, 2, 2) == 3);
  CHECK(central_charge(3, 1, 2) == Rational(5, 2));
  CHECK(central_charge(2, 1, 0) == 3);
}

TEST_CASE("super-Virasoro relations on the fermionic realization") {
  for (auto sec : {FermionSector{Sector::NS, ZeroModeVariant::unique}, FermionSector{Sector::R, ZeroModeVariant::plus}}) {
    const LoopModel m = fermionic_pair_model(sec, HalfInt(4));
    const auto res = verify_svir_relations(m.gens(), default_svir_samples(m.gens(), HalfInt(2)));
    CHECK(!res.empty());
    CHECK(max_residual(res) < 1e-9);
    CHECK(m.gens().measured_c == doctest::Approx(3.0).epsilon(1e-12));
    CHECK(m.gens().c == 3);
  }
}

TEST_CASE("exact central charge on the NS vacuum") {
  const auto ec = exact_central_charge_fermionic(build_su2());
  CHECK(ec.formula == 3);
  CHECK(ec.from_g == 3);
  CHECK(ec.from_l == 3);
}

TEST_CASE("Ramond lowest energy of the fermionic pair is 3/16") {
  const LoopModel m = fermionic_pair_model(FermionSector{Sector::R, ZeroModeVariant::plus}, HalfInt(3));
  CHECK(m.gens().h == Rational(3, 16));
}

TEST_CASE("Q^2 = L_0 - c/24 on loop models") {
  for (int d : {2, 3}) {
    const LoopModel m = loop_model(d, 3);
    const auto id = supercharge_identity(m.gens());
    CHECK(id.residual < 1e-10);
  }
}

TEST_CASE("PBW realization at level 1 and spin 1/2") {
  const LoopModel m = pbw_model(1, 1, FermionSector{Sector::NS, ZeroModeVariant::unique}, HalfInt(3));
  CHECK(m.gens().c == Rational(5, 2));
  const auto res = verify_svir_relations(m.gens(), default_svir_samples(m.gens(), HalfInt(1)));
  CHECK(max_residual(res) < 1e-9);
}

TEST_CASE("derivation identities on the loop model") {
  const LoopModel m = loop_model(3, 4);
  const auto r = susy_relation_report(m.sugawara, test_function(0.05));
  REQUIRE(r.size() == 4);
  CHECK(r[0].residual < 1e-6);  // [Q, F(f)]_+ = J(f) / sqrt(khat)
  CHECK(r[1].residual < 1e-6);  // [Q, J(f)] = i sqrt(khat) F(f')
  CHECK(r[3].residual < 1e-6);  // exponential with the sign implied by [Q, J(f)]
  // the literal sign is off by 2 sqrt(khat) F(f') e^{iJ(f)}, far above the truncation tail
  CHECK(r[2].residual > 100 * r[3].residual);
  CHECK(weyl_tail(m.sugawara, test_function(0.05)) < 1e-4);
}

TEST_CASE("linear energy bound ratio is finite") {
  const LoopModel m = loop_model(2, 3);
  TrigPoly f = TrigPoly::single(0, HalfInt(1), 1.0).add(0, HalfInt(-1), 1.0);
  const double r = leb_ratio(m.sugawara, f);
  CHECK(std::isfinite(r));
  CHECK(r > 0.0);
  CHECK(r < 10.0);
}

TEST_CASE("Weyl exponential is unitary") {
  const LoopModel m = loop_model(2, 3);
  const Mat v = weyl_exponential(Mat(m.fields().smeared_current(test_function(0.3))));
  CHECK((v.adjoint() * v - Mat::Identity(v.rows(), v.cols())).norm() < 1e-10);
  CHECK_THROWS_AS(weyl_exponential(Mat::Constant(2, 2, cplx(0, 1))), Error);
}
