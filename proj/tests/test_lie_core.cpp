#include "svirlab/lie_core.hpp"
#include "svirlab/qseries.hpp"

#include <doctest.h>

#include <cmath>

using namespace svirlab;

TEST_CASE("su2 structure constants satisfy the exact invariants") {
  const auto g = build_su2();
  CHECK(g.d == 3);
  CHECK(g.h_vee == 2);
  const auto inv = check_invariants(g);
  CHECK(inv.antisymmetric);
  CHECK(inv.jacobi);
  CHECK(inv.normalized);
  // f = sqrt(2) epsilon
  CHECK(g.f(0, 1, 2) == doctest::Approx(std::sqrt(2.0)));
  CHECK(g.f(1, 0, 2) == doctest::Approx(-std::sqrt(2.0)));
  CHECK(g.f(0, 0, 2) == 0.0);
}

TEST_CASE("abelian algebra has vanishing brackets") {
  for (int d : {1, 2, 4}) {
    const auto g = build_abelian(d);
    CHECK(g.abelian());
    CHECK(g.h_vee == 0);
    const auto inv = check_invariants(g);
    CHECK(inv.jacobi);
  }
}

TEST_CASE("conformal dimensions j(j+1)/(l+2)") {
  const auto g = build_su2();
  CHECK(conformal_dimension({0, 1}, g) == 0);
  CHECK(conformal_dimension({1, 1}, g) == Rational(1, 4));
  CHECK(conformal_dimension({1, 2}, g) == Rational(3, 16));
  CHECK(conformal_dimension({2, 2}, g) == Rational(1, 2));
  CHECK(conformal_dimension({2, 4}, g) == Rational(1, 3));
  CHECK_THROWS_AS(conformal_dimension({3, 2}, g), Error);
  CHECK(admissible_weights(2).size() == 3);
}

TEST_CASE("half-integer arithmetic and parsing") {
  CHECK(HalfInt::parse("3/2").twice() == 3);
  CHECK(HalfInt::parse("2").twice() == 4);
  CHECK(HalfInt::parse("-1/2").twice() == -1);
  CHECK_THROWS_AS(HalfInt::parse("1/3"), Error);
  CHECK(floor_cutoff(Sector::R, HalfInt::from_twice(7)) == HalfInt(3));
  CHECK(floor_cutoff(Sector::NS, HalfInt(4)) == HalfInt(4));
  CHECK(parse_rational("1/24") == Rational(1, 24));
}

TEST_CASE("q-series products truncate at the order") {
  auto a = QSeries::constant(1, HalfInt(3));
  a.add(HalfInt(1), 1);  // 1 + q
  auto b = a * a * a;    // 1 + 3q + 3q^2 + q^3
  CHECK(b.coefficient(HalfInt(0)) == 1);
  CHECK(b.coefficient(HalfInt(1)) == 3);
  CHECK(b.coefficient(HalfInt(2)) == 3);
  CHECK(b.coefficient(HalfInt(3)) == 1);
  auto c = b * a;
  CHECK(c.coefficient(HalfInt(3)) == 4);
  CHECK(c.coefficient(HalfInt(4)) == 0);  // beyond the order
  CHECK(b.heat(0.0) == doctest::Approx(8.0));
  CHECK(b.heat(1.0) == doctest::Approx(std::pow(1 + std::exp(-1.0), 3)));
}
