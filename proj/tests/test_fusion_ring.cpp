#include "svirlab/fusion_ring.hpp"
#include "svirlab/types.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>

using namespace svirlab;

TEST_CASE("su2_k Verlinde fusion equals the truncated Clebsch-Gordan rule") {
  for (int k : {1, 2, 3, 4, 5}) {
    const auto md = su2_s_matrix(k);
    const auto mc = check_modular(md);
    CHECK(mc.unitarity < 1e-12);
    CHECK(mc.symmetry < 1e-12);
    CHECK(mc.first_row_positive);
    const auto f = verlinde_fusion(md);
    CHECK(f.max_deviation < 1e-9);
    for (int a = 0; a <= k; ++a)
      for (int b = 0; b <= k; ++b)
        for (int c = 0; c <= k; ++c) CHECK(f.at(a, b, c) == oracle::su2_fusion(k, a, b, c));
    const auto fc = check_fusion(f);
    CHECK(fc.unit);
    CHECK(fc.commutative);
    CHECK(fc.associative);
    CHECK(fc.nonnegative);
  }
}

TEST_CASE("quantum dimensions of su2_k are q-integers") {
  const int k = 4;
  const auto md = su2_s_matrix(k);
  for (int a = 0; a <= k; ++a) {
    const double q = std::numbers::pi / (k + 2);
    CHECK(quantum_dimension(md, a) == doctest::Approx(std::sin((a + 1) * q) / std::sin(q)));
  }
  bool closed = false;
  const auto simple = automorphism_sectors(md, verlinde_fusion(md), &closed);
  CHECK(simple == std::vector<int>{0, 4});
  CHECK(closed);
}

TEST_CASE("coset sectors: 13 labels with a resolved fixed point") {
  const CosetData cd = coset_sectors();
  CHECK(cd.sectors.size() == 13);
  const auto mc = check_modular(cd.md);
  CHECK(mc.unitarity < 1e-12);
  CHECK(mc.first_row_positive);
  CHECK(cd.fusion.max_deviation < 1e-9);
  const auto fc = check_fusion(cd.fusion);
  CHECK(fc.associative);
  CHECK(fc.nonnegative);
  // the two fixed-point branches have equal quantum dimension
  const int p = cd.index_of({1, 2, 1, 1}), m = cd.index_of({1, 2, 1, -1});
  REQUIRE(p >= 0);
  REQUIRE(m >= 0);
  CHECK(quantum_dimension(cd.md, p) == doctest::Approx(quantum_dimension(cd.md, m)));
  // orbit lookup ignores the representative
  CHECK(cd.index_of({0, 1, 1, 0}) == cd.index_of({2, 3, 1, 0}));
}

TEST_CASE("golden disjointness set") {
  const CosetData cd = coset_sectors();
  const auto delta = disjointness_filter(cd, ramond_labels());
  const auto want = expected_delta();
  REQUIRE(delta.size() == want.size());
  for (const auto& w : want) CHECK(std::find(delta.begin(), delta.end(), w) != delta.end());
  std::vector<std::string> names;
  for (const auto& s : delta) names.push_back(s.str());
  CHECK(std::find(names.begin(), names.end(), "(231)") != names.end());
  CHECK(std::find(names.begin(), names.end(), "(121)-") != names.end());
}

TEST_CASE("separation table is delta_{rho,id}") {
  const CosetData cd = coset_sectors();
  const auto delta = disjointness_filter(cd, ramond_labels());
  const auto t = pairing_table(cd, delta, ramond_labels(), 1);
  for (std::size_t i = 0; i < delta.size(); ++i) CHECK(t.value[i][0] == (delta[i] == CosetSector{} ? 1 : 0));
  CHECK_THROWS_AS(pairing_table(cd, {}, ramond_labels(), 1), Error);
}

TEST_CASE("level one Spin(d) sectors") {
  std::vector<std::string> labels;
  const auto f2 = spin_level1_fusion(2, &labels);
  CHECK(labels == std::vector<std::string>{"0", "v", "s", "c"});
  CHECK(f2.at(2, 2, 1) == 1);  // s x s = v for d = 2 mod 4
  const auto f4 = spin_level1_fusion(4);
  CHECK(f4.at(2, 2, 0) == 1);  // s x s = 0 for d = 0 mod 4
  CHECK(f4.at(2, 3, 1) == 1);
  for (int d : {2, 4}) {
    const auto f = spin_level1_fusion(d);
    const auto fc = check_fusion(f);
    CHECK(fc.associative);
    const int v = 1 << (d / 2 - 1);
    const auto t = pairing_table(f, labels, v);
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b) CHECK(t.value[a][b] == (a == b ? v : 0));
  }
  CHECK_THROWS_AS(spin_level1_fusion(3), Error);
}
