#include "report.hpp"

#include <doctest.h>

#include <sstream>

using namespace svirlab;
using namespace svirlab::cli;

namespace {

ExperimentConfig config(const std::string& cmd) {
  ExperimentConfig c;
  c.command = cmd;
  return c;
}

}  // namespace

TEST_CASE("configuration is validated before computing") {
  auto c = config("");
  CHECK_THROWS_AS(validate(c), ConfigError);
  c = config("nope");
  CHECK_THROWS_AS(validate(c), ConfigError);
  c = config("index");
  c.d = 5;
  CHECK_THROWS_AS(validate(c), ConfigError);
  c = config("index");
  c.sector = Sector::NS;
  CHECK_THROWS_AS(validate(c), ConfigError);
  c = config("supercharge");
  c.c = Rational(1);
  CHECK_THROWS_AS(validate(c), ConfigError);  // --h missing
  c.h = Rational(1, 48);
  CHECK_THROWS_AS(validate(c), ConfigError);  // below c/24
  c = config("fusion");
  c.coset = "su2_1-in-su2_1";
  CHECK_THROWS_AS(validate(c), ConfigError);
  c = config("index");
  c.d = 2;
  validate(c);
  CHECK(c.group == "u1");
}

TEST_CASE("fusion report carries the golden set and the schema") {
  auto c = config("fusion");
  c.coset = "su2_4-in-su2_2xsu2_2";
  validate(c);
  const Report r = run(c);
  CHECK(r.all_pass());
  const auto j = to_json(r);
  CHECK(j["schema_version"] == kSchemaVersion);
  CHECK(j["config"]["coset"] == c.coset);
  bool found = false;
  for (const auto& x : j["results"]) {
    CHECK(x.contains("check"));
    CHECK(x.contains("value"));
    CHECK(x.contains("target"));
    CHECK(x.contains("gap"));
    CHECK(x.contains("pass"));
    if (x["check"] == "disjointness_filter") {
      found = true;
      CHECK(x["value"].size() == 8);
    }
  }
  CHECK(found);
}

TEST_CASE("supercharge on the c = 1 module reports index 1 with its gap") {
  auto c = config("supercharge");
  c.c = Rational(1);
  c.h = Rational(1, 24);
  c.cutoff = HalfInt(6);
  validate(c);
  const Report r = run(c);
  CHECK(exit_code(r) == 0);
  const CheckResult* idx = nullptr;
  for (const auto& x : r.results)
    if (x.check == "index") idx = &x;
  REQUIRE(idx != nullptr);
  CHECK(idx->value == 1);
  REQUIRE(idx->gap.has_value());
  CHECK(*idx->gap > 0.5);
}

TEST_CASE("plot data") {
  Report empty;
  std::ostringstream os;
  emit_plot_data(empty, os);
  CHECK(os.str().empty());

  auto c = config("characters");
  c.d = 2;
  validate(c);
  const Report r = run(c);
  CHECK(r.all_pass());
  std::ostringstream heat;
  emit_plot_data(r, heat);
  CHECK(heat.str().rfind("t,str_exp_tQ2\n", 0) == 0);
  // McKean-Singer: constant series
  REQUIRE(r.series.size() == 1);
  for (const auto& [t, h] : r.series[0].points) CHECK(std::abs(h - r.series[0].points[0].second) < 1e-8);
}

TEST_CASE("shift eigenvalues follow sqrt(lambda0^2 + n)") {
  auto c = config("shift");
  validate(c);
  const Report r = run(c);
  CHECK(exit_code(r) == 1);  // the commutator bound fails at the crossing
  CHECK(r.first_failure()->check == "commutator_norm");
  REQUIRE(!r.series.empty());
  for (const auto& [n, l] : r.series[0].points) {
    const double want = (n < 0 ? -1.0 : 1.0) * std::sqrt(0.0625 + std::abs(n));
    CHECK(l == doctest::Approx(want).epsilon(1e-9));
  }
}

TEST_CASE("reports are deterministic") {
  auto c = config("jlo");
  c.d = 2;
  validate(c);
  const auto a = to_json(run(c)).dump();
  const auto b = to_json(run(c)).dump();
  CHECK(a == b);
}
