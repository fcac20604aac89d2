#pragma once

#include "svirlab/types.hpp"

#include <json.hpp>

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace svirlab::cli {

inline constexpr int kSchemaVersion = 1;

enum class Format { json, csv };

struct ExperimentConfig {
  std::string command;
  std::string group;  // su2 or u1; empty: inferred from d (d = 3 -> su2, otherwise u1)
  int level = 2;
  int d = 3;
  Sector sector = Sector::R;
  ZeroModeVariant variant = ZeroModeVariant::plus;
  std::string realization = "pbw";  // d = 3 bosonic part: pbw or fermionic (level 2 only)
  HalfInt cutoff = HalfInt(3);
  int kmax = 8;
  int nmax = 8;
  std::optional<double> tol;
  std::uint64_t seed = 1;
  std::string out;
  Format format = Format::json;
  std::optional<Rational> c, h;  // abstract super-Virasoro module
  std::string coset;
};

// Thrown for configurations rejected before any computation (exit code 2).
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void validate(ExperimentConfig& cfg);

struct CheckResult {
  std::string check;
  nlohmann::json value;
  nlohmann::json target;  // null when the check is a bound
  std::optional<double> gap;
  bool pass = false;
};

struct Series {
  std::string name;
  std::string x, y;
  std::vector<std::pair<double, double>> points;
};

struct Report {
  ExperimentConfig config;
  std::vector<CheckResult> results;
  std::vector<Series> series;
  nlohmann::json data = nlohmann::json::object();

  bool all_pass() const;
  const CheckResult* first_failure() const;
};

Report run(const ExperimentConfig& cfg);

nlohmann::json config_json(const ExperimentConfig& cfg);
nlohmann::json to_json(const Report& r);
// Every series as two-column CSV blocks separated by a blank line; nothing at all for an empty report.
void emit_plot_data(const Report& r, std::ostream& os);

// 0 all gated checks pass, 1 otherwise
int exit_code(const Report& r);

}  // namespace svirlab::cli
