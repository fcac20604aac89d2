#include "report.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

using namespace svirlab;
using namespace svirlab::cli;

namespace {

struct RawFlags {
  std::string sector = "r", variant = "plus", cutoff, format = "json", c, h;
  double tol = 0.0;
};

void add_flags(CLI::App* sub, ExperimentConfig& cfg, RawFlags& raw) {
  sub->add_option("--group", cfg.group, "su2 or u1 (default: su2 for d = 3, u1 otherwise)");
  sub->add_option("--level", cfg.level, "level l (fusion: level k)");
  sub->add_option("--d", cfg.d, "number of fermions / dim g");
  sub->add_option("--sector", raw.sector, "ns or r");
  sub->add_option("--variant", raw.variant, "zero-mode variant for R with odd d: plus or minus");
  sub->add_option("--realization", cfg.realization, "d = 3 bosonic part: pbw or fermionic");
  sub->add_option("--cutoff", raw.cutoff, "energy cutoff (half-integer)");
  sub->add_option("--kmax", cfg.kmax, "maximal pairing order");
  sub->add_option("--nmax", cfg.nmax, "maximal JLO degree for growth diagnostics");
  sub->add_option("--tol", raw.tol, "override the gate tolerances");
  sub->add_option("--seed", cfg.seed, "seed recorded in the report");
  sub->add_option("--out", cfg.out, "output file (default: stdout)");
  sub->add_option("--format", raw.format, "json or csv (plot data)");
  sub->add_option("--c", raw.c, "central charge of an abstract super-Virasoro module, e.g. 1");
  sub->add_option("--h", raw.h, "lowest energy of the abstract module, e.g. 1/24");
  sub->add_option("--coset", cfg.coset, "fusion: su2_4-in-su2_2xsu2_2");
}

void finish(ExperimentConfig& cfg, const RawFlags& raw) {
  try {
    cfg.sector = parse_sector(raw.sector);
    cfg.variant = parse_variant(raw.variant);
    if (!raw.cutoff.empty()) cfg.cutoff = HalfInt::parse(raw.cutoff);
    if (!raw.c.empty()) cfg.c = parse_rational(raw.c);
    if (!raw.h.empty()) cfg.h = parse_rational(raw.h);
  } catch (const Error& e) {
    throw ConfigError(e.what());
  }
  if (raw.tol != 0.0) cfg.tol = raw.tol;
  if (raw.format == "json")
    cfg.format = Format::json;
  else if (raw.format == "csv")
    cfg.format = Format::csv;
  else
    throw ConfigError("--format must be json or csv");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"svirlab: super-Virasoro modules, supercharges, JLO pairings and fusion rules at finite truncation"};
  ExperimentConfig cfg;
  RawFlags raw;
  app.set_help_flag("--help", "print this help");  // frees -h / --h for the lowest energy
  const std::pair<const char*, const char*> commands[] = {
      {"svir-check", "super-Virasoro relation residuals and central charge"},
      {"supercharge", "Q spectrum and the Q^2 = L_0 - c/24 identity"},
      {"index", "zero-mode dimensions, graded and odd indices with gaps"},
      {"jlo", "JLO pairing series (even on graded triples, odd on the shift ladder)"},
      {"shift", "spectrum shift unitary: ladder eigenvectors, commutator, index"},
      {"fusion", "S-matrix, Verlinde fusion, coset sectors and pairing tables"},
      {"characters", "fermion characters against the Fock space, heat traces"}};
  for (const auto& [name, help] : commands) {
    auto* sub = app.add_subcommand(name, help);
    add_flags(sub, cfg, raw);
    sub->callback([&cfg, name] { cfg.command = name; });
  }
  app.set_help_all_flag("--help-all");
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  if (cfg.command.empty()) {
    std::cerr << app.help();
    return 2;
  }

  Report report;
  try {
    finish(cfg, raw);
    validate(cfg);
    report = run(cfg);
  } catch (const ConfigError& e) {
    std::cerr << "invalid config: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    if (e.code() == ErrorCode::invalid_argument || e.code() == ErrorCode::unsupported) {
      std::cerr << "invalid config: " << e.what() << '\n';
      return 2;
    }
    std::cerr << "check failed: " << e.what() << '\n';
    return 1;
  }

  std::ofstream file;
  if (!cfg.out.empty()) {
    file.open(cfg.out);
    if (!file) {
      std::cerr << "cannot write " << cfg.out << '\n';
      return 2;
    }
  }
  std::ostream& os = cfg.out.empty() ? std::cout : file;
  if (cfg.format == Format::json)
    os << to_json(report).dump(2) << '\n';
  else
    emit_plot_data(report, os);

  if (const CheckResult* f = report.first_failure()) {
    std::cerr << "gate failed: " << f->check << '\n';
    return 1;
  }
  return 0;
}
