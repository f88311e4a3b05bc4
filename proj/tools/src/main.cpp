#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "ncdeg/cli/commands.hpp"

namespace {

using namespace ncdeg;
using namespace ncdeg::cli;

void write_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw InvalidInputError("cannot open output file: " + out_path);
  out << text;
}

std::vector<int> parse_r_list(const std::string& text) {
  std::vector<int> rs;
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ',')) {
    try {
      rs.push_back(std::stoi(item));
    } catch (const std::exception&) {
      throw InvalidInputError("--r: expected a comma-separated list of integers");
    }
  }
  if (rs.empty()) throw InvalidInputError("--r: empty list");
  return rs;
}

SweepSpec parse_sweep(const std::string& text) {
  SweepSpec sweep;
  if (std::sscanf(text.c_str(), "%lf:%lf:%d", &sweep.from, &sweep.to, &sweep.points) != 3)
    throw InvalidInputError("--sweep: expected from:to:points");
  return sweep;
}

BoundDirection parse_direction(const std::string& text) {
  if (text == "inf") return BoundDirection::Inf;
  if (text == "sup") return BoundDirection::Sup;
  throw InvalidInputError("--direction: expected inf or sup");
}

struct GlobalOptions {
  std::uint64_t seed = 1;
  int starts = 0;
  int max_iterations = 20000;
  std::string out;
  std::string format = "csv";

  OptimizerConfig config() const {
    OptimizerConfig c;
    c.seed = seed;
    c.n_starts = starts;
    c.max_iterations = max_iterations;
    return c;
  }
};

void add_common(CLI::App* cmd, GlobalOptions& opts, bool default_json = false) {
  cmd->add_option("--seed", opts.seed, "RNG seed recorded in the output");
  cmd->add_option("--starts", opts.starts, "optimizer starts (0 = automatic)");
  cmd->add_option("--max-iterations", opts.max_iterations, "simplex iterations per start");
  cmd->add_option("--out", opts.out, "output path (default: stdout)");
  if (default_json) opts.format = "json";
  cmd->add_option("--format", opts.format, "output format: csv or json");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ncdegree: extremal coherent-superposition bounds and degree-of-nonclassicality witnesses"};
  app.require_subcommand(1);

  // table1
  auto* table1 = app.add_subcommand(
      "table1", "squeezing-bound table of the built-in quadrature observable");
  int max_r = 5;
  table1->add_option("--max-r", max_r, "largest superposition number r (<= 9)");
  GlobalOptions table1_opts;
  add_common(table1, table1_opts);

  // pure-bound
  auto* pure = app.add_subcommand("pure-bound", "pure-state projection bounds b_r");
  std::string pure_spec;
  std::string pure_r = "1";
  std::string pure_sweep;
  pure->add_option("--spec", pure_spec, "state spec file (JSON)")->required();
  pure->add_option("--r", pure_r, "comma-separated list of r values");
  pure->add_option("--sweep", pure_sweep, "parameter sweep from:to:points (beta or |xi|)");
  GlobalOptions pure_opts;
  add_common(pure, pure_opts);

  // bound
  auto* bound = app.add_subcommand("bound", "one optimized bound of an observable spec");
  std::string bound_spec;
  int bound_r = 1;
  int bound_modes = 1;
  std::string bound_direction = "inf";
  bound->add_option("--spec", bound_spec, "observable spec file (JSON)")->required();
  bound->add_option("--r", bound_r, "superposition number r");
  bound->add_option("--modes", bound_modes, "number of modes N");
  bound->add_option("--direction", bound_direction, "inf or sup");
  GlobalOptions bound_opts;
  add_common(bound, bound_opts, /*default_json=*/true);

  // certify
  auto* certify = app.add_subcommand(
      "certify", "certify a degree of nonclassicality from a measured expectation value");
  std::string certify_spec;
  std::optional<double> certify_db;
  std::optional<double> certify_value;
  int certify_max_r = 9;
  std::string certify_direction = "inf";
  bool no_recompute = false;
  certify->add_option("--spec", certify_spec,
                      "observable spec file (default: built-in quadrature)");
  certify->add_option("--db", certify_db, "measured squeezing in dB (variance = 10^(-dB/10))");
  certify->add_option("--value", certify_value, "measured expectation value");
  certify->add_option("--max-r", certify_max_r, "largest r to test");
  certify->add_option("--direction", certify_direction, "inf or sup");
  certify->add_flag("--no-recompute", no_recompute, "fail instead of computing missing bounds");
  GlobalOptions certify_opts;
  add_common(certify, certify_opts, /*default_json=*/true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;  // usage problems are spec errors
  }

  try {
    if (table1->parsed()) {
      const TableOutcome outcome = cmd_table1(max_r, table1_opts.config(), table1_opts.format);
      write_output(outcome.text, table1_opts.out);
      return 0;
    }

    if (pure->parsed()) {
      std::ifstream in(pure_spec);
      if (!in) throw InvalidInputError("cannot open spec file: " + pure_spec);
      nlohmann::json spec;
      try {
        in >> spec;
      } catch (const nlohmann::json::parse_error& e) {
        throw InvalidInputError(std::string("malformed JSON: ") + e.what());
      }
      std::optional<SweepSpec> sweep;
      if (!pure_sweep.empty()) sweep = parse_sweep(pure_sweep);
      const TableOutcome outcome = cmd_pure_bound(spec, parse_r_list(pure_r), sweep,
                                                  pure_opts.config(), pure_opts.format, pure_spec);
      write_output(outcome.text, pure_opts.out);
      return 0;
    }

    if (bound->parsed()) {
      const Observable obs = parse_observable_file(bound_spec);
      Manifest manifest{"bound", bound_spec, bound_opts.config()};
      const nlohmann::json doc = cmd_bound(obs, bound_r, bound_modes,
                                           parse_direction(bound_direction),
                                           bound_opts.config(), manifest);
      write_output(doc.dump(2) + "\n", bound_opts.out);
      return 0;
    }

    if (certify->parsed()) {
      if (certify_db.has_value() == certify_value.has_value())
        throw InvalidInputError("certify: give exactly one of --db or --value");
      const Observable obs = certify_spec.empty() ? builtin_quadrature_observable()
                                                  : parse_observable_file(certify_spec);
      CacheOptions cache;
      if (const char* dir = std::getenv("NCDEGREE_CACHE_DIR")) cache.dir = dir;
      cache.no_recompute = no_recompute;
      Manifest manifest{"certify", certify_spec.empty() ? "builtin" : certify_spec,
                        certify_opts.config()};
      const double measured = certify_db ? *certify_db : *certify_value;
      const nlohmann::json doc =
          cmd_certify(obs, measured, certify_db.has_value(), certify_max_r,
                      parse_direction(certify_direction), certify_opts.config(), cache, manifest);
      write_output(doc.dump(2) + "\n", certify_opts.out);
      return 0;
    }
  } catch (const UnboundedDirectionError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 4;
  } catch (const InvalidInputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  }
  return 0;
}
