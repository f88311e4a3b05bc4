#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include <nlohmann/json.hpp>

#include "ncdeg/cli/commands.hpp"
#include "test_support.hpp"

using namespace ncdeg;
using namespace ncdeg::cli;

namespace {

namespace fs = std::filesystem;

OptimizerConfig quick_config() {
  OptimizerConfig c;
  c.n_starts = 8;
  return c;
}

fs::path fresh_dir(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("ncdeg-test-" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

int run_cli(const std::string& args) {
  const std::string command = std::string(NCDEG_CLI_BINARY) + " " + args + " >/dev/null 2>&1";
  const int status = std::system(command.c_str());
  return WEXITSTATUS(status);
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("observable spec round trip") {
  const Observable quad = builtin_quadrature_observable();
  const json spec = observable_to_json(quad);
  const Observable parsed = parse_observable(spec);
  REQUIRE(parsed.is_polynomial());
  CVector alpha(1);
  alpha[0] = Complex(0.4, -0.7);
  CHECK(std::abs(parsed.poly().symbol(alpha, alpha) - quad.poly().symbol(alpha, alpha)) < 1e-15);
}

TEST_CASE("state spec parsing for every variant") {
  const StateModel squeezed = parse_state(json{{"type", "squeezed"}, {"xi", {{"re", 0.5}, {"im", 0.2}}}});
  CHECK(squeezed.is_squeezed());

  const StateModel compass = parse_state(json{{"type", "compass"}, {"R", 4}, {"beta", 2.0}});
  REQUIRE(compass.is_superposition());
  CHECK(compass.superposition().component_count() == 4);

  const StateModel fock = parse_state(json{
      {"type", "fock"},
      {"coefficients", json::array({json{{"re", 1.0}, {"im", 0.0}}, json{{"re", 0.0}, {"im", 1.0}}})}});
  CHECK(fock.is_fock());

  const json super{{"type", "superposition"},
                   {"modes", 1},
                   {"components", json::array({json{{"coefficient", {{"re", 1.0}, {"im", 0.0}}},
                                                    {"amplitude", json::array({json{{"re", 1.0}, {"im", 0.0}}})}},
                                               json{{"coefficient", {{"re", 1.0}, {"im", 0.0}}},
                                                    {"amplitude", json::array({json{{"re", -1.0}, {"im", 0.0}}})}}})}};
  const StateModel cat = parse_state(super);
  REQUIRE(cat.is_superposition());
  CHECK(cat.superposition().component_count() == 2);

  CHECK_THROWS_AS(parse_state(json{{"type", "thermal"}}), InvalidInputError);
  CHECK_THROWS_AS(parse_state(json{{"no_type", 1}}), InvalidInputError);
  CHECK_THROWS_AS(parse_observable(json{{"type", "polynomial"}, {"modes", 1}}), InvalidInputError);
}

TEST_CASE("table1 output shape and determinism") {
  const TableOutcome a = cmd_table1(1, quick_config(), "csv");
  CHECK(a.rows.size() == 1);
  CHECK(a.text.find("r,bound,squeezing_db,status") != std::string::npos);
  CHECK(a.text.find("1,1.000000,0.00,ok") != std::string::npos);

  const TableOutcome b = cmd_table1(1, quick_config(), "csv");
  CHECK(a.text == b.text);

  CHECK_THROWS_AS(cmd_table1(10, quick_config(), "csv"), InvalidInputError);
  CHECK_THROWS_AS(cmd_table1(0, quick_config(), "csv"), InvalidInputError);
}

TEST_CASE("table1 json format carries the manifest seed") {
  OptimizerConfig config = quick_config();
  config.seed = 777;
  const TableOutcome outcome = cmd_table1(1, config, "json");
  const json doc = json::parse(outcome.text);
  CHECK(doc.at("schema_version") == 1);
  CHECK(doc.at("manifest").at("seed") == 777);
  CHECK(doc.at("rows").size() == 1);
}

TEST_CASE("pure-bound sweep over the squeezing magnitude") {
  const json spec{{"type", "squeezed"}, {"xi", {{"re", 0.4}, {"im", 0.0}}}};
  SweepSpec sweep{0.2, 0.8, 3};
  const TableOutcome outcome =
      cmd_pure_bound(spec, {1}, sweep, quick_config(), "csv", "inline");
  REQUIRE(outcome.rows.size() == 3);
  // stronger squeezing -> smaller projection onto single coherent states
  REQUIRE(outcome.rows[0].bound.has_value());
  REQUIRE(outcome.rows[2].bound.has_value());
  CHECK(*outcome.rows[0].bound > *outcome.rows[2].bound);
  CHECK(*outcome.rows[0].bound < 1.0);  // strictly below 1 for any |xi| > 0
  CHECK(outcome.rows[0].param == doctest::Approx(0.2));
  CHECK(outcome.rows[2].param == doctest::Approx(0.8));
}

TEST_CASE("pure-bound rejects sweeps on states without a parameter") {
  const json spec{{"type", "fock"},
                  {"coefficients", json::array({json{{"re", 1.0}, {"im", 0.0}}})}};
  SweepSpec sweep{0.1, 0.5, 2};
  CHECK_THROWS_AS(cmd_pure_bound(spec, {1}, sweep, quick_config(), "csv", "inline"),
                  InvalidInputError);
}

TEST_CASE("bound report carries result and diagnostics") {
  Manifest manifest{"bound", "builtin", quick_config()};
  const json doc = cmd_bound(builtin_quadrature_observable(), 1, 1, BoundDirection::Inf,
                             quick_config(), manifest);
  CHECK(doc.at("schema_version") == 1);
  CHECK(std::abs(doc.at("result").at("bound").get<double>() - 1.0) < 1e-9);
  CHECK(doc.at("result").at("effective_rank") == 1);
  CHECK(doc.at("result").contains("stationarity"));
  CHECK(doc.at("manifest").at("command") == "bound");
}

TEST_CASE("certify report carries the schema fields") {
  Manifest manifest{"certify", "builtin", quick_config()};
  const json doc = cmd_certify(builtin_quadrature_observable(), 3.6, /*is_db=*/true, 2,
                               BoundDirection::Inf, quick_config(), {}, manifest);
  const json again = cmd_certify(builtin_quadrature_observable(), 3.6, true, 2,
                                 BoundDirection::Inf, quick_config(), {}, manifest);
  CHECK(doc.dump() == again.dump());
  CHECK(doc.at("schema_version") == 1);
  CHECK(doc.at("direction") == "inf");
  CHECK(doc.at("bounds").size() == 2);
  CHECK(doc.at("violated_r") == json::array({1, 2}));
  CHECK(std::abs(doc.at("measured").get<double>() - std::pow(10.0, -0.36)) < 1e-12);
  CHECK(doc.at("statement").get<std::string>().find("D_Ncl > 2") != std::string::npos);
  CHECK(doc.at("observable").at("type") == "polynomial");
}

TEST_CASE("bound family cache round trip") {
  const fs::path dir = fresh_dir("cache");
  CacheOptions cache{dir.string(), false};
  const Observable quad = builtin_quadrature_observable();

  const auto computed = family_bounds(quad, 2, BoundDirection::Inf, quick_config(), cache);
  REQUIRE(computed.size() == 2);

  // second pass must hit the cache file; forbid recomputation to prove it
  CacheOptions frozen{dir.string(), true};
  const auto cached = family_bounds(quad, 2, BoundDirection::Inf, quick_config(), frozen);
  REQUIRE(cached.size() == 2);
  CHECK(cached[0].bound == computed[0].bound);
  CHECK(cached[1].bound == computed[1].bound);

  // a bigger family is missing rows under --no-recompute
  CHECK_THROWS_AS(family_bounds(quad, 3, BoundDirection::Inf, quick_config(), frozen),
                  InvalidInputError);

  // a different config hashes to a different family
  OptimizerConfig other = quick_config();
  other.seed = 5;
  CHECK_THROWS_AS(family_bounds(quad, 2, BoundDirection::Inf, other, frozen), InvalidInputError);
}

TEST_CASE("binary exit codes") {
  const fs::path dir = fresh_dir("cli-bin");

  CHECK(run_cli("table1 --max-r 1 --starts 4") == 0);
  CHECK(run_cli("table1 --max-r 12") == 2);
  CHECK(run_cli("certify --max-r 1 --starts 4") == 2);   // neither --db nor --value
  CHECK(run_cli("nonsense") == 2);

  // unbounded direction of the built-in observable
  const fs::path spec = dir / "quad.json";
  {
    std::ofstream out(spec);
    out << observable_to_json(builtin_quadrature_observable()).dump();
  }
  CHECK(run_cli("bound --spec " + spec.string() + " --r 2 --direction sup --starts 4") == 4);
  CHECK(run_cli("bound --spec " + spec.string() + " --r 1 --direction inf --starts 4") == 0);
  CHECK(run_cli("bound --spec /nonexistent.json --r 1") == 2);
}

TEST_CASE("binary honors NCDEGREE_CACHE_DIR") {
  const fs::path dir = fresh_dir("cli-cache-env");
  const std::string env = "NCDEGREE_CACHE_DIR=" + dir.string() + " ";
  const std::string base = env + std::string(NCDEG_CLI_BINARY) +
                           " certify --db 3.6 --max-r 2 --starts 4 >/dev/null 2>&1";
  REQUIRE(WEXITSTATUS(std::system(base.c_str())) == 0);
  CHECK(!fs::is_empty(dir));
  // now the family must be served from the cache
  const std::string frozen = env + std::string(NCDEG_CLI_BINARY) +
                             " certify --db 3.6 --max-r 2 --starts 4 --no-recompute >/dev/null 2>&1";
  CHECK(WEXITSTATUS(std::system(frozen.c_str())) == 0);
  // deeper families are missing, so --no-recompute must refuse
  const std::string deeper = env + std::string(NCDEG_CLI_BINARY) +
                             " certify --db 3.6 --max-r 3 --starts 4 --no-recompute >/dev/null 2>&1";
  CHECK(WEXITSTATUS(std::system(deeper.c_str())) == 2);
}

TEST_CASE("binary output files are reproducible byte for byte") {
  const fs::path dir = fresh_dir("cli-repro");
  const fs::path out1 = dir / "a.csv";
  const fs::path out2 = dir / "b.csv";
  REQUIRE(run_cli("table1 --max-r 2 --starts 6 --seed 3 --out " + out1.string()) == 0);
  REQUIRE(run_cli("table1 --max-r 2 --starts 6 --seed 3 --out " + out2.string()) == 0);
  std::ifstream f1(out1), f2(out2);
  const std::string s1((std::istreambuf_iterator<char>(f1)), std::istreambuf_iterator<char>());
  const std::string s2((std::istreambuf_iterator<char>(f2)), std::istreambuf_iterator<char>());
  CHECK(s1 == s2);
  CHECK(!s1.empty());
  CHECK(s1.find("seed=3") != std::string::npos);
}

}  // TEST_SUITE
