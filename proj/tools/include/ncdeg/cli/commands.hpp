#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ncdeg/cli/spec_io.hpp"
#include "ncdeg/witness.hpp"

namespace ncdeg::cli {

/// Echo of a run's inputs, recorded in every output for reproducibility.
struct Manifest {
  std::string command;
  std::string spec = "builtin";  ///< spec path, or "builtin" for the default observable
  OptimizerConfig config;

  std::string csv_comment() const;
  json to_json() const;
};

struct SweepSpec {
  double from = 0.0;
  double to = 0.0;
  int points = 1;
};

/// One row of a bound table plus the rendered document.
struct TableRow {
  int r = 0;
  double param = 0.0;
  std::optional<double> bound;
  std::optional<double> db;
  std::string status = "ok";
};

struct TableOutcome {
  std::string text;
  std::vector<TableRow> rows;
  std::vector<BoundResult> results;  ///< full results of the ok rows
};

/// Infimum bounds of the built-in quadrature observable for r = 1..max_r,
/// with the squeezing column. max_r <= 9.
TableOutcome cmd_table1(int max_r, const OptimizerConfig& config, const std::string& format);

/// Pure-state projection bounds of the state spec for every requested r,
/// optionally swept over the state's natural parameter (compass radius beta
/// or squeezing magnitude |xi|).
TableOutcome cmd_pure_bound(const json& state_spec, const std::vector<int>& r_list,
                            const std::optional<SweepSpec>& sweep, const OptimizerConfig& config,
                            const std::string& format, const std::string& spec_name);

/// Generic entry point: one optimized bound, serialized with diagnostics.
json cmd_bound(const Observable& obs, int r, int modes, BoundDirection direction,
               const OptimizerConfig& config, const Manifest& manifest);

struct CacheOptions {
  std::string dir;            ///< empty disables the cache
  bool no_recompute = false;  ///< error instead of computing missing bounds
};

/// Certification report: measured value (raw, or from dB via
/// variance = 10^(-dB/10)) tested against the r = 1..max_r bound family of
/// the observable. Families are cached per (observable, direction, config).
json cmd_certify(const Observable& obs, double measured, bool measured_is_db, int max_r,
                 BoundDirection direction, const OptimizerConfig& config,
                 const CacheOptions& cache, const Manifest& manifest);

/// The bound family used by cmd_certify, cache-aware; exposed for tests.
std::vector<BoundResult> family_bounds(const Observable& obs, int max_r,
                                       BoundDirection direction, const OptimizerConfig& config,
                                       const CacheOptions& cache);

}  // namespace ncdeg::cli
