#include "ncdeg/cli/commands.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace ncdeg::cli {

namespace {

std::string fmt(const char* spec, double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), spec, v);
  return buf;
}

std::string fmt6(double v) { return fmt("%.6f", v); }
std::string fmt2(double v) { return fmt("%.2f", v); }

std::string config_fingerprint(const OptimizerConfig& c, BoundDirection direction, int modes) {
  std::ostringstream out;
  out << c.n_starts << ':' << c.max_iterations << ':' << fmt("%.17g", c.simplex_tolerance) << ':'
      << c.seed << ':' << fmt("%.17g", c.init_radius) << ':' << (c.heuristic_line_init ? 1 : 0)
      << ':' << fmt("%.17g", c.penalty_value) << ':' << to_string(direction) << ':' << modes;
  return out.str();
}

void check_nesting(const std::vector<TableRow>& rows, BoundDirection direction) {
  for (std::size_t i = 1; i < rows.size(); ++i) {
    if (!rows[i].bound || !rows[i - 1].bound) continue;
    const bool ok = direction == BoundDirection::Inf
                        ? *rows[i].bound <= *rows[i - 1].bound + 1e-12
                        : *rows[i].bound >= *rows[i - 1].bound - 1e-12;
    if (!ok)
      throw NonMonotoneFamilyError("bound family violates nesting monotonicity; output aborted");
  }
}

std::string render_table(const Manifest& manifest, const std::vector<TableRow>& rows,
                         const std::string& format, bool with_param) {
  if (format == "json") {
    json doc{{"schema_version", 1}, {"manifest", manifest.to_json()}};
    json out_rows = json::array();
    for (const auto& row : rows) {
      json node{{"r", row.r}, {"status", row.status}};
      if (with_param) node["param"] = row.param;
      node["bound"] = row.bound ? json(*row.bound) : json(nullptr);
      if (!with_param) node["squeezing_db"] = row.db ? json(*row.db) : json(nullptr);
      out_rows.push_back(std::move(node));
    }
    doc["rows"] = std::move(out_rows);
    return doc.dump(2) + "\n";
  }
  if (format != "csv") throw InvalidInputError("unknown output format: " + format);
  std::ostringstream out;
  out << manifest.csv_comment() << '\n';
  if (with_param) {
    out << "param,r,bound,status\n";
    for (const auto& row : rows)
      out << fmt6(row.param) << ',' << row.r << ',' << (row.bound ? fmt6(*row.bound) : "") << ','
          << row.status << '\n';
  } else {
    out << "r,bound,squeezing_db,status\n";
    for (const auto& row : rows)
      out << row.r << ',' << (row.bound ? fmt6(*row.bound) : "") << ','
          << (row.db ? fmt2(*row.db) : "") << ',' << row.status << '\n';
  }
  return out.str();
}

std::string error_label(const Error& e) {
  if (dynamic_cast<const UnboundedDirectionError*>(&e)) return "error:unbounded-direction";
  if (dynamic_cast<const DegenerateConfigurationError*>(&e)) return "error:degenerate-configuration";
  if (dynamic_cast<const ConditioningError*>(&e)) return "error:conditioning";
  return "error:optimizer";
}

}  // namespace

std::string Manifest::csv_comment() const {
  std::ostringstream out;
  out << "# ncdegree " << command << " schema=1 seed=" << config.seed
      << " starts=" << config.n_starts << " max_iterations=" << config.max_iterations
      << " init_radius=" << fmt("%.17g", config.init_radius)
      << " line_init=" << (config.heuristic_line_init ? 1 : 0) << " spec=" << spec;
  return out.str();
}

json Manifest::to_json() const {
  return json{{"command", command},
              {"spec", spec},
              {"seed", config.seed},
              {"starts", config.n_starts},
              {"max_iterations", config.max_iterations},
              {"simplex_tolerance", config.simplex_tolerance},
              {"init_radius", config.init_radius},
              {"heuristic_line_init", config.heuristic_line_init},
              {"penalty_value", config.penalty_value}};
}

TableOutcome cmd_table1(int max_r, const OptimizerConfig& config, const std::string& format) {
  if (max_r < 1 || max_r > 9) throw InvalidInputError("table1: max_r must lie in 1..9");
  const Observable quad = builtin_quadrature_observable();
  Manifest manifest{"table1", "builtin", config};

  TableOutcome outcome;
  for (int r = 1; r <= max_r; ++r) {
    TableRow row;
    row.r = r;
    try {
      BoundResult result = optimize_bound(quad, r, 1, BoundDirection::Inf, config);
      row.bound = result.bound;
      row.db = squeezing_db(result.bound);
      outcome.results.push_back(std::move(result));
      outcome.rows.push_back(row);
    } catch (const Error& e) {
      row.status = error_label(e);
      outcome.rows.push_back(row);
      break;  // partial output with a trailing error row
    }
  }
  check_nesting(outcome.rows, BoundDirection::Inf);
  outcome.text = render_table(manifest, outcome.rows, format, /*with_param=*/false);
  return outcome;
}

TableOutcome cmd_pure_bound(const json& state_spec, const std::vector<int>& r_list,
                            const std::optional<SweepSpec>& sweep, const OptimizerConfig& config,
                            const std::string& format, const std::string& spec_name) {
  if (r_list.empty()) throw InvalidInputError("pure-bound: need at least one r");
  const std::string type = state_spec.value("type", "");

  std::vector<double> grid;
  if (sweep) {
    if (type != "compass" && type != "squeezed")
      throw InvalidInputError("pure-bound: --sweep applies only to compass or squeezed specs");
    if (sweep->points < 1) throw InvalidInputError("pure-bound: sweep needs >= 1 points");
    for (int i = 0; i < sweep->points; ++i) {
      const double t = sweep->points == 1
                           ? 0.0
                           : static_cast<double>(i) / static_cast<double>(sweep->points - 1);
      grid.push_back(sweep->from + t * (sweep->to - sweep->from));
    }
  } else {
    double param = 0.0;
    if (type == "compass") param = state_spec.value("beta", 0.0);
    if (type == "squeezed" && state_spec.contains("xi"))
      param = std::abs(Complex(state_spec.at("xi").value("re", 0.0),
                               state_spec.at("xi").value("im", 0.0)));
    grid.push_back(param);
  }

  Manifest manifest{"pure-bound", spec_name, config};
  TableOutcome outcome;
  for (const double param : grid) {
    json spec = state_spec;
    if (sweep) {
      if (type == "compass") {
        spec["beta"] = param;
      } else {
        const double arg = std::arg(Complex(state_spec.at("xi").value("re", 0.0),
                                            state_spec.at("xi").value("im", 0.0)));
        spec["xi"] = json{{"re", param * std::cos(arg)}, {"im", param * std::sin(arg)}};
      }
    }
    // xi = 0 degenerates the squeezed spec to vacuum; beta = 0 makes compass
    // components coincide, so nudge the sweep off exact zero.
    if (sweep && type == "compass" && param <= 0.0)
      throw InvalidInputError("pure-bound: compass sweep requires beta > 0");
    const StateModel state = parse_state(spec);
    for (const int r : r_list) {
      if (r < 1) throw InvalidInputError("pure-bound: r must be >= 1");
      TableRow row;
      row.r = r;
      row.param = param;
      try {
        BoundResult result = pure_state_bound(state, r, config);
        row.bound = result.bound;
        outcome.results.push_back(std::move(result));
      } catch (const Error& e) {
        row.status = error_label(e);
      }
      outcome.rows.push_back(row);
    }
  }
  // Nesting check applies within one parameter value across ascending r.
  if (r_list.size() > 1 && std::is_sorted(r_list.begin(), r_list.end())) {
    for (std::size_t base = 0; base + r_list.size() <= outcome.rows.size();
         base += r_list.size()) {
      std::vector<TableRow> family(outcome.rows.begin() + static_cast<std::ptrdiff_t>(base),
                                   outcome.rows.begin() +
                                       static_cast<std::ptrdiff_t>(base + r_list.size()));
      check_nesting(family, BoundDirection::Sup);
    }
  }
  outcome.text = render_table(manifest, outcome.rows, format, /*with_param=*/true);
  return outcome;
}

json cmd_bound(const Observable& obs, int r, int modes, BoundDirection direction,
               const OptimizerConfig& config, const Manifest& manifest) {
  const BoundResult result = optimize_bound(obs, r, modes, direction, config);
  json doc{{"schema_version", 1},
           {"manifest", manifest.to_json()},
           {"observable", observable_to_json(obs)},
           {"result", bound_result_to_json(result)}};
  if (result.bound > 0.0) doc["result"]["squeezing_db"] = squeezing_db(result.bound);
  return doc;
}

std::vector<BoundResult> family_bounds(const Observable& obs, int max_r,
                                       BoundDirection direction, const OptimizerConfig& config,
                                       const CacheOptions& cache) {
  namespace fs = std::filesystem;
  std::vector<BoundResult> family;
  fs::path cache_file;
  json cached_rows = json::array();

  if (!cache.dir.empty()) {
    const std::string obs_hash = content_hash(observable_to_json(obs).dump());
    const std::string conf_hash =
        content_hash(config_fingerprint(config, direction, obs.modes()));
    cache_file = fs::path(cache.dir) / ("bounds-" + obs_hash + "-" + conf_hash + ".json");
    if (fs::exists(cache_file)) {
      std::ifstream in(cache_file);
      json doc;
      try {
        in >> doc;
        cached_rows = doc.value("rows", json::array());
      } catch (const json::parse_error&) {
        cached_rows = json::array();  // stale cache; recompute
      }
    }
  }

  bool computed_any = false;
  for (int r = 1; r <= max_r; ++r) {
    const json* hit = nullptr;
    for (const auto& row : cached_rows)
      if (row.value("r", 0) == r) hit = &row;
    if (hit) {
      family.push_back(bound_result_from_json(*hit));
      continue;
    }
    if (cache.no_recompute)
      throw InvalidInputError("bounds for r=" + std::to_string(r) +
                              " missing from cache and --no-recompute given");
    family.push_back(optimize_bound(obs, r, obs.modes(), direction, config));
    computed_any = true;
  }

  if (computed_any && !cache.dir.empty()) {
    fs::create_directories(cache_file.parent_path());
    json rows = json::array();
    for (const auto& result : family) rows.push_back(bound_result_to_json(result));
    json doc{{"schema_version", 1}, {"rows", rows}};
    std::ofstream out(cache_file);
    out << doc.dump(2) << '\n';
  }
  return family;
}

json cmd_certify(const Observable& obs, double measured, bool measured_is_db, int max_r,
                 BoundDirection direction, const OptimizerConfig& config,
                 const CacheOptions& cache, const Manifest& manifest) {
  const double value = measured_is_db ? variance_from_db(measured) : measured;

  const std::vector<BoundResult> family = family_bounds(obs, max_r, direction, config, cache);
  std::vector<Witness> witnesses;
  witnesses.reserve(family.size());
  for (const auto& result : family)
    witnesses.push_back(Witness{obs, result.r, result.modes, direction, result.bound, result});

  const CertificationResult cert = certify(witnesses, value);

  json bounds = json::array();
  for (const auto& w : witnesses) {
    json row{{"r", w.r}, {"bound", w.bound}};
    row["db"] = w.bound > 0.0 ? json(squeezing_db(w.bound)) : json(nullptr);
    bounds.push_back(std::move(row));
  }
  return json{{"schema_version", 1},
              {"manifest", manifest.to_json()},
              {"observable", observable_to_json(obs)},
              {"direction", to_string(direction)},
              {"bounds", bounds},
              {"measured", value},
              {"violated_r", cert.violated_r},
              {"statement", cert.certified_statement},
              {"margin", cert.margin}};
}

}  // namespace ncdeg::cli
