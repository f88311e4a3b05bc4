#include "ncdeg/cli/spec_io.hpp"

#include <fstream>

#include <nlohmann/json.hpp>

namespace ncdeg::cli {

namespace {

Complex parse_complex(const json& node, const char* what) {
  if (!node.is_object() || !node.contains("re") || !node.contains("im"))
    throw InvalidInputError(std::string(what) + ": expected {\"re\": .., \"im\": ..}");
  return {node.at("re").get<double>(), node.at("im").get<double>()};
}

json complex_to_json(const Complex& z) { return json{{"re", z.real()}, {"im", z.imag()}}; }

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInputError("cannot open spec file: " + path);
  json spec;
  try {
    in >> spec;
  } catch (const json::parse_error& e) {
    throw InvalidInputError("malformed JSON in " + path + ": " + e.what());
  }
  return spec;
}

std::string type_of(const json& spec, const char* what) {
  if (!spec.is_object() || !spec.contains("type"))
    throw InvalidInputError(std::string(what) + ": missing \"type\" field");
  return spec.at("type").get<std::string>();
}

}  // namespace

Observable parse_observable(const json& spec) {
  const std::string type = type_of(spec, "observable spec");
  if (type == "polynomial") {
    const int modes = spec.value("modes", 1);
    NormalOrderedPolynomial poly(modes);
    if (!spec.contains("terms") || !spec.at("terms").is_array())
      throw InvalidInputError("polynomial spec: missing \"terms\" array");
    for (const auto& term : spec.at("terms")) {
      const auto m = term.at("m").get<std::vector<int>>();
      const auto n = term.at("n").get<std::vector<int>>();
      const Complex coeff(term.value("re", 0.0), term.value("im", 0.0));
      poly.add_term(LadderMonomial(m, n), coeff);
    }
    return Observable::polynomial(std::move(poly));
  }
  if (type == "projector") {
    if (!spec.contains("state"))
      throw InvalidInputError("projector spec: missing \"state\" field");
    return Observable::projector(parse_state(spec.at("state")));
  }
  throw InvalidInputError("observable spec: unknown type \"" + type + "\"");
}

Observable parse_observable_file(const std::string& path) {
  return parse_observable(load_json_file(path));
}

StateModel parse_state(const json& spec) {
  const std::string type = type_of(spec, "state spec");
  if (type == "superposition") {
    const int modes = spec.value("modes", 1);
    std::vector<CoherentComponent> comps;
    for (const auto& node : spec.at("components")) {
      CoherentComponent c;
      c.coefficient = parse_complex(node.at("coefficient"), "component coefficient");
      const auto& amp = node.at("amplitude");
      if (!amp.is_array())
        throw InvalidInputError("superposition spec: amplitude must be an array");
      c.amplitude.resize(static_cast<Eigen::Index>(amp.size()));
      for (std::size_t m = 0; m < amp.size(); ++m)
        c.amplitude[static_cast<Eigen::Index>(m)] = parse_complex(amp.at(m), "amplitude entry");
      comps.push_back(std::move(c));
    }
    return StateModel(CoherentSuperposition(modes, std::move(comps)));
  }
  if (type == "squeezed")
    return StateModel(SqueezedVacuum(parse_complex(spec.at("xi"), "xi")));
  if (type == "fock") {
    const auto& coeffs = spec.at("coefficients");
    CVector psi(static_cast<Eigen::Index>(coeffs.size()));
    for (std::size_t n = 0; n < coeffs.size(); ++n)
      psi[static_cast<Eigen::Index>(n)] = parse_complex(coeffs.at(n), "fock coefficient");
    return StateModel(FockVector(std::move(psi)));
  }
  if (type == "compass")
    return make_compass({spec.at("R").get<int>(), spec.at("beta").get<double>()});
  throw InvalidInputError("state spec: unknown type \"" + type + "\"");
}

StateModel parse_state_file(const std::string& path) { return parse_state(load_json_file(path)); }

json state_to_json(const StateModel& state) {
  json out;
  if (state.is_superposition()) {
    out["type"] = "superposition";
    out["modes"] = state.modes();
    json comps = json::array();
    for (const auto& c : state.superposition().components()) {
      json amp = json::array();
      for (Eigen::Index m = 0; m < c.amplitude.size(); ++m)
        amp.push_back(complex_to_json(c.amplitude[m]));
      comps.push_back(json{{"coefficient", complex_to_json(c.coefficient)}, {"amplitude", amp}});
    }
    out["components"] = comps;
  } else if (state.is_squeezed()) {
    out["type"] = "squeezed";
    out["xi"] = complex_to_json(state.squeezed().xi());
  } else {
    out["type"] = "fock";
    json coeffs = json::array();
    const CVector& c = state.fock().coefficients();
    for (Eigen::Index n = 0; n < c.size(); ++n) coeffs.push_back(complex_to_json(c[n]));
    out["coefficients"] = coeffs;
  }
  return out;
}

json observable_to_json(const Observable& obs) {
  json out;
  if (obs.is_projector()) {
    out["type"] = "projector";
    out["state"] = state_to_json(obs.state());
    return out;
  }
  out["type"] = "polynomial";
  out["modes"] = obs.poly().modes();
  json terms = json::array();
  for (const auto& [mono, coeff] : obs.poly().terms())
    terms.push_back(json{{"m", mono.creation},
                         {"n", mono.annihilation},
                         {"re", coeff.real()},
                         {"im", coeff.imag()}});
  out["terms"] = terms;
  return out;
}

json bound_result_to_json(const BoundResult& result) {
  json amps = json::array();
  for (const auto& a : result.optimal_amplitudes.amplitudes()) {
    json vec = json::array();
    for (Eigen::Index m = 0; m < a.size(); ++m) vec.push_back(complex_to_json(a[m]));
    amps.push_back(vec);
  }
  json coeffs = json::array();
  for (Eigen::Index k = 0; k < result.optimal_coefficients.size(); ++k)
    coeffs.push_back(complex_to_json(result.optimal_coefficients[k]));
  json out{{"r", result.r},
           {"modes", result.modes},
           {"direction", to_string(result.direction)},
           {"bound", result.bound},
           {"optimal_amplitudes", amps},
           {"optimal_coefficients", coeffs},
           {"starts_converged", result.starts_converged},
           {"best_start_index", result.best_start_index},
           {"effective_rank", result.effective_rank}};
  if (result.stationarity)
    out["stationarity"] = *result.stationarity;
  else
    out["stationarity"] = nullptr;
  return out;
}

BoundResult bound_result_from_json(const json& node) {
  std::vector<CVector> amps;
  for (const auto& vec : node.at("optimal_amplitudes")) {
    CVector a(static_cast<Eigen::Index>(vec.size()));
    for (std::size_t m = 0; m < vec.size(); ++m)
      a[static_cast<Eigen::Index>(m)] = parse_complex(vec.at(m), "cached amplitude");
    amps.push_back(std::move(a));
  }
  const auto& coeffs = node.at("optimal_coefficients");
  CVector lambda(static_cast<Eigen::Index>(coeffs.size()));
  for (std::size_t k = 0; k < coeffs.size(); ++k)
    lambda[static_cast<Eigen::Index>(k)] = parse_complex(coeffs.at(k), "cached coefficient");

  const int modes = node.at("modes").get<int>();
  BoundResult result{node.at("r").get<int>(),
                     modes,
                     node.at("direction").get<std::string>() == "sup" ? BoundDirection::Sup
                                                                      : BoundDirection::Inf,
                     node.at("bound").get<double>(),
                     AmplitudeConfiguration(modes, std::move(amps)),
                     std::move(lambda),
                     std::nullopt,
                     node.at("starts_converged").get<int>(),
                     node.at("best_start_index").get<int>(),
                     node.value("effective_rank", 0)};
  if (node.contains("stationarity") && !node.at("stationarity").is_null())
    result.stationarity = node.at("stationarity").get<double>();
  return result;
}

Observable builtin_quadrature_observable() {
  return Observable::polynomial(NormalOrderedPolynomial::quadrature_squared());
}

std::string content_hash(const std::string& text) {
  std::uint64_t h = 0xCBF29CE484222325ull;
  for (const unsigned char c : text) {
    h ^= c;
    h *= 0x100000001B3ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace ncdeg::cli
