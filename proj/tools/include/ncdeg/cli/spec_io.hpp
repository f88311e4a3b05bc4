#pragma once

#include <cstdint>
#include <string>

#include <nlohmann/json_fwd.hpp>

#include "ncdeg/bounds.hpp"
#include "ncdeg/observable.hpp"

namespace ncdeg::cli {

using json = nlohmann::json;

/// Parses an observable spec:
///   { "type": "polynomial", "modes": N,
///     "terms": [ { "m": [..], "n": [..], "re": .., "im": .. }, ... ] }
///   { "type": "projector", "state": <state spec> }
/// Throws InvalidInputError on malformed input.
Observable parse_observable(const json& spec);
Observable parse_observable_file(const std::string& path);

/// Parses a state spec:
///   { "type": "superposition", "modes": N, "components":
///       [ { "coefficient": {"re","im"}, "amplitude": [{"re","im"} x N] } ] }
///   { "type": "squeezed", "xi": {"re","im"} }
///   { "type": "fock", "coefficients": [{"re","im"}, ...] }
///   { "type": "compass", "R": int, "beta": real }
StateModel parse_state(const json& spec);
StateModel parse_state_file(const std::string& path);

/// Canonical round-trips (sorted keys, stable field set) used for report
/// echoes and cache hashing.
json observable_to_json(const Observable& obs);
json state_to_json(const StateModel& state);

json bound_result_to_json(const BoundResult& result);
BoundResult bound_result_from_json(const json& node);

/// The built-in squeezing observable x(0)^2 used when no spec is given.
Observable builtin_quadrature_observable();

/// FNV-1a 64-bit hash of a string, rendered as fixed-width hex.
std::string content_hash(const std::string& text);

}  // namespace ncdeg::cli
