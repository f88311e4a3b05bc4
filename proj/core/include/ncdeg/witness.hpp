#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ncdeg/bounds.hpp"

namespace ncdeg {

/// A degree witness: the operator bound*1 - K (sup direction) or
/// K - bound*1 (inf direction), kept symbolic as the observable plus its
/// extremal bound and provenance.
struct Witness {
  Observable observable;
  int r = 0;
  int modes = 1;
  BoundDirection direction = BoundDirection::Inf;
  double bound = 0.0;
  BoundResult provenance;
};

Witness build_witness(const Observable& obs, int r, int modes, BoundDirection direction,
                      const OptimizerConfig& config);

/// Outcome of testing a measured expectation value against a nested family
/// of witness bounds. Violation of the r-th bound certifies exclusion from
/// M_r; the family's nesting makes violated_r a prefix {1..k}.
struct CertificationResult {
  double measured_value = 0.0;
  std::vector<int> violated_r;
  std::string certified_statement;
  double margin = 0.0;  ///< deepest violation depth (in std-error units when provided)
};

/// Tests `measured` against the family (same observable and direction,
/// r = 1..R). Violation is one-sided: exceeding every bound certifies
/// nothing for possibly-mixed states.
CertificationResult certify(const std::vector<Witness>& family, double measured,
                            std::optional<double> std_error = std::nullopt);

/// Vacuum-normalized variance to decibels: -10 log10(value).
double squeezing_db(double bound_or_variance);
/// Inverse of squeezing_db: 10^(-db/10).
double variance_from_db(double db);

/// d_r = 2 (1 - b_r): squared distance of a pure state to the closest
/// r-term superposition. Zero iff the state lies in S_r.
double pure_state_distance(double b_r);

}  // namespace ncdeg
