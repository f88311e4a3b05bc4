#include "ncdeg/witness.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace ncdeg {

Witness build_witness(const Observable& obs, int r, int modes, BoundDirection direction,
                      const OptimizerConfig& config) {
  BoundResult result = optimize_bound(obs, r, modes, direction, config);
  return Witness{obs, r, modes, direction, result.bound, std::move(result)};
}

CertificationResult certify(const std::vector<Witness>& family, double measured,
                            std::optional<double> std_error) {
  if (family.empty()) throw InvalidInputError("certify: empty witness family");
  if (!std::isfinite(measured)) throw InvalidInputError("certify: non-finite measured value");
  if (std_error && !(*std_error > 0.0))
    throw InvalidInputError("certify: standard error must be positive");

  const BoundDirection direction = family.front().direction;
  const int modes = family.front().modes;
  for (std::size_t i = 0; i < family.size(); ++i) {
    const Witness& w = family[i];
    if (w.direction != direction || w.modes != modes)
      throw InvalidInputError("certify: witnesses must share direction and mode count");
    if (w.r != static_cast<int>(i) + 1)
      throw InvalidInputError("certify: witness family must cover r = 1..R in order");
  }
  // Nesting: sup bounds ascend, inf bounds descend. A violation signals an
  // upstream optimizer failure, not a certifiable state.
  for (std::size_t i = 1; i < family.size(); ++i) {
    const double prev = family[i - 1].bound;
    const double curr = family[i].bound;
    const bool ok = direction == BoundDirection::Inf ? curr <= prev + 1e-12
                                                     : curr >= prev - 1e-12;
    if (!ok)
      throw NonMonotoneFamilyError("certify: bound family violates nesting monotonicity");
  }

  CertificationResult result;
  result.measured_value = measured;
  double deepest = -std::numeric_limits<double>::infinity();
  for (const Witness& w : family) {
    const double depth = direction == BoundDirection::Inf ? w.bound - measured
                                                          : measured - w.bound;
    deepest = std::max(deepest, depth);
    if (depth > 0.0) result.violated_r.push_back(w.r);
  }
  // Monotone bounds make the violated set a prefix; assert the invariant.
  for (std::size_t i = 0; i < result.violated_r.size(); ++i)
    if (result.violated_r[i] != static_cast<int>(i) + 1)
      throw NonMonotoneFamilyError("certify: violated set is not a prefix");

  result.margin = std_error ? deepest / *std_error : deepest;

  std::ostringstream statement;
  if (result.violated_r.empty()) {
    statement << "no bound violated: no degree of nonclassicality certified "
                 "(the witness test is one-sided)";
  } else {
    const int k = result.violated_r.back();
    statement << "state is outside M_r for r = 1.." << k << ", hence D_Ncl > " << k
              << " (degree of nonclassicality at least " << k + 1 << ")";
  }
  result.certified_statement = statement.str();
  return result;
}

double squeezing_db(double bound_or_variance) {
  if (!(bound_or_variance > 0.0))
    throw InvalidInputError("squeezing_db: input must be positive");
  return -10.0 * std::log10(bound_or_variance);
}

double variance_from_db(double db) {
  if (!std::isfinite(db)) throw InvalidInputError("variance_from_db: non-finite input");
  return std::pow(10.0, -db / 10.0);
}

double pure_state_distance(double b_r) {
  if (!(b_r >= 0.0) || !(b_r <= 1.0))
    throw InvalidInputError("pure_state_distance: bound must lie in [0, 1]");
  return 2.0 * (1.0 - b_r);
}

}  // namespace ncdeg
