#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ncdeg/observable.hpp"
#include "ncdeg/spectral.hpp"

namespace ncdeg {

enum class BoundDirection { Sup, Inf };

inline const char* to_string(BoundDirection d) {
  return d == BoundDirection::Sup ? "sup" : "inf";
}

/// Settings of the multi-start derivative-free outer search.
struct OptimizerConfig {
  int n_starts = 0;                ///< 0 = automatic: 16 for r <= 4, 48 for r >= 5
  int max_iterations = 20000;      ///< simplex iterations per start
  double simplex_tolerance = 1e-10;
  std::uint64_t seed = 1;
  double init_radius = 1.5;        ///< scale of the random Gaussian starts
  bool heuristic_line_init = true; ///< seed extra starts on a phase-space line
  double penalty_value = 1e6;      ///< objective assigned to degenerate configurations

  int effective_starts(int r, int heuristic_count) const;
};

/// Extremal expectation value over r-term coherent superpositions, with the
/// optimizing configuration and diagnostics.
struct BoundResult {
  int r = 0;
  int modes = 0;
  BoundDirection direction = BoundDirection::Inf;
  double bound = 0.0;
  AmplitudeConfiguration optimal_amplitudes;
  CVector optimal_coefficients;
  std::optional<double> stationarity;  ///< commutator residual; single mode only
  int starts_converged = 0;
  int best_start_index = -1;
  /// Count of coefficients with |lambda_k| >= 1e-8 |lambda|; a value below r
  /// means the optimum already lies in a smaller superposition class.
  int effective_rank = 0;
};

/// b_r (direction = Sup) or b'_r (direction = Inf) of a Hermitian observable:
/// multi-start simplex search over the 2 r N real amplitude parameters, each
/// candidate scored by the extremal generalized eigenvalue of (G_K, G_1).
/// Results are reproducible for a fixed config (seed included).
BoundResult optimize_bound(const Observable& obs, int r, int modes,
                           BoundDirection direction, const OptimizerConfig& config);

/// Maximal projection b_r = g^dag G_1^{-1} g of a pure state onto r-term
/// superpositions (the rank-one specialization; direction is always Sup).
/// The returned bound lies in [0, 1]; 1 means the state itself is reachable.
BoundResult pure_state_bound(const StateModel& psi, int r, const OptimizerConfig& config);

/// Well-separated-components approximation: the sum of the r largest
/// |kappa_k|^2 (renormalized). Requires pairwise component overlaps below
/// 1e-3 in modulus.
double finite_superposition_bound_approx(const CoherentSuperposition& psi, int r);

/// Applies a classical mode transformation alpha -> U alpha to every
/// amplitude. U must be unitary within 1e-10. Preserves r.
AmplitudeConfiguration mode_transform(const AmplitudeConfiguration& cfg, const CMatrix& unitary);

}  // namespace ncdeg
