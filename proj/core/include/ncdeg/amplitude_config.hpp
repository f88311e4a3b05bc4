#pragma once

#include <vector>

#include "ncdeg/types.hpp"

namespace ncdeg {

/// Ordered set of r coherent amplitudes, each a length-N complex vector.
/// This is the outer optimization variable: the state it describes is
/// span{|alpha_1>, ..., |alpha_r>}.
///
/// Construction enforces pairwise distinctness (max-norm separation above
/// `coincidence_tolerance`); coincident amplitudes would make the Gram
/// matrix singular.
class AmplitudeConfiguration {
 public:
  static constexpr double coincidence_tolerance = 1e-6;

  AmplitudeConfiguration(int modes, std::vector<CVector> amplitudes);

  int modes() const { return modes_; }
  /// Number of superposed coherent states r.
  int size() const { return static_cast<int>(amplitudes_.size()); }
  const CVector& amplitude(int k) const { return amplitudes_[static_cast<std::size_t>(k)]; }
  const std::vector<CVector>& amplitudes() const { return amplitudes_; }

  /// Frobenius norm over all amplitude entries (used for tie-breaking).
  double norm() const;

  static bool pairwise_distinct(const std::vector<CVector>& amps,
                                double tol = coincidence_tolerance);

  /// Interleaved real parametrization (re, im per entry, amplitude-major),
  /// the coordinates seen by the derivative-free optimizer.
  RVector to_parameters() const;
  static AmplitudeConfiguration from_parameters(const RVector& x, int r, int modes);

 private:
  int modes_;
  std::vector<CVector> amplitudes_;
};

/// Convenience constructor for single-mode configurations.
AmplitudeConfiguration single_mode_config(const std::vector<Complex>& amps);

}  // namespace ncdeg
