#pragma once

#include <functional>

#include "ncdeg/types.hpp"

namespace ncdeg {

/// Nelder-Mead settings for one start of the outer search.
struct SimplexOptions {
  int max_iterations = 20000;
  double f_tolerance = 1e-10;   ///< stop when the simplex value spread falls below this
  double initial_step = 0.4;    ///< per-coordinate offset of the initial simplex
  int restarts = 3;             ///< polish cycles around the incumbent with shrinking steps
};

struct SimplexOutcome {
  RVector x;
  double value = 0.0;
  int iterations = 0;
  bool converged = false;
  bool diverged = false;  ///< escaped the search region while still improving
};

/// Downhill simplex minimization. `escaped`, when provided, flags points
/// outside the admissible search region; the run aborts as diverged when a
/// new incumbent best lies outside it.
SimplexOutcome nelder_mead(const std::function<double(const RVector&)>& objective,
                           const RVector& start, const SimplexOptions& options,
                           const std::function<bool(const RVector&)>& escaped = {});

}  // namespace ncdeg
