#include "ncdeg/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace ncdeg {

namespace {

struct Vertex {
  RVector x;
  double f;
};

constexpr double reflect_coeff = 1.0;
constexpr double expand_coeff = 2.0;
constexpr double contract_coeff = 0.5;
constexpr double shrink_coeff = 0.5;

}  // namespace

SimplexOutcome nelder_mead(const std::function<double(const RVector&)>& objective,
                           const RVector& start, const SimplexOptions& options,
                           const std::function<bool(const RVector&)>& escaped) {
  const Eigen::Index n = start.size();
  SimplexOutcome out;
  out.x = start;
  out.value = objective(start);

  double step = options.initial_step;
  int iterations_left = options.max_iterations;
  auto by_value = [](const Vertex& a, const Vertex& b) { return a.f < b.f; };

  for (int cycle = 0; cycle <= options.restarts; ++cycle) {
    std::vector<Vertex> simplex;
    simplex.reserve(static_cast<std::size_t>(n) + 1);
    simplex.push_back({out.x, out.value});
    for (Eigen::Index i = 0; i < n; ++i) {
      RVector v = out.x;
      v[i] += step;
      simplex.push_back({v, objective(v)});
    }
    std::sort(simplex.begin(), simplex.end(), by_value);

    bool tolerance_met = false;
    while (iterations_left-- > 0) {
      const Vertex& best = simplex.front();
      Vertex& worst = simplex.back();
      const Vertex& second_worst = simplex[simplex.size() - 2];

      if (worst.f - best.f <= options.f_tolerance * (1.0 + std::abs(best.f))) {
        tolerance_met = true;
        break;
      }

      RVector centroid = RVector::Zero(n);
      for (std::size_t i = 0; i + 1 < simplex.size(); ++i) centroid += simplex[i].x;
      centroid /= static_cast<double>(n);

      const RVector reflected = centroid + reflect_coeff * (centroid - worst.x);
      const double f_reflected = objective(reflected);

      if (f_reflected < best.f) {
        const RVector expanded = centroid + expand_coeff * (reflected - centroid);
        const double f_expanded = objective(expanded);
        if (f_expanded < f_reflected)
          worst = {expanded, f_expanded};
        else
          worst = {reflected, f_reflected};
      } else if (f_reflected < second_worst.f) {
        worst = {reflected, f_reflected};
      } else {
        const bool outside = f_reflected < worst.f;
        RVector contracted;
        if (outside)
          contracted = centroid + contract_coeff * (reflected - centroid);
        else
          contracted = centroid - contract_coeff * (centroid - worst.x);
        const double f_contracted = objective(contracted);
        if (f_contracted < std::min(f_reflected, worst.f)) {
          worst = {contracted, f_contracted};
        } else {
          for (std::size_t i = 1; i < simplex.size(); ++i) {
            simplex[i].x = simplex[0].x + shrink_coeff * (simplex[i].x - simplex[0].x);
            simplex[i].f = objective(simplex[i].x);
          }
        }
      }

      std::sort(simplex.begin(), simplex.end(), by_value);
      ++out.iterations;

      if (simplex.front().f < out.value) {
        out.value = simplex.front().f;
        out.x = simplex.front().x;
        if (escaped && escaped(out.x)) {
          out.diverged = true;
          return out;
        }
      }
    }

    if (simplex.front().f <= out.value) {
      out.value = simplex.front().f;
      out.x = simplex.front().x;
    }
    if (!tolerance_met) break;  // iteration budget exhausted mid-cycle
    out.converged = true;
    step *= 0.1;
  }

  return out;
}

}  // namespace ncdeg
