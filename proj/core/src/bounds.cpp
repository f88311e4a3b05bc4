#include "ncdeg/bounds.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <functional>
#include <limits>
#include <thread>

#include "ncdeg/rng.hpp"
#include "ncdeg/simplex.hpp"

namespace ncdeg {

namespace {

// ---------------------------------------------------------------------------
// Start generation

void dedupe_starts(std::vector<RVector>& starts) {
  std::vector<RVector> unique;
  for (const auto& s : starts) {
    bool seen = false;
    for (const auto& u : unique)
      if (u.size() == s.size() && (u - s).cwiseAbs().maxCoeff() < 1e-12) {
        seen = true;
        break;
      }
    if (!seen) unique.push_back(s);
  }
  starts.swap(unique);
}

/// Amplitudes evenly spaced on the phase-space line with direction `angle`,
/// centered on the origin: the cat-like structure of quadrature optima.
RVector line_start(int r, double spacing, double angle) {
  RVector x(2 * r);
  for (int j = 0; j < r; ++j) {
    const double t = spacing * (static_cast<double>(j) - 0.5 * (r - 1));
    x[2 * j] = t * std::cos(angle);
    x[2 * j + 1] = t * std::sin(angle);
  }
  return x;
}

std::vector<RVector> line_starts(int r, double angle) {
  std::vector<RVector> starts;
  for (const double spacing : {0.5, 0.8, 1.1, 1.5})
    starts.push_back(line_start(r, spacing, angle));
  dedupe_starts(starts);
  return starts;
}

/// Starts taken from r-element subsets of the target superposition's own
/// component amplitudes, strongest coefficients first.
std::vector<RVector> component_subset_starts(const CoherentSuperposition& psi, int r,
                                             std::size_t cap) {
  const std::size_t total = static_cast<std::size_t>(psi.component_count());
  const std::size_t take = static_cast<std::size_t>(r);
  if (take > total) return {};
  std::vector<std::size_t> order(total);
  for (std::size_t i = 0; i < total; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return std::abs(psi.components()[a].coefficient) >
           std::abs(psi.components()[b].coefficient);
  });

  std::vector<RVector> starts;
  std::vector<std::size_t> pick(take);
  for (std::size_t i = 0; i < take; ++i) pick[i] = i;
  while (starts.size() < cap) {
    RVector x(2 * r * psi.modes());
    Eigen::Index p = 0;
    for (std::size_t i = 0; i < take; ++i) {
      const CVector& amp = psi.components()[order[pick[i]]].amplitude;
      for (Eigen::Index m = 0; m < amp.size(); ++m) {
        x[p++] = amp[m].real();
        x[p++] = amp[m].imag();
      }
    }
    starts.push_back(x);
    // next combination in lexicographic order
    std::size_t i = take;
    while (i > 0 && pick[i - 1] == total - take + (i - 1)) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t j = i; j < take; ++j) pick[j] = pick[j - 1] + 1;
  }
  return starts;
}

RVector random_start(int r, int modes, double radius, std::uint64_t seed) {
  Rng rng(seed);
  RVector x(2 * r * modes);
  const double sigma = radius / std::sqrt(2.0);
  for (Eigen::Index i = 0; i < x.size(); ++i) x[i] = sigma * rng.normal();
  return x;
}

// ---------------------------------------------------------------------------
// Multi-start reduction

struct MultiStartOutcome {
  RVector best_x;
  double best_value = 0.0;
  int best_index = -1;
  int converged = 0;
};

double config_norm(const RVector& x) { return x.norm(); }

MultiStartOutcome run_starts(const std::function<double(const RVector&)>& objective,
                             const std::vector<RVector>& starts,
                             const OptimizerConfig& config,
                             const std::function<bool(const RVector&)>& escaped) {
  SimplexOptions options;
  options.max_iterations = config.max_iterations;
  options.f_tolerance = config.simplex_tolerance;
  options.initial_step = 0.3 * config.init_radius;

  std::vector<SimplexOutcome> outcomes(starts.size());
  std::atomic<std::size_t> next(0);
  const unsigned n_threads =
      std::max(1u, std::min<unsigned>(std::thread::hardware_concurrency(),
                                      static_cast<unsigned>(starts.size())));
  auto worker = [&]() {
    for (std::size_t i = next.fetch_add(1); i < starts.size(); i = next.fetch_add(1))
      outcomes[i] = nelder_mead(objective, starts[i], options, escaped);
  };
  if (n_threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(n_threads);
    for (unsigned t = 0; t < n_threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  const double penalty_floor = 0.5 * std::abs(config.penalty_value);
  bool any_feasible = false;
  for (const auto& o : outcomes)
    if (o.value < penalty_floor) any_feasible = true;
  if (!any_feasible)
    throw DegenerateConfigurationError(
        "optimize_bound: every start ended in a conditioning penalty");

  double best_valid = std::numeric_limits<double>::infinity();
  for (const auto& o : outcomes)
    if (!o.diverged) best_valid = std::min(best_valid, o.value);
  for (const auto& o : outcomes)
    if (o.diverged && o.value < best_valid - 1e-9)
      throw UnboundedDirectionError(
          "optimize_bound: objective keeps improving while amplitudes escape the "
          "search region; the observable is unbounded in this direction");

  MultiStartOutcome result;
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    const auto& o = outcomes[i];
    if (o.diverged || o.value >= penalty_floor) continue;
    if (o.converged) ++result.converged;
    if (result.best_index < 0) {
      result.best_value = o.value;
      result.best_x = o.x;
      result.best_index = static_cast<int>(i);
      continue;
    }
    // Ties within the simplex tolerance break toward the smaller
    // configuration norm, then toward the earlier start.
    const double tie = config.simplex_tolerance * (1.0 + std::abs(result.best_value));
    const bool better = o.value < result.best_value - tie;
    const bool tied = !better && o.value <= result.best_value + tie;
    if (better || (tied && config_norm(o.x) < config_norm(result.best_x) - 1e-12)) {
      result.best_value = o.value;
      result.best_x = o.x;
      result.best_index = static_cast<int>(i);
    }
  }
  if (result.best_index < 0)
    throw DegenerateConfigurationError("optimize_bound: no feasible start");
  return result;
}

int auto_starts(int r) { return r <= 4 ? 16 : 48; }

int count_effective_rank(const CVector& lambda) {
  const double floor = 1e-8 * lambda.norm();
  int rank = 0;
  for (Eigen::Index k = 0; k < lambda.size(); ++k)
    if (std::abs(lambda[k]) >= floor) ++rank;
  return rank;
}

std::function<bool(const RVector&)> escape_predicate(double init_radius) {
  const double limit = 10.0 * init_radius;
  return [limit](const RVector& x) { return x.cwiseAbs().maxCoeff() > limit; };
}

}  // namespace

int OptimizerConfig::effective_starts(int r, int heuristic_count) const {
  const int requested = n_starts > 0 ? n_starts : auto_starts(r);
  if (requested < 1) throw InvalidInputError("OptimizerConfig: n_starts must be >= 1");
  // Heuristic seeds are always validated against at least 4 unconstrained starts.
  return std::max(requested, heuristic_count + 4);
}

BoundResult optimize_bound(const Observable& obs, int r, int modes,
                           BoundDirection direction, const OptimizerConfig& config) {
  if (r < 1) throw InvalidInputError("optimize_bound: r must be >= 1");
  if (modes < 1) throw InvalidInputError("optimize_bound: modes must be >= 1");
  if (obs.modes() != modes) throw InvalidInputError("optimize_bound: observable mode count mismatch");
  if (!(config.simplex_tolerance > 0.0))
    throw InvalidInputError("OptimizerConfig: tolerances must be positive");

  const double sign = direction == BoundDirection::Sup ? -1.0 : 1.0;
  const double penalty = std::abs(config.penalty_value);
  const ExtremalSide side =
      direction == BoundDirection::Sup ? ExtremalSide::Max : ExtremalSide::Min;

  auto objective = [&, sign, penalty](const RVector& x) -> double {
    if (!x.allFinite()) return penalty;
    try {
      const AmplitudeConfiguration cfg = AmplitudeConfiguration::from_parameters(x, r, modes);
      const CMatrix g1 = coherent_gram(cfg);
      const CMatrix gk = g_matrix(obs, cfg).entries;
      return sign * extremal_generalized_eigen(gk, g1, side).value;
    } catch (const ConditioningError&) {
      return penalty;
    } catch (const InvalidInputError&) {
      return penalty;
    }
  };

  std::vector<RVector> starts;
  if (config.heuristic_line_init && modes == 1) {
    double angle = M_PI / 2.0;
    if (obs.is_projector() && obs.state().is_squeezed()) {
      const Complex nu = obs.state().squeezed().nu();
      if (std::abs(nu) > 0.0) angle = 0.5 * (std::arg(nu) + M_PI);
    }
    for (auto& s : line_starts(r, angle)) starts.push_back(std::move(s));
  }
  if (obs.is_projector() && obs.state().is_superposition())
    for (auto& s : component_subset_starts(obs.state().superposition(), r, 20))
      starts.push_back(std::move(s));
  dedupe_starts(starts);

  const int heuristic_count = static_cast<int>(starts.size());
  const int total = config.effective_starts(r, heuristic_count);
  for (int i = heuristic_count; i < total; ++i)
    starts.push_back(random_start(r, modes, config.init_radius,
                                  substream_seed(config.seed, static_cast<std::uint64_t>(i))));

  // Unboundedness can only come from polynomial observables; projector
  // expectations always lie in [0, 1].
  const auto escaped = obs.is_polynomial()
                           ? escape_predicate(config.init_radius)
                           : std::function<bool(const RVector&)>{};

  const MultiStartOutcome search = run_starts(objective, starts, config, escaped);

  const AmplitudeConfiguration best =
      AmplitudeConfiguration::from_parameters(search.best_x, r, modes);
  const CMatrix g1 = coherent_gram(best);
  const CMatrix gk = g_matrix(obs, best).entries;
  const EigenSolution sol = extremal_generalized_eigen(gk, g1, side);

  BoundResult result{r,
                     modes,
                     direction,
                     sol.value,
                     best,
                     sol.coefficients,
                     std::nullopt,
                     search.converged,
                     search.best_index,
                     count_effective_rank(sol.coefficients)};
  if (modes == 1) result.stationarity = stationarity_residual(obs, best, sol);
  return result;
}

BoundResult pure_state_bound(const StateModel& psi, int r, const OptimizerConfig& config) {
  const int modes = psi.modes();
  if (r < 1) throw InvalidInputError("pure_state_bound: r must be >= 1");
  if (!(config.simplex_tolerance > 0.0))
    throw InvalidInputError("OptimizerConfig: tolerances must be positive");
  const double penalty = std::abs(config.penalty_value);

  // Rank-one closed form: b = g^dag G_1^{-1} g through the eigendecomposition
  // of G_1, with the same conditioning guard as the general solver.
  auto projection = [&](const AmplitudeConfiguration& cfg) -> double {
    const CMatrix g1 = coherent_gram(cfg);
    Eigen::SelfAdjointEigenSolver<CMatrix> es(g1);
    const double lo = es.eigenvalues().minCoeff();
    const double hi = es.eigenvalues().maxCoeff();
    if (!(lo > 0.0) || hi / lo > condition_guard)
      throw ConditioningError("pure_state_bound: ill-conditioned G_1", lo > 0.0 ? hi / lo : 0.0);
    const CVector g = g_vector(psi, cfg);
    const CVector w = es.eigenvectors().adjoint() * g;
    double b = 0.0;
    for (Eigen::Index i = 0; i < w.size(); ++i) b += std::norm(w[i]) / es.eigenvalues()[i];
    return b;
  };

  auto objective = [&, penalty](const RVector& x) -> double {
    if (!x.allFinite()) return penalty;
    try {
      const AmplitudeConfiguration cfg = AmplitudeConfiguration::from_parameters(x, r, modes);
      const double b = projection(cfg);
      if (b > 1.0 + 1e-6) return penalty;  // numerically unreliable region
      return -std::min(b, 1.0);
    } catch (const ConditioningError&) {
      return penalty;
    } catch (const InvalidInputError&) {
      return penalty;
    }
  };

  std::vector<RVector> starts;
  if (config.heuristic_line_init && modes == 1) {
    double angle = M_PI / 2.0;
    if (psi.is_squeezed() && std::abs(psi.squeezed().nu()) > 0.0)
      angle = 0.5 * (std::arg(psi.squeezed().nu()) + M_PI);
    for (auto& s : line_starts(r, angle)) starts.push_back(std::move(s));
  }
  if (psi.is_superposition())
    for (auto& s : component_subset_starts(psi.superposition(), r, 20))
      starts.push_back(std::move(s));
  dedupe_starts(starts);

  const int heuristic_count = static_cast<int>(starts.size());
  const int total = config.effective_starts(r, heuristic_count);
  for (int i = heuristic_count; i < total; ++i)
    starts.push_back(random_start(r, modes, config.init_radius,
                                  substream_seed(config.seed, static_cast<std::uint64_t>(i))));

  const MultiStartOutcome search = run_starts(objective, starts, config, {});

  const AmplitudeConfiguration best =
      AmplitudeConfiguration::from_parameters(search.best_x, r, modes);
  const CMatrix g1 = coherent_gram(best);
  const CVector g = g_vector(psi, best);
  const CVector lambda_raw = g1.selfadjointView<Eigen::Lower>().llt().solve(g);
  CVector lambda = lambda_raw;
  lambda.normalize();
  const double bound = std::min(std::real(g.dot(lambda_raw)), 1.0);

  EigenSolution sol;
  sol.value = bound;
  sol.coefficients = lambda;

  BoundResult result{r,
                     modes,
                     BoundDirection::Sup,
                     bound,
                     best,
                     lambda,
                     std::nullopt,
                     search.converged,
                     search.best_index,
                     count_effective_rank(lambda)};
  if (modes == 1)
    result.stationarity = stationarity_residual(Observable::projector(psi), best, sol);
  return result;
}

double finite_superposition_bound_approx(const CoherentSuperposition& psi, int r) {
  if (r < 1) throw InvalidInputError("finite_superposition_bound_approx: r must be >= 1");
  const auto& comps = psi.components();
  for (std::size_t i = 0; i < comps.size(); ++i)
    for (std::size_t j = i + 1; j < comps.size(); ++j) {
      const double overlap =
          std::abs(coherent_overlap(comps[i].amplitude, comps[j].amplitude));
      if (overlap >= 1e-3)
        throw ApproximationDomainError(
            "finite_superposition_bound_approx: component overlaps above 1e-3; "
            "approximation not valid");
    }
  std::vector<double> weights;
  weights.reserve(comps.size());
  double total = 0.0;
  for (const auto& c : comps) {
    weights.push_back(std::norm(c.coefficient));
    total += weights.back();
  }
  std::sort(weights.begin(), weights.end(), std::greater<>());
  const std::size_t take = std::min<std::size_t>(static_cast<std::size_t>(r), weights.size());
  double sum = 0.0;
  for (std::size_t i = 0; i < take; ++i) sum += weights[i];
  return sum / total;
}

AmplitudeConfiguration mode_transform(const AmplitudeConfiguration& cfg, const CMatrix& unitary) {
  if (unitary.rows() != cfg.modes() || unitary.cols() != cfg.modes())
    throw InvalidInputError("mode_transform: matrix dimension != modes");
  const CMatrix gap = unitary.adjoint() * unitary - CMatrix::Identity(cfg.modes(), cfg.modes());
  if (gap.cwiseAbs().maxCoeff() > 1e-10)
    throw InvalidInputError("mode_transform: matrix is not unitary within 1e-10");
  std::vector<CVector> mapped;
  mapped.reserve(static_cast<std::size_t>(cfg.size()));
  for (const auto& a : cfg.amplitudes()) mapped.push_back(unitary * a);
  return AmplitudeConfiguration(cfg.modes(), std::move(mapped));
}

}  // namespace ncdeg
