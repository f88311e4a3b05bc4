#include <doctest.h>

#include "ncdeg/bounds.hpp"
#include "test_support.hpp"

using namespace ncdeg;
using namespace ncdeg::testing;

namespace {

const Observable quad_observable() {
  return Observable::polynomial(NormalOrderedPolynomial::quadrature_squared());
}

OptimizerConfig quick_config() {
  OptimizerConfig c;
  c.n_starts = 8;
  return c;
}

CVector one_mode(Complex z) {
  CVector v(1);
  v[0] = z;
  return v;
}

}  // namespace

TEST_SUITE("bounds") {

TEST_CASE("quadrature infimum: r=1 and r=2") {
  OptimizerConfig config;
  const BoundResult r1 = optimize_bound(quad_observable(), 1, 1, BoundDirection::Inf, config);
  CHECK(std::abs(r1.bound - 1.0) < 1e-9);
  REQUIRE(r1.stationarity.has_value());
  CHECK(*r1.stationarity < 1e-4);

  const BoundResult r2 = optimize_bound(quad_observable(), 2, 1, BoundDirection::Inf, config);
  CHECK(std::abs(r2.bound - 0.443071) < 1e-4);
  CHECK(r2.effective_rank == 2);
  CHECK(r2.starts_converged > 0);
}

TEST_CASE("identity observable is flat at one") {
  const Observable identity = Observable::polynomial(NormalOrderedPolynomial::identity(1));
  for (const auto direction : {BoundDirection::Inf, BoundDirection::Sup}) {
    const BoundResult res = optimize_bound(identity, 3, 1, direction, quick_config());
    CHECK(std::abs(res.bound - 1.0) < 1e-10);
  }
}

TEST_CASE("supremum of the quadrature observable is unbounded") {
  CHECK_THROWS_AS(optimize_bound(quad_observable(), 2, 1, BoundDirection::Sup, quick_config()),
                  UnboundedDirectionError);
}

TEST_CASE("all-coincident starts raise a degenerate-configuration error") {
  OptimizerConfig config = quick_config();
  config.heuristic_line_init = false;
  config.init_radius = 1e-8;  // every start and simplex step stays coincident
  CHECK_THROWS_AS(optimize_bound(quad_observable(), 2, 1, BoundDirection::Inf, config),
                  DegenerateConfigurationError);
}

TEST_CASE("returned bound equals the eigenvalue at the returned amplitudes") {
  const BoundResult res = optimize_bound(quad_observable(), 2, 1, BoundDirection::Inf,
                                         quick_config());
  const CMatrix g1 = coherent_gram(res.optimal_amplitudes);
  const CMatrix gk = g_matrix(quad_observable(), res.optimal_amplitudes).entries;
  const EigenSolution sol = extremal_generalized_eigen(gk, g1, ExtremalSide::Min);
  CHECK(std::abs(sol.value - res.bound) < 1e-12);
}

TEST_CASE("results are reproducible for a fixed seed") {
  OptimizerConfig config = quick_config();
  config.seed = 99;
  const BoundResult a = optimize_bound(quad_observable(), 2, 1, BoundDirection::Inf, config);
  const BoundResult b = optimize_bound(quad_observable(), 2, 1, BoundDirection::Inf, config);
  CHECK(a.bound == b.bound);
  CHECK(a.best_start_index == b.best_start_index);
  for (int k = 0; k < 2; ++k)
    CHECK(a.optimal_amplitudes.amplitude(k)[0] == b.optimal_amplitudes.amplitude(k)[0]);
}

TEST_CASE("pure-state bound: coherent target is reached exactly at r=1") {
  const Complex beta0(0.7, -0.5);
  std::vector<CoherentComponent> comps{{Complex(1.0, 0.0), one_mode(beta0)}};
  const StateModel target{CoherentSuperposition(1, comps)};
  const BoundResult res = pure_state_bound(target, 1, quick_config());
  CHECK(res.bound > 1.0 - 1e-9);
  CHECK(std::abs(res.optimal_amplitudes.amplitude(0)[0] - beta0) < 1e-3);
}

TEST_CASE("pure-state bound reports reduced effective rank on a coherent target") {
  std::vector<CoherentComponent> comps{{Complex(1.0, 0.0), one_mode(Complex(0.5, 0.1))}};
  const StateModel target{CoherentSuperposition(1, comps)};
  const BoundResult res = pure_state_bound(target, 2, quick_config());
  CHECK(res.bound > 1.0 - 1e-9);
  CHECK(res.effective_rank <= 2);
}

TEST_CASE("even cat limits at r=1") {
  const BoundResult tight = pure_state_bound(make_even_cat(0.05), 1, quick_config());
  CHECK(tight.bound > 0.999);
  const BoundResult split = pure_state_bound(make_even_cat(3.0), 1, quick_config());
  CHECK(std::abs(split.bound - 0.5) < 1e-3);
}

TEST_CASE("pure-state bound stays within [0, 1]") {
  Rng rng(307);
  for (int trial = 0; trial < 5; ++trial) {
    const StateModel psi = random_superposition(rng, 3);
    const BoundResult res = pure_state_bound(psi, 2, quick_config());
    CHECK(res.bound >= 0.0);
    CHECK(res.bound <= 1.0);
  }
}

TEST_CASE("pure-state bound saturates on members of the superposition class") {
  Rng rng(317);
  for (int trial = 0; trial < 5; ++trial) {
    const StateModel psi = random_superposition(rng, 2);
    CHECK(pure_state_bound(psi, 2, quick_config()).bound > 1.0 - 1e-8);
  }
}

TEST_CASE("finite superposition approximation") {
  const StateModel cat = make_even_cat(3.0);
  CHECK(std::abs(finite_superposition_bound_approx(cat.superposition(), 1) - 0.5) < 1e-6);

  const StateModel compass = make_compass({4, 4.0});
  CHECK(std::abs(finite_superposition_bound_approx(compass.superposition(), 2) - 0.5) < 1e-6);
  CHECK(std::abs(finite_superposition_bound_approx(compass.superposition(), 4) - 1.0) < 1e-15);
  CHECK(std::abs(finite_superposition_bound_approx(compass.superposition(), 7) - 1.0) < 1e-15);

  const StateModel close_cat = make_even_cat(1.0);
  CHECK_THROWS_AS(finite_superposition_bound_approx(close_cat.superposition(), 1),
                  ApproximationDomainError);
}

TEST_CASE("mode transformations") {
  CVector a0(2), a1(2);
  a0 << Complex(0.3, 0.1), Complex(-0.2, 0.4);
  a1 << Complex(-0.6, 0.0), Complex(0.5, -0.3);
  const AmplitudeConfiguration cfg(2, {a0, a1});

  const CMatrix eye = CMatrix::Identity(2, 2);
  const AmplitudeConfiguration same = mode_transform(cfg, eye);
  CHECK((same.amplitude(0) - a0).cwiseAbs().maxCoeff() < 1e-15);

  CMatrix swap(2, 2);
  swap << 0.0, 1.0, 1.0, 0.0;
  const AmplitudeConfiguration swapped = mode_transform(cfg, swap);
  CHECK(std::abs(swapped.amplitude(0)[0] - a0[1]) < 1e-15);
  CHECK(std::abs(swapped.amplitude(0)[1] - a0[0]) < 1e-15);

  Rng rng(311);
  const CMatrix u = random_unitary(rng, 2);
  const AmplitudeConfiguration rotated = mode_transform(cfg, u);
  CHECK((coherent_gram(rotated) - coherent_gram(cfg)).cwiseAbs().maxCoeff() < 1e-12);

  CMatrix not_unitary(2, 2);
  not_unitary << 1.0, 0.0, 0.0, 2.0;
  CHECK_THROWS_AS(mode_transform(cfg, not_unitary), InvalidInputError);
}

TEST_CASE("affine transformation law of optimized bounds") {
  OptimizerConfig config = quick_config();
  const double mu = 0.75;
  const double nu = 1.4;
  NormalOrderedPolynomial shifted = nu * NormalOrderedPolynomial::quadrature_squared() +
                                    mu * NormalOrderedPolynomial::identity(1);
  const double base =
      optimize_bound(quad_observable(), 2, 1, BoundDirection::Inf, config).bound;
  const double mapped =
      optimize_bound(Observable::polynomial(shifted), 2, 1, BoundDirection::Inf, config).bound;
  CHECK(std::abs(mapped - (mu + nu * base)) < 1e-6);
}

TEST_CASE("displacement invariance of the optimized bound") {
  OptimizerConfig config = quick_config();
  const Complex beta0(0.6, -0.35);
  const Observable displaced = Observable::polynomial(
      NormalOrderedPolynomial::quadrature_squared().displaced(beta0));
  const BoundResult base = optimize_bound(quad_observable(), 2, 1, BoundDirection::Inf, config);
  const BoundResult moved = optimize_bound(displaced, 2, 1, BoundDirection::Inf, config);
  CHECK(std::abs(moved.bound - base.bound) < 1e-6);

  // optimal amplitudes shift by beta0, up to permutation and the flat
  // translation along the invariance direction; compare centered sets.
  auto centered_sorted = [](const AmplitudeConfiguration& cfg, Complex shift) {
    std::vector<Complex> amps;
    Complex mean(0.0, 0.0);
    for (const auto& a : cfg.amplitudes()) mean += a[0] - shift;
    mean /= static_cast<double>(cfg.size());
    for (const auto& a : cfg.amplitudes()) amps.push_back(a[0] - shift - mean);
    std::sort(amps.begin(), amps.end(),
              [](Complex x, Complex y) { return x.imag() < y.imag(); });
    return amps;
  };
  const auto base_set = centered_sorted(base.optimal_amplitudes, Complex(0.0, 0.0));
  const auto moved_set = centered_sorted(moved.optimal_amplitudes, beta0);
  for (std::size_t k = 0; k < base_set.size(); ++k)
    CHECK(std::abs(base_set[k] - moved_set[k]) < 1e-3);
}

TEST_CASE("phase-rotation invariance of the optimized bound") {
  OptimizerConfig config = quick_config();
  const double phi = 0.9;
  const Observable rotated = Observable::polynomial(
      NormalOrderedPolynomial::quadrature_squared().phase_rotated(phi));
  const BoundResult base = optimize_bound(quad_observable(), 2, 1, BoundDirection::Inf, config);
  const BoundResult turned = optimize_bound(rotated, 2, 1, BoundDirection::Inf, config);
  CHECK(std::abs(turned.bound - base.bound) < 1e-6);
}

TEST_CASE("transposition leaves the pencil spectrum unchanged") {
  Rng rng(313);
  const NormalOrderedPolynomial poly = random_hermitian_polynomial(rng);
  const AmplitudeConfiguration cfg = random_config(rng, 3);
  std::vector<CVector> conj_amps;
  for (const auto& a : cfg.amplitudes()) conj_amps.push_back(a.conjugate());
  const AmplitudeConfiguration conj_cfg(1, conj_amps);

  const RVector base = generalized_eigenvalues(polynomial_g_matrix(poly, cfg), coherent_gram(cfg));
  const RVector transposed = generalized_eigenvalues(polynomial_g_matrix(poly.transposed(), conj_cfg),
                                                     coherent_gram(conj_cfg));
  for (int i = 0; i < base.size(); ++i) CHECK(std::abs(base[i] - transposed[i]) < 1e-10);
}

TEST_CASE("two-mode quadrature sum has infimum 2 at r=1") {
  // x_1(0)^2 + x_2(0)^2: each mode contributes at least the vacuum variance.
  NormalOrderedPolynomial sum(2);
  for (int mode = 0; mode < 2; ++mode) {
    std::vector<int> m0{0, 0}, n0{0, 0}, m1{0, 0}, n1{0, 0}, m2{0, 0}, n2{0, 0};
    m1[static_cast<std::size_t>(mode)] = 1;
    n1[static_cast<std::size_t>(mode)] = 1;
    m2[static_cast<std::size_t>(mode)] = 2;
    n2[static_cast<std::size_t>(mode)] = 2;
    sum.add_term(LadderMonomial(m1, n1), 2.0);
    sum.add_term(LadderMonomial(m2, n0), 1.0);
    sum.add_term(LadderMonomial(m0, n2), 1.0);
    sum.add_term(LadderMonomial(m0, n0), 1.0);
  }
  OptimizerConfig config = quick_config();
  const BoundResult res = optimize_bound(Observable::polynomial(sum), 1, 2,
                                         BoundDirection::Inf, config);
  CHECK(std::abs(res.bound - 2.0) < 1e-8);
  CHECK(res.modes == 2);
  CHECK(!res.stationarity.has_value());

  // one extra superposition term buys squeezing in one of the modes
  const BoundResult pair = optimize_bound(Observable::polynomial(sum), 2, 2,
                                          BoundDirection::Inf, config);
  CHECK(pair.bound < 2.0 - 0.1);
}

TEST_CASE("nesting of quadrature bounds in r") {
  OptimizerConfig config = quick_config();
  double previous = 2.0;
  for (int r = 1; r <= 3; ++r) {
    const double bound = optimize_bound(quad_observable(), r, 1, BoundDirection::Inf, config).bound;
    CHECK(bound <= previous + 1e-12);
    previous = bound;
  }
}

}  // TEST_SUITE
