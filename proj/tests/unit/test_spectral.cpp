#include <doctest.h>

#include <algorithm>

#include "ncdeg/bounds.hpp"
#include "ncdeg/spectral.hpp"
#include "test_support.hpp"

using namespace ncdeg;
using namespace ncdeg::testing;

namespace {

const Observable quad_observable() {
  return Observable::polynomial(NormalOrderedPolynomial::quadrature_squared());
}

}  // namespace

TEST_SUITE("spectral") {

TEST_CASE("identity pencil has eigenvalue one in both directions") {
  Rng rng(101);
  const AmplitudeConfiguration cfg = random_config(rng, 4);
  const CMatrix g1 = coherent_gram(cfg);
  for (const auto side : {ExtremalSide::Min, ExtremalSide::Max}) {
    const EigenSolution sol = extremal_generalized_eigen(g1, g1, side);
    CHECK(std::abs(sol.value - 1.0) < 1e-12);
    CHECK(sol.coefficients.norm() > 0.0);
    CHECK(sol.residual < 1e-10);
  }
}

TEST_CASE("r=2 solver agrees with the closed form") {
  const AmplitudeConfiguration cfg = single_mode_config({Complex(0, 0.5), Complex(0, -0.5)});
  const GMatrix g1 = gram_matrix(cfg);
  const GMatrix gk = g_matrix(quad_observable(), cfg);
  const auto [lo, hi] = closed_form_r2(gk, g1);
  CHECK(std::abs(extremal_generalized_eigen(gk, g1, ExtremalSide::Min).value - lo) < 1e-12);
  CHECK(std::abs(extremal_generalized_eigen(gk, g1, ExtremalSide::Max).value - hi) < 1e-12);
  CHECK(lo < 1.0);  // cat-state squeezing
}

TEST_CASE("r=1 value is the diagonal expectation") {
  Rng rng(103);
  for (int trial = 0; trial < 20; ++trial) {
    const Complex alpha = random_unit_disk(rng, 1.5);
    const AmplitudeConfiguration cfg = single_mode_config({alpha});
    const GMatrix g1 = gram_matrix(cfg);
    const GMatrix gk = g_matrix(quad_observable(), cfg);
    const double expected = 1.0 + std::norm(alpha + std::conj(alpha));
    CHECK(std::abs(extremal_generalized_eigen(gk, g1, ExtremalSide::Min).value - expected) <
          1e-12);
  }
}

TEST_CASE("ill-conditioned gram matrices raise a conditioning error") {
  // separation just above the coincidence tolerance: construction succeeds,
  // the eigensolve refuses.
  const AmplitudeConfiguration cfg =
      single_mode_config({Complex(0.3, 0.0), Complex(0.3 + 2e-6, 0.0)});
  const CMatrix g1 = coherent_gram(cfg);
  const CMatrix gk = polynomial_g_matrix(NormalOrderedPolynomial::quadrature_squared(), cfg);
  try {
    extremal_generalized_eigen(gk, g1, ExtremalSide::Min);
    FAIL("expected ConditioningError");
  } catch (const ConditioningError& e) {
    CHECK(e.condition_estimate() > condition_guard);
  }
}

TEST_CASE("non-Hermitian input is rejected") {
  CMatrix gk(2, 2), g1(2, 2);
  gk << 1.0, Complex(0.5, 0.2), Complex(0.5, 0.3), 2.0;
  g1.setIdentity();
  CHECK_THROWS_AS(extremal_generalized_eigen(gk, g1, ExtremalSide::Min), InvalidInputError);
}

TEST_CASE("closed form r=2: identity and random instances") {
  Rng rng(107);
  const AmplitudeConfiguration cfg = random_config(rng, 2);
  const CMatrix g1 = coherent_gram(cfg);
  const auto [lo, hi] = closed_form_r2(g1, g1);
  CHECK(std::abs(lo - 1.0) < 1e-12);
  CHECK(std::abs(hi - 1.0) < 1e-12);

  for (int trial = 0; trial < 50; ++trial) {
    const AmplitudeConfiguration c = random_config(rng, 2);
    const CMatrix g = coherent_gram(c);
    const CMatrix k = polynomial_g_matrix(random_hermitian_polynomial(rng), c);
    const auto [a, b] = closed_form_r2(k, g);
    // cross-check against bisection roots of the characteristic polynomial
    const double margin = 0.1 * (std::abs(a) + std::abs(b)) + 1.0;
    const auto roots = char_poly_roots(k, g, a - margin, b + margin);
    REQUIRE(roots.size() == 2);
    CHECK(std::abs(roots[0] - a) < 1e-8);
    CHECK(std::abs(roots[1] - b) < 1e-8);
  }
}

TEST_CASE("characteristic polynomial vanishes at eigenvalues") {
  Rng rng(109);
  for (int trial = 0; trial < 20; ++trial) {
    const AmplitudeConfiguration cfg = random_config(rng, 3);
    const CMatrix g1 = coherent_gram(cfg);
    const CMatrix gk = polynomial_g_matrix(random_hermitian_polynomial(rng), cfg);
    const EigenSolution sol = extremal_generalized_eigen(gk, g1, ExtremalSide::Min);
    const double scale = std::pow(gk.cwiseAbs().maxCoeff() + 1.0, 3);
    CHECK(std::abs(char_poly_eval(gk, g1, sol.value)) < 1e-8 * scale);
  }
  const AmplitudeConfiguration cfg = random_config(rng, 2);
  const CMatrix g1 = coherent_gram(cfg);
  CHECK(std::abs(char_poly_eval(g1, g1, 1.0)) < 1e-14);
}

TEST_CASE("sign changes bracket exactly r real roots for r=3") {
  Rng rng(113);
  for (int trial = 0; trial < 10; ++trial) {
    const AmplitudeConfiguration cfg = random_config(rng, 3);
    const CMatrix g1 = coherent_gram(cfg);
    const CMatrix gk = polynomial_g_matrix(random_hermitian_polynomial(rng), cfg);
    const RVector eigs = generalized_eigenvalues(gk, g1);
    const double margin = 1.0 + 0.1 * (std::abs(eigs[0]) + std::abs(eigs[2]));
    const auto roots = char_poly_roots(gk, g1, eigs[0] - margin, eigs[2] + margin);
    if (roots.size() != 3) continue;  // nearly degenerate pair; resample
    for (int i = 0; i < 3; ++i) CHECK(std::abs(roots[static_cast<std::size_t>(i)] - eigs[i]) < 1e-8);
  }
}

TEST_CASE("stationarity residual vanishes for the identity observable") {
  Rng rng(127);
  const AmplitudeConfiguration cfg = random_config(rng, 3);
  const Observable identity = Observable::polynomial(NormalOrderedPolynomial::identity(1));
  const GMatrix g1 = gram_matrix(cfg);
  const EigenSolution sol = extremal_generalized_eigen(g1, g1, ExtremalSide::Min);
  CHECK(stationarity_residual(identity, cfg, sol) < 1e-13);
}

TEST_CASE("stationarity residual at and away from the r=2 optimum") {
  OptimizerConfig config;
  config.simplex_tolerance = 1e-13;  // the example wants a deeply converged optimum
  const BoundResult optimum = optimize_bound(quad_observable(), 2, 1, BoundDirection::Inf, config);
  REQUIRE(optimum.stationarity.has_value());
  CHECK(*optimum.stationarity < 1e-6);

  // displaced off the optimal manifold along the real axis
  std::vector<CVector> amps;
  for (const auto& a : optimum.optimal_amplitudes.amplitudes()) {
    CVector shifted = a;
    shifted[0] += Complex(0.15, 0.0);
    shifted[0] *= 1.1;
    amps.push_back(shifted);
  }
  const AmplitudeConfiguration perturbed(1, amps);
  const GMatrix g1 = gram_matrix(perturbed);
  const GMatrix gk = g_matrix(quad_observable(), perturbed);
  const EigenSolution sol = extremal_generalized_eigen(gk, g1, ExtremalSide::Min);
  CHECK(stationarity_residual(quad_observable(), perturbed, sol) > 1e-3);
}

TEST_CASE("affine covariance of the pencil") {
  Rng rng(131);
  for (int trial = 0; trial < 30; ++trial) {
    const AmplitudeConfiguration cfg = random_config(rng, 3);
    const CMatrix g1 = coherent_gram(cfg);
    const CMatrix gk = polynomial_g_matrix(random_hermitian_polynomial(rng), cfg);
    const double mu = rng.uniform(-2.0, 2.0);
    const double nu = rng.uniform(0.1, 2.0);
    const EigenSolution base = extremal_generalized_eigen(gk, g1, ExtremalSide::Min);
    const EigenSolution mapped =
        extremal_generalized_eigen(mu * g1 + nu * gk, g1, ExtremalSide::Min);
    CHECK(std::abs(mapped.value - (mu + nu * base.value)) < 1e-12 * (1.0 + std::abs(mapped.value)));
  }
}

TEST_CASE("Rayleigh quotient consistency and realness") {
  Rng rng(137);
  for (int trial = 0; trial < 30; ++trial) {
    const AmplitudeConfiguration cfg = random_config(rng, 4);
    const CMatrix g1 = coherent_gram(cfg);
    const CMatrix gk = polynomial_g_matrix(random_hermitian_polynomial(rng), cfg);
    for (const auto side : {ExtremalSide::Min, ExtremalSide::Max}) {
      const EigenSolution sol = extremal_generalized_eigen(gk, g1, side);
      const CVector& l = sol.coefficients;
      const Complex quotient = l.dot(gk * l) / l.dot(g1 * l);
      CHECK(std::abs(quotient.imag()) < 1e-12);
      CHECK(std::abs(quotient.real() - sol.value) < 1e-10 * (1.0 + std::abs(sol.value)));
    }
  }
}

TEST_CASE("whitened eigenvalues coincide with characteristic roots up to r=4") {
  Rng rng(139);
  for (int r : {2, 3, 4}) {
    const AmplitudeConfiguration cfg = random_config(rng, r);
    const CMatrix g1 = coherent_gram(cfg);
    const CMatrix gk = polynomial_g_matrix(random_hermitian_polynomial(rng), cfg);
    const RVector eigs = generalized_eigenvalues(gk, g1);
    const double margin = 1.0 + 0.1 * eigs.cwiseAbs().maxCoeff();
    const auto roots = char_poly_roots(gk, g1, eigs[0] - margin, eigs[r - 1] + margin, 8000);
    if (static_cast<int>(roots.size()) != r) continue;  // degenerate draw
    for (int i = 0; i < r; ++i) CHECK(std::abs(roots[static_cast<std::size_t>(i)] - eigs[i]) < 1e-8);
  }
}

}  // TEST_SUITE
