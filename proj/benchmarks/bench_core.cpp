#include <benchmark/benchmark.h>

#include "ncdeg/bounds.hpp"
#include "ncdeg/fock_oracle.hpp"
#include "ncdeg/rng.hpp"

using namespace ncdeg;

namespace {

AmplitudeConfiguration make_config(int r) {
  Rng rng(17);
  std::vector<CVector> amps;
  for (int k = 0; k < r; ++k) {
    CVector a(1);
    a[0] = Complex(rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0) + 0.3 * k);
    amps.push_back(a);
  }
  return AmplitudeConfiguration(1, std::move(amps));
}

const Observable& quad() {
  static const Observable obs =
      Observable::polynomial(NormalOrderedPolynomial::quadrature_squared());
  return obs;
}

void bm_coherent_overlap(benchmark::State& state) {
  CVector a(1), b(1);
  a[0] = Complex(0.7, -0.2);
  b[0] = Complex(-0.4, 1.1);
  for (auto _ : state) benchmark::DoNotOptimize(coherent_overlap(a, b));
}
BENCHMARK(bm_coherent_overlap);

void bm_gram_matrix(benchmark::State& state) {
  const AmplitudeConfiguration cfg = make_config(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(coherent_gram(cfg));
}
BENCHMARK(bm_gram_matrix)->Arg(2)->Arg(5)->Arg(9);

void bm_g_matrix_quadrature(benchmark::State& state) {
  const AmplitudeConfiguration cfg = make_config(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(g_matrix(quad(), cfg));
}
BENCHMARK(bm_g_matrix_quadrature)->Arg(2)->Arg(9);

void bm_generalized_eigen(benchmark::State& state) {
  const AmplitudeConfiguration cfg = make_config(static_cast<int>(state.range(0)));
  const CMatrix g1 = coherent_gram(cfg);
  const CMatrix gk = g_matrix(quad(), cfg).entries;
  for (auto _ : state)
    benchmark::DoNotOptimize(extremal_generalized_eigen(gk, g1, ExtremalSide::Min));
}
BENCHMARK(bm_generalized_eigen)->Arg(2)->Arg(5)->Arg(9);

void bm_objective_eval(benchmark::State& state) {
  // one full outer-objective evaluation: gram + g-matrix + eigensolve
  const AmplitudeConfiguration cfg = make_config(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    const CMatrix g1 = coherent_gram(cfg);
    const CMatrix gk = g_matrix(quad(), cfg).entries;
    benchmark::DoNotOptimize(extremal_generalized_eigen(gk, g1, ExtremalSide::Min).value);
  }
}
BENCHMARK(bm_objective_eval)->Arg(2)->Arg(5)->Arg(9);

void bm_fock_oracle(benchmark::State& state) {
  const AmplitudeConfiguration cfg = make_config(2);
  CVector lambda(2);
  lambda << Complex(1.0, 0.0), Complex(-0.8, 0.1);
  for (auto _ : state)
    benchmark::DoNotOptimize(
        fock_oracle_expectation(quad(), cfg, lambda, static_cast<int>(state.range(0))));
}
BENCHMARK(bm_fock_oracle)->Arg(60)->Arg(120);

void bm_optimize_bound_r2(benchmark::State& state) {
  OptimizerConfig config;
  config.n_starts = 6;
  for (auto _ : state)
    benchmark::DoNotOptimize(optimize_bound(quad(), 2, 1, BoundDirection::Inf, config));
}
BENCHMARK(bm_optimize_bound_r2)->Unit(benchmark::kMillisecond);

void bm_pure_state_bound_cat(benchmark::State& state) {
  OptimizerConfig config;
  config.n_starts = 6;
  const StateModel cat = make_even_cat(1.5);
  for (auto _ : state)
    benchmark::DoNotOptimize(pure_state_bound(cat, 2, config));
}
BENCHMARK(bm_pure_state_bound_cat)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
