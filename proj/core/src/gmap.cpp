#include "ncdeg/gmap.hpp"

namespace ncdeg {

namespace {

void require_single_mode(const AmplitudeConfiguration& cfg, const char* op) {
  if (cfg.modes() != 1)
    throw InvalidInputError(std::string(op) + ": only single-mode configurations are supported");
}

CVector amplitude_diagonal(const AmplitudeConfiguration& cfg) {
  CVector d(cfg.size());
  for (int k = 0; k < cfg.size(); ++k) d[k] = cfg.amplitude(k)[0];
  return d;
}

}  // namespace

GMatrix gram_matrix(const AmplitudeConfiguration& cfg) {
  return {coherent_gram(cfg), cfg};
}

CMatrix polynomial_g_matrix(const NormalOrderedPolynomial& poly,
                            const AmplitudeConfiguration& cfg) {
  if (poly.modes() != cfg.modes())
    throw InvalidInputError("polynomial_g_matrix: mode count mismatch");
  const int r = cfg.size();
  CMatrix g(r, r);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      const Complex overlap =
          i == j ? Complex(1.0, 0.0) : coherent_overlap(cfg.amplitude(i), cfg.amplitude(j));
      g(i, j) = poly.symbol(cfg.amplitude(i), cfg.amplitude(j)) * overlap;
    }
  return g;
}

CVector g_vector(const StateModel& state, const AmplitudeConfiguration& cfg) {
  if (state.modes() != cfg.modes())
    throw InvalidInputError("g_vector: mode count mismatch");
  CVector g(cfg.size());
  for (int i = 0; i < cfg.size(); ++i) g[i] = state.overlap_with_coherent(cfg.amplitude(i));
  return g;
}

GMatrix g_matrix(const Observable& obs, const AmplitudeConfiguration& cfg) {
  if (obs.is_polynomial()) return {polynomial_g_matrix(obs.poly(), cfg), cfg};
  const CVector g = g_vector(obs.state(), cfg);
  return {g * g.adjoint(), cfg};
}

CMatrix annihilation_g_matrix(const AmplitudeConfiguration& cfg) {
  require_single_mode(cfg, "annihilation_g_matrix");
  return coherent_gram(cfg) * amplitude_diagonal(cfg).asDiagonal();
}

GMatrix annihilation_weighted_g_matrix(const Observable& obs,
                                       const AmplitudeConfiguration& cfg) {
  require_single_mode(cfg, "annihilation_weighted_g_matrix");
  if (obs.modes() != 1)
    throw InvalidInputError("annihilation_weighted_g_matrix: single-mode observables only");
  if (obs.is_polynomial())
    return {polynomial_g_matrix(obs.poly().annihilation_times(), cfg), cfg};
  // a |psi><psi| maps to (<alpha_i|a|psi>)_i g^dag.
  const CVector g = g_vector(obs.state(), cfg);
  CVector ag(cfg.size());
  for (int i = 0; i < cfg.size(); ++i)
    ag[i] = obs.state().annihilated_overlap(cfg.amplitude(i));
  return {ag * g.adjoint(), cfg};
}

CMatrix commutator_g_matrix(const Observable& obs, const AmplitudeConfiguration& cfg) {
  const CMatrix gak = annihilation_weighted_g_matrix(obs, cfg).entries;
  const CMatrix gk = g_matrix(obs, cfg).entries;
  return gak - gk * amplitude_diagonal(cfg).asDiagonal();
}

}  // namespace ncdeg
