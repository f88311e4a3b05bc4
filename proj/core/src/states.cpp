#include "ncdeg/states.hpp"

#include <cmath>

#include "ncdeg/overlap.hpp"

namespace ncdeg {

// ---------------------------------------------------------------------------
// CoherentSuperposition

CoherentSuperposition::CoherentSuperposition(int modes,
                                             std::vector<CoherentComponent> components)
    : modes_(modes), components_(std::move(components)) {
  if (modes_ < 1) throw InvalidInputError("CoherentSuperposition: modes must be >= 1");
  if (components_.empty())
    throw InvalidInputError("CoherentSuperposition: need at least one component");
  std::vector<CVector> amps;
  amps.reserve(components_.size());
  for (const auto& c : components_) {
    if (c.amplitude.size() != modes_)
      throw InvalidInputError("CoherentSuperposition: amplitude length != modes");
    require_finite(c.amplitude, "CoherentSuperposition");
    require_finite(c.coefficient, "CoherentSuperposition");
    if (std::abs(c.coefficient) == 0.0)
      throw InvalidInputError("CoherentSuperposition: zero coefficient");
    amps.push_back(c.amplitude);
  }
  if (!AmplitudeConfiguration::pairwise_distinct(amps))
    throw InvalidInputError("CoherentSuperposition: coincident component amplitudes");

  // Normalize: <psi|psi> = kappa^dag G kappa with G the component Gram matrix.
  const AmplitudeConfiguration cfg(modes_, std::move(amps));
  const CMatrix gram = coherent_gram(cfg);
  CVector kappa(component_count());
  for (int k = 0; k < component_count(); ++k) kappa[k] = components_[static_cast<std::size_t>(k)].coefficient;
  const double self = std::real(kappa.dot(gram * kappa));
  if (!(self > 0.0) || !std::isfinite(self))
    throw InvalidInputError("CoherentSuperposition: non-normalizable coefficient vector");
  const double scale = 1.0 / std::sqrt(self);
  for (auto& c : components_) c.coefficient *= scale;
}

Complex CoherentSuperposition::overlap_with_coherent(const CVector& alpha) const {
  if (alpha.size() != modes_)
    throw InvalidInputError("overlap_with_coherent: dimension mismatch");
  Complex acc(0.0, 0.0);
  for (const auto& c : components_) acc += c.coefficient * coherent_overlap(alpha, c.amplitude);
  return acc;
}

Complex CoherentSuperposition::annihilated_overlap(const CVector& alpha) const {
  if (modes_ != 1)
    throw InvalidInputError("annihilated_overlap: single mode only");
  if (alpha.size() != 1)
    throw InvalidInputError("annihilated_overlap: dimension mismatch");
  // a |beta> = beta |beta>.
  Complex acc(0.0, 0.0);
  for (const auto& c : components_)
    acc += c.coefficient * c.amplitude[0] * coherent_overlap(alpha, c.amplitude);
  return acc;
}

// ---------------------------------------------------------------------------
// SqueezedVacuum

SqueezedVacuum::SqueezedVacuum(Complex xi) : xi_(xi) {
  require_finite(xi, "SqueezedVacuum");
  const double magnitude = std::abs(xi_);
  mu_ = std::cosh(magnitude);
  nu_ = magnitude == 0.0
            ? Complex(0.0, 0.0)
            : std::exp(Complex(0.0, std::arg(xi_))) * std::sinh(magnitude);
}

Complex SqueezedVacuum::overlap_with_coherent(const CVector& alpha) const {
  if (alpha.size() != 1)
    throw InvalidInputError("overlap_with_coherent: squeezed vacuum is single mode");
  const Complex astar = std::conj(alpha[0]);
  const Complex exponent = -0.5 * std::norm(alpha[0]) - nu_ * astar * astar / (2.0 * mu_);
  return std::exp(exponent) / std::sqrt(mu_);
}

Complex SqueezedVacuum::annihilated_overlap(const CVector& alpha) const {
  // (mu a + nu a^dag)|xi,0> = 0, hence <alpha|a|psi> = -(nu/mu) alpha* <alpha|psi>.
  return -(nu_ / mu_) * std::conj(alpha[0]) * overlap_with_coherent(alpha);
}

CVector SqueezedVacuum::fock_coefficients(int cutoff) const {
  CVector psi = CVector::Zero(cutoff + 1);
  // psi_0 = 1/sqrt(mu); psi_{n+2} = psi_n * (-nu/(2 mu)) * sqrt((n+1)(n+2)) / (n/2 + 1).
  Complex c = Complex(1.0 / std::sqrt(mu_), 0.0);
  psi[0] = c;
  for (int n = 0; n + 2 <= cutoff; n += 2) {
    c *= (-nu_ / (2.0 * mu_)) * std::sqrt(static_cast<double>((n + 1) * (n + 2))) /
         (static_cast<double>(n) / 2.0 + 1.0);
    psi[n + 2] = c;
  }
  return psi;
}

// ---------------------------------------------------------------------------
// FockVector

FockVector::FockVector(CVector coefficients) : coefficients_(std::move(coefficients)) {
  if (coefficients_.size() == 0)
    throw InvalidInputError("FockVector: empty coefficient vector");
  require_finite(coefficients_, "FockVector");
  const double norm = coefficients_.norm();
  if (!(norm > 0.0)) throw InvalidInputError("FockVector: zero vector is not a state");
  coefficients_ /= norm;
}

Complex FockVector::overlap_with_coherent(const CVector& alpha) const {
  if (alpha.size() != 1)
    throw InvalidInputError("overlap_with_coherent: Fock vector is single mode");
  // <alpha|n> = e^{-|alpha|^2/2} (alpha*)^n / sqrt(n!), accumulated by recurrence.
  const Complex astar = std::conj(alpha[0]);
  Complex weight = std::exp(Complex(-0.5 * std::norm(alpha[0]), 0.0));
  Complex acc(0.0, 0.0);
  for (int n = 0; n < coefficients_.size(); ++n) {
    acc += coefficients_[n] * weight;
    weight *= astar / std::sqrt(static_cast<double>(n + 1));
  }
  return acc;
}

Complex FockVector::annihilated_overlap(const CVector& alpha) const {
  // a |psi> has coefficients psi_{n+1} sqrt(n+1).
  const int top = static_cast<int>(coefficients_.size()) - 1;
  if (top == 0) return Complex(0.0, 0.0);
  CVector shifted(top);
  for (int n = 0; n < top; ++n)
    shifted[n] = coefficients_[n + 1] * std::sqrt(static_cast<double>(n + 1));
  const Complex astar = std::conj(alpha[0]);
  Complex weight = std::exp(Complex(-0.5 * std::norm(alpha[0]), 0.0));
  Complex acc(0.0, 0.0);
  for (int n = 0; n < shifted.size(); ++n) {
    acc += shifted[n] * weight;
    weight *= astar / std::sqrt(static_cast<double>(n + 1));
  }
  return acc;
}

// ---------------------------------------------------------------------------
// StateModel

int StateModel::modes() const {
  return std::visit([](const auto& s) { return s.modes(); }, value_);
}

Complex StateModel::overlap_with_coherent(const CVector& alpha) const {
  return std::visit([&](const auto& s) { return s.overlap_with_coherent(alpha); }, value_);
}

Complex StateModel::annihilated_overlap(const CVector& alpha) const {
  if (modes() != 1 || alpha.size() != 1)
    throw InvalidInputError("annihilated_overlap: single mode only");
  return std::visit([&](const auto& s) { return s.annihilated_overlap(alpha); }, value_);
}

// ---------------------------------------------------------------------------
// Builders

StateModel make_compass(const CompassSpec& spec) {
  if (spec.components < 2) throw InvalidInputError("make_compass: need R >= 2 components");
  if (!(spec.beta > 0.0))
    throw InvalidInputError("make_compass: beta must be positive (components coincide at 0)");
  std::vector<CoherentComponent> comps;
  comps.reserve(static_cast<std::size_t>(spec.components));
  for (int k = 0; k < spec.components; ++k) {
    CVector amp(1);
    amp[0] = spec.beta * std::exp(Complex(0.0, 2.0 * M_PI * k / spec.components));
    comps.push_back({Complex(1.0, 0.0), std::move(amp)});
  }
  // Equal coefficients; the constructor's Gram normalization reproduces the
  // closed-form kappa_k = (sum_{k1,k2} exp[-beta^2 + beta^2 e^{2pi i (k2-k1)/R}])^{-1/2}.
  return StateModel(CoherentSuperposition(1, std::move(comps)));
}

StateModel make_even_cat(double beta) { return make_compass({2, beta}); }

CVector coherent_fock_coefficients(Complex alpha, int cutoff) {
  CVector psi(cutoff + 1);
  Complex c = std::exp(Complex(-0.5 * std::norm(alpha), 0.0));
  for (int n = 0; n <= cutoff; ++n) {
    psi[n] = c;
    c *= alpha / std::sqrt(static_cast<double>(n + 1));
  }
  return psi;
}

CVector fock_coefficients(const StateModel& state, int cutoff) {
  if (state.modes() != 1)
    throw InvalidInputError("fock_coefficients: single mode only");
  if (cutoff < 0) throw InvalidInputError("fock_coefficients: negative cutoff");
  if (state.is_squeezed()) return state.squeezed().fock_coefficients(cutoff);
  if (state.is_fock()) {
    CVector psi = CVector::Zero(cutoff + 1);
    const CVector& c = state.fock().coefficients();
    for (int n = 0; n <= cutoff && n < c.size(); ++n) psi[n] = c[n];
    return psi;
  }
  CVector psi = CVector::Zero(cutoff + 1);
  for (const auto& comp : state.superposition().components())
    psi += comp.coefficient * coherent_fock_coefficients(comp.amplitude[0], cutoff);
  return psi;
}

}  // namespace ncdeg
