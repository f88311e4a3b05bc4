#pragma once

#include "ncdeg/amplitude_config.hpp"
#include "ncdeg/observable.hpp"

namespace ncdeg {

/// Brute-force cross-check path: everything is rebuilt in the truncated
/// number basis, independent of the Gram-matrix calculus it validates.

constexpr int fock_default_cutoff = 60;
constexpr int fock_max_cutoff = 200;

/// Annihilation operator on the (cutoff+1)-dimensional truncated basis.
CMatrix fock_annihilation(int cutoff);

/// Matrix of the observable in the truncated basis. Polynomials are built
/// from ladder-matrix products, projectors from the state's number-basis
/// expansion.
CMatrix fock_operator_matrix(const Observable& obs, int cutoff);

/// <psi|K|psi> / <psi|psi> for a state model, in the truncated basis.
double fock_oracle_expectation(const Observable& obs, const StateModel& state,
                               int cutoff = fock_default_cutoff);

/// Same quotient for the superposition sum_j lambda_j |alpha_j> given by a
/// configuration and coefficient vector.
double fock_oracle_expectation(const Observable& obs, const AmplitudeConfiguration& cfg,
                               const CVector& lambda, int cutoff = fock_default_cutoff);

/// Fraction of the state's norm sitting in the top ten basis levels; the
/// truncation is rejected when this exceeds 1e-8.
double fock_tail_estimate(const CVector& psi);

}  // namespace ncdeg
