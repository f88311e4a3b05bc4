#pragma once

#include "ncdeg/amplitude_config.hpp"
#include "ncdeg/observable.hpp"
#include "ncdeg/overlap.hpp"

namespace ncdeg {

/// Image of an operator under the G-map for a fixed amplitude configuration:
/// an r x r matrix of coherent-state matrix elements <alpha_i| L |alpha_j>,
/// together with the configuration it was built from.
struct GMatrix {
  CMatrix entries;
  AmplitudeConfiguration source;
};

/// G_1: the Gram matrix of the configuration, wrapped with its source.
GMatrix gram_matrix(const AmplitudeConfiguration& cfg);

/// G_K for a Hermitian observable. Polynomials go through the scalar symbol,
///   entries[i][j] = k(alpha_i*, alpha_j) <alpha_i|alpha_j>;
/// rank-one projectors factor as G = g g^dag with g from g_vector.
GMatrix g_matrix(const Observable& obs, const AmplitudeConfiguration& cfg);

/// g_{|psi>} = (<alpha_i|psi>)_i, the vector through which rank-one images
/// factor: G_{|psi2><psi1|} = g_{psi2} g_{psi1}^dag.
CVector g_vector(const StateModel& state, const AmplitudeConfiguration& cfg);

/// G-map of an arbitrary (possibly non-Hermitian) polynomial. The Observable
/// route enforces Hermiticity; this lower-level entry point exposes the full
/// homomorphism for identities such as conjugation and linearity.
CMatrix polynomial_g_matrix(const NormalOrderedPolynomial& poly,
                            const AmplitudeConfiguration& cfg);

/// G_a = G_1 diag(alpha_1 ... alpha_r). Single mode.
CMatrix annihilation_g_matrix(const AmplitudeConfiguration& cfg);

/// G_{a K}. For a polynomial with symbol k this uses the renormal-ordered
/// symbol beta k(alpha*, beta) + dk/dalpha*, computed exactly on the
/// coefficient map; for a projector it is (<alpha_i|a|psi>)_i g^dag.
/// Single mode.
GMatrix annihilation_weighted_g_matrix(const Observable& obs,
                                       const AmplitudeConfiguration& cfg);

/// G_{[a, K]} = G_{a K} - G_K diag(alpha). Single mode.
CMatrix commutator_g_matrix(const Observable& obs, const AmplitudeConfiguration& cfg);

}  // namespace ncdeg
