#pragma once

#include "ncdeg/amplitude_config.hpp"
#include "ncdeg/types.hpp"

namespace ncdeg {

/// <alpha|beta> = exp(-|alpha|^2/2 - |beta|^2/2 + alpha* . beta), the product
/// over modes of the single-mode Gaussian kernel. |<alpha|beta>| <= 1 with
/// equality iff alpha == beta.
Complex coherent_overlap(const CVector& alpha, const CVector& beta);

/// Gram matrix of the configuration: entries[i][j] = <alpha_i|alpha_j>.
/// Hermitian, unit diagonal, positive definite for distinct amplitudes.
CMatrix coherent_gram(const AmplitudeConfiguration& cfg);

}  // namespace ncdeg
