#include "ncdeg/overlap.hpp"

namespace ncdeg {

Complex coherent_overlap(const CVector& alpha, const CVector& beta) {
  if (alpha.size() != beta.size())
    throw InvalidInputError("coherent_overlap: length mismatch");
  require_finite(alpha, "coherent_overlap");
  require_finite(beta, "coherent_overlap");
  const Complex exponent =
      -0.5 * alpha.squaredNorm() - 0.5 * beta.squaredNorm() + alpha.dot(beta);
  return std::exp(exponent);
}

CMatrix coherent_gram(const AmplitudeConfiguration& cfg) {
  const int r = cfg.size();
  CMatrix g(r, r);
  for (int i = 0; i < r; ++i) {
    g(i, i) = 1.0;
    for (int j = i + 1; j < r; ++j) {
      g(i, j) = coherent_overlap(cfg.amplitude(i), cfg.amplitude(j));
      g(j, i) = std::conj(g(i, j));
    }
  }
  return g;
}

}  // namespace ncdeg
