#include "ncdeg/polynomial.hpp"

#include <cmath>

namespace ncdeg {

namespace {

void validate_monomial(const LadderMonomial& mono, int modes) {
  if (mono.modes() != modes || static_cast<int>(mono.annihilation.size()) != modes)
    throw InvalidInputError("LadderMonomial: exponent vectors must have one entry per mode");
  for (int m = 0; m < modes; ++m) {
    if (mono.creation[m] < 0 || mono.annihilation[m] < 0)
      throw InvalidInputError("LadderMonomial: negative exponent");
    if (mono.creation[m] > NormalOrderedPolynomial::max_mode_degree ||
        mono.annihilation[m] > NormalOrderedPolynomial::max_mode_degree)
      throw InvalidInputError("LadderMonomial: exponent above max_mode_degree");
  }
}

// n-choose-k for the small exponents admitted here.
double binomial(int n, int k) {
  double acc = 1.0;
  for (int i = 1; i <= k; ++i) acc *= static_cast<double>(n - k + i) / static_cast<double>(i);
  return acc;
}

}  // namespace

NormalOrderedPolynomial::NormalOrderedPolynomial(int modes) : modes_(modes) {
  if (modes_ < 1) throw InvalidInputError("NormalOrderedPolynomial: modes must be >= 1");
}

NormalOrderedPolynomial NormalOrderedPolynomial::identity(int modes) {
  NormalOrderedPolynomial p(modes);
  p.add_term(LadderMonomial(std::vector<int>(modes, 0), std::vector<int>(modes, 0)), 1.0);
  return p;
}

NormalOrderedPolynomial NormalOrderedPolynomial::quadrature_squared() {
  NormalOrderedPolynomial p(1);
  p.add_term(LadderMonomial::single(1, 1), 2.0);
  p.add_term(LadderMonomial::single(0, 2), 1.0);
  p.add_term(LadderMonomial::single(2, 0), 1.0);
  p.add_term(LadderMonomial::single(0, 0), 1.0);
  return p;
}

void NormalOrderedPolynomial::add_term(const LadderMonomial& mono, Complex coeff) {
  validate_monomial(mono, modes_);
  require_finite(coeff, "NormalOrderedPolynomial coefficient");
  auto it = terms_.find(mono);
  if (it == terms_.end()) {
    if (coeff != Complex(0.0, 0.0)) terms_.emplace(mono, coeff);
    return;
  }
  it->second += coeff;
  if (it->second == Complex(0.0, 0.0)) terms_.erase(it);
}

Complex NormalOrderedPolynomial::coefficient(const LadderMonomial& mono) const {
  auto it = terms_.find(mono);
  return it == terms_.end() ? Complex(0.0, 0.0) : it->second;
}

bool NormalOrderedPolynomial::is_hermitian(double tol) const {
  for (const auto& [mono, coeff] : terms_) {
    const Complex mirror = coefficient(LadderMonomial(mono.annihilation, mono.creation));
    if (std::abs(mirror - std::conj(coeff)) > tol) return false;
  }
  return true;
}

Complex NormalOrderedPolynomial::symbol(const CVector& alpha, const CVector& beta) const {
  if (alpha.size() != modes_ || beta.size() != modes_)
    throw InvalidInputError("symbol: amplitude length != modes");
  Complex acc(0.0, 0.0);
  for (const auto& [mono, coeff] : terms_) {
    Complex term = coeff;
    for (int m = 0; m < modes_; ++m) {
      term *= ipow(std::conj(alpha[m]), mono.creation[static_cast<std::size_t>(m)]);
      term *= ipow(beta[m], mono.annihilation[static_cast<std::size_t>(m)]);
    }
    acc += term;
  }
  return acc;
}

NormalOrderedPolynomial NormalOrderedPolynomial::adjoint() const {
  NormalOrderedPolynomial out(modes_);
  for (const auto& [mono, coeff] : terms_)
    out.add_term(LadderMonomial(mono.annihilation, mono.creation), std::conj(coeff));
  return out;
}

NormalOrderedPolynomial NormalOrderedPolynomial::transposed() const {
  NormalOrderedPolynomial out(modes_);
  for (const auto& [mono, coeff] : terms_)
    out.add_term(LadderMonomial(mono.annihilation, mono.creation), coeff);
  return out;
}

NormalOrderedPolynomial NormalOrderedPolynomial::scaled(Complex factor) const {
  NormalOrderedPolynomial out(modes_);
  for (const auto& [mono, coeff] : terms_) out.add_term(mono, factor * coeff);
  return out;
}

NormalOrderedPolynomial NormalOrderedPolynomial::plus(const NormalOrderedPolynomial& other) const {
  if (other.modes_ != modes_) throw InvalidInputError("plus: mode count mismatch");
  NormalOrderedPolynomial out = *this;
  for (const auto& [mono, coeff] : other.terms_) out.add_term(mono, coeff);
  return out;
}

void NormalOrderedPolynomial::require_single_mode(const char* op) const {
  if (modes_ != 1)
    throw InvalidInputError(std::string(op) + ": only single-mode polynomials are supported");
}

NormalOrderedPolynomial NormalOrderedPolynomial::annihilation_times() const {
  require_single_mode("annihilation_times");
  NormalOrderedPolynomial out(1);
  for (const auto& [mono, coeff] : terms_) {
    const int m = mono.creation[0];
    const int n = mono.annihilation[0];
    out.add_term(LadderMonomial::single(m, n + 1), coeff);
    if (m > 0) out.add_term(LadderMonomial::single(m - 1, n), coeff * static_cast<double>(m));
  }
  return out;
}

NormalOrderedPolynomial NormalOrderedPolynomial::times_annihilation() const {
  require_single_mode("times_annihilation");
  NormalOrderedPolynomial out(1);
  for (const auto& [mono, coeff] : terms_)
    out.add_term(LadderMonomial::single(mono.creation[0], mono.annihilation[0] + 1), coeff);
  return out;
}

NormalOrderedPolynomial NormalOrderedPolynomial::creation_times() const {
  require_single_mode("creation_times");
  NormalOrderedPolynomial out(1);
  for (const auto& [mono, coeff] : terms_)
    out.add_term(LadderMonomial::single(mono.creation[0] + 1, mono.annihilation[0]), coeff);
  return out;
}

NormalOrderedPolynomial NormalOrderedPolynomial::displaced(Complex beta0) const {
  require_single_mode("displaced");
  require_finite(beta0, "displaced");
  // (a^dag - beta0*)^m (a - beta0)^n stays normal ordered term by term.
  NormalOrderedPolynomial out(1);
  for (const auto& [mono, coeff] : terms_) {
    const int m = mono.creation[0];
    const int n = mono.annihilation[0];
    for (int j = 0; j <= m; ++j)
      for (int k = 0; k <= n; ++k) {
        const Complex factor = binomial(m, j) * binomial(n, k) *
                               ipow(-std::conj(beta0), m - j) * ipow(-beta0, n - k);
        out.add_term(LadderMonomial::single(j, k), coeff * factor);
      }
  }
  return out;
}

NormalOrderedPolynomial NormalOrderedPolynomial::phase_rotated(double phi) const {
  require_single_mode("phase_rotated");
  NormalOrderedPolynomial out(1);
  for (const auto& [mono, coeff] : terms_) {
    const double delta = static_cast<double>(mono.annihilation[0] - mono.creation[0]);
    out.add_term(mono, coeff * std::exp(Complex(0.0, phi * delta)));
  }
  return out;
}

}  // namespace ncdeg
