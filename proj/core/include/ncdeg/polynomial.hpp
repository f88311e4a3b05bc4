#pragma once

#include <map>
#include <vector>

#include "ncdeg/types.hpp"

namespace ncdeg {

/// One normally ordered ladder monomial: the product over modes of
/// (a_mode^dagger)^creation[mode] * (a_mode)^annihilation[mode].
struct LadderMonomial {
  std::vector<int> creation;
  std::vector<int> annihilation;

  LadderMonomial() = default;
  LadderMonomial(std::vector<int> m, std::vector<int> n)
      : creation(std::move(m)), annihilation(std::move(n)) {}

  /// Single-mode shorthand.
  static LadderMonomial single(int m, int n) { return LadderMonomial({m}, {n}); }

  int modes() const { return static_cast<int>(creation.size()); }

  friend bool operator==(const LadderMonomial& a, const LadderMonomial& b) {
    return a.creation == b.creation && a.annihilation == b.annihilation;
  }
  friend bool operator<(const LadderMonomial& a, const LadderMonomial& b) {
    if (a.creation != b.creation) return a.creation < b.creation;
    return a.annihilation < b.annihilation;
  }
};

/// Polynomial in ladder operators, stored already in normal order: a
/// coefficient map over LadderMonomials. Its coherent-state matrix elements
/// factor through the scalar symbol
///   <alpha| K |beta> = k(alpha*, beta) <alpha|beta>,
///   k(alpha*, beta)  = sum_terms coeff * prod_modes (alpha*_m)^creation (beta_m)^annihilation.
class NormalOrderedPolynomial {
 public:
  /// Per-mode exponent cap; overflow guard for the symbol evaluation.
  static constexpr int max_mode_degree = 16;

  explicit NormalOrderedPolynomial(int modes);

  static NormalOrderedPolynomial identity(int modes);
  /// x(0)^2 = (a + a^dagger)^2 = 2 a^dagger a + a^2 + a^dagger^2 + 1 (single mode).
  static NormalOrderedPolynomial quadrature_squared();

  int modes() const { return modes_; }
  const std::map<LadderMonomial, Complex>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }

  /// Adds coeff * monomial, merging with an existing term; drops the term if
  /// the merged coefficient vanishes.
  void add_term(const LadderMonomial& mono, Complex coeff);

  /// Coefficient of (m, n); zero if absent.
  Complex coefficient(const LadderMonomial& mono) const;

  /// coeff(m,n) == conj(coeff(n,m)) for every term, within tol.
  bool is_hermitian(double tol = 1e-12) const;

  /// The scalar symbol k(alpha*, beta). `alpha` is passed unconjugated.
  Complex symbol(const CVector& alpha, const CVector& beta) const;

  NormalOrderedPolynomial adjoint() const;
  NormalOrderedPolynomial transposed() const;
  NormalOrderedPolynomial scaled(Complex factor) const;
  NormalOrderedPolynomial plus(const NormalOrderedPolynomial& other) const;

  /// a * K, renormal-ordered with the exponent-drop rule
  /// a (a^dag)^m a^n = (a^dag)^m a^{n+1} + m (a^dag)^{m-1} a^n  (single mode).
  NormalOrderedPolynomial annihilation_times() const;
  /// K * a: appends one annihilation operator (stays normal ordered).
  NormalOrderedPolynomial times_annihilation() const;
  /// a^dagger * K: prepends one creation operator (stays normal ordered).
  NormalOrderedPolynomial creation_times() const;

  /// D(beta0) K D(beta0)^dagger: a -> a - beta0 by binomial expansion
  /// (single mode).
  NormalOrderedPolynomial displaced(Complex beta0) const;
  /// exp(-i phi n) K exp(i phi n): coeff(m,n) -> coeff * exp(i phi (n - m))
  /// (single mode).
  NormalOrderedPolynomial phase_rotated(double phi) const;

  friend NormalOrderedPolynomial operator+(const NormalOrderedPolynomial& a,
                                           const NormalOrderedPolynomial& b) {
    return a.plus(b);
  }
  friend NormalOrderedPolynomial operator*(Complex c, const NormalOrderedPolynomial& p) {
    return p.scaled(c);
  }

 private:
  void require_single_mode(const char* op) const;

  int modes_;
  std::map<LadderMonomial, Complex> terms_;
};

}  // namespace ncdeg
