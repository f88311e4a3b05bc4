#pragma once

#include <variant>
#include <vector>

#include "ncdeg/amplitude_config.hpp"
#include "ncdeg/types.hpp"

namespace ncdeg {

class StateModel;

/// One term of a coherent superposition: coefficient * |amplitude>.
struct CoherentComponent {
  Complex coefficient;
  CVector amplitude;
};

/// Normalized finite superposition sum_k kappa_k |beta_k> (N modes).
/// The constructor rescales the coefficients so that the self-overlap,
/// computed through the Gram matrix of the components, is exactly one.
class CoherentSuperposition {
 public:
  CoherentSuperposition(int modes, std::vector<CoherentComponent> components);

  int modes() const { return modes_; }
  int component_count() const { return static_cast<int>(components_.size()); }
  const std::vector<CoherentComponent>& components() const { return components_; }

  Complex overlap_with_coherent(const CVector& alpha) const;
  Complex annihilated_overlap(const CVector& alpha) const;

 private:
  int modes_;
  std::vector<CoherentComponent> components_;
};

/// Squeezed vacuum |xi, 0> with mu = cosh|xi|, nu = e^{i arg xi} sinh|xi|.
/// Overlap with a coherent state: <alpha|xi,0> = exp(-|alpha|^2/2
/// - nu alpha*^2 / (2 mu)) / sqrt(mu). Single mode.
class SqueezedVacuum {
 public:
  explicit SqueezedVacuum(Complex xi);

  int modes() const { return 1; }
  Complex xi() const { return xi_; }
  double mu() const { return mu_; }
  Complex nu() const { return nu_; }

  Complex overlap_with_coherent(const CVector& alpha) const;
  Complex annihilated_overlap(const CVector& alpha) const;

  /// Number-basis coefficients up to `cutoff` (inclusive); odd entries vanish.
  CVector fock_coefficients(int cutoff) const;

 private:
  Complex xi_;
  double mu_;
  Complex nu_;
};

/// State given by its number-basis coefficients psi_n, n = 0..cutoff.
/// Normalized to unit two-norm at construction. Single mode.
class FockVector {
 public:
  explicit FockVector(CVector coefficients);

  int modes() const { return 1; }
  int cutoff() const { return static_cast<int>(coefficients_.size()) - 1; }
  const CVector& coefficients() const { return coefficients_; }

  Complex overlap_with_coherent(const CVector& alpha) const;
  Complex annihilated_overlap(const CVector& alpha) const;

 private:
  CVector coefficients_;
};

/// Tagged union over the analytic state models. All variants are normalized
/// and expose closed-form overlaps with coherent states.
class StateModel {
 public:
  StateModel(CoherentSuperposition s) : value_(std::move(s)) {}
  StateModel(SqueezedVacuum s) : value_(std::move(s)) {}
  StateModel(FockVector s) : value_(std::move(s)) {}

  int modes() const;

  bool is_superposition() const { return std::holds_alternative<CoherentSuperposition>(value_); }
  bool is_squeezed() const { return std::holds_alternative<SqueezedVacuum>(value_); }
  bool is_fock() const { return std::holds_alternative<FockVector>(value_); }

  const CoherentSuperposition& superposition() const {
    return std::get<CoherentSuperposition>(value_);
  }
  const SqueezedVacuum& squeezed() const { return std::get<SqueezedVacuum>(value_); }
  const FockVector& fock() const { return std::get<FockVector>(value_); }

  /// <alpha|psi>.
  Complex overlap_with_coherent(const CVector& alpha) const;
  /// <alpha| a |psi> (single mode).
  Complex annihilated_overlap(const CVector& alpha) const;

 private:
  std::variant<CoherentSuperposition, SqueezedVacuum, FockVector> value_;
};

/// Compass state: R equal-weight coherent components on the circle of
/// radius beta; R = 2 is the even coherent (cat) state.
struct CompassSpec {
  int components;  // R >= 2
  double beta;     // radius >= 0
};

StateModel make_compass(const CompassSpec& spec);

/// Even coherent state, the R = 2 compass.
StateModel make_even_cat(double beta);

/// Number-basis expansion of the state up to `cutoff` (inclusive).
/// Single mode.
CVector fock_coefficients(const StateModel& state, int cutoff);

/// Number-basis coefficients of a coherent state |alpha>.
CVector coherent_fock_coefficients(Complex alpha, int cutoff);

}  // namespace ncdeg
