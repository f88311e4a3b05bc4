#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace ncdeg {

using Complex = std::complex<double>;
using CVector = Eigen::VectorXcd;
using CMatrix = Eigen::MatrixXcd;
using RVector = Eigen::VectorXd;
using RMatrix = Eigen::MatrixXd;

/// Base class of all toolkit errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed input: dimension mismatch, non-finite value, non-Hermitian
/// observable, coincident amplitudes, out-of-range parameter.
class InvalidInputError : public Error {
 public:
  using Error::Error;
};

/// The Gram matrix is too ill-conditioned for a reliable eigensolve.
/// Carries the condition-number estimate so callers can penalize instead
/// of aborting.
class ConditioningError : public Error {
 public:
  ConditioningError(const std::string& what, double estimate)
      : Error(what), estimate_(estimate) {}
  double condition_estimate() const { return estimate_; }

 private:
  double estimate_;
};

/// The outer optimization keeps improving while the amplitudes escape the
/// search region: the observable is unbounded in the requested direction.
class UnboundedDirectionError : public Error {
 public:
  using Error::Error;
};

/// Every optimizer start ended in a conditioning penalty.
class DegenerateConfigurationError : public Error {
 public:
  using Error::Error;
};

/// Input lies outside the validity region of an approximation formula.
class ApproximationDomainError : public Error {
 public:
  using Error::Error;
};

/// Fock-space cutoff too small for the requested amplitudes.
class CutoffError : public Error {
 public:
  using Error::Error;
};

/// A family of witness bounds violates the nesting monotonicity; signals
/// an upstream optimizer failure.
class NonMonotoneFamilyError : public Error {
 public:
  using Error::Error;
};

inline bool is_finite(double x) { return std::isfinite(x); }
inline bool is_finite(const Complex& z) {
  return std::isfinite(z.real()) && std::isfinite(z.imag());
}

inline void require_finite(const Complex& z, const char* what) {
  if (!is_finite(z)) throw InvalidInputError(std::string(what) + ": non-finite value");
}

inline void require_finite(const CVector& v, const char* what) {
  for (Eigen::Index i = 0; i < v.size(); ++i) require_finite(v[i], what);
}

/// z^n for small nonnegative integer n by repeated multiplication.
inline Complex ipow(Complex z, int n) {
  Complex acc(1.0, 0.0);
  while (n > 0) {
    if (n & 1) acc *= z;
    z *= z;
    n >>= 1;
  }
  return acc;
}

}  // namespace ncdeg
