#pragma once

#include <utility>

#include "ncdeg/gmap.hpp"

namespace ncdeg {

enum class ExtremalSide { Min, Max };

/// Solution of G_K lambda = b G_1 lambda at one end of the spectrum.
struct EigenSolution {
  double value = 0.0;           ///< extremal generalized eigenvalue (candidate bound)
  CVector coefficients;         ///< eigenvector lambda, |lambda| = 1
  double residual = 0.0;        ///< |G_K l - b G_1 l| / |l|
  double condition_estimate = 0.0;  ///< condition number of G_1
};

/// Conditioning guard on G_1; above this a ConditioningError is thrown so
/// the outer optimizer can penalize the configuration.
constexpr double condition_guard = 1e12;

/// Extremal generalized eigenpair of the Hermitian pencil (G_K, G_1),
/// computed by Cholesky whitening of G_1 followed by a Hermitian eigensolve.
EigenSolution extremal_generalized_eigen(const CMatrix& gk, const CMatrix& g1,
                                         ExtremalSide side);
EigenSolution extremal_generalized_eigen(const GMatrix& gk, const GMatrix& g1,
                                         ExtremalSide side);

/// All generalized eigenvalues of the pencil, ascending.
RVector generalized_eigenvalues(const CMatrix& gk, const CMatrix& g1);

/// Both r = 2 roots from the trace/determinant closed form
/// b = [Tr(G_1^{-1} G_K) +- sqrt(Tr^2 - 4 det)] / 2, returned (min, max).
std::pair<double, double> closed_form_r2(const CMatrix& gk, const CMatrix& g1);
std::pair<double, double> closed_form_r2(const GMatrix& gk, const GMatrix& g1);

/// det(G_K - b G_1), the characteristic polynomial of the pencil. Evaluated
/// by an in-house Gaussian elimination so it stays independent of the
/// whitened eigensolve it cross-checks.
double char_poly_eval(const CMatrix& gk, const CMatrix& g1, double b);

/// Normalized commutator expectation |lambda^dag G_{[a,K]} lambda| /
/// (lambda^dag G_1 lambda). Vanishes exactly at stationary points of the
/// outer amplitude optimization. Single mode.
double stationarity_residual(const Observable& obs, const AmplitudeConfiguration& cfg,
                             const EigenSolution& sol);

}  // namespace ncdeg
