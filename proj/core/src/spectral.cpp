#include "ncdeg/spectral.hpp"

#include <cmath>
#include <limits>

namespace ncdeg {

namespace {

void require_hermitian(const CMatrix& m, const char* what) {
  const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
  if ((m - m.adjoint()).cwiseAbs().maxCoeff() > 1e-10 * scale)
    throw InvalidInputError(std::string(what) + ": matrix is not Hermitian");
}

/// Condition number of a Hermitian positive definite matrix; throws when the
/// matrix fails to be positive definite or exceeds the guard.
double check_conditioning(const CMatrix& g1) {
  Eigen::SelfAdjointEigenSolver<CMatrix> es(g1, Eigen::EigenvaluesOnly);
  const double lo = es.eigenvalues().minCoeff();
  const double hi = es.eigenvalues().maxCoeff();
  if (!(lo > 0.0))
    throw ConditioningError("G_1 is not positive definite",
                            std::numeric_limits<double>::infinity());
  const double cond = hi / lo;
  if (cond > condition_guard)
    throw ConditioningError("G_1 condition number above guard threshold", cond);
  return cond;
}

}  // namespace

EigenSolution extremal_generalized_eigen(const CMatrix& gk, const CMatrix& g1,
                                         ExtremalSide side) {
  if (gk.rows() != gk.cols() || g1.rows() != g1.cols() || gk.rows() != g1.rows())
    throw InvalidInputError("extremal_generalized_eigen: dimension mismatch");
  require_hermitian(gk, "G_K");
  require_hermitian(g1, "G_1");
  const double cond = check_conditioning(g1);

  Eigen::GeneralizedSelfAdjointEigenSolver<CMatrix> solver(gk, g1,
                                                           Eigen::ComputeEigenvectors | Eigen::Ax_lBx);
  if (solver.info() != Eigen::Success)
    throw ConditioningError("generalized eigensolve failed to converge", cond);

  const Eigen::Index idx = side == ExtremalSide::Min ? 0 : gk.rows() - 1;
  EigenSolution sol;
  sol.value = solver.eigenvalues()[idx];
  sol.coefficients = solver.eigenvectors().col(idx);
  sol.coefficients.normalize();
  sol.residual = (gk * sol.coefficients - sol.value * (g1 * sol.coefficients)).norm();
  sol.condition_estimate = cond;
  return sol;
}

EigenSolution extremal_generalized_eigen(const GMatrix& gk, const GMatrix& g1,
                                         ExtremalSide side) {
  return extremal_generalized_eigen(gk.entries, g1.entries, side);
}

RVector generalized_eigenvalues(const CMatrix& gk, const CMatrix& g1) {
  require_hermitian(gk, "G_K");
  require_hermitian(g1, "G_1");
  check_conditioning(g1);
  Eigen::GeneralizedSelfAdjointEigenSolver<CMatrix> solver(gk, g1, Eigen::EigenvaluesOnly | Eigen::Ax_lBx);
  if (solver.info() != Eigen::Success)
    throw ConditioningError("generalized eigensolve failed to converge", 0.0);
  return solver.eigenvalues();
}

std::pair<double, double> closed_form_r2(const CMatrix& gk, const CMatrix& g1) {
  if (gk.rows() != 2 || gk.cols() != 2 || g1.rows() != 2 || g1.cols() != 2)
    throw InvalidInputError("closed_form_r2: expects 2x2 matrices");
  require_hermitian(gk, "G_K");
  require_hermitian(g1, "G_1");
  check_conditioning(g1);

  const CMatrix m = g1.inverse() * gk;
  const double trace = std::real(m.trace());
  const double det = std::real(m.determinant());
  double disc = trace * trace - 4.0 * det;
  if (disc < 0.0) {
    // Analytically nonnegative for a Hermitian pencil; clamp floating dust.
    if (disc < -1e-10)
      throw InvalidInputError("closed_form_r2: negative discriminant (non-Hermitian input?)");
    disc = 0.0;
  }
  const double delta = std::sqrt(disc);
  return {0.5 * (trace - delta), 0.5 * (trace + delta)};
}

std::pair<double, double> closed_form_r2(const GMatrix& gk, const GMatrix& g1) {
  return closed_form_r2(gk.entries, g1.entries);
}

double char_poly_eval(const CMatrix& gk, const CMatrix& g1, double b) {
  if (gk.rows() != gk.cols() || gk.rows() != g1.rows() || g1.rows() != g1.cols())
    throw InvalidInputError("char_poly_eval: dimension mismatch");
  CMatrix m = gk - b * g1;
  // Gaussian elimination with partial pivoting, kept free of the eigensolver
  // machinery so it can serve as an independent root oracle.
  const Eigen::Index n = m.rows();
  Complex det(1.0, 0.0);
  for (Eigen::Index col = 0; col < n; ++col) {
    Eigen::Index pivot = col;
    for (Eigen::Index row = col + 1; row < n; ++row)
      if (std::abs(m(row, col)) > std::abs(m(pivot, col))) pivot = row;
    if (std::abs(m(pivot, col)) == 0.0) return 0.0;
    if (pivot != col) {
      m.row(pivot).swap(m.row(col));
      det = -det;
    }
    det *= m(col, col);
    for (Eigen::Index row = col + 1; row < n; ++row) {
      const Complex factor = m(row, col) / m(col, col);
      m.row(row).tail(n - col) -= factor * m.row(col).tail(n - col);
    }
  }
  return det.real();
}

double stationarity_residual(const Observable& obs, const AmplitudeConfiguration& cfg,
                             const EigenSolution& sol) {
  if (cfg.modes() != 1)
    throw InvalidInputError("stationarity_residual: single mode only");
  if (sol.coefficients.size() != cfg.size())
    throw InvalidInputError("stationarity_residual: coefficient length != r");
  const CMatrix gc = commutator_g_matrix(obs, cfg);
  const CMatrix g1 = coherent_gram(cfg);
  const CVector& l = sol.coefficients;
  const double denom = std::real(l.dot(g1 * l));
  return std::abs(l.dot(gc * l)) / denom;
}

}  // namespace ncdeg
