#include "ncdeg/fock_oracle.hpp"

#include <cmath>

#include "ncdeg/states.hpp"

namespace ncdeg {

namespace {

constexpr double tail_threshold = 1e-8;

void check_cutoff(int cutoff) {
  if (cutoff < 1 || cutoff > fock_max_cutoff)
    throw InvalidInputError("fock oracle: cutoff out of range [1, 200]");
}

void check_amplitude_scale(double max_abs, int cutoff) {
  if (max_abs > static_cast<double>(cutoff) / 10.0)
    throw CutoffError("fock oracle: amplitude too large for cutoff (need |alpha| <= cutoff/10)");
}

double quotient(const CMatrix& op, const CVector& psi) {
  const double norm2 = psi.squaredNorm();
  if (!(norm2 > 0.0)) throw InvalidInputError("fock oracle: zero state vector");
  return std::real(psi.dot(op * psi)) / norm2;
}

}  // namespace

CMatrix fock_annihilation(int cutoff) {
  CMatrix a = CMatrix::Zero(cutoff + 1, cutoff + 1);
  for (int n = 1; n <= cutoff; ++n) a(n - 1, n) = std::sqrt(static_cast<double>(n));
  return a;
}

CMatrix fock_operator_matrix(const Observable& obs, int cutoff) {
  check_cutoff(cutoff);
  if (obs.modes() != 1)
    throw InvalidInputError("fock oracle: single-mode observables only");
  const int dim = cutoff + 1;
  if (obs.is_projector()) {
    const CVector psi = fock_coefficients(obs.state(), cutoff);
    return psi * psi.adjoint();
  }
  const CMatrix a = fock_annihilation(cutoff);
  const CMatrix ad = a.adjoint();
  CMatrix op = CMatrix::Zero(dim, dim);
  for (const auto& [mono, coeff] : obs.poly().terms()) {
    CMatrix term = CMatrix::Identity(dim, dim);
    for (int p = 0; p < mono.creation[0]; ++p) term = ad * term;
    for (int p = 0; p < mono.annihilation[0]; ++p) term = term * a;
    op += coeff * term;
  }
  return op;
}

double fock_oracle_expectation(const Observable& obs, const StateModel& state, int cutoff) {
  check_cutoff(cutoff);
  if (state.modes() != 1)
    throw InvalidInputError("fock oracle: single-mode states only");
  if (state.is_superposition()) {
    double max_abs = 0.0;
    for (const auto& c : state.superposition().components())
      max_abs = std::max(max_abs, std::abs(c.amplitude[0]));
    check_amplitude_scale(max_abs, cutoff);
  }
  const CVector psi = fock_coefficients(state, cutoff);
  if (fock_tail_estimate(psi) > tail_threshold)
    throw CutoffError("fock oracle: cutoff too small (state tail above 1e-8)");
  return quotient(fock_operator_matrix(obs, cutoff), psi);
}

double fock_oracle_expectation(const Observable& obs, const AmplitudeConfiguration& cfg,
                               const CVector& lambda, int cutoff) {
  check_cutoff(cutoff);
  if (cfg.modes() != 1)
    throw InvalidInputError("fock oracle: single-mode configurations only");
  if (lambda.size() != cfg.size())
    throw InvalidInputError("fock oracle: coefficient length != r");
  double max_abs = 0.0;
  for (int k = 0; k < cfg.size(); ++k) max_abs = std::max(max_abs, std::abs(cfg.amplitude(k)[0]));
  check_amplitude_scale(max_abs, cutoff);

  CVector psi = CVector::Zero(cutoff + 1);
  for (int k = 0; k < cfg.size(); ++k)
    psi += lambda[k] * coherent_fock_coefficients(cfg.amplitude(k)[0], cutoff);
  if (fock_tail_estimate(psi) > tail_threshold)
    throw CutoffError("fock oracle: cutoff too small (state tail above 1e-8)");
  return quotient(fock_operator_matrix(obs, cutoff), psi);
}

double fock_tail_estimate(const CVector& psi) {
  const double total = psi.squaredNorm();
  if (!(total > 0.0)) return 0.0;
  const Eigen::Index n = psi.size();
  const Eigen::Index tail = std::min<Eigen::Index>(10, n);
  return psi.tail(tail).squaredNorm() / total;
}

}  // namespace ncdeg
