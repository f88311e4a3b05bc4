#include "ncdeg/amplitude_config.hpp"

#include <cmath>

namespace ncdeg {

AmplitudeConfiguration::AmplitudeConfiguration(int modes, std::vector<CVector> amplitudes)
    : modes_(modes), amplitudes_(std::move(amplitudes)) {
  if (modes_ < 1) throw InvalidInputError("AmplitudeConfiguration: modes must be >= 1");
  if (amplitudes_.empty()) throw InvalidInputError("AmplitudeConfiguration: need r >= 1 amplitudes");
  for (const auto& a : amplitudes_) {
    if (a.size() != modes_)
      throw InvalidInputError("AmplitudeConfiguration: amplitude length != modes");
    require_finite(a, "AmplitudeConfiguration");
  }
  if (!pairwise_distinct(amplitudes_))
    throw InvalidInputError("AmplitudeConfiguration: coincident amplitudes (separation below tolerance)");
}

double AmplitudeConfiguration::norm() const {
  double s = 0.0;
  for (const auto& a : amplitudes_) s += a.squaredNorm();
  return std::sqrt(s);
}

bool AmplitudeConfiguration::pairwise_distinct(const std::vector<CVector>& amps, double tol) {
  for (std::size_t i = 0; i < amps.size(); ++i)
    for (std::size_t j = i + 1; j < amps.size(); ++j) {
      if ((amps[i] - amps[j]).cwiseAbs().maxCoeff() <= tol) return false;
    }
  return true;
}

RVector AmplitudeConfiguration::to_parameters() const {
  RVector x(2 * size() * modes_);
  Eigen::Index p = 0;
  for (const auto& a : amplitudes_)
    for (Eigen::Index m = 0; m < a.size(); ++m) {
      x[p++] = a[m].real();
      x[p++] = a[m].imag();
    }
  return x;
}

AmplitudeConfiguration AmplitudeConfiguration::from_parameters(const RVector& x, int r, int modes) {
  if (x.size() != 2 * r * modes)
    throw InvalidInputError("AmplitudeConfiguration: parameter vector has wrong length");
  std::vector<CVector> amps(static_cast<std::size_t>(r));
  Eigen::Index p = 0;
  for (auto& a : amps) {
    a.resize(modes);
    for (Eigen::Index m = 0; m < modes; ++m) {
      a[m] = Complex(x[p], x[p + 1]);
      p += 2;
    }
  }
  return AmplitudeConfiguration(modes, std::move(amps));
}

AmplitudeConfiguration single_mode_config(const std::vector<Complex>& amps) {
  std::vector<CVector> vecs;
  vecs.reserve(amps.size());
  for (const Complex& a : amps) {
    CVector v(1);
    v[0] = a;
    vecs.push_back(std::move(v));
  }
  return AmplitudeConfiguration(1, std::move(vecs));
}

}  // namespace ncdeg
