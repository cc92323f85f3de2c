#include "eps/gauges.hpp"

#include <cmath>
#include <stdexcept>

namespace eps {

void PhysicalParams::validate() const {
  if (!(m > 0.0)) throw std::invalid_argument("params: m must be > 0");
  if (!(hbar > 0.0)) throw std::invalid_argument("params: hbar must be > 0");
  if (!(c != 0.0) || !std::isfinite(c)) {
    throw std::invalid_argument("params: c must be finite and nonzero");
  }
  if (!(alpha >= 0.0)) throw std::invalid_argument("params: alpha must be >= 0");
  if (n_particles < 1) throw std::invalid_argument("params: N must be >= 1");
  if (!std::isfinite(e)) throw std::invalid_argument("params: e must be finite");
}

void HarmonicDrive::validate() const {
  if (!std::isfinite(amplitude)) {
    throw std::invalid_argument("drive: E0 must be finite");
  }
  if (!(omega >= 0.0)) throw std::invalid_argument("drive: omega must be >= 0");
  if (!std::isfinite(phase)) {
    throw std::invalid_argument("drive: phase must be finite");
  }
}

std::complex<double> HarmonicDrive::field_phasor(double t) const {
  return amplitude * std::exp(std::complex<double>(0.0, omega * t + phase));
}

std::complex<double> HarmonicDrive::field(double t) const {
  const std::complex<double> ph = field_phasor(t);
  return representation == DriveRepresentation::RealCosine
             ? std::complex<double>(ph.real(), 0.0)
             : ph;
}

std::complex<double> a_gauge_potential(const HarmonicDrive& drive,
                                       const PhysicalParams& params, double t) {
  if (drive.amplitude == 0.0) return 0.0;
  const std::complex<double> z(params.alpha, drive.omega);
  if (z == std::complex<double>(0.0)) {
    throw std::domain_error(
        "a_gauge_potential: alpha = omega = 0 leaves the antiderivative "
        "normalization undefined");
  }
  const std::complex<double> a =
      -params.c * drive.amplitude *
      std::exp(std::complex<double>(params.alpha * t,
                                    drive.omega * t + drive.phase)) /
      z;
  return drive.representation == DriveRepresentation::RealCosine
             ? std::complex<double>(a.real(), 0.0)
             : a;
}

std::complex<double> phi_gauge_potential(const HarmonicDrive& drive, double q,
                                         double t) {
  return -q * drive.field(t);
}

std::complex<double> gauge_momentum_shift(const HarmonicDrive& drive,
                                          const PhysicalParams& params,
                                          double t) {
  return -(params.e / params.c) * a_gauge_potential(drive, params, t);
}

}  // namespace eps
