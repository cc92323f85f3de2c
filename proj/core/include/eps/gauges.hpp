#pragma once

#include <complex>

namespace eps {

enum class Gauge { A, Phi };

struct PhysicalParams {
  double m = 1.0;      ///< particle mass
  double e = 1.0;      ///< particle charge
  double c = 1.0;      ///< speed-of-light constant in the minimal coupling
  double alpha = 0.0;  ///< damping constant, 1/time
  double hbar = 1.0;
  int n_particles = 1;  ///< N in the conductivity formula

  void validate() const;
};

enum class DriveRepresentation { RealCosine, ComplexPhasor };

/**
 * Uniform harmonic electric field E(t). RealCosine gives
 * E(t) = E0*cos(omega*t + phase); ComplexPhasor gives
 * E(t) = E0*exp(i*(omega*t + phase)).
 */
struct HarmonicDrive {
  double amplitude = 0.0;  ///< E0
  double omega = 0.0;      ///< angular frequency, rad/time
  double phase = 0.0;      ///< radians
  DriveRepresentation representation = DriveRepresentation::RealCosine;

  void validate() const;

  /** E0 * exp(i*(omega*t + phase)), regardless of representation. */
  std::complex<double> field_phasor(double t) const;
  /** E(t) in the configured representation (imag = 0 for RealCosine). */
  std::complex<double> field(double t) const;
};

/**
 * Vector potential A(t) = -c * int^t exp(alpha*s) E(s) ds, with the
 * integration constant chosen so that A has no constant term. Rejects
 * alpha = omega = 0, where that normalization is undefined.
 */
std::complex<double> a_gauge_potential(const HarmonicDrive& drive,
                                       const PhysicalParams& params, double t);

/** Scalar potential phi(q,t) = -q * E(t). */
std::complex<double> phi_gauge_potential(const HarmonicDrive& drive, double q,
                                         double t);

/**
 * The p-translation -(e/c) A(t) by which the phi-gauge canonical momentum
 * exceeds the A-gauge one; maps Wigner functions between the gauges.
 */
std::complex<double> gauge_momentum_shift(const HarmonicDrive& drive,
                                          const PhysicalParams& params,
                                          double t);

}  // namespace eps
