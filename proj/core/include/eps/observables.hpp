#pragma once

#include <complex>
#include <functional>
#include <span>
#include <vector>

#include "eps/dynamics.hpp"
#include "eps/gauges.hpp"

namespace eps {

/**
 * Quadrature ensemble representing initial Wigner data by weighted sample
 * points; pushed through the exact characteristic flow for observables.
 */
struct CharacteristicEnsemble {
  std::vector<double> q0;
  std::vector<double> p0;
  std::vector<double> weight;
};

/** Midpoint-rule tensor sampling of the initial condition over +-n_sigma. */
CharacteristicEnsemble make_ensemble(const InitialCondition& init, int nq,
                                     int np, double n_sigma = 8.0);

/** Shift an ensemble's momenta (gauge-matching of initial data). */
CharacteristicEnsemble shift_momentum(CharacteristicEnsemble ensemble,
                                      double delta_p);

/**
 * Mass-normalized phase-space average
 * int O(q,p) w dq dp / int w dq dp (midpoint quadrature).
 */
double expectation(const std::function<double(double, double)>& observable,
                   const PhaseGrid& grid);

/**
 * Mean velocity <dq/dt> at time t: the pi_q coefficient field of the Wigner
 * Hamiltonian, averaged over the state. Complex-valued for phasor drives.
 */
double mean_velocity(Gauge gauge, const PhaseGrid& grid,
                     const PhysicalParams& params, const HarmonicDrive& drive);
std::complex<double> mean_velocity(Gauge gauge,
                                   const CharacteristicEnsemble& ensemble,
                                   const PhysicalParams& params,
                                   const HarmonicDrive& drive, double t);

struct ConductivityEstimate {
  std::complex<double> sigma{};
  double magnitude = 0.0;
  double phase = 0.0;
  double fit_residual = 0.0;  ///< relative RMS of the phasor fit
  std::complex<double> reference{};  ///< closed-form Drude value
  Gauge gauge = Gauge::A;
  double window_start = 0.0;
  double window_end = 0.0;
  bool noisy_fit_warning = false;
};

/**
 * Extracts the complex conductivity from a mean-velocity time series by
 * least-squares phasor fit over [window_start, window_end]; sigma = N e V / E0
 * where <qdot> ~ Re[V exp(i(omega t + phase))]. For omega = 0 the series is
 * averaged over the window instead. Requires at least 3 full periods in the
 * window for AC drives.
 */
ConductivityEstimate conductivity_timeseries(std::span<const double> times,
                                             std::span<const double> velocities,
                                             const HarmonicDrive& drive,
                                             const PhysicalParams& params,
                                             double window_start,
                                             double window_end,
                                             Gauge gauge = Gauge::A);

/** Drude conductivity N e^2 / (m (alpha + i omega)). */
std::complex<double> drude_conductivity(const PhysicalParams& params,
                                        double omega);

/** Default fit window start: max(5/alpha, 2 periods), per the transient decay. */
double default_fit_window_start(const PhysicalParams& params,
                                const HarmonicDrive& drive);

}  // namespace eps
