#pragma once

#include <complex>
#include <optional>
#include <span>
#include <vector>

#include "eps/gauges.hpp"
#include "eps/hamiltonian.hpp"

namespace eps {

/** Discretized Wigner function on a uniform rectangular (q,p) grid. */
struct PhaseGrid {
  double q_min = -1.0, q_max = 1.0;
  double p_min = -1.0, p_max = 1.0;
  int nq = 8, np = 8;
  double t = 0.0;
  std::vector<double> values;  ///< row-major, index i*np + j for (q_i, p_j)

  static PhaseGrid make(double q_min, double q_max, double p_min, double p_max,
                        int nq, int np);

  double dq() const { return (q_max - q_min) / (nq - 1); }
  double dp() const { return (p_max - p_min) / (np - 1); }
  double q_at(int i) const { return q_min + i * dq(); }
  double p_at(int j) const { return p_min + j * dp(); }
  double& at(int i, int j) { return values[static_cast<size_t>(i) * np + j]; }
  double at(int i, int j) const { return values[static_cast<size_t>(i) * np + j]; }

  /** Midpoint-rule total mass dq*dp*sum(w). */
  double mass() const;
  void validate() const;
};

enum class InitialKind { GaussianPacket, MollifiedDeltaLine };

/**
 * Initial Wigner data. GaussianPacket is a normalized Gaussian centered at
 * (q0,p0) with widths (sq,sp). MollifiedDeltaLine is the separable profile
 * c_norm * exp(-(k*m/a) q) * G_sp(p - a), the t = 0 spatial factor of the
 * analytic solution with the momentum delta mollified to width sp.
 */
struct InitialCondition {
  InitialKind kind = InitialKind::GaussianPacket;
  double q0 = 0.0, p0 = 0.0;
  double sq = 1.0, sp = 1.0;
  // MollifiedDeltaLine parameters.
  double k = 0.0;
  double a = 1.0;
  double c_norm = 1.0;
  double mass_m = 1.0;

  void validate() const;
  double evaluate(double q, double p) const;
  /** Fraction of a GaussianPacket's mass inside the given bounds. */
  double fraction_inside(double q_lo, double q_hi, double p_lo,
                         double p_hi) const;
};

/**
 * Advection field (vq, vp) of a gauge's transport PDE, read off the Wigner
 * Hamiltonian at each requested time.
 */
class TransportField {
 public:
  TransportField(Gauge gauge, PhysicalParams params, HarmonicDrive drive);

  /** Field of an arbitrary Hamiltonian; grid evolution only, no closed-form
   *  characteristic flow. */
  static TransportField custom(HamiltonianSpec spec);

  bool is_custom() const { return custom_; }
  Gauge gauge() const { return gauge_; }
  const PhysicalParams& params() const { return params_; }
  const HarmonicDrive& drive() const { return drive_; }

  /** Velocity polynomials at time t (thread-safe, built per call). */
  TransportPolynomials polynomials_at(double t) const;
  double vq(double q, double p, double t) const;
  double vp(double q, double p, double t) const;

 private:
  Gauge gauge_;
  PhysicalParams params_;
  HarmonicDrive drive_;
  HamiltonianSpec spec_;
  bool custom_ = false;
};

/**
 * Exact characteristic flow of the gauge's transport field, in closed form.
 * Maps (q,p) at time t_from to its position at time t_to (either direction).
 * Complex-valued in phasor mode; real parts are exact in RealCosine mode.
 */
struct FlowPoint {
  std::complex<double> q;
  std::complex<double> p;
};
FlowPoint characteristic_flow(Gauge gauge, const PhysicalParams& params,
                              const HarmonicDrive& drive,
                              std::complex<double> q, std::complex<double> p,
                              double t_from, double t_to);

/** Momentum gained along characteristics between t0 and t1 (0 in A-gauge). */
std::complex<double> characteristic_momentum_kick(Gauge gauge,
                                                  const PhysicalParams& params,
                                                  const HarmonicDrive& drive,
                                                  double t0, double t1);

struct TrustDomain {
  double q_min, q_max, p_min, p_max;
  bool contains(double q, double p) const {
    return q >= q_min && q <= q_max && p >= p_min && p <= p_max;
  }
};

struct CharQuery {
  double q;
  double p;
};

/**
 * Evaluates the exact advected solution at time t_final for each query point
 * by back-tracing its characteristic to t = 0 and sampling the initial data.
 * Foot points outside the optional trust domain are flagged per point.
 */
std::vector<double> evolve_characteristics(
    const InitialCondition& w0, const TransportField& field, double t_final,
    std::span<const CharQuery> queries,
    const std::optional<TrustDomain>& trust = std::nullopt,
    std::vector<bool>* extrapolated = nullptr);

enum class InterpOrder { Linear, Cubic };

struct SemiLagrangianDiagnostics {
  double max_step_displacement_fraction = 0.0;
  bool large_displacement_warning = false;
};

/**
 * Semi-Lagrangian update: each step back-traces every node one dt along the
 * field (explicit midpoint rule) and interpolates the previous grid; values
 * outside the domain read as zero. Unconditionally stable; a diagnostic
 * warns when a single step displaces by more than 25% of the domain.
 */
PhaseGrid evolve_semilagrangian(const PhaseGrid& grid,
                                const TransportField& field, double dt,
                                int steps, InterpOrder order,
                                SemiLagrangianDiagnostics* diag = nullptr);

/** Interpolate grid values at (q,p); zero outside the domain. */
double interpolate_grid(const PhaseGrid& grid, double q, double p,
                        InterpOrder order);

struct FrameCoords {
  std::complex<double> xi;
  std::complex<double> eta;
  double tau;
};

/** Moving frame for the A-gauge AC analysis (phasor mode, omega > 0). */
FrameCoords moving_frame_a(double q, double p, double t,
                           const PhysicalParams& params,
                           const HarmonicDrive& drive);

/** Moving frame for the phi-gauge AC analysis (phasor mode, omega > 0). */
FrameCoords moving_frame_phi(double q, double p, double t,
                             const PhysicalParams& params,
                             const HarmonicDrive& drive);

struct AnalyticConstants {
  double c_norm = 1.0;
  double k = 0.0;
  double a = 1.0;
  double sp = 0.05;  ///< mollification width of the momentum delta
};

/**
 * Separable analytic solution in frame coordinates:
 * c_norm * exp(-(k/alpha) e^{-alpha t}) * exp(-(k m / a) xi) * G_sp(eta - a).
 * Requires alpha > 0 and a != 0.
 */
std::complex<double> analytic_w(std::complex<double> xi,
                                std::complex<double> eta, double t,
                                const AnalyticConstants& constants,
                                const PhysicalParams& params);

}  // namespace eps
