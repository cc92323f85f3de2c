#include "eps/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace eps {

namespace {

using Cplx = std::complex<double>;

// ein(z,t) = int_0^t exp(z*s) ds, stable for small |z t|.
Cplx ein(Cplx z, double t) {
  const Cplx zt = z * t;
  if (std::abs(zt) < 1e-8) {
    return t * (1.0 + zt / 2.0 + zt * zt / 6.0);
  }
  return (std::exp(zt) - 1.0) / z;
}

// int_{t0}^{t1} e^{z s} ds
Cplx segment(Cplx z, double t0, double t1) { return ein(z, t1) - ein(z, t0); }

double gaussian(double x, double s) {
  return std::exp(-0.5 * x * x / (s * s)) / (s * std::sqrt(2.0 * std::numbers::pi));
}

}  // namespace

PhaseGrid PhaseGrid::make(double q_min, double q_max, double p_min,
                          double p_max, int nq, int np) {
  PhaseGrid g;
  g.q_min = q_min;
  g.q_max = q_max;
  g.p_min = p_min;
  g.p_max = p_max;
  g.nq = nq;
  g.np = np;
  g.values.assign(static_cast<size_t>(nq) * np, 0.0);
  g.validate();
  return g;
}

void PhaseGrid::validate() const {
  if (!(q_min < q_max) || !(p_min < p_max)) {
    throw std::invalid_argument("PhaseGrid: bounds must be strictly ordered");
  }
  if (nq < 8 || np < 8) {
    throw std::invalid_argument("PhaseGrid: need at least 8 points per axis");
  }
  if (values.size() != static_cast<size_t>(nq) * np) {
    throw std::invalid_argument("PhaseGrid: value count does not match shape");
  }
}

double PhaseGrid::mass() const {
  double s = 0.0;
  for (double v : values) s += v;
  return s * dq() * dp();
}

void InitialCondition::validate() const {
  if (kind == InitialKind::GaussianPacket) {
    if (!(sq > 0.0) || !(sp > 0.0)) {
      throw std::invalid_argument("init: widths must be positive");
    }
  } else {
    if (!(sp > 0.0)) throw std::invalid_argument("init: sp must be positive");
    if (a == 0.0) {
      throw std::invalid_argument("init: delta-line momentum a must be nonzero");
    }
    if (!(mass_m > 0.0)) throw std::invalid_argument("init: mass must be positive");
  }
}

double InitialCondition::evaluate(double q, double p) const {
  if (kind == InitialKind::GaussianPacket) {
    return gaussian(q - q0, sq) * gaussian(p - p0, sp);
  }
  return c_norm * std::exp(-(k * mass_m / a) * q) * gaussian(p - a, sp);
}

double InitialCondition::fraction_inside(double q_lo, double q_hi, double p_lo,
                                         double p_hi) const {
  if (kind != InitialKind::GaussianPacket) return 1.0;
  auto cdf_span = [](double lo, double hi, double mu, double s) {
    const double r2 = std::sqrt(2.0);
    return 0.5 * (std::erf((hi - mu) / (s * r2)) - std::erf((lo - mu) / (s * r2)));
  };
  return cdf_span(q_lo, q_hi, q0, sq) * cdf_span(p_lo, p_hi, p0, sp);
}

TransportField::TransportField(Gauge gauge, PhysicalParams params,
                               HarmonicDrive drive)
    : gauge_(gauge),
      params_(params),
      drive_(drive),
      spec_(gauge == Gauge::A ? HamiltonianSpec::kanai_a_gauge(params, drive)
                              : HamiltonianSpec::kanai_phi_gauge(params, drive)) {}

TransportField TransportField::custom(HamiltonianSpec spec) {
  TransportField field(Gauge::A, spec.params(), spec.drive());
  field.spec_ = std::move(spec);
  field.custom_ = true;
  return field;
}

TransportPolynomials TransportField::polynomials_at(double t) const {
  return transport_coefficients(build_wigner_hamiltonian(spec_, t));
}

double TransportField::vq(double q, double p, double t) const {
  return polynomials_at(t).vq.eval(q, p).real();
}

double TransportField::vp(double q, double p, double t) const {
  return polynomials_at(t).vp.eval(q, p).real();
}

std::complex<double> characteristic_momentum_kick(Gauge gauge,
                                                  const PhysicalParams& params,
                                                  const HarmonicDrive& drive,
                                                  double t0, double t1) {
  if (gauge == Gauge::A || drive.amplitude == 0.0) return 0.0;
  // dp/ds = e E(s) e^{alpha s}
  const Cplx z(params.alpha, drive.omega);
  const Cplx kick = params.e * drive.amplitude *
                    std::exp(Cplx(0.0, drive.phase)) * segment(z, t0, t1);
  return drive.representation == DriveRepresentation::RealCosine
             ? Cplx(kick.real(), 0.0)
             : kick;
}

FlowPoint characteristic_flow(Gauge gauge, const PhysicalParams& params,
                              const HarmonicDrive& drive, Cplx q, Cplx p,
                              double t_from, double t_to) {
  const double alpha = params.alpha;
  const Cplx j = segment(Cplx(-alpha, 0.0), t_from, t_to);
  const bool real_mode =
      drive.representation == DriveRepresentation::RealCosine;

  if (gauge == Gauge::A) {
    // p constant; dq/ds = (p - (e/c) A(s)) e^{-alpha s} / m.
    Cplx drive_part = 0.0;
    if (drive.amplitude != 0.0) {
      const Cplx z(alpha, drive.omega);
      if (z == Cplx(0.0)) {
        throw std::domain_error(
            "characteristic_flow: A-gauge requires alpha + i*omega != 0");
      }
      // -(e/c) int A(s) e^{-alpha s} ds, A(s) = -c E0 e^{i phase} e^{z s}/z.
      Cplx integral = params.e * drive.amplitude *
                      std::exp(Cplx(0.0, drive.phase)) / z *
                      segment(Cplx(0.0, drive.omega), t_from, t_to);
      if (real_mode) integral = Cplx(integral.real(), 0.0);
      drive_part = integral;
    }
    return {q + (p * j + drive_part) / params.m, p};
  }

  // Phi gauge: p(s) = p(t_from) + kick(t_from, s);
  // dq/ds = p(s) e^{-alpha s} / m.
  Cplx kick_integral = 0.0;  // int_{t_from}^{t_to} kick(t_from, s) e^{-alpha s} ds
  if (drive.amplitude != 0.0) {
    const Cplx z(alpha, drive.omega);
    const Cplx amp = params.e * drive.amplitude * std::exp(Cplx(0.0, drive.phase));
    Cplx inner;
    if (std::abs(z) * std::max(std::abs(t_from), std::abs(t_to)) < 1e-8) {
      // alpha and omega both vanish: kick(t_from, s) = amp * (s - t_from).
      inner = amp * 0.5 * (t_to - t_from) * (t_to - t_from);
    } else {
      // kick(t_from,s) = amp*(ein(z,s) - ein(z,t_from)); integrate each part
      // against e^{-alpha s} over [t_from, t_to].
      inner = amp * ((segment(Cplx(0.0, drive.omega), t_from, t_to) -
                      segment(Cplx(-alpha, 0.0), t_from, t_to)) /
                     z) -
              amp * ein(z, t_from) * j;
    }
    if (real_mode) inner = Cplx(inner.real(), 0.0);
    kick_integral = inner;
  }
  Cplx kick_total = characteristic_momentum_kick(Gauge::Phi, params, drive,
                                                 t_from, t_to);
  return {q + (p * j + kick_integral) / params.m, p + kick_total};
}

std::vector<double> evolve_characteristics(
    const InitialCondition& w0, const TransportField& field, double t_final,
    std::span<const CharQuery> queries, const std::optional<TrustDomain>& trust,
    std::vector<bool>* extrapolated) {
  if (t_final < 0.0) {
    throw std::invalid_argument("evolve_characteristics: t_final must be >= 0");
  }
  w0.validate();
  if (field.is_custom()) {
    throw std::invalid_argument(
        "evolve_characteristics: closed-form flow is only available for the "
        "built-in gauge fields");
  }
  if (field.drive().representation == DriveRepresentation::ComplexPhasor &&
      field.drive().amplitude != 0.0) {
    throw std::invalid_argument(
        "evolve_characteristics: real-valued evolution requires a RealCosine "
        "drive");
  }
  std::vector<double> out;
  out.reserve(queries.size());
  if (extrapolated) extrapolated->assign(queries.size(), false);
  for (size_t i = 0; i < queries.size(); ++i) {
    const FlowPoint foot =
        characteristic_flow(field.gauge(), field.params(), field.drive(),
                            queries[i].q, queries[i].p, t_final, 0.0);
    const double qf = foot.q.real();
    const double pf = foot.p.real();
    if (trust && extrapolated && !trust->contains(qf, pf)) {
      (*extrapolated)[i] = true;
    }
    out.push_back(w0.evaluate(qf, pf));
  }
  return out;
}

namespace {

// 4-point Lagrange interpolation weights at fractional offset s in [0,1]
// relative to the second stencil point.
void cubic_weights(double s, double w[4]) {
  w[0] = -s * (s - 1.0) * (s - 2.0) / 6.0;
  w[1] = (s + 1.0) * (s - 1.0) * (s - 2.0) / 2.0;
  w[2] = -(s + 1.0) * s * (s - 2.0) / 2.0;
  w[3] = (s + 1.0) * s * (s - 1.0) / 6.0;
}

double sample(const PhaseGrid& g, int i, int j) {
  if (i < 0 || i >= g.nq || j < 0 || j >= g.np) return 0.0;
  return g.at(i, j);
}

// Affine view of a velocity polynomial; both Kanai gauges' fields are affine
// in (q,p), which keeps the per-node stepping cost trivial.
struct AffineField {
  double c = 0.0, cq = 0.0, cp = 0.0;
  double operator()(double q, double p) const { return c + cq * q + cp * p; }
};

AffineField to_affine(const QpPolynomial& poly) {
  AffineField f;
  for (const auto& [key, coeff] : poly.terms) {
    if (key[0] == 0 && key[1] == 0) f.c = coeff.real();
    else if (key[0] == 1 && key[1] == 0) f.cq = coeff.real();
    else if (key[0] == 0 && key[1] == 1) f.cp = coeff.real();
    else throw std::domain_error(
        "evolve_semilagrangian: velocity field is not affine in (q,p)");
  }
  return f;
}

}  // namespace

namespace {

// Snap coordinates that hit a node up to roundoff, so a zero-displacement
// step reproduces the grid bit for bit.
double snap_to_node(double x) {
  const double r = std::round(x);
  return std::abs(x - r) < 1e-9 ? r : x;
}

}  // namespace

double interpolate_grid(const PhaseGrid& grid, double q, double p,
                        InterpOrder order) {
  const double x = snap_to_node((q - grid.q_min) / grid.dq());
  const double y = snap_to_node((p - grid.p_min) / grid.dp());
  if (x < -1.0 || x > grid.nq || y < -1.0 || y > grid.np) return 0.0;
  const int i0 = static_cast<int>(std::floor(x));
  const int j0 = static_cast<int>(std::floor(y));
  const double sx = x - i0;
  const double sy = y - j0;
  if (order == InterpOrder::Linear) {
    return (1.0 - sx) * ((1.0 - sy) * sample(grid, i0, j0) +
                         sy * sample(grid, i0, j0 + 1)) +
           sx * ((1.0 - sy) * sample(grid, i0 + 1, j0) +
                 sy * sample(grid, i0 + 1, j0 + 1));
  }
  double wx[4], wy[4];
  cubic_weights(sx, wx);
  cubic_weights(sy, wy);
  double r = 0.0;
  for (int di = 0; di < 4; ++di) {
    if (wx[di] == 0.0) continue;
    double row = 0.0;
    for (int dj = 0; dj < 4; ++dj) {
      if (wy[dj] == 0.0) continue;
      row += wy[dj] * sample(grid, i0 - 1 + di, j0 - 1 + dj);
    }
    r += wx[di] * row;
  }
  return r;
}

PhaseGrid evolve_semilagrangian(const PhaseGrid& grid,
                                const TransportField& field, double dt,
                                int steps, InterpOrder order,
                                SemiLagrangianDiagnostics* diag) {
  if (!(dt > 0.0)) {
    throw std::invalid_argument("evolve_semilagrangian: dt must be positive");
  }
  grid.validate();
  if (field.drive().representation == DriveRepresentation::ComplexPhasor &&
      field.drive().amplitude != 0.0) {
    throw std::invalid_argument(
        "evolve_semilagrangian: grid evolution requires a RealCosine drive");
  }
  const double q_span = grid.q_max - grid.q_min;
  const double p_span = grid.p_max - grid.p_min;

  PhaseGrid current = grid;
  PhaseGrid next = grid;
  double max_frac = 0.0;
  for (int step = 0; step < steps; ++step) {
    const double t1 = current.t + dt;
    const TransportPolynomials at_end = field.polynomials_at(t1);
    const TransportPolynomials at_mid = field.polynomials_at(current.t + 0.5 * dt);
    const AffineField vq1 = to_affine(at_end.vq);
    const AffineField vp1 = to_affine(at_end.vp);
    const AffineField vqm = to_affine(at_mid.vq);
    const AffineField vpm = to_affine(at_mid.vp);
    for (int i = 0; i < current.nq; ++i) {
      const double qi = current.q_at(i);
      for (int j = 0; j < current.np; ++j) {
        const double pj = current.p_at(j);
        // Explicit midpoint rule for the backward characteristic.
        const double k1q = vq1(qi, pj);
        const double k1p = vp1(qi, pj);
        const double qh = qi - 0.5 * dt * k1q;
        const double ph = pj - 0.5 * dt * k1p;
        const double k2q = vqm(qh, ph);
        const double k2p = vpm(qh, ph);
        const double qf = qi - dt * k2q;
        const double pf = pj - dt * k2p;
        const double frac = std::max(std::abs(qf - qi) / q_span,
                                     std::abs(pf - pj) / p_span);
        max_frac = std::max(max_frac, frac);
        next.at(i, j) = interpolate_grid(current, qf, pf, order);
      }
    }
    next.t = t1;
    std::swap(current, next);
  }
  if (diag) {
    diag->max_step_displacement_fraction = max_frac;
    diag->large_displacement_warning = max_frac > 0.25;
  }
  return current;
}

namespace {

void require_phasor_ac(const HarmonicDrive& drive, const char* where) {
  if (drive.representation != DriveRepresentation::ComplexPhasor) {
    throw std::domain_error(std::string(where) +
                            ": frame transform requires phasor mode");
  }
  if (!(drive.omega > 0.0)) {
    throw std::domain_error(std::string(where) +
                            ": frame is for AC analysis only (omega > 0)");
  }
}

Cplx frame_xi_offset(double t, const PhysicalParams& params,
                     const HarmonicDrive& drive) {
  // e E(t) / (i m omega (alpha + i omega))
  const Cplx i(0.0, 1.0);
  return params.e * drive.field_phasor(t) /
         (i * params.m * drive.omega * Cplx(params.alpha, drive.omega));
}

}  // namespace

FrameCoords moving_frame_a(double q, double p, double t,
                           const PhysicalParams& params,
                           const HarmonicDrive& drive) {
  require_phasor_ac(drive, "moving_frame_a");
  return {q - frame_xi_offset(t, params, drive), p, t};
}

FrameCoords moving_frame_phi(double q, double p, double t,
                             const PhysicalParams& params,
                             const HarmonicDrive& drive) {
  require_phasor_ac(drive, "moving_frame_phi");
  const Cplx eta = p - params.e * drive.field_phasor(t) *
                           std::exp(params.alpha * t) /
                           Cplx(params.alpha, drive.omega);
  return {q - frame_xi_offset(t, params, drive), eta, t};
}

std::complex<double> analytic_w(std::complex<double> xi,
                                std::complex<double> eta, double t,
                                const AnalyticConstants& constants,
                                const PhysicalParams& params) {
  if (!(params.alpha > 0.0)) {
    throw std::domain_error("analytic_w: requires alpha > 0");
  }
  if (constants.a == 0.0) {
    throw std::domain_error("analytic_w: momentum location a must be nonzero");
  }
  const double time_factor =
      std::exp(-(constants.k / params.alpha) * std::exp(-params.alpha * t));
  const Cplx xi_factor = std::exp(-(constants.k * params.m / constants.a) * xi);
  const Cplx d = eta - constants.a;
  const Cplx mollifier =
      std::exp(-0.5 * d * d / (constants.sp * constants.sp)) /
      (constants.sp * std::sqrt(2.0 * std::numbers::pi));
  return constants.c_norm * time_factor * xi_factor * mollifier;
}

}  // namespace eps
