#include "eps/observables.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace eps {

CharacteristicEnsemble make_ensemble(const InitialCondition& init, int nq,
                                     int np, double n_sigma) {
  init.validate();
  if (nq < 2 || np < 2) {
    throw std::invalid_argument("make_ensemble: need at least 2 points per axis");
  }
  double q_lo, q_hi, p_lo, p_hi;
  if (init.kind == InitialKind::GaussianPacket) {
    q_lo = init.q0 - n_sigma * init.sq;
    q_hi = init.q0 + n_sigma * init.sq;
    p_lo = init.p0 - n_sigma * init.sp;
    p_hi = init.p0 + n_sigma * init.sp;
  } else {
    // Delta line: momentum Gaussian around a; position handled over a unit
    // window since the exponential profile is not normalizable on the line.
    q_lo = -1.0;
    q_hi = 1.0;
    p_lo = init.a - n_sigma * init.sp;
    p_hi = init.a + n_sigma * init.sp;
  }
  const double hq = (q_hi - q_lo) / nq;
  const double hp = (p_hi - p_lo) / np;
  CharacteristicEnsemble ens;
  ens.q0.reserve(static_cast<size_t>(nq) * np);
  for (int i = 0; i < nq; ++i) {
    const double q = q_lo + (i + 0.5) * hq;
    for (int j = 0; j < np; ++j) {
      const double p = p_lo + (j + 0.5) * hp;
      const double w = init.evaluate(q, p) * hq * hp;
      if (w == 0.0) continue;
      ens.q0.push_back(q);
      ens.p0.push_back(p);
      ens.weight.push_back(w);
    }
  }
  return ens;
}

CharacteristicEnsemble shift_momentum(CharacteristicEnsemble ensemble,
                                      double delta_p) {
  for (double& p : ensemble.p0) p += delta_p;
  return ensemble;
}

double expectation(const std::function<double(double, double)>& observable,
                   const PhaseGrid& grid) {
  grid.validate();
  double mass = 0.0;
  double acc = 0.0;
  for (int i = 0; i < grid.nq; ++i) {
    const double q = grid.q_at(i);
    for (int j = 0; j < grid.np; ++j) {
      const double w = grid.at(i, j);
      mass += w;
      acc += observable(q, grid.p_at(j)) * w;
    }
  }
  if (!(mass > 0.0)) {
    throw std::domain_error("expectation: state has zero or negative mass");
  }
  return acc / mass;
}

double mean_velocity(Gauge gauge, const PhaseGrid& grid,
                     const PhysicalParams& params, const HarmonicDrive& drive) {
  const TransportField field(gauge, params, drive);
  const TransportPolynomials polys = field.polynomials_at(grid.t);
  return expectation(
      [&polys](double q, double p) { return polys.vq.eval(q, p).real(); },
      grid);
}

std::complex<double> mean_velocity(Gauge gauge,
                                   const CharacteristicEnsemble& ensemble,
                                   const PhysicalParams& params,
                                   const HarmonicDrive& drive, double t) {
  if (ensemble.q0.empty()) {
    throw std::domain_error("mean_velocity: empty ensemble");
  }
  const TransportField field(gauge, params, drive);
  const TransportPolynomials polys = field.polynomials_at(t);
  std::complex<double> acc = 0.0;
  double mass = 0.0;
  for (size_t i = 0; i < ensemble.q0.size(); ++i) {
    const FlowPoint pt =
        characteristic_flow(gauge, params, drive, ensemble.q0[i],
                            ensemble.p0[i], 0.0, t);
    // Velocity polynomial evaluated on the (possibly complex) trajectory;
    // both gauges' vq is affine in (q,p), so complex evaluation is exact.
    std::complex<double> v = 0.0;
    for (const auto& [key, c] : polys.vq.terms) {
      std::complex<double> mono = c;
      for (int n = 0; n < key[0]; ++n) mono *= pt.q;
      for (int n = 0; n < key[1]; ++n) mono *= pt.p;
      v += mono;
    }
    acc += ensemble.weight[i] * v;
    mass += ensemble.weight[i];
  }
  if (!(mass > 0.0)) {
    throw std::domain_error("mean_velocity: ensemble has nonpositive mass");
  }
  return acc / mass;
}

ConductivityEstimate conductivity_timeseries(std::span<const double> times,
                                             std::span<const double> velocities,
                                             const HarmonicDrive& drive,
                                             const PhysicalParams& params,
                                             double window_start,
                                             double window_end, Gauge gauge) {
  if (times.size() != velocities.size() || times.empty()) {
    throw std::invalid_argument("conductivity_timeseries: mismatched series");
  }
  if (drive.amplitude == 0.0) {
    throw std::invalid_argument(
        "conductivity_timeseries: zero drive cannot define a conductivity");
  }
  if (drive.representation != DriveRepresentation::RealCosine) {
    throw std::invalid_argument(
        "conductivity_timeseries: expects a RealCosine drive series");
  }
  if (!(window_end > window_start)) {
    throw std::invalid_argument("conductivity_timeseries: empty fit window");
  }

  std::vector<size_t> idx;
  for (size_t i = 0; i < times.size(); ++i) {
    if (times[i] >= window_start && times[i] <= window_end) idx.push_back(i);
  }
  if (idx.size() < 4) {
    throw std::invalid_argument(
        "conductivity_timeseries: too few samples in the fit window");
  }

  ConductivityEstimate est;
  est.gauge = gauge;
  est.window_start = window_start;
  est.window_end = window_end;
  est.reference = drude_conductivity(params, drive.omega);

  const double n_e = params.n_particles * params.e;
  if (drive.omega == 0.0) {
    // DC path: direct time-domain averaging.
    double mean_v = 0.0;
    for (size_t i : idx) mean_v += velocities[i];
    mean_v /= static_cast<double>(idx.size());
    est.sigma = n_e * mean_v / drive.amplitude;
    double ss = 0.0, sv = 0.0;
    for (size_t i : idx) {
      ss += (velocities[i] - mean_v) * (velocities[i] - mean_v);
      sv += velocities[i] * velocities[i];
    }
    est.fit_residual = sv > 0.0 ? std::sqrt(ss / sv) : 0.0;
  } else {
    const double period = 2.0 * std::numbers::pi / drive.omega;
    if (window_end - window_start < 3.0 * period) {
      throw std::invalid_argument(
          "conductivity_timeseries: fit window must cover >= 3 full periods");
    }
    // v(t) ~ a cos(omega t + phase) - b sin(omega t + phase), V = a + i b.
    double scc = 0.0, sss = 0.0, scs = 0.0, svc = 0.0, svs = 0.0;
    for (size_t i : idx) {
      const double th = drive.omega * times[i] + drive.phase;
      const double co = std::cos(th), si = -std::sin(th);
      scc += co * co;
      sss += si * si;
      scs += co * si;
      svc += velocities[i] * co;
      svs += velocities[i] * si;
    }
    const double det = scc * sss - scs * scs;
    if (det == 0.0) {
      throw std::runtime_error("conductivity_timeseries: degenerate fit");
    }
    const double a = (svc * sss - svs * scs) / det;
    const double b = (svs * scc - svc * scs) / det;
    const std::complex<double> v_amp(a, b);
    est.sigma = n_e * v_amp / drive.amplitude;
    double ss = 0.0, sv = 0.0;
    for (size_t i : idx) {
      const double th = drive.omega * times[i] + drive.phase;
      const double fit = a * std::cos(th) - b * std::sin(th);
      ss += (velocities[i] - fit) * (velocities[i] - fit);
      sv += fit * fit;
    }
    est.fit_residual = sv > 0.0 ? std::sqrt(ss / sv) : (ss > 0.0 ? 1.0 : 0.0);
  }
  est.magnitude = std::abs(est.sigma);
  est.phase = est.sigma == std::complex<double>(0.0) ? 0.0 : std::arg(est.sigma);
  est.noisy_fit_warning = est.fit_residual > 0.05;
  return est;
}

std::complex<double> drude_conductivity(const PhysicalParams& params,
                                        double omega) {
  if (params.alpha == 0.0 && omega == 0.0) {
    throw std::domain_error(
        "drude_conductivity: free undamped DC response diverges");
  }
  return params.n_particles * params.e * params.e /
         (params.m * std::complex<double>(params.alpha, omega));
}

double default_fit_window_start(const PhysicalParams& params,
                                const HarmonicDrive& drive) {
  double start = 0.0;
  if (params.alpha > 0.0) start = 5.0 / params.alpha;
  if (drive.omega > 0.0) {
    start = std::max(start, 2.0 * 2.0 * std::numbers::pi / drive.omega);
  }
  return start;
}

}  // namespace eps
