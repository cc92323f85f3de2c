// Acceptance suite: one line per criterion, pinned scenario and tolerances.
// Scenario: m = e = N = hbar = c = 1, alpha = 0.5, omega = 2, E0 = 0.1.

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <filesystem>
#include <numbers>
#include <string>
#include <vector>

#include "eps/experiments.hpp"
#include "eps/observables.hpp"

namespace fs = std::filesystem;
using Complex = std::complex<double>;

namespace {

constexpr double kAlpha = 0.5;
constexpr double kOmega = 2.0;
constexpr double kE0 = 0.1;
const double kPeriod = 2.0 * std::numbers::pi / kOmega;
const Complex kSigmaRef = 1.0 / Complex(kAlpha, kOmega);

constexpr double kTolDrude = 1e-6;          // criterion 1
constexpr double kTolGaugeChar = 1e-6;      // criterion 2, characteristics
constexpr double kTolGaugeGrid = 1e-2;      // criterion 2, grid
constexpr double kTolTransient = 0.005;     // criterion 3
constexpr double kTolAlgebra = 1e-12;       // criterion 4
constexpr double kTolResidualOrder = 1.9;   // criterion 6
constexpr double kTolConvOrder = 1.8;       // criterion 7
constexpr double kTolMassDrift = 1e-6;      // criterion 7
constexpr double kTolSweep = 0.01;          // criterion 8

struct Outcome {
  bool pass = false;
  std::string detail;
};

eps::ScenarioConfig base_config() {
  eps::ScenarioConfig cfg;
  cfg.params.alpha = kAlpha;
  cfg.drive.amplitude = kE0;
  cfg.drive.omega = kOmega;
  cfg.horizon = 20.0;
  cfg.dt = kPeriod / 200.0;
  cfg.fit_start = 10.0;  // 5/alpha
  cfg.fit_end = 20.0;
  return cfg;
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3g", v);
  return buf;
}

fs::path scratch_dir(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("eps_acceptance_" + name);
  fs::create_directories(dir);
  return dir;
}

// criterion 1: characteristics solver reproduces the Drude conductivity,
// cross-checked by an independent RK4 integration of dv/dt = -a v + E/m.
Outcome criterion_drude() {
  const eps::ScenarioConfig cfg = base_config();
  const eps::TimeSeries series =
      eps::velocity_series_characteristics(eps::Gauge::A, cfg);
  const auto est = eps::conductivity_timeseries(
      series.t, series.mean_qdot, cfg.drive, cfg.params, *cfg.fit_start,
      *cfg.fit_end, eps::Gauge::A);
  const double rel = std::abs(est.sigma - kSigmaRef) / std::abs(kSigmaRef);

  // ODE oracle, started on the steady-state attractor
  const Complex v_amp = kE0 / Complex(kAlpha, kOmega);
  const double dt = 1e-3;
  const auto accel = [&](double t, double v) {
    return -kAlpha * v + kE0 * std::cos(kOmega * t);
  };
  std::vector<double> times, vels;
  double v = v_amp.real();
  for (double t = 0.0; t <= cfg.horizon + 0.5 * dt; t += dt) {
    times.push_back(t);
    vels.push_back(v);
    const double k1 = accel(t, v);
    const double k2 = accel(t + 0.5 * dt, v + 0.5 * dt * k1);
    const double k3 = accel(t + 0.5 * dt, v + 0.5 * dt * k2);
    const double k4 = accel(t + dt, v + dt * k3);
    v += dt / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
  }
  const auto ode = eps::conductivity_timeseries(times, vels, cfg.drive,
                                                cfg.params, 10.0, 20.0);
  const double rel_ode = std::abs(ode.sigma - kSigmaRef) / std::abs(kSigmaRef);

  Outcome out;
  out.pass = rel < kTolDrude && rel_ode < kTolDrude;
  out.detail = "|sigma|=" + fmt(est.magnitude) + " phase=" + fmt(est.phase) +
               " rel_err=" + fmt(rel) + " ode_rel_err=" + fmt(rel_ode) +
               " (tol " + fmt(kTolDrude) + ")";
  return out;
}

// criterion 2: A-gauge and phi-gauge agree for matched initial data, both for
// the exact characteristics and for the 256x256 cubic semi-Lagrangian grid.
Outcome criterion_gauge_invariance() {
  eps::ScenarioConfig cfg = base_config();
  cfg.init.sq = 100.0;
  cfg.init.sp = 25.0;
  cfg.grid = {-800.0, 800.0, -150.0, 150.0, 256, 256};
  cfg.phi_grid = eps::GridGeometry{-800.0, 800.0, -1050.0, 1050.0, 256, 256};
  cfg.tol.char_gap = kTolGaugeChar;
  cfg.tol.grid_gap = kTolGaugeGrid;
  cfg.solver = eps::SolverChoice::Both;

  const auto result =
      eps::run_compare_gauges(cfg, scratch_dir("compare_gauges"));
  const double char_gap = result.summary["characteristics"]["gap_rel"];
  const double grid_gap = result.summary["grid"]["gap_rel"];
  Outcome out;
  out.pass = result.exit_code == 0;
  out.detail = "char_gap=" + fmt(char_gap) + " (tol " + fmt(kTolGaugeChar) +
               "), grid_gap=" + fmt(grid_gap) + " (tol " + fmt(kTolGaugeGrid) +
               ")";
  return out;
}

// criterion 3: undriven decay exponent of <qdot> equals -alpha within 0.5%.
Outcome criterion_transient() {
  eps::ScenarioConfig cfg = base_config();
  cfg.experiment = eps::Experiment::Transient;
  cfg.drive = eps::HarmonicDrive{};
  cfg.init.p0 = 1.0;
  cfg.init.sq = cfg.init.sp = 0.5;
  cfg.horizon = 10.0;
  cfg.dt = 0.01;
  cfg.fit_start = 2.0;
  cfg.fit_end = 10.0;
  cfg.tol.transient = kTolTransient;

  const auto result = eps::run_transient(cfg, scratch_dir("transient"));
  Outcome out;
  out.pass = result.exit_code == 0;
  out.detail = "slope=" + fmt(result.summary["fitted_slope"].get<double>()) +
               " rel_err=" + fmt(result.summary["rel_err"].get<double>()) +
               " (tol " + fmt(kTolTransient) + ")";
  return out;
}

nlohmann::json selftest_summary() {
  static nlohmann::json summary;
  if (summary.empty()) {
    eps::ScenarioConfig cfg;
    cfg.seed = 12345;
    summary = eps::run_algebra_selftest(cfg, scratch_dir("selftest")).summary;
  }
  return summary;
}

const nlohmann::json& find_check(const nlohmann::json& summary,
                                 const std::string& name) {
  for (const auto& c : summary["checks"]) {
    if (c["name"] == name) return c;
  }
  throw std::runtime_error("missing self-test check " + name);
}

// criterion 4: Ad_U(H_SN) = H_w to 1e-12 for both gauges and randomized
// quadratics; canonical commutators hold exactly.
Outcome criterion_algebra() {
  const auto summary = selftest_summary();
  const auto& kanai = find_check(summary, "adjoint_matches_wigner_kanai");
  const auto& rand_h =
      find_check(summary, "adjoint_matches_wigner_random_quadratic");
  const auto& comm = find_check(summary, "commutation_relations");
  const double dev = std::max(kanai["max_deviation"].get<double>(),
                              rand_h["max_deviation"].get<double>());
  Outcome out;
  out.pass = kanai["pass"].get<bool>() && rand_h["pass"].get<bool>() &&
             comm["pass"].get<bool>() && dev < kTolAlgebra;
  out.detail = "max_deviation=" + fmt(dev) + " (tol " + fmt(kTolAlgebra) +
               "), commutators exact=" +
               (comm["pass"].get<bool>() ? "yes" : "no");
  return out;
}

// criterion 5: quadratic Hamiltonians give pi-degree <= 1 generators and
// hbar-independent transport coefficients.
Outcome criterion_transport_property() {
  const auto summary = selftest_summary();
  const auto& pi_deg = find_check(summary, "wigner_pi_degree_leq_1");
  const auto& hbar_inv = find_check(summary, "transport_hbar_invariance");
  Outcome out;
  out.pass = pi_deg["pass"].get<bool>() && hbar_inv["pass"].get<bool>();
  out.detail = std::string("pi_degree<=1=") +
               (pi_deg["pass"].get<bool>() ? "yes" : "no") +
               ", hbar_invariant=" +
               (hbar_inv["pass"].get<bool>() ? "yes" : "no");
  return out;
}

// criterion 6: the mollified analytic profile satisfies the frame-coordinate
// transport operator; the finite-difference residual norm drops at order >= 1.9
// under h -> h/2 -> h/4.
Outcome criterion_analytic_residual() {
  eps::PhysicalParams params;
  params.alpha = kAlpha;
  eps::AnalyticConstants constants;
  constants.k = 1.0;
  constants.a = 1.0;
  constants.sp = 1e-8;

  const auto w = [&](double xi, double eta, double t) {
    return eps::analytic_w(xi, eta, t, constants, params).real();
  };
  const auto residual_norm = [&](double h) {
    double sum_r2 = 0.0, sum_w2 = 0.0;
    for (double xi = -1.0; xi <= 1.0; xi += 0.2) {
      for (double deta = -2.0; deta <= 2.0; deta += 0.5) {
        const double eta = constants.a + deta * constants.sp;
        for (double t = 0.5; t <= 1.5; t += 0.2) {
          const double dwdt = (w(xi, eta, t + h) - w(xi, eta, t - h)) / (2 * h);
          const double dwdxi =
              (w(xi + h, eta, t) - w(xi - h, eta, t)) / (2 * h);
          const double r =
              dwdt + eta / params.m * std::exp(-params.alpha * t) * dwdxi;
          sum_r2 += r * r;
          sum_w2 += w(xi, eta, t) * w(xi, eta, t);
        }
      }
    }
    return std::sqrt(sum_r2 / sum_w2);
  };
  const double r0 = residual_norm(0.02);
  const double r1 = residual_norm(0.01);
  const double r2 = residual_norm(0.005);
  const double o01 = std::log2(r0 / r1);
  const double o12 = std::log2(r1 / r2);
  Outcome out;
  out.pass = o01 >= kTolResidualOrder && o12 >= kTolResidualOrder;
  out.detail = "residuals " + fmt(r0) + " -> " + fmt(r1) + " -> " + fmt(r2) +
               ", orders " + fmt(o01) + ", " + fmt(o12) + " (tol >= " +
               fmt(kTolResidualOrder) + ")";
  return out;
}

// criterion 7: semi-Lagrangian self-convergence against characteristics at
// order >= 1.8 with finest-level mass drift < 1e-6.
Outcome criterion_convergence() {
  eps::ScenarioConfig cfg = base_config();
  cfg.experiment = eps::Experiment::Convergence;
  cfg.init.sq = cfg.init.sp = 0.5;
  cfg.grid = {-8.0, 8.0, -4.0, 4.0, 64, 64};
  cfg.convergence_levels = 3;
  cfg.convergence_base_n = 64;
  cfg.convergence_base_dt = 0.05;
  cfg.convergence_horizon = 3.0;
  cfg.tol.order = kTolConvOrder;
  cfg.tol.mass_drift = kTolMassDrift;

  const auto result = eps::run_convergence(cfg, scratch_dir("convergence"));
  Outcome out;
  out.pass = result.exit_code == 0;
  out.detail =
      "min_order=" + fmt(result.summary["min_order"].get<double>()) +
      " (tol >= " + fmt(kTolConvOrder) + "), mass_drift=" +
      fmt(result.summary["finest_mass_drift"].get<double>()) + " (tol " +
      fmt(kTolMassDrift) + ")";
  return out;
}

// criterion 8: grid-solver conductivity across omega in {0, 0.5, 1, 2, 4}
// within 1% per point, DC handled by the averaging path.
Outcome criterion_drude_sweep() {
  eps::ScenarioConfig cfg = base_config();
  cfg.experiment = eps::Experiment::DrudeSweep;
  cfg.solver = eps::SolverChoice::Grid;
  cfg.gauge = eps::GaugeChoice::A;
  cfg.init.sq = cfg.init.sp = 1.0;
  cfg.grid = {-15.0, 15.0, -8.0, 8.0, 128, 128};
  cfg.dt = 0.01;
  cfg.fit_start.reset();
  cfg.fit_end.reset();
  cfg.sweep_omegas = {0.0, 0.5, 1.0, 2.0, 4.0};
  cfg.tol.sweep = kTolSweep;

  const auto result = eps::run_drude_sweep(cfg, scratch_dir("drude_sweep"));
  double max_rel = 0.0;
  for (const auto& point : result.summary["points"]) {
    max_rel = std::max(max_rel, point["rel_err"].get<double>());
  }
  Outcome out;
  out.pass = result.exit_code == 0;
  out.detail = "max_rel_err=" + fmt(max_rel) + " over 5 points (tol " +
               fmt(kTolSweep) + ")";
  return out;
}

}  // namespace

int main() {
  struct Entry {
    int id;
    const char* label;
    Outcome (*fn)();
    double time_limit;  // seconds, 0 = none
  };
  const Entry entries[] = {
      {1, "Drude conductivity, characteristics + ODE oracle", criterion_drude, 5.0},
      {2, "gauge invariance of sigma, characteristics and grid",
       criterion_gauge_invariance, 30.0},
      {3, "transient decay exponent", criterion_transient, 0.0},
      {4, "operator algebra equivalence", criterion_algebra, 1.0},
      {5, "quadratic-Hamiltonian transport property",
       criterion_transport_property, 0.0},
      {6, "analytic solution residual order", criterion_analytic_residual, 0.0},
      {7, "solver self-convergence", criterion_convergence, 0.0},
      {8, "Drude sweep on the grid solver", criterion_drude_sweep, 120.0},
  };

  bool all_pass = true;
  for (const Entry& entry : entries) {
    Outcome out;
    double seconds = 0.0;
    const auto start = std::chrono::steady_clock::now();
    try {
      out = entry.fn();
      seconds = std::chrono::duration<double>(
                    std::chrono::steady_clock::now() - start).count();
      if (entry.time_limit > 0.0 && seconds > entry.time_limit) {
        out.pass = false;
        out.detail += " [exceeded " + fmt(entry.time_limit) + "s limit]";
      }
    } catch (const std::exception& err) {
      seconds = std::chrono::duration<double>(
                    std::chrono::steady_clock::now() - start).count();
      out.pass = false;
      out.detail = std::string("exception: ") + err.what();
    }
    all_pass &= out.pass;
    std::printf("[%s] criterion %d: %s: %s (%.2fs)\n",
                out.pass ? "PASS" : "FAIL", entry.id, entry.label,
                out.detail.c_str(), seconds);
  }
  return all_pass ? 0 : 1;
}
