#include "eps/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <random>
#include <stdexcept>

namespace eps {

namespace {

using nlohmann::json;

double matched_momentum_shift(const ScenarioConfig& cfg) {
  if (cfg.drive.amplitude == 0.0) return 0.0;
  return gauge_momentum_shift(cfg.drive, cfg.params, 0.0).real();
}

/** Initial condition translated in p (gauge matching for the phi gauge). */
InitialCondition shifted_init(const InitialCondition& init, double delta_p) {
  InitialCondition out = init;
  if (init.kind == InitialKind::GaussianPacket) {
    out.p0 += delta_p;
  } else {
    out.a += delta_p;
  }
  return out;
}

InitialCondition init_for_gauge(Gauge gauge, const ScenarioConfig& cfg) {
  return gauge == Gauge::Phi ? shifted_init(cfg.init, matched_momentum_shift(cfg))
                             : cfg.init;
}

struct EnsembleMeans {
  double q = 0.0;
  double p = 0.0;
};

EnsembleMeans ensemble_means(const CharacteristicEnsemble& ens) {
  EnsembleMeans m;
  double mass = 0.0;
  for (size_t i = 0; i < ens.q0.size(); ++i) {
    m.q += ens.weight[i] * ens.q0[i];
    m.p += ens.weight[i] * ens.p0[i];
    mass += ens.weight[i];
  }
  if (!(mass > 0.0)) throw std::domain_error("ensemble has nonpositive mass");
  m.q /= mass;
  m.p /= mass;
  return m;
}

double window_start(const ScenarioConfig& cfg) {
  return cfg.fit_start.value_or(
      default_fit_window_start(cfg.params, cfg.drive));
}

double window_end(const ScenarioConfig& cfg) {
  return cfg.fit_end.value_or(cfg.horizon);
}

}  // namespace

TimeSeries velocity_series_characteristics(Gauge gauge,
                                           const ScenarioConfig& cfg) {
  const CharacteristicEnsemble ens = make_ensemble(
      init_for_gauge(gauge, cfg), cfg.ensemble_n, cfg.ensemble_n,
      cfg.ensemble_n_sigma);
  const EnsembleMeans m0 = ensemble_means(ens);
  const TransportField field(gauge, cfg.params, cfg.drive);

  TimeSeries series;
  const double step = cfg.dt * cfg.sample_stride;
  const int n = static_cast<int>(std::floor(cfg.horizon / step + 0.5));
  for (int k = 0; k <= n; ++k) {
    const double t = k * step;
    // The flow and the velocity field are affine in (q,p), so pushing the
    // ensemble mean equals the full quadrature average exactly.
    const FlowPoint pt = characteristic_flow(gauge, cfg.params, cfg.drive,
                                             m0.q, m0.p, 0.0, t);
    const TransportPolynomials polys = field.polynomials_at(t);
    series.t.push_back(t);
    series.mean_q.push_back(pt.q.real());
    series.mean_p.push_back(pt.p.real());
    series.mean_qdot.push_back(polys.vq.eval(pt.q.real(), pt.p.real()).real());
    series.field.push_back(cfg.drive.field(t).real());
  }
  return series;
}

GridRunResult velocity_series_grid(Gauge gauge, const GridGeometry& geometry,
                                   const ScenarioConfig& cfg) {
  const InitialCondition init = init_for_gauge(gauge, cfg);
  if (init.fraction_inside(geometry.q_min, geometry.q_max, geometry.p_min,
                           geometry.p_max) < 0.9999) {
    throw std::runtime_error(
        "grid run: initial condition places < 99.99% of its mass inside the "
        "domain");
  }
  PhaseGrid grid = PhaseGrid::make(geometry.q_min, geometry.q_max,
                                   geometry.p_min, geometry.p_max, geometry.nq,
                                   geometry.np);
  for (int i = 0; i < grid.nq; ++i) {
    for (int j = 0; j < grid.np; ++j) {
      grid.at(i, j) = init.evaluate(grid.q_at(i), grid.p_at(j));
    }
  }

  const TransportField field(gauge, cfg.params, cfg.drive);
  GridRunResult result{.final_grid = grid};
  result.initial_mass = grid.mass();

  auto record = [&](const PhaseGrid& g) {
    double sw = 0.0, swq = 0.0, swp = 0.0;
    for (int i = 0; i < g.nq; ++i) {
      const double qi = g.q_at(i);
      double row_w = 0.0, row_wp = 0.0;
      for (int j = 0; j < g.np; ++j) {
        const double w = g.at(i, j);
        row_w += w;
        row_wp += w * g.p_at(j);
      }
      sw += row_w;
      swq += row_w * qi;
      swp += row_wp;
    }
    if (!(sw > 0.0)) throw std::domain_error("grid run: nonpositive mass");
    const double mean_q = swq / sw;
    const double mean_p = swp / sw;
    // vq is affine in (q,p), so its average is its value at the mean.
    const TransportPolynomials polys = field.polynomials_at(g.t);
    result.series.t.push_back(g.t);
    result.series.mean_q.push_back(mean_q);
    result.series.mean_p.push_back(mean_p);
    result.series.mean_qdot.push_back(polys.vq.eval(mean_q, mean_p).real());
    result.series.field.push_back(cfg.drive.field(g.t).real());
    const double drift =
        std::abs(sw * g.dq() * g.dp() - result.initial_mass) /
        std::abs(result.initial_mass);
    result.max_mass_drift = std::max(result.max_mass_drift, drift);
  };

  record(grid);
  const int total_steps = static_cast<int>(std::ceil(cfg.horizon / cfg.dt - 1e-12));
  int done = 0;
  while (done < total_steps) {
    const int chunk = std::min(cfg.sample_stride, total_steps - done);
    SemiLagrangianDiagnostics diag;
    grid = evolve_semilagrangian(grid, field, cfg.dt, chunk, cfg.interp, &diag);
    result.diagnostics.max_step_displacement_fraction =
        std::max(result.diagnostics.max_step_displacement_fraction,
                 diag.max_step_displacement_fraction);
    result.diagnostics.large_displacement_warning |=
        diag.large_displacement_warning;
    done += chunk;
    record(grid);
  }
  result.final_mass = grid.mass();
  result.final_grid = grid;
  return result;
}

json conductivity_json(const ConductivityEstimate& est) {
  return json{{"gauge", to_string(est.gauge)},
              {"sigma_re", est.sigma.real()},
              {"sigma_im", est.sigma.imag()},
              {"magnitude", est.magnitude},
              {"phase", est.phase},
              {"residual", est.fit_residual},
              {"reference_re", est.reference.real()},
              {"reference_im", est.reference.imag()},
              {"window", {est.window_start, est.window_end}},
              {"noisy_fit_warning", est.noisy_fit_warning}};
}

ExperimentResult run_compare_gauges(const ScenarioConfig& cfg,
                                    const std::filesystem::path& out_dir) {
  const double ws = window_start(cfg);
  const double we = window_end(cfg);
  const std::complex<double> ref =
      drude_conductivity(cfg.params, cfg.drive.omega);

  ExperimentResult result;
  result.summary["experiment"] = "compare-gauges";
  result.summary["reference"] = {{"re", ref.real()}, {"im", ref.imag()}};
  bool all_pass = true;

  auto fit = [&](const TimeSeries& s, Gauge g) {
    return conductivity_timeseries(s.t, s.mean_qdot, cfg.drive, cfg.params, ws,
                                   we, g);
  };

  if (cfg.solver != SolverChoice::Grid) {
    const TimeSeries sa = velocity_series_characteristics(Gauge::A, cfg);
    const TimeSeries sp = velocity_series_characteristics(Gauge::Phi, cfg);
    write_timeseries_csv(sa, out_dir / "characteristics_A.csv");
    write_timeseries_csv(sp, out_dir / "characteristics_phi.csv");
    const ConductivityEstimate ea = fit(sa, Gauge::A);
    const ConductivityEstimate ep = fit(sp, Gauge::Phi);
    const double gap = std::abs(ea.sigma - ep.sigma) / std::abs(ref);
    const bool pass = gap < cfg.tol.char_gap;
    all_pass &= pass;
    result.summary["characteristics"] = {{"A", conductivity_json(ea)},
                                         {"phi", conductivity_json(ep)},
                                         {"gap_rel", gap},
                                         {"tolerance", cfg.tol.char_gap},
                                         {"pass", pass}};
  }

  if (cfg.solver != SolverChoice::Characteristics) {
    const GridRunResult ga = velocity_series_grid(Gauge::A, cfg.grid, cfg);
    const GridRunResult gp =
        velocity_series_grid(Gauge::Phi, cfg.phi_grid.value_or(cfg.grid), cfg);
    write_timeseries_csv(ga.series, out_dir / "grid_A.csv");
    write_timeseries_csv(gp.series, out_dir / "grid_phi.csv");
    write_grid_binary(ga.final_grid, out_dir / "grid_A_final.bin");
    write_grid_binary(gp.final_grid, out_dir / "grid_phi_final.bin");
    const ConductivityEstimate ea = fit(ga.series, Gauge::A);
    const ConductivityEstimate ep = fit(gp.series, Gauge::Phi);
    const double gap = std::abs(ea.sigma - ep.sigma) / std::abs(ref);
    const bool pass = gap < cfg.tol.grid_gap;
    all_pass &= pass;
    result.summary["grid"] = {
        {"A", conductivity_json(ea)},
        {"phi", conductivity_json(ep)},
        {"gap_rel", gap},
        {"tolerance", cfg.tol.grid_gap},
        {"mass_drift_A", ga.max_mass_drift},
        {"mass_drift_phi", gp.max_mass_drift},
        {"displacement_warning",
         ga.diagnostics.large_displacement_warning ||
             gp.diagnostics.large_displacement_warning},
        {"pass", pass}};
  }

  result.summary["pass"] = all_pass;
  result.exit_code = all_pass ? 0 : 2;
  return result;
}

ExperimentResult run_transient(const ScenarioConfig& cfg,
                               const std::filesystem::path& out_dir) {
  const Gauge gauge = cfg.gauge == GaugeChoice::Phi ? Gauge::Phi : Gauge::A;
  const TimeSeries series = velocity_series_characteristics(gauge, cfg);
  write_timeseries_csv(series, out_dir / "transient.csv");

  const double ws = cfg.fit_start.value_or(2.0);
  const double we = cfg.fit_end.value_or(std::min(10.0, cfg.horizon));
  // Least-squares slope of log|<qdot>| over the window.
  double st = 0.0, sy = 0.0, stt = 0.0, sty = 0.0;
  int n = 0;
  for (size_t i = 0; i < series.t.size(); ++i) {
    const double t = series.t[i];
    if (t < ws || t > we) continue;
    const double v = std::abs(series.mean_qdot[i]);
    if (!(v > 0.0)) {
      throw std::runtime_error("transient: velocity vanished inside the window");
    }
    const double y = std::log(v);
    st += t;
    sy += y;
    stt += t * t;
    sty += t * y;
    ++n;
  }
  if (n < 4) throw std::runtime_error("transient: too few samples in window");
  const double slope = (n * sty - st * sy) / (n * stt - st * st);
  const double expected = -cfg.params.alpha;
  const double rel_err =
      cfg.params.alpha > 0.0 ? std::abs(slope - expected) / cfg.params.alpha
                             : std::abs(slope);
  const bool pass = rel_err < cfg.tol.transient;

  ExperimentResult result;
  result.summary = {{"experiment", "transient"},
                    {"gauge", to_string(gauge)},
                    {"fitted_slope", slope},
                    {"expected_slope", expected},
                    {"rel_err", rel_err},
                    {"tolerance", cfg.tol.transient},
                    {"window", {ws, we}},
                    {"pass", pass}};
  result.exit_code = pass ? 0 : 2;
  return result;
}

ExperimentResult run_convergence(const ScenarioConfig& cfg,
                                 const std::filesystem::path& out_dir) {
  const Gauge gauge = Gauge::Phi;
  const InitialCondition init = init_for_gauge(gauge, cfg);
  const TransportField field(gauge, cfg.params, cfg.drive);

  json levels = json::array();
  std::vector<double> errors;
  std::vector<double> drifts;
  for (int level = 0; level < cfg.convergence_levels; ++level) {
    const int n = cfg.convergence_base_n << level;
    const double dt = cfg.convergence_base_dt / (1 << level);
    PhaseGrid grid = PhaseGrid::make(cfg.grid.q_min, cfg.grid.q_max,
                                     cfg.grid.p_min, cfg.grid.p_max, n, n);
    for (int i = 0; i < grid.nq; ++i) {
      for (int j = 0; j < grid.np; ++j) {
        grid.at(i, j) = init.evaluate(grid.q_at(i), grid.p_at(j));
      }
    }
    const double mass0 = grid.mass();
    const int steps = static_cast<int>(std::llround(cfg.convergence_horizon / dt));
    grid = evolve_semilagrangian(grid, field, dt, steps, cfg.interp);

    std::vector<CharQuery> queries;
    queries.reserve(grid.values.size());
    for (int i = 0; i < grid.nq; ++i) {
      for (int j = 0; j < grid.np; ++j) {
        queries.push_back({grid.q_at(i), grid.p_at(j)});
      }
    }
    const std::vector<double> exact =
        evolve_characteristics(init, field, grid.t, queries);
    double l1 = 0.0;
    for (size_t idx = 0; idx < exact.size(); ++idx) {
      l1 += std::abs(grid.values[idx] - exact[idx]);
    }
    l1 *= grid.dq() * grid.dp();
    const double drift = std::abs(grid.mass() - mass0) / std::abs(mass0);
    errors.push_back(l1);
    drifts.push_back(drift);
    levels.push_back({{"n", n}, {"dt", dt}, {"l1_error", l1},
                      {"mass_drift", drift}});
  }

  std::vector<double> orders;
  for (size_t i = 0; i + 1 < errors.size(); ++i) {
    orders.push_back(std::log2(errors[i] / errors[i + 1]));
  }
  const double min_order =
      orders.empty() ? 0.0 : *std::min_element(orders.begin(), orders.end());
  const bool order_pass = min_order >= cfg.tol.order;
  const bool mass_pass = drifts.back() < cfg.tol.mass_drift;
  const bool pass = order_pass && mass_pass;

  ExperimentResult result;
  result.summary = {{"experiment", "convergence"},
                    {"gauge", to_string(gauge)},
                    {"levels", levels},
                    {"orders", orders},
                    {"min_order", min_order},
                    {"order_tolerance", cfg.tol.order},
                    {"finest_mass_drift", drifts.back()},
                    {"mass_drift_tolerance", cfg.tol.mass_drift},
                    {"pass", pass}};
  result.exit_code = pass ? 0 : 2;
  (void)out_dir;
  return result;
}

ExperimentResult run_drude_sweep(const ScenarioConfig& cfg,
                                 const std::filesystem::path& out_dir) {
  const Gauge gauge = cfg.gauge == GaugeChoice::Phi ? Gauge::Phi : Gauge::A;
  json points = json::array();
  bool all_pass = true;

  std::ofstream csv(out_dir / "drude_sweep.csv");
  csv << "omega,sigma_re,sigma_im,ref_re,ref_im,rel_err,residual\n";

  for (double omega : cfg.sweep_omegas) {
    ScenarioConfig point_cfg = cfg;
    point_cfg.drive.omega = omega;
    double ws, we;
    if (omega > 0.0) {
      const double period = 2.0 * std::numbers::pi / omega;
      ws = default_fit_window_start(point_cfg.params, point_cfg.drive);
      we = ws + 3.05 * period;
    } else {
      if (!(cfg.params.alpha > 0.0)) {
        throw std::runtime_error("drude-sweep: DC point requires alpha > 0");
      }
      ws = 5.0 / cfg.params.alpha;
      we = 2.0 * ws;
    }
    point_cfg.horizon = we;
    if (omega > 0.0) point_cfg.dt = (2.0 * std::numbers::pi / omega) / 200.0;

    ConductivityEstimate est;
    if (cfg.solver == SolverChoice::Characteristics) {
      const TimeSeries s = velocity_series_characteristics(gauge, point_cfg);
      est = conductivity_timeseries(s.t, s.mean_qdot, point_cfg.drive,
                                    point_cfg.params, ws, we, gauge);
    } else {
      const GridRunResult run =
          velocity_series_grid(gauge, point_cfg.grid, point_cfg);
      est = conductivity_timeseries(run.series.t, run.series.mean_qdot,
                                    point_cfg.drive, point_cfg.params, ws, we,
                                    gauge);
    }
    const double rel_err = std::abs(est.sigma - est.reference) /
                           std::abs(est.reference);
    const bool pass = rel_err < cfg.tol.sweep;
    all_pass &= pass;
    json pj = conductivity_json(est);
    pj["omega"] = omega;
    pj["rel_err"] = rel_err;
    pj["pass"] = pass;
    points.push_back(pj);
    csv << format_double(omega) << ',' << format_double(est.sigma.real()) << ','
        << format_double(est.sigma.imag()) << ','
        << format_double(est.reference.real()) << ','
        << format_double(est.reference.imag()) << ',' << format_double(rel_err)
        << ',' << format_double(est.fit_residual) << '\n';
  }

  ExperimentResult result;
  result.summary = {{"experiment", "drude-sweep"},
                    {"gauge", to_string(gauge)},
                    {"points", points},
                    {"tolerance", cfg.tol.sweep},
                    {"pass", all_pass}};
  result.exit_code = all_pass ? 0 : 2;
  return result;
}

namespace {

struct Check {
  std::string name;
  double max_deviation = 0.0;
  bool pass = true;
};

OperatorPolynomial random_integer_poly(std::mt19937_64& rng, double hbar,
                                       int max_degree) {
  std::uniform_int_distribution<int> coeff(-3, 3);
  std::uniform_int_distribution<int> pick(0, 3);
  OperatorPolynomial poly(hbar);
  for (int term = 0; term < 4; ++term) {
    MonomialKey key{0, 0, 0, 0};
    int degree = pick(rng) % (max_degree + 1);
    for (int d = 0; d < degree; ++d) key[pick(rng)] += 1;
    poly += OperatorPolynomial::monomial(key, coeff(rng), hbar);
  }
  return poly;
}

QpPolynomial random_quadratic(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  QpPolynomial h;
  for (int a = 0; a <= 2; ++a) {
    for (int b = 0; a + b <= 2; ++b) {
      h.add(a, b, Complex(u(rng), u(rng)));
    }
  }
  return h;
}

}  // namespace

ExperimentResult run_algebra_selftest(const ScenarioConfig& cfg,
                                      const std::filesystem::path& out_dir) {
  const std::uint64_t seed = cfg.seed.value_or(12345);
  std::mt19937_64 rng(seed);
  const double hbar = cfg.params.hbar;
  std::vector<Check> checks;

  // Canonical commutation relations, exact.
  {
    Check c{"commutation_relations"};
    const auto q = OperatorPolynomial::q(hbar);
    const auto p = OperatorPolynomial::p(hbar);
    const auto piq = OperatorPolynomial::pi_q(hbar);
    const auto pip = OperatorPolynomial::pi_p(hbar);
    const auto mih = OperatorPolynomial::constant(Complex(0.0, -hbar), hbar);
    c.pass = commutator(piq, q) == mih && commutator(pip, p) == mih &&
             commutator(p, q).is_zero() && commutator(pip, piq).is_zero() &&
             commutator(q, p).is_zero() && commutator(piq, pip).is_zero() &&
             commutator(piq, p).is_zero() && commutator(pip, q).is_zero();
    checks.push_back(c);
  }

  // Antisymmetry, Jacobi, associativity: exact on integer-coefficient
  // polynomials of degree <= 3.
  {
    Check anti{"commutator_antisymmetry"};
    Check jacobi{"jacobi_identity"};
    Check assoc{"multiply_associativity"};
    Check bilin{"commutator_bilinearity"};
    for (int trial = 0; trial < 50; ++trial) {
      const auto a = random_integer_poly(rng, hbar, 3);
      const auto b = random_integer_poly(rng, hbar, 3);
      const auto c = random_integer_poly(rng, hbar, 3);
      anti.pass &= (commutator(a, b) + commutator(b, a)).is_zero();
      jacobi.pass &= (commutator(a, commutator(b, c)) +
                      commutator(b, commutator(c, a)) +
                      commutator(c, commutator(a, b)))
                         .is_zero();
      assoc.pass &= ((a * b) * c) == (a * (b * c));
      bilin.pass &= commutator(a + b, c) ==
                    (commutator(a, c) + commutator(b, c));
    }
    checks.push_back(anti);
    checks.push_back(jacobi);
    checks.push_back(assoc);
    checks.push_back(bilin);
  }

  // Unitary equivalence Ad_U(H_SN) = H_w for the Kanai gauges at random
  // times and for randomized quadratic Hamiltonians.
  {
    Check kanai{"adjoint_matches_wigner_kanai"};
    Check random_h{"adjoint_matches_wigner_random_quadratic"};
    Check pi_deg{"wigner_pi_degree_leq_1"};
    Check hbar_inv{"transport_hbar_invariance"};
    std::uniform_real_distribution<double> ut(0.0, 2.0);

    ScenarioConfig drive_cfg = cfg;
    if (drive_cfg.drive.amplitude == 0.0) {
      drive_cfg.drive.amplitude = 0.1;
      drive_cfg.drive.omega = 2.0;
    }
    for (const auto kind :
         {HamiltonianKind::KanaiAGauge, HamiltonianKind::KanaiPhiGauge}) {
      const HamiltonianSpec spec =
          kind == HamiltonianKind::KanaiAGauge
              ? HamiltonianSpec::kanai_a_gauge(drive_cfg.params, drive_cfg.drive)
              : HamiltonianSpec::kanai_phi_gauge(drive_cfg.params,
                                                 drive_cfg.drive);
      for (int i = 0; i < 10; ++i) {
        const double t = ut(rng);
        const auto hsn = build_sn_hamiltonian(spec, t);
        const auto hw = build_wigner_hamiltonian(spec, t);
        kanai.max_deviation =
            std::max(kanai.max_deviation,
                     conjugate_by_wigner_unitary(hsn).max_relative_deviation(hw));
        pi_deg.pass &= hw.pi_degree() <= 1;

        PhysicalParams scaled = drive_cfg.params;
        scaled.hbar *= 10.0;
        const HamiltonianSpec spec10 =
            kind == HamiltonianKind::KanaiAGauge
                ? HamiltonianSpec::kanai_a_gauge(scaled, drive_cfg.drive)
                : HamiltonianSpec::kanai_phi_gauge(scaled, drive_cfg.drive);
        const auto f1 = transport_coefficients(hw);
        const auto f10 =
            transport_coefficients(build_wigner_hamiltonian(spec10, t));
        hbar_inv.pass &= f1.vq.approx_equal(f10.vq, 1e-13) &&
                         f1.vp.approx_equal(f10.vp, 1e-13);
      }
    }
    for (int i = 0; i < 100; ++i) {
      const QpPolynomial h = random_quadratic(rng);
      const auto hsn = sn_hamiltonian_from_qp(h, hbar);
      const auto hw = wigner_hamiltonian_from_qp(h, hbar);
      random_h.max_deviation = std::max(
          random_h.max_deviation,
          conjugate_by_wigner_unitary(hsn).max_relative_deviation(hw));
      pi_deg.pass &= hw.pi_degree() <= 1;
    }
    kanai.pass = kanai.max_deviation < 1e-12;
    random_h.pass = random_h.max_deviation < 1e-12;
    checks.push_back(kanai);
    checks.push_back(random_h);
    checks.push_back(pi_deg);
    checks.push_back(hbar_inv);
  }

  bool all_pass = true;
  json jchecks = json::array();
  for (const Check& c : checks) {
    all_pass &= c.pass;
    jchecks.push_back({{"name", c.name},
                       {"max_deviation", c.max_deviation},
                       {"pass", c.pass}});
  }

  ExperimentResult result;
  result.summary = {{"experiment", "algebra-selftest"},
                    {"seed", seed},
                    {"unitary_generator_sign", wigner_unitary_sign()},
                    {"checks", jchecks},
                    {"pass", all_pass}};
  result.exit_code = all_pass ? 0 : 2;
  (void)out_dir;
  return result;
}

ExperimentResult run_experiment(const ScenarioConfig& cfg,
                                const std::filesystem::path& out_dir) {
  std::filesystem::create_directories(out_dir);
  ExperimentResult result;
  switch (cfg.experiment) {
    case Experiment::CompareGauges:
      result = run_compare_gauges(cfg, out_dir);
      break;
    case Experiment::Transient:
      result = run_transient(cfg, out_dir);
      break;
    case Experiment::Convergence:
      result = run_convergence(cfg, out_dir);
      break;
    case Experiment::DrudeSweep:
      result = run_drude_sweep(cfg, out_dir);
      break;
    case Experiment::AlgebraSelftest:
      result = run_algebra_selftest(cfg, out_dir);
      break;
  }
  if (cfg.seed) result.summary["seed"] = *cfg.seed;
  std::ofstream out(out_dir / "summary.json");
  out << result.summary.dump(2) << '\n';
  return result;
}

}  // namespace eps
