#pragma once

#include <filesystem>
#include <nlohmann/json.hpp>

#include "eps/io.hpp"
#include "eps/observables.hpp"
#include "eps/scenario.hpp"

namespace eps {

struct ExperimentResult {
  int exit_code = 0;  ///< 0 success, 2 tolerance failure
  nlohmann::json summary;
};

/**
 * Mean-trajectory time series from the exact characteristic flow. The
 * phi-gauge run uses the gauge-matched initial data (momenta shifted by the
 * gauge momentum shift at t = 0).
 */
TimeSeries velocity_series_characteristics(Gauge gauge,
                                           const ScenarioConfig& cfg);

struct GridRunResult {
  TimeSeries series;
  double initial_mass = 0.0;
  double final_mass = 0.0;
  double max_mass_drift = 0.0;  ///< max relative mass deviation over samples
  SemiLagrangianDiagnostics diagnostics;
  PhaseGrid final_grid;
};

/** Semi-Lagrangian grid run recording the mean-trajectory series. */
GridRunResult velocity_series_grid(Gauge gauge, const GridGeometry& geometry,
                                   const ScenarioConfig& cfg);

nlohmann::json conductivity_json(const ConductivityEstimate& est);

ExperimentResult run_compare_gauges(const ScenarioConfig& cfg,
                                    const std::filesystem::path& out_dir);
ExperimentResult run_transient(const ScenarioConfig& cfg,
                               const std::filesystem::path& out_dir);
ExperimentResult run_convergence(const ScenarioConfig& cfg,
                                 const std::filesystem::path& out_dir);
ExperimentResult run_drude_sweep(const ScenarioConfig& cfg,
                                 const std::filesystem::path& out_dir);
ExperimentResult run_algebra_selftest(const ScenarioConfig& cfg,
                                      const std::filesystem::path& out_dir);

/** Dispatch on cfg.experiment; writes summary.json and CSV artifacts. */
ExperimentResult run_experiment(const ScenarioConfig& cfg,
                                const std::filesystem::path& out_dir);

}  // namespace eps
