#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "eps/dynamics.hpp"
#include "eps/gauges.hpp"

namespace eps {

enum class Experiment {
  CompareGauges,
  Transient,
  Convergence,
  DrudeSweep,
  AlgebraSelftest,
};

enum class SolverChoice { Characteristics, Grid, Both };
enum class GaugeChoice { A, Phi, Both };

struct GridGeometry {
  double q_min = -10.0, q_max = 10.0;
  double p_min = -10.0, p_max = 10.0;
  int nq = 128, np = 128;
};

struct Tolerances {
  double char_gap = 1e-6;
  double grid_gap = 1e-2;
  double transient = 0.005;
  double order = 1.8;
  double mass_drift = 1e-6;
  double sweep = 0.01;
};

/** Fully validated scenario configuration, loaded from a key=value file. */
struct ScenarioConfig {
  Experiment experiment = Experiment::CompareGauges;
  GaugeChoice gauge = GaugeChoice::Both;
  SolverChoice solver = SolverChoice::Characteristics;

  PhysicalParams params;
  HarmonicDrive drive;
  InitialCondition init;

  GridGeometry grid;
  std::optional<GridGeometry> phi_grid;  ///< override for the phi-gauge run
  InterpOrder interp = InterpOrder::Cubic;

  double horizon = 20.0;
  double dt = 0.01;
  int sample_stride = 1;

  std::optional<double> fit_start;
  std::optional<double> fit_end;

  Tolerances tol;

  std::vector<double> sweep_omegas;
  int convergence_levels = 3;
  int convergence_base_n = 64;
  double convergence_base_dt = 0.05;
  double convergence_horizon = 3.0;

  int ensemble_n = 129;
  double ensemble_n_sigma = 8.0;

  std::optional<std::uint64_t> seed;

  void validate() const;
};

/** Parses a scenario file; unknown keys and malformed lines are rejected
 *  with line diagnostics. */
ScenarioConfig load_scenario(const std::filesystem::path& path);
ScenarioConfig parse_scenario(const std::string& text,
                              const std::string& origin = "<string>");

std::string to_string(Experiment e);
std::string to_string(Gauge g);

}  // namespace eps
