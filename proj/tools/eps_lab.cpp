#include <CLI11.hpp>
#include <cstdio>
#include <exception>
#include <iostream>
#include <nlohmann/json.hpp>
#include <string>

#include "eps/experiments.hpp"
#include "eps/hamiltonian.hpp"
#include "eps/scenario.hpp"

namespace {

nlohmann::json hamiltonian_json(const eps::OperatorPolynomial& poly) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [key, coeff] : poly.terms()) {
    terms.push_back({{"monomial", {key[0], key[1], key[2], key[3]}},
                     {"re", coeff.real()},
                     {"im", coeff.imag()}});
  }
  return {{"hbar", poly.hbar()},
          {"monomial_order", "q^a p^b pi_q^c pi_p^d"},
          {"terms", terms}};
}

int run_command(const std::string& config_path, const std::string& experiment,
                const std::string& out_dir, std::int64_t seed, bool has_seed) {
  eps::ScenarioConfig cfg = eps::load_scenario(config_path);
  if (!experiment.empty()) {
    if (experiment == "compare-gauges") cfg.experiment = eps::Experiment::CompareGauges;
    else if (experiment == "transient") cfg.experiment = eps::Experiment::Transient;
    else if (experiment == "convergence") cfg.experiment = eps::Experiment::Convergence;
    else if (experiment == "drude-sweep") cfg.experiment = eps::Experiment::DrudeSweep;
    else if (experiment == "algebra-selftest") cfg.experiment = eps::Experiment::AlgebraSelftest;
    else throw std::runtime_error("unknown experiment '" + experiment + "'");
    cfg.validate();
  }
  if (has_seed) cfg.seed = static_cast<std::uint64_t>(seed);
  const eps::ExperimentResult result = eps::run_experiment(cfg, out_dir);
  std::cout << result.summary.dump(2) << '\n';
  return result.exit_code;
}

int dump_command(const std::string& config_path, const std::string& gauge,
                 const std::string& picture, double t) {
  eps::PhysicalParams params;
  eps::HarmonicDrive drive;
  if (!config_path.empty()) {
    const eps::ScenarioConfig cfg = eps::load_scenario(config_path);
    params = cfg.params;
    drive = cfg.drive;
  } else {
    drive.amplitude = 0.1;
    drive.omega = 2.0;
    params.alpha = 0.5;
  }
  const eps::HamiltonianSpec spec =
      gauge == "phi" ? eps::HamiltonianSpec::kanai_phi_gauge(params, drive)
                     : eps::HamiltonianSpec::kanai_a_gauge(params, drive);
  const eps::OperatorPolynomial poly =
      picture == "sn" ? eps::build_sn_hamiltonian(spec, t)
                      : eps::build_wigner_hamiltonian(spec, t);
  nlohmann::json out = hamiltonian_json(poly);
  out["gauge"] = gauge;
  out["picture"] = picture;
  out["t"] = t;
  std::cout << out.dump(2) << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Extended-phase-space Wigner dynamics laboratory"};
  app.require_subcommand(1);

  auto* run = app.add_subcommand("run", "Run a scenario experiment");
  std::string config_path, experiment, out_dir = "out";
  std::int64_t seed = 0;
  run->add_option("config", config_path, "Scenario config file")->required();
  run->add_option("--experiment", experiment,
                  "Override the experiment named in the config");
  run->add_option("--out", out_dir, "Output directory");
  auto* seed_opt = run->add_option("--seed", seed, "RNG seed for randomized checks");

  auto* dump = app.add_subcommand(
      "dump-hamiltonian", "Dump a Kanai Hamiltonian as sorted monomial JSON");
  std::string dump_config, dump_gauge = "A", dump_picture = "wigner";
  double dump_t = 0.0;
  dump->add_option("--config", dump_config, "Optional scenario config");
  dump->add_option("--gauge", dump_gauge, "A or phi")
      ->check(CLI::IsMember({"A", "phi"}));
  dump->add_option("--picture", dump_picture, "sn or wigner")
      ->check(CLI::IsMember({"sn", "wigner"}));
  dump->add_option("--t", dump_t, "Evaluation time");

  CLI11_PARSE(app, argc, argv);

  try {
    if (run->parsed()) {
      return run_command(config_path, experiment, out_dir, seed,
                         seed_opt->count() > 0);
    }
    return dump_command(dump_config, dump_gauge, dump_picture, dump_t);
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << '\n';
    return 1;
  }
}
