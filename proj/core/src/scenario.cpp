#include "eps/scenario.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

namespace eps {

namespace {

struct RawEntry {
  std::string value;
  int line;
  bool used = false;
};

class KeyStore {
 public:
  KeyStore(const std::string& text, const std::string& origin)
      : origin_(origin) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      const auto hash = line.find('#');
      if (hash != std::string::npos) line.erase(hash);
      const std::string trimmed = trim(line);
      if (trimmed.empty()) continue;
      const auto eq = trimmed.find('=');
      if (eq == std::string::npos) {
        fail(lineno, "expected 'key = value'");
      }
      const std::string key = trim(trimmed.substr(0, eq));
      const std::string value = trim(trimmed.substr(eq + 1));
      if (key.empty() || value.empty()) {
        fail(lineno, "empty key or value");
      }
      if (entries_.contains(key)) {
        fail(lineno, "duplicate key '" + key + "'");
      }
      entries_[key] = RawEntry{value, lineno};
    }
  }

  std::optional<std::string> take(const std::string& key) {
    auto it = entries_.find(key);
    if (it == entries_.end()) return std::nullopt;
    it->second.used = true;
    return it->second.value;
  }

  double take_double(const std::string& key, double fallback) {
    auto v = take(key);
    if (!v) return fallback;
    return parse_double(key, *v);
  }

  int take_int(const std::string& key, int fallback) {
    auto v = take(key);
    if (!v) return fallback;
    int out{};
    const auto res = std::from_chars(v->data(), v->data() + v->size(), out);
    if (res.ec != std::errc{} || res.ptr != v->data() + v->size()) {
      fail(line_of(key), "key '" + key + "': expected integer, got '" + *v + "'");
    }
    return out;
  }

  void reject_unused() const {
    std::string msg;
    for (const auto& [key, entry] : entries_) {
      if (!entry.used) {
        if (!msg.empty()) msg += "; ";
        msg += "line " + std::to_string(entry.line) + ": unknown key '" + key + "'";
      }
    }
    if (!msg.empty()) {
      throw std::runtime_error(origin_ + ": " + msg);
    }
  }

  [[noreturn]] void fail(int line, const std::string& what) const {
    throw std::runtime_error(origin_ + ":" + std::to_string(line) + ": " + what);
  }

  int line_of(const std::string& key) const {
    auto it = entries_.find(key);
    return it == entries_.end() ? 0 : it->second.line;
  }

  double parse_double(const std::string& key, const std::string& v) const {
    try {
      size_t pos = 0;
      const double d = std::stod(v, &pos);
      if (pos != v.size()) throw std::invalid_argument("trailing characters");
      return d;
    } catch (const std::exception&) {
      fail(line_of(key), "key '" + key + "': expected number, got '" + v + "'");
    }
  }

 private:
  static std::string trim(const std::string& s) {
    size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
  }

  std::map<std::string, RawEntry> entries_;
  std::string origin_;
};

GridGeometry take_grid(KeyStore& store, const std::string& prefix,
                       const GridGeometry& fallback) {
  GridGeometry g = fallback;
  g.q_min = store.take_double(prefix + ".q_min", fallback.q_min);
  g.q_max = store.take_double(prefix + ".q_max", fallback.q_max);
  g.p_min = store.take_double(prefix + ".p_min", fallback.p_min);
  g.p_max = store.take_double(prefix + ".p_max", fallback.p_max);
  g.nq = store.take_int(prefix + ".nq", fallback.nq);
  g.np = store.take_int(prefix + ".np", fallback.np);
  return g;
}

}  // namespace

std::string to_string(Experiment e) {
  switch (e) {
    case Experiment::CompareGauges: return "compare-gauges";
    case Experiment::Transient: return "transient";
    case Experiment::Convergence: return "convergence";
    case Experiment::DrudeSweep: return "drude-sweep";
    case Experiment::AlgebraSelftest: return "algebra-selftest";
  }
  return "?";
}

std::string to_string(Gauge g) { return g == Gauge::A ? "A" : "phi"; }

ScenarioConfig parse_scenario(const std::string& text,
                              const std::string& origin) {
  KeyStore store(text, origin);
  ScenarioConfig cfg;

  if (auto v = store.take("experiment")) {
    if (*v == "compare-gauges") cfg.experiment = Experiment::CompareGauges;
    else if (*v == "transient") cfg.experiment = Experiment::Transient;
    else if (*v == "convergence") cfg.experiment = Experiment::Convergence;
    else if (*v == "drude-sweep") cfg.experiment = Experiment::DrudeSweep;
    else if (*v == "algebra-selftest") cfg.experiment = Experiment::AlgebraSelftest;
    else store.fail(store.line_of("experiment"), "unknown experiment '" + *v + "'");
  }
  if (auto v = store.take("gauge")) {
    if (*v == "A") cfg.gauge = GaugeChoice::A;
    else if (*v == "phi") cfg.gauge = GaugeChoice::Phi;
    else if (*v == "both") cfg.gauge = GaugeChoice::Both;
    else store.fail(store.line_of("gauge"), "gauge must be A, phi or both");
  }
  if (auto v = store.take("solver")) {
    if (*v == "characteristics") cfg.solver = SolverChoice::Characteristics;
    else if (*v == "grid") cfg.solver = SolverChoice::Grid;
    else if (*v == "both") cfg.solver = SolverChoice::Both;
    else store.fail(store.line_of("solver"),
                    "solver must be characteristics, grid or both");
  }

  cfg.params.m = store.take_double("params.m", 1.0);
  cfg.params.e = store.take_double("params.e", 1.0);
  cfg.params.c = store.take_double("params.c", 1.0);
  cfg.params.alpha = store.take_double("params.alpha", 0.0);
  cfg.params.hbar = store.take_double("params.hbar", 1.0);
  cfg.params.n_particles = store.take_int("params.N", 1);

  cfg.drive.amplitude = store.take_double("drive.E0", 0.0);
  cfg.drive.omega = store.take_double("drive.omega", 0.0);
  cfg.drive.phase = store.take_double("drive.phase", 0.0);
  if (auto v = store.take("drive.representation")) {
    if (*v == "cosine") cfg.drive.representation = DriveRepresentation::RealCosine;
    else if (*v == "phasor") cfg.drive.representation = DriveRepresentation::ComplexPhasor;
    else store.fail(store.line_of("drive.representation"),
                    "representation must be cosine or phasor");
  }

  if (auto v = store.take("init.kind")) {
    if (*v == "gaussian") cfg.init.kind = InitialKind::GaussianPacket;
    else if (*v == "delta-line") cfg.init.kind = InitialKind::MollifiedDeltaLine;
    else store.fail(store.line_of("init.kind"),
                    "init.kind must be gaussian or delta-line");
  }
  cfg.init.q0 = store.take_double("init.q0", 0.0);
  cfg.init.p0 = store.take_double("init.p0", 0.0);
  cfg.init.sq = store.take_double("init.sq", 1.0);
  cfg.init.sp = store.take_double("init.sp", 1.0);
  cfg.init.k = store.take_double("init.k", 0.0);
  cfg.init.a = store.take_double("init.a", 1.0);
  cfg.init.c_norm = store.take_double("init.c_norm", 1.0);
  cfg.init.mass_m = cfg.params.m;

  cfg.grid = take_grid(store, "grid", cfg.grid);
  {
    GridGeometry phi = take_grid(store, "phi_grid", cfg.grid);
    if (phi.q_min != cfg.grid.q_min || phi.q_max != cfg.grid.q_max ||
        phi.p_min != cfg.grid.p_min || phi.p_max != cfg.grid.p_max ||
        phi.nq != cfg.grid.nq || phi.np != cfg.grid.np) {
      cfg.phi_grid = phi;
    }
  }

  if (auto v = store.take("run.interp")) {
    if (*v == "linear") cfg.interp = InterpOrder::Linear;
    else if (*v == "cubic") cfg.interp = InterpOrder::Cubic;
    else store.fail(store.line_of("run.interp"), "interp must be linear or cubic");
  }
  cfg.horizon = store.take_double("run.horizon", cfg.horizon);
  cfg.dt = store.take_double("run.dt", cfg.dt);
  cfg.sample_stride = store.take_int("run.sample_stride", 1);

  if (auto v = store.take("fit.t_start")) {
    cfg.fit_start = store.parse_double("fit.t_start", *v);
  }
  if (auto v = store.take("fit.t_end")) {
    cfg.fit_end = store.parse_double("fit.t_end", *v);
  }

  cfg.tol.char_gap = store.take_double("tol.char_gap", cfg.tol.char_gap);
  cfg.tol.grid_gap = store.take_double("tol.grid_gap", cfg.tol.grid_gap);
  cfg.tol.transient = store.take_double("tol.transient", cfg.tol.transient);
  cfg.tol.order = store.take_double("tol.order", cfg.tol.order);
  cfg.tol.mass_drift = store.take_double("tol.mass_drift", cfg.tol.mass_drift);
  cfg.tol.sweep = store.take_double("tol.sweep", cfg.tol.sweep);

  if (auto v = store.take("sweep.omegas")) {
    std::istringstream in(*v);
    std::string item;
    while (std::getline(in, item, ',')) {
      cfg.sweep_omegas.push_back(store.parse_double("sweep.omegas", item));
    }
  }

  cfg.convergence_levels = store.take_int("convergence.levels", 3);
  cfg.convergence_base_n = store.take_int("convergence.base_n", 64);
  cfg.convergence_base_dt =
      store.take_double("convergence.base_dt", cfg.convergence_base_dt);
  cfg.convergence_horizon =
      store.take_double("convergence.horizon", cfg.convergence_horizon);

  cfg.ensemble_n = store.take_int("ensemble.n", cfg.ensemble_n);
  cfg.ensemble_n_sigma = store.take_double("ensemble.n_sigma", cfg.ensemble_n_sigma);

  if (auto v = store.take("seed")) {
    std::uint64_t out{};
    const auto res = std::from_chars(v->data(), v->data() + v->size(), out);
    if (res.ec != std::errc{} || res.ptr != v->data() + v->size()) {
      store.fail(store.line_of("seed"), "seed must be a non-negative integer");
    }
    cfg.seed = out;
  }

  store.reject_unused();
  cfg.validate();
  return cfg;
}

void ScenarioConfig::validate() const {
  params.validate();
  drive.validate();
  init.validate();
  if (!(horizon > 0.0)) throw std::runtime_error("config: run.horizon must be > 0");
  if (!(dt > 0.0)) throw std::runtime_error("config: run.dt must be > 0");
  if (sample_stride < 1) throw std::runtime_error("config: run.sample_stride >= 1");
  if (!(grid.q_min < grid.q_max) || !(grid.p_min < grid.p_max)) {
    throw std::runtime_error("config: grid bounds must be strictly ordered");
  }
  if (grid.nq < 8 || grid.np < 8) {
    throw std::runtime_error("config: grid needs >= 8 points per axis");
  }
  if (experiment == Experiment::DrudeSweep) {
    if (drive.amplitude == 0.0) {
      throw std::runtime_error(
          "config: drude-sweep requires a nonzero drive (E0 != 0)");
    }
    if (sweep_omegas.empty()) {
      throw std::runtime_error("config: drude-sweep requires sweep.omegas");
    }
  }
  if (experiment == Experiment::Transient && drive.amplitude != 0.0) {
    throw std::runtime_error("config: transient experiment requires E0 = 0");
  }
  if (convergence_levels < 2 || convergence_levels > 6) {
    throw std::runtime_error("config: convergence.levels must be in [2,6]");
  }
  if (ensemble_n < 8) throw std::runtime_error("config: ensemble.n >= 8");
}

ScenarioConfig load_scenario(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_scenario(buf.str(), path.string());
}

}  // namespace eps
