// fewcycle: command-line front end for single runs and parameter sweeps.
//
//   fewcycle presets [--show NAME]
//   fewcycle run   (--preset NAME | --config PATH) [--out DIR] [--dt X] [--window A B]
//                  [--store-every N] [--verbatim-eq1]
//   fewcycle sweep (--preset NAME | --config PATH) [--out DIR] [--workers N] ...
//   fewcycle check (--preset NAME | --config PATH) ...
//
// Exit codes: 0 success, 1 validation/parse/IO error, 2 numerical breach or
// flagged sweep cells.

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "fewcycle/bloch.hpp"
#include "fewcycle/config.hpp"
#include "fewcycle/errors.hpp"
#include "fewcycle/report.hpp"
#include "fewcycle/sweep.hpp"

namespace fs = std::filesystem;
using namespace fewcycle;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitNumerical = 2;

struct CommonOptions {
  std::string preset;
  std::string config_path;
  std::string out_dir;
  double dt = 0.0;
  std::vector<double> window;
  std::size_t store_every = 0;
  bool verbatim = false;
};

void add_common(CLI::App* cmd, CommonOptions& o) {
  auto* preset = cmd->add_option("--preset", o.preset, "Shipped scenario name (see `presets`)");
  auto* config = cmd->add_option("--config", o.config_path, "Scenario configuration file")
                     ->check(CLI::ExistingFile);
  preset->excludes(config);
  cmd->add_option("--out", o.out_dir, "Output directory (overrides [output] dir)");
  cmd->add_option("--dt", o.dt, "Integration step in fs")->check(CLI::PositiveNumber);
  cmd->add_option("--window", o.window, "Integration window T_START T_END in fs")
      ->expected(2)
      ->allow_extra_args(false);
  cmd->add_option("--store-every", o.store_every, "Store every N-th step")
      ->check(CLI::PositiveNumber);
  cmd->add_flag("--verbatim-eq1", o.verbatim,
                "Use (rho33 - rho11) in the rho32 equation instead of (rho33 - rho22)");
}

ScenarioConfig load(const CommonOptions& o) {
  ScenarioConfig cfg;
  if (!o.config_path.empty()) {
    std::ifstream in(o.config_path);
    if (!in) throw IoError("cannot read '" + o.config_path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    cfg = parse_config(buf.str());
  } else if (!o.preset.empty()) {
    cfg = load_preset(o.preset);
  } else {
    throw ValidationError("one of --preset or --config is required");
  }
  if (!o.out_dir.empty()) cfg.output.dir = o.out_dir;
  if (o.dt > 0.0) cfg.scenario.dt = o.dt;
  if (o.window.size() == 2) cfg.scenario.window = Window{o.window[0], o.window[1]};
  if (o.store_every > 0) cfg.store_every = o.store_every;
  if (o.verbatim) cfg.scenario.form = CouplingForm::Verbatim;
  cfg.scenario.validate();
  return cfg;
}

fs::path output_file(const ScenarioConfig& cfg, const std::string& file) {
  const fs::path dir(cfg.output.dir);
  fs::create_directories(dir);
  return dir / file;
}

void write_text(const fs::path& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  out << text;
}

bool has_sinc(const Scenario& s) {
  return s.pump.shape == PulseShape::Sinc || s.stokes.shape == PulseShape::Sinc;
}

int cmd_presets(const std::string& show) {
  if (!show.empty()) {
    for (const auto& p : presets())
      if (p.name == show) {
        std::cout << p.text;
        return kExitOk;
      }
    throw ValidationError("unknown preset '" + show + "'");
  }
  for (const auto& p : presets()) std::cout << p.name << "\t" << p.description << '\n';
  return kExitOk;
}

int cmd_run(const CommonOptions& o) {
  const ScenarioConfig cfg = load(o);
  const Trajectory traj = propagate(cfg.scenario, cfg.store_every);
  std::optional<WindowSensitivity> sens;
  if (has_sinc(cfg.scenario)) sens = window_sensitivity(cfg.scenario);
  const std::string summary = run_summary(cfg.name, cfg.scenario, traj, sens);
  emit_trajectory_csv(traj, output_file(cfg, cfg.output.trajectory));
  write_text(output_file(cfg, cfg.output.summary), summary);
  std::cout << summary;
  return kExitOk;
}

int cmd_sweep(const CommonOptions& o, std::size_t workers) {
  const ScenarioConfig cfg = load(o);
  const SweepResult result = run_sweep(cfg.sweep_spec(), workers);
  const std::string summary = sweep_summary(cfg.name, result);
  emit_sweep_csv(result, output_file(cfg, cfg.output.sweep));
  write_text(output_file(cfg, cfg.output.summary), summary);
  std::cout << summary;
  return result.all_converged() ? kExitOk : kExitNumerical;
}

// Invariant and convergence self-test of one scenario.
int cmd_check(const CommonOptions& o) {
  const ScenarioConfig cfg = load(o);
  const Scenario& s = cfg.scenario;
  const TimeGrid grid = s.grid();
  bool ok = true;
  auto report = [&](const char* what, bool pass, double value, double bound) {
    std::printf("%-4s %-28s %.3e (bound %.1e)\n", pass ? "ok" : "FAIL", what, value, bound);
    ok = ok && pass;
  };

  const Trajectory bloch = propagate(s, 1);
  const Observables obs = observables(bloch);
  const double trace = std::max(std::abs(obs.min_trace_deviation), std::abs(obs.max_trace_deviation));
  report("trace drift", trace <= 1e-8, trace, 1e-8);
  report("purity drift", 1.0 - obs.min_purity <= 1e-6, 1.0 - obs.min_purity, 1e-6);
  report("population floor", obs.min_population >= -1e-9, -obs.min_population, 1e-9);

  const Trajectory oracle =
      propagate_wavefunction_oracle(s.atom, s.pump, s.stokes, {1.0, 0.0, 0.0}, grid, 1);
  double diff = 0.0;
  for (std::size_t k = 0; k < bloch.size(); ++k)
    for (int i = 1; i <= 3; ++i)
      for (int j = 1; j <= 3; ++j)
        diff = std::max(diff, std::abs(bloch.states[k].at(i, j) - oracle.states[k].at(i, j)));
  report("wavefunction oracle", diff <= 1e-6, diff, 1e-6);

  const DensityState back =
      propagate_backward(s.atom, s.pump, s.stokes, bloch.states.back(), grid, s.form);
  const double rev = std::max({std::abs(back.population(1) - 1.0), std::abs(back.population(2)),
                               std::abs(back.population(3))});
  report("time reversal", rev <= 1e-6, rev, 1e-6);

  auto final_of = [&](double dt) {
    Scenario t = s;
    t.dt = dt;
    return propagate_observables(t).final_populations;
  };
  const auto coarse = final_of(s.dt * 2.0);
  const auto fine = final_of(s.dt);
  const auto ref = final_of(s.dt / 8.0);
  double e_coarse = 0.0, e_fine = 0.0;
  for (int i = 0; i < 3; ++i) {
    e_coarse = std::max(e_coarse, std::abs(coarse[i] - ref[i]));
    e_fine = std::max(e_fine, std::abs(fine[i] - ref[i]));
  }
  const double ratio = e_fine > 0.0 ? e_coarse / e_fine : INFINITY;
  std::printf("%-4s %-28s %.2f (expected [12, 20])\n", ratio >= 12 && ratio <= 20 ? "ok" : "warn",
              "RK4 error ratio (2dt/dt)", ratio);

  return ok ? kExitOk : kExitNumerical;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Few-cycle pulse population transfer in Lambda atoms"};
  app.require_subcommand(1);

  std::string show;
  auto* presets_cmd = app.add_subcommand("presets", "List shipped scenarios");
  presets_cmd->add_option("--show", show, "Print the configuration text of one preset");

  CommonOptions run_opts, sweep_opts, check_opts;
  std::size_t workers = 1;
  auto* run_cmd = app.add_subcommand("run", "Single propagation: trajectory CSV and summary");
  add_common(run_cmd, run_opts);
  auto* sweep_cmd = app.add_subcommand("sweep", "Parameter grid: sweep CSV and summary");
  add_common(sweep_cmd, sweep_opts);
  sweep_cmd->add_option("--workers", workers, "Worker threads (0 = all cores)");
  auto* check_cmd = app.add_subcommand("check", "Invariant and convergence self-test");
  add_common(check_cmd, check_opts);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (presets_cmd->parsed()) return cmd_presets(show);
    if (run_cmd->parsed()) return cmd_run(run_opts);
    if (sweep_cmd->parsed()) return cmd_sweep(sweep_opts, workers);
    if (check_cmd->parsed()) return cmd_check(check_opts);
  } catch (const InvariantBreach& e) {
    std::cerr << "numerical error: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const StepTooLarge& e) {
    std::cerr << "numerical error: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  }
  return kExitInput;
}
