#include "fewcycle/report.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <sstream>

#include "fewcycle/config.hpp"
#include "fewcycle/errors.hpp"

namespace fewcycle {

namespace {

std::ofstream open_for_write(const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  return out;
}

void finish(std::ofstream& out, const std::filesystem::path& path) {
  out.flush();
  if (!out) throw IoError("failed writing '" + path.string() + "'");
}

template <class... Args>
std::string printf_string(const char* fmt, Args... args) {
  char buf[256];
  std::snprintf(buf, sizeof buf, fmt, args...);
  return buf;
}

}  // namespace

void emit_trajectory_csv(const Trajectory& traj, std::ostream& out) {
  if (traj.empty()) throw ValidationError("cannot emit an empty trajectory");
  out << kTrajectoryCsvHeader << '\n';
  for (std::size_t k = 0; k < traj.size(); ++k) {
    const auto& c = traj.states[k].components();
    const auto& f = traj.fields[k];
    const double row[] = {traj.times[k],    c.rho11,          c.rho22,          c.rho33,
                          c.rho21.real(),   c.rho21.imag(),   c.rho31.real(),   c.rho31.imag(),
                          c.rho32.real(),   c.rho32.imag(),   f.omega31,        f.omega32};
    for (std::size_t i = 0; i < std::size(row); ++i) {
      if (i) out << ',';
      out << format_double(row[i]);
    }
    out << '\n';
  }
}

void emit_trajectory_csv(const Trajectory& traj, const std::filesystem::path& path) {
  auto out = open_for_write(path);
  emit_trajectory_csv(traj, out);
  finish(out, path);
}

void emit_sweep_csv(const SweepResult& result, std::ostream& out) {
  if (result.axes.size() == 1) {
    out << "axis_value,observable\n";
    for (std::size_t i = 0; i < result.rows(); ++i)
      out << format_double(result.axes[0].value(i)) << ',' << format_double(result.at(i)) << '\n';
    return;
  }
  out << "axis1,axis2,observable,converged\n";
  for (std::size_t i = 0; i < result.rows(); ++i)
    for (std::size_t j = 0; j < result.cols(); ++j)
      out << format_double(result.axes[0].value(i)) << ',' << format_double(result.axes[1].value(j))
          << ',' << format_double(result.at(i, j)) << ','
          << (result.converged[i * result.cols() + j] ? 1 : 0) << '\n';
}

void emit_sweep_csv(const SweepResult& result, const std::filesystem::path& path) {
  auto out = open_for_write(path);
  emit_sweep_csv(result, out);
  finish(out, path);
}

WindowSensitivity window_sensitivity(const Scenario& scenario) {
  Scenario wide = scenario;
  const Window w = scenario.resolved_window();
  const double mid = 0.5 * (w.start + w.end);
  wide.window = Window{mid - w.span(), mid + w.span()};
  return {*wide.window, propagate_observables(wide).final_populations[1]};
}

std::string run_summary(std::string_view name, const Scenario& scenario, const Trajectory& traj,
                        const std::optional<WindowSensitivity>& sensitivity) {
  const Observables obs = observables(traj);
  const Window w = scenario.resolved_window();
  const double area_pump = pulse_area(scenario.pump, w, scenario.dt);
  const double area_stokes = pulse_area(scenario.stokes, w, scenario.dt);
  const double area_total = area_pump + area_stokes;
  const Detunings d = detunings(scenario.atom, scenario.pump, scenario.stokes);
  constexpr double pi = std::numbers::pi;
  const auto& p = obs.final_populations;

  std::ostringstream out;
  out << "scenario " << name << " (" << to_string(scenario.pump.shape) << " pump, "
      << to_string(scenario.stokes.shape) << " stokes)\n";
  out << printf_string("  window [%g, %g] fs, dt %g fs, %zu stored steps\n", w.start, w.end,
                       scenario.grid().step(), traj.size());
  if (scenario.form == CouplingForm::Verbatim)
    out << "  equation: verbatim rho32 population term (rho33 - rho11)\n";
  out << printf_string("  final populations %.3f/%.3f/%.3f\n", p[0], p[1], p[2]);
  out << printf_string("  final rho11 = %.6f  rho22 = %.6f  rho33 = %.6f\n", p[0], p[1], p[2]);
  out << printf_string("  peak rho33 = %.4f at t = %.4f fs\n", obs.peak_rho33,
                       obs.peak_rho33_time);
  out << printf_string("  pulse area pump %.6f rad (%.4f π), stokes %.6f rad (%.4f π)\n",
                       area_pump, area_pump / pi, area_stokes, area_stokes / pi);
  out << printf_string("  total pulse area %.6f rad = %.2f π\n", area_total, area_total / pi);
  out << printf_string("  detunings pump %g, stokes %g, two-photon %g rad/fs\n", d.pump, d.stokes,
                       d.two_photon);
  out << printf_string("  trace deviation [%.3e, %.3e], min purity %.12f, min population %.3e\n",
                       obs.min_trace_deviation, obs.max_trace_deviation, obs.min_purity,
                       obs.min_population);
  if (sensitivity) {
    out << printf_string(
        "  window sensitivity: rho22(end) = %.6f over [%g, %g] fs (change %+.3e)\n",
        sensitivity->final_rho22, sensitivity->doubled.start, sensitivity->doubled.end,
        sensitivity->final_rho22 - p[1]);
  }
  return out.str();
}

std::string sweep_summary(std::string_view name, const SweepResult& result) {
  double lo = INFINITY, hi = -INFINITY;
  std::size_t failed = 0;
  for (std::size_t k = 0; k < result.values.size(); ++k) {
    if (!result.converged[k]) {
      ++failed;
      continue;
    }
    lo = std::min(lo, result.values[k]);
    hi = std::max(hi, result.values[k]);
  }
  std::ostringstream out;
  out << "sweep " << name << ": " << to_string(result.observable) << " over";
  for (const auto& a : result.axes)
    out << printf_string(" %s [%g, %g] x%zu", std::string(to_string(a.parameter)).c_str(), a.start,
                         a.end, a.count);
  out << '\n';
  out << printf_string("  cells %zu, flagged %zu\n", result.values.size(), failed);
  if (failed < result.values.size())
    out << printf_string("  observable range [%.6f, %.6f]\n", lo, hi);
  for (std::size_t k = 0; k < result.values.size(); ++k)
    if (!result.converged[k])
      out << "  cell " << k << " flagged: " << result.errors[k] << '\n';
  return out.str();
}

}  // namespace fewcycle
