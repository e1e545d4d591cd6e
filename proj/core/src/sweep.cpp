#include "fewcycle/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <thread>

#include "fewcycle/errors.hpp"

namespace fewcycle {

namespace {

constexpr std::pair<SweepParameter, std::string_view> kParameterNames[] = {
    {SweepParameter::TauPBoth, "tau_p_both"},   {SweepParameter::ChirpBoth, "chirp_both"},
    {SweepParameter::CepBoth, "cep_both"},      {SweepParameter::CepPump, "cep_pump"},
    {SweepParameter::CepStokes, "cep_stokes"},  {SweepParameter::RabiPump, "rabi_pump"},
    {SweepParameter::RabiStokes, "rabi_stokes"},
};

constexpr std::pair<SweepObservable, std::string_view> kObservableNames[] = {
    {SweepObservable::FinalRho22, "final_rho22"},
    {SweepObservable::FinalRho11, "final_rho11"},
    {SweepObservable::FinalRho33, "final_rho33"},
    {SweepObservable::PeakRho33, "peak_rho33"},
};

void apply(Scenario& s, SweepParameter p, double v) {
  switch (p) {
    case SweepParameter::TauPBoth:
      s.pump.tau_p = s.stokes.tau_p = v;
      break;
    case SweepParameter::ChirpBoth:
      s.pump.chirp = s.stokes.chirp = v;
      break;
    case SweepParameter::CepBoth:
      s.pump.cep = s.stokes.cep = v;
      break;
    case SweepParameter::CepPump:
      s.pump.cep = v;
      break;
    case SweepParameter::CepStokes:
      s.stokes.cep = v;
      break;
    case SweepParameter::RabiPump:
      s.pump.rabi_peak = v;
      break;
    case SweepParameter::RabiStokes:
      s.stokes.rabi_peak = v;
      break;
  }
}

// Parameters that write the same pulse field.
bool overlaps(SweepParameter a, SweepParameter b) {
  if (a == b) return true;
  auto cep = [](SweepParameter p) {
    return p == SweepParameter::CepBoth || p == SweepParameter::CepPump ||
           p == SweepParameter::CepStokes;
  };
  auto both = [](SweepParameter p) { return p == SweepParameter::CepBoth; };
  return cep(a) && cep(b) && (both(a) || both(b));
}

constexpr double kRangeSlack = 1e-9;

}  // namespace

std::string_view to_string(SweepParameter p) {
  for (const auto& [k, name] : kParameterNames)
    if (k == p) return name;
  return "unknown";
}

std::string_view to_string(SweepObservable o) {
  for (const auto& [k, name] : kObservableNames)
    if (k == o) return name;
  return "unknown";
}

SweepParameter parse_sweep_parameter(std::string_view text) {
  for (const auto& [k, name] : kParameterNames)
    if (name == text) return k;
  throw ValidationError("unknown sweep parameter '" + std::string(text) + "'");
}

SweepObservable parse_sweep_observable(std::string_view text) {
  for (const auto& [k, name] : kObservableNames)
    if (name == text) return k;
  throw ValidationError("unknown sweep observable '" + std::string(text) + "'");
}

double SweepAxis::value(std::size_t i) const {
  if (count <= 1) return start;
  if (i + 1 == count) return end;
  return start + static_cast<double>(i) * (end - start) / static_cast<double>(count - 1);
}

std::vector<double> SweepAxis::values() const {
  std::vector<double> v(count);
  for (std::size_t i = 0; i < count; ++i) v[i] = value(i);
  return v;
}

void SweepSpec::validate() const {
  if (axes.empty() || axes.size() > 2) throw ValidationError("a sweep needs one or two axes");
  for (const auto& a : axes) {
    if (a.count < 1) throw ValidationError("sweep axis count must be >= 1");
    if (!std::isfinite(a.start) || !std::isfinite(a.end) || !(a.start <= a.end))
      throw ValidationError("sweep axis " + std::string(to_string(a.parameter)) +
                            " requires start <= end");
  }
  if (axes.size() == 2 && overlaps(axes[0].parameter, axes[1].parameter))
    throw ValidationError("sweep axes must vary independent parameters");
  base.validate();
  // Every parameter is monotone in its axis, so both ends bound the domain.
  const std::size_t last0 = axes[0].count - 1;
  const std::size_t last1 = axes.size() > 1 ? axes[1].count - 1 : 0;
  for (std::size_t i : {std::size_t{0}, last0})
    for (std::size_t j : {std::size_t{0}, last1}) cell_scenario(i, j).validate();
}

std::size_t SweepSpec::cell_count() const {
  std::size_t n = 1;
  for (const auto& a : axes) n *= a.count;
  return n;
}

Scenario SweepSpec::cell_scenario(std::size_t i, std::size_t j) const {
  Scenario s = base;
  if (!axes.empty()) apply(s, axes[0].parameter, axes[0].value(i));
  if (axes.size() > 1) apply(s, axes[1].parameter, axes[1].value(j));
  return s;
}

bool SweepResult::all_converged() const {
  return std::all_of(converged.begin(), converged.end(), [](bool c) { return c; });
}

double evaluate_observable(const Scenario& scenario, SweepObservable observable) {
  const Observables obs = propagate_observables(scenario);
  switch (observable) {
    case SweepObservable::FinalRho22:
      return obs.final_populations[1];
    case SweepObservable::FinalRho11:
      return obs.final_populations[0];
    case SweepObservable::FinalRho33:
      return obs.final_populations[2];
    case SweepObservable::PeakRho33:
      return obs.peak_rho33;
  }
  return std::numeric_limits<double>::quiet_NaN();
}

SweepResult run_sweep(const SweepSpec& spec, std::size_t workers) {
  spec.validate();
  const std::size_t n = spec.cell_count();
  const std::size_t cols = spec.axes.size() > 1 ? spec.axes[1].count : 1;

  std::vector<double> values(n, std::numeric_limits<double>::quiet_NaN());
  std::vector<char> ok(n, 0);
  std::vector<std::string> errors(n);

  auto run_cell = [&](std::size_t idx) {
    try {
      const double v = evaluate_observable(spec.cell_scenario(idx / cols, idx % cols),
                                           spec.observable);
      values[idx] = v;
      if (std::isfinite(v) && v >= -kRangeSlack && v <= 1.0 + kRangeSlack)
        ok[idx] = 1;
      else
        errors[idx] = "observable out of range";
    } catch (const std::exception& e) {
      values[idx] = std::numeric_limits<double>::quiet_NaN();
      errors[idx] = e.what();
    }
  };

  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = std::min(workers, n);
  if (workers <= 1) {
    for (std::size_t idx = 0; idx < n; ++idx) run_cell(idx);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
      const std::size_t lo = w * n / workers;
      const std::size_t hi = (w + 1) * n / workers;
      pool.emplace_back([&, lo, hi] {
        for (std::size_t idx = lo; idx < hi; ++idx) run_cell(idx);
      });
    }
  }

  SweepResult result;
  result.axes = spec.axes;
  result.observable = spec.observable;
  result.values = std::move(values);
  result.converged.assign(ok.begin(), ok.end());
  result.errors = std::move(errors);
  return result;
}

Scenario gaussian_reference_scenario() {
  Scenario s;
  s.atom = LambdaAtom(3.0, 0.4);
  s.pump = {PulseShape::GaussianChirped, 3.0, 0.76, 4.70, 0.016, 0.0};
  s.stokes = {PulseShape::GaussianChirped, 2.6, 0.79, 4.70, 0.016, 0.0};
  return s;
}

Scenario sinc_reference_scenario() {
  Scenario s;
  s.atom = LambdaAtom(3.0, 0.4);
  s.pump = {PulseShape::Sinc, 3.0, 0.76, 5.06, 0.0, 0.0};
  s.stokes = {PulseShape::Sinc, 2.6, 0.79, 5.06, 0.0, 0.0};
  return s;
}

SweepSpec width_sweep_defaults(PulseShape shape) {
  if (shape == PulseShape::GaussianChirped)
    return {gaussian_reference_scenario(), {{SweepParameter::TauPBoth, 4.0, 6.0, 21}},
            SweepObservable::FinalRho22};
  return {sinc_reference_scenario(), {{SweepParameter::TauPBoth, 4.94, 5.17, 24}},
          SweepObservable::FinalRho22};
}

SweepSpec chirp_sweep_defaults() {
  return {gaussian_reference_scenario(), {{SweepParameter::ChirpBoth, 0.012, 0.020, 17}},
          SweepObservable::FinalRho22};
}

SweepSpec cep_sweep_defaults() {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  return {sinc_reference_scenario(),
          {{SweepParameter::CepPump, 0.0, two_pi, 9}, {SweepParameter::CepStokes, 0.0, two_pi, 9}},
          SweepObservable::FinalRho22};
}

SweepSpec rabi_map_defaults(PulseShape shape) {
  Scenario base = shape == PulseShape::GaussianChirped ? gaussian_reference_scenario()
                                                       : sinc_reference_scenario();
  return {base,
          {{SweepParameter::RabiPump, 0.1, 3.0, 40}, {SweepParameter::RabiStokes, 0.1, 3.0, 40}},
          SweepObservable::FinalRho22};
}

}  // namespace fewcycle
