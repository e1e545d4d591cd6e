#include "fewcycle/bloch.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "fewcycle/errors.hpp"

namespace fewcycle {

void TimeGrid::validate() const {
  if (!std::isfinite(t_start) || !std::isfinite(t_end) || !(t_start < t_end))
    throw ValidationError("time grid requires t_start < t_end");
  if (!(dt > 0.0) || !std::isfinite(dt)) throw ValidationError("time grid requires dt > 0");
  if ((t_end - t_start) / dt > static_cast<double>(kMaxSteps))
    throw ValidationError("time grid exceeds " + std::to_string(kMaxSteps) + " steps");
}

std::size_t TimeGrid::steps() const {
  const double ratio = (t_end - t_start) / dt;
  return std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(ratio - 1e-9)));
}

double TimeGrid::step() const { return (t_end - t_start) / static_cast<double>(steps()); }

double TimeGrid::time(std::size_t k) const {
  return k == steps() ? t_end : t_start + static_cast<double>(k) * step();
}

Window default_window(const PulseSpec& pump, const PulseSpec& stokes) {
  if (pump.shape == PulseShape::Sinc || stokes.shape == PulseShape::Sinc)
    return {-kSincDefaultHalfWindow, kSincDefaultHalfWindow};
  const double half = kGaussianWindowWidths * std::max(pump.tau_p, stokes.tau_p);
  return {-half, half};
}

void Scenario::validate() const {
  pump.validate();
  stokes.validate();
  grid().validate();
}

Window Scenario::resolved_window() const {
  return window ? *window : default_window(pump, stokes);
}

TimeGrid Scenario::grid() const {
  const Window w = resolved_window();
  return {w.start, w.end, dt};
}

BlochVector bloch_rhs(const LambdaAtom& atom, double omega31_t, double omega32_t,
                      const BlochVector& rho, CouplingForm form) {
  constexpr cplx i{0.0, 1.0};
  const double a = omega31_t;
  const double b = omega32_t;
  const cplx rho12 = std::conj(rho.rho21);
  const cplx rho23 = std::conj(rho.rho32);
  const double lower_for_32 = form == CouplingForm::Corrected ? rho.rho22 : rho.rho11;

  BlochVector d;
  d.rho31 = -i * atom.omega31() * rho.rho31 + i * b * rho.rho21 - i * a * (rho.rho33 - rho.rho11);
  d.rho32 = -i * atom.omega32() * rho.rho32 + i * a * rho12 - i * b * (rho.rho33 - lower_for_32);
  d.rho21 = -i * atom.omega21() * rho.rho21 + i * b * rho.rho31 - i * a * rho23;
  // i W (rho_ij - conj(rho_ij)) = -2 W Im(rho_ij)
  const double flow31 = 2.0 * a * rho.rho31.imag();
  const double flow32 = 2.0 * b * rho.rho32.imag();
  d.rho11 = -flow31;
  d.rho22 = -flow32;
  d.rho33 = flow31 + flow32;
  return d;
}

namespace {

FieldSample sample_fields(const PulseSpec& pump, const PulseSpec& stokes, double t) {
  return {instantaneous_rabi(pump, t), instantaneous_rabi(stokes, t)};
}

void check_step(const PulseSpec& pump, const PulseSpec& stokes, double h) {
  const double fastest = std::max(pump.omega_carrier, stokes.omega_carrier);
  const double limit = 2.0 * std::numbers::pi / fastest / kStepsPerCarrierPeriod;
  if (std::abs(h) > limit)
    throw StepTooLarge("step " + std::to_string(std::abs(h)) + " fs exceeds " +
                       std::to_string(limit) + " fs (1/20 of the fastest carrier period)");
}

void check_trace(double trace, double t) {
  if (!std::isfinite(trace) || std::abs(trace - 1.0) > kTraceBreachTolerance)
    throw InvariantBreach("trace drifted to " + std::to_string(trace) + " at t = " +
                          std::to_string(t) + " fs");
}

// Visitor is called as visit(k, t, state, fields) for k = 0..n.
template <class Visitor>
BlochVector integrate(const LambdaAtom& atom, const PulseSpec& pump, const PulseSpec& stokes,
                      BlochVector y, double t0, double h, std::size_t n, double t_last,
                      CouplingForm form, Visitor&& visit) {
  check_step(pump, stokes, h);
  auto at = [&](std::size_t k) { return k == n ? t_last : t0 + static_cast<double>(k) * h; };
  auto rhs = [&](const FieldSample& f, const BlochVector& v) {
    return bloch_rhs(atom, f.omega31, f.omega32, v, form);
  };

  FieldSample f_now = sample_fields(pump, stokes, t0);
  visit(std::size_t{0}, t0, y, f_now);
  for (std::size_t k = 0; k < n; ++k) {
    const double t = at(k);
    const double t_next = at(k + 1);
    const double hk = t_next - t;
    const FieldSample f_mid = sample_fields(pump, stokes, t + 0.5 * hk);
    const FieldSample f_next = sample_fields(pump, stokes, t_next);

    const BlochVector k1 = rhs(f_now, y);
    const BlochVector k2 = rhs(f_mid, y + (0.5 * hk) * k1);
    const BlochVector k3 = rhs(f_mid, y + (0.5 * hk) * k2);
    const BlochVector k4 = rhs(f_next, y + hk * k3);
    y += (hk / 6.0) * (k1 + 2.0 * (k2 + k3) + k4);

    check_trace(y.rho11 + y.rho22 + y.rho33, t_next);
    visit(k + 1, t_next, y, f_next);
    f_now = f_next;
  }
  return y;
}

bool stored(std::size_t k, std::size_t n, std::size_t store_every) {
  return k % store_every == 0 || k == n;
}

void prepare(const PulseSpec& pump, const PulseSpec& stokes, const TimeGrid& grid,
             std::size_t store_every) {
  pump.validate();
  stokes.validate();
  grid.validate();
  if (store_every == 0) throw ValidationError("store_every must be >= 1");
}

class ObservableTracker {
 public:
  void add(double t, const DensityState& s) {
    const auto& c = s.components();
    if (count_ == 0 || c.rho33 > obs_.peak_rho33) {
      obs_.peak_rho33 = c.rho33;
      obs_.peak_rho33_time = t;
    }
    const double dev = s.trace() - 1.0;
    const double pmin = std::min({c.rho11, c.rho22, c.rho33});
    const double pur = s.purity();
    if (count_ == 0) {
      obs_.min_trace_deviation = obs_.max_trace_deviation = dev;
      obs_.min_purity = pur;
      obs_.min_population = pmin;
    } else {
      obs_.min_trace_deviation = std::min(obs_.min_trace_deviation, dev);
      obs_.max_trace_deviation = std::max(obs_.max_trace_deviation, dev);
      obs_.min_purity = std::min(obs_.min_purity, pur);
      obs_.min_population = std::min(obs_.min_population, pmin);
    }
    obs_.final_populations = {c.rho11, c.rho22, c.rho33};
    ++count_;
  }

  std::size_t count() const { return count_; }
  const Observables& result() const { return obs_; }

 private:
  Observables obs_;
  std::size_t count_ = 0;
};

}  // namespace

Trajectory propagate(const LambdaAtom& atom, const PulseSpec& pump, const PulseSpec& stokes,
                     const DensityState& rho0, const TimeGrid& grid, std::size_t store_every,
                     CouplingForm form) {
  prepare(pump, stokes, grid, store_every);
  const std::size_t n = grid.steps();
  Trajectory traj;
  const std::size_t expected = n / store_every + 2;
  traj.times.reserve(expected);
  traj.states.reserve(expected);
  traj.fields.reserve(expected);
  integrate(atom, pump, stokes, rho0.components(), grid.t_start, grid.step(), n, grid.t_end, form,
            [&](std::size_t k, double t, const BlochVector& y, const FieldSample& f) {
              if (!stored(k, n, store_every)) return;
              traj.times.push_back(t);
              traj.states.push_back(DensityState::from_integrator(y));
              traj.fields.push_back(f);
            });
  return traj;
}

Trajectory propagate(const Scenario& scenario, std::size_t store_every) {
  return propagate(scenario.atom, scenario.pump, scenario.stokes, ground_state(), scenario.grid(),
                   store_every, scenario.form);
}

DensityState propagate_backward(const LambdaAtom& atom, const PulseSpec& pump,
                                const PulseSpec& stokes, const DensityState& rho_end,
                                const TimeGrid& grid, CouplingForm form) {
  prepare(pump, stokes, grid, 1);
  const BlochVector y =
      integrate(atom, pump, stokes, rho_end.components(), grid.t_end, -grid.step(), grid.steps(),
                grid.t_start, form, [](std::size_t, double, const BlochVector&, const FieldSample&) {});
  return DensityState::from_integrator(y);
}

Observables observables(const Trajectory& traj) {
  if (traj.empty()) throw ValidationError("observables of an empty trajectory");
  ObservableTracker tracker;
  for (std::size_t k = 0; k < traj.size(); ++k) tracker.add(traj.times[k], traj.states[k]);
  return tracker.result();
}

Observables propagate_observables(const LambdaAtom& atom, const PulseSpec& pump,
                                  const PulseSpec& stokes, const DensityState& rho0,
                                  const TimeGrid& grid, CouplingForm form) {
  prepare(pump, stokes, grid, 1);
  ObservableTracker tracker;
  integrate(atom, pump, stokes, rho0.components(), grid.t_start, grid.step(), grid.steps(),
            grid.t_end, form,
            [&](std::size_t, double t, const BlochVector& y, const FieldSample&) {
              tracker.add(t, DensityState::from_integrator(y));
            });
  return tracker.result();
}

Observables propagate_observables(const Scenario& scenario) {
  return propagate_observables(scenario.atom, scenario.pump, scenario.stokes, ground_state(),
                               scenario.grid(), scenario.form);
}

namespace {

Matrix3 hamiltonian(const LambdaAtom& atom, const FieldSample& f) {
  Matrix3 h{};
  h[1][1] = atom.omega21();
  h[2][2] = atom.omega31();
  h[2][0] = h[0][2] = -f.omega31;
  h[2][1] = h[1][2] = -f.omega32;
  return h;
}

// -i H psi
StateVector schrodinger(const Matrix3& h, const StateVector& psi) {
  constexpr cplx minus_i{0.0, -1.0};
  StateVector out{};
  for (int r = 0; r < 3; ++r) {
    cplx acc{};
    for (int c = 0; c < 3; ++c) acc += h[r][c] * psi[c];
    out[r] = minus_i * acc;
  }
  return out;
}

StateVector axpy(const StateVector& y, double s, const StateVector& x) {
  return {y[0] + s * x[0], y[1] + s * x[1], y[2] + s * x[2]};
}

}  // namespace

Trajectory propagate_wavefunction_oracle(const LambdaAtom& atom, const PulseSpec& pump,
                                         const PulseSpec& stokes, const StateVector& psi0,
                                         const TimeGrid& grid, std::size_t store_every) {
  prepare(pump, stokes, grid, store_every);
  DensityState::pure(psi0);  // rejects a non-normalised start vector
  check_step(pump, stokes, grid.step());
  const std::size_t n = grid.steps();

  Trajectory traj;
  StateVector psi = psi0;
  auto record = [&](std::size_t k, double t, const FieldSample& f) {
    if (!stored(k, n, store_every)) return;
    traj.times.push_back(t);
    traj.states.push_back(DensityState::from_integrator(outer_product(psi)));
    traj.fields.push_back(f);
  };

  FieldSample f_now = sample_fields(pump, stokes, grid.time(0));
  traj.times.reserve(n / store_every + 2);
  record(0, grid.time(0), f_now);
  for (std::size_t k = 0; k < n; ++k) {
    const double t = grid.time(k);
    const double t_next = grid.time(k + 1);
    const double h = t_next - t;
    const FieldSample f_mid = sample_fields(pump, stokes, t + 0.5 * h);
    const FieldSample f_next = sample_fields(pump, stokes, t_next);
    const Matrix3 h_now = hamiltonian(atom, f_now);
    const Matrix3 h_mid = hamiltonian(atom, f_mid);
    const Matrix3 h_next = hamiltonian(atom, f_next);

    const StateVector k1 = schrodinger(h_now, psi);
    const StateVector k2 = schrodinger(h_mid, axpy(psi, 0.5 * h, k1));
    const StateVector k3 = schrodinger(h_mid, axpy(psi, 0.5 * h, k2));
    const StateVector k4 = schrodinger(h_next, axpy(psi, h, k3));
    for (int r = 0; r < 3; ++r) psi[r] += h / 6.0 * (k1[r] + 2.0 * k2[r] + 2.0 * k3[r] + k4[r]);

    check_trace(std::norm(psi[0]) + std::norm(psi[1]) + std::norm(psi[2]), t_next);
    record(k + 1, t_next, f_next);
    f_now = f_next;
  }
  return traj;
}

}  // namespace fewcycle
