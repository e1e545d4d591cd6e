#pragma once

// Non-RWA optical Bloch equations for the Lambda atom and their fixed-step
// RK4 propagation.
//
// With H = diag(0, w21, w31) - W31(t)(|3><1| + h.c.) - W32(t)(|3><2| + h.c.)
// the equations of motion are rho' = -i[H, rho]. The rho32 equation carries
// the population difference (rho33 - rho22); CouplingForm::Verbatim swaps it
// for (rho33 - rho11), which does not conserve purity and exists only for
// comparison runs.

#include <array>
#include <cstddef>
#include <optional>
#include <vector>

#include "fewcycle/lambda_system.hpp"
#include "fewcycle/pulse.hpp"

namespace fewcycle {

enum class CouplingForm { Corrected, Verbatim };

inline constexpr double kDefaultDt = 5e-4;                 // fs
inline constexpr double kGaussianWindowWidths = 3.0;       // window = +/- 3 tau_p
inline constexpr double kSincDefaultHalfWindow = 20.0;     // fs
inline constexpr std::size_t kMaxSteps = 100'000'000;
inline constexpr double kStepsPerCarrierPeriod = 20.0;     // StepTooLarge threshold
inline constexpr double kTraceBreachTolerance = 1e-6;

/// Fixed-step grid. dt is the requested step; the step actually taken is
/// span / ceil(span / dt), so the last step lands exactly on t_end.
struct TimeGrid {
  double t_start = 0.0;
  double t_end = 0.0;
  double dt = kDefaultDt;

  void validate() const;
  std::size_t steps() const;
  double step() const;
  double time(std::size_t k) const;

  friend bool operator==(const TimeGrid&, const TimeGrid&) = default;
};

struct FieldSample {
  double omega31 = 0.0;  // rad/fs
  double omega32 = 0.0;
};

struct Trajectory {
  std::vector<double> times;
  std::vector<DensityState> states;
  std::vector<FieldSample> fields;

  std::size_t size() const { return times.size(); }
  bool empty() const { return times.empty(); }
};

/// Gaussian: +/- 3 max(tau_p). Sinc: +/- 20 fs (the 1/t tail keeps driving
/// the transfer well outside the central lobe).
Window default_window(const PulseSpec& pump, const PulseSpec& stokes);

/// Atom, both pulses and the integration grid. Pulses share one time origin.
struct Scenario {
  LambdaAtom atom{3.0, 0.4};
  PulseSpec pump;
  PulseSpec stokes;
  double dt = kDefaultDt;
  std::optional<Window> window;  // empty: default_window(pump, stokes)
  CouplingForm form = CouplingForm::Corrected;

  void validate() const;
  Window resolved_window() const;
  TimeGrid grid() const;

  friend bool operator==(const Scenario&, const Scenario&) = default;
};

BlochVector bloch_rhs(const LambdaAtom& atom, double omega31_t, double omega32_t,
                      const BlochVector& rho, CouplingForm form = CouplingForm::Corrected);

/// Classic RK4 over the grid. Stores step 0, every `store_every`-th step and
/// the final step. Throws StepTooLarge when the step exceeds 1/20 of the
/// fastest carrier period, InvariantBreach when |Tr rho - 1| > 1e-6.
Trajectory propagate(const LambdaAtom& atom, const PulseSpec& pump, const PulseSpec& stokes,
                     const DensityState& rho0, const TimeGrid& grid, std::size_t store_every = 1,
                     CouplingForm form = CouplingForm::Corrected);

Trajectory propagate(const Scenario& scenario, std::size_t store_every = 1);

/// Integrates from grid.t_end back to grid.t_start (negative step) and
/// returns the state reached at t_start.
DensityState propagate_backward(const LambdaAtom& atom, const PulseSpec& pump,
                                const PulseSpec& stokes, const DensityState& rho_end,
                                const TimeGrid& grid, CouplingForm form = CouplingForm::Corrected);

/// Independent route: RK4 on i psi' = H(t) psi with the full 3x3
/// Hamiltonian, reported as |psi><psi|.
Trajectory propagate_wavefunction_oracle(const LambdaAtom& atom, const PulseSpec& pump,
                                         const PulseSpec& stokes, const StateVector& psi0,
                                         const TimeGrid& grid, std::size_t store_every = 1);

struct Observables {
  std::array<double, 3> final_populations{};
  double peak_rho33 = 0.0;
  double peak_rho33_time = 0.0;
  double min_trace_deviation = 0.0;  // min over steps of Tr rho - 1
  double max_trace_deviation = 0.0;
  double min_purity = 1.0;
  double min_population = 0.0;

  friend bool operator==(const Observables&, const Observables&) = default;
};

/// Throws ValidationError on an empty trajectory.
Observables observables(const Trajectory& traj);

/// Same quantities as observables(propagate(..., 1)) without storing states.
Observables propagate_observables(const LambdaAtom& atom, const PulseSpec& pump,
                                  const PulseSpec& stokes, const DensityState& rho0,
                                  const TimeGrid& grid,
                                  CouplingForm form = CouplingForm::Corrected);

Observables propagate_observables(const Scenario& scenario);

}  // namespace fewcycle
