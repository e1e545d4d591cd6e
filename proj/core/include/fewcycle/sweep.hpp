#pragma once

// Batched propagations over 1-D and 2-D parameter grids.
//
// Cells are independent; run_sweep splits the row-major cell range into
// contiguous static blocks, one per worker, and writes each result into its
// own slot, so the output does not depend on the worker count.

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "fewcycle/bloch.hpp"

namespace fewcycle {

enum class SweepParameter {
  TauPBoth,    // tau_p of both pulses
  ChirpBoth,   // chirp of both pulses
  CepBoth,     // cep of both pulses
  CepPump,     // phi1 alone; with CepStokes forms the independent CEP pair
  CepStokes,
  RabiPump,    // Omega31 peak; with RabiStokes forms the Rabi pair
  RabiStokes,
};

enum class SweepObservable { FinalRho22, FinalRho11, FinalRho33, PeakRho33 };

std::string_view to_string(SweepParameter p);
std::string_view to_string(SweepObservable o);
SweepParameter parse_sweep_parameter(std::string_view text);
SweepObservable parse_sweep_observable(std::string_view text);

struct SweepAxis {
  SweepParameter parameter = SweepParameter::TauPBoth;
  double start = 0.0;
  double end = 0.0;
  std::size_t count = 1;

  /// start + i (end - start) / (count - 1); count == 1 yields start.
  double value(std::size_t i) const;
  std::vector<double> values() const;

  friend bool operator==(const SweepAxis&, const SweepAxis&) = default;
};

struct SweepSpec {
  Scenario base;
  std::vector<SweepAxis> axes;  // one or two
  SweepObservable observable = SweepObservable::FinalRho22;

  /// Throws ValidationError: axis count, ranges, duplicate parameters, and
  /// pulse invariants at both ends of every axis.
  void validate() const;
  std::size_t cell_count() const;

  /// Base scenario with the axis values of cell (i, j) applied.
  Scenario cell_scenario(std::size_t i, std::size_t j = 0) const;

  friend bool operator==(const SweepSpec&, const SweepSpec&) = default;
};

struct SweepResult {
  std::vector<SweepAxis> axes;
  SweepObservable observable = SweepObservable::FinalRho22;
  std::vector<double> values;      // row-major, axis 0 slowest
  std::vector<bool> converged;     // false: propagation error or value out of range
  std::vector<std::string> errors; // message for non-converged cells

  std::size_t rows() const { return axes.empty() ? 0 : axes[0].count; }
  std::size_t cols() const { return axes.size() > 1 ? axes[1].count : 1; }
  double at(std::size_t i, std::size_t j = 0) const { return values[i * cols() + j]; }
  bool all_converged() const;
};

/// Observable of a single scenario; the same code path every sweep cell uses.
double evaluate_observable(const Scenario& scenario, SweepObservable observable);

/// Runs every cell; failed cells hold NaN and converged = false.
/// workers == 0 means std::thread::hardware_concurrency().
SweepResult run_sweep(const SweepSpec& spec, std::size_t workers = 1);

/// Chirped-Gaussian scenario with the reference parameter set.
Scenario gaussian_reference_scenario();
/// Unchirped sinc scenario with the reference parameter set.
Scenario sinc_reference_scenario();

SweepSpec width_sweep_defaults(PulseShape shape);
SweepSpec chirp_sweep_defaults();
SweepSpec cep_sweep_defaults();
SweepSpec rabi_map_defaults(PulseShape shape);

}  // namespace fewcycle
