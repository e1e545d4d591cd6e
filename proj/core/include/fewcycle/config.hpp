#pragma once

// Scenario configuration files.
//
// Flat sections of `key = value` lines; `#` starts a comment. Sections:
//
//   [scenario]  name
//   [atom]      omega31, omega21                                  (required)
//   [pump]      shape, omega_carrier, rabi_peak, tau_p, chirp, cep
//   [stokes]    same keys as [pump]; chirp and cep default to 0
//   [grid]      dt, t_start, t_end (both or neither), store_every, equation
//   [sweep]     observable, axis1, axis2   axis = "<parameter> <start> <end> <count>"
//   [output]    dir, trajectory, sweep, summary
//
// Unknown sections or keys are errors.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fewcycle/bloch.hpp"
#include "fewcycle/sweep.hpp"

namespace fewcycle {

struct SweepSection {
  std::vector<SweepAxis> axes;
  SweepObservable observable = SweepObservable::FinalRho22;

  friend bool operator==(const SweepSection&, const SweepSection&) = default;
};

struct OutputPaths {
  std::string dir = ".";
  std::string trajectory = "trajectory.csv";
  std::string sweep = "sweep.csv";
  std::string summary = "summary.txt";

  friend bool operator==(const OutputPaths&, const OutputPaths&) = default;
};

struct ScenarioConfig {
  std::string name = "custom";
  Scenario scenario;
  std::size_t store_every = 1;
  std::optional<SweepSection> sweep;
  OutputPaths output;

  SweepSpec sweep_spec() const;  // throws ValidationError without a [sweep] section

  friend bool operator==(const ScenarioConfig&, const ScenarioConfig&) = default;
};

/// Throws ParseError (with line number), UnknownKeyError, or ValidationError.
ScenarioConfig parse_config(std::string_view text);

/// Inverse of parse_config; numbers are written in shortest round-trip form.
std::string emit_config(const ScenarioConfig& config);

/// Shortest decimal text that parses back to exactly `v`.
std::string format_double(double v);

struct Preset {
  std::string name;
  std::string description;
  std::string text;
};

const std::vector<Preset>& presets();
/// Throws ValidationError for an unknown name.
ScenarioConfig load_preset(std::string_view name);

}  // namespace fewcycle
