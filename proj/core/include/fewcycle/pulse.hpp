#pragma once

// Few-cycle pulse shapes: chirped Gaussian and unchirped sinc.
//
// Units throughout are hbar = 1, time in fs, angular frequency in rad/fs.
// A pulse couples its transition through the full oscillating Rabi frequency
//
//   Omega(t) = rabi_peak * f(t) * cos(omega_carrier * t + delta(t))
//
// where f is the envelope and delta the phase (chirp * t^3 for the Gaussian,
// the constant carrier-envelope phase for the sinc).

#include <string_view>

namespace fewcycle {

enum class PulseShape { GaussianChirped, Sinc };

/// tau_p = ratio * tau, with tau the envelope parameter of f(t).
inline constexpr double kGaussianWidthRatio = 1.177;
inline constexpr double kSincWidthRatio = 2.783;

/// Below this |t/tau| the sinc envelope uses its Taylor series.
inline constexpr double kSincSeriesThreshold = 1e-6;

std::string_view to_string(PulseShape shape);
/// Accepts "gaussian" and "sinc". Throws ValidationError otherwise.
PulseShape parse_pulse_shape(std::string_view text);

struct PulseSpec {
  PulseShape shape = PulseShape::GaussianChirped;
  double omega_carrier = 0.0;  // rad/fs
  double rabi_peak = 0.0;      // rad/fs
  double tau_p = 0.0;          // fs
  double chirp = 0.0;          // fs^-3, Gaussian only
  double cep = 0.0;            // rad, sinc only

  /// Throws ValidationError naming the offending field.
  void validate() const;

  /// Envelope parameter tau derived from tau_p.
  double tau() const;

  friend bool operator==(const PulseSpec&, const PulseSpec&) = default;
};

double envelope(const PulseSpec& spec, double t);
double phase(const PulseSpec& spec, double t);
double instantaneous_rabi(const PulseSpec& spec, double t);

/// d/dt [omega_carrier * t + phase(t)].
double instantaneous_frequency(const PulseSpec& spec, double t);

struct Window {
  double start = 0.0;
  double end = 0.0;

  double span() const { return end - start; }
  friend bool operator==(const Window&, const Window&) = default;
};

/// Envelope area  integral of rabi_peak * f(t) dt  over the window, carrier
/// excluded. Composite Simpson starting at step `dt`, refined by halving
/// until the Richardson error estimate is below 1e-7 rad; the extrapolated
/// value is returned. Throws ValidationError for an empty window.
double pulse_area(const PulseSpec& spec, Window window, double dt = 5e-4);

/// Closed form rabi_peak * tau * sqrt(pi) of the infinite-window Gaussian area.
double gaussian_area_closed_form(const PulseSpec& spec);

}  // namespace fewcycle
