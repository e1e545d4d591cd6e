#include "fewcycle/pulse.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "fewcycle/errors.hpp"

namespace fewcycle {

std::string_view to_string(PulseShape shape) {
  switch (shape) {
    case PulseShape::GaussianChirped:
      return "gaussian";
    case PulseShape::Sinc:
      return "sinc";
  }
  return "unknown";
}

PulseShape parse_pulse_shape(std::string_view text) {
  if (text == "gaussian") return PulseShape::GaussianChirped;
  if (text == "sinc") return PulseShape::Sinc;
  throw ValidationError("unknown pulse shape '" + std::string(text) +
                        "' (expected gaussian or sinc)");
}

void PulseSpec::validate() const {
  if (!(tau_p > 0.0) || !std::isfinite(tau_p))
    throw ValidationError("tau_p must be > 0, got " + std::to_string(tau_p));
  if (!(rabi_peak >= 0.0) || !std::isfinite(rabi_peak))
    throw ValidationError("rabi_peak must be >= 0, got " + std::to_string(rabi_peak));
  if (!(omega_carrier > 0.0) || !std::isfinite(omega_carrier))
    throw ValidationError("omega_carrier must be > 0, got " +
                          std::to_string(omega_carrier));
  if (!std::isfinite(chirp)) throw ValidationError("chirp must be finite");
  if (!std::isfinite(cep)) throw ValidationError("cep must be finite");
}

double PulseSpec::tau() const {
  return shape == PulseShape::GaussianChirped ? tau_p / kGaussianWidthRatio
                                              : tau_p / kSincWidthRatio;
}

double envelope(const PulseSpec& spec, double t) {
  const double x = t / spec.tau();
  if (spec.shape == PulseShape::GaussianChirped) return std::exp(-x * x);
  if (std::abs(x) < kSincSeriesThreshold) {
    const double x2 = x * x;
    return 1.0 - x2 / 6.0 * (1.0 - x2 / 20.0);
  }
  return std::sin(x) / x;
}

double phase(const PulseSpec& spec, double t) {
  if (spec.shape == PulseShape::GaussianChirped) return spec.chirp * t * t * t;
  return spec.cep;
}

double instantaneous_rabi(const PulseSpec& spec, double t) {
  return spec.rabi_peak * envelope(spec, t) *
         std::cos(spec.omega_carrier * t + phase(spec, t));
}

double instantaneous_frequency(const PulseSpec& spec, double t) {
  if (spec.shape == PulseShape::GaussianChirped)
    return spec.omega_carrier + 3.0 * spec.chirp * t * t;
  return spec.omega_carrier;
}

namespace {

struct SimpsonPair {
  double fine;    // step h
  double coarse;  // step 2h
};

// n must be a multiple of 4.
SimpsonPair simpson_pair(const std::vector<double>& f, double h) {
  const std::size_t n = f.size() - 1;
  double fine = f.front() + f.back();
  for (std::size_t i = 1; i < n; ++i) fine += (i % 2 == 1 ? 4.0 : 2.0) * f[i];
  double coarse = f.front() + f.back();
  for (std::size_t i = 2; i < n; i += 2) coarse += ((i / 2) % 2 == 1 ? 4.0 : 2.0) * f[i];
  return {fine * h / 3.0, coarse * 2.0 * h / 3.0};
}

}  // namespace

double pulse_area(const PulseSpec& spec, Window window, double dt) {
  if (!(window.start < window.end))
    throw ValidationError("pulse_area window must satisfy start < end");
  if (!(dt > 0.0)) throw ValidationError("pulse_area step must be > 0");
  if (spec.rabi_peak == 0.0) return 0.0;

  constexpr double kTolerance = 1e-7;
  constexpr std::size_t kMaxIntervals = std::size_t{1} << 26;

  std::size_t n = static_cast<std::size_t>(std::ceil(window.span() / dt - 1e-9));
  n = std::max<std::size_t>(4, (n + 3) / 4 * 4);

  for (;;) {
    const double h = window.span() / static_cast<double>(n);
    std::vector<double> f(n + 1);
    for (std::size_t i = 0; i <= n; ++i)
      f[i] = envelope(spec, window.start + static_cast<double>(i) * h);
    const auto [fine, coarse] = simpson_pair(f, h);
    const double error = std::abs(fine - coarse) / 15.0 * spec.rabi_peak;
    if (error <= kTolerance || n >= kMaxIntervals)
      return spec.rabi_peak * (16.0 * fine - coarse) / 15.0;
    n *= 2;
  }
}

double gaussian_area_closed_form(const PulseSpec& spec) {
  return spec.rabi_peak * spec.tau() * std::sqrt(std::numbers::pi);
}

}  // namespace fewcycle
