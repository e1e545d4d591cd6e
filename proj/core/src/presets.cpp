#include <string>

#include "fewcycle/config.hpp"
#include "fewcycle/errors.hpp"

namespace fewcycle {

namespace {

constexpr std::string_view kGaussianFig2 = R"(# Chirped Gaussian few-cycle pulses, resonant Lambda atom.
[scenario]
name = gaussian_fig2

[atom]
omega31 = 3.0
omega21 = 0.4

[pump]
shape = gaussian
omega_carrier = 3.0
rabi_peak = 0.76
tau_p = 4.70
chirp = 0.016
cep = 0

[stokes]
shape = gaussian
omega_carrier = 2.6
rabi_peak = 0.79
tau_p = 4.70
chirp = 0.016
cep = 0

[grid]
dt = 5e-4
# window defaults to +/- 3 tau_p
store_every = 1
equation = corrected
)";

constexpr std::string_view kSincFig3 = R"(# Unchirped sinc few-cycle pulses, resonant Lambda atom.
[scenario]
name = sinc_fig3

[atom]
omega31 = 3.0
omega21 = 0.4

[pump]
shape = sinc
omega_carrier = 3.0
rabi_peak = 0.76
tau_p = 5.06
cep = 0

[stokes]
shape = sinc
omega_carrier = 2.6
rabi_peak = 0.79
tau_p = 5.06
cep = 0

[grid]
dt = 5e-4
# window defaults to +/- 20 fs
store_every = 1
equation = corrected
)";

std::string with_sweep(std::string_view base, std::string_view name, std::string_view sweep) {
  std::string text(base);
  const auto at = text.find("name = ");
  const auto eol = text.find('\n', at);
  text.replace(at, eol - at, "name = " + std::string(name));
  text += '\n';
  text += sweep;
  return text;
}

}  // namespace

const std::vector<Preset>& presets() {
  static const std::vector<Preset> all = [] {
    std::vector<Preset> v;
    v.push_back({"gaussian_fig2", "chirped Gaussian pulses, population transfer |1> -> |2>",
                 std::string(kGaussianFig2)});
    v.push_back({"sinc_fig3", "unchirped sinc pulses, population transfer |1> -> |2>", std::string(kSincFig3)});
    auto add = [&](std::string_view name, std::string_view description, std::string_view base,
                   std::string_view sweep) {
      v.push_back({std::string(name), std::string(description), with_sweep(base, name, sweep)});
    };
    add("width_gaussian", "final rho22 vs tau_p in [4, 6] fs, Gaussian", kGaussianFig2,
        "[sweep]\nobservable = final_rho22\naxis1 = tau_p_both 4.0 6.0 21\n");
    add("width_sinc", "final rho22 vs tau_p in [4.94, 5.17] fs, sinc", kSincFig3,
        "[sweep]\nobservable = final_rho22\naxis1 = tau_p_both 4.94 5.17 24\n");
    add("chirp_gaussian", "final rho22 vs chirp in [0.012, 0.020] fs^-3, Gaussian",
        kGaussianFig2, "[sweep]\nobservable = final_rho22\naxis1 = chirp_both 0.012 0.020 17\n");
    add("cep_sinc", "final rho22 over (phi1, phi2) in [0, 2 pi]^2, sinc", kSincFig3,
        "[sweep]\nobservable = final_rho22\n"
        "axis1 = cep_pump 0 6.283185307179586 9\n"
        "axis2 = cep_stokes 0 6.283185307179586 9\n");
    add("rabi_map_gaussian", "final rho22 over (Omega31, Omega32), Gaussian", kGaussianFig2,
        "[sweep]\nobservable = final_rho22\n"
        "axis1 = rabi_pump 0.1 3.0 40\naxis2 = rabi_stokes 0.1 3.0 40\n");
    add("rabi_map_sinc", "final rho22 over (Omega31, Omega32), sinc", kSincFig3,
        "[sweep]\nobservable = final_rho22\n"
        "axis1 = rabi_pump 0.1 3.0 40\naxis2 = rabi_stokes 0.1 3.0 40\n");
    return v;
  }();
  return all;
}

ScenarioConfig load_preset(std::string_view name) {
  for (const auto& p : presets())
    if (p.name == name) return parse_config(p.text);
  throw ValidationError("unknown preset '" + std::string(name) + "'");
}

}  // namespace fewcycle
