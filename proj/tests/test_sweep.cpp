#include <doctest.h>

#include <cmath>
#include <cstring>
#include <numbers>

#include "fewcycle/errors.hpp"
#include "fewcycle/sweep.hpp"

using namespace fewcycle;

TEST_CASE("axis values") {
  const SweepAxis a{SweepParameter::TauPBoth, 4.0, 6.0, 21};
  CHECK(a.value(0) == 4.0);
  CHECK(a.value(20) == 6.0);
  CHECK(a.value(10) == doctest::Approx(5.0).epsilon(1e-15));
  CHECK(SweepAxis{SweepParameter::TauPBoth, 4.7, 4.7, 1}.values() == std::vector<double>{4.7});
}

TEST_CASE("names round-trip") {
  for (auto p : {SweepParameter::TauPBoth, SweepParameter::ChirpBoth, SweepParameter::CepBoth,
                 SweepParameter::CepPump, SweepParameter::CepStokes, SweepParameter::RabiPump,
                 SweepParameter::RabiStokes})
    CHECK(parse_sweep_parameter(to_string(p)) == p);
  for (auto o : {SweepObservable::FinalRho22, SweepObservable::FinalRho11,
                 SweepObservable::FinalRho33, SweepObservable::PeakRho33})
    CHECK(parse_sweep_observable(to_string(o)) == o);
  CHECK_THROWS_AS(parse_sweep_parameter("delay"), ValidationError);
}

TEST_CASE("spec validation") {
  SweepSpec s = chirp_sweep_defaults();
  CHECK_NOTHROW(s.validate());
  s.axes.clear();
  CHECK_THROWS_AS(s.validate(), ValidationError);

  s = width_sweep_defaults(PulseShape::GaussianChirped);
  s.axes[0].start = -1.0;  // tau_p <= 0 at the first cell
  CHECK_THROWS_AS(s.validate(), ValidationError);

  s = width_sweep_defaults(PulseShape::GaussianChirped);
  s.axes[0].count = 0;
  CHECK_THROWS_AS(s.validate(), ValidationError);

  s = width_sweep_defaults(PulseShape::GaussianChirped);
  std::swap(s.axes[0].start, s.axes[0].end);
  CHECK_THROWS_AS(s.validate(), ValidationError);

  s = cep_sweep_defaults();
  s.axes[1].parameter = SweepParameter::CepBoth;
  CHECK_THROWS_AS(s.validate(), ValidationError);

  s = rabi_map_defaults(PulseShape::GaussianChirped);
  s.axes.push_back(s.axes[0]);
  CHECK_THROWS_AS(s.validate(), ValidationError);
}

TEST_CASE("cell scenarios apply axis values") {
  const SweepSpec s = cep_sweep_defaults();
  const Scenario c = s.cell_scenario(2, 5);
  CHECK(c.pump.cep == s.axes[0].value(2));
  CHECK(c.stokes.cep == s.axes[1].value(5));
  CHECK(c.pump.tau_p == 5.06);

  const Scenario r = rabi_map_defaults(PulseShape::Sinc).cell_scenario(3, 7);
  CHECK(r.pump.rabi_peak == rabi_map_defaults(PulseShape::Sinc).axes[0].value(3));
  CHECK(r.stokes.rabi_peak == rabi_map_defaults(PulseShape::Sinc).axes[1].value(7));
}

TEST_CASE("degenerate sweep equals a standalone propagation") {
  SweepSpec s{gaussian_reference_scenario(), {{SweepParameter::ChirpBoth, 0.016, 0.016, 1}},
              SweepObservable::FinalRho22};
  const SweepResult r = run_sweep(s, 1);
  REQUIRE(r.values.size() == 1);
  CHECK(r.converged[0]);
  CHECK(r.values[0] ==
        propagate_observables(gaussian_reference_scenario()).final_populations[1]);

  s.observable = SweepObservable::PeakRho33;
  CHECK(run_sweep(s, 1).values[0] ==
        propagate_observables(gaussian_reference_scenario()).peak_rho33);
}

TEST_CASE("determinism across worker counts") {
  SweepSpec s = rabi_map_defaults(PulseShape::GaussianChirped);
  s.axes[0] = {SweepParameter::RabiPump, 0.5, 1.0, 3};
  s.axes[1] = {SweepParameter::RabiStokes, 0.5, 1.0, 4};
  s.base.dt = 2e-3;
  const SweepResult one = run_sweep(s, 1);
  for (std::size_t w : {2u, 3u, 5u, 64u}) {
    const SweepResult many = run_sweep(s, w);
    REQUIRE(many.values.size() == one.values.size());
    for (std::size_t k = 0; k < one.values.size(); ++k)
      CHECK(std::memcmp(&many.values[k], &one.values[k], sizeof(double)) == 0);
  }
}

TEST_CASE("monotone refinement: shared coordinates agree exactly") {
  SweepSpec coarse = chirp_sweep_defaults();
  coarse.base.dt = 2e-3;
  coarse.axes[0].count = 5;
  SweepSpec fine = coarse;
  fine.axes[0].count = 9;
  const SweepResult a = run_sweep(coarse, 2);
  const SweepResult b = run_sweep(fine, 3);
  for (std::size_t i = 0; i < 5; ++i) {
    CHECK(coarse.axes[0].value(i) == fine.axes[0].value(2 * i));
    CHECK(a.at(i) == b.at(2 * i));
  }
}

TEST_CASE("failing cells are flagged without aborting") {
  SweepSpec s{gaussian_reference_scenario(), {{SweepParameter::RabiPump, 0.76, 1e300, 2}},
              SweepObservable::FinalRho22};
  const SweepResult r = run_sweep(s, 2);
  CHECK(r.converged[0]);
  CHECK_FALSE(r.converged[1]);
  CHECK(std::isnan(r.values[1]));
  CHECK_FALSE(r.errors[1].empty());
  CHECK_FALSE(r.all_converged());
}

TEST_CASE("figure defaults") {
  CHECK(chirp_sweep_defaults().axes[0].start == 0.012);
  CHECK(chirp_sweep_defaults().axes[0].end == 0.020);
  const auto ws = width_sweep_defaults(PulseShape::Sinc);
  CHECK(ws.axes[0].start == 4.94);
  CHECK(ws.axes[0].end == 5.17);
  CHECK(ws.base.pump.shape == PulseShape::Sinc);
  const auto wg = width_sweep_defaults(PulseShape::GaussianChirped);
  CHECK(wg.axes[0].start == 4.0);
  CHECK(wg.axes[0].end == 6.0);
  const auto rm = rabi_map_defaults(PulseShape::GaussianChirped);
  REQUIRE(rm.axes.size() == 2);
  for (const auto& a : rm.axes) {
    CHECK(a.start <= 0.70);
    CHECK(a.end >= 0.92);
    CHECK(a.end >= 2.40);
  }
  const auto cep = cep_sweep_defaults();
  CHECK(cep.axes[0].count * cep.axes[1].count == 81);
  CHECK(cep.axes[0].end == 2.0 * std::numbers::pi);
}

TEST_CASE("Gaussian width plateau") {
  SweepSpec s = width_sweep_defaults(PulseShape::GaussianChirped);
  const SweepResult r = run_sweep(s, 4);
  REQUIRE(r.all_converged());
  for (double v : r.values) CHECK(v >= 0.90);
}
