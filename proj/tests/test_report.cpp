#include <doctest.h>

#include <charconv>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include "fewcycle/config.hpp"
#include "fewcycle/errors.hpp"
#include "fewcycle/report.hpp"

using namespace fewcycle;

namespace {

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

std::vector<double> fields(const std::string& row) {
  std::vector<double> out;
  std::size_t pos = 0;
  while (pos <= row.size()) {
    auto comma = row.find(',', pos);
    if (comma == std::string::npos) comma = row.size();
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(row.data() + pos, row.data() + comma, v);
    REQUIRE(ec == std::errc());
    REQUIRE(ptr == row.data() + comma);
    out.push_back(v);
    pos = comma + 1;
  }
  return out;
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

Scenario zero_field() {
  Scenario s = gaussian_reference_scenario();
  s.pump.rabi_peak = s.stokes.rabi_peak = 0.0;
  return s;
}

}  // namespace

TEST_CASE("trajectory CSV: ground-state single row") {
  Trajectory t;
  t.times = {-2.5};
  t.states = {ground_state()};
  t.fields = {FieldSample{0.25, -0.5}};
  std::ostringstream out;
  emit_trajectory_csv(t, out);
  const auto ls = lines(out.str());
  REQUIRE(ls.size() == 2);
  CHECK(ls[0] == kTrajectoryCsvHeader);
  CHECK(ls[1] == "-2.5,1,0,0,0,0,0,0,0,0,0.25,-0.5");

  std::ostringstream empty;
  CHECK_THROWS_AS(emit_trajectory_csv(Trajectory{}, empty), ValidationError);
}

TEST_CASE("trajectory CSV of the reference Gaussian run") {
  const Trajectory traj = propagate(gaussian_reference_scenario(), 250);
  std::ostringstream out;
  emit_trajectory_csv(traj, out);
  const auto ls = lines(out.str());
  REQUIRE(ls.size() == traj.size() + 1);
  for (std::size_t r = 1; r < ls.size(); ++r) {
    const auto v = fields(ls[r]);
    REQUIRE(v.size() == 12);
    // exact re-parse of every stored value
    const auto& c = traj.states[r - 1].components();
    CHECK(v[0] == traj.times[r - 1]);
    CHECK(v[2] == c.rho22);
    CHECK(v[7] == c.rho31.imag());
    CHECK(v[11] == traj.fields[r - 1].omega32);
  }
  CHECK(std::abs(fields(ls.back())[2] - 0.9994) <= 0.01);
}

TEST_CASE("sweep CSV layouts") {
  SweepResult one;
  one.axes = {{SweepParameter::ChirpBoth, 0.016, 0.016, 1}};
  one.values = {0.9994};
  one.converged = {true};
  one.errors = {""};
  std::ostringstream a;
  emit_sweep_csv(one, a);
  CHECK(lines(a.str()) == std::vector<std::string>{"axis_value,observable", "0.016,0.9994"});

  SweepResult grid;
  grid.axes = cep_sweep_defaults().axes;
  grid.values.resize(81);
  for (std::size_t k = 0; k < 81; ++k) grid.values[k] = static_cast<double>(k) / 100.0;
  grid.converged.assign(81, true);
  grid.converged[10] = false;
  grid.errors.resize(81);
  std::ostringstream b;
  emit_sweep_csv(grid, b);
  const auto ls = lines(b.str());
  REQUIRE(ls.size() == 82);
  CHECK(ls[0] == "axis1,axis2,observable,converged");
  // row-major: second row is (axis1[0], axis2[1])
  const auto row = fields(ls[2]);
  CHECK(row[0] == grid.axes[0].value(0));
  CHECK(row[1] == grid.axes[1].value(1));
  CHECK(row[2] == 0.01);
  CHECK(fields(ls[11])[3] == 0.0);
  CHECK(fields(ls[12])[3] == 1.0);
}

TEST_CASE("IO errors name the path") {
  Trajectory t;
  t.times = {0.0};
  t.states = {ground_state()};
  t.fields = {FieldSample{}};
  try {
    emit_trajectory_csv(t, std::filesystem::path("/nonexistent-dir/traj.csv"));
    FAIL("expected IoError");
  } catch (const IoError& e) {
    CHECK(contains(e.what(), "/nonexistent-dir/traj.csv"));
  }
}

TEST_CASE("run summary") {
  SUBCASE("reference Gaussian reports the total area") {
    const Scenario s = gaussian_reference_scenario();
    const std::string text = run_summary("gaussian_fig2", s, propagate(s, 100));
    CHECK(contains(text, "= 3.49 π"));
    CHECK(contains(text, "final populations 0.000/0.999/0.000"));
    CHECK(contains(text, "detunings"));
    CHECK_FALSE(contains(text, "window sensitivity"));
  }
  SUBCASE("zero field") {
    const Scenario s = zero_field();
    CHECK(contains(run_summary("zero", s, propagate(s, 1000)),
                   "final populations 1.000/0.000/0.000"));
  }
  SUBCASE("sinc run reports peak rho33 and window sensitivity") {
    const Scenario s = sinc_reference_scenario();
    const Trajectory traj = propagate(s, 1);
    const auto sens = window_sensitivity(s);
    CHECK(sens.doubled == Window{-40.0, 40.0});
    const std::string text = run_summary("sinc_fig3", s, traj, sens);
    char expected[64];
    std::snprintf(expected, sizeof expected, "peak rho33 = %.4f", observables(traj).peak_rho33);
    CHECK(contains(text, expected));
    CHECK(contains(text, "window sensitivity"));
  }
}

TEST_CASE("sweep summary lists flagged cells") {
  SweepResult r;
  r.axes = {{SweepParameter::RabiPump, 0.5, 1.0, 2}};
  r.values = {0.9, std::nan("")};
  r.converged = {true, false};
  r.errors = {"", "trace drifted"};
  const std::string text = sweep_summary("demo", r);
  CHECK(contains(text, "flagged 1"));
  CHECK(contains(text, "trace drifted"));
}
