#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "fewcycle/config.hpp"

namespace fs = std::filesystem;

namespace {

struct Result {
  int code = -1;
  std::string out;
};

Result cli(const std::string& args) {
  const std::string cmd = std::string(FEWCYCLE_CLI_PATH) + " " + args + " 2>&1";
  Result r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  while (std::fgets(buf, sizeof buf, pipe)) r.out += buf;
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

fs::path tmp(const std::string& name) {
  const fs::path dir = fs::path(FEWCYCLE_TEST_TMP);
  fs::create_directories(dir);
  return dir / name;
}

fs::path write(const std::string& name, const std::string& text) {
  const fs::path p = tmp(name);
  std::ofstream(p) << text;
  return p;
}

std::size_t line_count(const fs::path& p) {
  std::ifstream in(p);
  std::size_t n = 0;
  for (std::string l; std::getline(in, l);) ++n;
  return n;
}

std::string gaussian_text() {
  for (const auto& p : fewcycle::presets())
    if (p.name == "gaussian_fig2") return p.text;
  return {};
}

}  // namespace

TEST_CASE("presets") {
  const Result r = cli("presets");
  CHECK(r.code == 0);
  CHECK(r.out.find("gaussian_fig2") != std::string::npos);
  CHECK(r.out.find("sinc_fig3") != std::string::npos);

  const Result show = cli("presets --show sinc_fig3");
  CHECK(show.code == 0);
  CHECK(fewcycle::parse_config(show.out) == fewcycle::load_preset("sinc_fig3"));
  CHECK(cli("presets --show nope").code == 1);
}

TEST_CASE("run writes trajectory and summary") {
  const fs::path out = tmp("run_gauss");
  fs::remove_all(out);
  const Result r = cli("run --preset gaussian_fig2 --store-every 100 --out " + out.string());
  CHECK(r.code == 0);
  CHECK(r.out.find("3.49 π") != std::string::npos);
  CHECK(fs::exists(out / "trajectory.csv"));
  CHECK(fs::exists(out / "summary.txt"));
  CHECK(line_count(out / "trajectory.csv") == 56400 / 100 + 2);
}

TEST_CASE("flags override the configuration") {
  const fs::path out = tmp("run_window");
  const Result r = cli("run --preset sinc_fig3 --window -6 6 --dt 1e-3 --store-every 1000 --out " +
                       out.string());
  CHECK(r.code == 0);
  CHECK(r.out.find("window [-6, 6] fs, dt 0.001 fs") != std::string::npos);
  CHECK(r.out.find("window sensitivity") != std::string::npos);

  const Result v = cli("run --preset gaussian_fig2 --verbatim-eq1 --store-every 1000 --out " +
                       tmp("run_verbatim").string());
  CHECK(v.code == 0);
  CHECK(v.out.find("verbatim") != std::string::npos);
}

TEST_CASE("exit code 1 on input errors") {
  CHECK(cli("run --preset no_such_preset").code == 1);
  CHECK(cli("run").code == 1);
  CHECK(cli("bogus").code == 1);
  std::string bad = gaussian_text();
  bad.replace(bad.find("tau_p = 4.70"), 12, "tau_p = -1");
  const Result r = cli("run --config " + write("bad.cfg", bad).string());
  CHECK(r.code == 1);
  CHECK(r.out.find("tau_p") != std::string::npos);
  CHECK(cli("run --config " + write("unknown.cfg", gaussian_text() + "[grid2]\n").string()).code == 1);
  CHECK(cli("sweep --preset gaussian_fig2").code == 1);  // no [sweep] section
}

TEST_CASE("exit code 2 on numerical breaches") {
  CHECK(cli("run --preset gaussian_fig2 --dt 0.5").code == 2);
  const std::string text = gaussian_text() +
                           "\n[sweep]\nobservable = final_rho22\naxis1 = rabi_pump 0.76 1e300 2\n"
                           "[output]\ndir = " + tmp("sweep_bad").string() + "\n";
  const Result r = cli("sweep --config " + write("sweep_bad.cfg", text).string());
  CHECK(r.code == 2);
  CHECK(r.out.find("flagged 1") != std::string::npos);
}

TEST_CASE("sweep writes long-format CSV") {
  const std::string text = gaussian_text() +
                           "\n[sweep]\nobservable = final_rho22\n"
                           "axis1 = rabi_pump 0.7 0.8 2\naxis2 = rabi_stokes 0.7 0.9 3\n";
  const fs::path out = tmp("sweep_ok");
  const Result r = cli("sweep --workers 2 --dt 2e-3 --config " + write("sweep.cfg", text).string() +
                       " --out " + out.string());
  CHECK(r.code == 0);
  CHECK(line_count(out / "sweep.csv") == 7);
}

TEST_CASE("check self-test passes on the reference presets") {
  const Result r = cli("check --preset gaussian_fig2");
  CHECK(r.code == 0);
  CHECK(r.out.find("FAIL") == std::string::npos);
  CHECK(cli("check --preset sinc_fig3").code == 0);
}
