// Black-box checks of the suite-runner binary: exit codes, report files,
// config handling, and report determinism. The binary path is injected at
// build time.

#include <nlohmann/json.hpp>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

int failures = 0;

void expect(bool ok, const std::string& what) {
  std::printf("%-52s %s\n", what.c_str(), ok ? "ok" : "FAILED");
  if (!ok) ++failures;
}

int run(const std::string& args) {
  const std::string cmd = std::string(HIGAUGE_CLI_PATH) + " " + args;
  const int status = std::system(cmd.c_str());
  if (status < 0) return -1;
  return WEXITSTATUS(status);
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

nlohmann::json load_report(const std::string& path) {
  return nlohmann::json::parse(slurp(path));
}

void strip_timings(nlohmann::json& report) {
  for (auto& s : report["suites"]) s.erase("wall_ms");
}

}  // namespace

int main() {
  const std::string tmp = "cli_test_artifacts";
  std::system(("mkdir -p " + tmp).c_str());

  expect(run("--suite peiffer --suite extension --trials 5 > /dev/null") == 0,
         "passing run exits 0");
  expect(run("--suite peiffer --trials 5 --tol.peiffer 0 > /dev/null") == 1,
         "zero tolerance fails on floating noise, exit 1");
  expect(run("--suite no_such_suite --trials 5 2> /dev/null") == 2,
         "unknown suite exits 2");
  expect(run("--tol.no_such_suite 1e-3 --trials 5 2> /dev/null") == 2,
         "unknown tolerance name exits 2");
  expect(run("--trials -3 2> /dev/null") == 2, "invalid flag value exits 2");
  expect(run("--config " + tmp + "/missing.cfg 2> /dev/null") == 2,
         "missing config file exits 2");

  {
    const std::string out = tmp + "/list.txt";
    expect(run("--list > " + out) == 0, "--list exits 0");
    const std::string listing = slurp(out);
    expect(listing.find("peiffer") != std::string::npos &&
               listing.find("extension") != std::string::npos,
           "--list names the registered suites");
  }

  {
    const std::string report = tmp + "/report.json";
    expect(run("--suite interchange --trials 5 --report " + report +
               " > /dev/null") == 0,
           "report run exits 0");
    auto j = load_report(report);
    expect(j["pass"].get<bool>(), "report carries the global pass flag");
    expect(j["suites"].size() == 1 &&
               j["suites"][0]["name"] == "interchange" &&
               j["suites"][0]["trials"].get<int>() == 5 &&
               j["suites"][0].contains("max_residual") &&
               j["suites"][0].contains("tolerance") &&
               j["suites"][0].contains("wall_ms"),
           "report has the per-suite fields");
  }

  {
    // Identical seed and config: reports match once timings are removed.
    const std::string r1 = tmp + "/det1.json";
    const std::string r2 = tmp + "/det2.json";
    run("--seed 7 --trials 10 --suite peiffer --suite gauge_closure --report " +
        r1 + " > /dev/null");
    run("--seed 7 --trials 10 --suite peiffer --suite gauge_closure --report " +
        r2 + " > /dev/null");
    auto a = load_report(r1);
    auto b = load_report(r2);
    strip_timings(a);
    strip_timings(b);
    expect(a == b, "same seed gives identical reports modulo timing");
  }

  {
    // Config file drives the run; explicit flags override it.
    const std::string cfg = tmp + "/run.cfg";
    std::ofstream(cfg) << "seed = 9\n"
                       << "trials = 7\n"
                       << "suites = peiffer, interchange\n"
                       << "tol.peiffer = 1e-3\n"
                       << "# comment line\n";
    const std::string r1 = tmp + "/cfg1.json";
    expect(run("--config " + cfg + " --report " + r1 + " > /dev/null") == 0,
           "config file run exits 0");
    auto j = load_report(r1);
    expect(j["suites"].size() == 2 &&
               j["suites"][0]["trials"].get<int>() == 7 &&
               j["suites"][0]["tolerance"].get<double>() == 1e-3,
           "config file sets suites, trials and tolerances");

    const std::string r2 = tmp + "/cfg2.json";
    expect(run("--config " + cfg + " --trials 4 --report " + r2 +
               " > /dev/null") == 0,
           "flag-over-config run exits 0");
    expect(load_report(r2)["suites"][0]["trials"].get<int>() == 4,
           "flags override config file values");

    std::ofstream(tmp + "/bad.cfg") << "nonsense line without equals\n";
    expect(run("--config " + tmp + "/bad.cfg 2> /dev/null") == 2,
           "malformed config exits 2");
  }

  if (failures == 0) {
    std::printf("cli tests: PASS\n");
    return 0;
  }
  std::printf("cli tests: FAIL (%d)\n", failures);
  return 1;
}
