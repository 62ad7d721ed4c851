// Suite runner: selects property suites, runs them with a fixed seed, and
// emits a machine-readable report. Exit codes: 0 all gates pass, 1 a gate
// failed, 2 usage or configuration error.

#include "higauge/suites.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

struct CliOptions {
  higauge::SuiteConfig config;
  std::string config_path;
  std::string report_path;
  bool list = false;
};

// --tol.<name> <value> and --tol.<name>=<value> are peeled off before the
// regular flag parser runs; CLI11 has no dynamic flag names.
int extract_tolerance_flags(std::vector<std::string>& args,
                            std::map<std::string, double>& tols) {
  std::vector<std::string> rest;
  for (std::size_t i = 0; i < args.size(); ++i) {
    const std::string& arg = args[i];
    if (arg.rfind("--tol.", 0) != 0) {
      rest.push_back(arg);
      continue;
    }
    std::string name = arg.substr(6);
    std::string value;
    const auto eq = name.find('=');
    if (eq != std::string::npos) {
      value = name.substr(eq + 1);
      name = name.substr(0, eq);
    } else {
      if (i + 1 >= args.size()) {
        std::cerr << "missing value for " << arg << "\n";
        return 2;
      }
      value = args[++i];
    }
    try {
      std::size_t pos = 0;
      tols[name] = std::stod(value, &pos);
      if (pos != value.size()) throw std::invalid_argument(value);
    } catch (const std::exception&) {
      std::cerr << "bad tolerance value for suite " << name << ": " << value
                << "\n";
      return 2;
    }
  }
  args = std::move(rest);
  return 0;
}

int apply_config_file(const std::string& path, higauge::SuiteConfig& cfg,
                      std::string& report_path) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << "cannot open config file: " << path << "\n";
    return 2;
  }
  std::string line;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    const auto strip = [](std::string s) {
      const auto a = s.find_first_not_of(" \t\r");
      if (a == std::string::npos) return std::string();
      const auto b = s.find_last_not_of(" \t\r");
      return s.substr(a, b - a + 1);
    };
    line = strip(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      std::cerr << "bad config line (want key=value): " << line << "\n";
      return 2;
    }
    const std::string key = strip(line.substr(0, eq));
    const std::string value = strip(line.substr(eq + 1));
    try {
      if (key == "seed") {
        cfg.seed = std::stoull(value);
      } else if (key == "trials") {
        cfg.trials = std::stoi(value);
      } else if (key == "fd-step" || key == "fd_step") {
        cfg.fd_step = std::stod(value);
      } else if (key == "report") {
        report_path = value;
      } else if (key == "suites" || key == "suite") {
        std::stringstream ss(value);
        std::string item;
        while (std::getline(ss, item, ','))
          if (!strip(item).empty()) cfg.suites.push_back(strip(item));
      } else if (key.rfind("tol.", 0) == 0) {
        cfg.tol_overrides[key.substr(4)] = std::stod(value);
      } else {
        std::cerr << "unknown config key: " << key << "\n";
        return 2;
      }
    } catch (const std::exception&) {
      std::cerr << "bad config value for " << key << ": " << value << "\n";
      return 2;
    }
  }
  return 0;
}

nlohmann::ordered_json report_to_json(const higauge::SuiteReport& report) {
  nlohmann::ordered_json out;
  out["pass"] = report.pass;
  out["suites"] = nlohmann::ordered_json::array();
  for (const auto& s : report.suites) {
    nlohmann::ordered_json j;
    j["name"] = s.name;
    j["trials"] = s.trials;
    j["max_residual"] = s.max_residual;
    j["tolerance"] = s.tolerance;
    j["pass"] = s.pass;
    j["wall_ms"] = s.wall_ms;
    out["suites"].push_back(std::move(j));
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CliOptions opt;
  std::vector<std::string> args(argv + 1, argv + argc);
  if (const int rc = extract_tolerance_flags(args, opt.config.tol_overrides))
    return rc;

  CLI::App app{
      "Property-suite runner for the 2-group bundle verification kernel"};
  std::vector<std::string> suites;
  app.add_option("--suite", suites,
                 "Suite to run (repeatable; default: all suites)");
  app.add_option("--seed", opt.config.seed, "Base seed for all trials");
  app.add_option("--trials", opt.config.trials, "Trials per suite")
      ->check(CLI::PositiveNumber);
  app.add_option("--fd-step", opt.config.fd_step,
                 "Finite-difference step for the differential oracles")
      ->check(CLI::PositiveNumber);
  app.add_option("--config", opt.config_path,
                 "key=value config file; flags override it");
  app.add_option("--report", opt.report_path, "Write a JSON report here");
  app.add_flag("--list", opt.list, "List suite names and exit");

  std::vector<const char*> cargs;
  cargs.push_back(argv[0]);
  for (const auto& a : args) cargs.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(cargs.size()),
              const_cast<char**>(cargs.data()));
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  if (opt.list) {
    for (const auto& name : higauge::suite_names())
      std::cout << name << "\n";
    return 0;
  }

  if (!opt.config_path.empty()) {
    // Flags override the file: stash flag-provided values, apply the file,
    // then re-apply the flags that were actually given.
    higauge::SuiteConfig from_flags = opt.config;
    const std::vector<std::string> suites_from_flags = suites;
    const std::string report_from_flags = opt.report_path;
    higauge::SuiteConfig cfg;
    if (const int rc = apply_config_file(opt.config_path, cfg, opt.report_path))
      return rc;
    if (app.count("--seed")) cfg.seed = from_flags.seed;
    if (app.count("--trials")) cfg.trials = from_flags.trials;
    if (app.count("--fd-step")) cfg.fd_step = from_flags.fd_step;
    if (!suites_from_flags.empty()) cfg.suites = suites_from_flags;
    for (const auto& [k, v] : from_flags.tol_overrides)
      cfg.tol_overrides[k] = v;
    if (app.count("--report")) opt.report_path = report_from_flags;
    opt.config = cfg;
  } else {
    opt.config.suites = suites;
  }

  higauge::SuiteReport report;
  try {
    report = higauge::run_suites(opt.config);
  } catch (const std::invalid_argument& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }

  for (const auto& s : report.suites)
    std::printf("%-18s %s  max_residual=%.3e  tolerance=%.1e  (%.0f ms)\n",
                s.name.c_str(), s.pass ? "PASS" : "FAIL", s.max_residual,
                s.tolerance, s.wall_ms);
  std::printf("overall: %s\n", report.pass ? "PASS" : "FAIL");

  if (!opt.report_path.empty()) {
    std::ofstream out(opt.report_path);
    if (!out) {
      std::cerr << "cannot write report: " << opt.report_path << "\n";
      return 2;
    }
    out << report_to_json(report).dump(2) << "\n";
  }
  return report.pass ? 0 : 1;
}
