#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "fibred/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Invariants, inequality checks and threshold certificates for families of semi-stable curves"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "machine-readable output");

  std::string report_path;
  auto* report = app.add_subcommand("report", "derive invariants and evaluate the inequality catalog");
  report->add_option("file", report_path, "family document")->required();
  report->add_flag("--json", as_json, "machine-readable output");

  std::string fiber_path;
  auto* fiber = app.add_subcommand("fiber", "classify one singular fiber");
  fiber->add_option("file", fiber_path, "fiber document")->required();
  fiber->add_flag("--json", as_json, "machine-readable output");

  std::optional<std::string> scenario;
  long gmax = 100;
  auto* thresholds = app.add_subcommand("thresholds", "minimal genera against the stated bounds");
  thresholds->add_option("--scenario", scenario, "scenario id (default: all)");
  thresholds->add_option("--gmax", gmax, "upper end of genus scans");
  thresholds->add_flag("--json", as_json, "machine-readable output");

  std::string cert_scenario;
  long g = 0;
  std::optional<std::string> out_path;
  auto* certify = app.add_subcommand("certify", "build and verify a certificate");
  certify->add_option("--scenario", cert_scenario, "scenario id")->required();
  certify->add_option("--g", g, "genus")->required();
  certify->add_option("--out", out_path, "write the certificate document here");
  certify->add_flag("--json", as_json, "machine-readable output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return fibred::cli::kInvalid;
  }

  if (*report) return fibred::cli::cmd_report(report_path, as_json, std::cout, std::cerr);
  if (*fiber) return fibred::cli::cmd_fiber(fiber_path, as_json, std::cout, std::cerr);
  if (*thresholds) return fibred::cli::cmd_thresholds(scenario, gmax, as_json, std::cout, std::cerr);
  return fibred::cli::cmd_certify(cert_scenario, g, out_path, as_json, std::cout, std::cerr);
}
