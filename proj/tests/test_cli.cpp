#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <sstream>

#include "fibred/cli.hpp"
#include "fixture_table.hpp"

using namespace fibred;

namespace {

int run_cli(const std::string& args) {
  const std::string cmd = std::string(FIBRED_CLI) + " " + args + " > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

}  // namespace

TEST(Report, FixtureExitCodes) {
  for (const auto& fx : fixture_table()) {
    std::ostringstream out, err;
    EXPECT_EQ(cli::cmd_report(fixture_path(fx.file), false, out, err), fx.exit_code) << fx.file << "\n" << err.str();
    std::ostringstream jout, jerr;
    EXPECT_EQ(cli::cmd_report(fixture_path(fx.file), true, jout, jerr), fx.exit_code) << fx.file;
  }
}

TEST(Report, JsonReparseIsIdentical) {
  for (const auto& fx : fixture_table()) {
    if (fx.exit_code == cli::kInvalid) continue;
    std::ostringstream out, err;
    cli::cmd_report(fixture_path(fx.file), true, out, err);
    const std::string text = out.str();
    const auto j = json::parse(text);
    EXPECT_EQ(j.dump(2) + "\n", text) << fx.file;
    EXPECT_EQ(j.at("exit_code").get<int>(), fx.exit_code);
  }
}

TEST(Report, GenusThreeExampleValues) {
  std::ostringstream out, err;
  ASSERT_EQ(cli::cmd_report(fixture_path("example_genus3.json"), true, out, err), 0);
  const auto j = json::parse(out.str());
  EXPECT_EQ(j["invariants"]["deg_pushforward"], "2");
  EXPECT_EQ(j["invariants"]["omega_rel_sq"], "12");
  EXPECT_EQ(j["invariants"]["delta_f"], "12");
  EXPECT_EQ(j["invariants"]["log_degree"], "2");
  EXPECT_EQ(j["higgs"]["classification"], "Maximal");
  EXPECT_EQ(j["higgs"]["q_f_if_maximal"], "1");
}

TEST(Report, ErrorsCarryLineNumbers) {
  std::ostringstream out, err;
  cli::cmd_report(fixture_path("invalid_rational.json"), false, out, err);
  EXPECT_NE(err.str().find("line 4"), std::string::npos) << err.str();
  std::ostringstream out2, err2;
  EXPECT_EQ(cli::cmd_report(fixture_path("does_not_exist.json"), false, out2, err2), cli::kInvalid);
}

TEST(Document, FamilyRoundTrip) {
  const auto d = load_family_document(fixture_path("synthetic_genus3_h.json"));
  const auto again = parse_family_document(to_json(d.family).dump());
  EXPECT_EQ(to_json(again.family).dump(), to_json(d.family).dump());
}

TEST(Document, UnknownKeyRejected) {
  try {
    parse_family_document(R"({"genus": 3, "base_genus": 0, "hyperelliptic": false,
  "colour": 1})");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ParseError);
    EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos) << e.what();
  }
}

TEST(Fiber, Fixtures) {
  std::ostringstream out, err;
  EXPECT_EQ(cli::cmd_fiber(fixture_path("fibers/chain_genus3.json"), false, out, err), 0);
  EXPECT_EQ(cli::cmd_fiber(fixture_path("fibers/star_genus4.json"), true, out, err), 0);
  EXPECT_EQ(cli::cmd_fiber(fixture_path("fibers/cycle_compact.json"), false, out, err), 2);
}

TEST(Thresholds, Lines) {
  const auto fam = cli::threshold_line("family-strict-arakelov", 50);
  EXPECT_TRUE(fam.agree);
  const auto typ = cli::threshold_line("typeI-II", 50);
  EXPECT_FALSE(typ.discrepancy.empty());
  std::ostringstream out, err;
  EXPECT_EQ(cli::cmd_thresholds(std::nullopt, 60, true, out, err), 0);
  const auto text = out.str();
  EXPECT_EQ(json::parse(text).dump(2) + "\n", text);
  EXPECT_EQ(cli::cmd_thresholds(std::string("nope"), 60, false, out, err), 2);
}

TEST(Certify, Commands) {
  std::ostringstream out, err;
  EXPECT_EQ(cli::cmd_certify("g3-nonhyper", 3, std::nullopt, false, out, err), 0);
  EXPECT_NE(out.str().find("7/18"), std::string::npos);
  EXPECT_EQ(cli::cmd_certify("typeI-II", 4, std::nullopt, false, out, err), 2);
  std::ostringstream jout;
  EXPECT_EQ(cli::cmd_certify("family-strict-arakelov", 7, std::nullopt, true, jout, err), 0);
  const auto text = jout.str();
  EXPECT_EQ(json::parse(text).dump(2) + "\n", text);
}

TEST(Process, ExitCodes) {
  EXPECT_EQ(run_cli("report " + fixture_path("example_genus4.json")), 0);
  EXPECT_EQ(run_cli("report " + fixture_path("synthetic_tagged.json")), 1);
  EXPECT_EQ(run_cli("report " + fixture_path("invalid_syntax.json")), 2);
  EXPECT_EQ(run_cli("--json report " + fixture_path("example_genus3.json")), 0);
  EXPECT_EQ(run_cli("thresholds --scenario hyperelliptic-geodesic --gmax 40"), 0);
  EXPECT_EQ(run_cli("certify --scenario typeI-II --g 13"), 0);
  EXPECT_EQ(run_cli("certify --scenario bogus --g 13"), 2);
  EXPECT_EQ(run_cli(""), 2);
  EXPECT_EQ(run_cli("report"), 2);
  EXPECT_EQ(run_cli("--help"), 0);
}
