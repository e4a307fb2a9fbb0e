#include "cli.hpp"

#include <json.hpp>

#include <gtest/gtest.h>

#include <cstdio>
#include <sstream>
#include <sys/wait.h>

namespace {

const std::string kDataDir = CFKIT_DATA_DIR;

struct Result {
  int status;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int status = cf::cli::run(args, out, err);
  return {status, out.str(), err.str()};
}

} // namespace

TEST(Cli, CfCheckWithAntiRealizesLambda) {
  const auto r = run({"cf-check", "--group", "q8", "--variant", "classic", "--assign",
                      "x=1,a=i,y=j,b=k", "--anti", "--json"});
  EXPECT_EQ(r.status, 0) << r.err;
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["count"], 1);
  EXPECT_EQ(doc["realizations"][0]["images"],
            nlohmann::json::array({"1", "-1", "k", "-k", "-i", "i", "j", "-j"}));
}

TEST(Cli, CfCheckWithoutAntiIsFalsified) {
  const auto r = run({"cf-check", "--group", "q8", "--variant", "classic", "--assign",
                      "x=1,a=i,y=j,b=k"});
  EXPECT_EQ(r.status, 1);
  EXPECT_NE(r.out.find("0 realization(s)"), std::string::npos);
}

TEST(Cli, CheckGroupBadFileReportsWitness) {
  const auto r = run({"check-group", "--file", kDataDir + "/not_associative.json"});
  EXPECT_EQ(r.status, 2);
  EXPECT_NE(r.err.find("(p, p, q)"), std::string::npos);
  EXPECT_EQ(std::count(r.err.begin(), r.err.end(), '\n'), 1);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).status, 2);
  EXPECT_EQ(run({"no-such-command"}).status, 2);
  EXPECT_EQ(run({"check-group", "--group", "q8", "--bogus"}).status, 2);
  EXPECT_EQ(run({"check-group"}).status, 2);
  EXPECT_EQ(run({"check-group", "--group", "s7"}).status, 2);
  EXPECT_EQ(run({"cf-check", "--group", "q8", "--assign", "x=1,a=i"}).status, 2);
  EXPECT_EQ(run({"cf-check", "--group", "q8", "--assign", "x=1,a=i,y=j,b=1"}).status, 2);
  EXPECT_EQ(run({"cf-check", "--group", "q8", "--formula", "F_x(a)", "--assign",
                 "x=1,a=i,y=j,b=k"})
                .status,
            2);
  EXPECT_EQ(run({"fraction-rule", "--group", "q8"}).status, 2);
  EXPECT_EQ(run({"symmetries", "--group", "c20"}).status, 2);
}

TEST(Cli, HelpSucceeds) { EXPECT_EQ(run({"--help"}).status, 0); }

TEST(Cli, ClassifyMap) {
  auto r = run({"classify-map", "--group", "q8", "--map", "lambda", "--json"});
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(nlohmann::json::parse(r.out)["kind"], "anti");
  r = run({"classify-map", "--group", "c4", "--images", "1,g^2,g,g^3"});
  EXPECT_EQ(r.status, 1);
  r = run({"classify-map", "--group", "sign", "--target", "c4", "--images", "1,g^2", "--json"});
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(nlohmann::json::parse(r.out)["bijective"], false);
}

TEST(Cli, SymmetryGroupReportShowsBothCounts) {
  const auto r = run({"symmetry-group", "--group", "q8", "--json"});
  EXPECT_EQ(r.status, 0);
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["order"], 48);
  EXPECT_EQ(doc["claimed_order"], 24);
  EXPECT_EQ(doc["automorphisms"], 24);
  EXPECT_EQ(doc["anti_automorphisms"], 24);
  EXPECT_EQ(doc["order_generated_by_lambda_sigma_tau"], 24);
}

TEST(Cli, GeneratedSubgroup) {
  auto r = run({"generated-subgroup", "--group", "q8", "--maps", "lambda,sigma,tau", "--json"});
  EXPECT_EQ(r.status, 0);
  auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["order"], 24);
  EXPECT_EQ(doc["automorphisms"], 12);
  r = run({"generated-subgroup", "--group", "q8", "--maps", "tau", "--json"});
  EXPECT_EQ(nlohmann::json::parse(r.out)["order"], 3);
}

TEST(Cli, EnumerateOrbitFraction) {
  auto r = run({"cf-enumerate", "--group", "klein", "--variant", "mosko", "--pin", "x=1,y=j",
                "--json"});
  EXPECT_EQ(r.status, 0);
  EXPECT_GE(nlohmann::json::parse(r.out)["count"], 1);
  EXPECT_EQ(run({"cf-enumerate", "--group", "trivial"}).status, 1);

  r = run({"cf-orbit", "--variant", "classic", "--steps", "2", "--json"});
  EXPECT_EQ(r.status, 0);
  auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["chain"][2]["side"], "F_x(y):F_b^-1(a^-1)");
  EXPECT_EQ(doc["symbolic_period"], 6);

  r = run({"cf-orbit", "--group", "klein", "--assign", "x=1,a=i,y=j,b=k", "--json"});
  EXPECT_EQ(nlohmann::json::parse(r.out)["element_period"], 3);

  EXPECT_EQ(run({"fraction-rule", "--group", "c12"}).status, 0);
  EXPECT_EQ(run({"fraction-rule", "--group", "c4", "--assign", "x=g,a=g^2,y=g^3,b=1"}).status,
            0);
}

TEST(Cli, FormulaOption) {
  const auto r = run({"cf-check", "--group", "q8", "--formula",
                      "F_x(a):F_y(b) => F_y(x):F_a^-1(b)", "--assign", "x=i,y=j,a=k,b=1",
                      "--anti", "--json"});
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(nlohmann::json::parse(r.out)["variant"], "dual");
}

TEST(Cli, JsonIsDeterministic) {
  const std::vector<std::string> args{"cf-enumerate", "--group", "q8", "--anti", "--json"};
  EXPECT_EQ(run(args).out, run(args).out);
}

TEST(Cli, DemoPasses) {
  const auto r = run({"demo"});
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out.find("[FAIL]"), std::string::npos);
}

TEST(Cli, BinaryExitStatus) {
  FILE *pipe = popen((std::string(CFKIT_CLI_PATH) + " demo --json").c_str(), "r");
  ASSERT_NE(pipe, nullptr);
  std::string out;
  char buf[256];
  while (fgets(buf, sizeof buf, pipe))
    out += buf;
  const int status = pclose(pipe);
  EXPECT_EQ(WEXITSTATUS(status), 0);
  EXPECT_EQ(nlohmann::json::parse(out)["ok"], true);
}

TEST(Cli, ReportsRuleInvertibility) {
  auto r = run({"cf-check", "--group", "q8", "--assign", "x=1,a=i,y=j,b=k", "--anti", "--json"});
  EXPECT_EQ(nlohmann::json::parse(r.out)["rule_invertible"], true);
  // a and b both rewrite to x: not a permutation of roles
  r = run({"cf-check", "--group", "klein", "--formula", "F_x(a):F_y(b) => F_x(x):F_y(x)",
           "--assign", "x=1,a=i,y=j,b=k", "--relax", "--json"});
  EXPECT_EQ(nlohmann::json::parse(r.out)["rule_invertible"], false);
}
