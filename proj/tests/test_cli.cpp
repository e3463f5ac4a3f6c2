#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "equicert/json_io.hpp"

using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = equicert::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, VerifyPellGolden) {
  const auto r = invoke({"verify", "--identity", "pell", "--n", "5", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const json j = json::parse(r.out);
  EXPECT_EQ(j["holds"], true);
  EXPECT_EQ(j["constant"], "1");
  const auto report = j.get<equicert::IdentityReport>();
  EXPECT_EQ(report, equicert::verify_pell(5));
}

TEST(Cli, MaxentHandelmanGolden) {
  const auto r = invoke({"maxent", "handelman", "--n", "1", "--target-constant", "3"});
  ASSERT_EQ(r.code, 0) << r.err;
  const json j = json::parse(r.out);
  const auto cert = j["certificate"].get<equicert::HandelmanCertificate>();
  ASSERT_EQ(cert.weights.size(), 3u);
  const std::vector<std::pair<equicert::Exponent, double>> expected{{{0, 0}, 1.0}, {{1, 0}, 2.0}, {{0, 1}, 2.0}};
  for (std::size_t i = 0; i < 3; ++i) {
    EXPECT_EQ(cert.weights[i].alpha, expected[i].first);
    EXPECT_NEAR(cert.weights[i].value, expected[i].second, 1e-9);
  }
  EXPECT_TRUE(j["report"]["converged"].get<bool>());
}

TEST(Cli, VerifySimplexUnityGolden) {
  const auto r = invoke({"verify", "--identity", "simplex-unity", "--d", "2", "--n", "1"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(json::parse(r.out)["constant"], "4");
}

TEST(Cli, BoundaryTargetExitsOne) {
  const auto r = invoke({"maxent", "handelman", "--n", "3", "--target-coeffs", "0,1"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("no interior certificate found at degree 3"), std::string::npos);
  EXPECT_FALSE(json::parse(r.out)["report"]["converged"].get<bool>());
}

TEST(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(invoke({}).code, 2);
  EXPECT_EQ(invoke({"frobnicate"}).code, 2);
  EXPECT_EQ(invoke({"verify", "--identity", "pell"}).code, 2);
  EXPECT_EQ(invoke({"verify", "--identity", "pell", "--n", "0"}).code, 2);
  EXPECT_EQ(invoke({"verify", "--identity", "pell", "--n", "2", "--bogus"}).code, 2);
  EXPECT_EQ(invoke({"partition", "--domain", "cube", "--n", "1"}).code, 2);
  EXPECT_EQ(invoke({"maxent", "handelman", "--n", "1", "--target-coeffs", "1,2,3"}).code, 2);
  EXPECT_EQ(invoke({"christoffel", "--measure", "arcsine", "--n", "1", "--at", "1,2"}).code, 2);
  const auto r = invoke({"moments", "--measure", "nope"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("Usage"), std::string::npos);
}

TEST(Cli, NumericFailureExitsThree) {
  // A negative constant shift makes the localizing matrix negative definite.
  const auto r = invoke({"matrix", "--measure", "arcsine", "--n", "1", "--shift-coeffs", "-1", "--inverse"});
  EXPECT_EQ(r.code, 3) << r.err;
}

TEST(Cli, SimplexEquilibriumWarnsOnMismatch) {
  const auto r = invoke({"verify", "--identity", "simplex-equilibrium", "--n", "1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.err.find("warning"), std::string::npos);
  EXPECT_EQ(json::parse(r.out)["constant"], "3");
}

TEST(Cli, PartitionExamples) {
  struct Case {
    std::vector<std::string> args;
    std::vector<double> values;
  };
  const std::vector<Case> cases{
      {{"partition", "--domain", "interval01", "--n", "1", "--at", "0.25"}, {1.0 / 3, 1.0 / 6, 0.5}},
      {{"partition", "--domain", "interval11", "--n", "1", "--at", "0"}, {1.0 / 3, 0.0, 2.0 / 3}},
      {{"partition", "--domain", "simplex", "--d", "2", "--n", "1", "--at", "1/3,1/3"}, {0.25, 0.25, 0.25, 0.25}},
  };
  for (const auto& c : cases) {
    const auto r = invoke(c.args);
    ASSERT_EQ(r.code, 0) << r.err;
    const json j = json::parse(r.out);
    EXPECT_EQ(j["exact_sum"], "1");
    const auto& ev = j["evaluations"][0];
    const auto values = ev["values"].get<std::vector<double>>();
    ASSERT_EQ(values.size(), c.values.size());
    for (std::size_t i = 0; i < values.size(); ++i) EXPECT_NEAR(values[i], c.values[i], 1e-12);
    EXPECT_NEAR(ev["sum"].get<double>(), 1.0, 1e-12);
  }
}

TEST(Cli, PartitionRowsSumToOne) {
  for (const auto* domain : {"interval01", "interval11"}) {
    for (int n = 1; n <= 8; ++n) {
      std::vector<std::string> args{"partition", "--domain", domain, "--n", std::to_string(n)};
      for (double x : {0.0, 0.1, 0.37, 0.5, 0.93, 1.0}) {
        args.push_back("--at");
        args.push_back(std::to_string(x));
      }
      const auto r = invoke(args);
      ASSERT_EQ(r.code, 0) << r.err;
      for (const auto& ev : json::parse(r.out)["evaluations"]) EXPECT_NEAR(ev["sum"].get<double>(), 1.0, 1e-12);
    }
  }
  const auto r = invoke({"partition", "--domain", "simplex", "--d", "3", "--n", "2", "--at", "0.1,0.2,0.3", "--at",
                         "0,0,0", "--at", "0.25,0.25,0.25"});
  ASSERT_EQ(r.code, 0) << r.err;
  for (const auto& ev : json::parse(r.out)["evaluations"]) EXPECT_NEAR(ev["sum"].get<double>(), 1.0, 1e-12);
}

TEST(Cli, MomentsCsv) {
  const auto r = invoke({"moments", "--measure", "simplex-uniform", "--d", "2", "--max-degree", "1", "--format", "csv"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "exponent,value\n\"0,0\",1\n\"1,0\",1/3\n\"0,1\",1/3\n");
  const auto u = invoke({"moments", "--measure", "arcsine", "--max-degree", "2", "--format", "csv"});
  EXPECT_EQ(u.out, "exponent,value\n0,1\n1,0\n2,1/2\n");
}

TEST(Cli, MatrixRoundTrip) {
  const auto r = invoke({"matrix", "--measure", "simplex-equilibrium", "--n", "1", "--inverse"});
  ASSERT_EQ(r.code, 0) << r.err;
  const json j = json::parse(r.out);
  const auto m = equicert::parse_matrix_report(j);
  EXPECT_EQ(m.entries, equicert::moment_matrix(equicert::MeasureId::simplex_equilibrium(), 1).entries);
  EXPECT_EQ(j["inverse"].get<equicert::RationalMatrix>()(0, 0), equicert::Rational(3));
}

TEST(Cli, ExactModeRoundTrip) {
  const auto r = invoke({"maxent", "putinar", "--n", "2", "--exact"});
  ASSERT_EQ(r.code, 0) << r.err;
  const json j = json::parse(r.out);
  EXPECT_EQ(j["exact"]["residual"], "0");
  const auto cert = j["exact"]["certificate"].get<equicert::ExactPutinarCertificate>();
  EXPECT_TRUE(equicert::verify_certificate_exact(cert, equicert::UPoly::constant(5)).is_zero());
}

TEST(Cli, OutputFile) {
  const auto path = std::filesystem::temp_directory_path() / "equicert_cli_output.json";
  const auto r = invoke({"pell", "--n", "3", "--output", path.string()});
  ASSERT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  const json j = json::parse(in);
  EXPECT_EQ(j["report"]["holds"], true);
  std::filesystem::remove(path);
}

TEST(Cli, ChristoffelValues) {
  const auto r = invoke({"christoffel", "--measure", "arcsine", "--n", "1", "--at", "1", "--at", "0"});
  ASSERT_EQ(r.code, 0) << r.err;
  const json j = json::parse(r.out);
  EXPECT_EQ(j["values"][0]["value"], "3");
  EXPECT_EQ(j["values"][1]["value"], "1");
}
