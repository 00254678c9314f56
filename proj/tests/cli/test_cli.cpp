#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "wavegc/cli/cli.hpp"

namespace cli = wavegc::cli;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& body) {
  auto path = std::filesystem::temp_directory_path() / ("wavegc_test_" + name);
  std::ofstream(path) << body;
  return path.string();
}

}  // namespace

TEST(Cli, BracketOfTranslations) {
  auto r = run({"bracket", "1@t", "1@x"});
  EXPECT_EQ(r.code, cli::kPass);
  EXPECT_EQ(r.out, "0\n");
  EXPECT_EQ(run({"bracket", "1@x", "x^2@x"}).out, "2*x@x\n");
}

TEST(Cli, ParseErrorIsUsage) {
  auto r = run({"bracket", "1@t", "1@@x"});
  EXPECT_EQ(r.code, cli::kUsage);
  EXPECT_NE(r.err.find("parse error"), std::string::npos);
  EXPECT_EQ(run({}).code, cli::kUsage);
  EXPECT_EQ(run({"verify", "everything"}).code, cli::kUsage);
}

TEST(Cli, CheckDistinguishesPassAndFail) {
  EXPECT_EQ(run({"check", "-f", "u_x^(-4)", "-g", "0", "-Q", "t^2@t + t*u@u"}).code, cli::kPass);
  auto bad = run({"check", "-f", "u_x^(-4)", "-g", "0", "-Q", "x@t"});
  EXPECT_EQ(bad.code, cli::kFail);
  EXPECT_NE(bad.out.find("residual"), std::string::npos);
  EXPECT_EQ(run({"check", "-f", "u_xx", "-g", "0", "-Q", "1@t"}).code, cli::kUsage);
}

TEST(Cli, ProlongToJetOrder) {
  auto two = run({"prolong", "x@x + u@u"});
  EXPECT_EQ(two.code, cli::kPass);
  EXPECT_NE(two.out.find("eta_xx: -u_xx\n"), std::string::npos) << two.out;
  EXPECT_EQ(two.out.find("eta_xxx"), std::string::npos);

  auto three = run({"--jet-order", "3", "prolong", "x@x + u@u"});
  EXPECT_NE(three.out.find("eta_ttt: u_ttt\n"), std::string::npos) << three.out;
  EXPECT_NE(three.out.find("eta_xxx: -2*u_xxx\n"), std::string::npos) << three.out;
  auto gen = run({"--jet-order", "3", "prolong", "t^2@t + x*t@x + x^2*u@u"});
  EXPECT_NE(gen.out.find("eta_xxx: -3*t*u_xxx + 6*u_x + 6*u_xx*x + u_xxx*x^2\n"), std::string::npos) << gen.out;
  EXPECT_EQ(run({"--jet-order", "5", "prolong", "1@t"}).code, cli::kUsage);
}

TEST(Cli, DimensionWithinAnsatz) {
  auto r = run({"dim", "-f", "u_x^(-4)", "-g", "0", "--expect", "7"});
  EXPECT_EQ(r.code, cli::kPass) << r.out;
  EXPECT_NE(r.out.find("dimension within ansatz: 7"), std::string::npos);
  EXPECT_EQ(run({"dim", "-f", "u_x^(-4)", "-g", "0", "--expect", "6"}).code, cli::kFail);

  auto basis = temp_file("basis.toml", "tau = [\"1\", \"t\"]\n");
  auto small = run({"dim", "-f", "u_x^(-4)", "-g", "0", "--basis", basis});
  EXPECT_NE(small.out.find("dimension within ansatz: 6"), std::string::npos) << small.out;
}

TEST(Cli, TransformShiftsEquation) {
  auto params = temp_file("params.toml", "c0 = \"1\"\nc1 = \"2\"\nphi = \"x+1\"\nphi_inverse = \"x-1\"\npsi = \"x^2\"\n");
  auto r = run({"transform", "--params", params, "-f", "u_x^(-4)", "-g", "0"});
  EXPECT_EQ(r.code, cli::kPass) << r.err;
  EXPECT_NE(r.out.find("f~ = 1/4*(2 + u_x - 2*x)^(-4)"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("g~ = -1/2*(2 + u_x - 2*x)^(-4)"), std::string::npos) << r.out;

  auto bad = temp_file("bad.toml", "c7 = \"1\"\n");
  EXPECT_EQ(run({"transform", "--params", bad, "-f", "1", "-g", "0"}).code, cli::kUsage);
}

TEST(Cli, ConfigFile) {
  auto cfg = temp_file("cfg.toml", "seed = 11\nformat = \"json\"\nzero-test-samples = 5\n");
  auto r = run({"--config", cfg, "verify", "kernel"});
  ASSERT_EQ(r.code, cli::kPass) << r.err;
  auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["schema"], "wavegc-report/1");
  EXPECT_EQ(doc["seed"], 11);
  EXPECT_EQ(doc["zero_test_samples"], 5);

  auto unknown = temp_file("unknown.toml", "bogus = 1\n");
  EXPECT_EQ(run({"--config", unknown, "verify", "kernel"}).code, cli::kUsage);
}

TEST(Cli, ReportIsReproducible) {
  std::vector<std::string> args{"--format", "json", "--samples", "1", "verify", "subalgebras"};
  auto a = run(args);
  auto threads = args;
  threads.insert(threads.begin(), {"--threads", "2"});
  auto b = run(threads);
  ASSERT_EQ(a.code, cli::kPass) << a.out;
  EXPECT_EQ(a.out, b.out);
  auto da = nlohmann::json::parse(a.out);
  EXPECT_EQ(da["footer"]["catalog_entries"], 10);
  EXPECT_EQ(da["footer"]["catalog_complete"], true);
}

TEST(Cli, ReportFile) {
  auto path = (std::filesystem::temp_directory_path() / "wavegc_test_report.txt").string();
  auto r = run({"--report", path, "verify", "potential"});
  EXPECT_EQ(r.code, cli::kPass);
  std::ifstream in(path);
  std::string first;
  std::getline(in, first);
  EXPECT_FALSE(first.empty());
}
