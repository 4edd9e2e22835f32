#include <gtest/gtest.h>

#include <sstream>

#include <json.hpp>
#include <ncnull/positivity.hpp>

#include "cli.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = ncnull::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

nlohmann::json run_json(std::vector<std::string> args, int expected_code) {
  args.push_back("--json");
  const Result r = run(args);
  EXPECT_EQ(r.code, expected_code) << r.err;
  return nlohmann::json::parse(r.out);
}

}  // namespace

TEST(Cli, MemberOfGenerator) {
  const auto j = run_json({"member", "--ideal", "T", "--g", "2", "--poly", "1 - X1 X1^*"}, 0);
  EXPECT_TRUE(j.at("member").get<bool>());
}

TEST(Cli, NonMemberReportsWitness) {
  const auto j = run_json({"member", "--ideal", "S", "--poly", "X1 X1^* + X2 X2^* - 1"}, 1);
  EXPECT_FALSE(j.at("member").get<bool>());
  EXPECT_TRUE(j.at("witness").at("exact").get<bool>());
  EXPECT_EQ(j.at("witness").at("point").size(), 2u);
}

TEST(Cli, BoundForCommutatorIdeal) {
  const Result r = run({"bound", "--ideal", "CommInv", "--poly", "X1 X2 X1 + X2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("nss_bound: 36"), std::string::npos) << r.out;
  const auto j = run_json({"bound", "--ideal", "T", "--poly", "X1^* X1 X2 - X2"}, 0);
  EXPECT_EQ(j.at("star_bound").get<int>(), 6);
  EXPECT_EQ(j.at("star_bound_real").get<int>(), 12);
}

TEST(Cli, ZeroTest) {
  EXPECT_EQ(run({"zero-test", "--expr", "X1 X1^-1 - 1", "--basepoint", "scalar:1"}).code, 0);
  EXPECT_EQ(run({"zero-test", "--expr", "X1 X2 - X2 X1", "--plain"}).code, 1);
  // base point outside the domain of the inverse
  EXPECT_EQ(run({"zero-test", "--expr", "X1^-1", "--basepoint", "scalar:0"}).code, 2);
}

TEST(Cli, EvalAndExpand) {
  const auto v = run_json({"eval", "--expr", "X1^-1 X2", "--plain", "--point", "scalar:2,3"}, 0);
  EXPECT_EQ(v.at("value").at("entries")[0][0].get<std::string>(), "3/2");
  const auto e = run_json({"expand", "--expr", "X1^-1", "--g", "1", "--plain", "--order", "4"}, 0);
  EXPECT_EQ(e.at("coefficients").size(), 5u);
  EXPECT_EQ(e.at("coefficients")[3].at("coefficient").get<std::string>(), "-X1 X1 X1");
}

TEST(Cli, SampleAndFalsifyAreSeeded) {
  const std::vector<std::string> s{"sample", "--domain", "unitaries", "--g", "2", "--size", "3", "--seed", "9"};
  const Result a = run(s), b = run(s);
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  const auto w = run_json({"falsify", "--ideal", "T", "--poly", "X1 X2 - X2 X1", "--seed", "3"}, 1);
  EXPECT_EQ(w.at("witness").at("seed").get<int>(), 3);
  EXPECT_GE(w.at("witness").at("size").get<int>(), 2);
  const auto none = run_json({"falsify", "--ideal", "T", "--poly", "1 - X1^* X1", "--sizes", "1-3", "--trials", "5"}, 0);
  EXPECT_TRUE(none.at("witness").is_null());
}

TEST(Cli, VerifySohs) {
  const std::string good = R"({"squares": ["1 - X1"], "remainder": "0"})";
  const std::string bad = R"({"squares": ["1 + X1"], "remainder": "0"})";
  const std::vector<std::string> base{"verify-sohs", "--ideal", "T", "--g", "1", "--poly", "(1 - X1)^* (1 - X1)", "--cert"};
  auto with = [&](const std::string& c) {
    auto v = base;
    v.push_back(c);
    return v;
  };
  EXPECT_EQ(run(with(good)).code, 0);
  EXPECT_EQ(run(with(bad)).code, 1);
  auto probe = with(good);
  probe.insert(probe.end(), {"--probe", "--json"});
  const auto j = nlohmann::json::parse(run(probe).out);
  EXPECT_GE(j.at("probe").at("min_eigenvalue").get<double>(), -1e-8);
}

TEST(Cli, GramExportParses) {
  const Result r = run({"gram-export", "--g", "1", "--poly", "(1 - X1)^* (1 - X1)"});
  ASSERT_EQ(r.code, 0);
  const ncnull::GramProblem p = ncnull::parse_gram(r.out);
  EXPECT_EQ(p.basis.size(), 3u);
  EXPECT_EQ(p.d, 1u);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"member", "--poly", "X1"}).code, 2);
  EXPECT_EQ(run({"member", "--ideal", "Nope", "--poly", "X1"}).code, 2);
  EXPECT_EQ(run({"member", "--ideal", "T", "--poly", "X1 +"}).code, 2);
  EXPECT_EQ(run({"eval", "--expr", "X1"}).code, 2);
  EXPECT_EQ(run({"falsify", "--ideal", "T", "--poly", "X1", "--mode", "sideways"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, SelftestSubset) {
  const auto j = run_json({"selftest", "--only", "5", "10"}, 0);
  EXPECT_EQ(j.at("passed").get<int>(), 2);
  EXPECT_EQ(j.at("failed").get<int>(), 0);
}
