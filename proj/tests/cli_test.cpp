#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "diaggames/cli.hpp"
#include "diaggames/core.hpp"

namespace diaggames {
namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(const std::vector<std::string>& args, const std::string& input = "") {
    std::istringstream in(input);
    std::ostringstream out, err;
    const int code = cli::run(args, in, out, err);
    return {code, out.str(), err.str()};
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream f(p);
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

class CliFiles : public ::testing::Test {
protected:
    void SetUp() override {
        dir_ = std::filesystem::temp_directory_path() /
               ("diaggames_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
        std::filesystem::create_directories(dir_);
    }
    void TearDown() override { std::filesystem::remove_all(dir_); }
    std::string path(const std::string& name) const { return (dir_ / name).string(); }

    std::filesystem::path dir_;
};

TEST(Cli, AdaptiveAgainstBalanced) {
    const auto r = run({"play", "--n", "3", "--m", "5", "--cantor", "adaptive", "--kronecker", "balanced"});
    EXPECT_EQ(r.code, cli::kExpected) << r.err;
    EXPECT_EQ(r.out, "n=3 m=5 regime=mid queries=7 winner=cantor\n");
}

TEST(Cli, ObliviousAgainstCovering) {
    const auto r = run({"play", "--n", "2", "--m", "3", "--cantor", "oblivious", "--kronecker", "covering"});
    EXPECT_EQ(r.code, cli::kExpected) << r.err;
    EXPECT_EQ(r.out, "n=2 m=3 regime=mid queries=6 winner=cantor\n");
}

TEST(Cli, EndgameAndExhaustive) {
    auto r = run({"play", "--n", "3", "--m", "5", "--cantor", "endgame", "--kronecker", "covering"});
    EXPECT_EQ(r.code, cli::kExpected);
    EXPECT_NE(r.out.find("queries=13 winner=cantor"), std::string::npos);
    r = run({"play", "--n", "2", "--m", "5", "--cantor", "exhaustive", "--kronecker", "zero-first"});
    EXPECT_EQ(r.code, cli::kExpected);
    EXPECT_EQ(r.out, "n=2 m=5 regime=large queries=10 winner=cantor\n");
}

TEST(Cli, ManualCantorAgainstZeroFirst) {
    std::string script;
    for (int i = 1; i <= 5; ++i) {
        for (int j = 1; j <= 2; ++j) script += std::to_string(i) + " " + std::to_string(j) + "\n";
    }
    script += "show\ncomplete\n";
    const auto r = run({"play", "--n", "2", "--m", "5", "--cantor", "manual", "--kronecker", "zero-first"}, script);
    EXPECT_EQ(r.code, cli::kExpected) << r.err;
    EXPECT_NE(r.out.find("queries=10 winner=cantor"), std::string::npos);
    EXPECT_NE(r.out.find("v5(2) = 1"), std::string::npos);
}

TEST(Cli, ManualCantorRecoversFromBadInput) {
    const auto r = run({"play", "--n", "2", "--m", "2", "--cantor", "manual", "--kronecker", "balanced"},
                       "9 9\n1 1\n1 1\n2 2\nclaim 11\n");
    EXPECT_EQ(r.code, cli::kExpected);
    EXPECT_NE(r.out.find("already asked"), std::string::npos);
    EXPECT_NE(r.out.find("queries=2 winner=cantor"), std::string::npos);
}

TEST(Cli, ManualKronecker) {
    const auto r = run({"play", "--n", "2", "--m", "3", "--cantor", "adaptive", "--kronecker", "manual"},
                       "x\n0\n1\n0\n1\n");
    EXPECT_EQ(r.code, cli::kExpected) << r.err;
    EXPECT_NE(r.out.find("answer 0 or 1"), std::string::npos);
    EXPECT_NE(r.out.find("queries=4 winner=cantor"), std::string::npos);
}

TEST_F(CliFiles, SeededPlayIsByteIdentical) {
    const std::vector<std::string> base{"play", "--n", "4", "--m", "11", "--cantor", "adaptive", "--kronecker",
                                        "random", "--seed", "99", "--out"};
    auto a = base;
    a.push_back(path("a.json"));
    auto b = base;
    b.push_back(path("b.json"));
    EXPECT_EQ(run(a).code, cli::kExpected);
    EXPECT_EQ(run(b).code, cli::kExpected);
    const auto text = slurp(path("a.json"));
    EXPECT_EQ(text, slurp(path("b.json")));
    const auto t = transcript_from_json(text);
    EXPECT_EQ(t.seed, 99U);
    EXPECT_EQ(t.events.size(), 18U);
}

TEST_F(CliFiles, SeedFromEnvironment) {
    ::setenv("DIAG_GAMES_SEED", "5", 1);
    EXPECT_EQ(run({"play", "--n", "3", "--m", "6", "--cantor", "adaptive", "--kronecker", "random", "--out",
                   path("env.json")})
                  .code,
              cli::kExpected);
    ::unsetenv("DIAG_GAMES_SEED");
    EXPECT_EQ(run({"play", "--n", "3", "--m", "6", "--cantor", "adaptive", "--kronecker", "random:5", "--out",
                   path("flag.json")})
                  .code,
              cli::kExpected);
    EXPECT_EQ(transcript_from_json(slurp(path("env.json"))).seed, 5U);
    EXPECT_EQ(transcript_from_json(slurp(path("env.json"))).events,
              transcript_from_json(slurp(path("flag.json"))).events);
}

TEST(Cli, TableIsDeterministicAcrossJobs) {
    const auto one = run({"table", "--scenario", "adaptive", "--n-range", "2..5", "--m-range", "2..20", "--jobs", "1"});
    const auto four = run({"table", "--scenario", "adaptive", "--n-range", "2..5", "--m-range", "2..20", "--jobs", "4"});
    EXPECT_EQ(one.code, cli::kExpected);
    EXPECT_EQ(one.out, four.out);
    EXPECT_NE(one.out.find("3,4,adaptive,5,5,5,cantor"), std::string::npos);
}

TEST(Cli, TableZeroFirst) {
    const auto r = run({"table", "--scenario", "zero_first", "--n-range", "2", "--m-range", "5..7"});
    EXPECT_EQ(r.out,
              "n,m,scenario,queries,formula,oracle,winner\n"
              "2,5,zero_first,10,10,,cantor\n"
              "2,6,zero_first,12,12,,cantor\n"
              "2,7,zero_first,14,14,,cantor\n");
}

TEST(Cli, OracleValues) {
    EXPECT_EQ(run({"oracle", "--which", "g", "--n", "2", "--m", "3"}).out, "4\n");
    EXPECT_EQ(run({"oracle", "--which", "f", "--n", "2", "--m", "3"}).out, "6\n");
    EXPECT_EQ(run({"oracle", "--which", "edge-matching", "--n", "2", "--dirs", "1,2"}).out, "none (parity)\n");
    EXPECT_EQ(run({"oracle", "--which", "edge-matching", "--n", "2", "--dirs", "1,1"}).out, "00-10 01-11\n");
    EXPECT_EQ(run({"oracle", "--which", "covering", "--n", "2", "--plan", "1,2;1,2;1,2"}).out,
              "none (Cantor wins with this plan)\n");
    EXPECT_NE(run({"oracle", "--which", "covering", "--n", "2", "--plan", "1;1;2"}).out.find("f3: 2="),
              std::string::npos);
    EXPECT_EQ(run({"oracle", "--which", "cube-cover", "--n", "3", "--sets", "1,2;3"}).code, cli::kExpected);
}

TEST(Cli, ExitCodes) {
    EXPECT_EQ(run({}).code, cli::kUsage);
    EXPECT_EQ(run({"play", "--n", "3"}).code, cli::kUsage);
    EXPECT_EQ(run({"play", "--n", "3", "--m", "5", "--cantor", "bogus", "--kronecker", "balanced"}).code,
              cli::kUsage);
    EXPECT_EQ(run({"play", "--n", "3", "--m", "3", "--cantor", "adaptive", "--kronecker", "balanced"}).code,
              cli::kUsage);
    EXPECT_EQ(run({"play", "--n", "3", "--m", "5", "--cantor", "adaptive", "--kronecker", "random:x"}).code,
              cli::kUsage);
    EXPECT_EQ(run({"oracle", "--which", "f", "--n", "4", "--m", "7"}).code, cli::kBudget);
    EXPECT_EQ(run({"oracle", "--which", "g", "--n", "3", "--m", "6"}).code, cli::kBudget);
    EXPECT_EQ(run({"table", "--scenario", "x", "--n-range", "2", "--m-range", "2"}).code, cli::kUsage);
    const auto help = run({"play", "--help"});
    EXPECT_EQ(help.code, cli::kExpected);
    EXPECT_NE(help.out.find("--kronecker"), std::string::npos);
}

// A wrong claim from a manual player is reported but is not a strategy bug.
TEST(Cli, ManualLossIsNotAnError) {
    const auto r = run({"play", "--n", "2", "--m", "2", "--cantor", "manual", "--kronecker", "balanced"}, "claim 00\n");
    EXPECT_EQ(r.code, cli::kExpected);
    EXPECT_NE(r.out.find("winner=kronecker"), std::string::npos);
}

}  // namespace
}  // namespace diaggames
