// Runs the built front end as a subprocess and checks exit codes and output.

#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct Run {
    int code;
    std::string out;
};

Run run(const std::string& args, const std::string& env = {}) {
    const auto tmp = std::filesystem::temp_directory_path() / ("minpair_cli_" + std::to_string(::getpid()) + ".out");
    const std::string cmd = env + (env.empty() ? "" : " ") + "\"" MINPAIR_CLI "\" " + args + " > \"" + tmp.string() + "\" 2>&1";
    const int raw = std::system(cmd.c_str());
    std::ifstream f(tmp);
    std::stringstream ss;
    ss << f.rdbuf();
    std::filesystem::remove(tmp);
    return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, ss.str()};
}

std::string scenario(const std::string& name) { return std::string(MINPAIR_SCENARIO_DIR) + "/" + name; }

}  // namespace

TEST(Cli, AnalyzePassingScenario) {
    auto r = run("analyze " + scenario("S1.json"));
    EXPECT_EQ(r.code, 0) << r.out;
    EXPECT_NE(r.out.find("\"j\": 2"), std::string::npos);
    EXPECT_NE(r.out.find("\"ic_classification\": \"K^h\""), std::string::npos);
}

TEST(Cli, AnalyzeFixtureExitsOne) {
    EXPECT_EQ(run("analyze " + scenario("X1_tame_subfield_regression.json")).code, 1);
}

TEST(Cli, MalformedGammaExitsTwo) {
    const auto path = std::filesystem::temp_directory_path() / "minpair_bad_gamma.json";
    std::ofstream(path) << R"({"schema_version": 1, "id": "bad", "base": "Qp", "p": 2, "Q": ["-2", "0", "1"], "gamma": "abc"})";
    auto r = run("analyze " + path.string());
    std::filesystem::remove(path);
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.out.find("gamma"), std::string::npos) << r.out;
}

TEST(Cli, AnalyzeWritesOutFile) {
    const auto path = std::filesystem::temp_directory_path() / "minpair_report.json";
    auto r = run("analyze " + scenario("S2.json") + " --out " + path.string());
    EXPECT_EQ(r.code, 0);
    std::ifstream f(path);
    std::stringstream ss;
    ss << f.rdbuf();
    std::filesystem::remove(path);
    EXPECT_NE(ss.str().find("\"schema_version\": 1"), std::string::npos);
}

TEST(Cli, SuiteDefault) {
    auto r = run("suite");
    EXPECT_EQ(r.code, 0) << r.out;
    EXPECT_NE(r.out.find("all as expected"), std::string::npos);
}

TEST(Cli, SuiteFilter) {
    auto r = run("suite --filter thm_1_1");
    EXPECT_EQ(r.code, 0) << r.out;
    EXPECT_NE(r.out.find("thm_1_1"), std::string::npos);
    EXPECT_EQ(r.out.find("lemma_4_1"), std::string::npos);
}

TEST(Cli, SuiteMissingDirExitsTwo) {
    EXPECT_EQ(run("suite --dir /nonexistent/minpair-scenarios").code, 2);
    EXPECT_EQ(run("suite", "MINPAIR_SCENARIO_DIR=/nonexistent/minpair-scenarios").code, 2);
}

TEST(Cli, ProptestDeterministic) {
    auto a = run("proptest --seed 3 --count 20");
    auto b = run("proptest --seed 3 --count 20");
    EXPECT_EQ(a.code, 0) << a.out;
    EXPECT_EQ(a.out, b.out);
    EXPECT_NE(a.out.find("all properties passed"), std::string::npos);
}

TEST(Cli, ProptestCountZero) {
    auto r = run("proptest --count 0");
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("0 scenarios"), std::string::npos);
}

TEST(Cli, UnknownCommandExitsTwo) { EXPECT_EQ(run("frobnicate").code, 2); }
