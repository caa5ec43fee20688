// Integration tests that drive the installed CLI binary. The binary path
// arrives through the TANHERF_CLI environment variable set by CTest.

#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "tanherf/csv.hpp"

namespace {

std::string cli_path() {
    const char* p = std::getenv("TANHERF_CLI");
    return p ? p : "";
}

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run(const std::string& args) {
    RunResult r;
    FILE* pipe = popen((cli_path() + " " + args + " 2>/dev/null").c_str(), "r");
    if (!pipe) return r;
    std::array<char, 4096> buf;
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
    const int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST(Cli, BinaryConfigured) { ASSERT_FALSE(cli_path().empty()); }

TEST(Cli, SampleIsByteReproducible) {
    const std::string args = "sample --preset opt1 --n 1000 --seed 42";
    const RunResult a = run(args);
    const RunResult b = run(args);
    EXPECT_EQ(a.exit_code, 0);
    EXPECT_EQ(a.out, b.out);
    int lines = 0;
    for (char c : a.out) lines += (c == '\n');
    EXPECT_EQ(lines, 1000);

    const RunResult c = run("sample --preset opt1 --n 1000 --seed 43");
    EXPECT_NE(a.out, c.out);
}

TEST(Cli, SampleSupportsExplicitParameters) {
    const RunResult r = run("sample --lambda 2 --alpha 0.7865 --n 10 --seed 1");
    EXPECT_EQ(r.exit_code, 0);
}

TEST(Cli, TuneEmitsCsv) {
    const RunResult r = run("tune --lambda 1");
    EXPECT_EQ(r.exit_code, 0);
    const auto table = tanherf::parse_csv(r.out);
    ASSERT_EQ(table.rows.size(), 1u);
    EXPECT_EQ(table.header[0], "lambda");
    EXPECT_NEAR(std::strtod(table.rows[0][1].c_str(), nullptr), 1.203315, 1e-3);
}

TEST(Cli, CsvRoundTripsThroughParser) {
    char tmpl[] = "/tmp/tanherf_cli_XXXXXX";
    ASSERT_NE(mkdtemp(tmpl), nullptr);
    const std::string out = std::string(tmpl) + "/curve.csv";
    const RunResult r = run("dawson-eval --grid-points 101 --out " + out);
    EXPECT_EQ(r.exit_code, 0);
    const std::string written = slurp(out);
    ASSERT_FALSE(written.empty());
    const auto parsed = tanherf::parse_csv(written);
    EXPECT_EQ(parsed.header,
              (std::vector<std::string>{"x", "F_ref", "F_approx", "delta"}));
    EXPECT_EQ(parsed.rows.size(), 101u);
    EXPECT_EQ(parsed.serialize(), written);  // byte-identical re-serialization
}

TEST(Cli, HistfitReportsWidth) {
    const RunResult r = run("histfit --preset opt2 --n 20000 --seed 7 --bins 40");
    EXPECT_EQ(r.exit_code, 0);
    const auto table = tanherf::parse_csv(r.out);
    ASSERT_EQ(table.rows.size(), 1u);
    const double sigma = std::strtod(table.rows[0][1].c_str(), nullptr);
    EXPECT_NEAR(sigma, 0.7071, 0.02);
}

TEST(Cli, LadderVerifyPasses) {
    const RunResult r = run("ladder-verify --max-n 12");
    EXPECT_EQ(r.exit_code, 0);
    EXPECT_NE(r.out.find("ALL PASS"), std::string::npos);
    EXPECT_EQ(r.out.find("FAIL "), std::string::npos);
}

TEST(Cli, UsageErrorsExitWithTwo) {
    EXPECT_EQ(run("no-such-command").exit_code, 2);
    EXPECT_EQ(run("tune --lambda 1 --format yaml").exit_code, 2);
}

TEST(Cli, NumericFailuresExitWithOne) {
    EXPECT_EQ(run("tune --lambda 99").exit_code, 1);       // above the order cap
    EXPECT_EQ(run("sample --n 5 --seed 1").exit_code, 1);  // neither preset nor lambda/alpha
}
