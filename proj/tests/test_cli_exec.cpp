// End-to-end checks of the installed CLI: exit codes, output contracts,
// determinism. The binary path comes from the build system.

#include <doctest.h>

#include <json.hpp>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#ifndef HEATSING_CLI_PATH
#define HEATSING_CLI_PATH "./heatsing"
#endif

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(HEATSING_CLI_PATH) + " " + args + " 2>/dev/null";
    std::array<char, 4096> buf{};
    std::string out;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
    int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

} // namespace

TEST_CASE("coeff table rows and exit codes") {
    RunResult r = run_cli("coeff -a 0.3 -b 0.4 -N 2");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("0.15") != std::string::npos);
    CHECK(r.out.find("\n0,") != std::string::npos);
    CHECK(r.out.find("\n0.5,") != std::string::npos);
    CHECK(r.out.find("\n1,") != std::string::npos);

    CHECK(run_cli("coeff -a 0.5 -b 0.5").exit_code == 2);

    RunResult rem = run_cli("coeff -a 0.25 -b -2.25 -N 0");
    CHECK(rem.exit_code == 0);
    CHECK(rem.out.find("1.5,-0.830837") != std::string::npos); // finite c at a+b=-2
}

TEST_CASE("verify: pass run exits 0, bad grid exits 2, json schema") {
    RunResult r = run_cli("verify -a 0.3 -b 0.4 -N 2 --tmin 1e-4 --tmax 1e-2 --points 4");
    CHECK(r.exit_code == 0);
    CHECK(r.out.rfind("t,quad_value,quad_error,series_value,residual", 0) == 0);
    CHECK(r.out.find("pass,true") != std::string::npos);

    CHECK(run_cli("verify --points 2").exit_code == 2);

    RunResult j = run_cli("verify -a 0.3 -b 0.4 -N 2 --tmin 1e-4 --tmax 1e-2 --points 4 "
                          "--format json");
    CHECK(j.exit_code == 0);
    auto parsed = nlohmann::json::parse(j.out);
    CHECK(parsed.is_object());
    CHECK(parsed["t"].size() == parsed["residual"].size());
}

TEST_CASE("verify determinism: identical invocations give identical bytes") {
    std::string args = "verify -a 0.3 -b 0.4 -N 2 --tmin 1e-4 --tmax 1e-2 --points 4 --seed 7";
    RunResult r1 = run_cli(args);
    RunResult r2 = run_cli(args);
    CHECK(r1.out == r2.out);
}

TEST_CASE("config file is applied and flags override it") {
    const char* path = "cli_exec_config.tmp";
    {
        std::ofstream f(path);
        f << "points=5\nformat=csv\ntmax_bogus_ignored"; // malformed last line
    }
    // malformed line must be rejected
    CHECK(run_cli(std::string("verify --config ") + path).exit_code == 2);
    {
        std::ofstream f(path);
        f << "points=5\nt_min=1e-4\n";
    }
    RunResult r = run_cli(std::string("verify -a 0.3 -b 0.4 -N 2 --config ") + path);
    CHECK(r.exit_code == 0);
    int rows = 0;
    std::istringstream in(r.out);
    std::string line;
    std::getline(in, line); // header
    while (std::getline(in, line) && line.rfind("fitted", 0) != 0) ++rows;
    CHECK(rows == 5);
    std::remove(path);
}

TEST_CASE("ladder dump and range guard") {
    CHECK(run_cli("ladder -k 3 --dump cli_sigma3.tmp").exit_code == 0);
    std::ifstream f("cli_sigma3.tmp");
    REQUIRE(f.good());
    auto j = nlohmann::json::parse(f);
    CHECK(j.is_array());
    CHECK(j.size() == 4);
    std::remove("cli_sigma3.tmp");
    CHECK(run_cli("ladder -k 5").exit_code == 2);
}

TEST_CASE("recursion and heat subcommands") {
    RunResult r = run_cli("recursion -a 0.5 -b 0.3 -t 1e-3 -N 8");
    CHECK(r.exit_code == 0);
    CHECK(r.out.rfind("residual,", 0) == 0);
    CHECK(run_cli("heat -a 0.5 -b 0.3 -t 1e-3").exit_code == 0);
    CHECK(run_cli("heat -a 1.5 -b 0.3 -t 1e-3").exit_code == 2); // exponent >= 1
}

TEST_CASE("spectral and bc subcommands exit clean") {
    CHECK(run_cli("spectral").exit_code == 0);
    CHECK(run_cli("bc -a 0.3 -b 0.4 --left D --right D --tmin 2e-4 --tmax 4e-3 --points 5")
              .exit_code == 0);
}
