// Drives the installed command-line binary end to end: exit codes, headers,
// file formats and byte-for-byte reproducibility.
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

#ifndef SECBC_CLI_PATH
#error "SECBC_CLI_PATH must point at the secbc binary"
#endif

std::string tmp_path(const std::string& name) {
    return std::string("cli_test_") + name;
}

int run(const std::string& args, const std::string& stdout_file = "",
        const std::string& stderr_file = "") {
    std::string cmd = std::string("\"") + SECBC_CLI_PATH + "\" " + args;
    if (!stdout_file.empty())
        cmd += " > " + stdout_file;
    if (!stderr_file.empty())
        cmd += " 2> " + stderr_file;
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const std::string& path) {
    std::ifstream file(path, std::ios::binary);
    std::stringstream ss;
    ss << file.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream file(path, std::ios::binary);
    file << content;
}

} // namespace

TEST_CASE("cli: region beta sweep emits a CSV header") {
    const std::string out = tmp_path("region.csv");
    CHECK(run("region --mu2 1 --nu2 2 --power 5dB --betas 11", out) == 0);
    const std::string body = slurp(out);
    CHECK(body.rfind("beta,R0,R1\n", 0) == 0);
    CHECK(std::count(body.begin(), body.end(), '\n') == 12);
}

TEST_CASE("cli: unknown flags exit 2 and name the offender") {
    const std::string err = tmp_path("unknown.err");
    CHECK(run("region --frequency 2", "/dev/null", err) == 2);
    CHECK(slurp(err).find("--frequency") != std::string::npos);
}

TEST_CASE("cli: malformed power strings exit 2 and name the flag") {
    const std::string err = tmp_path("power.err");
    CHECK(run("region --mu2 1 --nu2 2 --power bogus", "/dev/null", err) == 2);
    const std::string message = slurp(err);
    CHECK(message.find("--power") != std::string::npos);
    CHECK(message.find("bogus") != std::string::npos);
}

TEST_CASE("cli: identical invocations are byte-identical") {
    const std::string first = tmp_path("ergodic1.csv");
    const std::string second = tmp_path("ergodic2.csv");
    const std::string flags =
        "ergodic --sigma1 1 --sigma2 0.5 --power 5dB --samples 400 --seed 7 --gammas 6 --out ";
    CHECK(run(flags + first) == 0);
    CHECK(run(flags + second) == 0);
    const std::string a = slurp(first);
    CHECK(a == slurp(second));
    CHECK(a.rfind("gamma_ratio,R0,R1,case\n", 0) == 0);
}

TEST_CASE("cli: infeasible constant-common budgets exit 1") {
    const std::string err = tmp_path("infeasible.err");
    CHECK(run("outage --sigma1 1 --sigma2 1 --r0 2 --r1 0.1 --mode constant-common "
              "--power-grid 0.001:0.002:2 --samples 200 --seed 3",
              "/dev/null", err) == 1);
    CHECK(slurp(err).find("expected power") != std::string::npos);
}

TEST_CASE("cli: outage curve with the equal-power baseline") {
    const std::string out = tmp_path("outage.csv");
    CHECK(run("outage --sigma1 10 --sigma2 0.5 --r1 1 --power-grid 0:20dB:5 --samples 500 "
              "--seed 1 --equal-baseline",
              out) == 0);
    const std::string body = slurp(out);
    CHECK(body.rfind("P_dB,outage,equal_outage\n", 0) == 0);
}

TEST_CASE("cli: allocation report is JSON with a case tag") {
    const std::string sc = tmp_path("sc.json");
    write_file(sc, "{\"subchannels\":[{\"mu_sq\":1.0,\"nu_sq\":2.0}]}\n");
    const std::string out = tmp_path("alloc.json");
    CHECK(run("alloc --subchannels " + sc + " --gamma0 1 --gamma1 3 --power 1", out) == 0);
    const std::string body = slurp(out);
    CHECK(body.find("\"case\"") != std::string::npos);
    CHECK(body.find("\"alloc\"") != std::string::npos);
    CHECK(body.find("\"lambda\"") != std::string::npos);
}

TEST_CASE("cli: missing channel files exit 2") {
    const std::string err = tmp_path("missing.err");
    CHECK(run("alloc --subchannels does_not_exist.json", "/dev/null", err) == 2);
    CHECK(slurp(err).find("does_not_exist.json") != std::string::npos);
}

TEST_CASE("cli: discrete evaluator reads a distribution file") {
    const std::string dist = tmp_path("dist.json");
    write_file(dist, R"({"subchannels":[{
        "q":[1.0],
        "u_given_q":[[0.5,0.5]],
        "x_given_u":[[1.0,0.0],[0.0,1.0]],
        "ny":2,"nz":3,
        "yz_given_x":[[0.75,0.0,0.25,0.0,0.0,0.0],[0.0,0.0,0.0,0.0,0.75,0.25]]
    }]})");
    const std::string out = tmp_path("dm.json");
    CHECK(run("dm --dist " + dist, out) == 0);
    const std::string body = slurp(out);
    CHECK(body.find("\"r1\": 0.25") != std::string::npos);
}

TEST_CASE("cli: oracle cross-checks agree") {
    const std::string sc = tmp_path("sc2.json");
    write_file(sc, "{\"subchannels\":[{\"mu_sq\":1.0,\"nu_sq\":2.0}]}\n");
    const std::string out = tmp_path("oracle.json");
    CHECK(run("oracle --check grid --subchannels " + sc +
                  " --gamma0 1 --gamma1 3 --power 1 --resolution 0.01",
              out) == 0);
    const std::string body = slurp(out);
    CHECK(body.find("solver_objective") != std::string::npos);

    CHECK(run("oracle --check two-state --correlation identical --power 1 --mu2 1", out) == 0);
    CHECK(slurp(out).find("\"oracle_rate\": 0.0") != std::string::npos);
}

TEST_CASE("cli: subchannel boundary sweep through the region subcommand") {
    const std::string sc = tmp_path("sc3.json");
    write_file(sc,
               "{\"subchannels\":[{\"mu_sq\":1.0,\"nu_sq\":2.0},"
               "{\"mu_sq\":1.0,\"nu_sq\":0.5}]}\n");
    const std::string out = tmp_path("region_sweep.csv");
    CHECK(run("region --subchannels " + sc + " --power 2 --gammas 5", out) == 0);
    const std::string body = slurp(out);
    CHECK(body.rfind("gamma_ratio,R0,R1,case\n", 0) == 0);
    CHECK(std::count(body.begin(), body.end(), '\n') == 6);
}

TEST_CASE("cli: uniform-power baseline sweep") {
    const std::string out = tmp_path("uniform.csv");
    CHECK(run("ergodic --sigma1 1 --sigma2 1 --samples 300 --seed 5 --uniform "
              "--power-grid 0:6dB:4",
              out) == 0);
    const std::string body = slurp(out);
    CHECK(body.rfind("P_dB,capacity,uniform_rate\n", 0) == 0);
    CHECK(std::count(body.begin(), body.end(), '\n') == 5);
}

TEST_CASE("cli: plan oracle cross-check") {
    const std::string st = tmp_path("states.json");
    write_file(st, R"({"mu_sq":1.0,"nu_sq":1.0,"states":[
        {"h1_sq":1.0,"h2_sq":0.0,"weight":0.5},
        {"h1_sq":2.0,"h2_sq":0.0,"weight":0.5}]})");
    const std::string out = tmp_path("plan.json");
    CHECK(run("oracle --check plan --subchannels " + st + " --r0 0 --r1 1 --power 0.4",
              out) == 0);
    const std::string body = slurp(out);
    CHECK(body.find("\"plan_outage\"") != std::string::npos);
    CHECK(body.find("\"difference\": 0.0") != std::string::npos);
}
