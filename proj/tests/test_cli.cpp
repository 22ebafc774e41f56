#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>

#include <json.hpp>

#include "cli_runner.hpp"

using cliffex::testing::first_line;
using cliffex::testing::run_cli;

TEST_CASE("appell subcommand") {
    auto r = run_cli("appell --n 3 --k 1");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "x0 + 1/3 r w\nk c_n^k\n0 1\n1 1/3\n");

    r = run_cli("appell --n 3 --k 0");
    CHECK(first_line(r.out) == "1");

    r = run_cli("appell --n 3 --k 2");
    CHECK(first_line(r.out) == "x0^2 + 2/3 x0 r w - 1/3 r^2");

    r = run_cli("appell --n 4 --k 1");
    CHECK(r.exit_code != 0);

    r = run_cli("appell --n 5 --k 3 --format json");
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["c"][3]["c"] == "3/35");
    CHECK(j["polynomial"]["n"] == 5);
}

TEST_CASE("even dimension error message") {
    const std::string cmd = std::string(CLIFFEX_CLI_PATH) + " appell --n 4 --k 1 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[512];
    while (fgets(buf, sizeof buf, pipe) != nullptr) {
        out += buf;
    }
    CHECK(pclose(pipe) != 0);
    CHECK(out.find("n must be odd (> 1)") != std::string::npos);
}

TEST_CASE("fueter subcommand") {
    auto r = run_cli("fueter --n 3 --k 3");
    CHECK(r.exit_code == 0);
    CHECK(first_line(r.out) == first_line(run_cli("appell --n 3 --k 1").out));
    CHECK(r.out.find("alpha = -1/6") != std::string::npos);

    r = run_cli("fueter --n 3 --k 1");
    CHECK(first_line(r.out) == "0");
    CHECK(r.out.find("k < n-1") != std::string::npos);

    r = run_cli("fueter --n 5 --k 4 --raw");
    CHECK(first_line(r.out) == "8");

    CHECK(run_cli("fueter --n 5 --k 4 --raw --normalized").exit_code != 0);
}

TEST_CASE("verify suites") {
    auto r = run_cli("verify theorem1 --n 3 --kmax 15");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("PASS") != std::string::npos);

    r = run_cli("verify recurrence --series exp --n 3 --K 40");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("PASS gamma=1") != std::string::npos);

    r = run_cli("verify recurrence --series geometric --n 3 --K 10");
    CHECK(r.exit_code == 1);
    CHECK(r.out.find("FAIL first violation at k=1") != std::string::npos);

    for (const char* suite : {"monogenic", "appell-property", "closed-form"}) {
        CAPTURE(suite);
        CHECK(run_cli(std::string("verify ") + suite).exit_code == 0);
    }
    CHECK(run_cli("verify nonsense").exit_code != 0);
}

TEST_CASE("fault injection makes verify exit nonzero") {
    CHECK(run_cli("verify theorem1 --mutate-c 0").exit_code == 1);
    CHECK(run_cli("verify monogenic --mutate-c 0").exit_code == 1);
    CHECK(run_cli("verify appell-property --mutate-c 0").exit_code == 1);
    CHECK(run_cli("verify theorem1 --mutate-c 5").exit_code == 1);
    CHECK(run_cli("verify monogenic --mutate-c 5").exit_code == 1);
}

TEST_CASE("compare subcommand emits the report schema") {
    auto r = run_cli("compare --n 3 --series exp --K 40");
    CHECK(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["all_equal"] == true);
    CHECK(j["coefficients"].size() == 41);
    CHECK(j["coefficients"][40]["tau"] == j["coefficients"][40]["eta"]);

    r = run_cli("compare --n 3 --series geometric --K 10");
    j = nlohmann::json::parse(r.out);
    CHECK(j["all_equal"] == false);
    CHECK(j["first_mismatch"] == 1);
    CHECK(j["first_violation"]["k"] == 1);
}

TEST_CASE("coefficient file input") {
    const auto path = std::filesystem::temp_directory_path() / "cliffex_cli_coeffs.txt";
    {
        std::ofstream out(path);
        out << "# cosh, first terms\n1\n0\n1/2\n0\n1/24\n0\n1/720\n";
    }
    auto r = run_cli("verify recurrence --n 3 --K 6 --coeff-file " + path.string());
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("gamma=1") != std::string::npos);
    std::filesystem::remove(path);
    CHECK(run_cli("verify recurrence --n 3 --coeff-file " + path.string()).exit_code != 0);
}

TEST_CASE("eval subcommand") {
    auto r = run_cli("eval --closed-form --n 3 --gamma 1 --init 1,1 --z 1");
    CHECK(r.exit_code == 0);
    CHECK(std::abs(std::stod(r.out) - 2.718281828459045) <= 1e-12);

    r = run_cli("eval --closed-form --n 3 --gamma 1 --init 1,1 --z 0 --exact --terms 5");
    CHECK(first_line(r.out) == "1");

    r = run_cli("eval --series sinh --n 3 --point 0,1,0,0");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find(" e1") != std::string::npos);
    CHECK(r.out.find("e2") == std::string::npos);

    r = run_cli("eval --series z^1 --n 3 --point 0,1,0,0 --exact");
    CHECK(first_line(r.out) == "1/3 e1");

    CHECK(run_cli("eval --closed-form --n 3 --init 1 --z 1").exit_code != 0);
    CHECK(run_cli("eval --series exp --n 3 --point 1,2").exit_code != 0);
}

TEST_CASE("hypergeometric cap is read from the environment") {
    CHECK(run_cli("eval --closed-form --n 3 --gamma 1 --init 1,1 --z 2", "CLIFFEX_LMAX=2").exit_code != 0);
    CHECK(run_cli("eval --closed-form --n 3 --gamma 1 --init 1,1 --z 2", "CLIFFEX_LMAX=200").exit_code == 0);
}

TEST_CASE("output is deterministic") {
    for (const char* args : {"compare --n 5 --series sinh --K 20", "appell --n 7 --k 9", "verify closed-form"}) {
        CHECK(run_cli(args).out == run_cli(args).out);
    }
}
