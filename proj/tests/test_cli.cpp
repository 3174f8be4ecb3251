#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#ifndef STABLECOH_CLI_PATH
#error "STABLECOH_CLI_PATH must point at the built binary"
#endif

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    std::string out_file = std::string(std::getenv("TMPDIR") ? std::getenv("TMPDIR") : "/tmp") +
                           "/stablecoh_cli_test_out.txt";
    std::string cmd = std::string(STABLECOH_CLI_PATH) + " " + args + " > " + out_file + " 2>/dev/null";
    int status = std::system(cmd.c_str());
    std::ifstream f(out_file);
    std::ostringstream ss;
    ss << f.rdbuf();
    std::remove(out_file.c_str());
    return RunResult{WEXITSTATUS(status), ss.str()};
}

}  // namespace

TEST_CASE("cohomology with oracle agreement") {
    auto r = run_cli("cohomology --group q8 --prime 2 --max-degree 4 --oracle --format json");
    REQUIRE(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["report"]["betti"] == nlohmann::json::array({1, 2, 2, 1, 1}));
    CHECK(j["report"]["oracle_agrees"] == true);
    CHECK(j["config"]["prime"] == 2);
    CHECK(j["tool"] == "stablecoh");
}

TEST_CASE("stable limit dims for the rank-two Dickson category") {
    auto r = run_cli("stable --preset aut --group klein4 --prime 2 --max-degree 6 --format json");
    REQUIRE(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["report"]["limit_dims"] == nlohmann::json::array({1, 0, 1, 1, 1, 1, 2}));
}

TEST_CASE("conjugator verification block") {
    auto r = run_cli("conjugator --group klein4 --phi \"a:b,b:a\" --format json");
    REQUIRE(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["report"]["verified"] == true);
    CHECK(j["report"]["witness"].get<std::string>().size() > 0);
}

TEST_CASE("validation errors exit with status 1 and name the offender") {
    CHECK(run_cli("cohomology --group nosuchgroup --max-degree 3").exit_code == 1);
    CHECK(run_cli("stable --input /nonexistent.json --max-degree 3").exit_code == 1);
    CHECK(run_cli("cohomology --group z3 --prime 2 --max-degree 3").exit_code == 1);
    CHECK(run_cli("stable --preset aut --group klein4 --input also.json").exit_code == 1);
    CHECK(run_cli("conjugator --group klein4 --phi \"a:b\"").exit_code == 1);

    /* a category file violating the standing conditions */
    std::string path = "/tmp/stablecoh_bad_category.json";
    {
        std::ofstream f(path);
        f << R"json({"prime": 2, "mode": "subgroup",
                     "ambient": {"degree": 4, "generators": ["(1 2 3 4)"]},
                     "objects": [{"name": "Q1", "generators": ["(1 3)(2 4)"]}],
                     "morphisms": [{"from": "P", "to": "P", "images": ["(1 2 3 4)"]}]})json";
    }
    auto r = run_cli("stable --input " + path + " --max-degree 3");
    CHECK(r.exit_code == 1);
    std::remove(path.c_str());
}

TEST_CASE("gamma emits a presentation that the quotient verifies") {
    auto r = run_cli("gamma --preset cu --group z4 --max-degree 4 --format json");
    REQUIRE(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["report"]["edge_count"] == 7);
    CHECK(j["report"]["gamma_dims"][0] == 1);

    auto q = run_cli("quotient --preset cu --group z4 --format json");
    REQUIRE(q.exit_code == 0);
    auto jq = nlohmann::json::parse(q.out);
    CHECK(jq["report"]["relations_hold"] == true);
    CHECK(jq["report"]["order_divides_bound"] == true);
}

TEST_CASE("repeated runs are byte-identical") {
    for (const std::string& args :
         {std::string("stable --preset aut --group klein4 --prime 2 --max-degree 6 --format json"),
          std::string("cohomology --group q8 --max-degree 4 --oracle --format json"),
          std::string("finiteness --preset cu --group q8 --max-degree 8 --format json")}) {
        auto r1 = run_cli(args);
        auto r2 = run_cli(args);
        CHECK(r1.exit_code == 0);
        CHECK(r1.out == r2.out);
    }
}

TEST_CASE("worker count never changes output bytes") {
    std::string args = "stable --preset cu --group q8 --max-degree 6 --format json";
    setenv("STABLECOH_THREADS", "1", 1);
    auto serial = run_cli(args);
    setenv("STABLECOH_THREADS", "8", 1);
    auto parallel = run_cli(args);
    unsetenv("STABLECOH_THREADS");
    CHECK(serial.exit_code == 0);
    CHECK(serial.out == parallel.out);
}
