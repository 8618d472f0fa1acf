#include "doctest.h"
#include "qsp/cli.hpp"

#include <cstdio>
#include <sstream>
#include <sys/wait.h>

using namespace qsp;

namespace {

struct Run {
    int code = -1;
    std::string out;
};

// Runs the installed binary; stderr is discarded.
Run run(const std::string& args) {
    const std::string cmd = std::string(QSP_CLI_PATH) + " " + args + " 2>/dev/null";
    Run r;
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
    const int st = pclose(p);
    r.code = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
    return r;
}

}  // namespace

TEST_CASE("argument parsing") {
    const Command c = parse_args({"poly", "--family", "cheby", "--n", "3", "--a", "-2", "--format", "latex"});
    CHECK(c.sub == Subcommand::poly);
    CHECK(c.family == "cheby");
    CHECK(c.n == 3);
    CHECK_FALSE(c.m.has_value());
    CHECK(c.a == -2);
    CHECK(c.format == Format::latex);

    const Command v = parse_args({"verify", "--suite", "all"});
    CHECK(v.sub == Subcommand::verify);
    CHECK(v.suite == "all");
    CHECK(v.suite_options.weights == kDefaultWeights);
    CHECK_FALSE(v.suite_options.aij_range.has_value());

    const Command w = parse_args({"verify", "--suite", "pn", "--aij-range", "0..-2", "--weights", "1:1,2:1"});
    CHECK(*w.suite_options.aij_range == std::vector<int>{0, -1, -2});
    CHECK(w.suite_options.weights == std::vector<std::pair<int, int>>{{1, 1}, {2, 1}});

    CHECK_THROWS_AS(parse_args({"poly", "--family", "nope"}), UsageError);
    CHECK_THROWS_AS(parse_args({"poly", "--family", "cheby", "--bogus"}), UsageError);
    CHECK_THROWS_AS(parse_args({"relation", "--a", "3"}), UsageError);
    CHECK_THROWS_AS(parse_args({"verify", "--weights", "1-1"}), UsageError);
    CHECK_THROWS_AS(parse_args({"verify", "--mutate", "other"}), UsageError);
    CHECK_THROWS_AS(parse_args({}), UsageError);
    CHECK_THROWS_AS(parse_args({"--help"}), HelpRequested);
    CHECK(parse_int_range("-3") == std::vector<int>{-3});
    CHECK(parse_int_range("1..3") == std::vector<int>{1, 2, 3});
}

TEST_CASE("in-process driver") {
    std::ostringstream out, err;
    CHECK(run_cli({"poly", "--family", "hermite", "--n", "2"}, out, err) == 0);
    CHECK(out.str() == "4*x^2 + (q - 1)\n");
    std::ostringstream o2, e2;
    CHECK(run_cli({"poly", "--family", "rho"}, o2, e2) == 2);
    CHECK(e2.str().find("--m") != std::string::npos);
}

TEST_CASE("poly output") {
    const Run r = run("poly --family cheby --n 2 --a -1 --format latex");
    CHECK(r.code == 0);
    CHECK(r.out == "4 x^{2} - \\frac{q^{2}}{q^{2} + 1}\n");
    const Run j = run("poly --family P --N 3 --format json");
    CHECK(j.code == 0);
    const Json doc = Json::parse(j.out);
    CHECK(doc["family"] == "P");
    CHECK(doc["params"]["N"] == 3);
    CHECK(doc["poly"].contains("terms"));
}

TEST_CASE("exit codes") {
    CHECK(run("poly --family nope").code == 2);
    CHECK(run("relation --case III --a -1 --di 1 --dj 2").code == 2);
    CHECK(run("--help").code == 0);
    CHECK(run("relation --case II --a -2").code == 0);
    CHECK(run("relation --examples").code == 0);
    CHECK(run("verify --suite star-case2 --aij-range 0..-4").code == 0);
    const Run m = run("verify --suite theorem-case1 --aij-range 0..-1 --mutate relation-coeff");
    CHECK(m.code == 1);
    CHECK(m.out.find("FAIL") != std::string::npos);
}

TEST_CASE("reports are deterministic and follow the schema") {
    const std::string args = "verify --suite pn --format json";
    const Run a = run(args), b = run(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    const Json j = Json::parse(a.out);
    CHECK(j["suite"] == "pn");
    CHECK(j["pass"] == true);
    REQUIRE(j["points"].is_array());
    for (const auto& p : j["points"]) {
        CHECK(p["params"].is_string());
        CHECK(p["pass"].is_boolean());
    }
    const Run rel = run("relation --case I --a -3 --format json");
    const Json r = Json::parse(rel.out);
    CHECK(r["verified"] == true);
    CHECK(r["cartan"]["aji"] == -3);
}
