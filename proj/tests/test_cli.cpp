#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>

// EGYPTIAN_CLI_PATH is injected by the build; every test shells out to the
// real binary so the full parse -> run -> render -> exit path is covered.

namespace {

struct CliResult {
    int code = -1;
    std::string out;
};

CliResult run_cli(const std::string& args, const std::string& env_prefix = "") {
    std::string cmd;
    if (!env_prefix.empty()) cmd += env_prefix + " ";
    cmd += EGYPTIAN_CLI_PATH;
    cmd += " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    CliResult res;
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) res.out.append(buf, got);
    int status = pclose(pipe);
    res.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("reps golden") {
    const std::string want =
        "record egyptian/1\n"
        "command reps data/unit2.json 1/2\n"
        "problem f0f83da325c861d9\n"
        "exact true\n"
        "nodes 5\n"
        "count 3\n"
        "rep (1 3) (1 6)\n"
        "rep (1 4) (1 4)\n"
        "rep (1 6) (1 3)\n"
        "end\n";
    CliResult res = run_cli("reps data/unit2.json 1/2");
    CHECK(res.code == 0);
    CHECK(res.out == want);

    // worker count is not part of the record and cannot change it
    CHECK(run_cli("reps data/unit2.json 1/2 --workers 4").out == want);
    CHECK(run_cli("reps data/unit2.json 1/2").out == want);  // rerun, same bytes
}

TEST_CASE("signed golden with an infinite family") {
    const std::string want =
        "record egyptian/1\n"
        "command signed data/unit2.json 0\n"
        "problem f0f83da325c861d9\n"
        "exact true\n"
        "budget-limit 1000000\n"
        "nodes 1\n"
        "outcome infinite\n"
        "witness-positions 0 1\n"
        "witness-rho 1\n"
        "member (1 1 +) (1 1 -)\n"
        "member (1 2 +) (1 2 -)\n"
        "member (1 3 +) (1 3 -)\n"
        "end\n";
    CliResult res = run_cli("signed data/unit2.json 0");
    CHECK(res.code == 0);
    CHECK(res.out == want);
}

TEST_CASE("gap golden") {
    const std::string want =
        "record egyptian/1\n"
        "command gap data/unit2.json 1/2\n"
        "problem f0f83da325c861d9\n"
        "exact true\n"
        "budget-limit 1000000\n"
        "nodes 16\n"
        "c 1/2\n"
        "predecessor 10/21\n"
        "witness (1 3) (1 7)\n"
        "delta 1/42\n"
        "in-set true\n"
        "trace 0 10/21 21/5\n"
        "end\n";
    CliResult res = run_cli("gap data/unit2.json 1/2");
    CHECK(res.code == 0);
    CHECK(res.out == want);
}

TEST_CASE("avoid golden, certified and unknown") {
    const std::string certified =
        "record egyptian/1\n"
        "command avoid data/unit2.json 2/5 3/5\n"
        "problem f0f83da325c861d9\n"
        "exact true\n"
        "budget-limit 1000000\n"
        "nodes 18\n"
        "status certified\n"
        "interval 7/12 13/22\n"
        "bounding (1 2) (1 11)\n"
        "end\n";
    CliResult res = run_cli("avoid data/unit2.json 2/5 3/5");
    CHECK(res.code == 0);
    CHECK(res.out == certified);

    const std::string unknown =
        "record egyptian/1\n"
        "command avoid data/unit2.json 0 1/1000000000\n"
        "problem f0f83da325c861d9\n"
        "exact true\n"
        "budget-limit 10\n"
        "nodes 1\n"
        "status unknown\n"
        "end\n";
    CliResult starved = run_cli("avoid data/unit2.json 0 1/1000000000 --budget 10");
    CHECK(starved.code == 3);
    CHECK(starved.out == unknown);
}

TEST_CASE("signed budget exhaustion still emits its record") {
    const std::string want =
        "record egyptian/1\n"
        "command signed data/unit3.json 0\n"
        "problem e5fac8e2fdff0ac3\n"
        "exact true\n"
        "budget-limit 20000\n"
        "nodes 20001\n"
        "outcome budget-exhausted\n"
        "count 2023\n"
        "end\n";
    CliResult res = run_cli("signed data/unit3.json 0 --budget 20000");
    CHECK(res.code == 3);
    CHECK(res.out == want);
}

TEST_CASE("expand goldens") {
    CliResult distinct = run_cli("expand --mode distinct 2/3");
    CHECK(distinct.code == 0);
    CHECK(distinct.out ==
          "record egyptian/1\n"
          "command expand 2/3\n"
          "problem 60bb7b22bf3ef850\n"
          "exact true\n"
          "budget-limit 1000000\n"
          "mode distinct\n"
          "value 2/3\n"
          "sum 1/2 + 1/6\n"
          "length 2\n"
          "distinct true\n"
          "end\n");

    CliResult extend = run_cli("expand --mode extend:3 1/2");
    CHECK(extend.code == 0);
    CHECK(extend.out ==
          "record egyptian/1\n"
          "command expand 1/2\n"
          "problem 3fff1a5020d6034b\n"
          "exact true\n"
          "budget-limit 1000000\n"
          "mode extend:3\n"
          "value 1/2\n"
          "sum 1/3 + 1/7 + 1/42\n"
          "length 3\n"
          "distinct true\n"
          "end\n");

    CliResult greedy = run_cli("expand --mode greedy 5/6");
    CHECK(greedy.code == 0);
    CHECK(greedy.out ==
          "record egyptian/1\n"
          "command expand 5/6\n"
          "problem 6399b2503545dab3\n"
          "exact true\n"
          "budget-limit 1000000\n"
          "mode greedy\n"
          "value 5/6\n"
          "sum 1/2 + 1/3\n"
          "length 2\n"
          "distinct true\n"
          "end\n");

    // sum text given as separate words is joined with single spaces
    CliResult words = run_cli("expand --mode distinct 1/2 + 1/3 + 1/3");
    CHECK(words.code == 0);
    CHECK(words.out ==
          "record egyptian/1\n"
          "command expand 1/2 + 1/3 + 1/3\n"
          "problem 154b90820839c0ab\n"
          "exact true\n"
          "budget-limit 1000000\n"
          "mode distinct\n"
          "value 7/6\n"
          "sum 1/1 + 1/7 + 1/42\n"
          "length 3\n"
          "distinct true\n"
          "end\n");
}

TEST_CASE("exit codes for bad input") {
    CHECK(run_cli("reps data/no_such_file.json 1/2").code == 2);
    CHECK(run_cli("reps data/unit2.json not-a-number").code == 2);
    CHECK(run_cli("").code == 2);
    CHECK(run_cli("reps data/unit2.json 1/2 --frobnicate").code == 2);
    CHECK(run_cli("gap data/unit2.json 0").code == 2);
    CHECK(run_cli("avoid data/unit2.json 2/3 1/3").code == 2);
    CHECK(run_cli("expand --mode distinct 1/2 + 1/2").code == 4);
    CHECK(run_cli("expand --mode warp 1/2").code == 2);
}

TEST_CASE("budget comes from the flag, then the environment") {
    CliResult env = run_cli("signed data/unit3.json 0", "EGYPTIAN_BUDGET=20000");
    CHECK(env.code == 3);
    CHECK(env.out == run_cli("signed data/unit3.json 0 --budget 20000").out);

    CliResult both = run_cli("gap data/unit2.json 1/2 --budget 1000", "EGYPTIAN_BUDGET=55");
    CHECK(both.code == 0);
    CHECK(both.out.find("budget-limit 1000\n") != std::string::npos);
}

TEST_CASE("--output moves the record to a file") {
    const std::string path = "/tmp/egyptian_cli_test_record.txt";
    std::remove(path.c_str());
    CliResult res = run_cli("gap data/unit2.json 1/2 --output " + path);
    CHECK(res.code == 0);
    CHECK(res.out.empty());
    CHECK(slurp(path) == run_cli("gap data/unit2.json 1/2").out);
    std::remove(path.c_str());
}

}  // TEST_SUITE
