#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

using nlohmann::json;

namespace {

struct RunResult {
    int rc = -1;
    std::string out; // stdout and stderr combined
};

// Runs the CLI with the given argument string through the shell.
RunResult run_cli(const std::string& args) {
    const std::string cmd = std::string(FIBSUM_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult result;
    std::array<char, 4096> buf{};
    std::size_t got = 0;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) {
        result.out.append(buf.data(), got);
    }
    const int status = pclose(pipe);
    result.rc = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

bool contains(const std::string& haystack, const std::string& needle) {
    return haystack.find(needle) != std::string::npos;
}

} // namespace

TEST_CASE("fib prints sequence values") {
    CHECK(run_cli("fib 10").out == "55\n");
    CHECK(run_cli("fib 10 --lucas").out == "123\n");
    CHECK(run_cli("fib 10 --seed=3,-2").out == "-8\n");
    CHECK(run_cli("fib -- -7").out == "13\n");

    const RunResult r = run_cli("fib 9 --json");
    CHECK(r.rc == 0);
    const json parsed = json::parse(r.out);
    CHECK(parsed["n"] == 9);
    CHECK(parsed["sequence"] == "fibonacci");
    CHECK(parsed["value"] == "34");

    CHECK(run_cli("fib 5 --lucas --seed=1,1").rc == 2); // mutually exclusive
    CHECK(run_cli("fib notanumber").rc == 2);
}

TEST_CASE("identities reports a pass table") {
    const RunResult all = run_cli("identities --grid 1");
    CHECK(all.rc == 0);
    CHECK(contains(all.out, "PASS"));
    CHECK(contains(all.out, "all identities hold"));
    CHECK(!contains(all.out, "FAIL\n"));

    const RunResult one = run_cli("identities --name gfl --grid 2 --json");
    CHECK(one.rc == 0);
    const json parsed = json::parse(one.out);
    CHECK(parsed["all_passed"] == true);
    CHECK(parsed["reports"].size() == 1);
    CHECK(parsed["reports"][0]["name"] == "gfl");

    CHECK(run_cli("identities --name nosuch").rc == 2);
}

TEST_CASE("sum quad compares brute force against the closed form") {
    const RunResult both = run_cli("sum quad --a=0 --b=1 --c=0 --d=1 --n=10");
    CHECK(both.rc == 0);
    CHECK(contains(both.out, "brute  = 4895"));
    CHECK(contains(both.out, "closed = 4895"));
    CHECK(contains(both.out, "equal"));

    const RunResult brute =
        run_cli("sum quad --a=1 --b=1 --c=1 --d=1 --m=1 --x=1/2 --n=4 --brute");
    CHECK(brute.rc == 0);

    const RunResult js = run_cli(
        "sum quad --a=0 --b=1 --c=0 --d=1 --m=2 --x=-1/3 --n=6 "
        "--gseed=2,1 --hseed=1,1 --json");
    CHECK(js.rc == 0);
    const json parsed = json::parse(js.out);
    CHECK(parsed["equal"] == true);
    CHECK(parsed["brute"] == parsed["closed"]);

    // Singular weight: the alternating product sum has a limit formula at
    // m = 0 but none is available at m = 1.
    CHECK(run_cli("sum quad --a=0 --b=1 --c=1 --d=1 --x=-1 --m=0 --n=5").rc == 0);
    CHECK(run_cli("sum quad --a=0 --b=1 --c=1 --d=1 --x=-1 --m=1 --n=5").rc == 3);

    CHECK(run_cli("sum quad --x=1/0 --n=1").rc == 2);
    CHECK(run_cli("sum quad --x=abc --n=1").rc == 2);
    CHECK(run_cli("sum quad --n=1 --brute --closed").rc == 2);
}

TEST_CASE("sum cubic handles every variant") {
    const RunResult ppp = run_cli("sum cubic --variant ppp --n=3");
    CHECK(ppp.rc == 0);
    CHECK(contains(ppp.out, "brute  = 10"));
    CHECK(contains(ppp.out, "equal"));

    for (const std::string v : {"ppm", "pmm", "double"}) {
        const RunResult r = run_cli("sum cubic --variant " + v +
                                    " --p=1 --q=-1 --r=2 --x=2 --n=5 "
                                    "--gseed=2,1 --hseed=1,1 --kseed=3,-2 --json");
        CHECK(r.rc == 0);
        CHECK(json::parse(r.out)["equal"] == true);
    }

    CHECK(run_cli("sum cubic --variant diagonal --n=1").rc == 2);
}

TEST_CASE("gf prints exact series values and residuals") {
    const RunResult plain = run_cli("gf quad --a=0 --b=1 --c=0 --d=1 --x=1/4");
    CHECK(plain.rc == 0);
    CHECK(contains(plain.out, "value = 12/25"));

    const RunResult checked =
        run_cli("gf quad --a=0 --b=1 --c=0 --d=1 --x=1/4 --check 12 --json");
    CHECK(checked.rc == 0);
    const json parsed = json::parse(checked.out);
    CHECK(parsed["value"] == "12/25");
    CHECK(parsed["check_n"] == 12);
    CHECK(parsed["partial"] == "2003445/4194304");
    CHECK(parsed["residual"] == "245523/104857600");

    CHECK(run_cli("gf quad --x=1").rc == 3);   // divergent
    CHECK(run_cli("gf cubic --x=1/2").rc == 3);

    const RunResult cubic = run_cli("gf cubic --variant ppp --x=1/8 --check 6 --json");
    CHECK(cubic.rc == 0);
    CHECK(contains(json::parse(cubic.out)["residual"].get<std::string>(), "/"));
}

TEST_CASE("catalog verify re-checks records") {
    const RunResult one = run_cli("catalog verify --id 12.04 --grid 1");
    CHECK(one.rc == 0);
    CHECK(contains(one.out, "12.04"));
    CHECK(contains(one.out, "all passed"));

    const RunResult js = run_cli("catalog verify --id 11.01 --grid 0 --json");
    CHECK(js.rc == 0);
    const json parsed = json::parse(js.out);
    CHECK(parsed["all_passed"] == true);
    CHECK(parsed["records"].size() == 1);
    CHECK(parsed["records"][0]["id"] == "11.01");
    CHECK(parsed["records"][0]["checked"].get<long long>() > 0);

    CHECK(run_cli("catalog verify --id 99.99").rc == 2);
    CHECK(run_cli("catalog verify --file /nonexistent/path").rc == 2);
}

TEST_CASE("catalog verify fails with exit code 1 on a false record") {
    const std::string path = "cli_false_catalog.json";
    {
        json record{{"constraint", "1"},
                    {"id", "11.01"},
                    {"lhs", "F[n]"},
                    {"note", ""},
                    {"rhs", "F[n] + 1"},
                    {"seeds", json::object()},
                    {"vars", {{"n", {0, 2}}}}};
        std::ofstream file(path);
        file << json::array({record}).dump(2) << "\n";
    }
    const RunResult r = run_cli("catalog verify --file " + path + " --grid=-1");
    CHECK(r.rc == 1);
    CHECK(contains(r.out, "FAIL"));
    CHECK(contains(r.out, "first failure"));
    std::remove(path.c_str());
}

TEST_CASE("mine reports reductions") {
    const RunResult direct =
        run_cli("mine --p 1 --lhs \"F[q + 2] - F[q + 1]\" --budget 1");
    CHECK(direct.rc == 0);
    CHECK(contains(direct.out, "1 * F[q]"));
    CHECK(contains(direct.out, "grid=5 confirmed=20"));

    const RunResult pair = run_cli(
        "mine --p 2 --lhs \"F[q1 + 2] * F[q2] - F[q1 + 1] * F[q2]\" "
        "--budget 1 --json");
    CHECK(pair.rc == 0);
    const json parsed = json::parse(pair.out);
    CHECK(parsed["solutions"].size() == 1);
    CHECK(parsed["solutions"][0]["terms"][0]["coeff"] == "1");
    CHECK(parsed["solutions"][0]["terms"][0]["offsets"] == json::array({0, 0}));
    CHECK(parsed["solutions"][0]["grid_points"] == 25);

    const RunResult none = run_cli("mine --p 1 --lhs \"F[q + 2] + F[q]\" --budget 1");
    CHECK(none.rc == 0);
    CHECK(contains(none.out, "no reduction found"));

    const RunResult enumMode = run_cli(
        "mine --p 1 --lhs \"F[q + 3] + F[q]\" --budget 1 --mode enum "
        "--coeffs=-3..3 --samples 5");
    CHECK(enumMode.rc == 0);
    CHECK(contains(enumMode.out, "2 * F[q + 2]"));
    CHECK(contains(enumMode.out, "confirmed=5"));

    CHECK(run_cli("mine --p 1 --lhs \"F[q]\" --budget 1").rc == 2);
    CHECK(run_cli("mine --p 1 --lhs \"F[q + 1] - F[q]\" --budget 1 --mode weird").rc == 2);
    CHECK(run_cli("mine --p 1 --lhs \"G[q]\" --budget 1").rc == 2);
    CHECK(run_cli("mine --lhs \"F[q+1]-F[q]\" --offsets 3..-3 --budget 1").rc == 2);
}

TEST_CASE("parse validates and canonicalizes expressions") {
    const RunResult canonical = run_cli("parse \"sum(k=0..n, x^k*G[a+b*k])\"");
    CHECK(canonical.rc == 0);
    CHECK(canonical.out == "sum(k = 0..n, x^k * G[a + b * k])\n");

    const RunResult check = run_cli("parse \"F[q + 1]\" --check");
    CHECK(check.rc == 0);
    CHECK(check.out.empty());

    const RunResult bad = run_cli("parse \"F[q +\" --check");
    CHECK(bad.rc == 2);
    CHECK(contains(bad.out, "syntax error"));

    const RunResult js = run_cli("parse \"1/2 * (F[n] + L[n])\" --json");
    CHECK(js.rc == 0);
    CHECK(json::parse(js.out)["canonical"] == "1/2 * (F[n] + L[n])");
}

TEST_CASE("usage errors exit with code 2") {
    CHECK(run_cli("").rc == 2);
    CHECK(run_cli("nosuchverb").rc == 2);
    CHECK(run_cli("sum").rc == 2);
    CHECK(run_cli("--help").rc == 0);
    CHECK(run_cli("sum quad --help").rc == 0);
}
