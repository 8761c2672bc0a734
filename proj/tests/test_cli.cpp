#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

namespace {

std::string cli_path() {
    const char* p = std::getenv("ARFCALC_CLI");
    REQUIRE_MESSAGE(p != nullptr, "ARFCALC_CLI must point at the arfcalc binary");
    return p;
}

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run(const std::string& args) {
    std::string cmd = cli_path() + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    while (std::size_t n = fread(buf, 1, sizeof buf, pipe)) out.append(buf, n);
    int rc = pclose(pipe);
    return {WEXITSTATUS(rc), out};
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream f(path);
    f << content;
}

} // namespace

TEST_CASE("lgroups tables") {
    RunResult z = run("lgroups --ring z");
    CHECK(z.exit_code == 0);
    CHECK(z.out.find("Lhat^0 = Z_8") != std::string::npos);
    CHECK(z.out.find("Lhat^1 = Z_2") != std::string::npos);
    CHECK(z.out.find("Lhat^2 = 0") != std::string::npos);
    CHECK(z.out.find("Lhat^3 = Z_2") != std::string::npos);

    RunResult zx = run("lgroups --ring zx");
    CHECK(zx.out.find("Z_8 (+) Z_4[x] (+) Z_2[x]^3") != std::string::npos);
    CHECK(zx.out.find("Lhat^3 = Z_2[x]") != std::string::npos);

    RunResult u = run("lgroups --unil");
    CHECK(u.out.find("UNil_2 = x.Z_2[x]") != std::string::npos);
    CHECK(u.out.find("UNil_3 = Z_4[x] (+) Z_2[x]^3") != std::string::npos);

    // byte-identical reruns
    CHECK(run("lgroups --ring zx").out == zx.out);
}

TEST_CASE("reduce subcommand") {
    write_file("/tmp/arfcalc_t_zero.json", "[[[],[]],[[],[]]]");
    RunResult r = run("reduce --group q3zx -i /tmp/arfcalc_t_zero.json");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "{\"group\":\"q3zx\",\"value\":[]}\n");

    write_file("/tmp/arfcalc_t_m.json", "[[[0,2],[]],[[],[]]]");
    RunResult q0 = run("reduce --group q0zx -i /tmp/arfcalc_t_m.json");
    CHECK(q0.exit_code == 0);
    CHECK(q0.out == "{\"group\":\"q0zx\",\"s\":0,\"t\":[1],\"u1\":[1],\"u2\":[],\"u3\":[]}\n");

    write_file("/tmp/arfcalc_t_bad.json", "{not json");
    CHECK(run("reduce --group q3zx -i /tmp/arfcalc_t_bad.json").exit_code == 2);

    write_file("/tmp/arfcalc_t_odd.json", "[[[],[1]],[[1],[]]]");
    CHECK(run("reduce --group q0zx -i /tmp/arfcalc_t_odd.json").exit_code == 3);

    write_file("/tmp/arfcalc_t_a.json", "{\"a\": 9}");
    CHECK(run("reduce --group q0z -i /tmp/arfcalc_t_a.json").out ==
          "{\"group\":\"q0z\",\"value\":1}\n");

    write_file("/tmp/arfcalc_t_n.json", "[[[1],[]],[[],[]]]");
    CHECK(run("reduce --group q1zx -i /tmp/arfcalc_t_n.json").out ==
          "{\"group\":\"q1zx\",\"value\":1}\n");

    // coefficients beyond int64 arrive as decimal strings
    write_file("/tmp/arfcalc_t_big.json",
               "[[[\"123456789012345678901234567890123456789\"],[]],[[],[]]]");
    CHECK(run("reduce --group q3zx -i /tmp/arfcalc_t_big.json").out ==
          "{\"group\":\"q3zx\",\"value\":[1]}\n");
}

TEST_CASE("arf subcommand") {
    write_file("/tmp/arfcalc_t_cl.json", R"({"psi": [[1,1],[0,1]], "lagrangian": [[1,0]]})");
    RunResult c = run("arf --mode classical -i /tmp/arfcalc_t_cl.json");
    CHECK(c.exit_code == 0);
    CHECK(c.out == "{\"group\":\"arf_z2\",\"value\":1}\n");

    // generalized on (X 1; 0 M) with M = diag(x, 0): class x
    write_file("/tmp/arfcalc_t_gen.json", R"({
      "epsilon": -1,
      "psi": [[[1],[],[1],[]],[[],[0,1],[],[1]],[[],[],[0,1],[]],[[],[],[],[]]],
      "witness": {
        "inclusion": [[[1],[]],[[],[1]],[[],[]],[[],[]]],
        "complement": [[[],[]],[[],[]],[[1],[]],[[],[1]]]
      }
    })");
    RunResult g = run("arf --mode generalized -i /tmp/arfcalc_t_gen.json");
    CHECK(g.exit_code == 0);
    CHECK(g.out == "{\"group\":\"q3zx\",\"value\":[0,1]}\n");

    // linking on the canonical order-2 resolution of M = diag(2, 0)
    write_file("/tmp/arfcalc_t_link.json", R"({
      "d": [[[2],[]],[[],[2]]],
      "delta": [[[1],[]],[[],[0,1]]],
      "phi": [[[2],[]],[[],[]]],
      "mu": [[1],[0,1]]
    })");
    RunResult l = run("arf --mode linking -i /tmp/arfcalc_t_link.json");
    CHECK(l.exit_code == 0);
    CHECK(l.out == "{\"group\":\"q0zx\",\"s\":2,\"t\":[],\"u1\":[],\"u2\":[],\"u3\":[]}\n");

    // precondition violation: mu values not matching delta
    write_file("/tmp/arfcalc_t_link_bad.json", R"({
      "d": [[[2],[]],[[],[2]]],
      "delta": [[[1],[]],[[],[0,1]]],
      "phi": [[[2],[]],[[],[]]],
      "mu": [[],[0,1]]
    })");
    CHECK(run("arf --mode linking -i /tmp/arfcalc_t_link_bad.json").exit_code == 3);
}

TEST_CASE("boundary subcommand") {
    write_file("/tmp/arfcalc_t_a1.json", "{\"a\": 1}");
    RunResult b3 = run("boundary --n 3 --ring z -i /tmp/arfcalc_t_a1.json");
    CHECK(b3.exit_code == 0);
    CHECK(b3.out == "{\"epsilon\":-1,\"psi\":[[[1],[1]],[[],[1]]]}\n");

    RunResult b1 = run("boundary --n 1 --ring z -i /tmp/arfcalc_t_a1.json");
    CHECK(b1.out == "{\"epsilon\":1,\"psi\":[[[],[-1]],[[],[-2]]]}\n");

    write_file("/tmp/arfcalc_t_a0.json", "{\"a\": 0}");
    RunResult b0 = run("boundary --n 0 --ring z -i /tmp/arfcalc_t_a0.json");
    CHECK(b0.exit_code == 0);
    CHECK(b0.out.find("\"G\":[[[1]],[[]]]") != std::string::npos);
}

TEST_CASE("eval-linking subcommand") {
    write_file("/tmp/arfcalc_t_ev.json", R"({
      "d": [[[2]]], "delta": [[[]]], "phi": [[[]]],
      "x": {"x1": [[1]], "x0": [[]]},
      "y": {"y1": [[]], "y0": [[1]]}
    })");
    RunResult e = run("eval-linking -i /tmp/arfcalc_t_ev.json");
    CHECK(e.exit_code == 0);
    CHECK(e.out == "{\"lambda_xy\":{\"denom_exp\":1,\"num\":[1]},\"mu_x\":{\"denom_exp\":0,\"num\":[]}}\n");
}

TEST_CASE("oracle subcommand") {
    RunResult q3 = run("oracle --suite q3zx --trials 200 --seed 7");
    CHECK(q3.exit_code == 0);
    CHECK(q3.out == "suite=q3zx seed=7 trials=200 failures=0 PASS\n");
    RunResult arf = run("oracle --suite arf --max-dim 2 --trials 20 --seed 7");
    CHECK(arf.exit_code == 0);
}
