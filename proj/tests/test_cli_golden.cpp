// Golden tests for the CLI: every output byte is part of the contract.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run_cli(const std::string& args, int threads = 1) {
    const std::string cmd = "MUKAI_WALLS_THREADS=" + std::to_string(threads) + " " +
                            std::string(MUKAI_CLI_PATH) + " " + args + " 2>/tmp/mukai_cli_err.txt";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof(buf), pipe)) > 0) out.append(buf, n);
    const int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::string s((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return s;
}

} // namespace

TEST_CASE("charge golden") {
    const auto r = run_cli("charge --h2 32 --v 2,32,8 --point 0,1/2");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "{\"im\":\"16/1\",\"re\":\"0/1\"}\n");
}

TEST_CASE("destab golden: the three even-s candidates at s = 8") {
    const auto r = run_cli("destab --h2 32 --v 2,32,8 --max-rank 4 --format json");
    CHECK(r.exit_code == 0);
    const std::string expected =
        "[{\"a2h2\":\"8/1\",\"conditions\":[\"hyperelliptic\"],\"d0\":14,\"options\":[{\"conditions\":[\"hyperelliptic\"],\"delta0_sq\":6,\"flags\":[{\"aux\":\"H-2D0\",\"hdeg\":4,\"meaning\":\"elliptic_pencil_deg2\",\"sq\":0}],\"omega_sq\":\"-1/8\",\"verdict\":\"conditional\"}],\"r0\":1,\"s0\":4,\"verdict\":\"conditional\"},"
        "{\"a2h2\":\"8/1\",\"conditions\":[],\"d0\":15,\"options\":[{\"conditions\":[],\"delta0_sq\":6,\"flags\":[],\"omega_sq\":\"-33/32\",\"verdict\":\"unobstructed\"}],\"r0\":1,\"s0\":4,\"verdict\":\"unobstructed\"},"
        "{\"a2h2\":\"8/1\",\"conditions\":[],\"d0\":31,\"options\":[{\"conditions\":[],\"delta0_sq\":30,\"flags\":[{\"aux\":\"H-D0\",\"hdeg\":1,\"meaning\":\"no_square_zero_degree_one\",\"sq\":0}],\"omega_sq\":\"-1/32\",\"verdict\":\"impossible\"}],\"r0\":2,\"s0\":8,\"verdict\":\"impossible\"}]\n";
    CHECK(r.out == expected);
}

TEST_CASE("destab golden: the odd-s candidates at s = 7") {
    const auto r = run_cli("destab --h2 28 --v 2,28,7 --max-rank 4");
    CHECK(r.exit_code == 0);
    const std::string expected =
        "[{\"a2h2\":\"7/3\",\"conditions\":[\"gonality<=6\"],\"d0\":11,\"options\":[{\"conditions\":[\"gonality<=6\"],\"delta0_sq\":4,\"flags\":[{\"aux\":\"H-2D0\",\"hdeg\":6,\"meaning\":\"elliptic_pencil_deg6\",\"sq\":0}],\"omega_sq\":\"-9/28\",\"verdict\":\"conditional\"}],\"r0\":1,\"s0\":3,\"verdict\":\"conditional\"},"
        "{\"a2h2\":\"21/1\",\"conditions\":[],\"d0\":13,\"options\":[{\"conditions\":[],\"delta0_sq\":6,\"flags\":[{\"aux\":\"H-2D0\",\"hdeg\":2,\"meaning\":\"elliptic_pencil_deg2\",\"sq\":0}],\"omega_sq\":\"-1/28\",\"verdict\":\"impossible\"}],\"r0\":1,\"s0\":4,\"verdict\":\"impossible\"},"
        "{\"a2h2\":\"7/1\",\"conditions\":[],\"d0\":27,\"options\":[{\"conditions\":[],\"delta0_sq\":26,\"flags\":[{\"aux\":\"H-D0\",\"hdeg\":1,\"meaning\":\"no_square_zero_degree_one\",\"sq\":0}],\"omega_sq\":\"-1/28\",\"verdict\":\"impossible\"}],\"r0\":2,\"s0\":7,\"verdict\":\"impossible\"}]\n";
    CHECK(r.out == expected);
}

TEST_CASE("lemma golden for the rank-4 family") {
    const auto r = run_cli("lemma --mod4 2 --s 13");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "{\"mod4\":2,\"s_or_p\":13,\"survivors\":[{\"a\":1,\"b\":2,\"d0\":11,"
                   "\"k\":11,\"r0\":1,\"s0\":3,\"w2h2\":\"13/4\"}]}\n");
}

TEST_CASE("fano golden") {
    const auto r = run_cli("fano --builtin blowup-p3-two-lines --divisor 4,-1,-1");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "{\"cube\":44,\"genus\":23}\n");
}

TEST_CASE("simultaneity golden") {
    const auto r6 = run_cli("simultaneity --s 6");
    CHECK(r6.exit_code == 0);
    CHECK(r6.out == "{\"coexistence\":true,\"possible_even_squares\":[-2],\"s\":6}\n");
    const auto r8 = run_cli("simultaneity --s 8");
    CHECK(r8.out == "{\"coexistence\":false,\"possible_even_squares\":[],\"s\":8}\n");
}

TEST_CASE("oxwall golden") {
    const auto r = run_cli("oxwall --s 10 --rk-max 6 --beta-max 4");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "{\"beta_max\":\"4/1\",\"rk_max\":6,\"s\":10,\"solutions\":[{\"alpha\":\"1/1\","
                   "\"beta\":\"0/1\",\"rk\":1}]}\n");
}

TEST_CASE("lemma golden") {
    const auto r = run_cli("lemma --mod4 1 --s 8");
    CHECK(r.exit_code == 0);
    CHECK(r.out ==
          "{\"mod4\":1,\"s_or_p\":8,\"survivors\":["
          "{\"a\":2,\"b\":2,\"d0\":14,\"k\":14,\"r0\":1,\"s0\":4,\"w2h2\":\"8/1\"},"
          "{\"a\":1,\"b\":1,\"d0\":15,\"k\":15,\"r0\":1,\"s0\":4,\"w2h2\":\"8/1\"},"
          "{\"a\":1,\"b\":1,\"d0\":31,\"k\":31,\"r0\":2,\"s0\":8,\"w2h2\":\"8/1\"}]}\n");
}

TEST_CASE("h0bound golden, both radicand versions") {
    const auto r = run_cli("h0bound --h2 32 --v 2,32,8");
    CHECK(r.exit_code == 0);
    CHECK(r.out ==
          "{\"chi_half\":\"5/1\",\"h0_max\":10,\"radicand\":\"104/1\",\"version\":\"proof\"}\n");
    const auto rs = run_cli("h0bound --h2 32 --v 2,32,8 --statement-radicand");
    CHECK(rs.out ==
          "{\"chi_half\":\"5/1\",\"h0_max\":9,\"radicand\":\"72/1\",\"version\":\"statement\"}\n");
}

TEST_CASE("wall golden") {
    const auto r = run_cli("wall --h2 32 --v 2,32,8 --w 1,0,1");
    CHECK(r.exit_code == 0);
    CHECK(r.out ==
          "[{\"center_b\":\"3/16\",\"k0\":\"32/1\",\"k1\":\"192/1\",\"k2\":\"-512/1\","
          "\"kind\":\"semicircle\",\"pair\":[{\"delta\":{\"c\":\"1/1\",\"kind\":\"pureH\"},"
          "\"r\":2,\"s\":\"8/1\"},{\"delta\":{\"c\":\"0/1\",\"kind\":\"pureH\"},\"r\":1,"
          "\"s\":\"1/1\"}],\"radius_sq\":\"25/256\",\"ray_b0_a2\":\"1/16\"}]\n");
}

TEST_CASE("wall samples satisfy the stated schema") {
    const auto r = run_cli("wall --h2 32 --v 2,32,8 --w 1,14,4 --samples 1");
    CHECK(r.exit_code == 0);
    // apex of the w^2 H^2 = 8 wall; candidate wall passes through (0, 1/4)
    CHECK(r.out.find("\"ray_b0_a2\":\"1/4\"") != std::string::npos);
    CHECK(r.out.find("\"samples\":[[") != std::string::npos);
}

TEST_CASE("lattice golden") {
    const std::string path = "/tmp/mukai_test_lattice.json";
    {
        std::ofstream out(path);
        out << "{\"rank\":2,\"gram\":[[0,1],[1,0]],\"h\":[1,16]}";
    }
    const auto r = run_cli("lattice --lattice " + path + " --target-sq 0 --target-hdeg 1");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "{\"complete\":true,\"target_hdeg\":1,\"target_sq\":0,\"vectors\":[[0,1]]}\n");

    const auto rn = run_cli("lattice --lattice " + path + " --noellint1");
    CHECK(rn.out ==
          "{\"complete\":true,\"verdict\":\"geometrically_excluded\",\"witnesses\":[[0,1]]}\n");

    const std::string path2 = "/tmp/mukai_test_lattice2.json";
    {
        std::ofstream out(path2);
        out << "{\"rank\":2,\"gram\":[[32,14],[14,6]],\"h\":[1,0]}";
    }
    const auto rh = run_cli("lattice --lattice " + path2 + " --a-class 0,1");
    CHECK(rh.out == "{\"cross\":2,\"h_minus_2a_sq\":0,\"h_minus_a_sq\":10,"
                    "\"hyperelliptic_pattern\":true}\n");
}

TEST_CASE("svg output via --format svg") {
    const auto r = run_cli("--format svg wall --h2 32 --v 2,32,8 --w 1,0,1");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("<?xml version=\"1.0\"") == 0);
    CHECK(r.out.find("viewBox=\"-2 0 4 2\"") != std::string::npos);
}

TEST_CASE("exit codes: usage and domain errors") {
    const auto usage = run_cli("destab --no-such-flag");
    CHECK(usage.exit_code == 2);
    CHECK(slurp("/tmp/mukai_cli_err.txt").find("\"error\":\"UsageError\"") != std::string::npos);

    const auto svg_misuse = run_cli("charge --h2 32 --v 2,32,8 --point 0,1/2 --format svg");
    CHECK(svg_misuse.exit_code == 2);

    const auto domain = run_cli("charge --h2 31 --v 2,32,8 --point 0,1/2");
    CHECK(domain.exit_code == 3);
    CHECK(slurp("/tmp/mukai_cli_err.txt").find("\"error\":\"InvalidArgument\"") !=
          std::string::npos);

    const auto both = run_cli("charge --h2 32 --lattice /nonexistent --v 2,32,8 --point 0,1/2");
    CHECK(both.exit_code == 3);

    const auto parity = run_cli("lemma --mod4 1 --s 7");
    CHECK(parity.exit_code == 3);
    CHECK(slurp("/tmp/mukai_cli_err.txt").find("\"error\":\"ParityMismatch\"") !=
          std::string::npos);
}

TEST_CASE("outputs are byte-identical across thread counts") {
    const std::string args = "destab --h2 64 --v 2,64,16 --max-rank 5";
    const auto t1 = run_cli(args, 1);
    const auto t4 = run_cli(args, 4);
    CHECK(t1.exit_code == 0);
    CHECK(t1.out == t4.out);
}
