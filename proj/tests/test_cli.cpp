#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "bcolor/dispatch.hpp"
#include "bcolor/generators.hpp"
#include "bcolor/io.hpp"
#include "bcolor/oracle.hpp"

using namespace bcolor;
namespace fs = std::filesystem;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

RunResult run_cli(const std::string& args) {
    static int counter = 0;
    fs::path dir = fs::temp_directory_path() / "bcolor_cli_test";
    fs::create_directories(dir);
    fs::path out = dir / ("out" + std::to_string(counter) + ".txt");
    fs::path err = dir / ("err" + std::to_string(counter) + ".txt");
    ++counter;
    std::string cmd = std::string(BCOLOR_CLI_PATH) + " " + args + " >" + out.string() + " 2>" +
                      err.string();
    int status = std::system(cmd.c_str());
    RunResult r;
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    auto slurp = [](const fs::path& p) {
        std::ifstream f(p);
        std::ostringstream ss;
        ss << f.rdbuf();
        return ss.str();
    };
    r.out = slurp(out);
    r.err = slurp(err);
    return r;
}

std::string write_temp(const std::string& name, const std::string& content) {
    fs::path dir = fs::temp_directory_path() / "bcolor_cli_test";
    fs::create_directories(dir);
    fs::path p = dir / name;
    std::ofstream f(p, std::ios::binary);
    f << content;
    return p.string();
}

}  // namespace

TEST_CASE("solve names the algorithm and its answer verifies") {
    BcpInstance inst = make_instance(cluster_graph({3, 2}), {2, 2, 1});
    std::string path = write_temp("cluster.bcp", instance_to_string(inst));
    auto r = run_cli("solve " + path);
    CHECK(r.exit_code == 0);
    CHECK(r.err.find("algorithm: cluster") != std::string::npos);
    CHECK(r.out.find("s YES") == 0);

    std::string sol = write_temp("cluster.sol", r.out);
    CHECK(run_cli("verify " + path + " " + sol).exit_code == 0);
}

TEST_CASE("solve exit codes") {
    BcpInstance no_inst = make_instance(complete_graph(3), {3, 3});
    std::string no_path = write_temp("no.bcp", instance_to_string(no_inst));
    CHECK(run_cli("solve " + no_path).exit_code == 1);

    std::string bad = write_temp("bad.bcp", "p bcp 2 1\n");
    CHECK(run_cli("solve " + bad).exit_code == 2);

    // forced inapplicable solver
    BcpInstance c3 = make_instance(cycle_graph(4), {2, 1, 1});
    std::string c3_path = write_temp("c3.bcp", instance_to_string(c3));
    CHECK(run_cli("solve " + c3_path + " --algorithm bipartite-c2").exit_code == 2);

    // no parameter within budget and n above the exact cap -> undecided
    // (odd cycle: no poly class applies, and c = 2 rules nothing in)
    BcpInstance big = make_instance(cycle_graph(31), {16, 16});
    std::string big_path = write_temp("big.bcp", instance_to_string(big));
    CHECK(run_cli("solve " + big_path + " --param-budget 0 --exact-cap 10").exit_code == 3);
}

TEST_CASE("dispatch picks the advertised poly solvers") {
    auto expect = [](const BcpInstance& inst, const std::string& name) {
        DispatchOutcome out = dispatch_solve(inst);
        CHECK(out.algorithm_used == name);
    };
    expect(make_instance(complete_graph(4), {1, 1, 1, 1}), "clique");
    expect(make_instance(cluster_graph({2, 2}), {2, 2}), "cluster");
    expect(make_instance(path_graph(5), {3, 2}), "path");
    expect(make_instance(broom_graph(4, 2), {3, 2, 2}), "broom");
    expect(make_instance(cycle_graph(6), {3, 3}), "bipartite-c2");
    expect(make_instance(empty_graph(3), {1}), "early-no");
}

TEST_CASE("auto dispatch matches the forced oracle on seeded random instances") {
    const GraphClass classes[] = {GraphClass::Cluster, GraphClass::CoCluster,
                                  GraphClass::Split,   GraphClass::Bipartite,
                                  GraphClass::Path,    GraphClass::Broom,
                                  GraphClass::General};
    int checked = 0;
    for (std::uint64_t seed = 1; checked < 200; ++seed) {
        GraphClass cls = classes[seed % 7];
        int n = 2 + static_cast<int>(seed % 8);
        BcpInstance inst = gen_random(cls, n, 1 + seed % 4, 0, 4, seed);
        DispatchOutcome autod = dispatch_solve(inst);
        REQUIRE(autod.status != 3);
        bool expect = oracle_bcp(inst).yes;
        CHECK((autod.status == 0) == expect);
        if (autod.status == 0) CHECK(verify_bcp(inst, *autod.result.coloring).ok);
        ++checked;
    }
}

TEST_CASE("verify catches violations") {
    BcpInstance inst = make_instance(complete_graph(2), {1, 1});
    std::string path = write_temp("k2.bcp", instance_to_string(inst));
    CHECK(run_cli("verify " + path + " " + write_temp("ok.sol", "s YES\nv 1 1\nv 2 2\n"))
              .exit_code == 0);
    auto bad = run_cli("verify " + path + " " + write_temp("bad.sol", "s YES\nv 1 1\nv 2 1\n"));
    CHECK(bad.exit_code == 1);
    CHECK(bad.out.find("INVALID") != std::string::npos);
    CHECK(run_cli("verify " + path + " " + write_temp("trunc.sol", "s YES\nv 1 1\n"))
              .exit_code == 2);
    CHECK(run_cli("verify " + path + " " + write_temp("no.sol", "s NO\n")).exit_code == 0);
}

TEST_CASE("count prints the cover count") {
    BcpInstance inst = make_instance(complete_graph(2), {1, 1});
    std::string path = write_temp("count.bcp", instance_to_string(inst));
    auto r = run_cli("count " + path);
    CHECK(r.exit_code == 0);
    CHECK(r.out == "2\n");

    BcpInstance zero = make_instance(complete_graph(2), {2});
    CHECK(run_cli("count " + write_temp("zero.bcp", instance_to_string(zero))).out == "0\n");
}

TEST_CASE("generate is deterministic and round-trips") {
    auto a = run_cli("generate random --class split --n 9 --c 3 --bmin 1 --bmax 4 --seed 5");
    auto b = run_cli("generate random --class split --n 9 --c 3 --bmin 1 --bmax 4 --seed 5");
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
    std::istringstream iss(a.out);
    BcpInstance parsed = parse_instance(iss);
    CHECK(instance_to_string(parsed) == a.out);

    auto g3p = run_cli("generate 3partition --x 1,1,1 --w 3");
    CHECK(g3p.out.find("p bcp 12 0 3") == 0);

    auto gcv = run_cli("generate clique-vc --n 3 --edges 1-2,1-3,2-3 --cover 1,2 --l 3");
    CHECK(gcv.exit_code == 0);
    std::istringstream iss2(gcv.out);
    CHECK(parse_instance(iss2).g.vertex_count() == 3);
}

TEST_CASE("bench exact series times are present and monotone") {
    fs::path dir = fs::temp_directory_path() / "bcolor_bench_series";
    fs::create_directories(dir);
    for (int n : {10, 12, 14}) {
        BcpInstance inst = make_instance(empty_graph(n), {(n + 1) / 2, (n + 1) / 2});
        std::ofstream f(dir / ("series_" + std::to_string(n) + ".bcp"), std::ios::binary);
        f << instance_to_string(inst);
    }
    fs::path csv = fs::temp_directory_path() / "bcolor_series.csv";
    auto r = run_cli("bench " + dir.string() + " --repeat 3 --algorithm exact --csv " +
                     csv.string());
    REQUIRE(r.exit_code == 0);
    std::ifstream f(csv);
    std::string line;
    std::getline(f, line);  // header
    std::vector<double> medians;
    while (std::getline(f, line)) {
        std::vector<std::string> cells;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) cells.push_back(cell);
        REQUIRE(cells.size() >= 7);
        if (!cells[6].empty()) medians.push_back(std::stod(cells[6]));
    }
    REQUIRE(medians.size() == 3);
    CHECK(medians[0] < medians[1]);
    CHECK(medians[1] < medians[2]);
}

TEST_CASE("bench produces rows and a csv") {
    fs::path dir = fs::temp_directory_path() / "bcolor_bench_corpus";
    fs::create_directories(dir);
    BcpInstance inst = make_instance(path_graph(4), {2, 2});
    {
        std::ofstream f(dir / "a.bcp", std::ios::binary);
        f << instance_to_string(inst);
        std::ofstream junk(dir / "junk.txt", std::ios::binary);
        junk << "not an instance\n";
    }
    fs::path csv = fs::temp_directory_path() / "bcolor_bench.csv";
    auto r = run_cli("bench " + dir.string() + " --repeat 3 --csv " + csv.string());
    CHECK(r.exit_code == 0);
    CHECK(r.err.find("warning") != std::string::npos);
    std::ifstream f(csv);
    std::string line;
    int rows = 0;
    while (std::getline(f, line)) ++rows;
    CHECK(rows == 4);  // header + 3 repeats
}
