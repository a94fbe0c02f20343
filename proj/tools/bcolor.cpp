// bcolor: budgeted graph coloring toolkit CLI.
//   solve     decide an instance file, emit a solution file
//   verify    check a solution file against an instance file
//   generate  write gadget / random instances
//   count     print the number of ordered budgeted covers
//   bench     time a corpus of instance files

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bcolor/dispatch.hpp"
#include "bcolor/generators.hpp"
#include "bcolor/io.hpp"

namespace {

using namespace bcolor;

std::vector<int> parse_int_list(const std::string& text, const char* what) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        try {
            out.push_back(std::stoi(item));
        } catch (const std::exception&) {
            throw CLI::ValidationError(std::string(what) + ": bad integer '" + item + "'");
        }
    }
    return out;
}

// "1-2,2-3" -> {(0,1),(1,2)}; 1-indexed input
std::vector<std::pair<int, int>> parse_edge_list(const std::string& text) {
    std::vector<std::pair<int, int>> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        auto dash = item.find('-');
        if (dash == std::string::npos)
            throw CLI::ValidationError("--edges: expected 'u-v', got '" + item + "'");
        try {
            int u = std::stoi(item.substr(0, dash));
            int v = std::stoi(item.substr(dash + 1));
            out.emplace_back(u - 1, v - 1);
        } catch (const std::exception&) {
            throw CLI::ValidationError("--edges: bad pair '" + item + "'");
        }
    }
    return out;
}

void write_output(const std::string& out_path, const std::string& content) {
    if (out_path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write '" + out_path + "'");
    f << content;
}

int cmd_solve(const std::string& path, DispatchOptions opts, const std::string& out_path) {
    BcpInstance inst = parse_instance_file(path);
    DispatchOutcome outcome = dispatch_solve(inst, opts);
    std::cerr << "algorithm: " << outcome.algorithm_used << "\n";
    if (!outcome.note.empty()) std::cerr << outcome.note << "\n";
    if (outcome.status == 3) return 3;
    std::ostringstream oss;
    emit_solution(oss, outcome.result);
    write_output(out_path, oss.str());
    return outcome.status;
}

int cmd_verify(const std::string& instance_path, const std::string& solution_path) {
    BcpInstance inst = parse_instance_file(instance_path);
    ParsedSolution sol = parse_solution_file(solution_path);
    if (!sol.yes) return 0;  // NO carries no checkable certificate
    Coloring col = solution_to_coloring(sol, inst.g.vertex_count());
    VerifyResult v = verify_bcp(inst, col);
    if (!v) {
        std::cout << "INVALID: " << v.violation << "\n";
        return 1;
    }
    std::cout << "OK\n";
    return 0;
}

int cmd_count(const std::string& path, const ExactOptions& opts) {
    BcpInstance inst = parse_instance_file(path);
    if (inst.g.vertex_count() > opts.max_n) {
        std::cerr << "instance above exact cap (n = " << inst.g.vertex_count() << ", cap "
                  << opts.max_n << ")\n";
        return 3;
    }
    std::cout << count_budgeted_covers(inst, opts).to_string() << "\n";
    return 0;
}

struct BenchRow {
    std::string instance;
    std::string algorithm;
    std::string answer;
    int n = 0;
    int repeat = 0;
    double wall_ms = 0;
    double median_ms = -1;  // set on the last repeat of each instance
    double growth = -1;     // median ratio vs previous instance
};

int cmd_bench(const std::string& dir, int repeats, const std::string& csv_path,
              const DispatchOptions& opts) {
    namespace fs = std::filesystem;
    std::vector<std::string> files;
    if (fs::is_directory(dir)) {
        for (const auto& entry : fs::directory_iterator(dir))
            if (entry.is_regular_file()) files.push_back(entry.path().string());
        std::sort(files.begin(), files.end());
    } else if (fs::is_regular_file(dir)) {
        files.push_back(dir);
    }

    std::vector<BenchRow> rows;
    double prev_median = -1;
    for (const auto& file : files) {
        BcpInstance inst;
        try {
            inst = parse_instance_file(file);
        } catch (const ParseError& e) {
            std::cerr << "warning: skipping '" << file << "': " << e.what() << "\n";
            continue;
        }
        std::vector<double> times;
        std::string answer = "?", algorithm = "?";
        for (int r = 0; r < repeats; ++r) {
            auto start = std::chrono::steady_clock::now();
            DispatchOutcome outcome = dispatch_solve(inst, opts);
            auto stop = std::chrono::steady_clock::now();
            double ms = std::chrono::duration<double, std::milli>(stop - start).count();
            times.push_back(ms);
            algorithm = outcome.algorithm_used;
            answer = outcome.status == 0 ? "YES" : outcome.status == 1 ? "NO" : "UNDECIDED";
            rows.push_back({fs::path(file).filename().string(), algorithm, answer,
                            inst.g.vertex_count(), r + 1, ms, -1, -1});
        }
        std::vector<double> sorted = times;
        std::sort(sorted.begin(), sorted.end());
        double median = sorted[sorted.size() / 2];
        rows.back().median_ms = median;
        if (prev_median > 0) rows.back().growth = median / prev_median;
        prev_median = median;
    }

    std::ostringstream csv;
    csv << "instance,algorithm,answer,n,repeat,wall_ms,median_ms,growth\n";
    for (const auto& r : rows) {
        csv << r.instance << "," << r.algorithm << "," << r.answer << "," << r.n << ","
            << r.repeat << "," << r.wall_ms;
        csv << ",";
        if (r.median_ms >= 0) csv << r.median_ms;
        csv << ",";
        if (r.growth >= 0) csv << r.growth;
        csv << "\n";
    }
    if (!csv_path.empty()) {
        std::ofstream f(csv_path, std::ios::binary);
        f << csv.str();
    }

    std::cout << std::left << std::setw(28) << "instance" << std::setw(14) << "algorithm"
              << std::setw(10) << "answer" << std::setw(5) << "n" << std::setw(7) << "rep"
              << std::setw(12) << "wall_ms" << std::setw(12) << "median_ms" << "growth\n";
    for (const auto& r : rows) {
        std::cout << std::left << std::setw(28) << r.instance << std::setw(14) << r.algorithm
                  << std::setw(10) << r.answer << std::setw(5) << r.n << std::setw(7) << r.repeat
                  << std::setw(12) << std::fixed << std::setprecision(3) << r.wall_ms;
        if (r.median_ms >= 0)
            std::cout << std::setw(12) << r.median_ms;
        else
            std::cout << std::setw(12) << "";
        if (r.growth >= 0) std::cout << std::setprecision(2) << r.growth;
        std::cout << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"budgeted graph coloring toolkit"};
    app.require_subcommand(1);

    DispatchOptions dopts;
    std::string instance_path, solution_path, out_path, csv_path;

    auto* solve = app.add_subcommand("solve", "solve an instance file");
    solve->add_option("instance", instance_path, "instance file")->required();
    solve->add_option("--algorithm", dopts.algorithm, "algorithm to use")
        ->check(CLI::IsMember(known_algorithms()))
        ->default_val("auto");
    solve->add_option("--param-budget", dopts.param_budget,
                      "cap on structural parameter searches");
    solve->add_option("--exact-cap", dopts.exact.max_n, "vertex cap for the exact solver");
    solve->add_option("--out", out_path, "solution output path (default stdout)");

    auto* verify = app.add_subcommand("verify", "verify a solution file");
    verify->add_option("instance", instance_path, "instance file")->required();
    verify->add_option("solution", solution_path, "solution file")->required();

    auto* count = app.add_subcommand("count", "print the ordered budgeted cover count");
    count->add_option("instance", instance_path, "instance file")->required();
    count->add_option("--exact-cap", dopts.exact.max_n, "vertex cap");

    int repeats = 1;
    std::string corpus_dir;
    auto* bench = app.add_subcommand("bench", "time a corpus of instances");
    bench->add_option("corpus", corpus_dir, "directory of instance files")->required();
    bench->add_option("--repeat", repeats, "repeats per instance")->check(CLI::PositiveNumber);
    bench->add_option("--csv", csv_path, "write CSV to this path");
    bench->add_option("--algorithm", dopts.algorithm, "algorithm to use")
        ->check(CLI::IsMember(known_algorithms()))
        ->default_val("auto");

    auto* generate = app.add_subcommand("generate", "generate instance files");
    generate->require_subcommand(1);
    std::string x_list, edge_list, cover_list, neighborhood = "literal", cls = "general";
    int gen_w = 0, gen_k = 1, gen_l = 1, gen_n = 0, gen_c = 2, bmin = 1, bmax = 3;
    std::uint64_t seed = 1;

    auto* g3p = generate->add_subcommand("3partition", "co-cluster gadget from a 3-partition input");
    g3p->add_option("--x", x_list, "comma list of 3c positive integers")->required();
    g3p->add_option("--w", gen_w, "target triple sum")->required();
    g3p->add_option("--out", out_path, "output path");

    auto* gds = generate->add_subcommand("domset", "split-graph gadget from a domination input");
    gds->add_option("--n", gen_n, "source vertex count")->required();
    gds->add_option("--edges", edge_list, "source edges, e.g. 1-2,2-3");
    gds->add_option("--k", gen_k, "dominating set size")->required();
    gds->add_option("--neighborhood", neighborhood, "literal or closed")
        ->check(CLI::IsMember({"literal", "closed"}));
    gds->add_option("--out", out_path, "output path");

    auto* gbc = generate->add_subcommand("biclique", "bipartite ECP gadget from a biclique input");
    gbc->add_option("--n", gen_n, "side size of the source bipartite graph")->required();
    gbc->add_option("--edges", edge_list, "cross edges i-j (side1-side2), 1-indexed");
    gbc->add_option("--k", gen_k, "biclique size")->required();
    gbc->add_option("--out", out_path, "output path");

    auto* gcv = generate->add_subcommand("clique-vc", "distance-to-clique gadget from a clique input");
    gcv->add_option("--n", gen_n, "source vertex count")->required();
    gcv->add_option("--edges", edge_list, "source edges, e.g. 1-2,2-3");
    gcv->add_option("--cover", cover_list, "a vertex cover of the source, e.g. 1,2")->required();
    gcv->add_option("--l", gen_l, "clique size sought")->required();
    gcv->add_option("--out", out_path, "output path");

    auto* gce = generate->add_subcommand("coloring-ecp", "pad a coloring instance to equitable form");
    gce->add_option("--n", gen_n, "source vertex count")->required();
    gce->add_option("--edges", edge_list, "source edges");
    gce->add_option("--c", gen_c, "color count")->required();
    gce->add_option("--out", out_path, "output path");

    auto* grd = generate->add_subcommand("random", "seeded random instance of a graph class");
    grd->add_option("--class", cls, "graph class")
        ->check(CLI::IsMember({"clique", "cluster", "co-cluster", "split", "bipartite", "path",
                               "broom", "general"}))
        ->required();
    grd->add_option("--n", gen_n, "vertex count")->required();
    grd->add_option("--c", gen_c, "color count")->required();
    grd->add_option("--bmin", bmin, "minimum budget");
    grd->add_option("--bmax", bmax, "maximum budget");
    grd->add_option("--seed", seed, "random seed");
    grd->add_option("--out", out_path, "output path");

    try {
        app.parse(argc, argv);

        if (*solve) return cmd_solve(instance_path, dopts, out_path);
        if (*verify) return cmd_verify(instance_path, solution_path);
        if (*count) return cmd_count(instance_path, dopts.exact);
        if (*bench) return cmd_bench(corpus_dir, repeats, csv_path, dopts);

        // generate subcommands
        Graph source;
        if (*gds || *gcv || *gce) source = Graph::from_edges(gen_n, parse_edge_list(edge_list));
        BcpInstance inst;
        if (*g3p) {
            inst = gen_3partition_cocluster(parse_int_list(x_list, "--x"), gen_w);
        } else if (*gds) {
            inst = gen_domset_split(source, gen_k, neighborhood == "closed");
        } else if (*gbc) {
            inst = gen_biclique_bipartite_ecp(gen_n, parse_edge_list(edge_list), gen_k).bcp;
        } else if (*gcv) {
            auto cover = parse_int_list(cover_list, "--cover");
            for (int& v : cover) --v;  // 1-indexed on the command line
            inst = gen_clique_vc(source, cover, gen_l).instance;
        } else if (*gce) {
            auto red = gen_coloring_to_ecp(source, gen_c);
            inst = ecp_to_bcp(red.graph, red.colors);
        } else if (*grd) {
            GraphClass tag = GraphClass::General;
            if (cls == "clique") tag = GraphClass::Clique;
            else if (cls == "cluster") tag = GraphClass::Cluster;
            else if (cls == "co-cluster") tag = GraphClass::CoCluster;
            else if (cls == "split") tag = GraphClass::Split;
            else if (cls == "bipartite") tag = GraphClass::Bipartite;
            else if (cls == "path") tag = GraphClass::Path;
            else if (cls == "broom") tag = GraphClass::Broom;
            inst = gen_random(tag, gen_n, gen_c, bmin, bmax, seed);
        }
        write_output(out_path, instance_to_string(inst));
        return 0;
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? 0 : 2;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
