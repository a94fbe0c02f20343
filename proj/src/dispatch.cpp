#include "bcolor/dispatch.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "bcolor/poly_solvers.hpp"
#include "bcolor/recognize.hpp"

namespace bcolor {

namespace {

DispatchOutcome from_result(SolveResult r, const std::string& name) {
    DispatchOutcome out;
    out.status = r.yes ? 0 : 1;
    out.result = std::move(r);
    out.algorithm_used = name;
    return out;
}

DispatchOutcome undecided(const std::string& name, const std::string& note) {
    DispatchOutcome out;
    out.status = 3;
    out.algorithm_used = name;
    out.note = note;
    return out;
}

bool oracle_in_bounds(const BcpInstance& inst) {
    double work = 1;
    for (int v = 0; v < inst.g.vertex_count(); ++v) {
        work *= std::max(inst.c, 1);
        if (work > 1e8) return false;
    }
    return true;
}

DispatchOutcome run_forced(const BcpInstance& inst, const DispatchOptions& opts) {
    const std::string& alg = opts.algorithm;
    const Graph& g = inst.g;
    if (alg == "oracle") {
        if (!oracle_in_bounds(inst)) return undecided(alg, "instance above oracle bounds");
        try {
            return from_result(oracle_bcp(inst, opts.oracle), alg);
        } catch (const std::runtime_error&) {
            return undecided(alg, "oracle node budget exhausted");
        }
    }
    if (alg == "exact") {
        if (g.vertex_count() > opts.exact.max_n) return undecided(alg, "n above exact cap");
        return from_result(solve_exact(inst, opts.exact), alg);
    }
    if (alg == "table-dp") {
        if (g.vertex_count() > opts.table_dp.max_n || inst.c > opts.table_dp.max_c ||
            g.vertex_count() + inst.c > opts.table_dp.max_total_bits_log2)
            return undecided(alg, "above table-dp caps");
        return from_result(solve_table_dp(inst, opts.table_dp), alg);
    }
    if (alg == "cluster") {
        auto view = make_cluster_view(g);
        if (!view) throw std::invalid_argument("cluster: graph is not a cluster graph");
        return from_result(solve_cluster(inst, *view), alg);
    }
    if (alg == "bipartite-c2") {
        if (inst.c != 2) throw std::invalid_argument("bipartite-c2: instance must have c = 2");
        auto sides = bipartition(g);
        if (!sides) throw std::invalid_argument("bipartite-c2: graph is not bipartite");
        return from_result(solve_bipartite_c2(inst, *sides), alg);
    }
    if (alg == "path") {
        auto order = path_order(g);
        if (!order) throw std::invalid_argument("path: graph is not a path");
        return from_result(solve_path(inst, *order), alg);
    }
    if (alg == "broom") {
        auto witness = broom_witness(g);
        if (witness) return from_result(solve_broom(inst, witness->first, witness->second), alg);
        auto order = path_order(g);  // bare paths are brooms with no leaves
        if (order) return from_result(solve_broom(inst, *order, {}), alg);
        throw std::invalid_argument("broom: graph is not a broom");
    }
    if (alg == "clique") {
        if (!is_complete(g)) throw std::invalid_argument("clique: graph is not complete");
        return from_result(solve_clique(inst), alg);
    }
    if (alg == "cvd-colors" || alg == "cvd-clusters") {
        auto s = find_cvd(g, opts.param_budget);
        if (!s) return undecided(alg, "no CVD set within --param-budget");
        SolveResult r = alg == "cvd-colors" ? solve_cvd_colors(inst, *s, opts.fpt)
                                            : solve_cvd_clusters(inst, *s, opts.fpt);
        return from_result(std::move(r), alg);
    }
    if (alg == "dist-clique") {
        auto a = find_clique_modulator(g, opts.param_budget);
        if (!a) return undecided(alg, "no clique modulator within --param-budget");
        return from_result(solve_distance_to_clique(inst, *a, opts.fpt), alg);
    }
    if (alg == "vertex-cover") {
        auto s = find_vertex_cover(g, opts.param_budget);
        if (!s) return undecided(alg, "no vertex cover within --param-budget");
        return from_result(solve_vertex_cover(inst, *s, opts.fpt), alg);
    }
    throw std::invalid_argument("unknown algorithm '" + alg + "'");
}

double log2_of(int x) { return std::log2(static_cast<double>(std::max(x, 1))); }

}  // namespace

const std::vector<std::string>& known_algorithms() {
    static const std::vector<std::string> algorithms = {
        "auto",   "oracle",     "exact",        "table-dp",    "cluster",
        "bipartite-c2", "path", "broom",        "clique",      "cvd-colors",
        "cvd-clusters", "dist-clique", "vertex-cover"};
    return algorithms;
}

DispatchOutcome dispatch_solve(const BcpInstance& inst, const DispatchOptions& opts) {
    if (opts.algorithm != "auto") return run_forced(inst, opts);

    const Graph& g = inst.g;
    int n = g.vertex_count();
    if (budget_sum(inst) < n) {
        DispatchOutcome out;
        out.status = 1;
        out.result = SolveResult::no();
        out.algorithm_used = "early-no";
        out.note = "budgets sum below vertex count";
        return out;
    }

    ClassLabel label = classify(g);
    switch (label.tag) {
        case GraphClass::Clique:
            return from_result(solve_clique(inst), "clique");
        case GraphClass::Cluster: {
            auto view = make_cluster_view(g);
            return from_result(solve_cluster(inst, *view), "cluster");
        }
        case GraphClass::Path:
            return from_result(solve_path(inst, label.path_order), "path");
        case GraphClass::Broom:
            return from_result(solve_broom(inst, label.handle, label.leaves), "broom");
        case GraphClass::Bipartite:
            if (inst.c == 2)
                return from_result(solve_bipartite_c2(inst, label.parts), "bipartite-c2");
            break;
        case GraphClass::CoCluster:
        case GraphClass::Split:
        case GraphClass::General:
            break;
    }

    // Structural parameters, cheapest estimated enumeration first.
    struct Candidate {
        double log_work;
        int rank;
        std::string name;
        DeletionSet set;
    };
    std::vector<Candidate> candidates;
    if (auto cvd = find_cvd(g, opts.param_budget)) {
        int k = cvd->k();
        candidates.push_back({k * log2_of(inst.c), 0, "cvd-colors", *cvd});
        std::vector<char> in_s(n, 0);
        for (int v : cvd->vertices) in_s[v] = 1;
        std::vector<int> rest;
        for (int v = 0; v < n; ++v)
            if (!in_s[v]) rest.push_back(v);
        auto view = make_cluster_view(induced_subgraph(g, rest).graph);
        int d = view ? static_cast<int>(view->clusters.size()) : n;
        candidates.push_back({k * (log2_of(d) + log2_of(k)), 1, "cvd-clusters", *cvd});
    }
    if (auto mod = find_clique_modulator(g, opts.param_budget)) {
        int k = mod->k();
        candidates.push_back({k * log2_of(k), 2, "dist-clique", *mod});
    }
    if (auto vc = find_vertex_cover(g, opts.param_budget)) {
        int k = vc->k();
        candidates.push_back({2.0 * k * log2_of(k), 3, "vertex-cover", *vc});
    }
    if (!candidates.empty()) {
        std::sort(candidates.begin(), candidates.end(), [](const auto& a, const auto& b) {
            if (a.log_work != b.log_work) return a.log_work < b.log_work;
            return a.rank < b.rank;
        });
        const Candidate& best = candidates.front();
        SolveResult r;
        if (best.name == "cvd-colors")
            r = solve_cvd_colors(inst, best.set, opts.fpt);
        else if (best.name == "cvd-clusters")
            r = solve_cvd_clusters(inst, best.set, opts.fpt);
        else if (best.name == "dist-clique")
            r = solve_distance_to_clique(inst, best.set, opts.fpt);
        else
            r = solve_vertex_cover(inst, best.set, opts.fpt);
        return from_result(std::move(r), best.name);
    }

    if (n <= opts.exact.max_n) return from_result(solve_exact(inst, opts.exact), "exact");
    return undecided("auto", "no structural parameter within budget and n above exact cap");
}

}  // namespace bcolor
