#include "bcolor/generators.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "bcolor/rng.hpp"

namespace bcolor {

BcpInstance gen_3partition_cocluster(const std::vector<int>& x, int w) {
    if (x.empty() || x.size() % 3 != 0)
        throw std::invalid_argument("3partition: |X| must be a positive multiple of 3");
    for (int xi : x)
        if (xi < 1) throw std::invalid_argument("3partition: elements must be positive");
    int c = static_cast<int>(x.size()) / 3;
    long long n = std::accumulate(x.begin(), x.end(), 0ll);
    if (static_cast<long long>(w) * c != n)
        throw std::invalid_argument("3partition: w * (|X|/3) must equal sum of X");

    int part_size = static_cast<int>(3 * n + w);
    Graph g = complete_multipartite(std::vector<int>(c, part_size));
    std::vector<int> budgets;
    for (int xi : x) budgets.push_back(static_cast<int>(n) + xi);
    return make_instance(std::move(g), std::move(budgets));
}

BcpInstance gen_domset_split(const Graph& g, int k, bool closed_neighborhood) {
    int n = g.vertex_count();
    if (k < 1 || k > n) throw std::invalid_argument("domset: k out of range");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);  // clique side
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (i == j && closed_neighborhood) continue;
            if (i == j || !g.has_edge(i, j)) edges.emplace_back(i, n + j);
        }
    }
    std::vector<int> budgets(n, 1);
    for (int i = 0; i < k; ++i) budgets[i] = n + 1;
    return make_instance(Graph::from_edges(2 * n, std::move(edges)), std::move(budgets));
}

BicliqueGadget gen_biclique_bipartite_ecp(int n,
                                          const std::vector<std::pair<int, int>>& cross_edges,
                                          int k) {
    if (k < 1) throw std::invalid_argument("biclique: k must be positive");
    if (n < 3 * k - 1) throw std::invalid_argument("biclique: need n >= 3k-1");
    std::vector<char> present(static_cast<std::size_t>(n) * n, 0);
    for (const auto& [i, j] : cross_edges) {
        if (i < 0 || j < 0 || i >= n || j >= n)
            throw std::invalid_argument("biclique: edge out of range");
        present[static_cast<std::size_t>(i) * n + j] = 1;
    }
    int w_count = n - 3 * k + 1;
    int a = 2 * n + w_count;
    int b = a + 1;
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (!present[static_cast<std::size_t>(i) * n + j]) edges.emplace_back(i, n + j);
    for (int j = 0; j < n; ++j) edges.emplace_back(a, n + j);  // a to V_2
    for (int t = 0; t < w_count; ++t) edges.emplace_back(a, 2 * n + t);
    edges.emplace_back(a, b);
    for (int i = 0; i < n; ++i) edges.emplace_back(b, i);  // b to V_1
    // b to a already added
    BicliqueGadget out;
    out.graph = Graph::from_edges(b + 1, std::move(edges));
    out.colors = 3;
    out.bcp = ecp_to_bcp(out.graph, 3);
    return out;
}

CliqueVcGadget gen_clique_vc(const Graph& g, const std::vector<int>& cover, int ell) {
    int n = g.vertex_count();
    if (ell < 1 || ell > n) throw std::invalid_argument("clique-vc: l out of range");
    DeletionSet as_cover{DeletionSet::Kind::VertexCover, cover};
    if (!validate_deletion_set(g, as_cover))
        throw std::invalid_argument("clique-vc: X is not a vertex cover");
    std::vector<int> budgets(n - ell, 1);
    budgets.push_back(ell);
    CliqueVcGadget out;
    out.instance = make_instance(complement(g), std::move(budgets));
    out.modulator = DeletionSet{DeletionSet::Kind::CliqueModulator, cover};
    std::sort(out.modulator.vertices.begin(), out.modulator.vertices.end());
    return out;
}

EcpReduction gen_coloring_to_ecp(const Graph& g, int c) {
    if (c < 1) throw std::invalid_argument("coloring-ecp: c must be positive");
    int n = g.vertex_count();
    std::vector<std::pair<int, int>> edges = g.edges();
    EcpReduction out;
    out.graph = Graph::from_edges(n * c, std::move(edges));
    out.colors = c;
    return out;
}

namespace {

std::vector<std::pair<int, int>> relabel(const std::vector<std::pair<int, int>>& edges,
                                         const std::vector<int>& label) {
    std::vector<std::pair<int, int>> out;
    out.reserve(edges.size());
    for (const auto& [u, v] : edges) out.emplace_back(label[u], label[v]);
    return out;
}

Graph random_cluster_like(Rng& rng, int n, bool take_complement) {
    std::vector<int> label(n);
    std::iota(label.begin(), label.end(), 0);
    rng.shuffle(label);
    std::vector<std::pair<int, int>> edges;
    int at = 0;
    while (at < n) {
        int size = rng.uniform(1, std::max(1, n - at));
        for (int i = at; i < at + size; ++i)
            for (int j = i + 1; j < at + size; ++j) edges.emplace_back(i, j);
        at += size;
    }
    Graph base = Graph::from_edges(n, relabel(edges, label));
    return take_complement ? complement(base) : base;
}

}  // namespace

BcpInstance gen_random(GraphClass cls, int n, int c, int budget_min, int budget_max,
                       std::uint64_t seed) {
    if (n < 0 || c < 1 || budget_min < 0 || budget_max < budget_min)
        throw std::invalid_argument("gen_random: bad arguments");
    Rng rng(seed);
    std::vector<int> label(n);
    std::iota(label.begin(), label.end(), 0);

    Graph g;
    switch (cls) {
        case GraphClass::Clique:
            g = complete_graph(n);
            break;
        case GraphClass::Cluster:
            g = random_cluster_like(rng, n, false);
            break;
        case GraphClass::CoCluster:
            g = random_cluster_like(rng, n, true);
            break;
        case GraphClass::Split: {
            rng.shuffle(label);
            int clique_size = rng.uniform(0, n);
            std::vector<std::pair<int, int>> edges;
            for (int i = 0; i < clique_size; ++i)
                for (int j = i + 1; j < clique_size; ++j) edges.emplace_back(i, j);
            for (int i = 0; i < clique_size; ++i)
                for (int j = clique_size; j < n; ++j)
                    if (rng.coin()) edges.emplace_back(i, j);
            g = Graph::from_edges(n, relabel(edges, label));
            break;
        }
        case GraphClass::Bipartite: {
            rng.shuffle(label);
            int side = rng.uniform(0, n);
            std::vector<std::pair<int, int>> edges;
            for (int i = 0; i < side; ++i)
                for (int j = side; j < n; ++j)
                    if (rng.coin()) edges.emplace_back(i, j);
            g = Graph::from_edges(n, relabel(edges, label));
            break;
        }
        case GraphClass::Path: {
            rng.shuffle(label);
            std::vector<std::pair<int, int>> edges;
            for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
            g = Graph::from_edges(n, relabel(edges, label));
            break;
        }
        case GraphClass::Broom: {
            rng.shuffle(label);
            int q = n >= 5 ? rng.uniform(3, n - 2) : 1;
            std::vector<std::pair<int, int>> edges;
            for (int i = 0; i + 1 < q; ++i) edges.emplace_back(i, i + 1);
            for (int j = q; j < n; ++j) edges.emplace_back(0, j);
            g = Graph::from_edges(n, relabel(edges, label));
            break;
        }
        case GraphClass::General: {
            std::vector<std::pair<int, int>> edges;
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j)
                    if (rng.coin()) edges.emplace_back(i, j);
            g = Graph::from_edges(n, std::move(edges));
            break;
        }
    }

    std::vector<int> budgets;
    for (int i = 0; i < c; ++i) budgets.push_back(rng.uniform(budget_min, budget_max));
    return make_instance(std::move(g), std::move(budgets));
}

}  // namespace bcolor
