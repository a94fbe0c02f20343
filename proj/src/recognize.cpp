#include "bcolor/recognize.hpp"

#include <algorithm>
#include <numeric>

namespace bcolor {

int class_priority(GraphClass tag) { return static_cast<int>(tag); }

const char* class_name(GraphClass tag) {
    switch (tag) {
        case GraphClass::Clique: return "clique";
        case GraphClass::Cluster: return "cluster";
        case GraphClass::CoCluster: return "co-cluster";
        case GraphClass::Split: return "split";
        case GraphClass::Path: return "path";
        case GraphClass::Broom: return "broom";
        case GraphClass::Bipartite: return "bipartite";
        case GraphClass::General: return "general";
    }
    return "general";
}

bool is_complete(const Graph& g) {
    int n = g.vertex_count();
    return g.edge_count() == n * (n - 1) / 2;
}

std::optional<std::vector<std::vector<int>>> cluster_parts(const Graph& g) {
    std::vector<std::vector<int>> parts = connected_components(g);
    for (const auto& p : parts) {
        if (!is_clique(g, p)) return std::nullopt;
    }
    return parts;
}

std::optional<std::vector<std::vector<int>>> cocluster_parts(const Graph& g) {
    return cluster_parts(complement(g));
}

std::optional<std::pair<std::vector<int>, std::vector<int>>> split_partition(const Graph& g) {
    int n = g.vertex_count();
    std::vector<int> by_degree(n);
    std::iota(by_degree.begin(), by_degree.end(), 0);
    std::sort(by_degree.begin(), by_degree.end(), [&](int a, int b) {
        if (g.degree(a) != g.degree(b)) return g.degree(a) > g.degree(b);
        return a < b;
    });
    // Largest m with d_m >= m-1, then the split characterization equality.
    int m = 0;
    for (int i = 0; i < n; ++i) {
        if (g.degree(by_degree[i]) >= i) m = i + 1;
    }
    long long head = 0, tail = 0;
    for (int i = 0; i < n; ++i) {
        if (i < m)
            head += g.degree(by_degree[i]);
        else
            tail += g.degree(by_degree[i]);
    }
    if (head != static_cast<long long>(m) * (m - 1) + tail) return std::nullopt;

    std::vector<int> clique_side(by_degree.begin(), by_degree.begin() + m);
    std::vector<int> ind_side(by_degree.begin() + m, by_degree.end());
    std::sort(clique_side.begin(), clique_side.end());
    std::sort(ind_side.begin(), ind_side.end());
    if (!is_clique(g, clique_side) || !is_independent(g, ind_side)) return std::nullopt;
    return std::make_pair(std::move(clique_side), std::move(ind_side));
}

std::optional<std::vector<std::vector<int>>> bipartition(const Graph& g) {
    int n = g.vertex_count();
    std::vector<int> side(n, -1);
    std::vector<int> stack;
    for (int start = 0; start < n; ++start) {
        if (side[start] >= 0) continue;
        side[start] = 0;
        stack.push_back(start);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : g.neighbors(v)) {
                if (side[w] < 0) {
                    side[w] = 1 - side[v];
                    stack.push_back(w);
                } else if (side[w] == side[v]) {
                    return std::nullopt;
                }
            }
        }
    }
    std::vector<std::vector<int>> sides(2);
    for (int v = 0; v < n; ++v) sides[side[v]].push_back(v);
    return sides;
}

std::optional<std::vector<int>> path_order(const Graph& g) {
    int n = g.vertex_count();
    if (n == 0) return std::vector<int>{};
    if (g.edge_count() != n - 1) return std::nullopt;
    if (n == 1) return std::vector<int>{0};
    int start = -1;
    for (int v = 0; v < n; ++v) {
        if (g.degree(v) > 2) return std::nullopt;
        if (g.degree(v) == 1 && start < 0) start = v;
    }
    if (start < 0) return std::nullopt;
    std::vector<int> order{start};
    int prev = -1, cur = start;
    while (static_cast<int>(order.size()) < n) {
        int next = -1;
        for (int w : g.neighbors(cur)) {
            if (w != prev) {
                next = w;
                break;
            }
        }
        if (next < 0) return std::nullopt;  // disconnected remainder
        order.push_back(next);
        prev = cur;
        cur = next;
    }
    return order;
}

std::optional<std::pair<std::vector<int>, std::vector<int>>> broom_witness(const Graph& g) {
    int n = g.vertex_count();
    if (n == 0) return std::nullopt;
    if (g.edge_count() != n - 1) return std::nullopt;
    if (connected_components(g).size() != 1) return std::nullopt;

    std::vector<int> junctions;
    for (int v = 0; v < n; ++v)
        if (g.degree(v) >= 3) junctions.push_back(v);
    if (junctions.size() > 1) return std::nullopt;

    if (junctions.empty()) {
        // Max degree <= 2: only trivial brooms (stars on <= 3 vertices).
        if (n == 1) return std::make_pair(std::vector<int>{0}, std::vector<int>{});
        if (n == 2) return std::make_pair(std::vector<int>{0}, std::vector<int>{1});
        if (n == 3) {
            for (int v = 0; v < n; ++v) {
                if (g.degree(v) == 2) {
                    std::vector<int> lv;
                    for (int w : g.neighbors(v)) lv.push_back(w);
                    return std::make_pair(std::vector<int>{v}, std::move(lv));
                }
            }
        }
        return std::nullopt;
    }

    int v = junctions.front();
    std::vector<int> leaves, extensions;
    for (int w : g.neighbors(v)) {
        if (g.degree(w) == 1)
            leaves.push_back(w);
        else
            extensions.push_back(w);
    }
    if (extensions.size() > 1) return std::nullopt;
    std::vector<int> handle{v};
    if (!extensions.empty()) {
        int prev = v, cur = extensions.front();
        while (true) {
            handle.push_back(cur);
            if (g.degree(cur) == 1) break;
            int next = -1;
            for (int w : g.neighbors(cur)) {
                if (w != prev) {
                    next = w;
                    break;
                }
            }
            prev = cur;
            cur = next;
        }
    }
    if (static_cast<int>(handle.size() + leaves.size()) != n) return std::nullopt;
    return std::make_pair(std::move(handle), std::move(leaves));
}

ClassLabel classify(const Graph& g) {
    ClassLabel label;
    if (is_complete(g)) {
        label.tag = GraphClass::Clique;
        return label;
    }
    if (auto parts = cluster_parts(g)) {
        label.tag = GraphClass::Cluster;
        label.parts = std::move(*parts);
        return label;
    }
    if (auto parts = cocluster_parts(g)) {
        label.tag = GraphClass::CoCluster;
        label.parts = std::move(*parts);
        return label;
    }
    if (auto split = split_partition(g)) {
        label.tag = GraphClass::Split;
        label.clique_side = std::move(split->first);
        label.independent_side = std::move(split->second);
        return label;
    }
    if (auto order = path_order(g)) {
        label.tag = GraphClass::Path;
        label.path_order = std::move(*order);
        return label;
    }
    if (auto broom = broom_witness(g)) {
        label.tag = GraphClass::Broom;
        label.handle = std::move(broom->first);
        label.leaves = std::move(broom->second);
        return label;
    }
    if (auto sides = bipartition(g)) {
        label.tag = GraphClass::Bipartite;
        label.parts = std::move(*sides);
        return label;
    }
    return label;
}

namespace {

bool is_partition(int n, const std::vector<const std::vector<int>*>& parts) {
    std::vector<char> seen(n, 0);
    int total = 0;
    for (const auto* p : parts) {
        for (int v : *p) {
            if (v < 0 || v >= n || seen[v]) return false;
            seen[v] = 1;
            ++total;
        }
    }
    return total == n;
}

}  // namespace

bool validate_class_label(const Graph& g, const ClassLabel& label) {
    int n = g.vertex_count();
    switch (label.tag) {
        case GraphClass::Clique:
            return is_complete(g);
        case GraphClass::Cluster: {
            std::vector<const std::vector<int>*> ptrs;
            for (const auto& p : label.parts) ptrs.push_back(&p);
            if (!is_partition(n, ptrs)) return false;
            for (const auto& p : label.parts)
                if (!is_clique(g, p)) return false;
            // no edges may cross parts: every edge stays inside one clique
            long long within = 0;
            for (const auto& p : label.parts)
                within += static_cast<long long>(p.size()) * (p.size() - 1) / 2;
            return within == g.edge_count();
        }
        case GraphClass::CoCluster: {
            std::vector<const std::vector<int>*> ptrs;
            for (const auto& p : label.parts) ptrs.push_back(&p);
            if (!is_partition(n, ptrs)) return false;
            long long cross = 0;
            for (const auto& p : label.parts) {
                if (!is_independent(g, p)) return false;
                cross += static_cast<long long>(p.size()) * (n - p.size());
            }
            return cross / 2 == g.edge_count();
        }
        case GraphClass::Split:
            return is_partition(n, {&label.clique_side, &label.independent_side}) &&
                   is_clique(g, label.clique_side) &&
                   is_independent(g, label.independent_side);
        case GraphClass::Path: {
            if (static_cast<int>(label.path_order.size()) != n) return false;
            std::vector<const std::vector<int>*> ptrs{&label.path_order};
            if (!is_partition(n, ptrs)) return false;
            if (g.edge_count() != std::max(n - 1, 0)) return false;
            for (int i = 0; i + 1 < n; ++i)
                if (!g.has_edge(label.path_order[i], label.path_order[i + 1])) return false;
            return true;
        }
        case GraphClass::Broom: {
            if (!is_partition(n, {&label.handle, &label.leaves})) return false;
            int q = static_cast<int>(label.handle.size());
            int p = static_cast<int>(label.leaves.size());
            if (q < 1) return false;
            if (g.edge_count() != q - 1 + p) return false;
            for (int i = 0; i + 1 < q; ++i)
                if (!g.has_edge(label.handle[i], label.handle[i + 1])) return false;
            for (int u : label.leaves)
                if (!g.has_edge(label.handle[0], u)) return false;
            return true;
        }
        case GraphClass::Bipartite: {
            if (label.parts.size() != 2) return false;
            std::vector<const std::vector<int>*> ptrs;
            for (const auto& p : label.parts) ptrs.push_back(&p);
            if (!is_partition(n, ptrs)) return false;
            return is_independent(g, label.parts[0]) && is_independent(g, label.parts[1]);
        }
        case GraphClass::General:
            return true;
    }
    return false;
}

bool validate_deletion_set(const Graph& g, const DeletionSet& ds) {
    int n = g.vertex_count();
    std::vector<char> in(n, 0);
    for (int v : ds.vertices) {
        if (v < 0 || v >= n) return false;
        in[v] = 1;
    }
    switch (ds.kind) {
        case DeletionSet::Kind::VertexCover:
            for (const auto& [u, v] : g.edges())
                if (!in[u] && !in[v]) return false;
            return true;
        case DeletionSet::Kind::ClusterVertexDeletion:
        case DeletionSet::Kind::CliqueModulator: {
            std::vector<int> rest;
            for (int v = 0; v < n; ++v)
                if (!in[v]) rest.push_back(v);
            auto sub = induced_subgraph(g, rest);
            if (ds.kind == DeletionSet::Kind::CliqueModulator)
                return is_complete(sub.graph);
            return cluster_parts(sub.graph).has_value();
        }
    }
    return false;
}

namespace {

bool vc_search(const Graph& g, std::vector<char>& removed, int k, std::vector<int>& chosen) {
    // lexicographically first uncovered edge
    for (const auto& [u, v] : g.edges()) {
        if (removed[u] || removed[v]) continue;
        if (k == 0) return false;
        for (int pick : {u, v}) {
            removed[pick] = 1;
            chosen.push_back(pick);
            if (vc_search(g, removed, k - 1, chosen)) return true;
            chosen.pop_back();
            removed[pick] = 0;
        }
        return false;
    }
    return true;
}

bool cvd_search(const Graph& g, std::vector<char>& removed, int k, std::vector<int>& chosen) {
    // lexicographically first induced P3 (i < j < l by vertex id)
    int n = g.vertex_count();
    int a = -1, b = -1, c = -1;
    for (int i = 0; i < n && a < 0; ++i) {
        if (removed[i]) continue;
        for (int j = i + 1; j < n && a < 0; ++j) {
            if (removed[j]) continue;
            for (int l = j + 1; l < n; ++l) {
                if (removed[l]) continue;
                int count = g.has_edge(i, j) + g.has_edge(i, l) + g.has_edge(j, l);
                if (count == 2) {
                    a = i;
                    b = j;
                    c = l;
                    break;
                }
            }
        }
    }
    if (a < 0) return true;  // cluster graph already
    if (k == 0) return false;
    for (int pick : {a, b, c}) {
        removed[pick] = 1;
        chosen.push_back(pick);
        if (cvd_search(g, removed, k - 1, chosen)) return true;
        chosen.pop_back();
        removed[pick] = 0;
    }
    return false;
}

}  // namespace

std::optional<DeletionSet> find_vertex_cover(const Graph& g, int k) {
    if (k < 0) return std::nullopt;
    std::vector<char> removed(g.vertex_count(), 0);
    std::vector<int> chosen;
    if (!vc_search(g, removed, k, chosen)) return std::nullopt;
    std::sort(chosen.begin(), chosen.end());
    return DeletionSet{DeletionSet::Kind::VertexCover, std::move(chosen)};
}

std::optional<DeletionSet> find_cvd(const Graph& g, int k) {
    if (k < 0) return std::nullopt;
    std::vector<char> removed(g.vertex_count(), 0);
    std::vector<int> chosen;
    if (!cvd_search(g, removed, k, chosen)) return std::nullopt;
    std::sort(chosen.begin(), chosen.end());
    return DeletionSet{DeletionSet::Kind::ClusterVertexDeletion, std::move(chosen)};
}

std::optional<DeletionSet> find_clique_modulator(const Graph& g, int k) {
    auto vc = find_vertex_cover(complement(g), k);
    if (!vc) return std::nullopt;
    return DeletionSet{DeletionSet::Kind::CliqueModulator, std::move(vc->vertices)};
}

}  // namespace bcolor
