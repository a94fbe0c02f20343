#pragma once

// Shared brute-force helpers for the test suites. Everything here is an
// independent route: plain enumeration, no reuse of the solver code paths
// under test.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <vector>

#include "bcolor/graph.hpp"
#include "bcolor/instance.hpp"

namespace testsupport {

using bcolor::Graph;

// Edge positions (i, j), i < j, lexicographic; bit k of a mask = edge k.
inline std::vector<std::pair<int, int>> edge_positions(int n) {
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) out.emplace_back(i, j);
    return out;
}

inline Graph graph_from_mask(int n, std::uint32_t mask) {
    auto pos = edge_positions(n);
    std::vector<std::pair<int, int>> edges;
    for (std::size_t k = 0; k < pos.size(); ++k)
        if ((mask >> k) & 1u) edges.push_back(pos[k]);
    return Graph::from_edges(n, std::move(edges));
}

inline std::uint32_t graph_mask_count(int n) { return 1u << (n * (n - 1) / 2); }

// All budget vectors of length c with entries in [lo, hi].
inline std::vector<std::vector<int>> all_budget_vectors(int c, int lo, int hi) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(c, lo);
    while (true) {
        out.push_back(cur);
        int i = c - 1;
        while (i >= 0 && cur[i] == hi) --i;
        if (i < 0) break;
        ++cur[i];
        for (int j = i + 1; j < c; ++j) cur[j] = lo;
    }
    return out;
}

inline int brute_min_vertex_cover(const Graph& g) {
    int n = g.vertex_count();
    for (int k = 0; k <= n; ++k) {
        for (std::uint32_t s = 0; s < (1u << n); ++s) {
            if (__builtin_popcount(s) != k) continue;
            bool covers = true;
            for (const auto& [u, v] : g.edges()) {
                if (!((s >> u) & 1u) && !((s >> v) & 1u)) {
                    covers = false;
                    break;
                }
            }
            if (covers) return k;
        }
    }
    return n;
}

inline bool is_cluster_graph(const Graph& g) {
    for (const auto& comp : bcolor::connected_components(g))
        if (!bcolor::is_clique(g, comp)) return false;
    return true;
}

inline int brute_min_cvd(const Graph& g) {
    int n = g.vertex_count();
    for (int k = 0; k <= n; ++k) {
        for (std::uint32_t s = 0; s < (1u << n); ++s) {
            if (__builtin_popcount(s) != k) continue;
            std::vector<int> rest;
            for (int v = 0; v < n; ++v)
                if (!((s >> v) & 1u)) rest.push_back(v);
            if (is_cluster_graph(bcolor::induced_subgraph(g, rest).graph)) return k;
        }
    }
    return n;
}

inline bool brute_has_clique(const Graph& g, int size) {
    int n = g.vertex_count();
    if (size <= 0) return true;
    if (size > n) return false;
    for (std::uint32_t s = 0; s < (1u << n); ++s) {
        if (__builtin_popcount(s) != size) continue;
        std::vector<int> verts;
        for (int v = 0; v < n; ++v)
            if ((s >> v) & 1u) verts.push_back(v);
        if (bcolor::is_clique(g, verts)) return true;
    }
    return false;
}

// Proper c-coloring with every class of size floor(n/c) or ceil(n/c)?
inline bool brute_equitable_feasible(const Graph& g, int c) {
    int n = g.vertex_count();
    int hi = (n + c - 1) / c;
    std::vector<int> color(n, 0), sizes(c, 0);
    std::function<bool(int)> go = [&](int v) -> bool {
        if (v == n) {
            int lo = n / c;
            for (int i = 0; i < c; ++i)
                if (sizes[i] != lo && sizes[i] != hi) return false;
            return true;
        }
        for (int col = 1; col <= c; ++col) {
            if (sizes[col - 1] == hi) continue;
            bool clash = false;
            for (int w : g.neighbors(v)) {
                if (w < v && color[w] == col) {
                    clash = true;
                    break;
                }
            }
            if (clash) continue;
            color[v] = col;
            ++sizes[col - 1];
            if (go(v + 1)) return true;
            --sizes[col - 1];
            color[v] = 0;
        }
        return false;
    };
    return go(0);
}

// Proper coloring with every class size <= its budget? The dumbest possible
// route: a full odometer over all c^n assignments. Only for tiny n; this is
// what the oracle module itself is validated against.
inline bool brute_bcp_feasible(const bcolor::BcpInstance& inst) {
    int n = inst.g.vertex_count();
    if (n == 0) return true;
    if (inst.c == 0) return false;
    std::vector<int> color(n, 1);
    while (true) {
        bool ok = true;
        for (const auto& [u, v] : inst.g.edges())
            if (color[u] == color[v]) ok = false;
        if (ok) {
            std::vector<int> sizes(inst.c, 0);
            for (int x : color) ++sizes[x - 1];
            for (int i = 0; i < inst.c; ++i)
                if (sizes[i] > inst.budgets[i]) ok = false;
        }
        if (ok) return true;
        int i = n - 1;
        while (i >= 0 && color[i] == inst.c) --i;
        if (i < 0) return false;
        ++color[i];
        for (int j = i + 1; j < n; ++j) color[j] = 1;
    }
}

// Exists S with |S| = k (exactly) and N[S] = V?
inline bool brute_dominating_set(const Graph& g, int k) {
    int n = g.vertex_count();
    if (k > n) return false;
    for (std::uint32_t s = 0; s < (1u << n); ++s) {
        if (__builtin_popcount(s) != k) continue;
        bool all = true;
        for (int v = 0; v < n && all; ++v) {
            bool hit = (s >> v) & 1u;
            for (int w : g.neighbors(v))
                if ((s >> w) & 1u) hit = true;
            if (!hit) all = false;
        }
        if (all) return true;
    }
    return false;
}

// Exists S with |S| = k and every vertex adjacent to some member of S?
inline bool brute_total_dominating_set(const Graph& g, int k) {
    int n = g.vertex_count();
    if (k > n) return false;
    for (std::uint32_t s = 0; s < (1u << n); ++s) {
        if (__builtin_popcount(s) != k) continue;
        bool all = true;
        for (int v = 0; v < n && all; ++v) {
            bool hit = false;
            for (int w : g.neighbors(v))
                if ((s >> w) & 1u) hit = true;
            if (!hit) all = false;
        }
        if (all) return true;
    }
    return false;
}

// K_{k,k} subgraph of a bipartite graph given by side size n and cross edges.
inline bool brute_biclique(int n, const std::vector<std::pair<int, int>>& cross, int k) {
    std::vector<std::uint32_t> row(n, 0);
    for (const auto& [i, j] : cross) row[i] |= 1u << j;
    std::vector<int> left;
    std::function<bool(int, std::uint32_t)> go = [&](int next, std::uint32_t common) -> bool {
        if (static_cast<int>(left.size()) == k)
            return __builtin_popcount(common) >= k;
        for (int i = next; i < n; ++i) {
            std::uint32_t c2 = common & row[i];
            if (__builtin_popcount(c2) < k) continue;
            left.push_back(i);
            if (go(i + 1, c2)) return true;
            left.pop_back();
        }
        return false;
    };
    return go(0, n >= 32 ? ~0u : (1u << n) - 1);
}

// Partition of x (by index) into triples each summing to w?
inline bool brute_3partition(const std::vector<int>& x, int w) {
    int m = static_cast<int>(x.size());
    std::vector<char> used(m, 0);
    std::function<bool(int)> go = [&](int done) -> bool {
        if (done == m) return true;
        int first = 0;
        while (used[first]) ++first;
        used[first] = 1;
        for (int a = first + 1; a < m; ++a) {
            if (used[a]) continue;
            used[a] = 1;
            for (int b = a + 1; b < m; ++b) {
                if (used[b]) continue;
                if (x[first] + x[a] + x[b] != w) continue;
                used[b] = 1;
                if (go(done + 3)) return true;
                used[b] = 0;
            }
            used[a] = 0;
        }
        used[first] = 0;
        return false;
    };
    return go(0);
}

// All set partitions of {0..n-1}, restricted-growth order.
inline void for_each_set_partition(
    int n, const std::function<void(const std::vector<std::vector<int>>&)>& visit) {
    std::vector<std::vector<int>> parts;
    std::function<void(int)> go = [&](int v) {
        if (v == n) {
            visit(parts);
            return;
        }
        for (std::size_t j = 0; j <= parts.size(); ++j) {
            if (j < parts.size()) {
                parts[j].push_back(v);
                go(v + 1);
                parts[j].pop_back();
            } else {
                parts.push_back({v});
                go(v + 1);
                parts.pop_back();
            }
        }
    };
    if (n == 0) {
        visit(parts);
        return;
    }
    go(0);
}

inline long long brute_independent_partition_count(const Graph& g, const std::vector<int>& s) {
    long long count = 0;
    for_each_set_partition(static_cast<int>(s.size()), [&](const auto& parts) {
        for (const auto& p : parts) {
            std::vector<int> verts;
            for (int idx : p) verts.push_back(s[idx]);
            if (!bcolor::is_independent(g, verts)) return;
        }
        ++count;
    });
    return count;
}

// Non-isomorphic graphs on exactly n vertices, as canonical edge masks
// (minimum over all vertex permutations). Grown incrementally.
inline const std::vector<std::uint32_t>& noniso_graph_masks(int n) {
    static std::map<int, std::vector<std::uint32_t>> cache;
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    auto canonical = [](int nn, std::uint32_t mask) {
        auto pos = edge_positions(nn);
        std::vector<std::vector<int>> pair_index(nn, std::vector<int>(nn, -1));
        for (std::size_t k = 0; k < pos.size(); ++k) {
            pair_index[pos[k].first][pos[k].second] = static_cast<int>(k);
            pair_index[pos[k].second][pos[k].first] = static_cast<int>(k);
        }
        std::vector<int> perm(nn);
        for (int i = 0; i < nn; ++i) perm[i] = i;
        std::uint32_t best = mask;
        do {
            std::uint32_t remapped = 0;
            for (std::size_t k = 0; k < pos.size(); ++k) {
                if ((mask >> k) & 1u)
                    remapped |= 1u << pair_index[perm[pos[k].first]][perm[pos[k].second]];
            }
            if (remapped < best) best = remapped;
        } while (std::next_permutation(perm.begin(), perm.end()));
        return best;
    };

    std::vector<std::uint32_t> result;
    if (n == 0) {
        result = {0};
    } else {
        const auto& prev = noniso_graph_masks(n - 1);
        int old_bits = (n - 1) * (n - 2) / 2;
        std::set<std::uint32_t> seen;
        for (std::uint32_t base : prev) {
            // re-embed: previous edge (i,j) keeps its position only if the
            // position tables match; rebuild explicitly instead
            auto old_pos = edge_positions(n - 1);
            auto new_pos = edge_positions(n);
            std::vector<std::vector<int>> idx(n, std::vector<int>(n, -1));
            for (std::size_t k = 0; k < new_pos.size(); ++k) {
                idx[new_pos[k].first][new_pos[k].second] = static_cast<int>(k);
            }
            std::uint32_t embedded = 0;
            for (int k = 0; k < old_bits; ++k)
                if ((base >> k) & 1u) embedded |= 1u << idx[old_pos[k].first][old_pos[k].second];
            for (std::uint32_t nb = 0; nb < (1u << (n - 1)); ++nb) {
                std::uint32_t mask = embedded;
                for (int v = 0; v < n - 1; ++v)
                    if ((nb >> v) & 1u) mask |= 1u << idx[v][n - 1];
                seen.insert(canonical(n, mask));
            }
        }
        result.assign(seen.begin(), seen.end());
    }
    return cache.emplace(n, std::move(result)).first->second;
}

}  // namespace testsupport
