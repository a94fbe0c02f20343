#include "bcolor/poly_solvers.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace bcolor {

namespace {

SolveResult finish(const BcpInstance& inst, Coloring col) {
    if (!verify_bcp(inst, col))
        throw std::logic_error("solver: constructed coloring failed verification");
    return SolveResult::from(std::move(col));
}

// Positions 0,2,4,... then 1,3,5,... of a path of length n.
std::vector<int> odd_even_sequence(int n) {
    std::vector<int> seq;
    seq.reserve(n);
    for (int i = 0; i < n; i += 2) seq.push_back(i);
    for (int i = 1; i < n; i += 2) seq.push_back(i);
    return seq;
}

// Whether budgets (already restricted to the allowed colors) can properly
// color a path of len vertices: every color is usable at most ceil(len/2)
// times, and the truncated budgets must cover len.
bool path_feasible(const std::vector<int>& budgets, int len) {
    if (len == 0) return true;
    int cap = (len + 1) / 2;
    long long total = 0;
    for (int b : budgets) total += std::min(b, cap);
    if (len == 1) return total >= 1;
    return total >= len;
}

// Lays out color blocks (largest truncated budget first, ties by color
// index) over the odd-then-even position sequence. Returns per-position
// colors; positive budgets are consumed greedily. pre: path_feasible.
std::vector<int> path_layout(const std::vector<int>& budgets, int len) {
    int cap = (len + 1) / 2;
    std::vector<std::pair<int, int>> pool;  // (truncated budget, color)
    for (std::size_t i = 0; i < budgets.size(); ++i) {
        int t = std::min(budgets[i], cap);
        if (t > 0) pool.emplace_back(t, static_cast<int>(i) + 1);
    }
    std::sort(pool.begin(), pool.end(), [](const auto& a, const auto& b) {
        if (a.first != b.first) return a.first > b.first;
        return a.second < b.second;
    });
    std::vector<int> seq = odd_even_sequence(len);
    std::vector<int> color(len, 0);
    int pos = 0;
    for (const auto& [t, col] : pool) {
        for (int used = 0; used < t && pos < len; ++used) color[seq[pos++]] = col;
        if (pos == len) break;
    }
    return color;
}

}  // namespace

std::optional<ClusterView> make_cluster_view(const Graph& g) {
    ClusterView view;
    for (auto& comp : connected_components(g)) {
        if (!is_clique(g, comp)) return std::nullopt;
        view.clusters.push_back(std::move(comp));
    }
    std::sort(view.clusters.begin(), view.clusters.end(),
              [](const std::vector<int>& a, const std::vector<int>& b) {
                  if (a.size() != b.size()) return a.size() > b.size();
                  return a.front() < b.front();
              });
    for (const auto& cl : view.clusters) view.sizes.push_back(static_cast<int>(cl.size()));
    return view;
}

SolveResult solve_cluster(const BcpInstance& inst, const ClusterView& view) {
    int n = inst.g.vertex_count();
    int covered = std::accumulate(view.sizes.begin(), view.sizes.end(), 0);
    if (covered != n) throw std::invalid_argument("solve_cluster: view does not match graph");
    if (budget_sum(inst) < n) return SolveResult::no();

    std::vector<std::pair<int, int>> pool;  // (budget, color), kept sorted
    for (int i = 0; i < inst.c; ++i) pool.emplace_back(inst.budgets[i], i + 1);
    auto resort = [&pool] {
        std::sort(pool.begin(), pool.end(), [](const auto& a, const auto& b) {
            if (a.first != b.first) return a.first > b.first;
            return a.second < b.second;
        });
    };
    resort();

    Coloring col;
    col.color.assign(n, 0);
    for (const auto& clique : view.clusters) {
        if (static_cast<int>(clique.size()) > inst.c) return SolveResult::no();
        for (std::size_t j = 0; j < clique.size(); ++j) {
            if (pool[j].first < 1) return SolveResult::no();
            col.color[clique[j]] = pool[j].second;
            --pool[j].first;
        }
        resort();
    }
    return finish(inst, std::move(col));
}

SolveResult solve_bipartite_c2(const BcpInstance& inst,
                               const std::vector<std::vector<int>>& bipartition) {
    if (inst.c != 2) throw std::invalid_argument("solve_bipartite_c2: needs exactly 2 colors");
    if (bipartition.size() != 2)
        throw std::invalid_argument("solve_bipartite_c2: needs two sides");
    int n = inst.g.vertex_count();
    std::vector<int> side(n, -1);
    for (int s = 0; s < 2; ++s) {
        for (int v : bipartition[s]) {
            if (v < 0 || v >= n || side[v] != -1)
                throw std::invalid_argument("solve_bipartite_c2: invalid bipartition");
            side[v] = s;
        }
    }
    for (int v = 0; v < n; ++v)
        if (side[v] == -1) throw std::invalid_argument("solve_bipartite_c2: uncovered vertex");
    for (const auto& [u, v] : inst.g.edges())
        if (side[u] == side[v])
            throw std::invalid_argument("solve_bipartite_c2: graph is not bipartite on witness");

    // Per component: the smaller side is forced onto both colors' budgets,
    // the size difference is a free item for the subset sum.
    auto comps = connected_components(inst.g);
    int ell = static_cast<int>(comps.size());
    std::vector<std::vector<int>> big(ell), small(ell);
    long long x = 0;
    std::vector<int> y(ell, 0);
    long long y_total = 0;
    for (int i = 0; i < ell; ++i) {
        std::vector<int> a, b;
        for (int v : comps[i]) (side[v] == 0 ? a : b).push_back(v);
        if (a.size() < b.size()) std::swap(a, b);
        big[i] = std::move(a);
        small[i] = std::move(b);
        x += static_cast<long long>(small[i].size());
        y[i] = static_cast<int>(big[i].size() - small[i].size());
        y_total += y[i];
    }
    long long b1 = inst.budgets[0], b2 = inst.budgets[1];
    if (std::min(b1, b2) < x) return SolveResult::no();
    long long r1 = b1 - x, r2 = b2 - x;

    // Subset sum over the positive y_i with predecessor reconstruction.
    int target_cap = static_cast<int>(y_total);
    std::vector<int> via(target_cap + 1, -2);
    via[0] = -1;
    for (int i = 0; i < ell; ++i) {
        if (y[i] == 0) continue;
        for (int s = target_cap; s >= y[i]; --s) {
            if (via[s] == -2 && via[s - y[i]] != -2) via[s] = i;
        }
    }
    int chosen = -1;
    for (int s = 0; s <= target_cap; ++s) {
        if (via[s] == -2) continue;
        if (s <= r1 && y_total - s <= r2) {
            chosen = s;
            break;
        }
    }
    if (chosen < 0) return SolveResult::no();

    std::vector<char> in_x(ell, 0);
    for (int s = chosen; s > 0; s = s - y[via[s]]) in_x[via[s]] = 1;

    Coloring col;
    col.color.assign(n, 0);
    for (int i = 0; i < ell; ++i) {
        int big_color = in_x[i] ? 1 : 2;
        for (int v : big[i]) col.color[v] = big_color;
        for (int v : small[i]) col.color[v] = 3 - big_color;
    }
    return finish(inst, std::move(col));
}

SolveResult solve_path(const BcpInstance& inst, const std::vector<int>& order) {
    int n = inst.g.vertex_count();
    if (static_cast<int>(order.size()) != n || inst.g.edge_count() != std::max(n - 1, 0))
        throw std::invalid_argument("solve_path: order does not describe a path");
    for (int i = 0; i + 1 < n; ++i)
        if (!inst.g.has_edge(order[i], order[i + 1]))
            throw std::invalid_argument("solve_path: order does not describe a path");

    if (n == 0) return finish(inst, Coloring{});
    if (n == 1) {
        for (int i = 0; i < inst.c; ++i) {
            if (inst.budgets[i] >= 1) {
                Coloring col;
                col.color.assign(1, i + 1);
                return finish(inst, std::move(col));
            }
        }
        return SolveResult::no();
    }
    if (inst.c < 2 || !path_feasible(inst.budgets, n)) return SolveResult::no();

    std::vector<int> by_pos = path_layout(inst.budgets, n);
    Coloring col;
    col.color.assign(n, 0);
    for (int i = 0; i < n; ++i) col.color[order[i]] = by_pos[i];
    return finish(inst, std::move(col));
}

SolveResult solve_broom(const BcpInstance& inst, const std::vector<int>& handle,
                        const std::vector<int>& leaves) {
    int q = static_cast<int>(handle.size());
    int p = static_cast<int>(leaves.size());
    int n = inst.g.vertex_count();
    if (q + p != n) throw std::invalid_argument("solve_broom: witness does not cover graph");
    if (inst.g.edge_count() != std::max(q - 1, 0) + p)
        throw std::invalid_argument("solve_broom: not a broom");
    for (int i = 0; i + 1 < q; ++i)
        if (!inst.g.has_edge(handle[i], handle[i + 1]))
            throw std::invalid_argument("solve_broom: handle is not a path");
    for (int u : leaves)
        if (!inst.g.has_edge(handle.at(0), u))
            throw std::invalid_argument("solve_broom: leaf not attached to handle start");

    if (p == 0) return solve_path(inst, handle);
    if (budget_sum(inst) < n) return SolveResult::no();

    // Minimum positive budget color for the handle start.
    int m = -1;
    for (int i = 0; i < inst.c; ++i) {
        if (inst.budgets[i] >= 1 && (m < 0 || inst.budgets[i] < inst.budgets[m])) m = i;
    }
    if (m < 0) return SolveResult::no();
    int bm = inst.budgets[m];

    int x = std::min(bm, (q + 1) / 2);     // handle positions 0,2,..,2(x-1)
    int singles = x - 1;                   // odd positions fenced in by m
    int tail_len = std::max(q - 2 * x + 1, 0);

    std::vector<int> rest = inst.budgets;
    rest[m] = 0;
    if (!path_feasible(rest, tail_len)) return SolveResult::no();
    long long rest_total = 0;
    for (int b : rest) rest_total += b;
    if (rest_total < static_cast<long long>(singles) + tail_len + p) return SolveResult::no();

    Coloring col;
    col.color.assign(n, 0);
    for (int i = 0; i < x; ++i) col.color[handle[2 * i]] = m + 1;

    std::vector<int> used(inst.c, 0);
    if (tail_len > 0) {
        std::vector<int> tail_colors = path_layout(rest, tail_len);
        for (int i = 0; i < tail_len; ++i) {
            col.color[handle[2 * x - 1 + i]] = tail_colors[i];
            ++used[tail_colors[i] - 1];
        }
    }
    // Singles and leaves take any leftover non-m budget.
    std::vector<int> open;
    for (int i = 1; i < 2 * x - 2; i += 2) open.push_back(handle[i]);
    for (int u : leaves) open.push_back(u);
    int color_cursor = 0;
    for (int v : open) {
        while (color_cursor < inst.c &&
               (color_cursor == m || rest[color_cursor] - used[color_cursor] <= 0))
            ++color_cursor;
        if (color_cursor == inst.c)
            throw std::logic_error("solve_broom: budget accounting failed");
        col.color[v] = color_cursor + 1;
        ++used[color_cursor];
    }
    return finish(inst, std::move(col));
}

SolveResult solve_clique(const BcpInstance& inst) {
    int n = inst.g.vertex_count();
    if (inst.g.edge_count() != n * (n - 1) / 2)
        throw std::invalid_argument("solve_clique: graph is not complete");
    std::vector<int> usable;
    for (int i = 0; i < inst.c; ++i)
        if (inst.budgets[i] >= 1) usable.push_back(i + 1);
    if (static_cast<int>(usable.size()) < n) return SolveResult::no();
    Coloring col;
    col.color.assign(n, 0);
    for (int v = 0; v < n; ++v) col.color[v] = usable[v];
    return finish(inst, std::move(col));
}

}  // namespace bcolor
