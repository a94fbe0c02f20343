#include "bcolor/oracle.hpp"

#include <algorithm>
#include <stdexcept>

namespace bcolor {

namespace {

struct Backtracker {
    const Graph& g;
    const std::vector<int>& budgets;
    int c;
    std::vector<int> order;       // vertices still to color, ascending id
    std::vector<int> color;       // 0 = unassigned
    std::vector<int> remaining;   // per color
    long long nodes_left;

    bool search(std::size_t pos, long long need) {
        if (pos == order.size()) return true;
        long long avail = 0;
        for (int i = 0; i < c; ++i) avail += remaining[i];
        if (avail < need) return false;
        int v = order[pos];
        for (int col = 1; col <= c; ++col) {
            if (--nodes_left < 0)
                throw std::runtime_error("oracle: node budget exhausted");
            if (remaining[col - 1] == 0) continue;
            bool conflict = false;
            for (int w : g.neighbors(v)) {
                if (color[w] == col) {
                    conflict = true;
                    break;
                }
            }
            if (conflict) continue;
            color[v] = col;
            --remaining[col - 1];
            if (search(pos + 1, need - 1)) return true;
            ++remaining[col - 1];
            color[v] = 0;
        }
        return false;
    }
};

}  // namespace

SolveResult oracle_bcp(const BcpInstance& inst, const OracleOptions& opts) {
    int n = inst.g.vertex_count();
    if (budget_sum(inst) < n) return SolveResult::no();
    if (n == 0) return SolveResult::from(Coloring{});

    Backtracker bt{inst.g, inst.budgets, inst.c, {}, {}, inst.budgets, opts.max_nodes};
    bt.color.assign(n, 0);
    bt.order.resize(n);
    for (int v = 0; v < n; ++v) bt.order[v] = v;
    if (!bt.search(0, n)) return SolveResult::no();
    return SolveResult::from(Coloring{std::move(bt.color)});
}

SolveResult oracle_ebcp(const EbcpInstance& e, const OracleOptions& opts) {
    const BcpInstance& inst = e.inst;
    int n = inst.g.vertex_count();
    if (budget_sum(inst) < n) return SolveResult::no();

    Backtracker bt{inst.g, inst.budgets, inst.c, {}, {}, inst.budgets, opts.max_nodes};
    bt.color.assign(n, 0);
    for (std::size_t i = 0; i < e.parts.size(); ++i) {
        int a = e.part_color[i];
        for (int v : e.parts[i]) {
            bt.color[v] = a;
            if (--bt.remaining[a - 1] < 0) return SolveResult::no();
        }
    }
    for (int v = 0; v < n; ++v)
        if (bt.color[v] == 0) bt.order.push_back(v);
    if (!bt.search(0, static_cast<long long>(bt.order.size()))) return SolveResult::no();
    Coloring col{std::move(bt.color)};
    if (!verify_bcp(inst, col)) return SolveResult::no();
    return SolveResult::from(std::move(col));
}

BigInt oracle_cover_count(const BcpInstance& inst) {
    int n = inst.g.vertex_count();
    if (n > 14) throw std::invalid_argument("oracle_cover_count: n > 14");
    std::uint32_t full = n == 0 ? 0u : (1u << n) - 1;

    // All independent sets, as bitmasks, with their sizes.
    std::vector<std::uint32_t> ind;
    for (std::uint32_t m = 0; m <= full; ++m) {
        bool ok = true;
        for (int v = 0; v < n && ok; ++v) {
            if ((m >> v) & 1u) {
                if (inst.g.neighbor_mask(v) & m) ok = false;
            }
        }
        if (ok) ind.push_back(m);
        if (full == 0) break;
    }

    // Tuple counts stay below 2^63 iff |ind|^c does; otherwise fall back to
    // exact big integers.
    long double bound = 1;
    for (int i = 0; i < inst.c; ++i) bound *= static_cast<long double>(ind.size());
    if (bound < 9e18L) {
        std::vector<std::uint64_t> t(full + 1ull, 0), nxt(full + 1ull, 0);
        t[0] = 1;
        for (int i = 0; i < inst.c; ++i) {
            std::fill(nxt.begin(), nxt.end(), 0);
            int b = inst.budgets[i];
            for (std::uint32_t mask = 0; mask <= full; ++mask) {
                if (t[mask] == 0) continue;
                for (std::uint32_t s : ind) {
                    if (static_cast<int>(__builtin_popcount(s)) <= b)
                        nxt[mask | s] += t[mask];
                }
                if (full == 0) break;
            }
            t.swap(nxt);
        }
        return BigInt::from_u64(t[full]);
    }

    std::vector<BigInt> t(full + 1ull), nxt(full + 1ull);
    t[0] = BigInt(1);
    for (int i = 0; i < inst.c; ++i) {
        for (auto& x : nxt) x = BigInt();
        int b = inst.budgets[i];
        for (std::uint32_t mask = 0; mask <= full; ++mask) {
            if (t[mask].is_zero()) continue;
            for (std::uint32_t s : ind) {
                if (static_cast<int>(__builtin_popcount(s)) <= b) nxt[mask | s] += t[mask];
            }
            if (full == 0) break;
        }
        t.swap(nxt);
    }
    return t[full];
}

}  // namespace bcolor
