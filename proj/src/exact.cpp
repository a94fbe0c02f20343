#include "bcolor/exact.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "bcolor/parallel.hpp"

namespace bcolor {

namespace {

int popcount64(std::uint64_t x) { return __builtin_popcountll(x); }

// One f table, in place: start from the base layer and fold vertices in.
// The low layers are run block-by-block while each block is cache-resident;
// only the layers above the block size stream over the whole table.
std::vector<TableWord> build_one_table(const std::vector<std::uint8_t>& ind, int n,
                                       int budget, bool parallel) {
    std::uint64_t size = 1ull << n;
    std::uint64_t full = size - 1;
    std::vector<TableWord> f(size);
    int block_bits = n < 14 ? n : 14;  // 2^14 words = 64 KiB per block
    std::uint64_t block = 1ull << block_bits;

    auto low_pass = [&](std::uint64_t lo, std::uint64_t hi) {
        for (std::uint64_t start = lo; start < hi; start += block) {
            for (std::uint64_t w = start; w < start + block; ++w) {
                std::uint64_t rest = full & ~w;
                f[w] = (ind[rest] && popcount64(rest) <= budget) ? 1 : 0;
            }
            for (int j = 0; j < block_bits; ++j) {
                std::uint64_t bit = 1ull << j;
                for (std::uint64_t w = start; w < start + block; ++w) {
                    if (!(w & bit)) f[w] += f[w | bit];
                }
            }
        }
    };
    auto high_layer = [&](int j, std::uint64_t lo, std::uint64_t hi) {
        std::uint64_t bit = 1ull << j;
        for (std::uint64_t w = lo; w < hi; ++w) {
            if (!(w & bit)) f[w] += f[w | bit];
        }
    };
    if (parallel && thread_count() > 1 && n >= 16) {
        std::uint64_t blocks = size >> block_bits;
        parallel_ranges(blocks, [&](std::size_t lo, std::size_t hi) {
            low_pass(lo << block_bits, hi << block_bits);
        });
        for (int j = block_bits; j < n; ++j)
            parallel_ranges(size,
                            [&](std::size_t lo, std::size_t hi) { high_layer(j, lo, hi); });
    } else {
        low_pass(0, size);
        for (int j = block_bits; j < n; ++j) high_layer(j, 0, size);
    }
    return f;
}

// Signed accumulator with a 128-bit fast lane and a BigInt spill.
struct SignedAccumulator {
    unsigned __int128 pos = 0, neg = 0;
    BigInt pos_big, neg_big;

    void add(unsigned __int128 v, bool negative) {
        unsigned __int128& lane = negative ? neg : pos;
        BigInt& big = negative ? neg_big : pos_big;
        if (lane > ~v) {  // lane + v would wrap
            big += BigInt::from_u128(lane);
            lane = 0;
        }
        lane += v;
    }

    void add_big(const BigInt& v, bool negative) {
        (negative ? neg_big : pos_big) += v;
    }

    BigInt total() const {
        BigInt t = pos_big;
        t += BigInt::from_u128(pos);
        t -= neg_big;
        t -= BigInt::from_u128(neg);
        return t;
    }

    void merge(const SignedAccumulator& other) {
        add_big(other.pos_big, false);
        add_big(other.neg_big, true);
        add(other.pos, false);
        add(other.neg, true);
    }
};

// Product of the per-color table entries at W; falls back to BigInt when the
// 128-bit product could overflow.
void accumulate_term(SignedAccumulator& acc, const std::vector<const TableWord*>& cols,
                     std::uint64_t idx, bool negative, bool fits_u128) {
    if (fits_u128) {
        unsigned __int128 p = 1;
        for (const TableWord* t : cols) {
            std::uint64_t v = t[idx];
            if (v == 0) return;
            p *= v;
        }
        acc.add(p, negative);
        return;
    }
    BigInt p(1);
    for (const TableWord* t : cols) {
        std::uint64_t v = t[idx];
        if (v == 0) return;
        p.mul_u64(v);
    }
    acc.add_big(p, negative);
}

}  // namespace

std::vector<std::uint8_t> independent_set_table(const Graph& g) {
    int n = g.vertex_count();
    if (n > 24) throw std::invalid_argument("independent_set_table: n > 24");
    std::uint64_t size = 1ull << n;
    std::vector<std::uint8_t> ind(size, 1);
    for (std::uint64_t m = 1; m < size; ++m) {
        int v = __builtin_ctzll(m);
        std::uint64_t rest = m & (m - 1);
        ind[m] = ind[rest] && !(g.neighbor_mask(v) & rest);
    }
    return ind;
}

const std::vector<TableWord>& CoverCountTables::table_for(int budget) const {
    int clamped = std::min(budget, n);
    auto it = std::lower_bound(budget_values.begin(), budget_values.end(), clamped);
    if (it == budget_values.end() || *it != clamped)
        throw std::invalid_argument("cover tables: budget value not built");
    return tables[static_cast<std::size_t>(it - budget_values.begin())];
}

CoverCountTables build_tables(const Graph& g, const std::vector<int>& budgets,
                              const ExactOptions& opts) {
    int n = g.vertex_count();
    if (n > opts.max_n) throw std::invalid_argument("build_tables: n above cap");
    CoverCountTables out;
    out.n = n;
    for (int b : budgets) out.budget_values.push_back(std::min(b, n));
    std::sort(out.budget_values.begin(), out.budget_values.end());
    out.budget_values.erase(std::unique(out.budget_values.begin(), out.budget_values.end()),
                            out.budget_values.end());
    std::vector<std::uint8_t> ind = independent_set_table(g);
    for (int b : out.budget_values)
        out.tables.push_back(build_one_table(ind, n, b, opts.parallel));
    return out;
}

BigInt count_budgeted_covers(const BcpInstance& inst, const ExactOptions& opts) {
    int n = inst.g.vertex_count();
    CoverCountTables tables = build_tables(inst.g, inst.budgets, opts);
    std::vector<const TableWord*> cols;
    for (int b : inst.budgets) cols.push_back(tables.table_for(b).data());

    // each factor is < 2^(n+1); keep the product in 128 bits when safe
    bool fits = static_cast<long long>(n + 1) * std::max(inst.c, 1) <= 120;
    std::uint64_t size = 1ull << n;

    int workers = opts.parallel ? thread_count() : 1;
    if (workers <= 1 || size < (1u << 12)) {
        SignedAccumulator acc;
        for (std::uint64_t w = 0; w < size; ++w)
            accumulate_term(acc, cols, w, popcount64(w) & 1, fits);
        BigInt total = acc.total();
        if (total.sign() < 0)
            throw std::logic_error("count_budgeted_covers: negative total");
        return total;
    }
    std::vector<SignedAccumulator> parts(workers);
    parallel_chunks(size, [&](std::size_t slot, std::size_t lo, std::size_t hi) {
        SignedAccumulator local;
        for (std::uint64_t w = lo; w < hi; ++w)
            accumulate_term(local, cols, w, popcount64(w) & 1, fits);
        parts[slot].merge(local);
    });
    SignedAccumulator acc;
    for (const auto& p : parts) acc.merge(p);
    BigInt total = acc.total();
    if (total.sign() < 0) throw std::logic_error("count_budgeted_covers: negative total");
    return total;
}

namespace {

// Counts covers of the vertices in rest_mask where color i additionally
// avoids avoid[i]; table entries are looked up through the full ground set.
BigInt count_restricted(const std::vector<const TableWord*>& cols,
                        const std::vector<std::uint64_t>& avoid, std::uint64_t rest_mask,
                        std::uint64_t full, int n, int c) {
    bool fits = static_cast<long long>(n + 1) * std::max(c, 1) <= 120;
    SignedAccumulator acc;
    std::uint64_t outside = full & ~rest_mask;
    // iterate W over submasks of rest_mask, ascending popcount-agnostic order
    std::uint64_t w = 0;
    while (true) {
        bool negative = popcount64(w) & 1;
        if (fits) {
            unsigned __int128 p = 1;
            for (int i = 0; i < c; ++i) {
                std::uint64_t v = cols[i][(w | avoid[i] | outside) & full];
                if (v == 0) {
                    p = 0;
                    break;
                }
                p *= v;
            }
            if (p != 0) acc.add(p, negative);
        } else {
            BigInt p(1);
            bool zero = false;
            for (int i = 0; i < c; ++i) {
                std::uint64_t v = cols[i][(w | avoid[i] | outside) & full];
                if (v == 0) {
                    zero = true;
                    break;
                }
                p.mul_u64(v);
            }
            if (!zero) acc.add_big(p, negative);
        }
        if (w == rest_mask) break;
        w = (w - rest_mask) & rest_mask;  // next submask
    }
    return acc.total();
}

}  // namespace

SolveResult solve_exact(const BcpInstance& inst, const ExactOptions& opts) {
    int n = inst.g.vertex_count();
    if (n > opts.max_n) throw std::invalid_argument("solve_exact: n above cap");
    if (budget_sum(inst) < n) return SolveResult::no();
    if (n == 0) return SolveResult::from(Coloring{});

    std::vector<std::uint8_t> ind = independent_set_table(inst.g);
    std::uint64_t full = (1ull << n) - 1;

    // Tables cached per clamped budget value; extraction decrements budgets.
    std::map<int, std::vector<TableWord>> cache;
    auto table_ptr = [&](int budget) -> const TableWord* {
        int b = std::clamp(budget, 0, n);
        auto it = cache.find(b);
        if (it == cache.end())
            it = cache.emplace(b, build_one_table(ind, n, b, opts.parallel)).first;
        return it->second.data();
    };

    std::vector<int> budgets = inst.budgets;
    auto current_count = [&](std::uint64_t rest, const std::vector<std::uint64_t>& avoid) {
        std::vector<const TableWord*> cols;
        for (int b : budgets) cols.push_back(table_ptr(b));
        return count_restricted(cols, avoid, rest, full, n, inst.c);
    };

    std::vector<std::uint64_t> avoid(inst.c, 0);
    if (current_count(full, avoid).sign() <= 0) return SolveResult::no();

    Coloring col;
    col.color.assign(n, 0);
    std::uint64_t rest = full;
    while (rest) {
        int v = __builtin_ctzll(rest);
        std::uint64_t rest2 = rest & ~(1ull << v);
        bool placed = false;
        for (int i = 0; i < inst.c && !placed; ++i) {
            if (budgets[i] < 1) continue;
            if ((avoid[i] >> v) & 1) continue;
            --budgets[i];
            std::uint64_t saved = avoid[i];
            avoid[i] |= inst.g.neighbor_mask(v);
            if (current_count(rest2, avoid).sign() > 0) {
                col.color[v] = i + 1;
                rest = rest2;
                placed = true;
            } else {
                ++budgets[i];
                avoid[i] = saved;
            }
        }
        if (!placed) throw std::logic_error("solve_exact: witness extraction failed");
    }
    if (!verify_bcp(inst, col)) throw std::logic_error("solve_exact: invalid witness");
    return SolveResult::from(std::move(col));
}

namespace {

// dst |= src with color bit t inserted into every subset index.
void or_shifted(std::uint64_t* dst, const std::uint64_t* src, int t, std::size_t words) {
    static constexpr std::uint64_t kMask[6] = {
        0x5555555555555555ull, 0x3333333333333333ull, 0x0F0F0F0F0F0F0F0Full,
        0x00FF00FF00FF00FFull, 0x0000FFFF0000FFFFull, 0x00000000FFFFFFFFull};
    if (t < 6) {
        for (std::size_t w = 0; w < words; ++w)
            dst[w] |= (src[w] & kMask[t]) << (1u << t);
    } else {
        std::size_t stride = std::size_t{1} << (t - 6);
        for (std::size_t w = 0; w + stride < words; ++w) {
            if (!(w & stride)) dst[w + stride] |= src[w];
        }
    }
}

bool bit_at(const std::uint64_t* row, std::uint64_t idx) {
    return (row[idx >> 6] >> (idx & 63)) & 1;
}

}  // namespace

SolveResult solve_table_dp(const BcpInstance& inst, const TableDpOptions& opts) {
    int n = inst.g.vertex_count();
    int c = inst.c;
    if (n > opts.max_n || c > opts.max_c || n + c > opts.max_total_bits_log2)
        throw std::invalid_argument("solve_table_dp: above caps");
    if (budget_sum(inst) < n) return SolveResult::no();

    std::vector<std::uint8_t> ind = independent_set_table(inst.g);
    std::uint64_t size = 1ull << n;
    std::size_t words = std::max<std::size_t>(1, (std::size_t{1} << c) / 64);
    std::vector<std::uint64_t> table(size * words, 0);

    // T[0][C] = 1 for every color subset
    if (c < 6) {
        table[0] = (1ull << (1u << c)) - 1;
    } else {
        for (std::size_t w = 0; w < words; ++w) table[w] = ~0ull;
    }

    for (std::uint64_t x = 1; x < size; ++x) {
        std::uint64_t* row = table.data() + x * words;
        int v = __builtin_ctzll(x);
        std::uint64_t free = x & ~(1ull << v) & ~inst.g.neighbor_mask(v);
        // every independent I containing v: I = {v} + independent M from free
        std::uint64_t m = 0;
        while (true) {
            if (ind[m]) {
                int isize = popcount64(m) + 1;
                const std::uint64_t* prev = table.data() + (x & ~(m | (1ull << v))) * words;
                for (int t = 0; t < c; ++t) {
                    if (inst.budgets[t] >= isize) or_shifted(row, prev, t, words);
                }
            }
            if (m == free) break;
            m = (m - free) & free;
        }
    }

    std::uint64_t full = size - 1;
    std::uint64_t all_colors = (std::uint64_t{1} << c) - 1;  // c <= 12 here; fits
    if (c == 0) all_colors = 0;
    if (!bit_at(table.data() + full * words, all_colors)) return SolveResult::no();

    // Backtrack: peel one (independent set, color) pair at a time.
    Coloring col;
    col.color.assign(n, 0);
    std::uint64_t x = full;
    std::uint64_t colors = all_colors;
    while (x) {
        int v = __builtin_ctzll(x);
        std::uint64_t free = x & ~(1ull << v) & ~inst.g.neighbor_mask(v);
        bool advanced = false;
        for (int t = 0; t < c && !advanced; ++t) {
            if (!((colors >> t) & 1)) continue;
            std::uint64_t m = 0;
            while (true) {
                if (ind[m] && inst.budgets[t] >= popcount64(m) + 1) {
                    std::uint64_t rest = x & ~(m | (1ull << v));
                    if (bit_at(table.data() + rest * words, colors & ~(1ull << t))) {
                        for (int u = 0; u < n; ++u)
                            if ((m >> u) & 1) col.color[u] = t + 1;
                        col.color[v] = t + 1;
                        x = rest;
                        colors &= ~(std::uint64_t{1} << t);
                        advanced = true;
                        break;
                    }
                }
                if (m == free) break;
                m = (m - free) & free;
            }
        }
        if (!advanced) throw std::logic_error("solve_table_dp: backtrack failed");
    }
    if (!verify_bcp(inst, col)) throw std::logic_error("solve_table_dp: invalid witness");
    return SolveResult::from(std::move(col));
}

}  // namespace bcolor
