#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "bcolor/exact.hpp"
#include "bcolor/oracle.hpp"
#include "support.hpp"

using namespace bcolor;

TEST_CASE("build_tables base values") {
    // edgeless pair, budget 2: independent sets avoiding nothing = 4
    auto t = build_tables(empty_graph(2), {2});
    const auto& f = t.table_for(2);
    CHECK(f[0] == 4);
    CHECK(f[3] == 1);  // only the empty set avoids everything

    auto tk2 = build_tables(complete_graph(2), {2});
    CHECK(tk2.table_for(2)[0] == 3);  // {}, {0}, {1}

    auto t0 = build_tables(testsupport::graph_from_mask(3, 5), {0});
    for (std::uint64_t w = 0; w < 8; ++w) CHECK(t0.table_for(0)[w] == 1);
}

TEST_CASE("table invariants on random graphs") {
    std::mt19937 rng(13);
    for (int iter = 0; iter < 50; ++iter) {
        int n = 1 + static_cast<int>(rng() % 6);
        Graph g = testsupport::graph_from_mask(n, rng() % testsupport::graph_mask_count(n));
        int b = static_cast<int>(rng() % (n + 1));
        auto tables = build_tables(g, {b});
        const auto& f = tables.table_for(b);
        std::uint64_t full = (1ull << n) - 1;
        CHECK(f[full] == 1);
        // f[0] equals the direct count of independent sets of size <= b
        auto ind = independent_set_table(g);
        std::uint64_t direct = 0;
        for (std::uint64_t m = 0; m <= full; ++m)
            if (ind[m] && __builtin_popcountll(m) <= b) ++direct;
        CHECK(f[0] == direct);
        // monotone non-increasing under superset
        for (std::uint64_t w = 0; w <= full; ++w) {
            for (int v = 0; v < n; ++v) {
                if (!((w >> v) & 1)) CHECK(f[w] >= f[w | (1ull << v)]);
            }
        }
    }
}

TEST_CASE("count_budgeted_covers fixed values") {
    CHECK(count_budgeted_covers(make_instance(complete_graph(1), {1})) == BigInt(1));
    CHECK(count_budgeted_covers(make_instance(complete_graph(2), {1, 1})) == BigInt(2));
    CHECK(count_budgeted_covers(make_instance(complete_graph(2), {2})) == BigInt(0));
    CHECK(count_budgeted_covers(make_instance(empty_graph(2), {2})) == BigInt(1));
}

TEST_CASE("count equals the oracle count exhaustively at n<=4") {
    for (int n = 1; n <= 4; ++n) {
        for (std::uint32_t mask = 0; mask < testsupport::graph_mask_count(n); ++mask) {
            Graph g = testsupport::graph_from_mask(n, mask);
            for (int c = 1; c <= 3; ++c) {
                for (const auto& b : testsupport::all_budget_vectors(c, 0, 2)) {
                    BcpInstance inst = make_instance(g, b);
                    CHECK(count_budgeted_covers(inst) == oracle_cover_count(inst));
                }
            }
        }
    }
}

TEST_CASE("count is invariant under budget permutation and clamping") {
    std::mt19937 rng(19);
    for (int iter = 0; iter < 60; ++iter) {
        int n = 1 + static_cast<int>(rng() % 6);
        Graph g = testsupport::graph_from_mask(n, rng() % testsupport::graph_mask_count(n));
        int c = 1 + static_cast<int>(rng() % 3);
        std::vector<int> budgets;
        for (int i = 0; i < c; ++i) budgets.push_back(static_cast<int>(rng() % 5));
        BcpInstance inst = make_instance(g, budgets);
        BigInt base = count_budgeted_covers(inst);

        std::vector<int> perm = budgets;
        std::shuffle(perm.begin(), perm.end(), rng);
        CHECK(count_budgeted_covers(make_instance(g, perm)) == base);

        std::vector<int> huge = budgets;
        for (int& x : huge)
            if (x >= n) x = n + 7;
        CHECK(count_budgeted_covers(make_instance(g, huge)) == base);
    }
}

TEST_CASE("solve_exact fixed cases") {
    BcpInstance c5 = make_instance(cycle_graph(5), {2, 2, 1});
    auto r = solve_exact(c5);
    REQUIRE(r.yes);
    CHECK(verify_bcp(c5, *r.coloring).ok);

    CHECK_FALSE(solve_exact(make_instance(cycle_graph(5), {3, 2})).yes);
    CHECK(solve_exact(make_instance(empty_graph(0), {})).yes);

    ExactOptions tight;
    tight.max_n = 3;
    CHECK_THROWS_AS(solve_exact(make_instance(empty_graph(4), {4}), tight),
                    std::invalid_argument);
}

TEST_CASE("solve_exact and solve_table_dp equal the oracle exhaustively at n<=4") {
    for (int n = 1; n <= 4; ++n) {
        for (std::uint32_t mask = 0; mask < testsupport::graph_mask_count(n); ++mask) {
            Graph g = testsupport::graph_from_mask(n, mask);
            for (int c = 1; c <= 3; ++c) {
                for (const auto& b : testsupport::all_budget_vectors(c, 0, 2)) {
                    BcpInstance inst = make_instance(g, b);
                    bool expect = oracle_bcp(inst).yes;
                    auto ex = solve_exact(inst);
                    auto dp = solve_table_dp(inst);
                    CHECK(ex.yes == expect);
                    CHECK(dp.yes == expect);
                    if (expect) {
                        CHECK(verify_bcp(inst, *ex.coloring).ok);
                        CHECK(verify_bcp(inst, *dp.coloring).ok);
                    }
                }
            }
        }
    }
}

TEST_CASE("table dp fixed cases") {
    CHECK(solve_table_dp(make_instance(complete_graph(1), {1})).yes);
    CHECK_FALSE(solve_table_dp(make_instance(complete_graph(3), {3, 3})).yes);
    TableDpOptions tiny;
    tiny.max_c = 2;
    CHECK_THROWS_AS(solve_table_dp(make_instance(empty_graph(2), {1, 1, 1}), tiny),
                    std::invalid_argument);
}

TEST_CASE("parallel and sequential summation agree") {
    std::mt19937 rng(29);
    for (int trial = 0; trial < 3; ++trial) {
        int n = 14;
        std::vector<std::pair<int, int>> edges;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (rng() & 1) edges.emplace_back(i, j);
        Graph g = Graph::from_edges(n, std::move(edges));
        BcpInstance inst = make_instance(g, {7, 7, 5});
        ExactOptions par, seq;
        par.parallel = true;
        seq.parallel = false;
        CHECK(count_budgeted_covers(inst, par) == count_budgeted_covers(inst, seq));
    }
}

TEST_CASE("larger-c product goes through the bigint lane") {
    // 13 colors on 9 vertices: (n+1)*c > 120 forces the BigInt path
    BcpInstance inst = make_instance(empty_graph(9), std::vector<int>(13, 5));
    BigInt count = count_budgeted_covers(inst);
    CHECK(count.sign() > 0);
    CHECK(count == oracle_cover_count(inst));
}
