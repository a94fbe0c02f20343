#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "bcolor/oracle.hpp"
#include "support.hpp"

using namespace bcolor;

TEST_CASE("oracle_bcp basics") {
    BcpInstance k2 = make_instance(complete_graph(2), {1, 1});
    auto r = oracle_bcp(k2);
    REQUIRE(r.yes);
    CHECK(r.coloring->color == std::vector<int>{1, 2});

    CHECK_FALSE(oracle_bcp(make_instance(complete_graph(3), {3, 3})).yes);
    CHECK(oracle_bcp(make_instance(path_graph(4), {2, 2})).yes);
    CHECK(oracle_bcp(make_instance(empty_graph(0), {})).yes);
}

TEST_CASE("oracle_bcp returns the lexicographically least witness") {
    // star with center at id 2: lex-least gives both leaves color 1 first
    Graph star = Graph::from_edges(3, {{0, 2}, {1, 2}});
    auto r = oracle_bcp(make_instance(star, {2, 1}));
    REQUIRE(r.yes);
    CHECK(r.coloring->color == std::vector<int>{1, 1, 2});

    // exhaustive check at small scale: witness is minimal among all valid ones
    std::mt19937 rng(3);
    for (int iter = 0; iter < 60; ++iter) {
        int n = 1 + static_cast<int>(rng() % 5);
        Graph g = testsupport::graph_from_mask(n, rng() % testsupport::graph_mask_count(n));
        int c = 1 + static_cast<int>(rng() % 3);
        std::vector<int> budgets;
        for (int i = 0; i < c; ++i) budgets.push_back(static_cast<int>(rng() % 4));
        BcpInstance inst = make_instance(g, budgets);
        auto res = oracle_bcp(inst);
        // find lex-least by full odometer
        std::vector<int> best;
        std::vector<int> cur(n, 1);
        if (inst.c >= 1 && n >= 1) {
            while (true) {
                Coloring col{cur};
                if (verify_bcp(inst, col).ok) {
                    best = cur;
                    break;
                }
                int i = n - 1;
                while (i >= 0 && cur[i] == inst.c) --i;
                if (i < 0) break;
                ++cur[i];
                for (int j = i + 1; j < n; ++j) cur[j] = 1;
            }
        }
        CHECK(res.yes == !best.empty());
        if (res.yes) CHECK(res.coloring->color == best);
    }
}

TEST_CASE("oracle_bcp agrees with the dumb odometer") {
    for (int n = 0; n <= 4; ++n) {
        for (std::uint32_t mask = 0; mask < testsupport::graph_mask_count(n); ++mask) {
            Graph g = testsupport::graph_from_mask(n, mask);
            for (int c = 1; c <= 2; ++c) {
                for (const auto& b : testsupport::all_budget_vectors(c, 0, 2)) {
                    BcpInstance inst = make_instance(g, b);
                    auto r = oracle_bcp(inst);
                    CHECK(r.yes == testsupport::brute_bcp_feasible(inst));
                    if (r.yes) CHECK(verify_bcp(inst, *r.coloring).ok);
                }
            }
        }
    }
}

TEST_CASE("oracle_ebcp") {
    // S covers everything: answer is whether alpha itself is within budgets
    Graph k2 = complete_graph(2);
    auto e = make_ebcp_instance(make_instance(k2, {1, 1}), {{0}, {1}}, {1, 2});
    CHECK(oracle_ebcp(e).yes);
    auto e_bad = make_ebcp_instance(make_instance(k2, {0, 1}), {{0}, {1}}, {1, 2});
    CHECK_FALSE(oracle_ebcp(e_bad).yes);

    // x adjacent to both isolated vertices: color 1 unusable on them
    Graph g3 = Graph::from_edges(3, {{0, 2}, {1, 2}});
    auto e1 = make_ebcp_instance(make_instance(g3, {3, 1}), {{2}}, {1});
    CHECK_FALSE(oracle_ebcp(e1).yes);
    // x adjacent to neither: color 1 free for the cluster vertices
    Graph g3b = empty_graph(3);
    auto e2 = make_ebcp_instance(make_instance(g3b, {3, 1}), {{2}}, {1});
    CHECK(oracle_ebcp(e2).yes);
}

TEST_CASE("oracle_cover_count basics") {
    CHECK(oracle_cover_count(make_instance(complete_graph(1), {1})) == BigInt(1));
    CHECK(oracle_cover_count(make_instance(complete_graph(2), {1, 1})) == BigInt(2));
    CHECK(oracle_cover_count(make_instance(empty_graph(2), {0, 0})) == BigInt(0));
    CHECK(oracle_cover_count(make_instance(empty_graph(0), {1})) == BigInt(1));
    CHECK(oracle_cover_count(make_instance(empty_graph(2), {2})) == BigInt(1));
    CHECK_THROWS_AS(oracle_cover_count(make_instance(empty_graph(15), {1})),
                    std::invalid_argument);
}

TEST_CASE("cover count positive iff feasible") {
    for (int n = 1; n <= 4; ++n) {
        for (std::uint32_t mask = 0; mask < testsupport::graph_mask_count(n); ++mask) {
            Graph g = testsupport::graph_from_mask(n, mask);
            for (int c = 1; c <= 2; ++c) {
                for (const auto& b : testsupport::all_budget_vectors(c, 0, 2)) {
                    BcpInstance inst = make_instance(g, b);
                    bool feasible = oracle_bcp(inst).yes;
                    CHECK(feasible == (oracle_cover_count(inst).sign() > 0));
                }
            }
        }
    }
}

TEST_CASE("monotone in budgets and permutation invariant") {
    std::mt19937 rng(17);
    for (int iter = 0; iter < 150; ++iter) {
        int n = 1 + static_cast<int>(rng() % 7);
        Graph g = testsupport::graph_from_mask(n, rng() % testsupport::graph_mask_count(n));
        int c = 1 + static_cast<int>(rng() % 3);
        std::vector<int> budgets;
        for (int i = 0; i < c; ++i) budgets.push_back(static_cast<int>(rng() % 4));
        BcpInstance inst = make_instance(g, budgets);
        bool base = oracle_bcp(inst).yes;

        for (int i = 0; i < c; ++i) {
            std::vector<int> raised = budgets;
            ++raised[i];
            bool after = oracle_bcp(make_instance(g, raised)).yes;
            CHECK((!base || after));  // raising never flips YES -> NO
        }
        std::vector<int> perm = budgets;
        std::shuffle(perm.begin(), perm.end(), rng);
        CHECK(oracle_bcp(make_instance(g, perm)).yes == base);
    }
}

TEST_CASE("node budget is enforced") {
    BcpInstance inst = make_instance(complete_multipartite({3, 3, 3}), {3, 3, 3, 1, 1});
    OracleOptions tiny;
    tiny.max_nodes = 5;
    CHECK_THROWS_AS(oracle_bcp(inst, tiny), std::runtime_error);
}
