#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bcolor/graph.hpp"

namespace bcolor {

// Colors are 1..c; budgets[i-1] bounds how often color i may be used.
struct BcpInstance {
    Graph g;
    int c = 0;
    std::vector<int> budgets;
};

BcpInstance make_instance(Graph g, std::vector<int> budgets);

// Total assignment vertex -> color in 1..c (0 marks "unassigned" only while
// a solver is still building the map; verified colorings are total).
struct Coloring {
    std::vector<int> color;

    int operator()(int v) const { return color[v]; }
};

std::vector<int> class_sizes(const Coloring& col, int c);

struct SolveResult {
    bool yes = false;
    std::optional<Coloring> coloring;  // present iff yes

    static SolveResult no() { return {}; }
    static SolveResult from(Coloring col) { return {true, std::move(col)}; }
};

struct VerifyResult {
    bool ok = false;
    std::string violation;  // names the offending edge or color

    explicit operator bool() const { return ok; }
};

// Proper + per-color budget check.
VerifyResult verify_bcp(const BcpInstance& inst, const Coloring& col);

// Proper + every class size is floor(n/c) or ceil(n/c).
VerifyResult verify_ecp(const Graph& g, int c, const Coloring& col);

// Equitable coloring as a budgeted instance: ceil(n/c) for the first
// n mod c colors, floor(n/c) for the rest. Budgets sum to n, so a YES
// coloring uses every budget exactly.
BcpInstance ecp_to_bcp(const Graph& g, int c);

// Bounded coloring: all budgets equal to d.
BcpInstance bocp_to_bcp(const Graph& g, int c, int d);

inline long long budget_sum(const BcpInstance& inst) {
    long long s = 0;
    for (int b : inst.budgets) s += b;
    return s;
}

}  // namespace bcolor
