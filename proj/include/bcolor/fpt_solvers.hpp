#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "bcolor/flow.hpp"
#include "bcolor/instance.hpp"
#include "bcolor/recognize.hpp"

namespace bcolor {

// Partition of a deletion set into independent parts, ordered by
// non-increasing size (ties by smallest vertex id).
struct SetPartition {
    std::vector<std::vector<int>> parts;

    int ell() const { return static_cast<int>(parts.size()); }
};

// Visits every partition of S into independent parts exactly once, in
// restricted-growth order (parts re-sorted per the SetPartition invariant
// before each visit). Return false from the visitor to stop early.
void enumerate_independent_partitions(const Graph& g, const std::vector<int>& s,
                                      const std::function<bool(const SetPartition&)>& visit);

std::vector<SetPartition> all_independent_partitions(const Graph& g, const std::vector<int>& s);

// Greedy color plan for a (partition, demand vector) pair: part i gets the
// least-budget unused color that can hold |P_i| + d_i, and that color's
// budget is clamped to exactly |P_i| + d_i.
struct ColorPlan {
    std::vector<int> gamma;             // part index -> color
    std::vector<int> modified_budgets;  // one per color
};

std::optional<ColorPlan> make_color_plan(const BcpInstance& inst, const SetPartition& partition,
                                         const std::vector<int>& demands);

// Feasible colors per part (budget >= part size) and the ell least-budget
// ones actually tried.
struct FeasibleColorLists {
    std::vector<std::vector<int>> feasible;  // F_i
    std::vector<std::vector<int>> tried;     // L_i
};

FeasibleColorLists make_color_lists(const BcpInstance& inst, const SetPartition& partition);

struct FptOptions {
    // Skip colorings that only permute equal-budget colors.
    bool break_symmetry = true;
    // Evaluate flow subproblems on a worker pool; the first feasible
    // candidate in enumeration order is still the one reported.
    bool parallel = true;
};

// Tries every proper coloring of the CVD set S, solving EBCP for each.
SolveResult solve_cvd_colors(const BcpInstance& inst, const DeletionSet& s,
                             const FptOptions& opts = {});

// Tries every (independent partition of S, demand vector) pair with its
// greedy color plan.
SolveResult solve_cvd_clusters(const BcpInstance& inst, const DeletionSet& s,
                               const FptOptions& opts = {});

// g - A is a single clique; same enumeration as solve_cvd_clusters.
SolveResult solve_distance_to_clique(const BcpInstance& inst, const DeletionSet& a,
                                     const FptOptions& opts = {});

// S is a vertex cover: partitions of S, each part restricted to its list of
// least-budget feasible colors, injective assignments solved by flow.
SolveResult solve_vertex_cover(const BcpInstance& inst, const DeletionSet& s,
                               const FptOptions& opts = {});

}  // namespace bcolor
