#pragma once

#include <optional>
#include <vector>

#include "bcolor/instance.hpp"

namespace bcolor {

// Cliques of a cluster graph, sorted by non-increasing size (ties by
// smallest vertex id).
struct ClusterView {
    std::vector<std::vector<int>> clusters;
    std::vector<int> sizes;
};

// Empty when g is not a disjoint union of cliques.
std::optional<ClusterView> make_cluster_view(const Graph& g);

// Greedy largest-clique-first assignment: each clique takes the currently
// largest remaining budgets, one unit per vertex, re-sorting between cliques.
SolveResult solve_cluster(const BcpInstance& inst, const ClusterView& view);

// c = 2 via per-component side sizes and a subset-sum over the differences.
// bipartition holds the two sides of g; throws if it is not a valid one.
SolveResult solve_bipartite_c2(const BcpInstance& inst,
                               const std::vector<std::vector<int>>& bipartition);

// Budgets truncated at ceil(n/2); YES iff they still sum to n (plus the
// trivial n <= 1 cases). Construction lays color blocks over odd positions
// first, then even, largest budget first.
SolveResult solve_path(const BcpInstance& inst, const std::vector<int>& order);

// Minimum-budget color goes on the handle start and as many alternating
// handle vertices as it can; the rest of the handle is a path instance over
// the remaining colors and the leaves soak up leftover budget.
SolveResult solve_broom(const BcpInstance& inst, const std::vector<int>& handle,
                        const std::vector<int>& leaves);

// YES iff at least n colors have nonzero budget.
SolveResult solve_clique(const BcpInstance& inst);

}  // namespace bcolor
