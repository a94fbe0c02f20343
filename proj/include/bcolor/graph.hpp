#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace bcolor {

// Simple undirected graph on vertices 0..n-1. Immutable after construction;
// adjacency is kept as sorted neighbor lists, a flat boolean matrix for O(1)
// membership, and per-vertex bitmasks when n <= 64 (subset DPs rely on them).
class Graph {
public:
    Graph() = default;
    // Deduplicates edges, rejects self-loops and out-of-range endpoints.
    static Graph from_edges(int n, std::vector<std::pair<int, int>> edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    bool has_edge(int u, int v) const { return matrix_[static_cast<std::size_t>(u) * n_ + v]; }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }

    // Edges as (u, v) with u < v, sorted lexicographically.
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    bool has_masks() const { return n_ <= 64; }
    std::uint64_t neighbor_mask(int v) const { return masks_[v]; }

    bool operator==(const Graph& other) const {
        return n_ == other.n_ && edges_ == other.edges_;
    }

private:
    int n_ = 0;
    std::vector<std::vector<int>> adj_;
    std::vector<char> matrix_;
    std::vector<std::uint64_t> masks_;
    std::vector<std::pair<int, int>> edges_;
};

struct InducedSubgraph {
    Graph graph;
    std::vector<int> original;  // new id -> original id, ascending
};

// G[s]; vertices relabeled to 0..|s|-1 in ascending original order.
InducedSubgraph induced_subgraph(const Graph& g, const std::vector<int>& s);

Graph complement(const Graph& g);

// Parts ordered by smallest contained vertex id; vertices sorted within parts.
std::vector<std::vector<int>> connected_components(const Graph& g);

bool is_independent(const Graph& g, const std::vector<int>& s);

bool is_clique(const Graph& g, const std::vector<int>& s);

// Convenience builders used all over the tests and generators.
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph empty_graph(int n);
// Disjoint cliques of the given sizes, labeled consecutively.
Graph cluster_graph(const std::vector<int>& clique_sizes);
// Complete multipartite with the given part sizes, labeled consecutively.
Graph complete_multipartite(const std::vector<int>& part_sizes);
// Handle path w_1..w_q on ids 0..q-1, then p leaves attached to vertex 0.
Graph broom_graph(int q, int p);

}  // namespace bcolor
