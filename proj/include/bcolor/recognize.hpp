#pragma once

#include <optional>
#include <vector>

#include "bcolor/graph.hpp"

namespace bcolor {

enum class GraphClass { Clique, Cluster, CoCluster, Split, Path, Broom, Bipartite, General };

// Matching priority: earlier tags win in classify.
int class_priority(GraphClass tag);
const char* class_name(GraphClass tag);

struct ClassLabel {
    GraphClass tag = GraphClass::General;
    // Witness payload, filled per tag:
    std::vector<std::vector<int>> parts;  // Cluster cliques / CoCluster parts / Bipartite sides
    std::vector<int> clique_side;         // Split
    std::vector<int> independent_side;    // Split
    std::vector<int> path_order;          // Path
    std::vector<int> handle;              // Broom handle, start first
    std::vector<int> leaves;              // Broom leaf set
};

bool is_complete(const Graph& g);
std::optional<std::vector<std::vector<int>>> cluster_parts(const Graph& g);
std::optional<std::vector<std::vector<int>>> cocluster_parts(const Graph& g);
// (clique side, independent side) via the degree-sequence characterization.
std::optional<std::pair<std::vector<int>, std::vector<int>>> split_partition(const Graph& g);
std::optional<std::vector<std::vector<int>>> bipartition(const Graph& g);
std::optional<std::vector<int>> path_order(const Graph& g);
// Handle + pendant leaves on the handle start. Stars count with q = 1; a
// bare path of 4+ vertices does not (those are Path).
std::optional<std::pair<std::vector<int>, std::vector<int>>> broom_witness(const Graph& g);

// First matching tag in priority order, with its witness.
ClassLabel classify(const Graph& g);

// Checks that the witness actually certifies the tag.
bool validate_class_label(const Graph& g, const ClassLabel& label);

struct DeletionSet {
    enum class Kind { VertexCover, ClusterVertexDeletion, CliqueModulator };
    Kind kind = Kind::VertexCover;
    std::vector<int> vertices;

    int k() const { return static_cast<int>(vertices.size()); }
};

bool validate_deletion_set(const Graph& g, const DeletionSet& ds);

// Branch on the lexicographically first uncovered edge, lower endpoint first.
std::optional<DeletionSet> find_vertex_cover(const Graph& g, int k);

// Branch on the lexicographically first induced P3, lowest vertex first.
std::optional<DeletionSet> find_cvd(const Graph& g, int k);

// Vertex cover of the complement.
std::optional<DeletionSet> find_clique_modulator(const Graph& g, int k);

}  // namespace bcolor
