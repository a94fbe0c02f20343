#pragma once

#include <vector>

#include "bcolor/instance.hpp"

namespace bcolor {

// Extended budgeted coloring: a deletion set S whose coloring is prescribed.
// parts partition S into independent sets; part_color maps part index to the
// color (1..c) every vertex of that part must receive; the map is injective.
// g - S must be a cluster graph; its cliques are precomputed in clusters.
struct EbcpInstance {
    BcpInstance inst;
    std::vector<int> deletion_set;           // sorted
    std::vector<std::vector<int>> parts;
    std::vector<int> part_color;             // part index -> color
    std::vector<std::vector<int>> clusters;  // cliques of g - S
};

// Validates every invariant (partition, independence, injectivity, cluster
// structure) and fills the derived cluster list. Throws on violation.
EbcpInstance make_ebcp_instance(BcpInstance inst,
                                std::vector<std::vector<int>> parts,
                                std::vector<int> part_color);

// The assignment network deciding EBCP feasibility: one color node per color,
// one pair node per (color, cluster) and one node per vertex of g - S.
// Source arcs carry the residual budgets; every other arc has capacity one,
// which is what limits each color to one vertex per cluster.
struct FlowNetwork {
    struct Arc {
        int from;
        int to;
        long long cap;
    };

    int node_count = 0;
    int source = 0;
    int sink = 0;
    std::vector<Arc> arcs;

    // Semantic node ids for coloring reconstruction.
    std::vector<int> color_node;              // index color-1
    std::vector<std::vector<int>> pair_node;  // [color-1][cluster]
    std::vector<int> vertex_node;             // graph vertex -> node or -1
};

struct MaxFlowResult {
    long long value = 0;
    std::vector<long long> arc_flow;  // parallel to FlowNetwork::arcs
};

// Throws if some prescribed color's budget cannot even cover its own part.
FlowNetwork build_network(const EbcpInstance& e);

// Dinic; capacities are integral so the returned flow is integral.
MaxFlowResult max_flow(const FlowNetwork& net);

// Capacity and conservation check of a computed flow.
bool flow_is_valid(const FlowNetwork& net, const MaxFlowResult& res);

// YES iff max flow equals n - |S|; reconstructs the coloring from the
// saturated pair-node arcs.
SolveResult solve_ebcp(const EbcpInstance& e);

}  // namespace bcolor
