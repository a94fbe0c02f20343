#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "bcolor/instance.hpp"
#include "bcolor/recognize.hpp"

namespace bcolor {

// Hardness-gadget instance builders. Vertex layouts are frozen so generated
// corpora stay stable:
//   3partition : c parts of size 3n+w, labeled consecutively part by part
//   domset     : clique u_1..u_n on ids 0..n-1, independent v_1..v_n after
//   biclique   : V_1 = 0..n-1, V_2 = n..2n-1, W next, then a, then b
//   clique-vc  : same ids as the input graph (complement taken in place)
//   coloring   : input ids unchanged, padding vertices appended

// Complete multipartite instance from a 3-partition input: part count
// c = |X|/3, budgets n + x_i. YES iff X splits into triples summing to w.
BcpInstance gen_3partition_cocluster(const std::vector<int>& x, int w);

// Split-graph instance from a domination input. The literal edge rule joins
// u_i and v_j whenever (w_i, w_j) is a non-edge, which includes i = j; the
// closed-neighborhood variant omits those i = j pairs.
BcpInstance gen_domset_split(const Graph& g, int k, bool closed_neighborhood = false);

struct BicliqueGadget {
    Graph graph;  // the equitable-coloring instance, c = 3
    int colors = 3;
    BcpInstance bcp;  // its budgeted form (all budgets n-k+1)
};

// g is bipartite with sides of size n each; cross_edges are (i, j) pairs
// meaning side-1 vertex i adjacent to side-2 vertex j. YES iff g has K_{k,k}.
BicliqueGadget gen_biclique_bipartite_ecp(int n,
                                          const std::vector<std::pair<int, int>>& cross_edges,
                                          int k);

struct CliqueVcGadget {
    BcpInstance instance;   // on complement(g)
    DeletionSet modulator;  // the input vertex cover, as a clique modulator
};

// Clique-of-size-l instance: complement graph, n-l unit budgets plus one
// budget of l. YES iff g has a clique of size l.
CliqueVcGadget gen_clique_vc(const Graph& g, const std::vector<int>& cover, int ell);

struct EcpReduction {
    Graph graph;
    int colors = 0;
};

// Pads g with nc - n isolated vertices; g is c-colorable iff the padded
// graph has an equitable c-coloring.
EcpReduction gen_coloring_to_ecp(const Graph& g, int c);

// Seeded random instance of the given class; classify recovers the class or
// a more specific one.
BcpInstance gen_random(GraphClass cls, int n, int c, int budget_min, int budget_max,
                       std::uint64_t seed);

}  // namespace bcolor
