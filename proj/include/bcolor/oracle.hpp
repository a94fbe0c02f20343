#pragma once

#include <cstdint>
#include <vector>

#include "bcolor/bigint.hpp"
#include "bcolor/flow.hpp"
#include "bcolor/instance.hpp"

namespace bcolor {

// Ground-truth solvers used by every correctness test. Exhaustive search
// with conflict/budget pruning; throws when the node budget is exhausted
// rather than guessing.
struct OracleOptions {
    long long max_nodes = 100000000;  // explored (vertex, color) trials
};

// Lexicographically-least witness: vertices are assigned in id order with
// colors tried in ascending order, so the first completion found is the
// lex-least valid assignment vector.
SolveResult oracle_bcp(const BcpInstance& inst, const OracleOptions& opts = {});

// Extends the prescribed coloring of deletion-set vertices to the whole
// graph, if possible.
SolveResult oracle_ebcp(const EbcpInstance& e, const OracleOptions& opts = {});

// Number of ordered tuples (F_1..F_c) of independent sets with |F_i| <= b_i
// covering V. Requires n <= 14.
BigInt oracle_cover_count(const BcpInstance& inst);

}  // namespace bcolor
