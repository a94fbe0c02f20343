#pragma once

#include <cstdint>
#include <vector>

#include "bcolor/bigint.hpp"
#include "bcolor/instance.hpp"

namespace bcolor {

struct ExactOptions {
    int max_n = 24;        // 2^n table rows; one table per distinct budget
    bool parallel = true;  // layer updates and the final summation fan out
};

// Independent-set counts stay below 2^n, so 32-bit table entries suffice
// for every n under the cap and halve the memory traffic.
using TableWord = std::uint32_t;

// f_b[W] = number of independent sets of size <= b avoiding W, per distinct
// budget value b (values clamped to n; larger budgets behave identically).
struct CoverCountTables {
    int n = 0;
    std::vector<int> budget_values;               // ascending, distinct
    std::vector<std::vector<TableWord>> tables;   // parallel to budget_values

    const std::vector<TableWord>& table_for(int budget) const;
};

CoverCountTables build_tables(const Graph& g, const std::vector<int>& budgets,
                              const ExactOptions& opts = {});

// Inclusion-exclusion count of ordered budgeted covers by independent sets:
// sum over W of (-1)^|W| prod_i f(W, b_i). Always >= 0.
BigInt count_budgeted_covers(const BcpInstance& inst, const ExactOptions& opts = {});

// YES iff the cover count is positive; the witness is extracted by fixing
// one vertex's color at a time and re-counting the restricted instance.
SolveResult solve_exact(const BcpInstance& inst, const ExactOptions& opts = {});

struct TableDpOptions {
    int max_n = 20;
    int max_c = 12;
    // combined guard: the bit table has 2^(n+c) entries
    int max_total_bits_log2 = 28;
};

// Feasibility table over (vertex subset, color subset) pairs; serves as a
// mid-scale cross-check for the inclusion-exclusion route.
SolveResult solve_table_dp(const BcpInstance& inst, const TableDpOptions& opts = {});

// Shared helper: independence indicator for every subset mask (n <= 24).
std::vector<std::uint8_t> independent_set_table(const Graph& g);

}  // namespace bcolor
