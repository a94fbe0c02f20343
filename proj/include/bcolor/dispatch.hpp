#pragma once

#include <string>

#include "bcolor/exact.hpp"
#include "bcolor/fpt_solvers.hpp"
#include "bcolor/instance.hpp"
#include "bcolor/oracle.hpp"

namespace bcolor {

struct DispatchOptions {
    std::string algorithm = "auto";
    int param_budget = 12;  // cap on structural-parameter searches
    ExactOptions exact;
    TableDpOptions table_dp;
    OracleOptions oracle;
    FptOptions fpt;
};

// status: 0 = YES, 1 = NO, 3 = undecidable within the configured caps.
// Inapplicable forced algorithms throw std::invalid_argument (usage error).
struct DispatchOutcome {
    int status = 3;
    SolveResult result;
    std::string algorithm_used;
    std::string note;
};

DispatchOutcome dispatch_solve(const BcpInstance& inst, const DispatchOptions& opts = {});

const std::vector<std::string>& known_algorithms();

}  // namespace bcolor
