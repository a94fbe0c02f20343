#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bcolor/instance.hpp"

namespace bcolor {

// Instance file format (1-indexed, '#' comments ignored):
//   p bcp <n> <m> <c>
//   b <i> <b_i>        exactly c lines, every color present once
//   e <u> <v>          exactly m lines, no duplicates, no self-loops
// Canonical emission: header, budgets ascending, edges sorted with u < v,
// single spaces, LF line endings.

struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

BcpInstance parse_instance(std::istream& in);
BcpInstance parse_instance_file(const std::string& path);
void emit_instance(std::ostream& out, const BcpInstance& inst);
std::string instance_to_string(const BcpInstance& inst);

// Solution file: "s YES" followed by n lines "v <vertex> <color>", or "s NO".
struct ParsedSolution {
    bool yes = false;
    std::vector<std::pair<int, int>> assignments;  // (vertex, color), 1-indexed
};

ParsedSolution parse_solution(std::istream& in);
ParsedSolution parse_solution_file(const std::string& path);
// Requires a total assignment of 1..n; throws ParseError otherwise.
Coloring solution_to_coloring(const ParsedSolution& sol, int n);
void emit_solution(std::ostream& out, const SolveResult& result);

}  // namespace bcolor
