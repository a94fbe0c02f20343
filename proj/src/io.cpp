#include "bcolor/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace bcolor {

namespace {

// Splits a line into whitespace tokens; empty and comment lines yield none.
std::vector<std::string> tokens_of(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream iss(line);
    std::string tok;
    while (iss >> tok) out.push_back(tok);
    if (!out.empty() && out.front().front() == '#') out.clear();
    return out;
}

int to_int(const std::string& tok, const char* what) {
    try {
        std::size_t used = 0;
        long long v = std::stoll(tok, &used);
        if (used != tok.size() || v < -1000000000ll || v > 1000000000ll)
            throw std::out_of_range("range");
        return static_cast<int>(v);
    } catch (const std::exception&) {
        throw ParseError(std::string("bad integer for ") + what + ": '" + tok + "'");
    }
}

}  // namespace

BcpInstance parse_instance(std::istream& in) {
    std::string line;
    int n = -1, m = -1, c = -1;
    std::vector<int> budgets;
    std::vector<char> budget_seen;
    std::vector<std::pair<int, int>> edges;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        auto tok = tokens_of(line);
        if (tok.empty()) continue;
        if (tok[0] == "p") {
            if (n >= 0) throw ParseError("duplicate header at line " + std::to_string(line_no));
            if (tok.size() != 5 || tok[1] != "bcp")
                throw ParseError("bad header at line " + std::to_string(line_no));
            n = to_int(tok[2], "n");
            m = to_int(tok[3], "m");
            c = to_int(tok[4], "c");
            if (n < 0 || m < 0 || c < 0)
                throw ParseError("negative counts in header at line " + std::to_string(line_no));
            budgets.assign(c, 0);
            budget_seen.assign(c, 0);
        } else if (tok[0] == "b") {
            if (n < 0) throw ParseError("budget line before header at line " + std::to_string(line_no));
            if (tok.size() != 3) throw ParseError("bad budget line at line " + std::to_string(line_no));
            int i = to_int(tok[1], "color index");
            int b = to_int(tok[2], "budget");
            if (i < 1 || i > c)
                throw ParseError("color index out of range at line " + std::to_string(line_no));
            if (budget_seen[i - 1])
                throw ParseError("duplicate budget for color " + std::to_string(i));
            if (b < 0) throw ParseError("negative budget at line " + std::to_string(line_no));
            budget_seen[i - 1] = 1;
            budgets[i - 1] = b;
        } else if (tok[0] == "e") {
            if (n < 0) throw ParseError("edge line before header at line " + std::to_string(line_no));
            if (tok.size() != 3) throw ParseError("bad edge line at line " + std::to_string(line_no));
            int u = to_int(tok[1], "vertex");
            int v = to_int(tok[2], "vertex");
            if (u < 1 || u > n || v < 1 || v > n)
                throw ParseError("vertex out of range at line " + std::to_string(line_no));
            if (u == v) throw ParseError("self-loop at line " + std::to_string(line_no));
            edges.emplace_back(u - 1, v - 1);
        } else {
            throw ParseError("unknown line type '" + tok[0] + "' at line " +
                             std::to_string(line_no));
        }
    }
    if (n < 0) throw ParseError("missing header");
    for (int i = 0; i < c; ++i)
        if (!budget_seen[i]) throw ParseError("missing budget for color " + std::to_string(i + 1));
    if (static_cast<int>(edges.size()) != m)
        throw ParseError("edge count mismatch: header says " + std::to_string(m) + ", found " +
                         std::to_string(edges.size()));
    for (auto& [u, v] : edges)
        if (u > v) std::swap(u, v);
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
        throw ParseError("duplicate edge");
    return make_instance(Graph::from_edges(n, std::move(edges)), std::move(budgets));
}

BcpInstance parse_instance_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    return parse_instance(in);
}

void emit_instance(std::ostream& out, const BcpInstance& inst) {
    out << "p bcp " << inst.g.vertex_count() << " " << inst.g.edge_count() << " " << inst.c
        << "\n";
    for (int i = 0; i < inst.c; ++i) out << "b " << i + 1 << " " << inst.budgets[i] << "\n";
    for (const auto& [u, v] : inst.g.edges()) out << "e " << u + 1 << " " << v + 1 << "\n";
}

std::string instance_to_string(const BcpInstance& inst) {
    std::ostringstream oss;
    emit_instance(oss, inst);
    return oss.str();
}

ParsedSolution parse_solution(std::istream& in) {
    ParsedSolution sol;
    std::string line;
    bool got_status = false;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        auto tok = tokens_of(line);
        if (tok.empty()) continue;
        if (tok[0] == "s") {
            if (got_status) throw ParseError("duplicate status line");
            if (tok.size() != 2 || (tok[1] != "YES" && tok[1] != "NO"))
                throw ParseError("bad status line at line " + std::to_string(line_no));
            sol.yes = tok[1] == "YES";
            got_status = true;
        } else if (tok[0] == "v") {
            if (!got_status || !sol.yes)
                throw ParseError("assignment line outside a YES solution at line " +
                                 std::to_string(line_no));
            if (tok.size() != 3)
                throw ParseError("bad assignment line at line " + std::to_string(line_no));
            sol.assignments.emplace_back(to_int(tok[1], "vertex"), to_int(tok[2], "color"));
        } else {
            throw ParseError("unknown line type '" + tok[0] + "' at line " +
                             std::to_string(line_no));
        }
    }
    if (!got_status) throw ParseError("missing status line");
    return sol;
}

ParsedSolution parse_solution_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    return parse_solution(in);
}

Coloring solution_to_coloring(const ParsedSolution& sol, int n) {
    if (!sol.yes) throw ParseError("NO solution carries no coloring");
    Coloring col;
    col.color.assign(n, 0);
    if (static_cast<int>(sol.assignments.size()) != n)
        throw ParseError("expected " + std::to_string(n) + " assignment lines, found " +
                         std::to_string(sol.assignments.size()));
    for (const auto& [v, c] : sol.assignments) {
        if (v < 1 || v > n) throw ParseError("vertex out of range in solution");
        if (col.color[v - 1] != 0) throw ParseError("duplicate assignment for vertex " +
                                                    std::to_string(v));
        if (c < 1) throw ParseError("bad color in solution");
        col.color[v - 1] = c;
    }
    return col;
}

void emit_solution(std::ostream& out, const SolveResult& result) {
    if (!result.yes) {
        out << "s NO\n";
        return;
    }
    out << "s YES\n";
    const Coloring& col = *result.coloring;
    for (std::size_t v = 0; v < col.color.size(); ++v)
        out << "v " << v + 1 << " " << col.color[v] << "\n";
}

}  // namespace bcolor
