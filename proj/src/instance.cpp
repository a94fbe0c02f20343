#include "bcolor/instance.hpp"

#include <stdexcept>

namespace bcolor {

BcpInstance make_instance(Graph g, std::vector<int> budgets) {
    for (int b : budgets) {
        if (b < 0) throw std::invalid_argument("instance: negative budget");
    }
    BcpInstance inst;
    inst.g = std::move(g);
    inst.c = static_cast<int>(budgets.size());
    inst.budgets = std::move(budgets);
    return inst;
}

std::vector<int> class_sizes(const Coloring& col, int c) {
    std::vector<int> sizes(c, 0);
    for (int x : col.color) {
        if (x >= 1 && x <= c) ++sizes[x - 1];
    }
    return sizes;
}

VerifyResult verify_bcp(const BcpInstance& inst, const Coloring& col) {
    int n = inst.g.vertex_count();
    if (static_cast<int>(col.color.size()) != n)
        return {false, "coloring size does not match vertex count"};
    for (int v = 0; v < n; ++v) {
        if (col.color[v] < 1 || col.color[v] > inst.c)
            return {false, "vertex " + std::to_string(v) + " has no valid color"};
    }
    for (const auto& [u, v] : inst.g.edges()) {
        if (col.color[u] == col.color[v])
            return {false, "edge (" + std::to_string(u) + "," + std::to_string(v) +
                               ") is monochromatic"};
    }
    std::vector<int> sizes = class_sizes(col, inst.c);
    for (int i = 0; i < inst.c; ++i) {
        if (sizes[i] > inst.budgets[i])
            return {false, "color " + std::to_string(i + 1) + " used " +
                               std::to_string(sizes[i]) + " > budget " +
                               std::to_string(inst.budgets[i])};
    }
    return {true, ""};
}

VerifyResult verify_ecp(const Graph& g, int c, const Coloring& col) {
    if (c < 1) return {false, "color count must be positive"};
    int n = g.vertex_count();
    if (static_cast<int>(col.color.size()) != n)
        return {false, "coloring size does not match vertex count"};
    for (int v = 0; v < n; ++v) {
        if (col.color[v] < 1 || col.color[v] > c)
            return {false, "vertex " + std::to_string(v) + " has no valid color"};
    }
    for (const auto& [u, v] : g.edges()) {
        if (col.color[u] == col.color[v])
            return {false, "edge (" + std::to_string(u) + "," + std::to_string(v) +
                               ") is monochromatic"};
    }
    int lo = n / c, hi = (n + c - 1) / c;
    std::vector<int> sizes = class_sizes(col, c);
    for (int i = 0; i < c; ++i) {
        if (sizes[i] != lo && sizes[i] != hi)
            return {false, "color " + std::to_string(i + 1) + " class size " +
                               std::to_string(sizes[i]) + " is not equitable"};
    }
    return {true, ""};
}

BcpInstance ecp_to_bcp(const Graph& g, int c) {
    if (c < 1) throw std::invalid_argument("ecp_to_bcp: color count must be positive");
    int n = g.vertex_count();
    std::vector<int> budgets(c, n / c);
    for (int i = 0; i < n % c; ++i) ++budgets[i];
    return make_instance(g, std::move(budgets));
}

BcpInstance bocp_to_bcp(const Graph& g, int c, int d) {
    if (c < 1) throw std::invalid_argument("bocp_to_bcp: color count must be positive");
    if (d < 0) throw std::invalid_argument("bocp_to_bcp: negative bound");
    return make_instance(g, std::vector<int>(c, d));
}

}  // namespace bcolor
