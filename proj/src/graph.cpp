#include "bcolor/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace bcolor {

Graph Graph::from_edges(int n, std::vector<std::pair<int, int>> edges) {
    if (n < 0) throw std::invalid_argument("graph: negative vertex count");
    for (auto& [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw std::invalid_argument("graph: edge endpoint out of range");
        if (u == v) throw std::invalid_argument("graph: self-loop");
        if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

    Graph g;
    g.n_ = n;
    g.edges_ = std::move(edges);
    g.adj_.assign(n, {});
    g.matrix_.assign(static_cast<std::size_t>(n) * n, 0);
    if (n <= 64) g.masks_.assign(n, 0);
    for (const auto& [u, v] : g.edges_) {
        g.adj_[u].push_back(v);
        g.adj_[v].push_back(u);
        g.matrix_[static_cast<std::size_t>(u) * n + v] = 1;
        g.matrix_[static_cast<std::size_t>(v) * n + u] = 1;
        if (n <= 64) {
            g.masks_[u] |= 1ull << v;
            g.masks_[v] |= 1ull << u;
        }
    }
    for (auto& nb : g.adj_) std::sort(nb.begin(), nb.end());
    return g;
}

InducedSubgraph induced_subgraph(const Graph& g, const std::vector<int>& s) {
    std::vector<int> verts = s;
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    for (int v : verts) {
        if (v < 0 || v >= g.vertex_count())
            throw std::invalid_argument("induced_subgraph: vertex out of range");
    }
    std::vector<int> new_id(g.vertex_count(), -1);
    for (std::size_t i = 0; i < verts.size(); ++i) new_id[verts[i]] = static_cast<int>(i);

    std::vector<std::pair<int, int>> edges;
    for (const auto& [u, v] : g.edges()) {
        if (new_id[u] >= 0 && new_id[v] >= 0) edges.emplace_back(new_id[u], new_id[v]);
    }
    InducedSubgraph out;
    out.graph = Graph::from_edges(static_cast<int>(verts.size()), std::move(edges));
    out.original = std::move(verts);
    return out;
}

Graph complement(const Graph& g) {
    int n = g.vertex_count();
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (!g.has_edge(u, v)) edges.emplace_back(u, v);
        }
    }
    return Graph::from_edges(n, std::move(edges));
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
    int n = g.vertex_count();
    std::vector<int> comp(n, -1);
    std::vector<std::vector<int>> parts;
    std::vector<int> stack;
    for (int start = 0; start < n; ++start) {
        if (comp[start] >= 0) continue;
        int id = static_cast<int>(parts.size());
        parts.emplace_back();
        comp[start] = id;
        stack.push_back(start);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            parts[id].push_back(v);
            for (int w : g.neighbors(v)) {
                if (comp[w] < 0) {
                    comp[w] = id;
                    stack.push_back(w);
                }
            }
        }
        std::sort(parts[id].begin(), parts[id].end());
    }
    return parts;  // discovery from ascending starts => ordered by min vertex
}

bool is_independent(const Graph& g, const std::vector<int>& s) {
    for (std::size_t i = 0; i < s.size(); ++i) {
        for (std::size_t j = i + 1; j < s.size(); ++j) {
            if (s[i] != s[j] && g.has_edge(s[i], s[j])) return false;
        }
    }
    return true;
}

bool is_clique(const Graph& g, const std::vector<int>& s) {
    for (std::size_t i = 0; i < s.size(); ++i) {
        for (std::size_t j = i + 1; j < s.size(); ++j) {
            if (s[i] != s[j] && !g.has_edge(s[i], s[j])) return false;
        }
    }
    return true;
}

Graph path_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return Graph::from_edges(n, std::move(edges));
}

Graph cycle_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    if (n >= 3) edges.emplace_back(0, n - 1);
    return Graph::from_edges(n, std::move(edges));
}

Graph complete_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return Graph::from_edges(n, std::move(edges));
}

Graph empty_graph(int n) { return Graph::from_edges(n, {}); }

Graph cluster_graph(const std::vector<int>& clique_sizes) {
    std::vector<std::pair<int, int>> edges;
    int base = 0;
    for (int s : clique_sizes) {
        for (int u = 0; u < s; ++u)
            for (int v = u + 1; v < s; ++v) edges.emplace_back(base + u, base + v);
        base += s;
    }
    return Graph::from_edges(base, std::move(edges));
}

Graph complete_multipartite(const std::vector<int>& part_sizes) {
    int n = 0;
    std::vector<int> part_of;
    for (std::size_t p = 0; p < part_sizes.size(); ++p) {
        for (int i = 0; i < part_sizes[p]; ++i) part_of.push_back(static_cast<int>(p));
        n += part_sizes[p];
    }
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (part_of[u] != part_of[v]) edges.emplace_back(u, v);
    return Graph::from_edges(n, std::move(edges));
}

Graph broom_graph(int q, int p) {
    if (q < 1 && p > 0) throw std::invalid_argument("broom: leaves need a handle");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < q; ++i) edges.emplace_back(i, i + 1);
    for (int j = 0; j < p; ++j) edges.emplace_back(0, q + j);
    return Graph::from_edges(q + p, std::move(edges));
}

}  // namespace bcolor
