#include "bcolor/flow.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <stdexcept>

namespace bcolor {

EbcpInstance make_ebcp_instance(BcpInstance inst,
                                std::vector<std::vector<int>> parts,
                                std::vector<int> part_color) {
    int n = inst.g.vertex_count();
    if (parts.size() != part_color.size())
        throw std::invalid_argument("ebcp: one color per part required");

    std::vector<char> in_s(n, 0);
    std::vector<int> s;
    for (const auto& part : parts) {
        if (part.empty()) throw std::invalid_argument("ebcp: empty part");
        for (int v : part) {
            if (v < 0 || v >= n) throw std::invalid_argument("ebcp: vertex out of range");
            if (in_s[v]) throw std::invalid_argument("ebcp: parts are not disjoint");
            in_s[v] = 1;
            s.push_back(v);
        }
        if (!is_independent(inst.g, part))
            throw std::invalid_argument("ebcp: part is not independent");
    }
    std::sort(s.begin(), s.end());

    std::vector<char> color_used(inst.c + 1, 0);
    for (int a : part_color) {
        if (a < 1 || a > inst.c) throw std::invalid_argument("ebcp: color out of range");
        if (color_used[a]) throw std::invalid_argument("ebcp: pre-coloring not injective");
        color_used[a] = 1;
    }

    std::vector<int> rest;
    for (int v = 0; v < n; ++v)
        if (!in_s[v]) rest.push_back(v);
    auto sub = induced_subgraph(inst.g, rest);
    std::vector<std::vector<int>> clusters;
    for (auto& comp : connected_components(sub.graph)) {
        if (!is_clique(sub.graph, comp))
            throw std::invalid_argument("ebcp: g - S is not a cluster graph");
        for (int& v : comp) v = sub.original[v];
        clusters.push_back(std::move(comp));
    }

    EbcpInstance e;
    e.inst = std::move(inst);
    e.deletion_set = std::move(s);
    e.parts = std::move(parts);
    e.part_color = std::move(part_color);
    e.clusters = std::move(clusters);
    return e;
}

FlowNetwork build_network(const EbcpInstance& e) {
    const Graph& g = e.inst.g;
    int c = e.inst.c;
    int m = static_cast<int>(e.clusters.size());
    int ell = static_cast<int>(e.parts.size());

    // Residual source capacities: b_a - |P_i| for the part colors, b_a for
    // the colors the pre-coloring leaves unused.
    std::vector<long long> source_cap(c + 1, 0);
    std::vector<int> part_of_color(c + 1, -1);
    for (int a = 1; a <= c; ++a) source_cap[a] = e.inst.budgets[a - 1];
    for (int i = 0; i < ell; ++i) {
        int a = e.part_color[i];
        source_cap[a] -= static_cast<long long>(e.parts[i].size());
        part_of_color[a] = i;
        if (source_cap[a] < 0)
            throw std::invalid_argument("ebcp: part exceeds its color budget");
    }

    FlowNetwork net;
    net.source = 0;
    net.sink = 1;
    int next = 2;
    net.color_node.assign(c, -1);
    for (int a = 1; a <= c; ++a) net.color_node[a - 1] = next++;
    net.pair_node.assign(c, std::vector<int>(m, -1));
    for (int a = 1; a <= c; ++a)
        for (int j = 0; j < m; ++j) net.pair_node[a - 1][j] = next++;
    net.vertex_node.assign(g.vertex_count(), -1);
    for (const auto& cluster : e.clusters)
        for (int w : cluster) net.vertex_node[w] = next++;
    net.node_count = next;

    for (int a = 1; a <= c; ++a)
        net.arcs.push_back({net.source, net.color_node[a - 1], source_cap[a]});
    for (int a = 1; a <= c; ++a) {
        int i = part_of_color[a];
        for (int j = 0; j < m; ++j) {
            net.arcs.push_back({net.color_node[a - 1], net.pair_node[a - 1][j], 1});
            for (int w : e.clusters[j]) {
                bool allowed = true;
                if (i >= 0) {
                    for (int v : e.parts[i]) {
                        if (g.has_edge(v, w)) {
                            allowed = false;
                            break;
                        }
                    }
                }
                if (allowed)
                    net.arcs.push_back({net.pair_node[a - 1][j], net.vertex_node[w], 1});
            }
        }
    }
    for (const auto& cluster : e.clusters)
        for (int w : cluster) net.arcs.push_back({net.vertex_node[w], net.sink, 1});
    return net;
}

namespace {

struct Dinic {
    struct Edge {
        int to;
        int rev;
        long long cap;
    };
    std::vector<std::vector<Edge>> adj;
    std::vector<int> level, iter;

    explicit Dinic(int n) : adj(n), level(n), iter(n) {}

    void add_edge(int a, int b, long long cap) {
        adj[a].push_back({b, static_cast<int>(adj[b].size()), cap});
        adj[b].push_back({a, static_cast<int>(adj[a].size()) - 1, 0});
    }

    bool bfs(int s, int t) {
        std::fill(level.begin(), level.end(), -1);
        std::queue<int> q;
        level[s] = 0;
        q.push(s);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (const Edge& e : adj[v]) {
                if (e.cap > 0 && level[e.to] < 0) {
                    level[e.to] = level[v] + 1;
                    q.push(e.to);
                }
            }
        }
        return level[t] >= 0;
    }

    long long dfs(int v, int t, long long f) {
        if (v == t) return f;
        for (int& i = iter[v]; i < static_cast<int>(adj[v].size()); ++i) {
            Edge& e = adj[v][i];
            if (e.cap > 0 && level[v] < level[e.to]) {
                long long d = dfs(e.to, t, std::min(f, e.cap));
                if (d > 0) {
                    e.cap -= d;
                    adj[e.to][e.rev].cap += d;
                    return d;
                }
            }
        }
        return 0;
    }

    long long run(int s, int t) {
        long long flow = 0;
        while (bfs(s, t)) {
            std::fill(iter.begin(), iter.end(), 0);
            while (long long f = dfs(s, t, std::numeric_limits<long long>::max()))
                flow += f;
        }
        return flow;
    }
};

}  // namespace

MaxFlowResult max_flow(const FlowNetwork& net) {
    Dinic dinic(net.node_count);
    std::vector<std::pair<int, int>> where;  // (node, edge idx) per arc
    where.reserve(net.arcs.size());
    for (const auto& arc : net.arcs) {
        where.emplace_back(arc.from, static_cast<int>(dinic.adj[arc.from].size()));
        dinic.add_edge(arc.from, arc.to, arc.cap);
    }
    MaxFlowResult res;
    res.value = dinic.run(net.source, net.sink);
    res.arc_flow.resize(net.arcs.size());
    for (std::size_t i = 0; i < net.arcs.size(); ++i) {
        const auto& [node, idx] = where[i];
        res.arc_flow[i] = net.arcs[i].cap - dinic.adj[node][idx].cap;
    }
    return res;
}

bool flow_is_valid(const FlowNetwork& net, const MaxFlowResult& res) {
    if (res.arc_flow.size() != net.arcs.size()) return false;
    std::vector<long long> balance(net.node_count, 0);
    for (std::size_t i = 0; i < net.arcs.size(); ++i) {
        long long f = res.arc_flow[i];
        if (f < 0 || f > net.arcs[i].cap) return false;
        balance[net.arcs[i].from] -= f;
        balance[net.arcs[i].to] += f;
    }
    for (int v = 0; v < net.node_count; ++v) {
        if (v == net.source || v == net.sink) continue;
        if (balance[v] != 0) return false;
    }
    return balance[net.sink] == res.value && balance[net.source] == -res.value;
}

SolveResult solve_ebcp(const EbcpInstance& e) {
    const Graph& g = e.inst.g;
    int n = g.vertex_count();
    int k = static_cast<int>(e.deletion_set.size());
    if (budget_sum(e.inst) < n) return SolveResult::no();
    for (std::size_t i = 0; i < e.parts.size(); ++i) {
        if (e.inst.budgets[e.part_color[i] - 1] < static_cast<int>(e.parts[i].size()))
            return SolveResult::no();
    }

    FlowNetwork net = build_network(e);
    MaxFlowResult res = max_flow(net);
    if (!flow_is_valid(net, res))
        throw std::logic_error("ebcp: max-flow produced an invalid flow");
    if (res.value != n - k) return SolveResult::no();

    Coloring col;
    col.color.assign(n, 0);
    for (std::size_t i = 0; i < e.parts.size(); ++i)
        for (int v : e.parts[i]) col.color[v] = e.part_color[i];
    // pair-node -> vertex-node arcs with one unit of flow carry the colors
    std::vector<int> color_of_pair_node(net.node_count, 0);
    for (int a = 1; a <= e.inst.c; ++a)
        for (int node : net.pair_node[a - 1]) color_of_pair_node[node] = a;
    std::vector<int> vertex_of_node(net.node_count, -1);
    for (int v = 0; v < n; ++v)
        if (net.vertex_node[v] >= 0) vertex_of_node[net.vertex_node[v]] = v;
    for (std::size_t idx = 0; idx < net.arcs.size(); ++idx) {
        const auto& arc = net.arcs[idx];
        if (res.arc_flow[idx] == 1 && color_of_pair_node[arc.from] > 0 &&
            vertex_of_node[arc.to] >= 0) {
            col.color[vertex_of_node[arc.to]] = color_of_pair_node[arc.from];
        }
    }
    if (!verify_bcp(e.inst, col))
        throw std::logic_error("ebcp: reconstructed coloring failed verification");
    for (std::size_t i = 0; i < e.parts.size(); ++i)
        for (int v : e.parts[i])
            if (col.color[v] != e.part_color[i])
                throw std::logic_error("ebcp: pre-coloring not respected");
    return SolveResult::from(std::move(col));
}

}  // namespace bcolor
