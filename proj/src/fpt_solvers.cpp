#include "bcolor/fpt_solvers.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>

#include "bcolor/parallel.hpp"
#include "bcolor/poly_solvers.hpp"

namespace bcolor {

namespace {

void sort_parts(std::vector<std::vector<int>>& parts) {
    for (auto& p : parts) std::sort(p.begin(), p.end());
    std::sort(parts.begin(), parts.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() > b.size();
        return a.front() < b.front();
    });
}

bool rgs_extend(const Graph& g, const std::vector<int>& s,
                std::vector<std::vector<int>>& parts, std::size_t pos,
                const std::function<bool(const SetPartition&)>& visit) {
    if (pos == s.size()) {
        SetPartition out;
        out.parts = parts;
        sort_parts(out.parts);
        return visit(out);
    }
    int v = s[pos];
    for (std::size_t j = 0; j <= parts.size(); ++j) {
        if (j < parts.size()) {
            bool clash = false;
            for (int u : parts[j]) {
                if (g.has_edge(u, v)) {
                    clash = true;
                    break;
                }
            }
            if (clash) continue;
            parts[j].push_back(v);
            if (!rgs_extend(g, s, parts, pos + 1, visit)) return false;
            parts[j].pop_back();
        } else {
            parts.push_back({v});
            if (!rgs_extend(g, s, parts, pos + 1, visit)) return false;
            parts.pop_back();
        }
    }
    return true;
}

// Candidate stream -> first feasible EBCP answer in stream order, with
// optional block-parallel evaluation of the flow subproblems.
SolveResult first_feasible(const std::function<std::optional<EbcpInstance>()>& next,
                           const FptOptions& opts) {
    int workers = opts.parallel ? thread_count() : 1;
    if (workers <= 1) {
        while (auto cand = next()) {
            SolveResult r = solve_ebcp(*cand);
            if (r.yes) return r;
        }
        return SolveResult::no();
    }
    std::size_t block = static_cast<std::size_t>(workers) * 4;
    while (true) {
        std::vector<EbcpInstance> batch;
        batch.reserve(block);
        while (batch.size() < block) {
            auto cand = next();
            if (!cand) break;
            batch.push_back(std::move(*cand));
        }
        if (batch.empty()) return SolveResult::no();
        std::vector<SolveResult> results(batch.size());
        parallel_ranges(batch.size(), [&](std::size_t lo, std::size_t hi) {
            for (std::size_t i = lo; i < hi; ++i) results[i] = solve_ebcp(batch[i]);
        });
        for (auto& r : results)
            if (r.yes) return std::move(r);
        if (batch.size() < block) return SolveResult::no();
    }
}

std::vector<std::vector<int>> clusters_of_rest(const Graph& g, const std::vector<int>& s) {
    std::vector<char> in_s(g.vertex_count(), 0);
    for (int v : s) in_s[v] = 1;
    std::vector<int> rest;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (!in_s[v]) rest.push_back(v);
    auto sub = induced_subgraph(g, rest);
    auto view = make_cluster_view(sub.graph);
    if (!view) throw std::invalid_argument("fpt: deletion set does not leave a cluster graph");
    std::vector<std::vector<int>> clusters;
    for (auto cl : view->clusters) {
        for (int& v : cl) v = sub.original[v];
        clusters.push_back(std::move(cl));
    }
    return clusters;
}

EbcpInstance assemble(const BcpInstance& inst, std::vector<int> s,
                      std::vector<std::vector<int>> parts, std::vector<int> part_color,
                      std::vector<int> budgets,
                      const std::vector<std::vector<int>>& clusters) {
    EbcpInstance e;
    e.inst.g = inst.g;
    e.inst.c = inst.c;
    e.inst.budgets = std::move(budgets);
    e.deletion_set = std::move(s);
    e.parts = std::move(parts);
    e.part_color = std::move(part_color);
    e.clusters = clusters;
    return e;
}

}  // namespace

void enumerate_independent_partitions(const Graph& g, const std::vector<int>& s,
                                      const std::function<bool(const SetPartition&)>& visit) {
    std::vector<int> sorted = s;
    std::sort(sorted.begin(), sorted.end());
    if (sorted.empty()) {
        visit(SetPartition{});
        return;
    }
    std::vector<std::vector<int>> parts;
    rgs_extend(g, sorted, parts, 0, visit);
}

std::vector<SetPartition> all_independent_partitions(const Graph& g, const std::vector<int>& s) {
    std::vector<SetPartition> out;
    enumerate_independent_partitions(g, s, [&](const SetPartition& p) {
        out.push_back(p);
        return true;
    });
    return out;
}

std::optional<ColorPlan> make_color_plan(const BcpInstance& inst, const SetPartition& partition,
                                         const std::vector<int>& demands) {
    if (demands.size() != partition.parts.size())
        throw std::invalid_argument("color plan: one demand per part required");
    ColorPlan plan;
    plan.gamma.assign(partition.parts.size(), 0);
    plan.modified_budgets = inst.budgets;
    std::vector<char> used(inst.c + 1, 0);
    for (std::size_t i = 0; i < partition.parts.size(); ++i) {
        int need = static_cast<int>(partition.parts[i].size()) + demands[i];
        int best = -1;
        for (int a = 1; a <= inst.c; ++a) {
            if (used[a] || inst.budgets[a - 1] < need) continue;
            if (best < 0 || inst.budgets[a - 1] < inst.budgets[best - 1]) best = a;
        }
        if (best < 0) return std::nullopt;
        used[best] = 1;
        plan.gamma[i] = best;
        plan.modified_budgets[best - 1] = need;
    }
    return plan;
}

FeasibleColorLists make_color_lists(const BcpInstance& inst, const SetPartition& partition) {
    FeasibleColorLists lists;
    int ell = partition.ell();
    for (const auto& part : partition.parts) {
        std::vector<int> feasible;
        for (int a = 1; a <= inst.c; ++a)
            if (inst.budgets[a - 1] >= static_cast<int>(part.size())) feasible.push_back(a);
        std::vector<int> tried = feasible;
        std::sort(tried.begin(), tried.end(), [&](int a, int b) {
            if (inst.budgets[a - 1] != inst.budgets[b - 1])
                return inst.budgets[a - 1] < inst.budgets[b - 1];
            return a < b;
        });
        if (static_cast<int>(tried.size()) > ell) tried.resize(ell);
        std::sort(tried.begin(), tried.end());
        lists.feasible.push_back(std::move(feasible));
        lists.tried.push_back(std::move(tried));
    }
    return lists;
}

SolveResult solve_cvd_colors(const BcpInstance& inst, const DeletionSet& s,
                             const FptOptions& opts) {
    int n = inst.g.vertex_count();
    if (budget_sum(inst) < n) return SolveResult::no();
    std::vector<int> sv = s.vertices;
    std::sort(sv.begin(), sv.end());
    auto clusters = clusters_of_rest(inst.g, sv);
    int k = static_cast<int>(sv.size());

    auto canonical = [&](const std::vector<int>& a) {
        if (!opts.break_symmetry) return true;
        // Among equal-budget colors, class min-vertices must appear in
        // increasing color order, used colors before unused ones.
        std::vector<int> min_vertex(inst.c + 1, -1);
        for (int i = k - 1; i >= 0; --i) min_vertex[a[i]] = sv[i];
        for (int p = 1; p <= inst.c; ++p) {
            for (int q = p + 1; q <= inst.c; ++q) {
                if (inst.budgets[p - 1] != inst.budgets[q - 1]) continue;
                if (min_vertex[q] < 0) continue;
                if (min_vertex[p] < 0 || min_vertex[p] > min_vertex[q]) return false;
            }
        }
        return true;
    };

    // Iterative backtracking over proper colorings of S in lexicographic
    // order; alpha[pos] == 0 means "no color tried at pos yet".
    std::vector<int> alpha(std::max(k, 1), 0);
    int pos = 0;
    bool emitted_empty = false;
    auto next = [&]() -> std::optional<EbcpInstance> {
        if (k == 0) {
            if (emitted_empty) return std::nullopt;
            emitted_empty = true;
            return assemble(inst, sv, {}, {}, inst.budgets, clusters);
        }
        while (pos >= 0) {
            if (pos == k) {
                pos = k - 1;  // resume by bumping the last digit
                if (!canonical(alpha)) continue;
                std::vector<std::vector<int>> parts;
                std::vector<int> part_color;
                std::vector<int> part_of_color(inst.c + 1, -1);
                for (int i = 0; i < k; ++i) {
                    int a = alpha[i];
                    if (part_of_color[a] < 0) {
                        part_of_color[a] = static_cast<int>(parts.size());
                        parts.push_back({});
                        part_color.push_back(a);
                    }
                    parts[part_of_color[a]].push_back(sv[i]);
                }
                bool fits = true;
                for (std::size_t i = 0; i < parts.size(); ++i)
                    if (static_cast<int>(parts[i].size()) > inst.budgets[part_color[i] - 1])
                        fits = false;
                if (!fits) continue;
                return assemble(inst, sv, std::move(parts), std::move(part_color),
                                inst.budgets, clusters);
            }
            int col = alpha[pos] + 1;
            bool placed = false;
            for (; col <= inst.c; ++col) {
                bool clash = false;
                for (int i = 0; i < pos; ++i) {
                    if (alpha[i] == col && inst.g.has_edge(sv[i], sv[pos])) {
                        clash = true;
                        break;
                    }
                }
                if (!clash) {
                    alpha[pos] = col;
                    placed = true;
                    break;
                }
            }
            if (placed) {
                ++pos;
                if (pos < k) alpha[pos] = 0;
            } else {
                alpha[pos] = 0;
                --pos;
            }
        }
        return std::nullopt;
    };
    return first_feasible(next, opts);
}

SolveResult solve_cvd_clusters(const BcpInstance& inst, const DeletionSet& s,
                               const FptOptions& opts) {
    int n = inst.g.vertex_count();
    if (budget_sum(inst) < n) return SolveResult::no();
    std::vector<int> sv = s.vertices;
    std::sort(sv.begin(), sv.end());
    auto clusters = clusters_of_rest(inst.g, sv);
    int d = static_cast<int>(clusters.size());

    std::vector<SetPartition> partitions = all_independent_partitions(inst.g, sv);

    std::size_t pi = 0;
    std::vector<int> demands;
    bool fresh = true;
    auto next = [&]() -> std::optional<EbcpInstance> {
        while (pi < partitions.size()) {
            const SetPartition& part = partitions[pi];
            int ell = part.ell();
            if (fresh) {
                demands.assign(ell, 0);
                fresh = false;
            } else {
                // lexicographic odometer over {0..d}^ell
                int i = ell - 1;
                while (i >= 0 && demands[i] == d) --i;
                if (i < 0 || ell == 0) {
                    ++pi;
                    fresh = true;
                    continue;
                }
                ++demands[i];
                for (int j = i + 1; j < ell; ++j) demands[j] = 0;
            }
            auto plan = make_color_plan(inst, part, demands);
            if (!plan) continue;
            return assemble(inst, sv, part.parts, plan->gamma,
                            std::move(plan->modified_budgets), clusters);
        }
        return std::nullopt;
    };
    return first_feasible(next, opts);
}

SolveResult solve_distance_to_clique(const BcpInstance& inst, const DeletionSet& a,
                                     const FptOptions& opts) {
    return solve_cvd_clusters(inst, a, opts);
}

SolveResult solve_vertex_cover(const BcpInstance& inst, const DeletionSet& s,
                               const FptOptions& opts) {
    int n = inst.g.vertex_count();
    if (budget_sum(inst) < n) return SolveResult::no();
    std::vector<int> sv = s.vertices;
    std::sort(sv.begin(), sv.end());
    DeletionSet as_vc{DeletionSet::Kind::VertexCover, sv};
    if (!validate_deletion_set(inst.g, as_vc))
        throw std::invalid_argument("solve_vertex_cover: not a vertex cover");
    auto clusters = clusters_of_rest(inst.g, sv);

    std::vector<SetPartition> partitions = all_independent_partitions(inst.g, sv);

    std::size_t pi = 0;
    FeasibleColorLists lists;
    std::vector<int> pick;      // index into tried list per part
    bool fresh = true;
    auto next = [&]() -> std::optional<EbcpInstance> {
        while (pi < partitions.size()) {
            const SetPartition& part = partitions[pi];
            int ell = part.ell();
            if (fresh) {
                lists = make_color_lists(inst, part);
                bool abandoned = false;
                for (const auto& f : lists.feasible)
                    if (f.empty()) abandoned = true;
                if (abandoned) {
                    ++pi;
                    continue;
                }
                pick.assign(ell, 0);
                fresh = false;
            } else {
                int i = ell - 1;
                while (i >= 0 && pick[i] + 1 >= static_cast<int>(lists.tried[i].size())) --i;
                if (i < 0 || ell == 0) {
                    ++pi;
                    fresh = true;
                    continue;
                }
                ++pick[i];
                for (int j = i + 1; j < ell; ++j) pick[j] = 0;
            }
            // injectivity across parts
            std::vector<int> gamma(ell);
            std::vector<char> used(inst.c + 1, 0);
            bool ok = true;
            for (int i = 0; i < ell && ok; ++i) {
                gamma[i] = lists.tried[i][pick[i]];
                if (used[gamma[i]])
                    ok = false;
                else
                    used[gamma[i]] = 1;
            }
            if (!ok) continue;
            return assemble(inst, sv, part.parts, std::move(gamma), inst.budgets, clusters);
        }
        return std::nullopt;
    };
    return first_feasible(next, opts);
}

}  // namespace bcolor
