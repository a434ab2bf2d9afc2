#include "cctp/algorithm.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <string>
#include <tuple>

namespace cctp {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct Arc {
    int to;
    double w;
    std::uint8_t via_path;  // 1: traverse the stored path-edge expansion
};

struct SpTree {
    std::vector<double> dist;
    std::vector<int> parent;
    std::vector<std::uint8_t> parent_via_path;
};

SpTree shortest_paths(int n, const std::vector<std::vector<Arc>>& adj, int src) {
    SpTree t{std::vector<double>(n, kInf), std::vector<int>(n, -1),
             std::vector<std::uint8_t>(n, 0)};
    t.dist[src] = 0.0;
    using Item = std::pair<double, int>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
    heap.push({0.0, src});
    while (!heap.empty()) {
        const auto [d, v] = heap.top();
        heap.pop();
        if (d != t.dist[v]) continue;
        for (const Arc& arc : adj[v]) {
            const double cand = d + arc.w;
            if (cand < t.dist[arc.to]) {
                t.dist[arc.to] = cand;
                t.parent[arc.to] = v;
                t.parent_via_path[arc.to] = arc.via_path;
                heap.push({cand, arc.to});
            }
        }
    }
    return t;
}

// Path src -> dst as (vertex, arrived-via-path-edge) hops, src excluded.
std::vector<std::pair<int, bool>> unwind(const SpTree& t, int src, int dst) {
    std::vector<std::pair<int, bool>> hops;
    for (int v = dst; v != src; v = t.parent[v]) {
        if (t.parent[v] < 0) throw InconsistencyError("shortest-path unwind hit a gap");
        hops.emplace_back(v, t.parent_via_path[v] != 0);
    }
    std::reverse(hops.begin(), hops.end());
    return hops;
}

void record(Trace* trace, const char* phase, VertexId from, VertexId to, const char* kind,
            double cost, double cumulative) {
    if (trace) trace->push_back({phase, from, to, kind, cost, cumulative});
}

double traced_move(OnlineEnvironment& env, VertexId to, Trace* trace, const char* phase,
                   const char* kind) {
    const VertexId from = env.view().position();
    const double cost = env.move(to);
    record(trace, phase, from, to, kind, cost, env.view().total_cost());
    return cost;
}

void require_fresh(const OnlineEnvironment& env) {
    if (env.view().position() != env.source() || env.view().walk_log().vertices.size() != 1)
        throw ContractViolation("environment has already been driven");
}

// Known-unblocked adjacency over the original graph.
std::vector<std::vector<Arc>> revealed_adjacency(const OnlineEnvironment& env) {
    const int n = env.instance().n();
    std::vector<std::vector<Arc>> adj(n);
    for (VertexId i = 0; i < n; ++i)
        for (VertexId j = i + 1; j < n; ++j)
            if (env.view().edge_state(i, j) == EdgeState::unblocked) {
                const double c = env.instance().cost(i, j);
                adj[i].push_back({j, c, 0});
                adj[j].push_back({i, c, 0});
            }
    return adj;
}

// Walks a path-edge expansion from `from` to `to` through the environment.
void traverse_expansion(OnlineEnvironment& env, const PathEdge& pe, VertexId from, VertexId to,
                        double& acc, Trace* trace, const char* phase) {
    std::vector<VertexId> seq = pe.expansion;
    if (seq.front() != from) std::reverse(seq.begin(), seq.end());
    if (seq.front() != from || seq.back() != to)
        throw InconsistencyError("path-edge expansion endpoints do not match");
    for (std::size_t i = 1; i < seq.size(); ++i)
        acc += traced_move(env, seq[i], trace, phase, "path-expansion");
}

}  // namespace

AlgoTsp inject_tour(std::vector<VertexId> order) {
    return [order = std::move(order)](const MetricInstance& instance) {
        const int n = instance.n();
        if (static_cast<int>(order.size()) != n)
            throw ValidationError("injected tour has wrong length");
        if (order.front() != instance.source())
            throw ValidationError("injected tour must start at the source");
        std::vector<std::uint8_t> seen(n, 0);
        for (VertexId v : order) {
            if (v < 0 || v >= n || seen[v])
                throw ValidationError("injected tour is not a permutation");
            seen[v] = 1;
        }
        return TspTour{order, tour_cost(instance, order)};
    };
}

AlgoTsp christofides_with_fallback(bool* used_fallback, int matching_dp_limit) {
    return [used_fallback, matching_dp_limit](const MetricInstance& instance) {
        try {
            return christofides_tour(instance, matching_dp_limit);
        } catch (const SizeError&) {
            if (used_fallback) *used_fallback = true;
            return double_tree_tour(instance);
        }
    };
}

ShortCutResult shortcut(OnlineEnvironment& env, const TspTour& tour, Trace* trace) {
    require_fresh(env);
    const int n = env.instance().n();
    if (static_cast<int>(tour.order.size()) != n || tour.order.front() != env.source())
        throw ContractViolation("shortcut needs a full tour starting at the source");

    ShortCutResult result;
    result.u_s.push_back(env.source());

    // Walk the tour order; the edge into the next tour vertex is always
    // revealed because the current vertex has been visited.
    int i = 0;
    for (int j = 1; j < n; ++j) {
        const VertexId vi = tour.order[i];
        const VertexId vj = tour.order[j];
        if (env.view().edge_state(vi, vj) == EdgeState::unblocked) {
            result.cost += traced_move(env, vj, trace, "shortcut", "direct");
            i = j;
        } else {
            result.u_s.push_back(vj);
        }
    }

    if (i != 0) {
        const VertexId last = tour.order[i];
        if (env.view().edge_state(last, tour.order[0]) == EdgeState::unblocked) {
            result.cost += traced_move(env, tour.order[0], trace, "shortcut", "direct");
        } else {
            // Closing edge is blocked: physically retrace the walk.
            const std::vector<VertexId> forward = env.view().walk_log().vertices;
            for (auto it = forward.rbegin() + 1; it != forward.rend(); ++it)
                result.cost += traced_move(env, *it, trace, "shortcut", "direct");
        }
    }

    std::sort(result.u_s.begin(), result.u_s.end());
    result.revealed_blocked = env.view().revealed_blocked_count();
    if (static_cast<int>(result.u_s.size()) - 1 > result.revealed_blocked)
        throw InconsistencyError("skipped more vertices than blocked edges seen");
    result.route.vertices = env.view().walk_log().vertices;
    result.route.cost = result.cost;
    return result;
}

CompressedGraph compress(const OnlineEnvironment& env, const std::vector<VertexId>& u_s) {
    const int n = env.instance().n();
    std::vector<std::uint8_t> in_us(n, 0);
    for (VertexId v : u_s) in_us[v] = 1;

    // H: known-unblocked edges with at least one endpoint outside U_s.
    std::vector<std::vector<Arc>> h(n);
    for (VertexId i = 0; i < n; ++i) {
        for (VertexId j = i + 1; j < n; ++j) {
            if (in_us[i] && in_us[j]) continue;
            if (env.view().edge_state(i, j) != EdgeState::unblocked) continue;
            const double c = env.instance().cost(i, j);
            h[i].push_back({j, c, 0});
            h[j].push_back({i, c, 0});
        }
    }

    CompressedGraph g;
    g.vertices = u_s;
    std::sort(g.vertices.begin(), g.vertices.end());
    for (VertexId x : g.vertices) {
        const SpTree t = shortest_paths(n, h, x);
        for (VertexId y : g.vertices) {
            if (y <= x || t.dist[y] == kInf) continue;
            PathEdge pe;
            pe.cost = t.dist[y];
            pe.expansion.push_back(x);
            for (const auto& [v, via] : unwind(t, x, y)) pe.expansion.push_back(v);
            g.path_edges.emplace(EdgeKey{x, y}, std::move(pe));
        }
    }
    return g;
}

namespace {

// Adjacency of the compressed multigraph under current knowledge: a pair is
// usable through its direct edge once revealed unblocked, or through its
// path edge. When both exist the cheaper wins, ties prefer the direct edge.
std::vector<std::vector<Arc>> gprime_adjacency(const OnlineEnvironment& env,
                                               const CompressedGraph& g) {
    const int m = static_cast<int>(g.vertices.size());
    std::vector<std::vector<Arc>> adj(m);
    for (int a = 0; a < m; ++a) {
        for (int b = a + 1; b < m; ++b) {
            const VertexId x = g.vertices[a];
            const VertexId y = g.vertices[b];
            const bool direct_ok = env.view().edge_state(x, y) == EdgeState::unblocked;
            const double direct_w = direct_ok ? env.instance().cost(x, y) : kInf;
            const PathEdge* pe = g.path_edge(x, y);
            const double path_w = pe ? pe->cost : kInf;
            if (!direct_ok && !pe) continue;
            const bool via_path = path_w < direct_w;
            const double w = via_path ? path_w : direct_w;
            adj[a].push_back({b, w, via_path});
            adj[b].push_back({a, w, via_path});
        }
    }
    return adj;
}

}  // namespace

ExploreResult nn_explore(OnlineEnvironment& env, const CompressedGraph& gprime,
                         const TiePolicy& tie, Trace* trace) {
    const int n = env.instance().n();
    const int m = static_cast<int>(gprime.vertices.size());
    std::vector<int> index_of(n, -1);
    for (int i = 0; i < m; ++i) index_of[gprime.vertices[i]] = i;
    if (index_of[env.view().position()] < 0)
        throw ContractViolation("explorer is not positioned on a compressed-graph vertex");

    ExploreResult result;
    result.gprime_walk.vertices.push_back(env.view().position());

    auto run_leg = [&](int target_idx, const SpTree& t, const char* phase, double& acc) {
        const int cur = index_of[env.view().position()];
        for (const auto& [idx, via_path] : unwind(t, cur, target_idx)) {
            const VertexId from = env.view().position();
            const VertexId to = gprime.vertices[idx];
            if (via_path) {
                traverse_expansion(env, *gprime.path_edge(from, to), from, to, acc, trace, phase);
            } else {
                acc += traced_move(env, to, trace, phase, "direct");
            }
            result.gprime_walk.vertices.push_back(to);
        }
    };

    while (true) {
        bool any_unvisited = false;
        for (VertexId v : gprime.vertices) any_unvisited |= !env.view().visited(v);
        if (!any_unvisited) break;

        const auto adj = gprime_adjacency(env, gprime);
        const SpTree t = shortest_paths(m, adj, index_of[env.view().position()]);

        // Cheapest reachable unvisited vertex; ties by policy rank, then id.
        int best = -1;
        for (int i = 0; i < m; ++i) {
            const VertexId v = gprime.vertices[i];
            if (env.view().visited(v) || t.dist[i] == kInf) continue;
            if (best < 0 ||
                std::make_tuple(t.dist[i], tie.rank_of(v)) <
                    std::make_tuple(t.dist[best], tie.rank_of(gprime.vertices[best])))
                best = i;
        }
        if (best < 0)
            throw InconsistencyError("unvisited vertices remain but none is reachable");
        run_leg(best, t, "explore", result.visit_cost);
    }

    if (env.view().position() != env.source()) {
        const auto adj = gprime_adjacency(env, gprime);
        const SpTree t = shortest_paths(m, adj, index_of[env.view().position()]);
        const int src_idx = index_of[env.source()];
        if (t.dist[src_idx] == kInf) throw InconsistencyError("no known route back to source");
        run_leg(src_idx, t, "return", result.return_cost);
    }

    result.gprime_walk.cost = result.visit_cost + result.return_cost;
    return result;
}

RunResult compress_and_explore(OnlineEnvironment& env, const AlgoTsp& algo_tsp,
                               const TiePolicy& tie, Trace* trace) {
    RunResult run;
    run.tour = algo_tsp(env.instance());
    run.shortcut = shortcut(env, run.tour, trace);
    run.shortcut_cost = run.shortcut.cost;
    run.compressed = compress(env, run.shortcut.u_s);
    run.explore = nn_explore(env, run.compressed, tie, trace);
    run.explore_cost = run.explore.visit_cost;
    run.return_cost = run.explore.return_cost;
    run.walk = env.view().walk_log();
    run.total_cost = env.view().total_cost();
    return run;
}

BaselineResult repeated_shortcut_baseline(OnlineEnvironment& env, const AlgoTsp& algo_tsp,
                                          Trace* trace) {
    require_fresh(env);
    const MetricInstance& instance = env.instance();
    const int n = instance.n();

    BaselineResult result;
    while (true) {
        std::vector<VertexId> unvisited;
        for (VertexId v = 0; v < n; ++v)
            if (!env.view().visited(v)) unvisited.push_back(v);
        if (unvisited.empty()) break;
        if (result.rounds > 2 * n) throw InconsistencyError("baseline failed to make progress");

        // Tour of the remaining vertices on the closure of distances that
        // avoid known-blocked edges (unknown edges are taken at face value).
        CostMatrix optimistic(n, kInf);
        for (VertexId i = 0; i < n; ++i)
            for (VertexId j = i + 1; j < n; ++j)
                if (env.view().edge_state(i, j) != EdgeState::blocked)
                    optimistic.set(i, j, instance.cost(i, j));
        const CostMatrix closure = shortest_path_fixpoint(std::move(optimistic));

        std::vector<VertexId> members{env.view().position()};
        members.insert(members.end(), unvisited.begin(), unvisited.end());
        const int m = static_cast<int>(members.size());
        CostMatrix sub(m);
        for (int a = 0; a < m; ++a)
            for (int b = a + 1; b < m; ++b) sub.set(a, b, closure.at(members[a], members[b]));

        TspTour tour = algo_tsp(MetricInstance(std::move(sub), 0));
        std::vector<VertexId> order;
        for (VertexId idx : tour.order) order.push_back(members[idx]);
        if (result.rounds % 2 == 1) std::reverse(order.begin() + 1, order.end());

        bool progressed = false;
        for (std::size_t j = 1; j < order.size(); ++j) {
            const VertexId t = order[j];
            if (env.view().visited(t)) continue;
            if (env.view().edge_state(env.view().position(), t) == EdgeState::unblocked) {
                traced_move(env, t, trace, "shortcut", "direct");
                progressed = true;
            }
        }

        if (!progressed) {
            // Whole pass blocked: walk the cheapest known route to the
            // nearest unvisited vertex and restart from there.
            const auto adj = revealed_adjacency(env);
            const SpTree t = shortest_paths(n, adj, env.view().position());
            VertexId best = -1;
            for (VertexId v : unvisited)
                if (t.dist[v] < kInf &&
                    (best < 0 || std::make_tuple(t.dist[v], v) < std::make_tuple(t.dist[best], best)))
                    best = v;
            if (best < 0)
                throw InconsistencyError("unvisited vertices remain but none is reachable");
            for (const auto& [v, via] : unwind(t, env.view().position(), best))
                traced_move(env, v, trace, "explore", "direct");
        }
        ++result.rounds;
    }

    if (env.view().position() != env.source()) {
        const auto adj = revealed_adjacency(env);
        const SpTree t = shortest_paths(n, adj, env.view().position());
        if (t.dist[env.source()] == kInf)
            throw InconsistencyError("no known route back to source");
        for (const auto& [v, via] : unwind(t, env.view().position(), env.source()))
            traced_move(env, v, trace, "return", "direct");
    }

    result.walk = env.view().walk_log();
    result.total_cost = env.view().total_cost();
    return result;
}

}  // namespace cctp
