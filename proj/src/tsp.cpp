#include "cctp/tsp.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <string>
#include <tuple>

namespace cctp {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::vector<std::vector<VertexId>> tree_adjacency(int n, const std::vector<EdgeKey>& edges) {
    std::vector<std::vector<VertexId>> adj(n);
    for (const EdgeKey& e : edges) {
        adj[e.a].push_back(e.b);
        adj[e.b].push_back(e.a);
    }
    for (auto& nbrs : adj) std::sort(nbrs.begin(), nbrs.end());
    return adj;
}

// Exact minimum-weight perfect matching over the listed vertices.
// dp[mask] = cheapest matching of the vertices selected by mask.
std::vector<std::pair<VertexId, VertexId>> min_weight_matching(
    const MetricInstance& instance, const std::vector<VertexId>& odd) {
    const int m = static_cast<int>(odd.size());
    if (m == 0) return {};
    const std::size_t full = std::size_t{1} << m;
    std::vector<double> dp(full, kInf);
    std::vector<std::int8_t> partner(full, -1);
    dp[0] = 0.0;
    for (std::size_t mask = 1; mask < full; ++mask) {
        const int i = std::countr_zero(mask);
        for (int j = i + 1; j < m; ++j) {
            if (!(mask >> j & 1)) continue;
            const std::size_t rest = mask ^ (std::size_t{1} << i) ^ (std::size_t{1} << j);
            if (dp[rest] == kInf) continue;
            const double cand = dp[rest] + instance.cost(odd[i], odd[j]);
            if (cand < dp[mask]) {
                dp[mask] = cand;
                partner[mask] = static_cast<std::int8_t>(j);
            }
        }
    }
    std::vector<std::pair<VertexId, VertexId>> pairs;
    std::size_t mask = full - 1;
    while (mask != 0) {
        const int i = std::countr_zero(mask);
        const int j = partner[mask];
        pairs.emplace_back(odd[i], odd[j]);
        mask ^= (std::size_t{1} << i) ^ (std::size_t{1} << j);
    }
    return pairs;
}

// Hierholzer from `start`, always taking the lowest-index available
// neighbor. The multigraph must be connected and all-even.
std::vector<VertexId> euler_circuit(int n, VertexId start,
                                    const std::vector<std::pair<VertexId, VertexId>>& edges) {
    struct Arc {
        VertexId to;
        int edge_id;
    };
    std::vector<std::vector<Arc>> adj(n);
    for (int id = 0; id < static_cast<int>(edges.size()); ++id) {
        adj[edges[id].first].push_back({edges[id].second, id});
        adj[edges[id].second].push_back({edges[id].first, id});
    }
    for (auto& arcs : adj)
        std::sort(arcs.begin(), arcs.end(), [](const Arc& x, const Arc& y) {
            return std::tie(x.to, x.edge_id) < std::tie(y.to, y.edge_id);
        });

    std::vector<std::uint8_t> used(edges.size(), 0);
    std::vector<std::size_t> next(n, 0);
    std::vector<VertexId> stack{start};
    std::vector<VertexId> circuit;
    while (!stack.empty()) {
        const VertexId v = stack.back();
        auto& arcs = adj[v];
        while (next[v] < arcs.size() && used[arcs[next[v]].edge_id]) ++next[v];
        if (next[v] == arcs.size()) {
            circuit.push_back(v);
            stack.pop_back();
        } else {
            const Arc arc = arcs[next[v]];
            used[arc.edge_id] = 1;
            stack.push_back(arc.to);
        }
    }
    std::reverse(circuit.begin(), circuit.end());
    return circuit;
}

TspTour shortcut_to_tour(const MetricInstance& instance, const std::vector<VertexId>& circuit) {
    std::vector<std::uint8_t> seen(instance.n(), 0);
    TspTour tour;
    for (VertexId v : circuit) {
        if (!seen[v]) {
            seen[v] = 1;
            tour.order.push_back(v);
        }
    }
    tour.cost = tour_cost(instance, tour.order);
    return tour;
}

}  // namespace

double tour_cost(const CostMatrix& costs, const std::vector<VertexId>& order) {
    if (order.size() < 2) return 0.0;
    double total = 0.0;
    for (std::size_t i = 1; i < order.size(); ++i) total += costs.at(order[i - 1], order[i]);
    total += costs.at(order.back(), order.front());
    return total;
}

double tour_cost(const MetricInstance& instance, const std::vector<VertexId>& order) {
    return tour_cost(instance.costs(), order);
}

SpanningTree minimum_spanning_tree(const MetricInstance& instance) {
    const int n = instance.n();
    std::vector<EdgeKey> all;
    all.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
    for (VertexId i = 0; i < n; ++i)
        for (VertexId j = i + 1; j < n; ++j) all.push_back({i, j});
    std::stable_sort(all.begin(), all.end(), [&](const EdgeKey& x, const EdgeKey& y) {
        return std::make_tuple(instance.cost(x.a, x.b), x.a, x.b) <
               std::make_tuple(instance.cost(y.a, y.b), y.a, y.b);
    });

    SpanningTree tree;
    UnionFind uf(n);
    for (const EdgeKey& e : all) {
        if (uf.unite(e.a, e.b)) {
            tree.edges.push_back(e);
            tree.weight += instance.cost(e.a, e.b);
            if (static_cast<int>(tree.edges.size()) == n - 1) break;
        }
    }
    return tree;
}

TspTour double_tree_tour(const MetricInstance& instance) {
    const SpanningTree tree = minimum_spanning_tree(instance);
    const auto adj = tree_adjacency(instance.n(), tree.edges);

    TspTour tour;
    std::vector<std::uint8_t> seen(instance.n(), 0);
    // Preorder of the MST equals the first-visit shortcut of its doubling.
    std::vector<VertexId> stack{instance.source()};
    while (!stack.empty()) {
        const VertexId v = stack.back();
        stack.pop_back();
        if (seen[v]) continue;
        seen[v] = 1;
        tour.order.push_back(v);
        for (auto it = adj[v].rbegin(); it != adj[v].rend(); ++it)
            if (!seen[*it]) stack.push_back(*it);
    }
    tour.cost = tour_cost(instance, tour.order);
    return tour;
}

TspTour christofides_tour(const MetricInstance& instance, int matching_dp_limit) {
    const int n = instance.n();
    if (n == 1) return {{instance.source()}, 0.0};

    const SpanningTree tree = minimum_spanning_tree(instance);
    std::vector<int> degree(n, 0);
    for (const EdgeKey& e : tree.edges) {
        ++degree[e.a];
        ++degree[e.b];
    }
    std::vector<VertexId> odd;
    for (VertexId v = 0; v < n; ++v)
        if (degree[v] % 2) odd.push_back(v);
    if (static_cast<int>(odd.size()) > matching_dp_limit)
        throw SizeError("odd-vertex count " + std::to_string(odd.size()) +
                        " exceeds matching DP limit " + std::to_string(matching_dp_limit));

    std::vector<std::pair<VertexId, VertexId>> multigraph;
    multigraph.reserve(tree.edges.size() + odd.size() / 2);
    for (const EdgeKey& e : tree.edges) multigraph.emplace_back(e.a, e.b);
    for (const auto& [a, b] : min_weight_matching(instance, odd)) multigraph.emplace_back(a, b);

    const auto circuit = euler_circuit(n, instance.source(), multigraph);
    TspTour tour = shortcut_to_tour(instance, circuit);
    if (static_cast<int>(tour.order.size()) != n)
        throw InconsistencyError("Euler shortcut missed vertices");
    return tour;
}

TspTour held_karp_optimal(const CostMatrix& costs, VertexId start, int limit) {
    const int m = costs.size();
    if (m > limit)
        throw SizeError("Held-Karp refused: " + std::to_string(m) + " vertices > limit " +
                        std::to_string(limit));
    if (start < 0 || start >= m) throw ValidationError("Held-Karp start vertex out of range");
    if (m == 1) return {{start}, 0.0};

    std::vector<VertexId> rest;
    for (VertexId v = 0; v < m; ++v)
        if (v != start) rest.push_back(v);
    const int r = static_cast<int>(rest.size());
    const std::size_t full = std::size_t{1} << r;

    // dp[mask * r + j]: cheapest path start -> ... -> rest[j] covering mask.
    std::vector<double> dp(full * r, kInf);
    std::vector<std::int8_t> parent(full * r, -1);
    for (int j = 0; j < r; ++j)
        dp[(std::size_t{1} << j) * r + j] = costs.at(start, rest[j]);

    for (std::size_t mask = 1; mask < full; ++mask) {
        for (int j = 0; j < r; ++j) {
            if (!(mask >> j & 1)) continue;
            const double base = dp[mask * r + j];
            if (base == kInf) continue;
            for (int t = 0; t < r; ++t) {
                if (mask >> t & 1) continue;
                const std::size_t nmask = mask | (std::size_t{1} << t);
                const double cand = base + costs.at(rest[j], rest[t]);
                if (cand < dp[nmask * r + t]) {
                    dp[nmask * r + t] = cand;
                    parent[nmask * r + t] = static_cast<std::int8_t>(j);
                }
            }
        }
    }

    int best = -1;
    double best_cost = kInf;
    for (int j = 0; j < r; ++j) {
        const double cand = dp[(full - 1) * r + j] + costs.at(rest[j], start);
        if (cand < best_cost) {
            best_cost = cand;
            best = j;
        }
    }
    if (best < 0) throw InconsistencyError("Held-Karp found no tour");

    std::vector<VertexId> order{start};
    std::vector<int> chain;
    std::size_t mask = full - 1;
    for (int j = best; j >= 0;) {
        chain.push_back(j);
        const int p = parent[mask * r + j];
        mask ^= std::size_t{1} << j;
        j = p;
    }
    for (auto it = chain.rbegin(); it != chain.rend(); ++it) order.push_back(rest[*it]);

    TspTour tour;
    tour.order = std::move(order);
    tour.cost = tour_cost(costs, tour.order);
    return tour;
}

CostMatrix shortest_path_fixpoint(CostMatrix init) {
    const int n = init.size();
    bool changed = true;
    while (changed) {
        changed = false;
        for (int k = 0; k < n; ++k) {
            for (int i = 0; i < n; ++i) {
                if (i == k) continue;
                const double dik = init.at(i, k);
                if (dik == kInf) continue;
                for (int j = 0; j < n; ++j) {
                    if (j == i || j == k) continue;
                    const double cand = dik + init.at(k, j);
                    if (cand < init.at(i, j)) {
                        init.set(i, j, cand);
                        changed = true;
                    }
                }
            }
        }
    }
    return init;
}

CostMatrix metric_closure(const Scenario& scenario) {
    const int n = scenario.n();
    CostMatrix init(n, kInf);
    for (VertexId i = 0; i < n; ++i)
        for (VertexId j = i + 1; j < n; ++j)
            if (!scenario.is_blocked(i, j)) init.set(i, j, scenario.instance().cost(i, j));
    CostMatrix closure = shortest_path_fixpoint(std::move(init));
    for (VertexId i = 0; i < n; ++i)
        for (VertexId j = i + 1; j < n; ++j)
            if (closure.at(i, j) == kInf)
                throw InconsistencyError("metric closure of a disconnected scenario");
    return closure;
}

}  // namespace cctp
