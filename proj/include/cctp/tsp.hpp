#pragma once

// Offline TSP machinery: minimum spanning trees, the double-tree and
// Christofides approximations, the exact Held-Karp oracle, and
// shortest-path metric closures.

#include <vector>

#include "cctp/scenario.hpp"

namespace cctp {

// Odd-vertex matching uses an exact O(2^m * m) subset DP; beyond this many
// odd-degree vertices christofides_tour refuses and callers fall back to
// double_tree_tour.
inline constexpr int kMatchingDpLimit = 20;

// Held-Karp size cap; 2^18 * 18 doubles is still desk-scale memory.
inline constexpr int kHeldKarpLimit = 18;

struct SpanningTree {
    std::vector<EdgeKey> edges;
    double weight = 0.0;
};

struct TspTour {
    std::vector<VertexId> order;  // starts at source; each vertex exactly once
    double cost = 0.0;            // includes the closing edge back to order[0]
};

double tour_cost(const MetricInstance& instance, const std::vector<VertexId>& order);
double tour_cost(const CostMatrix& costs, const std::vector<VertexId>& order);

// Kruskal with lexicographic (cost, i, j) tie-breaking.
SpanningTree minimum_spanning_tree(const MetricInstance& instance);

// Preorder shortcut of the doubled MST rooted at the source; 2-approximation.
TspTour double_tree_tour(const MetricInstance& instance);

// MST + exact minimum-weight odd-vertex matching + Euler tour + first-visit
// shortcut; 1.5-approximation. Throws SizeError when the odd-vertex count
// exceeds the matching DP limit.
TspTour christofides_tour(const MetricInstance& instance,
                          int matching_dp_limit = kMatchingDpLimit);

// Exact optimal Hamiltonian cycle on an arbitrary symmetric cost table
// (callers typically pass metric closures). Throws SizeError above limit.
TspTour held_karp_optimal(const CostMatrix& costs, VertexId start,
                          int limit = kHeldKarpLimit);

// All-pairs shortest paths; entries start from `init` (infinity = unusable)
// and are relaxed until a full pass makes no update, so the result satisfies
// the triangle inequality exactly as floating-point comparison sees it.
CostMatrix shortest_path_fixpoint(CostMatrix init);

// Pairwise shortest-path distances over the unblocked subgraph.
CostMatrix metric_closure(const Scenario& scenario);

}  // namespace cctp
