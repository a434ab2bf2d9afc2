#pragma once

// The online tour pipeline: follow an approximate TSP tour while skipping
// vertices whose incoming edge turns out blocked (shortcut), compress the
// leftover vertices into a small multigraph carrying known-feasible
// shortest-path edges, then finish with nearest-neighbor exploration.

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cctp/environment.hpp"
#include "cctp/tsp.hpp"

namespace cctp {

// One record per physical move; phase is shortcut|compress|explore|return,
// edge_kind is direct|path-expansion.
struct TraceRecord {
    std::string phase;
    VertexId from = 0;
    VertexId to = 0;
    std::string edge_kind;
    double cost = 0.0;
    double cumulative_cost = 0.0;
};

using Trace = std::vector<TraceRecord>;

using AlgoTsp = std::function<TspTour(const MetricInstance&)>;

// Adapter returning a fixed tour verbatim; rejects non-permutations and
// tours that do not start at the instance source.
AlgoTsp inject_tour(std::vector<VertexId> order);

// christofides_tour with automatic double-tree fallback when the odd-vertex
// matching would exceed its DP limit. Sets *used_fallback accordingly.
AlgoTsp christofides_with_fallback(bool* used_fallback = nullptr,
                                   int matching_dp_limit = kMatchingDpLimit);

// Tie-breaking for nearest-neighbor exploration: among equally cheap
// targets pick the one with the smallest rank (vertex index by default).
struct TiePolicy {
    std::string name = "default";
    std::vector<std::int32_t> rank;  // empty: rank(v) = v

    std::int64_t rank_of(VertexId v) const {
        return rank.empty() ? v : rank[static_cast<std::size_t>(v)];
    }
};

struct ShortCutResult {
    std::vector<VertexId> u_s;  // unvisited vertices plus the source, ascending
    Walk route;                 // the physical walk, including any retrace
    double cost = 0.0;
    int revealed_blocked = 0;   // blocked edges known by the end of the phase
};

struct PathEdge {
    double cost = 0.0;
    std::vector<VertexId> expansion;  // full vertex sequence, endpoints included
};

// The multigraph over U_s: direct edges (still-unknown state, queried
// against the view at use time) plus known-feasible shortest-path edges.
struct CompressedGraph {
    std::vector<VertexId> vertices;  // ascending, contains the source
    std::map<EdgeKey, PathEdge> path_edges;

    const PathEdge* path_edge(VertexId x, VertexId y) const {
        const auto it = path_edges.find(edge_key(x, y));
        return it == path_edges.end() ? nullptr : &it->second;
    }
};

struct ExploreResult {
    Walk gprime_walk;          // walk in compressed-graph vertices
    double visit_cost = 0.0;   // until the last vertex is reached
    double return_cost = 0.0;  // closing leg back to the source
};

struct RunResult {
    Walk walk;  // full walk in the original graph
    double total_cost = 0.0;
    double shortcut_cost = 0.0;
    double explore_cost = 0.0;
    double return_cost = 0.0;
    ShortCutResult shortcut;
    CompressedGraph compressed;
    ExploreResult explore;
    TspTour tour;
};

// Follows the tour order, skipping unreachable successors; retraces the
// walk back to the source if the closing edge is blocked. The environment
// must be freshly initialized at the source.
ShortCutResult shortcut(OnlineEnvironment& env, const TspTour& tour, Trace* trace = nullptr);

// Builds the compressed multigraph from the post-shortcut view. Path edges
// are shortest paths through edges that are known unblocked and have at
// least one endpoint outside U_s. Incurs no travel cost.
CompressedGraph compress(const OnlineEnvironment& env, const std::vector<VertexId>& u_s);

// Nearest-neighbor exploration of the compressed graph: repeatedly move to
// the cheapest-to-reach unvisited vertex over currently known-unblocked
// edges, then return to the source by the cheapest known route. Vertices
// that are temporarily unreachable are skipped until revelations connect
// them.
ExploreResult nn_explore(OnlineEnvironment& env, const CompressedGraph& gprime,
                         const TiePolicy& tie = {}, Trace* trace = nullptr);

// The full pipeline; the returned walk starts and ends at the source and
// covers every vertex.
RunResult compress_and_explore(OnlineEnvironment& env, const AlgoTsp& algo_tsp,
                               const TiePolicy& tie = {}, Trace* trace = nullptr);

struct BaselineResult {
    Walk walk;
    double total_cost = 0.0;
    int rounds = 0;
};

// Simplified repeated-shortcut baseline: each round recomputes a tour of
// the remaining vertices on the closure of not-yet-known-blocked distances,
// walks it in alternating direction attempting direct edges, and falls back
// to the nearest reachable unvisited vertex when a whole pass is stuck.
BaselineResult repeated_shortcut_baseline(OnlineEnvironment& env, const AlgoTsp& algo_tsp,
                                          Trace* trace = nullptr);

}  // namespace cctp
