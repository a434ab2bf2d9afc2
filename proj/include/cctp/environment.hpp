#pragma once

// Online-revelation environment. The environment owns the ground truth;
// algorithms receive only the TravellerView and may mutate the world
// exclusively through move(). Arriving at a vertex eagerly reveals the
// state of every incident edge.

#include <vector>

#include "cctp/scenario.hpp"

namespace cctp {

enum class EdgeState : std::uint8_t { unknown, unblocked, blocked };

class OnlineEnvironment;

class TravellerView {
public:
    int n() const { return n_; }
    VertexId position() const { return position_; }

    bool visited(VertexId v) const { return visited_[v] != 0; }
    int visited_count() const { return visited_count_; }
    std::vector<VertexId> visited_list() const;

    EdgeState edge_state(VertexId i, VertexId j) const {
        return state_[static_cast<std::size_t>(i) * n_ + j];
    }

    const Walk& walk_log() const { return walk_; }
    double total_cost() const { return walk_.cost; }
    int revealed_blocked_count() const { return revealed_blocked_; }
    int revealed_unblocked_count() const { return revealed_unblocked_; }

    // True iff the revealed edge set is exactly the set of edges with at
    // least one visited endpoint.
    bool information_sound() const;

private:
    friend class OnlineEnvironment;

    int n_ = 0;
    VertexId position_ = 0;
    std::vector<std::uint8_t> visited_;
    int visited_count_ = 0;
    std::vector<EdgeState> state_;
    Walk walk_;
    int revealed_blocked_ = 0;
    int revealed_unblocked_ = 0;
};

class OnlineEnvironment {
public:
    // The scenario must outlive the environment.
    explicit OnlineEnvironment(const Scenario& scenario);

    const MetricInstance& instance() const { return scenario_->instance(); }
    VertexId source() const { return scenario_->source(); }
    const TravellerView& view() const { return view_; }

    // Traverses the edge {position, to}. The edge must already be revealed
    // unblocked; anything else is a contract violation, not a discovery.
    // Returns the edge cost.
    double move(VertexId to);

private:
    void reveal_at(VertexId v);

    const Scenario* scenario_;
    TravellerView view_;
};

}  // namespace cctp
