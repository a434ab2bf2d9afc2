#include "cctp/environment.hpp"

#include <string>

namespace cctp {

std::vector<VertexId> TravellerView::visited_list() const {
    std::vector<VertexId> out;
    out.reserve(visited_count_);
    for (VertexId v = 0; v < n_; ++v)
        if (visited_[v]) out.push_back(v);
    return out;
}

bool TravellerView::information_sound() const {
    for (VertexId i = 0; i < n_; ++i) {
        for (VertexId j = i + 1; j < n_; ++j) {
            const bool incident = visited_[i] || visited_[j];
            const bool revealed = edge_state(i, j) != EdgeState::unknown;
            if (incident != revealed) return false;
        }
    }
    return true;
}

OnlineEnvironment::OnlineEnvironment(const Scenario& scenario) : scenario_(&scenario) {
    const int n = scenario.n();
    view_.n_ = n;
    view_.position_ = scenario.source();
    view_.visited_.assign(n, 0);
    view_.state_.assign(static_cast<std::size_t>(n) * n, EdgeState::unknown);
    view_.visited_[scenario.source()] = 1;
    view_.visited_count_ = 1;
    view_.walk_.vertices.push_back(scenario.source());
    reveal_at(scenario.source());
}

double OnlineEnvironment::move(VertexId to) {
    const VertexId from = view_.position_;
    const int n = view_.n_;
    if (to < 0 || to >= n || to == from)
        throw ContractViolation("move target " + std::to_string(to) + " is invalid");
    switch (view_.edge_state(from, to)) {
        case EdgeState::unknown:
            throw ContractViolation("unrevealed-edge traversal {" + std::to_string(from) +
                                    "," + std::to_string(to) + "}");
        case EdgeState::blocked:
            throw ContractViolation("blocked-edge traversal {" + std::to_string(from) + "," +
                                    std::to_string(to) + "}");
        case EdgeState::unblocked:
            break;
    }

    const double cost = scenario_->instance().cost(from, to);
    view_.position_ = to;
    if (!view_.visited_[to]) {
        view_.visited_[to] = 1;
        ++view_.visited_count_;
    }
    view_.walk_.vertices.push_back(to);
    view_.walk_.cost += cost;
    reveal_at(to);
    return cost;
}

void OnlineEnvironment::reveal_at(VertexId v) {
    const int n = view_.n_;
    for (VertexId w = 0; w < n; ++w) {
        if (w == v) continue;
        const std::size_t ij = static_cast<std::size_t>(v) * n + w;
        if (view_.state_[ij] != EdgeState::unknown) continue;
        const EdgeState s =
            scenario_->is_blocked(v, w) ? EdgeState::blocked : EdgeState::unblocked;
        view_.state_[ij] = s;
        view_.state_[static_cast<std::size_t>(w) * n + v] = s;
        if (s == EdgeState::blocked)
            ++view_.revealed_blocked_;
        else
            ++view_.revealed_unblocked_;
    }
}

}  // namespace cctp
