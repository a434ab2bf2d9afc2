#include "cctp/lowerbound.hpp"

#include <string>

namespace cctp {

namespace {

void check_p(int p, int max_p = kMaxChainP) {
    if (p < 1 || p > max_p)
        throw ValidationError("chain parameter p=" + std::to_string(p) + " out of range [1, " +
                              std::to_string(max_p) + "]");
}

// Triangle t joins lower vertices t, t+1 and upper vertex upper_base + t.
std::vector<EdgeKey> chain_edges(int p) {
    const int lower = 1 << p;
    std::vector<EdgeKey> edges;
    for (VertexId t = 0; t < lower - 1; ++t) {
        const VertexId up = lower + t;
        edges.push_back(edge_key(t, t + 1));
        edges.push_back(edge_key(t, up));
        edges.push_back(edge_key(up, t + 1));
    }
    return edges;
}

ChainInstance build(int p, bool with_u) {
    const int lower = 1 << p;
    const int n = with_u ? 2 * lower : 2 * lower - 1;
    const VertexId u = with_u ? n - 1 : -1;

    CostMatrix costs(n, 2.0);
    for (VertexId i = 0; i < n; ++i) costs.set(i, i, 0.0);
    std::vector<std::uint8_t> unblocked(static_cast<std::size_t>(n) * n, 0);
    auto mark = [&](EdgeKey e) {
        costs.set(e.a, e.b, 1.0);
        unblocked[static_cast<std::size_t>(e.a) * n + e.b] = 1;
    };
    for (const EdgeKey& e : chain_edges(p)) mark(e);
    if (with_u) {
        mark(edge_key(u, 0));
        // Every other decoy edge costs 1 but stays blocked.
        for (VertexId v = 1; v < u; ++v) costs.set(u, v, 1.0);
    }

    std::vector<EdgeKey> blocked;
    for (VertexId i = 0; i < n; ++i)
        for (VertexId j = i + 1; j < n; ++j)
            if (!unblocked[static_cast<std::size_t>(i) * n + j]) blocked.push_back({i, j});
    const int k = static_cast<int>(blocked.size());

    ChainLandmarks lm;
    lm.l = 0;
    lm.r = lower - 1;
    lm.m = lower + lower / 2 - 1;
    lm.u = u;
    if (with_u) {
        // The cycle formed by the zigzag spanning path plus the u--r chord,
        // walked from the source toward u first.
        lm.injected_tour.push_back(0);
        lm.injected_tour.push_back(u);
        for (VertexId i = lower - 1; i >= 1; --i) {
            lm.injected_tour.push_back(i);
            lm.injected_tour.push_back(lower + i - 1);
        }
    }

    return ChainInstance{Scenario(MetricInstance(std::move(costs), 0), std::move(blocked), k),
                         std::move(lm), p};
}

}  // namespace

ChainInstance generate_hurkens(int p) {
    check_p(p);
    return build(p, true);
}

ChainInstance generate_hurkens_chain(int p) {
    check_p(p);
    return build(p, false);
}

std::vector<VertexId> lemma_preference_order(int p) {
    check_p(p);
    const int upper_base = 1 << p;
    std::vector<VertexId> order;
    // Left half, right half, then the central upper vertex.
    auto emit = [&](auto&& self, int depth, int lo, int up) -> void {
        if (depth == 1) {
            order.push_back(lo);
            order.push_back(lo + 1);
            order.push_back(upper_base + up);
            return;
        }
        const int half = 1 << (depth - 1);
        self(self, depth - 1, lo, up);
        self(self, depth - 1, lo + half, up + half);
        order.push_back(upper_base + up + half - 1);
    };
    emit(emit, p, 0, 0);
    return order;
}

TiePolicy lemma_tie_policy(int p, int n) {
    const std::vector<VertexId> order = lemma_preference_order(p);
    TiePolicy policy;
    policy.name = "lemma";
    policy.rank.assign(n, 0);
    for (std::size_t i = 0; i < order.size(); ++i) policy.rank[order[i]] = static_cast<int>(i);
    for (int v = static_cast<int>(order.size()); v < n; ++v)
        policy.rank[v] = static_cast<int>(order.size()) + v;
    return policy;
}

std::int64_t optimal_cost_formula(int p) {
    check_p(p, 62);
    return 2 + 3 * ((std::int64_t{1} << p) - 1);
}

std::int64_t lemma_route_cost_formula(int p) {
    check_p(p, 58);
    return (p + 4) * (std::int64_t{1} << (p - 1)) - 2;
}

std::int64_t lemma_visit_cost_formula(int p) {
    check_p(p, 58);
    return (p + 3) * (std::int64_t{1} << (p - 1)) - 2;
}

std::int64_t lemma_return_cost_formula(int p) {
    check_p(p, 62);
    return std::int64_t{1} << (p - 1);
}

std::int64_t cnn_cost_formula(int p) {
    check_p(p, 58);
    return (p + 4) * (std::int64_t{1} << (p - 1));
}

RatioBound ratio_lower_bound(int p) {
    RatioBound ratio{cnn_cost_formula(p), optimal_cost_formula(p)};
    // ratio >= (p+4)/6, compared exactly in integers
    if (ratio.num * 6 < (p + 4) * ratio.den)
        throw InconsistencyError("chain ratio fell below its floor");
    return ratio;
}

}  // namespace cctp
