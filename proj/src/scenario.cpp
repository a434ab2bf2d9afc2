#include "cctp/scenario.hpp"

#include <algorithm>

namespace cctp {

Scenario::Scenario(MetricInstance instance, std::vector<EdgeKey> blocked,
                   std::optional<int> k_bound)
    : instance_(std::move(instance)), blocked_(std::move(blocked)), k_bound_(k_bound) {
    const int n = instance_.n();
    std::sort(blocked_.begin(), blocked_.end());
    blocked_.erase(std::unique(blocked_.begin(), blocked_.end()), blocked_.end());

    blocked_mask_.assign(static_cast<std::size_t>(n) * n, 0);
    for (const EdgeKey& e : blocked_) {
        if (e.a < 0 || e.b >= n || e.a >= e.b)
            throw ValidationError("blocked edge endpoints out of range");
        blocked_mask_[static_cast<std::size_t>(e.a) * n + e.b] = 1;
        blocked_mask_[static_cast<std::size_t>(e.b) * n + e.a] = 1;
    }

    if (k_bound_ && static_cast<int>(blocked_.size()) > *k_bound_)
        throw ValidationError("blocked set exceeds declared k bound");

    // The unblocked subgraph must stay connected.
    UnionFind uf(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (!is_blocked(i, j)) uf.unite(i, j);
    if (uf.components != 1)
        throw ValidationError("blocked edges disconnect the graph");
}

MetricValidationReport validate_metric(const CostMatrix& costs, double eps_rel) {
    MetricValidationReport report;
    const int n = costs.size();
    for (int i = 0; i < n; ++i) {
        for (int k = i + 1; k < n; ++k) {
            const double direct = costs.at(i, k);
            for (int j = 0; j < n; ++j) {
                if (j == i || j == k) continue;
                const double via = costs.at(i, j) + costs.at(j, k);
                const double tol = eps_rel * std::max({1.0, direct, via});
                if (direct - via > tol)
                    report.violations.push_back({i, j, k, direct, via});
            }
        }
    }
    return report;
}

MetricValidationReport validate_metric(const MetricInstance& instance, double eps_rel) {
    return validate_metric(instance.costs(), eps_rel);
}

}  // namespace cctp
