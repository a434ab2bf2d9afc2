#pragma once

// A scenario pairs a metric instance with the hidden blocked-edge set.
// Scenarios are immutable once constructed and safe to share across runs.

#include <optional>
#include <vector>

#include "cctp/graph.hpp"

namespace cctp {

class Scenario {
public:
    Scenario(MetricInstance instance, std::vector<EdgeKey> blocked,
             std::optional<int> k_bound = std::nullopt);

    const MetricInstance& instance() const { return instance_; }
    int n() const { return instance_.n(); }
    VertexId source() const { return instance_.source(); }

    const std::vector<EdgeKey>& blocked() const { return blocked_; }
    int blocked_count() const { return static_cast<int>(blocked_.size()); }
    std::optional<int> k_bound() const { return k_bound_; }

    bool is_blocked(VertexId i, VertexId j) const {
        return blocked_mask_[static_cast<std::size_t>(i) * instance_.n() + j] != 0;
    }

private:
    MetricInstance instance_;
    std::vector<EdgeKey> blocked_;  // sorted, deduplicated
    std::optional<int> k_bound_;
    std::vector<std::uint8_t> blocked_mask_;
};

struct TriangleViolation {
    VertexId i, j, k;   // cost(i,k) > cost(i,j) + cost(j,k)
    double direct;      // cost(i,k)
    double via;         // cost(i,j) + cost(j,k)
};

struct MetricValidationReport {
    std::vector<TriangleViolation> violations;
    bool ok() const { return violations.empty(); }
};

inline constexpr double kMetricEps = 1e-9;

// Reports every triangle-inequality violation exceeding the relative
// tolerance. Empty report iff the cost table is metric.
MetricValidationReport validate_metric(const MetricInstance& instance,
                                       double eps_rel = kMetricEps);
MetricValidationReport validate_metric(const CostMatrix& costs, double eps_rel = kMetricEps);

}  // namespace cctp
