#include "cctp/graph.hpp"

#include <cmath>

namespace cctp {

MetricInstance::MetricInstance(CostMatrix costs, VertexId source,
                               std::optional<std::vector<Point>> points)
    : costs_(std::move(costs)), source_(source), points_(std::move(points)) {
    const int n = costs_.size();
    if (n < 1) throw ValidationError("instance needs at least one vertex");
    if (source_ < 0 || source_ >= n) throw ValidationError("source vertex out of range");
    if (points_ && static_cast<int>(points_->size()) != n)
        throw ValidationError("point count does not match vertex count");
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const double c = costs_.at(i, j);
            if (!(c >= 0.0)) throw ValidationError("edge costs must be non-negative");
            if (c != costs_.at(j, i)) throw ValidationError("cost table must be symmetric");
        }
    }
}

MetricInstance MetricInstance::from_points(std::vector<Point> points, VertexId source) {
    const int n = static_cast<int>(points.size());
    CostMatrix costs(n);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const double dx = points[i][0] - points[j][0];
            const double dy = points[i][1] - points[j][1];
            costs.set(i, j, std::sqrt(dx * dx + dy * dy));
        }
    }
    return MetricInstance(std::move(costs), source, std::move(points));
}

double walk_cost(const MetricInstance& instance, const std::vector<VertexId>& vertices) {
    double total = 0.0;
    for (std::size_t i = 1; i < vertices.size(); ++i)
        total += instance.cost(vertices[i - 1], vertices[i]);
    return total;
}

}  // namespace cctp
