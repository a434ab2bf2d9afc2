#pragma once

// Core data model: vertices, undirected edges, symmetric cost tables,
// complete metric instances and walks.

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <vector>

#include "cctp/errors.hpp"

namespace cctp {

using VertexId = std::int32_t;

// Canonical unordered vertex pair, always stored with a < b.
struct EdgeKey {
    VertexId a = 0;
    VertexId b = 0;

    friend auto operator<=>(const EdgeKey&, const EdgeKey&) = default;
};

inline EdgeKey edge_key(VertexId x, VertexId y) {
    if (x == y) throw ValidationError("edge endpoints must differ");
    return x < y ? EdgeKey{x, y} : EdgeKey{y, x};
}

// Dense symmetric n-by-n cost table. Diagonal entries are unused and kept 0.
class CostMatrix {
public:
    CostMatrix() = default;
    explicit CostMatrix(int n, double fill = 0.0) : n_(n), w_(static_cast<std::size_t>(n) * n, fill) {
        for (int i = 0; i < n; ++i) w_[idx(i, i)] = 0.0;
    }

    int size() const { return n_; }

    double at(VertexId i, VertexId j) const { return w_[idx(i, j)]; }

    void set(VertexId i, VertexId j, double v) {
        w_[idx(i, j)] = v;
        w_[idx(j, i)] = v;
    }

private:
    std::size_t idx(VertexId i, VertexId j) const {
        return static_cast<std::size_t>(i) * n_ + j;
    }

    int n_ = 0;
    std::vector<double> w_;
};

using Point = std::array<double, 2>;

// Complete weighted graph with a source vertex. Costs are public knowledge;
// only edge blockage (held by Scenario) is hidden from online algorithms.
class MetricInstance {
public:
    MetricInstance(CostMatrix costs, VertexId source,
                   std::optional<std::vector<Point>> points = std::nullopt);

    static MetricInstance from_points(std::vector<Point> points, VertexId source);

    int n() const { return costs_.size(); }
    VertexId source() const { return source_; }
    double cost(VertexId i, VertexId j) const { return costs_.at(i, j); }
    const CostMatrix& costs() const { return costs_; }
    const std::optional<std::vector<Point>>& points() const { return points_; }

private:
    CostMatrix costs_;
    VertexId source_;
    std::optional<std::vector<Point>> points_;
};

// A vertex sequence in the original graph plus its total traversal cost.
struct Walk {
    std::vector<VertexId> vertices;
    double cost = 0.0;
};

// Sum of consecutive-pair costs, accumulated left to right.
double walk_cost(const MetricInstance& instance, const std::vector<VertexId>& vertices);

struct UnionFind {
    explicit UnionFind(int n) : parent(n), size(n, 1), components(n) {
        for (int i = 0; i < n; ++i) parent[i] = i;
    }

    int find(int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }

    bool unite(int x, int y) {
        x = find(x);
        y = find(y);
        if (x == y) return false;
        if (size[x] < size[y]) std::swap(x, y);
        parent[y] = x;
        size[x] += size[y];
        --components;
        return true;
    }

    std::vector<int> parent;
    std::vector<int> size;
    int components;
};

}  // namespace cctp
