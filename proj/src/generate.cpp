#include "cctp/generate.hpp"

#include <string>

#include "cctp/rng.hpp"
#include "cctp/tsp.hpp"

namespace cctp {

namespace {

constexpr int kMaxRejections = 1000;

MetricInstance random_instance(int n, SeededRng& rng, Geometry geometry) {
    if (geometry == Geometry::euclidean) {
        std::vector<Point> points(n);
        for (int i = 0; i < n; ++i) {
            points[i][0] = rng.next_unit();
            points[i][1] = rng.next_unit();
        }
        return MetricInstance::from_points(std::move(points), 0);
    }
    // Raw weights in [0.5, 1.5), tightened to their shortest-path closure.
    CostMatrix raw(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) raw.set(i, j, 0.5 + rng.next_unit());
    return MetricInstance(shortest_path_fixpoint(std::move(raw)), 0);
}

}  // namespace

Scenario generate_random_scenario(int n, int k, std::uint64_t seed, Geometry geometry) {
    if (n < 2) throw ValidationError("need n >= 2");
    if (k < 0) throw ValidationError("need k >= 0");

    SeededRng rng(seed);
    MetricInstance instance = random_instance(n, rng, geometry);

    const int m = n * (n - 1) / 2;
    std::vector<EdgeKey> all_edges;
    all_edges.reserve(m);
    for (VertexId i = 0; i < n; ++i)
        for (VertexId j = i + 1; j < n; ++j) all_edges.push_back({i, j});

    for (int attempt = 0; k <= m && attempt < kMaxRejections; ++attempt) {
        // Partial Fisher-Yates: the first k entries are a uniform k-subset.
        std::vector<EdgeKey> pool = all_edges;
        for (int t = 0; t < k; ++t)
            std::swap(pool[t], pool[t + rng.next_below(static_cast<std::uint64_t>(m - t))]);
        std::vector<EdgeKey> blocked(pool.begin(), pool.begin() + k);

        UnionFind uf(n);
        std::vector<std::uint8_t> mask(static_cast<std::size_t>(n) * n, 0);
        for (const EdgeKey& e : blocked) {
            mask[static_cast<std::size_t>(e.a) * n + e.b] = 1;
        }
        for (VertexId i = 0; i < n; ++i)
            for (VertexId j = i + 1; j < n; ++j)
                if (!mask[static_cast<std::size_t>(i) * n + j]) uf.unite(i, j);
        if (uf.components == 1)
            return Scenario(std::move(instance), std::move(blocked), k);
    }
    throw GenerationError("cannot keep graph connected with k=" + std::to_string(k) +
                          " blocked edges on n=" + std::to_string(n) + " vertices");
}

}  // namespace cctp
