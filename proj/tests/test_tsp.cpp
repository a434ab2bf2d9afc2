// TSP machinery against brute-force oracles.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "cctp/generate.hpp"
#include "cctp/lowerbound.hpp"
#include "cctp/tsp.hpp"

#include "oracles.hpp"

using namespace cctp;

namespace {

MetricInstance unit_triangle() {
    CostMatrix costs(3);
    costs.set(0, 1, 1.0);
    costs.set(0, 2, 1.0);
    costs.set(1, 2, 1.0);
    return MetricInstance(std::move(costs), 0);
}

MetricInstance collinear(int n) {
    std::vector<Point> points;
    for (int i = 0; i < n; ++i) points.push_back({static_cast<double>(i), 0.0});
    return MetricInstance::from_points(std::move(points), 0);
}

MetricInstance unit_square() {
    return MetricInstance::from_points({{0, 0}, {1, 0}, {1, 1}, {0, 1}}, 0);
}

bool is_tour(const MetricInstance& inst, const TspTour& tour) {
    if (static_cast<int>(tour.order.size()) != inst.n()) return false;
    if (tour.order.front() != inst.source()) return false;
    std::vector<char> seen(inst.n(), 0);
    for (VertexId v : tour.order) {
        if (v < 0 || v >= inst.n() || seen[v]) return false;
        seen[v] = 1;
    }
    return tour.cost == tour_cost(inst, tour.order);
}

}  // namespace

TEST_CASE("minimum spanning tree") {
    SUBCASE("unit triangle uses the lexicographically first pair of edges") {
        const SpanningTree tree = minimum_spanning_tree(unit_triangle());
        CHECK(tree.weight == 2.0);
        REQUIRE(tree.edges.size() == 2);
        CHECK(tree.edges[0] == EdgeKey{0, 1});
        CHECK(tree.edges[1] == EdgeKey{0, 2});
    }
    SUBCASE("augmented chain has an all-unit spanning tree") {
        // 16 vertices, so any spanning tree of unit edges weighs 15.
        const ChainInstance chain = generate_hurkens(3);
        const SpanningTree tree = minimum_spanning_tree(chain.scenario.instance());
        CHECK(tree.weight == 15.0);
        UnionFind uf(16);
        for (const EdgeKey& e : tree.edges) uf.unite(e.a, e.b);
        CHECK(uf.components == 1);
    }
    SUBCASE("matches Pruefer enumeration on random instances") {
        for (std::uint64_t seed = 1; seed <= 12; ++seed) {
            const int n = 4 + static_cast<int>(seed % 4);  // 4..7
            const Scenario s = generate_random_scenario(n, 0, seed);
            const SpanningTree tree = minimum_spanning_tree(s.instance());
            CHECK(tree.weight ==
                  doctest::Approx(oracle::prufer_min_spanning_weight(s.instance()))
                      .epsilon(1e-12));
        }
    }
}

TEST_CASE("double tree tour") {
    CHECK(double_tree_tour(unit_triangle()).cost == 3.0);

    // Path MST from an endpoint: out along the line and straight back.
    const MetricInstance line = collinear(4);
    const TspTour out_and_back = double_tree_tour(line);
    CHECK(out_and_back.cost == 6.0);
    CHECK(out_and_back.order == std::vector<VertexId>{0, 1, 2, 3});

    SUBCASE("within twice the exact optimum") {
        for (std::uint64_t seed = 1; seed <= 15; ++seed) {
            const int n = 5 + static_cast<int>(seed % 6);  // 5..10
            const Scenario s = generate_random_scenario(n, 0, seed);
            const TspTour tour = double_tree_tour(s.instance());
            const double opt = held_karp_optimal(s.instance().costs(), 0).cost;
            CHECK(is_tour(s.instance(), tour));
            CHECK(tour.cost >= opt * (1 - 1e-9));
            CHECK(tour.cost <= 2 * opt * (1 + 1e-9));
        }
    }
}

TEST_CASE("christofides tour") {
    CHECK(christofides_tour(unit_triangle()).cost == 3.0);

    // Unit square: every tour along the sides costs 4, which is optimal.
    CHECK(christofides_tour(unit_square()).cost == doctest::Approx(4.0).epsilon(1e-12));

    SUBCASE("within 1.5x the exact optimum") {
        for (std::uint64_t seed = 1; seed <= 15; ++seed) {
            const int n = 5 + static_cast<int>(seed % 6);  // 5..10
            const Scenario s = generate_random_scenario(n, 0, seed);
            const TspTour tour = christofides_tour(s.instance());
            const double opt = held_karp_optimal(s.instance().costs(), 0).cost;
            CHECK(is_tour(s.instance(), tour));
            CHECK(tour.cost >= opt * (1 - 1e-9));
            CHECK(tour.cost <= 1.5 * opt * (1 + 1e-9));
        }
    }
    SUBCASE("matching size limit") {
        // The square MST is a path: two odd vertices; a limit of zero trips.
        CHECK_THROWS_AS(christofides_tour(unit_square(), 0), SizeError);
    }
}

TEST_CASE("held-karp exact oracle") {
    CHECK(held_karp_optimal(unit_triangle().costs(), 0).cost == 3.0);

    SUBCASE("matches factorial enumeration") {
        for (std::uint64_t seed = 1; seed <= 10; ++seed) {
            const Scenario s = generate_random_scenario(8, 0, seed * 31);
            const TspTour tour = held_karp_optimal(s.instance().costs(), 0);
            CHECK(is_tour(s.instance(), tour));
            CHECK(tour.cost ==
                  doctest::Approx(oracle::brute_force_tour_cost(s.instance().costs(), 0))
                      .epsilon(1e-12));
        }
    }
    SUBCASE("refuses oversized inputs") {
        CostMatrix big(kHeldKarpLimit + 1, 1.0);
        CHECK_THROWS_AS(held_karp_optimal(big, 0), SizeError);
    }
    SUBCASE("augmented chain optimum at p=3") {
        const ChainInstance chain = generate_hurkens(3);
        const TspTour opt = held_karp_optimal(metric_closure(chain.scenario), 0);
        CHECK(opt.cost == 23.0);
    }
}

TEST_CASE("metric closure") {
    SUBCASE("no blocked edges keeps metric costs") {
        const Scenario s = generate_random_scenario(8, 0, 4);
        const CostMatrix closure = metric_closure(s);
        for (VertexId i = 0; i < 8; ++i)
            for (VertexId j = i + 1; j < 8; ++j) {
                CHECK(closure.at(i, j) <= s.instance().cost(i, j));
                CHECK(closure.at(i, j) ==
                      doctest::Approx(s.instance().cost(i, j)).epsilon(1e-9));
            }
    }
    SUBCASE("augmented chain distances") {
        const ChainInstance chain = generate_hurkens(3);
        const CostMatrix closure = metric_closure(chain.scenario);
        const auto& lm = chain.landmarks;
        CHECK(closure.at(lm.l, lm.r) == 7.0);  // along the lower row
        CHECK(closure.at(lm.u, lm.r) == 8.0);  // one hop to l, then across
        CHECK(closure.at(lm.u, 8) == 2.0);     // u -> l -> first upper vertex
    }
    SUBCASE("single blocked edge in a unit clique detours through a third vertex") {
        CostMatrix costs(5, 1.0);
        for (int i = 0; i < 5; ++i) costs.set(i, i, 0.0);
        const Scenario s(MetricInstance(std::move(costs), 0), {edge_key(0, 1)});
        CHECK(metric_closure(s).at(0, 1) == 2.0);
    }
    SUBCASE("closure is exactly metric") {
        for (std::uint64_t seed : {std::uint64_t{2}, std::uint64_t{17}, std::uint64_t{28}}) {
            const Scenario s = oracle::suite_scenario(seed);
            CHECK(validate_metric(metric_closure(s), 0.0).ok());
        }
        CHECK(validate_metric(metric_closure(generate_hurkens(3).scenario), 0.0).ok());
    }
}
