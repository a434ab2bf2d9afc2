#pragma once

// Random scenario generation for the experiment harness.

#include <cstdint>

#include "cctp/scenario.hpp"

namespace cctp {

enum class Geometry { euclidean, random_metric_closure };

// Deterministic in seed. Euclidean mode places n points uniformly in the
// unit square; random-metric-closure mode samples pairwise weights in
// [0.5, 1.5) and tightens them to shortest-path distances. The blocked set
// is sampled uniformly among k-subsets that keep the unblocked subgraph
// connected (rejection sampling); throws GenerationError once the rejection
// budget is exhausted.
Scenario generate_random_scenario(int n, int k, std::uint64_t seed,
                                  Geometry geometry = Geometry::euclidean);

}  // namespace cctp
