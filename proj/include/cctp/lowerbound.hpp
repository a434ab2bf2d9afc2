#pragma once

// Adversarial triangle-chain family (Hurkens construction). A chain of
// 2^p - 1 unit triangles is padded to a complete metric graph with blocked
// filler edges; the augmented variant adds a decoy vertex u whose only
// usable edge leads back to the source. Nearest-neighbor exploration pays
// (p+4)*2^(p-1) - 2 on the bare chain while the optimum stays linear, which
// pins the logarithmic competitive-ratio floor of the pipeline.

#include <cstdint>
#include <vector>

#include "cctp/algorithm.hpp"
#include "cctp/scenario.hpp"

namespace cctp {

inline constexpr int kMaxChainP = 6;

// Canonical labels: lower row 0 .. 2^p-1 left to right, then upper row,
// then u last (augmented variant only).
struct ChainLandmarks {
    VertexId l = 0;  // leftmost lower vertex, the source
    VertexId r = 0;  // rightmost lower vertex
    VertexId m = 0;  // central upper vertex
    VertexId u = -1; // decoy vertex, -1 on the bare chain
    std::vector<VertexId> injected_tour;  // empty on the bare chain
};

struct ChainInstance {
    Scenario scenario;
    ChainLandmarks landmarks;
    int p = 0;
};

// The augmented chain G_p^+ with the decoy vertex; source is l.
ChainInstance generate_hurkens(int p);

// The bare chain embedded as a complete metric scenario (fillers cost 2,
// blocked); used to exercise the exploration phase in isolation.
ChainInstance generate_hurkens_chain(int p);

// Visit order realizing the inductive nearest-neighbor route: left half,
// right half, central upper vertex last.
std::vector<VertexId> lemma_preference_order(int p);

// Tie policy ranking vertices by the visit order above. n is the vertex
// count of the scenario the policy will run on (chain or augmented).
TiePolicy lemma_tie_policy(int p, int n);

std::int64_t optimal_cost_formula(int p);      // 2 + 3*(2^p - 1)
std::int64_t lemma_route_cost_formula(int p);  // (p+4)*2^(p-1) - 2
std::int64_t lemma_visit_cost_formula(int p);  // (p+3)*2^(p-1) - 2
std::int64_t lemma_return_cost_formula(int p); // 2^(p-1)
std::int64_t cnn_cost_formula(int p);          // (p+4)*2^(p-1)

struct RatioBound {
    std::int64_t num = 0;
    std::int64_t den = 1;
    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
};

// Exact ratio cnn_cost_formula(p) / optimal_cost_formula(p); verifies it is
// at least (p+4)/6.
RatioBound ratio_lower_bound(int p);

}  // namespace cctp
