#pragma once

// cctp-rng-v1: all randomness flows from one 64-bit seed through
// mt19937_64 with the fixed output transforms below. std distributions
// are avoided on purpose; their output is not specified across
// implementations, these transforms are.

#include <cstdint>
#include <random>

namespace cctp {

class SeededRng {
public:
    explicit SeededRng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next_u64() { return gen_(); }

    // Uniform in [0, 1), 53 bits of precision.
    double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // Uniform in [0, bound), unbiased via rejection.
    std::uint64_t next_below(std::uint64_t bound) {
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        std::uint64_t x;
        do {
            x = next_u64();
        } while (x >= limit);
        return x % bound;
    }

private:
    std::mt19937_64 gen_;
};

}  // namespace cctp
