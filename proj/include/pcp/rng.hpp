#pragma once

#include <cstdint>
#include <random>

#include "pcp/errors.hpp"

namespace pcp {

// Seeded generator with a platform-independent integer range: draws raw
// 64-bit words (the engine sequence is pinned by the standard) and maps them
// by rejection sampling, so results never depend on library distribution
// internals.
class DeterministicRng {
public:
    explicit DeterministicRng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t word() { return gen_(); }

    long uniform(long lo, long hi) {
        if (hi < lo) throw StructuralError("empty range");
        std::uint64_t range = static_cast<std::uint64_t>(hi - lo) + 1;
        if (range == 0) return static_cast<long>(word()); // full 64-bit span
        std::uint64_t limit = UINT64_MAX - UINT64_MAX % range;
        std::uint64_t x;
        do {
            x = word();
        } while (x >= limit);
        return lo + static_cast<long>(x % range);
    }

private:
    std::mt19937_64 gen_;
};

} // namespace pcp
