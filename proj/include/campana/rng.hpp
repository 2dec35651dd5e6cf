#pragma once

#include "campana/rational.hpp"

#include <cstdint>

namespace campana {

/// splitmix64: tiny, deterministic across platforms. Used wherever a
/// "general" point is needed, so that genericity claims are reproducible
/// from a recorded seed.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    /// Uniform in [lo, hi], both int64.
    std::int64_t next_in(std::int64_t lo, std::int64_t hi) {
        std::uint64_t span = std::uint64_t(hi - lo) + 1;
        return lo + std::int64_t(next() % span);
    }

    /// Nonzero rational with small numerator/denominator.
    Rat next_rational(std::int64_t max_abs = 50) {
        Int num = 0;
        while (num == 0) num = next_in(-max_abs, max_abs);
        Int den = next_in(1, max_abs);
        return Rat(num, den);
    }

private:
    std::uint64_t state_;
};

}  // namespace campana
