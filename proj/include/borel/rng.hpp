#pragma once

#include <cstdint>

#include "borel/rational.hpp"

namespace borel {

/// Deterministic splitmix64 generator. Same seed => same stream on every
/// platform, which the reproducibility contract of the CLI relies on;
/// std::mt19937 distributions are not portable across standard libraries.
class Rng {
public:
    explicit Rng(uint64_t seed) : state_(seed) {}

    uint64_t next_u64() {
        uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    /// Uniform in [lo, hi] inclusive.
    long next_int(long lo, long hi) {
        uint64_t span = static_cast<uint64_t>(hi - lo) + 1;
        return lo + static_cast<long>(next_u64() % span);
    }

    /// Rational p/q with |p| <= height, 1 <= q <= height.
    Rational next_rational(long height = 10) {
        long p = next_int(-height, height);
        long q = next_int(1, height);
        return Rational(p, q);
    }

    Rational next_nonzero_rational(long height = 10) {
        for (;;) {
            Rational c = next_rational(height);
            if (!c.is_zero()) return c;
        }
    }

private:
    uint64_t state_;
};

} // namespace borel
