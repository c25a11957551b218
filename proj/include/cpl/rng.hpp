// Deterministic PRNG for randomized verification batches.
// splitmix64: identical streams on every platform for a given seed.
#pragma once

#include <cstdint>
#include <vector>

#include "cpl/scalar.hpp"

namespace cpl {

class Rng {
  public:
    explicit Rng(std::uint64_t seed = 0) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform integer in [lo, hi], inclusive.
    long range(long lo, long hi) {
        if (hi <= lo) return lo;
        return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    bool coin() { return next() & 1; }

    /// Rational with numerator in [-bound, bound] and denominator in [1, den_bound].
    Rational rational(long bound, long den_bound = 1) {
        return rat(range(-bound, bound), range(1, den_bound));
    }

    /// Nonzero variant of rational().
    Rational nonzero_rational(long bound, long den_bound = 1) {
        for (;;) {
            Rational r = rational(bound, den_bound);
            if (r != 0) return r;
        }
    }

  private:
    std::uint64_t state_;
};

}  // namespace cpl
