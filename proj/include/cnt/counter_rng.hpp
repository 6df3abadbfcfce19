// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>

namespace cnt {

/// Deterministic counter-based pseudo-random generator. Output at counter c
/// is a pure function of (seed, stream, c), so per-stream values do not
/// depend on evaluation order; streams are used for Monte Carlo path indices
/// and randomized-instance indices.
class CounterRng {
  public:
    CounterRng(std::uint64_t seed, std::uint64_t stream = 0)
        : key_(derive_key(seed, stream)) {}

    /// SplitMix64 finalizer.
    static std::uint64_t mix(std::uint64_t z) {
        z += 0x9E3779B97F4A7C15ULL;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    std::uint64_t at(std::uint64_t counter) const {
        return mix(key_ + counter * 0x9E3779B97F4A7C15ULL);
    }

    std::uint64_t next() { return at(counter_++); }

    /// Uniform in [0, n). n must be > 0.
    std::uint64_t below(std::uint64_t n) { return next() % n; }

    /// Uniform integer in [lo, hi], inclusive.
    int range(int lo, int hi) {
        return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    bool coin() { return (next() & 1) != 0; }

  private:
    static std::uint64_t derive_key(std::uint64_t seed, std::uint64_t stream) {
        return mix(mix(seed) ^ (0xA0761D6478BD642FULL * (stream + 1)));
    }

    std::uint64_t key_;
    std::uint64_t counter_ = 0;
};

}  // namespace cnt
