// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 semlink contributors

#pragma once

#include <cmath>
#include <cstdint>

namespace semlink {

/// SplitMix64: a small, fast, splittable 64-bit generator (Steele et al.).
/// Used both as the stream deriver and as the per-trial engine, so every
/// Monte Carlo trial owns an independent substream addressed by
/// (seed, stream tag, trial index). Results are therefore identical no
/// matter how trials are partitioned across threads.
class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Uniform double on the open interval (0, 1); never returns 0 or 1,
    /// which keeps log() finite in the inversion samplers below.
    double uniform01() {
        return (static_cast<double>(next() >> 11) + 0.5) * 0x1.0p-53;
    }

  private:
    std::uint64_t state_;
};

/// Derives the seed of an independent substream. Two finalizer rounds keep
/// substreams decorrelated even for adjacent (tag, index) pairs.
inline std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t tag, std::uint64_t index) {
    SplitMix64 mix(seed ^ (tag * 0xA24BAED4963EE407ULL));
    std::uint64_t a = mix.next();
    SplitMix64 mix2(a ^ (index * 0x9FB21C651E98DF25ULL));
    return mix2.next();
}

/// Unit-mean exponential draw by CDF inversion.
inline double unit_exponential(SplitMix64& rng) { return -std::log(rng.uniform01()); }

/// Number of transmission attempts until the first success (geometric on
/// {1, 2, ...}) for a per-attempt failure probability `fail_p`, capped at
/// `cap` attempts. Returns the attempt count; sets `overflowed` when the cap
/// was hit.
inline std::uint64_t geometric_attempts(SplitMix64& rng, double fail_p, std::uint64_t cap,
                                        bool& overflowed) {
    if (fail_p <= 0.0) return 1;
    const double u = rng.uniform01();
    // P(attempts > n) = fail_p^n  =>  attempts = 1 + floor(log(u)/log(fail_p))
    const double n = std::floor(std::log(u) / std::log(fail_p));
    std::uint64_t attempts = 1 + static_cast<std::uint64_t>(n);
    if (attempts > cap) {
        overflowed = true;
        return cap;
    }
    return attempts;
}

} // namespace semlink
