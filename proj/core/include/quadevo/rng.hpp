#pragma once

#include <cstdint>
#include <random>

namespace quadevo {

/// Real interval [lo, hi] used for sampling ranges.
struct Interval {
    double lo = 0.0;
    double hi = 0.0;

    bool degenerate() const { return !(lo < hi); }
};

/// Seedable random source. All randomness in the library flows through this
/// class, so a 64-bit seed fully determines a run.
///
/// The raw engine is std::mt19937_64 (its output sequence is pinned by the
/// standard); the derived draws below avoid std::*_distribution so results
/// do not depend on the standard library implementation either.
class Rng {
public:
    explicit Rng(std::uint64_t seed = 0) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform double in [0, 1).
    double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Uniform double in [iv.lo, iv.hi).
    double uniform(Interval iv) { return iv.lo + uniform01() * (iv.hi - iv.lo); }

    /// Uniform index in [0, n); n must be positive. Lemire bounded draw.
    std::size_t index(std::size_t n) {
        using u128 = unsigned __int128;
        const std::uint64_t range = n;
        std::uint64_t x = next_u64();
        u128 m = static_cast<u128>(x) * range;
        auto low = static_cast<std::uint64_t>(m);
        if (low < range) {
            const std::uint64_t threshold = -range % range;
            while (low < threshold) {
                x = next_u64();
                m = static_cast<u128>(x) * range;
                low = static_cast<std::uint64_t>(m);
            }
        }
        return static_cast<std::size_t>(m >> 64);
    }

    /// Fair coin.
    bool coin() { return (next_u64() & 1u) != 0; }

    /// True with probability p.
    bool bernoulli(double p) { return uniform01() < p; }

private:
    std::mt19937_64 engine_;
};

} // namespace quadevo
