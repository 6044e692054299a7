#pragma once

#include <cmath>
#include <cstdint>

namespace complab {

using RngSeed = std::uint64_t;

/// SplitMix64 finalizer; the mixing core of the counter stream.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/**
 * Counter-based deterministic random stream.
 *
 * Every draw is a pure function of (seed, stream, counter), so any trial
 * index can be replayed independently: give each trial its own stream via
 * fork() and the draws are identical no matter which other streams ran.
 */
class CounterRng {
public:
    explicit CounterRng(RngSeed seed, std::uint64_t stream = 0) noexcept
        : seed_(seed), stream_(stream) {}

    /// Independent child stream; deterministic in (parent stream, tag).
    CounterRng fork(std::uint64_t tag) const noexcept {
        return CounterRng(seed_, mix64(stream_ ^ mix64(tag ^ 0xd6e8feb86659fd93ULL)));
    }

    std::uint64_t next_u64() noexcept {
        return mix64(mix64(seed_ ^ 0x6a09e667f3bcc909ULL) ^ mix64(stream_) ^ (counter_++));
    }

    /// Uniform draw in the open interval (0, 1).
    double uniform() noexcept {
        for (;;) {
            const double v = static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
            if (v > 0.0) return v;
        }
    }

    /// Standard normal via Box-Muller (two uniforms per draw, no cached spare).
    double normal() noexcept {
        const double u1 = uniform();
        const double u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925286766559 * u2);
    }

    /// Standard normal conditioned on |z| <= 1, by rejection.
    double truncated_normal_unit() noexcept {
        for (;;) {
            const double z = normal();
            if (z >= -1.0 && z <= 1.0) return z;
        }
    }

    /// Uniform integer in [0, n).
    std::uint64_t below(std::uint64_t n) noexcept {
        // Rejection-free modulo is fine here: n is tiny relative to 2^64.
        return next_u64() % n;
    }

private:
    RngSeed seed_;
    std::uint64_t stream_;
    std::uint64_t counter_ = 0;
};

}  // namespace complab
