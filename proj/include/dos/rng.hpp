#pragma once

#include <cstdint>
#include <vector>

namespace dos {

/// Counter-based pseudo-random generator. Each (seed, stream) pair yields an
/// independent reproducible sequence, so trial i of a Monte Carlo run can use
/// Rng(seed, i) and produce the same numbers whether trials run serially or
/// across threads.
class Rng {
public:
    explicit Rng(std::uint64_t seed, std::uint64_t stream = 0)
        : state_(mix(seed + 0x9e3779b97f4a7c15ull) ^ mix(mix(stream) + 0x1d8e4e27c47d124full)) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        return mix_out(z);
    }

    /// Uniform double in [0, 1).
    double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Uniform double in [a, b).
    double next_double(double a, double b) { return a + (b - a) * next_double(); }

    /// Uniform integer in [0, n), n > 0. Unbiased (Lemire rejection).
    std::uint64_t next_below(std::uint64_t n) {
        for (;;) {
            std::uint64_t x = next_u64();
            __uint128_t m = static_cast<__uint128_t>(x) * n;
            auto lo = static_cast<std::uint64_t>(m);
            if (lo >= n || lo >= static_cast<std::uint64_t>(-static_cast<std::int64_t>(n)) % n)
                return static_cast<std::uint64_t>(m >> 64);
        }
    }

    /// Standard exponential variate.
    double next_exponential();

    /// Fisher-Yates shuffle of v.
    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::size_t j = static_cast<std::size_t>(next_below(i));
            std::swap(v[i - 1], v[j]);
        }
    }

    /// A child generator for a named sub-stream (e.g. the re-drawn arrival
    /// times of a lifted policy), decorrelated from the parent.
    Rng fork(std::uint64_t substream) const {
        Rng r(0, 0);
        r.state_ = mix(state_ + 0x632be59bd9b4e019ull) ^ mix(substream + 0x9e3779b97f4a7c15ull);
        return r;
    }

private:
    static std::uint64_t mix(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    static std::uint64_t mix_out(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    std::uint64_t state_;
};

}  // namespace dos
