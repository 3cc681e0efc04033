#pragma once

#include <cstdint>
#include <random>

#include "knroot/errors.hpp"

namespace knroot {

/// Deterministic RNG: all derived values are produced from raw 64-bit draws
/// by fixed arithmetic, so a seed pins the byte-exact output of every suite.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next() { return eng_(); }

    /// Uniform double in [a, b).
    double uniform(double a, double b) {
        double u = static_cast<double>(next() >> 11) * 0x1.0p-53;
        return a + (b - a) * u;
    }

    /// Uniform index in [0, n).
    std::size_t index(std::size_t n) {
        if (n == 0) throw Error("rng: empty range");
        std::uint64_t lim = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t x;
        do {
            x = next();
        } while (x >= lim);
        return static_cast<std::size_t>(x % n);
    }

    /// Uniform integer in [a, b] inclusive.
    long long integer(long long a, long long b) {
        return a + static_cast<long long>(index(static_cast<std::size_t>(b - a + 1)));
    }

    /// Independent stream for per-sample seeding.
    static std::uint64_t split(std::uint64_t seed, std::uint64_t stream) {
        std::uint64_t z = seed + 0x9e3779b97f4a7c15ull * (stream + 1);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

private:
    std::mt19937_64 eng_;
};

}  // namespace knroot
