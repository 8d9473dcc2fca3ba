#pragma once

#include <cstdint>
#include <random>

namespace pagamma {

__extension__ using Uint128 = unsigned __int128;

/// Portable random source. std::mt19937_64 is fully specified by the
/// standard, but the std distributions are not, so bounded integers and
/// unit reals are derived here from the raw 64-bit output. A given seed
/// yields the same stream on every conforming platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    /// Uniform integer in [0, bound), bound > 0 (Lemire's multiply-shift
    /// with rejection, exactly unbiased).
    std::uint64_t uniform_index(std::uint64_t bound) {
        Uint128 prod = static_cast<Uint128>(next()) * bound;
        auto low = static_cast<std::uint64_t>(prod);
        if (low < bound) {
            const std::uint64_t threshold = -bound % bound;
            while (low < threshold) {
                prod = static_cast<Uint128>(next()) * bound;
                low = static_cast<std::uint64_t>(prod);
            }
        }
        return static_cast<std::uint64_t>(prod >> 64);
    }

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

private:
    std::mt19937_64 engine_;
};

/// SplitMix64 finalizer; a bijection on 64-bit words.
constexpr std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

} // namespace pagamma
