#ifndef HGCOLOR_RNG_HPP
#define HGCOLOR_RNG_HPP

#include <cstdint>

namespace hgcolor {

inline constexpr std::uint64_t kGoldenGamma = 0x9E3779B97F4A7C15ULL;

/// SplitMix64 finalizer (Steele, Lea, Flood 2014). All randomness in this
/// project reduces to this one mixing function so that every consumer,
/// regardless of language or threading, reproduces identical streams.
constexpr std::uint64_t splitmix64_finalize(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

/// Sub-seed for the index-th independent unit of work (trial, edge, ...)
/// under a master seed. Defined as the index-th output of a SplitMix64
/// stream seeded with (master ^ kGoldenGamma); order-independent, so units
/// can be processed in any order or in parallel.
constexpr std::uint64_t sub_seed(std::uint64_t master, std::uint64_t index) {
    return splitmix64_finalize((master ^ kGoldenGamma) + (index + 1) * kGoldenGamma);
}

/// Sequential SplitMix64 generator.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        state_ += kGoldenGamma;
        return splitmix64_finalize(state_);
    }

    /// Single fair bit (top bit of one draw).
    bool next_bit() { return (next() >> 63) != 0; }

    /// Uniform double in the open interval (0,1): top 53 bits of a draw,
    /// redrawing the (probability 2^-53) exact zero.
    double next_open01() {
        for (;;) {
            const double u = static_cast<double>(next() >> 11) * 0x1.0p-53;
            if (u > 0.0) return u;
        }
    }

    /// Unbiased integer in [0, bound) by rejection. bound >= 1.
    std::uint64_t next_below(std::uint64_t bound) {
        const std::uint64_t threshold = (0 - bound) % bound;  // 2^64 mod bound
        for (;;) {
            const std::uint64_t x = next();
            if (x >= threshold) return x % bound;
        }
    }

private:
    std::uint64_t state_;
};

}  // namespace hgcolor

#endif  // HGCOLOR_RNG_HPP
