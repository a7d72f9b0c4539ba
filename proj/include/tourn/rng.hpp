#pragma once

// Counter-based random bits.
//
// Every random quantity in the library is a pure function of a 64-bit seed and a
// counter. The generator is SplitMix64 evaluated at an arbitrary position:
//
//     word(seed, i) = mix64(seed + (i + 1) * 0x9E3779B97F4A7C15)
//     mix64(z): z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
//               z = (z ^ (z >> 27)) * 0x94D049BB133111EB
//               return z ^ (z >> 31)
//
// which is exactly the i-th output of a SplitMix64 stream started at `seed`.
// Bit k of the stream is bit (k mod 64) of word(seed, k / 64). Only wrapping
// 64-bit integer arithmetic is involved, so the stream is identical on every
// platform.

#include <cstdint>
#include <limits>

namespace tourn {

inline constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

constexpr std::uint64_t counter_word(std::uint64_t seed, std::uint64_t i) noexcept {
    return mix64(seed + (i + 1) * kGolden);
}

/// Seed of sub-experiment `index` under `master`. Used for per-trial and
/// per-retry seeds so that results do not depend on evaluation order.
constexpr std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) noexcept {
    return mix64(mix64(master ^ 0xD1B54A32D192ED03ULL) + index * kGolden);
}

/// Sequential view of the counter stream. Satisfies UniformRandomBitGenerator.
class CounterRng {
public:
    using result_type = std::uint64_t;

    explicit CounterRng(std::uint64_t seed) noexcept : seed_(seed) {}

    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

    result_type operator()() noexcept { return counter_word(seed_, counter_++); }

    /// Next bit of the bit stream (64 bits are drawn from each word, low bit first).
    bool bit() noexcept {
        if (bits_left_ == 0) {
            buffer_ = (*this)();
            bits_left_ = 64;
        }
        bool b = buffer_ & 1U;
        buffer_ >>= 1;
        --bits_left_;
        return b;
    }

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform() noexcept { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

    /// Uniform integer in [0, bound), bound > 0, by rejection (no modulo bias).
    std::uint64_t below(std::uint64_t bound) noexcept {
        std::uint64_t limit = max() - max() % bound;
        for (;;) {
            std::uint64_t x = (*this)();
            if (x < limit) return x % bound;
        }
    }

    std::uint64_t seed() const noexcept { return seed_; }
    std::uint64_t position() const noexcept { return counter_; }

private:
    std::uint64_t seed_;
    std::uint64_t counter_ = 0;
    std::uint64_t buffer_ = 0;
    int bits_left_ = 0;
};

}  // namespace tourn
