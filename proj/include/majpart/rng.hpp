#pragma once

#include <cassert>
#include <cstdint>
#include <vector>

namespace majpart {

// All randomized operations in this project draw from SplitMix64, a published
// 64-bit generator with a one-word state. It is fast, splittable and has
// canonical reference outputs (frozen in the test suite), which makes every
// seeded run reproducible bit-for-bit across platforms. std::mt19937 would
// also be portable, but the std distributions on top of it are not; we avoid
// the whole family and derive bounded draws ourselves by rejection sampling.

inline constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

// SplitMix64 output finalizer, also used to derive substream seeds.
inline constexpr std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

// Seed for the i-th independent stream of a seeded operation. Block-indexed
// streams let a resampling step redraw one block without disturbing the
// draws of any other block.
inline constexpr std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t index) {
    return mix64(seed + kGolden * (index + 1));
}

class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += kGolden);
        return mix64(z);
    }

    // Uniform draw from {0, ..., bound-1} by rejection; unbiased for any bound.
    std::uint64_t next_below(std::uint64_t bound) {
        assert(bound >= 1);
        const std::uint64_t threshold = (0 - bound) % bound;  // 2^64 mod bound
        for (;;) {
            const std::uint64_t r = next();
            if (r >= threshold) return r % bound;
        }
    }

    // Bernoulli(p) by comparing one 64-bit draw against a fixed threshold.
    bool next_bernoulli(double p) {
        if (p <= 0.0) return false;
        if (p >= 1.0) return true;
        const auto threshold =
            static_cast<std::uint64_t>(static_cast<long double>(p) * 18446744073709551616.0L);
        return next() < threshold;
    }

    // In-place Fisher-Yates shuffle.
    template <typename T>
    void shuffle(std::vector<T>& items) {
        for (std::size_t i = items.size(); i > 1; --i) {
            const std::size_t j = static_cast<std::size_t>(next_below(i));
            std::swap(items[i - 1], items[j]);
        }
    }

  private:
    std::uint64_t state_;
};

}  // namespace majpart
