#pragma once

#include <cstdint>

namespace treelike {

/// splitmix64. The exact recurrence is part of the reproducibility
/// contract: identical seeds yield bit-identical streams on every platform.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        state_ += 0x9E3779B97F4A7C15ull;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    /// Uniform integer in [0, bound) by rejection sampling on the high bits.
    std::uint64_t uniform(std::uint64_t bound) {
        if (bound <= 1) return 0;
        unsigned bits = 64 - static_cast<unsigned>(__builtin_clzll(bound - 1));
        for (;;) {
            std::uint64_t r = next() >> (64 - bits);
            if (r < bound) return r;
        }
    }

    /// Bernoulli draw; p <= 0 never fires, p >= 1 always fires.
    bool bernoulli(double p) {
        if (p <= 0.0) { next(); return false; }
        if (p >= 1.0) { next(); return true; }
        const double scaled = p * 18446744073709551616.0; // p * 2^64
        const std::uint64_t threshold = static_cast<std::uint64_t>(scaled);
        return next() < threshold;
    }

    /// The i-th derived sub-seed of a master seed (splitmix64 output of the
    /// advanced state). Used to make trials independent.
    static std::uint64_t derive(std::uint64_t seed, std::uint64_t index) {
        SplitMix64 r(seed + index * 0x9E3779B97F4A7C15ull);
        return r.next();
    }

private:
    std::uint64_t state_;
};

} // namespace treelike
