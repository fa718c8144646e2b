#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

namespace cliquecol {

// Seeded generator with draws that are bit-reproducible across standard
// libraries: mt19937_64's output sequence is fixed by the standard, and the
// derived draws below avoid the implementation-defined distributions.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    // Uniform on [0, bound); bound must be positive.
    std::size_t uniform_index(std::size_t bound)
    {
        const std::uint64_t n = bound;
        const std::uint64_t threshold = (0 - n) % n;
        for (;;) {
            const std::uint64_t r = engine_();
            if (r >= threshold) {
                return static_cast<std::size_t>(r % n);
            }
        }
    }

    // Uniform on [0, 1) with 53 random bits.
    double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    bool bernoulli(double p) { return unit() < p; }

private:
    std::mt19937_64 engine_;
};

}  // namespace cliquecol
