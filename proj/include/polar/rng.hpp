#ifndef POLAR_RNG_HPP
#define POLAR_RNG_HPP

#include <cstdint>
#include <random>

#include "polar/rational.hpp"

namespace polar {

// Deterministic random source. Draws go through our own rejection sampling so
// results are identical across standard-library implementations.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    int int_in(int lo, int hi) {  // inclusive bounds
        const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
        std::uint64_t v;
        do {
            v = eng_();
        } while (v >= limit);
        return lo + static_cast<int>(v % span);
    }

    // Small nonzero integer, for hyperplane and linear-form coefficients.
    int small_nonzero() {
        int v = 0;
        while (v == 0) v = int_in(-5, 5);
        return v;
    }

    std::uint64_t raw() { return eng_(); }

private:
    std::mt19937_64 eng_;
};

}  // namespace polar

#endif
