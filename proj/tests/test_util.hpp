#pragma once

#include "seaplan/geometry.hpp"

#include <random>

namespace seaplan::test {

// Platform-stable uniform [0, 1) from raw mt19937_64 output.
inline double unit(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline double uniform(std::mt19937_64& rng, double lo, double hi) {
    return lo + (hi - lo) * unit(rng);
}

inline Vec2 random_vec(std::mt19937_64& rng, double lo, double hi) {
    return {uniform(rng, lo, hi), uniform(rng, lo, hi)};
}

inline Vec2 random_unit(std::mt19937_64& rng) {
    const double a = uniform(rng, 0.0, 2.0 * kPi);
    return {std::cos(a), std::sin(a)};
}

}  // namespace seaplan::test
