// Shared helpers for the unit tests.
#pragma once

#include <cstdint>
#include <random>

#include "sarseg/field.hpp"

namespace testutil {

inline sarseg::ScalarField random_field(int w, int h, std::uint32_t seed, double lo = -2.0,
                                        double hi = 2.0) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> dist(lo, hi);
    sarseg::ScalarField f(w, h);
    for (double& x : f.v) x = dist(rng);
    return f;
}

inline sarseg::IntensityImage random_image(int w, int h, std::uint32_t seed, double lo = 0.5,
                                           double hi = 2.5) {
    return random_field(w, h, seed, lo, hi);
}

inline sarseg::SegmentationMask random_mask(int w, int h, std::uint32_t seed) {
    std::mt19937 rng(seed);
    std::bernoulli_distribution dist(0.5);
    sarseg::SegmentationMask m(w, h);
    for (auto& b : m.on) b = dist(rng) ? 1 : 0;
    return m;
}

}  // namespace testutil
