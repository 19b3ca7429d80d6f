#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "sarseg/metrics.hpp"
#include "test_util.hpp"

using namespace sarseg;
using testutil::random_image;
using testutil::random_mask;

namespace {

// Eq-by-eq reimplementation: 1 - (within-region SS) / (total SS).
double oracle_pp(const IntensityImage& f, const SegmentationMask& mask) {
    const std::size_t n = f.size();
    double total_mean = 0.0;
    for (double x : f.v) total_mean += x;
    total_mean /= static_cast<double>(n);

    double sum_fg = 0.0, sum_bg = 0.0;
    std::size_t n_fg = 0, n_bg = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (mask.on[i]) {
            sum_fg += f.v[i];
            ++n_fg;
        } else {
            sum_bg += f.v[i];
            ++n_bg;
        }
    }
    const double mean_fg = n_fg ? sum_fg / static_cast<double>(n_fg) : 0.0;
    const double mean_bg = n_bg ? sum_bg / static_cast<double>(n_bg) : 0.0;

    double within = 0.0, total = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double m = mask.on[i] ? mean_fg : mean_bg;
        within += (f.v[i] - m) * (f.v[i] - m);
        total += (f.v[i] - total_mean) * (f.v[i] - total_mean);
    }
    if (total == 0.0) return 1.0;
    double pp = 1.0 - within / total;
    if (pp < 0.0) pp = 0.0;
    if (pp > 1.0) pp = 1.0;
    return pp;
}

}  // namespace

TEST_CASE("uniformity is perfect on an exactly segmented two-level image") {
    IntensityImage f(9, 7, 60.0);
    SegmentationMask m(9, 7, false);
    for (int r = 2; r < 6; ++r) {
        for (int c = 1; c < 7; ++c) {
            f.at(r, c) = 160.0;
            m.set(r, c, true);
        }
    }
    CHECK(std::abs(pp_uniformity(f, m) - 1.0) <= 1e-12);
}

TEST_CASE("uniformity is zero for the single-region partition") {
    const IntensityImage f = random_image(6, 6, 5u, 1.0, 9.0);
    CHECK(pp_uniformity(f, SegmentationMask(6, 6, true)) == 0.0);
    CHECK(pp_uniformity(f, SegmentationMask(6, 6, false)) == 0.0);
}

TEST_CASE("uniformity of a constant image is one by convention") {
    const IntensityImage f(5, 5, 3.0);
    CHECK(pp_uniformity(f, random_mask(5, 5, 6u)) == 1.0);
}

TEST_CASE("uniformity matches the direct formula on random input") {
    for (std::uint32_t seed = 10; seed < 16; ++seed) {
        const IntensityImage f = random_image(6, 6, seed, 0.5, 4.0);
        const SegmentationMask m = random_mask(6, 6, seed + 50);
        CHECK(pp_uniformity(f, m) == doctest::Approx(oracle_pp(f, m)).epsilon(1e-13));
    }
}

TEST_CASE("uniformity is symmetric in mask complement and affine-invariant") {
    const IntensityImage f = random_image(7, 6, 21u, 1.0, 6.0);
    const SegmentationMask m = random_mask(7, 6, 22u);
    SegmentationMask inv = m;
    for (auto& b : inv.on) b = b ? 0 : 1;
    CHECK(pp_uniformity(f, m) == doctest::Approx(pp_uniformity(f, inv)).epsilon(1e-13));

    IntensityImage scaled = f;
    for (double& x : scaled.v) x = 2.0 * x + 5.0;
    CHECK(std::abs(pp_uniformity(f, m) - pp_uniformity(scaled, m)) <= 1e-12);
}

TEST_CASE("uniformity stays within the unit interval") {
    for (std::uint32_t seed = 31; seed < 41; ++seed) {
        const IntensityImage f = random_image(8, 5, seed, 0.5, 9.0);
        const SegmentationMask m = random_mask(8, 5, seed + 7);
        const double pp = pp_uniformity(f, m);
        CHECK(pp >= 0.0);
        CHECK(pp <= 1.0);
    }
}

TEST_CASE("uniformity rejects shape mismatches") {
    const IntensityImage f = random_image(4, 4, 44u);
    CHECK_THROWS_AS(pp_uniformity(f, SegmentationMask(5, 4)), std::invalid_argument);
}

TEST_CASE("dice similarity follows the overlap formula") {
    SegmentationMask a(4, 2, false), b(4, 2, false);
    // |A| = 4, |B| = 2, |A and B| = 2 -> 2*2 / (4+2)
    a.set(0, 0, true);
    a.set(0, 1, true);
    a.set(0, 2, true);
    a.set(0, 3, true);
    b.set(0, 0, true);
    b.set(0, 1, true);
    CHECK(dsc(a, b) == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
}

TEST_CASE("dice similarity identities hold exactly") {
    const SegmentationMask a = random_mask(6, 6, 51u);
    const SegmentationMask b = random_mask(6, 6, 52u);
    CHECK(dsc(a, a) == 1.0);
    CHECK(dsc(a, b) == dsc(b, a));

    SegmentationMask left(4, 4, false), right(4, 4, false);
    left.set(1, 0, true);
    right.set(2, 3, true);
    CHECK(dsc(left, right) == 0.0);

    CHECK(dsc(SegmentationMask(3, 3, false), SegmentationMask(3, 3, false)) == 1.0);
    CHECK_THROWS_AS(dsc(a, SegmentationMask(5, 6)), std::invalid_argument);
}
