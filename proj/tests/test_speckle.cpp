#include <cmath>
#include <numbers>
#include <stdexcept>

#include "doctest.h"
#include "sarseg/speckle.hpp"

using namespace sarseg;

namespace {

struct Moments {
    double mean;
    double variance;
};

Moments sample_moments(const IntensityImage& f) {
    double sum = 0.0;
    for (double x : f.v) sum += x;
    const double mean = sum / static_cast<double>(f.size());
    double ss = 0.0;
    for (double x : f.v) ss += (x - mean) * (x - mean);
    return {mean, ss / static_cast<double>(f.size())};
}

}  // namespace

TEST_CASE("noise has unit mean and variance 1/looks at one million draws") {
    const IntensityImage ones(1000, 1000, 1.0);
    SpeckleParams p;
    p.looks = 2;
    p.seed = 424242;
    const Moments m = sample_moments(gamma_speckle(ones, p));
    CHECK(std::abs(m.mean - 1.0) < 0.005);
    CHECK(std::abs(m.variance - 0.5) < 0.01);
}

TEST_CASE("noised image keeps the clean level in expectation") {
    const IntensityImage clean(400, 300, 80.0);
    SpeckleParams p;
    p.looks = 4;
    p.seed = 7;
    const Moments m = sample_moments(gamma_speckle(clean, p));
    CHECK(std::abs(m.mean - 80.0) < 0.8);
    CHECK(std::abs(m.variance - 80.0 * 80.0 / 4.0) < 0.05 * 80.0 * 80.0 / 4.0);
}

TEST_CASE("same seed reproduces the exact field, different seeds do not") {
    const IntensityImage clean(50, 40, 10.0);
    SpeckleParams p;
    p.looks = 2;
    p.seed = 99;
    const IntensityImage a = gamma_speckle(clean, p);
    const IntensityImage b = gamma_speckle(clean, p);
    CHECK(a == b);
    p.seed = 100;
    CHECK(gamma_speckle(clean, p) != a);
}

TEST_CASE("speckled output is strictly positive") {
    const IntensityImage clean(64, 64, 1e-5);
    SpeckleParams p;
    p.looks = 1;
    p.seed = 3;
    const IntensityImage noisy = gamma_speckle(clean, p);
    CHECK(min_value(noisy) > 0.0);
}

TEST_CASE("speckle rejects non-positive pixels and zero looks") {
    IntensityImage bad(4, 4, 1.0);
    bad.at(1, 2) = 0.0;
    SpeckleParams p;
    CHECK_THROWS_AS(gamma_speckle(bad, p), std::invalid_argument);
    p.looks = 0;
    CHECK_THROWS_AS(gamma_speckle(IntensityImage(4, 4, 1.0), p), std::invalid_argument);
}

TEST_CASE("rendered disk matches a direct pixel-level predicate") {
    SceneSpec spec;
    spec.shape = SceneShape::disk;
    spec.width = 85;
    spec.height = 61;
    const std::vector<double> geo = scene_geometry(spec);
    REQUIRE(geo.size() == 3);
    const Scene scene = render_scene(spec);

    std::size_t inside = 0;
    for (int r = 0; r < spec.height; ++r) {
        for (int c = 0; c < spec.width; ++c) {
            const double dx = c - geo[0];
            const double dy = r - geo[1];
            const bool in = dx * dx + dy * dy <= geo[2] * geo[2];
            if (in) ++inside;
            CHECK(scene.truth.at(r, c) == in);
            CHECK(scene.clean.at(r, c) ==
                  (in ? spec.foreground_level : spec.background_level));
        }
    }
    CHECK(scene.truth.count() == inside);
    CHECK(inside > 0);
}

TEST_CASE("ring mask area approaches the analytic annulus area") {
    SceneSpec spec;
    spec.shape = SceneShape::ring;
    spec.width = 85;
    spec.height = 76;
    const std::vector<double> geo = scene_geometry(spec);
    REQUIRE(geo.size() == 4);
    const double ro = geo[2];
    const double ri = geo[3];
    const Scene scene = render_scene(spec);

    const double analytic = std::numbers::pi * (ro * ro - ri * ri);
    const double margin = 2.0 * std::numbers::pi * (ro + ri) + 16.0;
    CHECK(std::abs(static_cast<double>(scene.truth.count()) - analytic) <= margin);

    // interior of the hole is background again
    CHECK_FALSE(scene.truth.at(static_cast<int>(geo[1]), static_cast<int>(geo[0])));
}

TEST_CASE("radius-zero disk renders pure background") {
    SceneSpec spec;
    spec.shape = SceneShape::disk;
    spec.width = 16;
    spec.height = 12;
    spec.geometry = {8.0, 6.0, 0.0};
    const Scene scene = render_scene(spec);
    CHECK(scene.truth.count() == 0);
    CHECK(min_value(scene.clean) == spec.background_level);
    CHECK(max_value(scene.clean) == spec.background_level);
}

TEST_CASE("scene validation rejects equal levels and shapes leaving the grid") {
    SceneSpec spec;
    spec.shape = SceneShape::disk;
    spec.width = 16;
    spec.height = 12;

    SceneSpec equal_levels = spec;
    equal_levels.foreground_level = equal_levels.background_level = 50.0;
    CHECK_THROWS_AS(render_scene(equal_levels), std::invalid_argument);

    SceneSpec too_big = spec;
    too_big.geometry = {8.0, 6.0, 40.0};
    CHECK_THROWS_AS(render_scene(too_big), std::invalid_argument);

    SceneSpec negative_level = spec;
    negative_level.background_level = -1.0;
    CHECK_THROWS_AS(render_scene(negative_level), std::invalid_argument);
}

TEST_CASE("blob pair and holed rectangle render two-level scenes with the advertised topology") {
    SceneSpec blobs;
    blobs.shape = SceneShape::two_blobs;
    blobs.width = 64;
    blobs.height = 48;
    const Scene two = render_scene(blobs);
    CHECK(two.truth.count() > 0);

    SceneSpec rect;
    rect.shape = SceneShape::rectangle_with_hole;
    rect.width = 64;
    rect.height = 48;
    const std::vector<double> geo = scene_geometry(rect);
    REQUIRE(geo.size() == 8);
    const Scene holed = render_scene(rect);
    CHECK(holed.truth.count() > 0);
    // hole centre is background, frame between outer rect and hole is foreground
    const int hole_cr = static_cast<int>(geo[5] + geo[7] / 2.0);
    const int hole_cc = static_cast<int>(geo[4] + geo[6] / 2.0);
    CHECK_FALSE(holed.truth.at(hole_cr, hole_cc));
    CHECK(holed.truth.at(static_cast<int>(geo[1] + 1.0), static_cast<int>(geo[0] + 1.0)));
}
