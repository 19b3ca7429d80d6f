// Synthetic scene generation and multiplicative gamma (speckle) noise.
#pragma once

#include <cstdint>
#include <vector>

#include "sarseg/field.hpp"

namespace sarseg {

struct SpeckleParams {
    int looks = 2;          ///< number of looks L >= 1
    std::uint64_t seed = 0; ///< full determinism: same seed, same field
};

/// f = clean * n with n the mean of `looks` unit-mean exponential draws,
/// i.e. gamma-distributed with E[n] = 1 and Var[n] = 1/looks.
/// Clean must be strictly positive; the result is floored at 1e-6.
IntensityImage gamma_speckle(const IntensityImage& clean, const SpeckleParams& p);

enum class SceneShape { disk, ring, two_blobs, rectangle_with_hole };

/// Two-level test scene. `geometry` is shape-specific (pixel units):
///   disk:                cx, cy, r
///   ring:                cx, cy, r_outer, r_inner
///   two_blobs:           cx1, cy1, r1, cx2, cy2, r2
///   rectangle_with_hole: x0, y0, w0, h0, hx, hy, hw, hh  (outer rect, hole)
/// An empty vector selects proportional defaults centred in the grid.
struct SceneSpec {
    int width = 0;
    int height = 0;
    double foreground_level = 160.0;
    double background_level = 60.0;
    SceneShape shape = SceneShape::ring;
    std::vector<double> geometry;

    bool operator==(const SceneSpec&) const = default;
};

struct Scene {
    IntensityImage clean;     ///< piecewise-constant image
    SegmentationMask truth;   ///< ground-truth foreground mask
};

Scene render_scene(const SceneSpec& spec);

/// Resolved geometry (defaults filled in); exposed for tests and tools.
std::vector<double> scene_geometry(const SceneSpec& spec);

}  // namespace sarseg
