#include "sarseg/speckle.hpp"

#include <cmath>
#include <random>
#include <stdexcept>
#include <string>

namespace sarseg {

namespace {

// Uniform in [0, 1) from the top 53 bits; keeps the draw sequence
// independent of library distribution internals.
double canonical(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

double unit_exponential(std::mt19937_64& rng) {
    return -std::log1p(-canonical(rng));
}

bool in_disk(double r, double c, double cy, double cx, double radius) {
    const double dr = r - cy, dc = c - cx;
    return dr * dr + dc * dc <= radius * radius;
}

void check(bool ok, const std::string& msg) {
    if (!ok) throw std::invalid_argument("render_scene: " + msg);
}

}  // namespace

IntensityImage gamma_speckle(const IntensityImage& clean, const SpeckleParams& p) {
    if (p.looks < 1) throw std::invalid_argument("gamma_speckle: looks must be >= 1");
    require_positive(clean, "gamma_speckle");

    std::mt19937_64 rng(p.seed);
    IntensityImage out(clean.width, clean.height);
    const double inv_looks = 1.0 / static_cast<double>(p.looks);
    for (std::size_t i = 0; i < clean.size(); ++i) {
        double n = 0.0;
        for (int k = 0; k < p.looks; ++k) n += unit_exponential(rng);
        n *= inv_looks;
        double f = clean.v[i] * n;
        out.v[i] = f < 1e-6 ? 1e-6 : f;
    }
    return out;
}

std::vector<double> scene_geometry(const SceneSpec& s) {
    if (!s.geometry.empty()) return s.geometry;
    const double w = s.width, h = s.height;
    const double m = std::min(w, h);
    const double cx = (w - 1.0) / 2.0, cy = (h - 1.0) / 2.0;
    switch (s.shape) {
        case SceneShape::disk:
            return {cx, cy, 0.32 * m};
        case SceneShape::ring:
            return {cx, cy, 0.34 * m, 0.17 * m};
        case SceneShape::two_blobs:
            return {0.30 * w, 0.52 * h, 0.19 * m, 0.70 * w, 0.42 * h, 0.14 * m};
        case SceneShape::rectangle_with_hole: {
            const double x0 = 0.18 * w, y0 = 0.18 * h;
            const double w0 = 0.64 * w, h0 = 0.64 * h;
            const double hw = 0.40 * w0, hh = 0.40 * h0;
            return {x0, y0, w0, h0, x0 + (w0 - hw) / 2.0, y0 + (h0 - hh) / 2.0, hw, hh};
        }
    }
    throw std::invalid_argument("render_scene: unknown shape");
}

Scene render_scene(const SceneSpec& s) {
    check(s.width >= 1 && s.height >= 1, "grid must be at least 1x1");
    check(s.foreground_level > 0.0 && s.background_level > 0.0, "levels must be > 0");
    check(s.foreground_level != s.background_level, "foreground and background levels must differ");

    const std::vector<double> g = scene_geometry(s);
    const double W = s.width, H = s.height;

    SegmentationMask mask(s.width, s.height);
    auto fill = [&](auto&& pred) {
        for (int r = 0; r < s.height; ++r)
            for (int c = 0; c < s.width; ++c) mask.set(r, c, pred(double(r), double(c)));
    };

    switch (s.shape) {
        case SceneShape::disk: {
            check(g.size() == 3, "disk wants geometry cx, cy, r");
            const double cx = g[0], cy = g[1], r = g[2];
            check(r >= 0.0, "disk radius must be >= 0");
            check(cx - r >= -0.5 && cx + r <= W - 0.5 && cy - r >= -0.5 && cy + r <= H - 0.5,
                  "disk must fit inside the grid");
            fill([&](double rr, double cc) { return r > 0.0 && in_disk(rr, cc, cy, cx, r); });
            break;
        }
        case SceneShape::ring: {
            check(g.size() == 4, "ring wants geometry cx, cy, r_outer, r_inner");
            const double cx = g[0], cy = g[1], ro = g[2], ri = g[3];
            check(ri >= 0.0 && ro > ri, "ring needs 0 <= r_inner < r_outer");
            check(cx - ro >= -0.5 && cx + ro <= W - 0.5 && cy - ro >= -0.5 && cy + ro <= H - 0.5,
                  "ring must fit inside the grid");
            fill([&](double rr, double cc) {
                return in_disk(rr, cc, cy, cx, ro) && !in_disk(rr, cc, cy, cx, ri);
            });
            break;
        }
        case SceneShape::two_blobs: {
            check(g.size() == 6, "two_blobs wants geometry cx1, cy1, r1, cx2, cy2, r2");
            for (int i = 0; i < 2; ++i) {
                const double cx = g[3 * i], cy = g[3 * i + 1], r = g[3 * i + 2];
                check(r >= 0.0, "blob radius must be >= 0");
                check(cx - r >= -0.5 && cx + r <= W - 0.5 && cy - r >= -0.5 && cy + r <= H - 0.5,
                      "blob must fit inside the grid");
            }
            fill([&](double rr, double cc) {
                return (g[2] > 0.0 && in_disk(rr, cc, g[1], g[0], g[2])) ||
                       (g[5] > 0.0 && in_disk(rr, cc, g[4], g[3], g[5]));
            });
            break;
        }
        case SceneShape::rectangle_with_hole: {
            check(g.size() == 8, "rectangle_with_hole wants geometry x0, y0, w0, h0, hx, hy, hw, hh");
            const double x0 = g[0], y0 = g[1], w0 = g[2], h0 = g[3];
            const double hx = g[4], hy = g[5], hw = g[6], hh = g[7];
            check(w0 > 0.0 && h0 > 0.0 && hw > 0.0 && hh > 0.0, "rectangle extents must be > 0");
            check(x0 >= -0.5 && y0 >= -0.5 && x0 + w0 <= W - 0.5 && y0 + h0 <= H - 0.5,
                  "outer rectangle must fit inside the grid");
            check(hx > x0 && hy > y0 && hx + hw < x0 + w0 && hy + hh < y0 + h0,
                  "hole must lie strictly inside the outer rectangle");
            fill([&](double rr, double cc) {
                const bool outer = cc >= x0 && cc <= x0 + w0 && rr >= y0 && rr <= y0 + h0;
                const bool hole = cc >= hx && cc <= hx + hw && rr >= hy && rr <= hy + hh;
                return outer && !hole;
            });
            break;
        }
    }

    Scene scene;
    scene.truth = mask;
    scene.clean = IntensityImage(s.width, s.height, s.background_level);
    for (int r = 0; r < s.height; ++r)
        for (int c = 0; c < s.width; ++c)
            if (mask.at(r, c)) scene.clean.at(r, c) = s.foreground_level;
    return scene;
}

}  // namespace sarseg
