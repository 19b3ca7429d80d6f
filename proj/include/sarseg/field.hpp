// 2-D scalar fields and binary masks used throughout the library.
#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace sarseg {

/// Dense 2-D real field, row-major. Also used for intensity images,
/// level-set functions, edge maps and dual variables.
struct ScalarField {
    int width = 0;
    int height = 0;
    std::vector<double> v;

    ScalarField() = default;
    ScalarField(int w, int h, double fill = 0.0)
        : width(w), height(h), v(static_cast<std::size_t>(w) * static_cast<std::size_t>(h), fill) {}

    double& at(int r, int c) { return v[static_cast<std::size_t>(r) * width + c]; }
    double at(int r, int c) const { return v[static_cast<std::size_t>(r) * width + c]; }

    /// Replicate (Neumann) access: out-of-range indices clamp to the border.
    double at_clamped(int r, int c) const {
        if (r < 0) r = 0;
        if (r >= height) r = height - 1;
        if (c < 0) c = 0;
        if (c >= width) c = width - 1;
        return at(r, c);
    }

    std::size_t size() const { return v.size(); }
    bool same_shape(const ScalarField& o) const { return width == o.width && height == o.height; }
    bool operator==(const ScalarField& o) const = default;
};

/// Strictly positive image; positivity is validated by the operations
/// that rely on it (log/ratio data terms), not by the type itself.
using IntensityImage = ScalarField;

struct SegmentationMask {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> on;

    SegmentationMask() = default;
    SegmentationMask(int w, int h, bool fill = false)
        : width(w), height(h), on(static_cast<std::size_t>(w) * static_cast<std::size_t>(h), fill ? 1 : 0) {}

    bool at(int r, int c) const { return on[static_cast<std::size_t>(r) * width + c] != 0; }
    void set(int r, int c, bool b) { on[static_cast<std::size_t>(r) * width + c] = b ? 1 : 0; }

    std::size_t count() const {
        std::size_t n = 0;
        for (auto b : on) n += b ? 1 : 0;
        return n;
    }
    std::size_t size() const { return on.size(); }
    bool same_shape(const SegmentationMask& o) const { return width == o.width && height == o.height; }
    bool operator==(const SegmentationMask& o) const = default;
};

double min_value(const ScalarField& f);
double max_value(const ScalarField& f);
double mean_value(const ScalarField& f);
bool all_finite(const ScalarField& f);

/// Throws std::invalid_argument unless every pixel of f is finite and > 0.
void require_positive(const ScalarField& f, const char* what);

}  // namespace sarseg
