// Segmentation quality measures.
#pragma once

#include <optional>

#include "sarseg/field.hpp"

namespace sarseg {

/// Fraction of image variance explained by the two-region partition:
/// 1 - (within-region sum of squares) / (total sum of squares about the
/// global mean), clamped to [0, 1]. A constant image scores 1; the
/// all-pixels mask scores 0. Empty regions contribute nothing.
double pp_uniformity(const IntensityImage& f, const SegmentationMask& mask);

/// Dice similarity 2|A/\B| / (|A| + |B|); two empty masks score 1.
double dsc(const SegmentationMask& a, const SegmentationMask& b);

struct EvalResult {
    double pp = 0.0;
    std::optional<double> dsc;  ///< absent when no ground truth is available

    bool operator==(const EvalResult&) const = default;
};

}  // namespace sarseg
