// Netpbm image I/O: PGM (P2/P5) input, P5 mask output, P6 overlay output.
#pragma once

#include <string>
#include <utility>
#include <vector>

#include "sarseg/field.hpp"

namespace sarseg {

/// Reads an ASCII (P2) or binary (P5) PGM with maxval <= 65535. Zero-valued
/// pixels are lifted to 1e-6 so downstream log data terms stay defined.
/// Malformed input raises io_error naming the byte offset.
IntensityImage load_pgm(const std::string& path);

/// Reads a PGM and treats every nonzero pixel as foreground.
SegmentationMask load_mask_pgm(const std::string& path);

/// Writes the mask as binary PGM (P5), foreground 255, background 0.
void save_mask_pgm(const SegmentationMask& mask, const std::string& path);

/// Writes a real-valued image as PGM, rounding to integers. maxval is 255
/// when the data fits, 65535 otherwise; values are clamped to [0, maxval].
void save_pgm(const ScalarField& image, const std::string& path);

/// Writes a P6 PPM: the image in gray with the mask boundary in pure red.
/// Boundary pixels are foreground pixels with a 4-neighbour background
/// pixel inside the grid.
void save_overlay_ppm(const IntensityImage& image, const SegmentationMask& mask,
                      const std::string& path);

/// 4-neighbour boundary pixels of the mask as (row, col) pairs.
std::vector<std::pair<int, int>> contour_pixels(const SegmentationMask& mask);

}  // namespace sarseg
