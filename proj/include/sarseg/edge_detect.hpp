// Exponential (ISEF) smoothing kernel and the edge-stopping map
// g = 1 / (1 + beta * |grad(smoothed)|^2).
#pragma once

#include <vector>

#include "sarseg/field.hpp"

namespace sarseg {

struct EdgeParams {
    double beta = 100.0;
    double sigma = 1.2;
    int kernel_size = 15;  ///< odd number of taps per axis

    bool operator==(const EdgeParams&) const = default;
};

/// Normalized 1-D taps of (1/2s) * exp(-|x|/s) sampled at integers
/// -h..h, h = (size-1)/2. Size must be odd and >= 1.
std::vector<double> isef_kernel(double sigma, int size);

/// Separable convolution with replicate boundary handling.
ScalarField smooth(const ScalarField& f, const std::vector<double>& kernel);

/// Edge map in (0, 1]: 1 in flat regions, small across strong edges.
/// Gradients of the smoothed image are central differences.
ScalarField edge_map(const ScalarField& f, const EdgeParams& p);

}  // namespace sarseg
