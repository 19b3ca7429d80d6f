#include "sarseg/edge_detect.hpp"

#include <cmath>
#include <stdexcept>

namespace sarseg {

std::vector<double> isef_kernel(double sigma, int size) {
    if (sigma <= 0.0) throw std::invalid_argument("isef_kernel: sigma must be > 0");
    if (size < 1 || size % 2 == 0) throw std::invalid_argument("isef_kernel: size must be odd and >= 1");

    const int h = size / 2;
    std::vector<double> k(static_cast<std::size_t>(size));
    double sum = 0.0;
    for (int x = -h; x <= h; ++x) {
        const double w = std::exp(-std::fabs(static_cast<double>(x)) / sigma) / (2.0 * sigma);
        k[static_cast<std::size_t>(x + h)] = w;
        sum += w;
    }
    for (double& w : k) w /= sum;
    return k;
}

ScalarField smooth(const ScalarField& f, const std::vector<double>& kernel) {
    if (kernel.empty() || kernel.size() % 2 == 0)
        throw std::invalid_argument("smooth: kernel must have an odd number of taps");
    const int h = static_cast<int>(kernel.size()) / 2;

    // Horizontal then vertical pass; with per-axis replicate clamping this
    // equals the full 2-D convolution with the outer-product kernel.
    ScalarField tmp(f.width, f.height);
    for (int r = 0; r < f.height; ++r) {
        for (int c = 0; c < f.width; ++c) {
            double s = 0.0;
            for (int d = -h; d <= h; ++d)
                s += kernel[static_cast<std::size_t>(d + h)] * f.at_clamped(r, c + d);
            tmp.at(r, c) = s;
        }
    }
    ScalarField out(f.width, f.height);
    for (int r = 0; r < f.height; ++r) {
        for (int c = 0; c < f.width; ++c) {
            double s = 0.0;
            for (int d = -h; d <= h; ++d)
                s += kernel[static_cast<std::size_t>(d + h)] * tmp.at_clamped(r + d, c);
            out.at(r, c) = s;
        }
    }
    return out;
}

ScalarField edge_map(const ScalarField& f, const EdgeParams& p) {
    if (p.beta < 0.0) throw std::invalid_argument("edge_map: beta must be >= 0");
    const ScalarField s = smooth(f, isef_kernel(p.sigma, p.kernel_size));

    ScalarField g(f.width, f.height);
    for (int r = 0; r < f.height; ++r) {
        for (int c = 0; c < f.width; ++c) {
            const double gx = (s.at_clamped(r, c + 1) - s.at_clamped(r, c - 1)) / 2.0;
            const double gy = (s.at_clamped(r + 1, c) - s.at_clamped(r - 1, c)) / 2.0;
            g.at(r, c) = 1.0 / (1.0 + p.beta * (gx * gx + gy * gy));
        }
    }
    return g;
}

}  // namespace sarseg
