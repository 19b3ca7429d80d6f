#include "sarseg/metrics.hpp"

#include <stdexcept>

namespace sarseg {

double pp_uniformity(const IntensityImage& f, const SegmentationMask& mask) {
    if (f.width != mask.width || f.height != mask.height)
        throw std::invalid_argument("pp_uniformity: shape mismatch");
    if (f.size() == 0) throw std::invalid_argument("pp_uniformity: empty image");

    const std::size_t n = f.size();
    double sum = 0.0, sum_fg = 0.0, sum_bg = 0.0;
    std::size_t n_fg = 0;
    for (std::size_t i = 0; i < n; ++i) {
        sum += f.v[i];
        if (mask.on[i]) {
            sum_fg += f.v[i];
            ++n_fg;
        } else {
            sum_bg += f.v[i];
        }
    }
    const std::size_t n_bg = n - n_fg;
    const double mean = sum / static_cast<double>(n);
    const double mean_fg = n_fg ? sum_fg / static_cast<double>(n_fg) : 0.0;
    const double mean_bg = n_bg ? sum_bg / static_cast<double>(n_bg) : 0.0;

    double total = 0.0, within = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double dt = f.v[i] - mean;
        total += dt * dt;
        const double dw = f.v[i] - (mask.on[i] ? mean_fg : mean_bg);
        within += dw * dw;
    }
    if (total == 0.0) return 1.0;  // constant image: nothing left to explain

    const double pp = 1.0 - within / total;
    return pp < 0.0 ? 0.0 : (pp > 1.0 ? 1.0 : pp);
}

double dsc(const SegmentationMask& a, const SegmentationMask& b) {
    if (!a.same_shape(b)) throw std::invalid_argument("dsc: shape mismatch");
    std::size_t na = 0, nb = 0, ni = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a.on[i]) ++na;
        if (b.on[i]) ++nb;
        if (a.on[i] && b.on[i]) ++ni;
    }
    if (na + nb == 0) return 1.0;
    return 2.0 * static_cast<double>(ni) / static_cast<double>(na + nb);
}

}  // namespace sarseg
