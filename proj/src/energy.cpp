#include "sarseg/energy.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace sarseg {

namespace {

void check_eps(double eps) {
    if (eps <= 0.0) throw std::invalid_argument("smoothed heaviside: eps must be > 0");
}

// Central difference of phi, one-sided at the border so a unit ramp has
// |grad| == 1 on the whole grid.
void central_diff(const ScalarField& phi, int r, int c, double& dx, double& dy) {
    const int w = phi.width, h = phi.height;
    if (w == 1)
        dx = 0.0;
    else if (c == 0)
        dx = phi.at(r, 1) - phi.at(r, 0);
    else if (c == w - 1)
        dx = phi.at(r, w - 1) - phi.at(r, w - 2);
    else
        dx = (phi.at(r, c + 1) - phi.at(r, c - 1)) / 2.0;
    if (h == 1)
        dy = 0.0;
    else if (r == 0)
        dy = phi.at(1, c) - phi.at(0, c);
    else if (r == h - 1)
        dy = phi.at(h - 1, c) - phi.at(h - 2, c);
    else
        dy = (phi.at(r + 1, c) - phi.at(r - 1, c)) / 2.0;
}

}  // namespace

double heaviside_eps(double phi, double eps) {
    check_eps(eps);
    return 0.5 * (1.0 + (2.0 / std::numbers::pi) * std::atan(phi / eps));
}

double delta_eps(double phi, double eps) {
    check_eps(eps);
    return (1.0 / std::numbers::pi) * eps / (eps * eps + phi * phi);
}

RegionConstants region_constants_smooth(const IntensityImage& f, const ScalarField& phi, double eps) {
    check_eps(eps);
    if (!f.same_shape(phi)) throw std::invalid_argument("region_constants_smooth: shape mismatch");
    double wf = 0.0, wb = 0.0, sf = 0.0, sb = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i) {
        const double h = heaviside_eps(phi.v[i], eps);
        sf += f.v[i] * h;
        wf += h;
        sb += f.v[i] * (1.0 - h);
        wb += 1.0 - h;
    }
    // H_eps is strictly inside (0, 1), so both weights are positive.
    return {sf / wf, sb / wb};
}

RegionConstants region_constants_mask(const IntensityImage& f, const SegmentationMask& mask) {
    if (f.width != mask.width || f.height != mask.height)
        throw std::invalid_argument("region_constants_mask: shape mismatch");
    double sf = 0.0, sb = 0.0, total = 0.0;
    std::size_t nf = 0, nb = 0;
    for (std::size_t i = 0; i < f.size(); ++i) {
        total += f.v[i];
        if (mask.on[i]) {
            sf += f.v[i];
            ++nf;
        } else {
            sb += f.v[i];
            ++nb;
        }
    }
    const double global = total / static_cast<double>(f.size());
    RegionConstants c;
    c.c1 = nf ? sf / static_cast<double>(nf) : global;
    c.c2 = nb ? sb / static_cast<double>(nb) : global;
    return c;
}

ScalarField eta_field(const IntensityImage& f, const RegionConstants& c, DataTerm variant) {
    if (c.c1 <= 0.0 || c.c2 <= 0.0)
        throw std::invalid_argument("eta_field: region constants must be > 0");
    require_positive(f, "eta_field");

    ScalarField eta(f.width, f.height);
    if (variant == DataTerm::GID) {
        const double dc = c.c1 - c.c2;
        const double dlog = std::log(c.c1) - std::log(c.c2);
        for (std::size_t i = 0; i < f.size(); ++i) eta.v[i] = dc - f.v[i] * dlog;
    } else {
        const double dlog = std::log(c.c1) - std::log(c.c2);
        const double dinv = 1.0 / c.c1 - 1.0 / c.c2;
        for (std::size_t i = 0; i < f.size(); ++i) eta.v[i] = dlog + f.v[i] * dinv;
    }
    return eta;
}

double gcs_energy(const ScalarField& phi, const ScalarField& g, const ScalarField& eta, double mu) {
    if (!phi.same_shape(g) || !phi.same_shape(eta))
        throw std::invalid_argument("gcs_energy: shape mismatch");
    for (double x : phi.v)
        if (!(x >= 0.0 && x <= 1.0)) throw std::invalid_argument("gcs_energy: phi must lie in [0, 1]");

    const int w = phi.width, h = phi.height;
    double tv = 0.0, data = 0.0;
    for (int r = 0; r < h; ++r) {
        for (int c = 0; c < w; ++c) {
            const double p = phi.at(r, c);
            const double gx = c + 1 < w ? phi.at(r, c + 1) - p : 0.0;
            const double gy = r + 1 < h ? phi.at(r + 1, c) - p : 0.0;
            tv += g.at(r, c) * (std::fabs(gx) + std::fabs(gy));
            data += p * eta.at(r, c);
        }
    }
    return tv + mu * data;
}

double gid_energy(const ScalarField& phi, const IntensityImage& f, const RegionConstants& c,
                  const ScalarField& g, const GidEnergyParams& p) {
    if (!phi.same_shape(f) || !phi.same_shape(g))
        throw std::invalid_argument("gid_energy: shape mismatch");
    if (c.c1 <= 0.0 || c.c2 <= 0.0)
        throw std::invalid_argument("gid_energy: region constants must be > 0");
    require_positive(f, "gid_energy");

    const double log1 = std::log(c.c1), log2 = std::log(c.c2);
    double contour = 0.0, fidelity = 0.0, distreg = 0.0;
    for (int r = 0; r < phi.height; ++r) {
        for (int cc = 0; cc < phi.width; ++cc) {
            double dx, dy;
            central_diff(phi, r, cc, dx, dy);
            const double mag = std::sqrt(dx * dx + dy * dy);
            const double ph = phi.at(r, cc);
            const double hv = heaviside_eps(ph, p.eps);
            const double fv = f.at(r, cc);
            contour += g.at(r, cc) * delta_eps(ph, p.eps) * mag;
            fidelity += (c.c1 - fv * log1) * hv + (c.c2 - fv * log2) * (1.0 - hv);
            distreg += 0.5 * (mag - 1.0) * (mag - 1.0);
        }
    }
    return contour + p.mu * fidelity + p.nu * distreg;
}

}  // namespace sarseg
