// Region statistics, pointwise data terms and the two segmentation energies.
#pragma once

#include "sarseg/field.hpp"

namespace sarseg {

struct RegionConstants {
    double c1 = 0.0;  ///< foreground mean
    double c2 = 0.0;  ///< background mean

    bool operator==(const RegionConstants&) const = default;
};

/// Pointwise fidelity variant.
///   GID: (c1 - f*log c1) - (c2 - f*log c2)   I-divergence form
///   GAA: (log c1 + f/c1) - (log c2 + f/c2)   gamma log-likelihood form
enum class DataTerm { GID, GAA };

/// Smoothed step 0.5 * (1 + (2/pi) * atan(phi/eps)); strictly in (0, 1).
double heaviside_eps(double phi, double eps);
/// Its derivative (1/pi) * eps / (eps^2 + phi^2).
double delta_eps(double phi, double eps);

/// Region means weighted by H_eps(phi) and 1 - H_eps(phi). Both weights are
/// strictly positive everywhere, so no fallback is needed.
RegionConstants region_constants_smooth(const IntensityImage& f, const ScalarField& phi, double eps);

/// Hard-mask region means; an empty region falls back to the global mean.
RegionConstants region_constants_mask(const IntensityImage& f, const SegmentationMask& mask);

/// Pointwise data term field for the chosen variant. Requires f > 0 and
/// c1, c2 > 0.
ScalarField eta_field(const IntensityImage& f, const RegionConstants& c, DataTerm variant);

/// Convex (global) energy: sum g * (|grad_x phi| + |grad_y phi|)
/// + mu * sum phi * eta. phi must lie in [0, 1].
double gcs_energy(const ScalarField& phi, const ScalarField& g, const ScalarField& eta, double mu);

struct GidEnergyParams {
    double mu = 1.0;
    double nu = 1.0;
    double eps = 1.0;
};

/// Level-set energy: edge-weighted contour length, smoothed-Heaviside region
/// fidelity, and the distance-regularization penalty 0.5 * (|grad phi| - 1)^2.
/// Gradient magnitudes are central differences (one-sided at the border).
double gid_energy(const ScalarField& phi, const IntensityImage& f, const RegionConstants& c,
                  const ScalarField& g, const GidEnergyParams& p);

}  // namespace sarseg
