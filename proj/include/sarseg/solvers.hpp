// Three interchangeable segmentation solvers over the same data terms:
//   solve_levelset  explicit level-set evolution with edge-weighted curvature
//   solve_go        split-Bregman minimization of the convex relaxation
//   solve_fpa       fixed-point dual updates, no linear solve or PDE step
#pragma once

#include <optional>
#include <vector>

#include "sarseg/edge_detect.hpp"
#include "sarseg/energy.hpp"
#include "sarseg/field.hpp"

namespace sarseg {

struct SolverConfig {
    DataTerm variant = DataTerm::GID;
    double mu = 5.0;        ///< data-term weight
    double lambda = 1.0;    ///< splitting weight (GO, FPA)
    double alpha = 10.0;    ///< FPA step denominator; requires lambda/alpha <= 1/4
    double t_relax = 1e-5;  ///< FPA relaxation, strictly inside (0, 1)
    double gamma = 0.5;     ///< mask threshold, strictly inside (0, 1)
    double nu = 1.0;        ///< level-set distance-regularization weight
    double eps = 1.0;       ///< smoothed-Heaviside width
    double dt = 0.1;        ///< level-set time step
    int max_iters = 10;
    double tol = 0.0;       ///< relative phi-change early stop; 0 disables
    int gs_sweeps = 1;      ///< GO inner Gauss-Seidel sweeps per iteration
    EdgeParams edge;        ///< used by the overloads that build g themselves

    /// Freeze the region constants instead of refreshing them from the
    /// current mask. Used by diagnostics and energy-descent tests.
    std::optional<RegionConstants> fixed_constants;

    bool operator==(const SolverConfig&) const = default;
};

struct SolveReport {
    int iterations_run = 0;
    double seconds = 0.0;              ///< wall clock around the iteration loop
    std::vector<double> energy_trace;  ///< one entry per completed iteration
    RegionConstants final_constants;
};

struct SolveResult {
    ScalarField phi;
    SegmentationMask mask;
    SolveReport report;
};

/// {phi > gamma}; gamma must be strictly inside (0, 1).
SegmentationMask threshold(const ScalarField& phi, double gamma);

SolveResult solve_levelset(const IntensityImage& f, const ScalarField& g, const SolverConfig& cfg);
SolveResult solve_go(const IntensityImage& f, const ScalarField& g, const SolverConfig& cfg);
SolveResult solve_fpa(const IntensityImage& f, const ScalarField& g, const SolverConfig& cfg);

// Convenience overloads that compute the edge map from cfg.edge first.
SolveResult solve_levelset(const IntensityImage& f, const SolverConfig& cfg);
SolveResult solve_go(const IntensityImage& f, const SolverConfig& cfg);
SolveResult solve_fpa(const IntensityImage& f, const SolverConfig& cfg);

}  // namespace sarseg
