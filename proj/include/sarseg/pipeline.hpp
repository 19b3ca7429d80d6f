// End-to-end segmentation runs: input preparation (synthetic scene or image
// file), field preparation (pre-smoothing, scaling, edge map), solver
// dispatch, metric evaluation, and the benchmark grid.
#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "sarseg/config.hpp"
#include "sarseg/edge_detect.hpp"
#include "sarseg/metrics.hpp"
#include "sarseg/solvers.hpp"

namespace sarseg {

struct PreparedInput {
    IntensityImage observed;                 ///< speckled (or loaded) image
    std::optional<IntensityImage> clean;     ///< noise-free image (synthetic only)
    std::optional<SegmentationMask> truth;   ///< ground truth when available
};

/// Renders + speckles a synthetic scene, or loads an image file (plus an
/// optional ground-truth mask).
PreparedInput prepare_input(const InputSpec& input);

struct SolverInputs {
    IntensityImage data_ls;   ///< data image for the level-set solver (original scale)
    IntensityImage data_gcs;  ///< data image for GO/FPA, rescaled to (0, 1]
    ScalarField g;            ///< edge-stopping weight
};

/// Builds the per-solver data images and the edge map.  The observed image is
/// optionally smoothed in the log domain (multiplicative noise becomes
/// additive there); the edge map is computed from the smoothed data rescaled
/// by its maximum so the edge-strength scale is independent of the input's
/// dynamic range.  The convex solvers additionally receive a unit-scale copy
/// saturated at the 99th percentile so initialization and thresholds are not
/// dictated by a handful of bright speckle outliers.
SolverInputs prepare_fields(const IntensityImage& observed, const EdgeParams& edge,
                            const PipelineOptions& pipeline);

/// Dispatches to the configured solver with the matching data image.
SolveResult run_solver(SolverKind kind, const SolverInputs& fields, const SolverConfig& cfg);

struct RunOutcome {
    std::string label;        ///< method label, e.g. "GID+FPA"
    SolveResult solve;
    EvalResult eval;          ///< pp is measured against the clean image when known
    std::string mask_path;    ///< written mask file
    std::string overlay_path; ///< written contour-overlay file
};

/// Full "segment" run: prepare, solve, evaluate, write mask + overlay.
RunOutcome run(const RunConfig& cfg);

/// Writes clean.pgm, noisy.pgm, and gt.pgm for a synthetic-scene input.
/// Returns the output directory used.
std::string write_scene_files(const InputSpec& input, const std::string& dir);

struct BenchRow {
    std::string method;
    std::string scene;
    int iterations = 0;
    double seconds = 0.0;
    std::optional<double> dsc;
    double pp = 0.0;
    bool failed = false;
    std::string error;  ///< failure reason when failed
};

/// Runs the six-method grid on every configured scene.  A solver failure is
/// captured in the row rather than aborting the benchmark.
std::vector<BenchRow> bench_rows(const BenchConfig& cfg);

std::string format_rows_table(const std::vector<BenchRow>& rows);
std::string format_rows_csv(const std::vector<BenchRow>& rows);

/// Runs the benchmark, prints it to `out` in the configured format, and
/// writes bench.csv into the output directory.  Returns the number of
/// failed cells.
int bench(const BenchConfig& cfg, std::ostream& out);

}  // namespace sarseg
