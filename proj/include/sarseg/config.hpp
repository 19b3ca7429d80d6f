// Plain-text configuration: "[section]" headers over "key = value" lines.
// Unknown sections or keys are rejected so typos fail loudly.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sarseg/solvers.hpp"
#include "sarseg/speckle.hpp"

namespace sarseg {

struct ConfigDoc {
    struct Section {
        std::string name;
        std::vector<std::pair<std::string, std::string>> entries;

        const std::string* find(const std::string& key) const;
    };
    std::vector<Section> sections;

    const Section* find(const std::string& name) const;
    Section& get_or_add(const std::string& name);

    static ConfigDoc parse_text(const std::string& text, const std::string& origin = "<string>");
    static ConfigDoc parse_file(const std::string& path);
    std::string emit() const;
};

enum class SolverKind { LS, GO, FPA };

std::string to_string(SolverKind k);
std::string to_string(DataTerm v);
SolverKind solver_kind_from_string(const std::string& s);
DataTerm data_term_from_string(const std::string& s);

/// Reference parameter set for each solver family and data term
/// (the values the benchmark grid was calibrated with).
SolverConfig method_defaults(SolverKind kind, DataTerm variant);

/// Human-readable method label used in benchmark tables: the data term name
/// for the level-set solver, "GID+GO" style for the convex solvers.
std::string method_label(SolverKind kind, DataTerm variant);

struct InputSpec {
    std::string image_path;              ///< set for file input
    std::optional<SceneSpec> scene;      ///< set for synthetic input
    int looks = 2;
    std::uint64_t seed = 0;
    std::string gt_path;                 ///< optional ground-truth mask file

    bool operator==(const InputSpec&) const = default;
};

struct PipelineOptions {
    /// Pre-smooth the image feeding the data terms (the edge map always
    /// applies its own smoothing as part of edge_map). Smoothing happens in
    /// the log domain, where multiplicative speckle is additive; a light
    /// kernel preserves boundary localization while taming the noise.
    bool presmooth = true;
    double presmooth_sigma = 1.0;
    int presmooth_kernel = 7;

    bool operator==(const PipelineOptions&) const = default;
};

struct OutputSpec {
    std::string dir = ".";
    std::string mask_name = "mask.pgm";
    std::string overlay_name = "overlay.ppm";

    bool operator==(const OutputSpec&) const = default;
};

struct RunConfig {
    InputSpec input;
    SolverKind method = SolverKind::FPA;
    SolverConfig solver;  ///< includes the data-term variant and edge params
    PipelineOptions pipeline;
    OutputSpec output;

    bool operator==(const RunConfig&) const = default;
};

RunConfig parse_run_config(const ConfigDoc& doc);
ConfigDoc emit_run_config(const RunConfig& cfg);
RunConfig load_run_config(const std::string& path);

/// Benchmark over the fixed six-method grid (GAA, GID, GAA+GO, GID+GO,
/// GAA+FPA, GID+FPA) on one or more synthetic scenes.
struct BenchConfig {
    std::vector<std::pair<std::string, SceneSpec>> scenes;  ///< (name, spec)
    int looks = 2;
    std::uint64_t seed = 7;
    int iters_ls = 20;
    int iters_gcs = 10;
    std::string format = "table";  ///< "table" or "csv" for stdout
    std::string out_dir = ".";

    // Per-family parameters; defaults mirror method_defaults().
    double ls_mu_gid = 3.0, ls_mu_gaa = 255.0, ls_dt = 0.1, ls_eps = 1.0, ls_nu = 1.0;
    double go_mu = 5.0, go_lambda = 0.01;
    double fpa_mu = 5.0, fpa_lambda = 1.0, fpa_alpha = 10.0, fpa_t = 1e-5;
    double gamma = 0.5;

    EdgeParams edge;
    PipelineOptions pipeline;

    bool operator==(const BenchConfig&) const = default;
};

BenchConfig parse_bench_config(const ConfigDoc& doc);
BenchConfig load_bench_config(const std::string& path);

}  // namespace sarseg
