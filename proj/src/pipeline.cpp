#include "sarseg/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <stdexcept>

#include "sarseg/errors.hpp"
#include "sarseg/pnm_io.hpp"

namespace sarseg {

namespace {

std::string join_path(const std::string& dir, const std::string& name) {
    return (std::filesystem::path(dir) / name).string();
}

void ensure_dir(const std::string& dir) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) throw io_error("cannot create output directory '" + dir + "': " + ec.message());
}

std::string fmt(double v, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*f", digits, v);
    return buf;
}

struct MethodCell {
    SolverKind kind;
    DataTerm variant;
};

/// Benchmark grid in presentation order.
constexpr MethodCell kGrid[] = {
    {SolverKind::LS, DataTerm::GAA},  {SolverKind::LS, DataTerm::GID},
    {SolverKind::GO, DataTerm::GAA},  {SolverKind::GO, DataTerm::GID},
    {SolverKind::FPA, DataTerm::GAA}, {SolverKind::FPA, DataTerm::GID},
};

SolverConfig bench_solver_config(const BenchConfig& cfg, MethodCell cell) {
    SolverConfig sc = method_defaults(cell.kind, cell.variant);
    sc.edge = cfg.edge;
    sc.gamma = cfg.gamma;
    switch (cell.kind) {
        case SolverKind::LS:
            sc.mu = cell.variant == DataTerm::GID ? cfg.ls_mu_gid : cfg.ls_mu_gaa;
            sc.dt = cfg.ls_dt;
            sc.eps = cfg.ls_eps;
            sc.nu = cfg.ls_nu;
            sc.max_iters = cfg.iters_ls;
            break;
        case SolverKind::GO:
            sc.mu = cfg.go_mu;
            sc.lambda = cfg.go_lambda;
            sc.max_iters = cfg.iters_gcs;
            break;
        case SolverKind::FPA:
            sc.mu = cfg.fpa_mu;
            sc.lambda = cfg.fpa_lambda;
            sc.alpha = cfg.fpa_alpha;
            sc.t_relax = cfg.fpa_t;
            sc.max_iters = cfg.iters_gcs;
            break;
    }
    return sc;
}

}  // namespace

PreparedInput prepare_input(const InputSpec& input) {
    PreparedInput out;
    if (input.scene.has_value()) {
        Scene scene = render_scene(*input.scene);
        SpeckleParams noise;
        noise.looks = input.looks;
        noise.seed = input.seed;
        out.observed = gamma_speckle(scene.clean, noise);
        out.clean = std::move(scene.clean);
        out.truth = std::move(scene.truth);
    } else {
        out.observed = load_pgm(input.image_path);
        if (!input.gt_path.empty()) out.truth = load_mask_pgm(input.gt_path);
    }
    return out;
}

SolverInputs prepare_fields(const IntensityImage& observed, const EdgeParams& edge,
                            const PipelineOptions& pipeline) {
    require_positive(observed, "observed image");

    IntensityImage data = observed;
    if (pipeline.presmooth) {
        // Homomorphic smoothing: average in the log domain, where the
        // multiplicative noise becomes additive and symmetric, then map back.
        const std::vector<double> kernel =
            isef_kernel(pipeline.presmooth_sigma, pipeline.presmooth_kernel);
        for (double& v : data.v) v = std::log(v);
        data = smooth(data, kernel);
        for (double& v : data.v) v = std::exp(v);
    }

    // The edge weight is computed from the despeckled, unit-scaled data: on
    // the raw observation the speckle gradients drown the region boundaries
    // and g loses its discriminating power.
    const double peak = max_value(data);
    IntensityImage unit = data;
    for (double& v : unit.v) v /= peak;

    SolverInputs out;
    out.g = edge_map(unit, edge);
    // Robust contrast stretch for the convex solvers: saturate the brightest
    // percentile so the unit normalization (and with it the phi = f/max
    // initialization) is not dictated by a handful of speckle outliers.
    constexpr double kSaturateQuantile = 0.99;
    std::vector<double> sorted = data.v;
    const auto nth = sorted.begin() +
                     static_cast<std::ptrdiff_t>(kSaturateQuantile * (sorted.size() - 1));
    std::nth_element(sorted.begin(), nth, sorted.end());
    const double clip = *nth;
    out.data_gcs = data;
    for (double& v : out.data_gcs.v) v = std::min(v, clip) / clip;
    out.data_ls = std::move(data);
    return out;
}

SolveResult run_solver(SolverKind kind, const SolverInputs& fields, const SolverConfig& cfg) {
    switch (kind) {
        case SolverKind::LS: return solve_levelset(fields.data_ls, fields.g, cfg);
        case SolverKind::GO: return solve_go(fields.data_gcs, fields.g, cfg);
        case SolverKind::FPA: return solve_fpa(fields.data_gcs, fields.g, cfg);
    }
    throw std::logic_error("unreachable solver kind");
}

RunOutcome run(const RunConfig& cfg) {
    PreparedInput pin = prepare_input(cfg.input);
    SolverInputs fields = prepare_fields(pin.observed, cfg.solver.edge, cfg.pipeline);

    RunOutcome out;
    out.label = method_label(cfg.method, cfg.solver.variant);
    out.solve = run_solver(cfg.method, fields, cfg.solver);

    const IntensityImage& reference = pin.clean.has_value() ? *pin.clean : pin.observed;
    out.eval.pp = pp_uniformity(reference, out.solve.mask);
    if (pin.truth.has_value()) out.eval.dsc = dsc(out.solve.mask, *pin.truth);

    ensure_dir(cfg.output.dir);
    out.mask_path = join_path(cfg.output.dir, cfg.output.mask_name);
    save_mask_pgm(out.solve.mask, out.mask_path);
    out.overlay_path = join_path(cfg.output.dir, cfg.output.overlay_name);
    save_overlay_ppm(pin.observed, out.solve.mask, out.overlay_path);
    return out;
}

std::string write_scene_files(const InputSpec& input, const std::string& dir) {
    if (!input.scene.has_value())
        throw config_error("the scene command needs a synthetic scene in [input]");
    Scene scene = render_scene(*input.scene);
    SpeckleParams noise;
    noise.looks = input.looks;
    noise.seed = input.seed;
    IntensityImage noisy = gamma_speckle(scene.clean, noise);

    ensure_dir(dir);
    save_pgm(scene.clean, join_path(dir, "clean.pgm"));
    save_pgm(noisy, join_path(dir, "noisy.pgm"));
    save_mask_pgm(scene.truth, join_path(dir, "gt.pgm"));
    return dir;
}

std::vector<BenchRow> bench_rows(const BenchConfig& cfg) {
    std::vector<BenchRow> rows;
    for (std::size_t si = 0; si < cfg.scenes.size(); ++si) {
        const auto& [scene_name, spec] = cfg.scenes[si];

        InputSpec input;
        input.scene = spec;
        input.looks = cfg.looks;
        input.seed = cfg.seed + static_cast<std::uint64_t>(si);

        PreparedInput pin;
        std::optional<SolverInputs> fields;
        std::string prep_error;
        try {
            pin = prepare_input(input);
            fields = prepare_fields(pin.observed, cfg.edge, cfg.pipeline);
        } catch (const std::exception& e) {
            prep_error = e.what();
        }

        for (const MethodCell& cell : kGrid) {
            BenchRow row;
            row.method = method_label(cell.kind, cell.variant);
            row.scene = scene_name;
            if (!prep_error.empty()) {
                row.failed = true;
                row.error = prep_error;
                rows.push_back(std::move(row));
                continue;
            }
            try {
                SolveResult res = run_solver(cell.kind, *fields, bench_solver_config(cfg, cell));
                row.iterations = res.report.iterations_run;
                row.seconds = res.report.seconds;
                row.pp = pp_uniformity(*pin.clean, res.mask);
                row.dsc = dsc(res.mask, *pin.truth);
            } catch (const std::exception& e) {
                row.failed = true;
                row.error = e.what();
            }
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

std::string format_rows_table(const std::vector<BenchRow>& rows) {
    const std::vector<std::string> header = {"method", "scene",  "iters",
                                             "seconds", "dsc",   "pp",
                                             "status"};
    std::vector<std::vector<std::string>> cells;
    cells.push_back(header);
    for (const BenchRow& row : rows) {
        std::vector<std::string> line;
        line.push_back(row.method);
        line.push_back(row.scene);
        if (row.failed) {
            line.insert(line.end(), {"--", "--", "--", "--", "FAILED: " + row.error});
        } else {
            line.push_back(std::to_string(row.iterations));
            line.push_back(fmt(row.seconds, 3));
            line.push_back(row.dsc.has_value() ? fmt(*row.dsc, 4) : "--");
            line.push_back(fmt(row.pp, 4));
            line.push_back("ok");
        }
        cells.push_back(std::move(line));
    }

    std::vector<std::size_t> width(header.size(), 0);
    for (const auto& line : cells)
        for (std::size_t c = 0; c < line.size(); ++c)
            width[c] = std::max(width[c], line[c].size());

    std::string out;
    for (const auto& line : cells) {
        for (std::size_t c = 0; c < line.size(); ++c) {
            if (c > 0) out += "  ";
            out += line[c];
            if (c + 1 < line.size()) out.append(width[c] - line[c].size(), ' ');
        }
        out += '\n';
    }
    return out;
}

std::string format_rows_csv(const std::vector<BenchRow>& rows) {
    std::string out = "method,scene,iterations,seconds,dsc,pp\n";
    for (const BenchRow& row : rows) {
        out += row.method + ',' + row.scene + ',';
        if (!row.failed) {
            out += std::to_string(row.iterations) + ',' + fmt(row.seconds, 6) + ',';
            out += (row.dsc.has_value() ? fmt(*row.dsc, 6) : "") + ',' + fmt(row.pp, 6);
        } else {
            out += ",,,";
        }
        out += '\n';
    }
    return out;
}

int bench(const BenchConfig& cfg, std::ostream& out) {
    const std::vector<BenchRow> rows = bench_rows(cfg);
    out << (cfg.format == "csv" ? format_rows_csv(rows) : format_rows_table(rows));

    ensure_dir(cfg.out_dir);
    const std::string csv_path = join_path(cfg.out_dir, "bench.csv");
    std::ofstream csv(csv_path, std::ios::binary | std::ios::trunc);
    if (!csv) throw io_error("cannot open '" + csv_path + "' for writing");
    csv << format_rows_csv(rows);
    if (!csv.good()) throw io_error("failed writing '" + csv_path + "'");

    return static_cast<int>(std::count_if(rows.begin(), rows.end(),
                                          [](const BenchRow& r) { return r.failed; }));
}

}  // namespace sarseg
