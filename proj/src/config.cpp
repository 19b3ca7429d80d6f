#include "sarseg/config.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>
#include <stdexcept>

#include "sarseg/errors.hpp"

namespace sarseg {

namespace {

std::string trim(const std::string& s) {
    std::size_t b = 0;
    std::size_t e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

std::string fmt_double(double v) {
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    if (ec != std::errc{}) throw std::runtime_error("number formatting failed");
    return std::string(buf, end);
}

/// Typed access to one section with strict unknown-key detection.
class SectionReader {
public:
    SectionReader(const ConfigDoc& doc, std::string name)
        : section_(doc.find(name)), name_(std::move(name)) {}

    bool present() const { return section_ != nullptr; }

    bool has(const std::string& key) const {
        return section_ != nullptr && section_->find(key) != nullptr;
    }

    std::string get_string(const std::string& key, const std::string& fallback) {
        const std::string* v = lookup(key);
        return v != nullptr ? *v : fallback;
    }

    std::string require_string(const std::string& key) {
        const std::string* v = lookup(key);
        if (v == nullptr)
            throw config_error("missing required key '" + key + "' in [" + name_ + "]");
        return *v;
    }

    double get_double(const std::string& key, double fallback) {
        const std::string* v = lookup(key);
        if (v == nullptr) return fallback;
        return parse_double(key, *v);
    }

    int get_int(const std::string& key, int fallback) {
        const std::string* v = lookup(key);
        if (v == nullptr) return fallback;
        return parse_int(key, *v);
    }

    std::uint64_t get_uint64(const std::string& key, std::uint64_t fallback) {
        const std::string* v = lookup(key);
        if (v == nullptr) return fallback;
        errno = 0;
        char* end = nullptr;
        unsigned long long parsed = std::strtoull(v->c_str(), &end, 10);
        if (errno != 0 || end == v->c_str() || *end != '\0' || v->front() == '-')
            throw config_error(bad_value(key, *v, "unsigned integer"));
        return static_cast<std::uint64_t>(parsed);
    }

    bool get_bool(const std::string& key, bool fallback) {
        const std::string* v = lookup(key);
        if (v == nullptr) return fallback;
        if (*v == "true" || *v == "1" || *v == "on") return true;
        if (*v == "false" || *v == "0" || *v == "off") return false;
        throw config_error(bad_value(key, *v, "boolean (true/false)"));
    }

    std::vector<double> get_double_list(const std::string& key) {
        const std::string* v = lookup(key);
        std::vector<double> out;
        if (v == nullptr) return out;
        std::stringstream ss(*v);
        std::string item;
        while (std::getline(ss, item, ',')) {
            item = trim(item);
            if (item.empty())
                throw config_error(bad_value(key, *v, "comma-separated numbers"));
            out.push_back(parse_double(key, item));
        }
        return out;
    }

    /// Throws if the section contains keys never consumed by a getter.
    void finish() const {
        if (section_ == nullptr) return;
        for (const auto& [key, value] : section_->entries) {
            if (!seen_.contains(key))
                throw config_error("unknown key '" + key + "' in [" + name_ + "]");
        }
    }

private:
    const std::string* lookup(const std::string& key) {
        seen_.insert(key);
        return section_ != nullptr ? section_->find(key) : nullptr;
    }

    double parse_double(const std::string& key, const std::string& text) const {
        errno = 0;
        char* end = nullptr;
        double parsed = std::strtod(text.c_str(), &end);
        if (errno != 0 || end == text.c_str() || *end != '\0')
            throw config_error(bad_value(key, text, "number"));
        return parsed;
    }

    int parse_int(const std::string& key, const std::string& text) const {
        errno = 0;
        char* end = nullptr;
        long parsed = std::strtol(text.c_str(), &end, 10);
        if (errno != 0 || end == text.c_str() || *end != '\0' ||
            parsed < std::numeric_limits<int>::min() || parsed > std::numeric_limits<int>::max())
            throw config_error(bad_value(key, text, "integer"));
        return static_cast<int>(parsed);
    }

    std::string bad_value(const std::string& key, const std::string& text,
                          const std::string& want) const {
        return "invalid value '" + text + "' for key '" + key + "' in [" + name_ +
               "] (expected " + want + ")";
    }

    const ConfigDoc::Section* section_;
    std::string name_;
    mutable std::set<std::string> seen_;
};

std::string shape_to_string(SceneShape s) {
    switch (s) {
        case SceneShape::disk: return "disk";
        case SceneShape::ring: return "ring";
        case SceneShape::two_blobs: return "two_blobs";
        case SceneShape::rectangle_with_hole: return "rectangle_with_hole";
    }
    throw std::logic_error("unreachable scene shape");
}

SceneShape shape_from_string(const std::string& s) {
    if (s == "disk") return SceneShape::disk;
    if (s == "ring") return SceneShape::ring;
    if (s == "two_blobs") return SceneShape::two_blobs;
    if (s == "rectangle_with_hole") return SceneShape::rectangle_with_hole;
    throw config_error("unknown scene shape '" + s +
                       "' (want disk, ring, two_blobs, or rectangle_with_hole)");
}

SceneSpec read_scene_spec(SectionReader& sec, const std::string& shape_key) {
    SceneSpec spec;
    spec.shape = shape_from_string(sec.require_string(shape_key));
    spec.width = sec.get_int("width", 128);
    spec.height = sec.get_int("height", 128);
    spec.foreground_level = sec.get_double("foreground", spec.foreground_level);
    spec.background_level = sec.get_double("background", spec.background_level);
    spec.geometry = sec.get_double_list("geometry");
    return spec;
}

void append_scene_spec(ConfigDoc::Section& sec, const SceneSpec& spec,
                       const std::string& shape_key) {
    sec.entries.emplace_back(shape_key, shape_to_string(spec.shape));
    sec.entries.emplace_back("width", std::to_string(spec.width));
    sec.entries.emplace_back("height", std::to_string(spec.height));
    sec.entries.emplace_back("foreground", fmt_double(spec.foreground_level));
    sec.entries.emplace_back("background", fmt_double(spec.background_level));
    if (!spec.geometry.empty()) {
        std::string list;
        for (std::size_t i = 0; i < spec.geometry.size(); ++i) {
            if (i > 0) list += ", ";
            list += fmt_double(spec.geometry[i]);
        }
        sec.entries.emplace_back("geometry", list);
    }
}

EdgeParams read_edge(const ConfigDoc& doc) {
    SectionReader sec(doc, "edge");
    EdgeParams edge;
    edge.beta = sec.get_double("beta", edge.beta);
    edge.sigma = sec.get_double("sigma", edge.sigma);
    edge.kernel_size = sec.get_int("kernel", edge.kernel_size);
    sec.finish();
    return edge;
}

PipelineOptions read_pipeline(const ConfigDoc& doc) {
    SectionReader sec(doc, "pipeline");
    PipelineOptions pipe;
    pipe.presmooth = sec.get_bool("presmooth", pipe.presmooth);
    pipe.presmooth_sigma = sec.get_double("presmooth_sigma", pipe.presmooth_sigma);
    pipe.presmooth_kernel = sec.get_int("presmooth_kernel", pipe.presmooth_kernel);
    sec.finish();
    return pipe;
}

void check_known_sections(const ConfigDoc& doc, const std::set<std::string>& known,
                          bool allow_scene_sections) {
    for (const auto& section : doc.sections) {
        if (known.contains(section.name)) continue;
        if (allow_scene_sections && section.name.starts_with("scene ")) continue;
        throw config_error("unknown section [" + section.name + "]");
    }
}

}  // namespace

const std::string* ConfigDoc::Section::find(const std::string& key) const {
    for (const auto& [k, v] : entries)
        if (k == key) return &v;
    return nullptr;
}

const ConfigDoc::Section* ConfigDoc::find(const std::string& name) const {
    for (const auto& section : sections)
        if (section.name == name) return &section;
    return nullptr;
}

ConfigDoc::Section& ConfigDoc::get_or_add(const std::string& name) {
    for (auto& section : sections)
        if (section.name == name) return section;
    sections.push_back(Section{name, {}});
    return sections.back();
}

ConfigDoc ConfigDoc::parse_text(const std::string& text, const std::string& origin) {
    ConfigDoc doc;
    Section* current = nullptr;
    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    auto fail = [&](const std::string& what) {
        throw config_error(origin + ":" + std::to_string(lineno) + ": " + what);
    };
    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = trim(raw);
        if (line.empty() || line.front() == '#' || line.front() == ';') continue;
        if (line.front() == '[') {
            if (line.back() != ']') fail("section header missing closing ']'");
            std::string name = trim(line.substr(1, line.size() - 2));
            if (name.empty()) fail("empty section name");
            if (doc.find(name) != nullptr) fail("duplicate section [" + name + "]");
            doc.sections.push_back(Section{name, {}});
            current = &doc.sections.back();
            continue;
        }
        std::size_t eq = line.find('=');
        if (eq == std::string::npos) fail("expected 'key = value' or '[section]'");
        if (current == nullptr) fail("key/value pair before any [section] header");
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        if (key.empty()) fail("empty key");
        if (current->find(key) != nullptr)
            fail("duplicate key '" + key + "' in [" + current->name + "]");
        current->entries.emplace_back(std::move(key), std::move(value));
    }
    return doc;
}

ConfigDoc ConfigDoc::parse_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw io_error("cannot open config file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    if (!in.good() && !in.eof()) throw io_error("failed reading config file '" + path + "'");
    return parse_text(buf.str(), path);
}

std::string ConfigDoc::emit() const {
    std::string out;
    for (std::size_t i = 0; i < sections.size(); ++i) {
        if (i > 0) out += '\n';
        out += '[' + sections[i].name + "]\n";
        for (const auto& [key, value] : sections[i].entries)
            out += key + " = " + value + '\n';
    }
    return out;
}

std::string to_string(SolverKind k) {
    switch (k) {
        case SolverKind::LS: return "ls";
        case SolverKind::GO: return "go";
        case SolverKind::FPA: return "fpa";
    }
    throw std::logic_error("unreachable solver kind");
}

std::string to_string(DataTerm v) {
    return v == DataTerm::GID ? "gid" : "gaa";
}

SolverKind solver_kind_from_string(const std::string& s) {
    if (s == "ls") return SolverKind::LS;
    if (s == "go") return SolverKind::GO;
    if (s == "fpa") return SolverKind::FPA;
    throw config_error("unknown method '" + s + "' (want ls, go, or fpa)");
}

DataTerm data_term_from_string(const std::string& s) {
    if (s == "gid") return DataTerm::GID;
    if (s == "gaa") return DataTerm::GAA;
    throw config_error("unknown data-term variant '" + s + "' (want gid or gaa)");
}

SolverConfig method_defaults(SolverKind kind, DataTerm variant) {
    SolverConfig cfg;
    cfg.variant = variant;
    switch (kind) {
        case SolverKind::LS:
            cfg.mu = variant == DataTerm::GID ? 3.0 : 255.0;
            cfg.dt = 0.1;
            cfg.eps = 1.0;
            cfg.nu = 1.0;
            cfg.max_iters = 20;
            break;
        case SolverKind::GO:
            cfg.mu = 5.0;
            cfg.lambda = 0.01;
            cfg.gamma = 0.5;
            cfg.max_iters = 10;
            break;
        case SolverKind::FPA:
            cfg.mu = 5.0;
            cfg.lambda = 1.0;
            cfg.alpha = 10.0;
            cfg.t_relax = 1e-5;
            cfg.gamma = 0.5;
            cfg.max_iters = 10;
            break;
    }
    return cfg;
}

std::string method_label(SolverKind kind, DataTerm variant) {
    std::string base = variant == DataTerm::GID ? "GID" : "GAA";
    switch (kind) {
        case SolverKind::LS: return base;
        case SolverKind::GO: return base + "+GO";
        case SolverKind::FPA: return base + "+FPA";
    }
    throw std::logic_error("unreachable solver kind");
}

RunConfig parse_run_config(const ConfigDoc& doc) {
    check_known_sections(doc, {"input", "solver", "edge", "pipeline", "output"},
                         /*allow_scene_sections=*/false);

    RunConfig cfg;

    SectionReader input(doc, "input");
    if (!input.present()) throw config_error("missing required section [input]");
    const bool has_image = input.has("image");
    const bool has_scene = input.has("scene");
    if (has_image == has_scene)
        throw config_error("[input] needs exactly one of 'image' or 'scene'");
    if (has_image) {
        cfg.input.image_path = input.require_string("image");
    } else {
        cfg.input.scene = read_scene_spec(input, "scene");
    }
    cfg.input.looks = input.get_int("looks", cfg.input.looks);
    cfg.input.seed = input.get_uint64("seed", cfg.input.seed);
    cfg.input.gt_path = input.get_string("gt", cfg.input.gt_path);
    input.finish();

    SectionReader solver(doc, "solver");
    cfg.method = solver_kind_from_string(solver.get_string("method", "fpa"));
    DataTerm variant = data_term_from_string(solver.get_string("variant", "gid"));
    cfg.solver = method_defaults(cfg.method, variant);
    cfg.solver.mu = solver.get_double("mu", cfg.solver.mu);
    cfg.solver.lambda = solver.get_double("lambda", cfg.solver.lambda);
    cfg.solver.alpha = solver.get_double("alpha", cfg.solver.alpha);
    cfg.solver.t_relax = solver.get_double("trelax", cfg.solver.t_relax);
    cfg.solver.gamma = solver.get_double("gamma", cfg.solver.gamma);
    cfg.solver.nu = solver.get_double("nu", cfg.solver.nu);
    cfg.solver.eps = solver.get_double("eps", cfg.solver.eps);
    cfg.solver.dt = solver.get_double("dt", cfg.solver.dt);
    cfg.solver.max_iters = solver.get_int("max_iters", cfg.solver.max_iters);
    cfg.solver.tol = solver.get_double("tol", cfg.solver.tol);
    cfg.solver.gs_sweeps = solver.get_int("gs_sweeps", cfg.solver.gs_sweeps);
    solver.finish();

    cfg.solver.edge = read_edge(doc);
    cfg.pipeline = read_pipeline(doc);

    SectionReader output(doc, "output");
    cfg.output.dir = output.get_string("dir", cfg.output.dir);
    cfg.output.mask_name = output.get_string("mask", cfg.output.mask_name);
    cfg.output.overlay_name = output.get_string("overlay", cfg.output.overlay_name);
    output.finish();

    return cfg;
}

ConfigDoc emit_run_config(const RunConfig& cfg) {
    ConfigDoc doc;

    auto& input = doc.get_or_add("input");
    if (cfg.input.scene.has_value()) {
        append_scene_spec(input, *cfg.input.scene, "scene");
    } else {
        input.entries.emplace_back("image", cfg.input.image_path);
    }
    input.entries.emplace_back("looks", std::to_string(cfg.input.looks));
    input.entries.emplace_back("seed", std::to_string(cfg.input.seed));
    if (!cfg.input.gt_path.empty()) input.entries.emplace_back("gt", cfg.input.gt_path);

    auto& solver = doc.get_or_add("solver");
    solver.entries.emplace_back("method", to_string(cfg.method));
    solver.entries.emplace_back("variant", to_string(cfg.solver.variant));
    solver.entries.emplace_back("mu", fmt_double(cfg.solver.mu));
    solver.entries.emplace_back("lambda", fmt_double(cfg.solver.lambda));
    solver.entries.emplace_back("alpha", fmt_double(cfg.solver.alpha));
    solver.entries.emplace_back("trelax", fmt_double(cfg.solver.t_relax));
    solver.entries.emplace_back("gamma", fmt_double(cfg.solver.gamma));
    solver.entries.emplace_back("nu", fmt_double(cfg.solver.nu));
    solver.entries.emplace_back("eps", fmt_double(cfg.solver.eps));
    solver.entries.emplace_back("dt", fmt_double(cfg.solver.dt));
    solver.entries.emplace_back("max_iters", std::to_string(cfg.solver.max_iters));
    solver.entries.emplace_back("tol", fmt_double(cfg.solver.tol));
    solver.entries.emplace_back("gs_sweeps", std::to_string(cfg.solver.gs_sweeps));

    auto& edge = doc.get_or_add("edge");
    edge.entries.emplace_back("beta", fmt_double(cfg.solver.edge.beta));
    edge.entries.emplace_back("sigma", fmt_double(cfg.solver.edge.sigma));
    edge.entries.emplace_back("kernel", std::to_string(cfg.solver.edge.kernel_size));

    auto& pipeline = doc.get_or_add("pipeline");
    pipeline.entries.emplace_back("presmooth", cfg.pipeline.presmooth ? "true" : "false");
    pipeline.entries.emplace_back("presmooth_sigma", fmt_double(cfg.pipeline.presmooth_sigma));
    pipeline.entries.emplace_back("presmooth_kernel",
                                  std::to_string(cfg.pipeline.presmooth_kernel));

    auto& output = doc.get_or_add("output");
    output.entries.emplace_back("dir", cfg.output.dir);
    output.entries.emplace_back("mask", cfg.output.mask_name);
    output.entries.emplace_back("overlay", cfg.output.overlay_name);

    return doc;
}

RunConfig load_run_config(const std::string& path) {
    return parse_run_config(ConfigDoc::parse_file(path));
}

BenchConfig parse_bench_config(const ConfigDoc& doc) {
    check_known_sections(doc, {"bench", "ls", "go", "fpa", "edge", "pipeline"},
                         /*allow_scene_sections=*/true);

    BenchConfig cfg;

    SectionReader bench(doc, "bench");
    cfg.looks = bench.get_int("looks", cfg.looks);
    cfg.seed = bench.get_uint64("seed", cfg.seed);
    cfg.iters_ls = bench.get_int("iters_ls", cfg.iters_ls);
    cfg.iters_gcs = bench.get_int("iters_gcs", cfg.iters_gcs);
    cfg.format = bench.get_string("format", cfg.format);
    cfg.out_dir = bench.get_string("out", cfg.out_dir);
    cfg.gamma = bench.get_double("gamma", cfg.gamma);
    bench.finish();
    if (cfg.format != "table" && cfg.format != "csv")
        throw config_error("unknown bench format '" + cfg.format + "' (want table or csv)");

    for (const auto& section : doc.sections) {
        if (!section.name.starts_with("scene ")) continue;
        std::string name = trim(section.name.substr(6));
        if (name.empty()) throw config_error("scene section needs a name: [scene <name>]");
        SectionReader sec(doc, section.name);
        SceneSpec spec = read_scene_spec(sec, "shape");
        sec.finish();
        cfg.scenes.emplace_back(name, spec);
    }
    if (cfg.scenes.empty())
        throw config_error("benchmark config needs at least one [scene <name>] section");

    SectionReader ls(doc, "ls");
    cfg.ls_mu_gid = ls.get_double("mu_gid", cfg.ls_mu_gid);
    cfg.ls_mu_gaa = ls.get_double("mu_gaa", cfg.ls_mu_gaa);
    cfg.ls_dt = ls.get_double("dt", cfg.ls_dt);
    cfg.ls_eps = ls.get_double("eps", cfg.ls_eps);
    cfg.ls_nu = ls.get_double("nu", cfg.ls_nu);
    ls.finish();

    SectionReader go(doc, "go");
    cfg.go_mu = go.get_double("mu", cfg.go_mu);
    cfg.go_lambda = go.get_double("lambda", cfg.go_lambda);
    go.finish();

    SectionReader fpa(doc, "fpa");
    cfg.fpa_mu = fpa.get_double("mu", cfg.fpa_mu);
    cfg.fpa_lambda = fpa.get_double("lambda", cfg.fpa_lambda);
    cfg.fpa_alpha = fpa.get_double("alpha", cfg.fpa_alpha);
    cfg.fpa_t = fpa.get_double("trelax", cfg.fpa_t);
    fpa.finish();

    cfg.edge = read_edge(doc);
    cfg.pipeline = read_pipeline(doc);
    return cfg;
}

BenchConfig load_bench_config(const std::string& path) {
    return parse_bench_config(ConfigDoc::parse_file(path));
}

}  // namespace sarseg
