#include "sarseg/solvers.hpp"

#include <chrono>
#include <cmath>
#include <stdexcept>
#include <string>

#include "sarseg/errors.hpp"
#include "sarseg/grid_ops.hpp"

namespace sarseg {

namespace {

using clock_type = std::chrono::steady_clock;

double seconds_since(clock_type::time_point t0) {
    return std::chrono::duration<double>(clock_type::now() - t0).count();
}

void check_shared(const IntensityImage& f, const ScalarField& g, const SolverConfig& cfg,
                  const char* name) {
    if (f.width < 1 || f.height < 1) throw config_error(std::string(name) + ": empty image");
    if (!f.same_shape(g)) throw config_error(std::string(name) + ": edge map shape mismatch");
    require_positive(f, name);
    if (!all_finite(g)) throw config_error(std::string(name) + ": edge map must be finite");
    if (!(cfg.mu > 0.0)) throw config_error(std::string(name) + ": mu must be > 0");
    if (cfg.max_iters < 1) throw config_error(std::string(name) + ": max_iters must be >= 1");
    if (cfg.tol < 0.0) throw config_error(std::string(name) + ": tol must be >= 0");
    if (cfg.fixed_constants &&
        (cfg.fixed_constants->c1 <= 0.0 || cfg.fixed_constants->c2 <= 0.0))
        throw config_error(std::string(name) + ": fixed constants must be > 0");
}

void check_gamma(double gamma, const char* name) {
    if (!(gamma > 0.0 && gamma < 1.0))
        throw config_error(std::string(name) + ": gamma must lie strictly inside (0, 1)");
}

void guard_finite(const ScalarField& phi, int iteration, const char* name) {
    if (!all_finite(phi))
        throw solver_error(std::string(name) + ": non-finite phi at iteration " +
                           std::to_string(iteration));
}

double relative_change(const ScalarField& prev, const ScalarField& cur) {
    double dn = 0.0, pn = 0.0;
    for (std::size_t i = 0; i < prev.size(); ++i) {
        const double d = cur.v[i] - prev.v[i];
        dn += d * d;
        pn += prev.v[i] * prev.v[i];
    }
    return std::sqrt(dn) / std::max(std::sqrt(pn), 1e-30);
}

ScalarField unit_scaled(const IntensityImage& f) {
    ScalarField phi(f.width, f.height);
    const double m = max_value(f);
    for (std::size_t i = 0; i < f.size(); ++i) phi.v[i] = f.v[i] / m;
    return phi;
}

inline double clamp01(double x) { return x < 0.0 ? 0.0 : (x > 1.0 ? 1.0 : x); }

inline double ddx_central(const ScalarField& u, int r, int c) {
    return (u.at_clamped(r, c + 1) - u.at_clamped(r, c - 1)) / 2.0;
}

inline double ddy_central(const ScalarField& u, int r, int c) {
    return (u.at_clamped(r + 1, c) - u.at_clamped(r - 1, c)) / 2.0;
}

}  // namespace

SegmentationMask threshold(const ScalarField& phi, double gamma) {
    if (!(gamma > 0.0 && gamma < 1.0))
        throw std::invalid_argument("threshold: gamma must lie strictly inside (0, 1)");
    SegmentationMask m(phi.width, phi.height);
    for (std::size_t i = 0; i < phi.size(); ++i) m.on[i] = phi.v[i] > gamma ? 1 : 0;
    return m;
}

SolveResult solve_levelset(const IntensityImage& f, const ScalarField& g, const SolverConfig& cfg) {
    check_shared(f, g, cfg, "solve_levelset");
    if (!(cfg.dt > 0.0)) throw config_error("solve_levelset: dt must be > 0");
    if (!(cfg.eps > 0.0)) throw config_error("solve_levelset: eps must be > 0");
    if (cfg.nu < 0.0) throw config_error("solve_levelset: nu must be >= 0");

    const int w = f.width, h = f.height;

    // Binary step seed: +1 inside a centred rectangle spanning 60% of each
    // dimension, -1 outside.
    ScalarField phi(w, h, -1.0);
    {
        const int r0 = static_cast<int>(std::lround(0.2 * (h - 1)));
        const int r1 = static_cast<int>(std::lround(0.8 * (h - 1)));
        const int c0 = static_cast<int>(std::lround(0.2 * (w - 1)));
        const int c1 = static_cast<int>(std::lround(0.8 * (w - 1)));
        for (int r = r0; r <= r1; ++r)
            for (int c = c0; c <= c1; ++c) phi.at(r, c) = 1.0;
    }

    ScalarField phix(w, h), phiy(w, h), px(w, h), py(w, h), qx(w, h), qy(w, h), lap(w, h);
    ScalarField prev;
    SolveReport rep;
    RegionConstants consts;

    const auto t0 = clock_type::now();
    for (int k = 0; k < cfg.max_iters; ++k) {
        consts = cfg.fixed_constants ? *cfg.fixed_constants
                                     : region_constants_smooth(f, phi, cfg.eps);
        const ScalarField eta = eta_field(f, consts, cfg.variant);

        if (cfg.tol > 0.0) prev = phi;

        for (int r = 0; r < h; ++r) {
            for (int c = 0; c < w; ++c) {
                const double dx = ddx_central(phi, r, c);
                const double dy = ddy_central(phi, r, c);
                const double mag = std::sqrt(dx * dx + dy * dy + 1e-8);
                px.at(r, c) = g.at(r, c) * dx / mag;
                py.at(r, c) = g.at(r, c) * dy / mag;
                qx.at(r, c) = dx / mag;
                qy.at(r, c) = dy / mag;
            }
        }
        laplacian_into(phi, lap);
        for (int r = 0; r < h; ++r) {
            for (int c = 0; c < w; ++c) {
                const double div_g = ddx_central(px, r, c) + ddy_central(py, r, c);
                const double curv = ddx_central(qx, r, c) + ddy_central(qy, r, c);
                const double dl = delta_eps(phi.at(r, c), cfg.eps);
                phi.at(r, c) += cfg.dt * (dl * div_g - cfg.mu * dl * eta.at(r, c) +
                                          cfg.nu * (lap.at(r, c) - curv));
            }
        }
        guard_finite(phi, k, "solve_levelset");

        rep.energy_trace.push_back(
            gid_energy(phi, f, consts, g, {cfg.mu, cfg.nu, cfg.eps}));
        rep.iterations_run = k + 1;
        if (cfg.tol > 0.0 && relative_change(prev, phi) < cfg.tol) break;
    }
    rep.seconds = seconds_since(t0);
    rep.final_constants = consts;

    SegmentationMask mask(w, h);
    for (std::size_t i = 0; i < phi.size(); ++i) mask.on[i] = phi.v[i] > 0.0 ? 1 : 0;
    return {std::move(phi), std::move(mask), std::move(rep)};
}

SolveResult solve_go(const IntensityImage& f, const ScalarField& g, const SolverConfig& cfg) {
    check_shared(f, g, cfg, "solve_go");
    if (!(cfg.lambda > 0.0)) throw config_error("solve_go: lambda must be > 0");
    if (cfg.gs_sweeps < 1) throw config_error("solve_go: gs_sweeps must be >= 1");
    check_gamma(cfg.gamma, "solve_go");

    const int w = f.width, h = f.height;
    ScalarField phi = unit_scaled(f);
    ScalarField dx(w, h), dy(w, h), bx(w, h), by(w, h);
    ScalarField vx(w, h), vy(w, h), ax(w, h), ay(w, h), gx(w, h), gy(w, h);
    ScalarField prev;
    SolveReport rep;
    RegionConstants consts;
    const double mu_over_lambda = cfg.mu / cfg.lambda;

    const auto t0 = clock_type::now();
    for (int k = 0; k < cfg.max_iters; ++k) {
        consts = cfg.fixed_constants ? *cfg.fixed_constants
                                     : region_constants_mask(f, threshold(phi, cfg.gamma));
        const ScalarField eta = eta_field(f, consts, cfg.variant);

        if (cfg.tol > 0.0) prev = phi;

        for (int sweep = 0; sweep < cfg.gs_sweeps; ++sweep) {
            // alpha = grad_x_adj(d_x - b_x) + grad_y_adj(d_y - b_y), held
            // fixed over the sweep.
            for (std::size_t i = 0; i < vx.size(); ++i) {
                vx.v[i] = dx.v[i] - bx.v[i];
                vy.v[i] = dy.v[i] - by.v[i];
            }
            grad_x_adj_into(vx, ax);
            grad_y_adj_into(vy, ay);

            // In-place raster sweep: up/left neighbours are already updated,
            // out-of-grid neighbours replicate the centre value.
            for (int r = 0; r < h; ++r) {
                for (int c = 0; c < w; ++c) {
                    const double center = phi.at(r, c);
                    const double up = r > 0 ? phi.at(r - 1, c) : center;
                    const double down = r + 1 < h ? phi.at(r + 1, c) : center;
                    const double left = c > 0 ? phi.at(r, c - 1) : center;
                    const double right = c + 1 < w ? phi.at(r, c + 1) : center;
                    const double beta = 0.25 * (up + down + left + right -
                                                mu_over_lambda * eta.at(r, c) +
                                                ax.at(r, c) + ay.at(r, c));
                    phi.at(r, c) = clamp01(beta);
                }
            }
        }

        grad_x_into(phi, gx);
        grad_y_into(phi, gy);
        for (std::size_t i = 0; i < gx.size(); ++i) {
            const double tx = gx.v[i] + bx.v[i];
            const double ty = gy.v[i] + by.v[i];
            const double thr = g.v[i] / cfg.lambda;
            dx.v[i] = shrink(tx, thr);
            dy.v[i] = shrink(ty, thr);
            bx.v[i] = tx - dx.v[i];  // b + grad(phi) - d
            by.v[i] = ty - dy.v[i];
        }
        guard_finite(phi, k, "solve_go");

        rep.energy_trace.push_back(gcs_energy(phi, g, eta, cfg.mu));
        rep.iterations_run = k + 1;
        if (cfg.tol > 0.0 && relative_change(prev, phi) < cfg.tol) break;
    }
    rep.seconds = seconds_since(t0);
    rep.final_constants = consts;

    SegmentationMask mask = threshold(phi, cfg.gamma);
    return {std::move(phi), std::move(mask), std::move(rep)};
}

SolveResult solve_fpa(const IntensityImage& f, const ScalarField& g, const SolverConfig& cfg) {
    check_shared(f, g, cfg, "solve_fpa");
    if (!(cfg.lambda > 0.0)) throw config_error("solve_fpa: lambda must be > 0");
    if (!(cfg.alpha > 0.0)) throw config_error("solve_fpa: alpha must be > 0");
    if (cfg.lambda / cfg.alpha > 0.25)
        throw config_error("solve_fpa: stability requires lambda/alpha <= 0.25");
    if (!(cfg.t_relax > 0.0 && cfg.t_relax < 1.0))
        throw config_error("solve_fpa: t_relax must lie strictly inside (0, 1)");
    check_gamma(cfg.gamma, "solve_fpa");

    const int w = f.width, h = f.height;
    ScalarField phi = unit_scaled(f);
    ScalarField bx(w, h), by(w, h), gx(w, h), gy(w, h), ax(w, h), ay(w, h);
    ScalarField prev;
    SolveReport rep;

    RegionConstants consts = cfg.fixed_constants
                                 ? *cfg.fixed_constants
                                 : region_constants_mask(f, threshold(phi, cfg.gamma));
    ScalarField eta = eta_field(f, consts, cfg.variant);

    const double t = cfg.t_relax;
    const double mu_over_alpha = cfg.mu / cfg.alpha;
    const double lambda_over_alpha = cfg.lambda / cfg.alpha;

    const auto t0 = clock_type::now();
    for (int k = 0; k < cfg.max_iters; ++k) {
        if (cfg.tol > 0.0) prev = phi;

        // Relaxed dual update: b <- t*b + (1-t) * (I - shrink)(grad(phi) + b).
        // (I - shrink) with threshold g/lambda is the pointwise projection
        // onto [-g/lambda, g/lambda].
        grad_x_into(phi, gx);
        grad_y_into(phi, gy);
        for (std::size_t i = 0; i < bx.size(); ++i) {
            const double thr = g.v[i] / cfg.lambda;
            const double sx = gx.v[i] + bx.v[i];
            const double sy = gy.v[i] + by.v[i];
            const double px = sx < -thr ? -thr : (sx > thr ? thr : sx);
            const double py = sy < -thr ? -thr : (sy > thr ? thr : sy);
            bx.v[i] = t * bx.v[i] + (1.0 - t) * px;
            by.v[i] = t * by.v[i] + (1.0 - t) * py;
        }

        grad_x_adj_into(bx, ax);
        grad_y_adj_into(by, ay);
        for (std::size_t i = 0; i < phi.size(); ++i) {
            phi.v[i] = clamp01(phi.v[i] - mu_over_alpha * eta.v[i] -
                               lambda_over_alpha * (ax.v[i] + ay.v[i]));
        }
        guard_finite(phi, k, "solve_fpa");

        if (!cfg.fixed_constants) {
            consts = region_constants_mask(f, threshold(phi, cfg.gamma));
            eta = eta_field(f, consts, cfg.variant);
        }
        rep.energy_trace.push_back(gcs_energy(phi, g, eta, cfg.mu));
        rep.iterations_run = k + 1;
        if (cfg.tol > 0.0 && relative_change(prev, phi) < cfg.tol) break;
    }
    rep.seconds = seconds_since(t0);
    rep.final_constants = consts;

    SegmentationMask mask = threshold(phi, cfg.gamma);
    return {std::move(phi), std::move(mask), std::move(rep)};
}

SolveResult solve_levelset(const IntensityImage& f, const SolverConfig& cfg) {
    return solve_levelset(f, edge_map(f, cfg.edge), cfg);
}

SolveResult solve_go(const IntensityImage& f, const SolverConfig& cfg) {
    return solve_go(f, edge_map(f, cfg.edge), cfg);
}

SolveResult solve_fpa(const IntensityImage& f, const SolverConfig& cfg) {
    return solve_fpa(f, edge_map(f, cfg.edge), cfg);
}

}  // namespace sarseg
