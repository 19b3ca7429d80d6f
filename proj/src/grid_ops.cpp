#include "sarseg/grid_ops.hpp"

#include <cmath>
#include <stdexcept>

namespace sarseg {

namespace {

void resize_like(const ScalarField& src, ScalarField& dst) {
    if (!dst.same_shape(src)) dst = ScalarField(src.width, src.height);
}

}  // namespace

void grad_x_into(const ScalarField& u, ScalarField& out) {
    resize_like(u, out);
    const int w = u.width, h = u.height;
    for (int r = 0; r < h; ++r) {
        const double* row = &u.v[static_cast<std::size_t>(r) * w];
        double* orow = &out.v[static_cast<std::size_t>(r) * w];
        for (int c = 0; c + 1 < w; ++c) orow[c] = row[c + 1] - row[c];
        orow[w - 1] = 0.0;  // replicate padding: u(r, w) == u(r, w-1)
    }
}

void grad_y_into(const ScalarField& u, ScalarField& out) {
    resize_like(u, out);
    const int w = u.width, h = u.height;
    for (int r = 0; r + 1 < h; ++r) {
        const double* row = &u.v[static_cast<std::size_t>(r) * w];
        const double* next = row + w;
        double* orow = &out.v[static_cast<std::size_t>(r) * w];
        for (int c = 0; c < w; ++c) orow[c] = next[c] - row[c];
    }
    for (int c = 0; c < w; ++c) out.at(h - 1, c) = 0.0;
}

// Adjoint of the forward difference with a zero last entry:
// row [v0 .. v_{w-1}] maps to [-v0, v0-v1, ..., v_{w-3}-v_{w-2}, v_{w-2}];
// the last input entry never contributes because grad_x zeroes that slot.
void grad_x_adj_into(const ScalarField& v, ScalarField& out) {
    resize_like(v, out);
    const int w = v.width, h = v.height;
    if (w == 1) {
        for (auto& x : out.v) x = 0.0;
        return;
    }
    for (int r = 0; r < h; ++r) {
        const double* row = &v.v[static_cast<std::size_t>(r) * w];
        double* orow = &out.v[static_cast<std::size_t>(r) * w];
        orow[0] = -row[0];
        for (int c = 1; c + 1 < w; ++c) orow[c] = row[c - 1] - row[c];
        orow[w - 1] = row[w - 2];
    }
}

void grad_y_adj_into(const ScalarField& v, ScalarField& out) {
    resize_like(v, out);
    const int w = v.width, h = v.height;
    if (h == 1) {
        for (auto& x : out.v) x = 0.0;
        return;
    }
    for (int c = 0; c < w; ++c) out.at(0, c) = -v.at(0, c);
    for (int r = 1; r + 1 < h; ++r)
        for (int c = 0; c < w; ++c) out.at(r, c) = v.at(r - 1, c) - v.at(r, c);
    for (int c = 0; c < w; ++c) out.at(h - 1, c) = v.at(h - 2, c);
}

void laplacian_into(const ScalarField& u, ScalarField& out) {
    resize_like(u, out);
    const int w = u.width, h = u.height;
    for (int r = 0; r < h; ++r) {
        for (int c = 0; c < w; ++c) {
            const double center = u.at(r, c);
            const double up = r > 0 ? u.at(r - 1, c) : center;
            const double down = r + 1 < h ? u.at(r + 1, c) : center;
            const double left = c > 0 ? u.at(r, c - 1) : center;
            const double right = c + 1 < w ? u.at(r, c + 1) : center;
            out.at(r, c) = up + down + left + right - 4.0 * center;
        }
    }
}

ScalarField grad_x(const ScalarField& u) {
    ScalarField out;
    grad_x_into(u, out);
    return out;
}

ScalarField grad_y(const ScalarField& u) {
    ScalarField out;
    grad_y_into(u, out);
    return out;
}

ScalarField grad_x_adj(const ScalarField& v) {
    ScalarField out;
    grad_x_adj_into(v, out);
    return out;
}

ScalarField grad_y_adj(const ScalarField& v) {
    ScalarField out;
    grad_y_adj_into(v, out);
    return out;
}

ScalarField laplacian(const ScalarField& u) {
    ScalarField out;
    laplacian_into(u, out);
    return out;
}

double shrink(double x, double t) {
    if (t < 0.0) throw std::invalid_argument("shrink: threshold must be >= 0");
    const double m = std::fabs(x) - t;
    if (m <= 0.0) return 0.0;
    return x > 0.0 ? m : -m;
}

ScalarField shrink(const ScalarField& x, double t) {
    if (t < 0.0) throw std::invalid_argument("shrink: threshold must be >= 0");
    ScalarField out(x.width, x.height);
    for (std::size_t i = 0; i < x.size(); ++i) out.v[i] = shrink(x.v[i], t);
    return out;
}

ScalarField shrink(const ScalarField& x, const ScalarField& t) {
    if (!x.same_shape(t)) throw std::invalid_argument("shrink: threshold field shape mismatch");
    ScalarField out(x.width, x.height);
    for (std::size_t i = 0; i < x.size(); ++i) out.v[i] = shrink(x.v[i], t.v[i]);
    return out;
}

double inner(const ScalarField& a, const ScalarField& b) {
    if (!a.same_shape(b)) throw std::invalid_argument("inner: shape mismatch");
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a.v[i] * b.v[i];
    return s;
}

}  // namespace sarseg
