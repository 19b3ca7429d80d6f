// Discrete differential operators shared by all solvers.
//
// grad_x / grad_y are forward differences with replicate padding, so the
// last column / row of the result is exactly zero.  grad_x_adj / grad_y_adj
// are their exact adjoints: <grad_x(u), v> == <u, grad_x_adj(v)> holds to
// rounding error on every grid shape, including degenerate 1xN and Nx1.
#pragma once

#include "sarseg/field.hpp"

namespace sarseg {

ScalarField grad_x(const ScalarField& u);
ScalarField grad_y(const ScalarField& u);
ScalarField grad_x_adj(const ScalarField& v);
ScalarField grad_y_adj(const ScalarField& v);

/// 5-point Laplacian with replicate padding; equals -(grad_x_adj(grad_x(u))
/// + grad_y_adj(grad_y(u))).
ScalarField laplacian(const ScalarField& u);

/// Soft threshold sgn(x) * max(|x| - t, 0). Negative t is a contract error.
double shrink(double x, double t);
ScalarField shrink(const ScalarField& x, double t);
/// Per-pixel threshold variant for the edge-weighted TV norm.
ScalarField shrink(const ScalarField& x, const ScalarField& t);

double inner(const ScalarField& a, const ScalarField& b);

// Allocation-free variants for solver inner loops. `out` is resized if needed.
void grad_x_into(const ScalarField& u, ScalarField& out);
void grad_y_into(const ScalarField& u, ScalarField& out);
void grad_x_adj_into(const ScalarField& v, ScalarField& out);
void grad_y_adj_into(const ScalarField& v, ScalarField& out);
void laplacian_into(const ScalarField& u, ScalarField& out);

}  // namespace sarseg
