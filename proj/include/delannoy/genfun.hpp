#pragma once

#include <utility>

#include "delannoy/params.hpp"

namespace delannoy {

/// One evaluation of a generating function. truncation_order is the number of
/// series terms used, or -1 when the closed form was evaluated.
struct GfPoint {
    double x = 0.0, y = 0.0, z = 0.0;
    double value = 0.0;
    int truncation_order = -1;
};

/// sum f(m,n) x^m y^n in closed form:
///   (1 - a x - b y + (aB + bA - AB) x y) / ((1 - A x)(1 - B y)(1 - a x - b y - g x y))
/// with a, b, g = alpha, beta, gamma. Requires |x| < 1/|A|, |y| < 1/|B| and
/// |alpha x| + |beta y| + |gamma x y| < 1; throws std::domain_error otherwise
/// or when a denominator factor is within 1e-12 of zero.
GfPoint eval_bivariate(const Params& p, double x, double y);

/// sum f(n,n) z^n. Requires nonnegative parameters and 0 <= z < 1/L with L the
/// diagonal ratio limit (std::domain_error otherwise). Below z = 1e-4 the
/// series is summed instead of the closed form.
GfPoint eval_diagonal_gf(const Params& p, double z);

/// The two residue contributions whose sum is the diagonal generating
/// function: first the pole coming from 1 - B y (zero when B = beta), then
/// the root of the quadratic factor that tends to zero with z.
/// Same preconditions as eval_diagonal_gf, without the series fallback.
std::pair<double, double> residues_at_small_poles(const Params& p, double z);

/// (1/pi) * integral over [0, pi] of (3 + 2 sqrt(2) cos t)^(-n-1) dt by the
/// composite trapezoid rule with `nodes` intervals. Equals the central
/// Delannoy number D(n,n). Requires n >= 0 and nodes >= 16.
double central_integral(int n, int nodes = 100'000);

} // namespace delannoy
