#pragma once

#include <optional>
#include <string>
#include <vector>

#include "delannoy/grid.hpp"
#include "delannoy/params.hpp"
#include "delannoy/poly.hpp"
#include "delannoy/rational.hpp"

namespace delannoy {

/// q0(z) G + z q1(z) G' + z^2 q2(z) G'' = c(z) for G = sum f(n,n) z^n.
struct OdeSpec {
    Poly q0, q1, q2, c;
};

/// sum_j coeffs[j](m) f(m - j) = 0 for every m >= valid_from.
struct PolyRecurrence {
    std::vector<Poly> coeffs;
    int valid_from = 0;
    /// Integer roots of coeffs[0] at or above valid_from: f cannot be solved
    /// for there and has to be supplied.
    std::vector<long> blocked_roots;

    int order() const noexcept { return static_cast<int>(coeffs.size()) - 1; }
    friend bool operator==(const PolyRecurrence&, const PolyRecurrence&) = default;
};

/// Integer coefficients with content 1; the top coefficient of the first
/// nonzero p_j is positive. Recomputes blocked_roots.
PolyRecurrence canonicalize(PolyRecurrence rec);

/// Coefficient tables of the diagonal ODE for alpha = beta = 1, evaluated at
/// (A, B, gamma).
OdeSpec ode_coefficients(const Rational& A, const Rational& B, const Rational& gamma);

/// Order-4 recurrence obtained by comparing coefficients of z^m in the ODE:
///   p_j(m) = q0_j + (m-j) q1_j + (m-j)(m-j-1) q2_j, valid for m >= 4.
PolyRecurrence derive_recurrence_from_ode(const OdeSpec& ode);

/// Maps a recurrence for f(n,n)/(alpha beta)^n to one for f(n,n):
/// p_j <- p_j (alpha beta)^j, then canonicalized.
PolyRecurrence denormalize(const PolyRecurrence& rec, const Rational& alpha_beta);

/// ODE-derived recurrence of the diagonal for general weights (alpha beta != 0,
/// std::invalid_argument otherwise).
PolyRecurrence recurrence_for(const Params& p);

/// Drops identically zero leading and trailing p_j (re-indexing m), then
/// removes polynomial factors common to every p_j that cannot vanish at an
/// integer m >= valid_from. Canonical on return.
PolyRecurrence reduce(const PolyRecurrence& rec);

/// Reduced-order recurrence for A_hat or B_hat in {0, 1}. Throws
/// std::invalid_argument for other parameters or when alpha beta = 0.
PolyRecurrence reduced_recurrence_cases(const Params& p);

enum class DiscoveryStatus { unique, none, ambiguous };

std::string to_string(DiscoveryStatus s);

struct Discovery {
    DiscoveryStatus status = DiscoveryStatus::none;
    /// One recurrence when unique; every basis vector when ambiguous.
    std::vector<PolyRecurrence> candidates;
    int equations = 0;
    int unknowns = 0;
    std::string diagnostic;
};

/// Solves sum_{j<=order} sum_{d<=degree} c_{j,d} m^d f(m-j) = 0 for
/// m = order .. order+equations-1 with equations = unknowns + extra.
/// A unique solution is re-validated against every supplied term.
/// Throws std::invalid_argument when values are too short or the shape
/// exceeds order 6 / degree 4.
Discovery discover_recurrence(const std::vector<Rational>& values, int order = 4, int degree = 2, int extra = 7);

/// Three-term recurrence of the diagonal for A = B (alpha = beta = 1) plus
/// the initial terms f0, f1, f2. Throws std::invalid_argument when A = 1.
struct AEqualsB {
    PolyRecurrence rec;
    std::vector<Rational> initial;
};
AEqualsB recurrence_A_equals_B(const Rational& A, const Rational& gamma);

/// Extends seed to indices 0..n_max by solving for f(m). The seed must cover
/// every index below max(valid_from, 1 + largest blocked root); throws
/// std::invalid_argument otherwise and std::domain_error if p_0 vanishes at an
/// index to be solved.
std::vector<Rational> apply_recurrence(const PolyRecurrence& rec, std::vector<Rational> seed, int n_max);

struct CheckResult {
    bool ok = true;
    std::optional<int> first_failure;
    int checked = 0;
};

/// Exact check at every m from valid_from to values.size() - 1.
CheckResult verify_recurrence(const PolyRecurrence& rec, const std::vector<Rational>& values);

/// Exact check of the z^m coefficient of the ODE for m <= order_checked.
/// Requires values.size() > order_checked.
CheckResult verify_ode(const OdeSpec& ode, const std::vector<Rational>& values, int order_checked);

} // namespace delannoy
