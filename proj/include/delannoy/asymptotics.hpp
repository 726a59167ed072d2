#pragma once

#include <compare>
#include <string>
#include <vector>

#include "delannoy/params.hpp"
#include "delannoy/rational.hpp"

namespace delannoy {

enum class Regime { surd, b_dominant, a_dominant, tie, geometric, both_zero };

std::string to_string(Regime r);

/// Exact comparisons that select the regime. T is the growth threshold,
/// a = A beta, b = B alpha.
struct RegimeWitnesses {
    std::strong_ordering a_vs_threshold = std::strong_ordering::equal;
    std::strong_ordering b_vs_threshold = std::strong_ordering::equal;
    std::strong_ordering a_vs_b = std::strong_ordering::equal;
    bool geometric = false;
    bool both_zero = false;
};

/// Case 1..6 of the diagonal asymptotic case list, read off the witnesses.
/// Ties between overlapping cases go to the lower case number.
int select_case(const RegimeWitnesses& w);

/// f(m,m) ~ constant * m^prefactor_exponent * rho^m.
struct AsymptoticForm {
    Regime regime = Regime::surd;
    int case_index = 1;
    double rho = 0.0;
    Rational prefactor_exponent;
    double constant = 0.0;
    /// False when gamma = 0 in the surd regime: the closed form for K is
    /// not established there and `constant` is NaN.
    bool constant_in_scope = true;
    RegimeWitnesses witnesses;
};

/// Requires nonnegative parameters (std::domain_error otherwise); also throws
/// std::domain_error when the selected closed form has a vanishing denominator.
AsymptoticForm classify(const Params& p);

/// lim f(m+1,m+1)/f(m,m) for nonnegative parameters.
double diagonal_limit(const Params& p);

/// Closed-form K of the surd regime. Throws std::domain_error outside that
/// regime or when gamma = 0.
double constant_K(const Params& p);

struct EmpiricalGrowth {
    double rho_hat = 0.0; // f(n+1,n+1)/f(n,n) at n = n_max
    double K_hat = 0.0;   // f(n,n) n^(-prefactor_exponent) / rho^n at n = n_max
};

/// XFloat run of the diagonal up to n_max + 1, scaled by 1/rho per step.
EmpiricalGrowth empirical_growth(const Params& p, int n_max);

enum class Arithmetic { xfloat, exact };

/// F_n = f(n+1,n+1)/f(n,n) for n < n_max; NaN where f(n,n) = 0.
/// XFloat runs lose all accuracy when the recurrence cancels heavily (some
/// negative weights do); exact mode uses rationals at quadratic cost in size.
std::vector<double> ratio_trajectory(const Params& p, int n_max, Arithmetic mode = Arithmetic::xfloat);

enum class RatioKind { converges, k_cycle, unbounded, undefined_ratio, inconclusive };

std::string to_string(RatioKind k);

struct RatioDiagnosis {
    RatioKind kind = RatioKind::inconclusive;
    int period = 0;                 // 1 for converges, k for k_cycle
    std::vector<double> witnesses;  // limit, or the k cycle values in order
    int n_used = 0;                 // defined entries in the retained window
    int undefined = 0;              // NaN entries in the retained window
};

struct RatioTolerance {
    double absolute = 1e-6;
    double relative = 1e-4;
    double growth_factor = 10.0;
    double spike_factor = 100.0;
    int max_period = 6;
};

/// Drops the first half, then tries periods 1..max_period in order: period k
/// holds when max |F(n+k) - F(n)| <= absolute + relative * max |F| over the
/// retained window, and the witnesses are the per-phase means. Otherwise the
/// verdict is unbounded when either
///   - the last quarter of the window peaks above growth_factor times the
///     quarter before it (steady blow-up), or
///   - every quarter peaks above spike_factor times the median |F| (spikes
///     from near-zero denominators that keep recurring).
/// Throws std::invalid_argument for fewer than 64 entries.
RatioDiagnosis diagnose_ratio(const std::vector<double>& trajectory, RatioTolerance tol = {});

} // namespace delannoy
