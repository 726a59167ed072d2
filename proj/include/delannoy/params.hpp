#pragma once

#include <compare>
#include <string>

#include "delannoy/rational.hpp"

namespace delannoy {

/// The five weights of the array
///   f(m,0) = A^m, f(0,n) = B^n,
///   f(m,n) = alpha f(m-1,n) + beta f(m,n-1) + gamma f(m-1,n-1).
struct Params {
    Rational A{1}, B{1}, alpha{1}, beta{1}, gamma{1};

    /// Classic Delannoy weights (all ones).
    static Params classic() { return {}; }

    bool all_nonnegative() const;
    std::string str() const;

    friend bool operator==(const Params&, const Params&) = default;
};

/// Which of alpha, beta vanish.
///   full:     alpha != 0, beta != 0
///   row_only: alpha != 0 == beta   (only the m-direction step survives)
///   col_only: beta != 0 == alpha   (only the n-direction step survives)
///   both_zero
enum class NormKind { full, row_only, col_only, both_zero };

std::string to_string(NormKind kind);

/// Rescaled weights with alpha, beta in {0, 1}:
///   fhat(m,n) = scale_row^-m * scale_col^-n * f(m,n)
/// where a vanishing scale is treated as 1.
struct NormalizedParams {
    Rational A_hat, B_hat, gamma_hat;
    Rational scale_row, scale_col;
    NormKind kind = NormKind::full;

    /// The weights of the rescaled array (alpha, beta replaced by 0 or 1).
    Params as_params() const;
    /// Factor that maps fhat(m,n) back to f(m,n).
    Rational denormalize_factor(long m, long n) const;
};

NormalizedParams normalize(const Params& p);

/// True iff f(m,n) = A^m B^n for every m, n, i.e. AB = beta A + alpha B + gamma.
bool is_geometric(const Params& p);

/// alpha beta + sqrt(alpha beta (alpha beta + gamma)), rounded to binary64.
/// Throws std::domain_error on a negative parameter.
double growth_threshold(const Params& p);

/// Exact comparison of x with growth_threshold(p), without irrational
/// arithmetic. Requires nonnegative parameters.
std::strong_ordering compare_to_threshold(const Params& p, const Rational& x);

} // namespace delannoy
