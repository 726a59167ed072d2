#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "delannoy/params.hpp"
#include "delannoy/rational.hpp"
#include "delannoy/xfloat.hpp"

namespace delannoy {

/// Dense (max_m+1) x (max_n+1) table of exact values. Cells are addressed as
/// (m, n) with m the first index, matching f(m, n).
class Grid {
public:
    Grid(Params params, int max_m, int max_n);

    const Params& params() const noexcept { return params_; }
    int max_m() const noexcept { return max_m_; }
    int max_n() const noexcept { return max_n_; }

    const Rational& at(int m, int n) const { return cells_[index(m, n)]; }
    Rational& at(int m, int n) { return cells_[index(m, n)]; }

    /// Main diagonal f(k, k) for k <= min(max_m, max_n).
    std::vector<Rational> diagonal() const;

    friend bool operator==(const Grid& a, const Grid& b) { return a.cells_ == b.cells_ && a.max_n_ == b.max_n_; }

private:
    std::size_t index(int m, int n) const;

    Params params_;
    int max_m_, max_n_;
    std::vector<Rational> cells_;
};

/// f(n, n) for n = 0..values.size()-1.
struct DiagonalSeq {
    Params params;
    std::vector<Rational> values;
};

/// Boundary values f(0, n) (row) and f(m, 0) (col); must agree at index 0.
struct Boundary {
    std::function<Rational(int)> row;
    std::function<Rational(int)> col;
    std::string name;
};

Boundary geometric_boundary(const Rational& A, const Rational& B);
/// f(n,0) = f(0,n) = Fib(n) with Fib(0) = 0, Fib(1) = 1.
Boundary fibonacci_boundary();
/// f(n,0) = f(0,n) = n!.
Boundary factorial_boundary();
/// f(n,0) = f(0,n) = n^n with 0^0 = 1.
Boundary powpow_boundary();
/// The same tabulated values on both axes; indices past the table throw.
Boundary tabulated_boundary(std::vector<Rational> values, std::string name = "table");

struct GridOptions {
    std::size_t cell_budget = 10'000'000;
};

/// Full table of f(m,n). Throws std::length_error past the cell budget and
/// std::invalid_argument on negative dimensions.
Grid compute_grid(const Params& p, int max_m, int max_n, GridOptions opts = {});

/// Same recurrence (alpha, beta, gamma from p) with the boundary replaced.
/// A and B of p are ignored. Throws std::invalid_argument on an inconsistent corner.
Grid compute_grid_custom(const Params& p, const Boundary& b, int max_m, int max_n, GridOptions opts = {});

/// f(n,n) for n <= n_max using a two-row sweep.
DiagonalSeq compute_diagonal(const Params& p, int n_max);
DiagonalSeq compute_diagonal_custom(const Params& p, const Boundary& b, int n_max);

/// s^n f(n,n) for n <= n_max with s = 2^log2_scale_per_step, computed by
/// running the recurrence on h(m,n) = f(m,n) s^((m+n)/2) in XFloat arithmetic.
std::vector<XFloat> compute_diagonal_xfloat(const Params& p, int n_max, double log2_scale_per_step = 0.0);

/// Weighted Delannoy number for A = alpha, B = beta via the binomial sum
/// sum_k alpha^(m-k) beta^(n-k) C(n,k) C(m,k) (alpha beta + gamma)^k.
Rational closed_form_W(const Params& p, int m, int n);

/// Both binomial sums for the classic D(m,n):
///   sum_i C(n,i) C(n+m-i, n)   and   sum_i 2^i C(n,i) C(m,i).
std::pair<Rational, Rational> classic_closed_forms(int m, int n);

/// Central Delannoy number from the alternating double-factorial sum
/// (-1)^n 6^-n sum_i (-1)^i 36^i (2i-1)!!/(2i)!! C(i, n-i).
Rational central_double_factorial(int n);

/// f = p + q + r on the alpha = beta = 1 normalized table:
///   p: zero on m = 0, A^m on n = 0 (m >= 1)
///   q: zero on n = 0, B^n on m = 0 (n >= 1)
///   r: 1 at the origin, zero elsewhere on the axes.
struct PqrDecomposition {
    NormalizedParams normalized;
    Grid p, q, r;
};

/// Throws std::invalid_argument unless alpha beta != 0.
PqrDecomposition decompose_pqr(const Params& p, int max_m, int max_n);

/// p = S + G - t for A != 1 (alpha = beta = 1), with rho = (A + gamma)/(A - 1):
///   S: zero on m = 0, one on n = 0 (m >= 1)
///   G(m,n) = A^m rho^n
///   t: rho^n on m = 0, one on n = 0.
struct SgtDecomposition {
    Grid S, G, t;
};

/// Throws std::invalid_argument when A_hat = 1.
SgtDecomposition decompose_SGt(const Rational& A_hat, const Rational& gamma_hat, int max);

/// Sum over all lattice paths (0,0) -> (m,n) of the product of step weights:
/// east steps on the n = 0 axis weigh A, north steps on the m = 0 axis weigh B,
/// otherwise alpha (east), beta (north), gamma (diagonal). Pure enumeration;
/// requires m + n <= 14 (std::length_error otherwise).
Rational enumerate_paths_oracle(const Params& p, int m, int n);

/// First interior cell where the stored value differs from
/// alpha*left + beta*below + gamma*diag, using the grid's own params.
std::optional<std::pair<int, int>> first_recurrence_violation(const Grid& g);

} // namespace delannoy
