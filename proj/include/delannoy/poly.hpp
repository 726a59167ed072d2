#pragma once

#include <string>
#include <vector>

#include "delannoy/rational.hpp"

namespace delannoy {

/// Univariate polynomial over the rationals, coefficients in ascending degree.
/// Trailing zeros are always trimmed; the zero polynomial has no coefficients.
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<Rational> coeffs);
    Poly(const Rational& constant); // NOLINT(google-explicit-constructor)

    /// The polynomial m (the indeterminate).
    static Poly x();

    const std::vector<Rational>& coeffs() const noexcept { return c_; }
    /// Coefficient of m^i (zero past the degree).
    Rational coeff(std::size_t i) const;
    /// -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const noexcept { return c_.empty(); }
    Rational leading() const;

    Rational eval(const Rational& m) const;
    /// p(m + k).
    Poly shifted(const Rational& k) const;
    /// Divide by the leading coefficient; zero stays zero.
    Poly monic() const;

    std::string str(const std::string& var = "m") const;

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Poly& o);

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(Poly a, const Poly& b) { return a *= b; }
    friend Poly operator-(const Poly& a) { return Poly() - a; }
    friend bool operator==(const Poly&, const Poly&) = default;

private:
    void trim();
    std::vector<Rational> c_;
};

struct PolyDivision {
    Poly quotient, remainder;
};

/// Euclidean division; throws std::domain_error for a zero divisor.
PolyDivision divide(const Poly& a, const Poly& b);

/// Monic greatest common divisor (zero when both are zero).
Poly gcd(const Poly& a, const Poly& b);

/// Distinct integer roots in ascending order. Exact for degree <= 2; higher
/// degrees scan the integers inside the Cauchy root bound and throw
/// std::length_error when that bound exceeds 10^6. The zero polynomial throws
/// std::domain_error.
std::vector<long> integer_roots(const Poly& p);

} // namespace delannoy
