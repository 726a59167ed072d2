#pragma once

#include <compare>
#include <concepts>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace delannoy {

/// Exact rational number. Always canonical: denominator > 0 and
/// gcd(|numerator|, denominator) = 1.
class Rational {
public:
    Rational() = default;

    template <std::signed_integral T>
    Rational(T v) : value_(static_cast<long>(v)) {}

    template <std::unsigned_integral T>
    Rational(T v) : value_(static_cast<unsigned long>(v)) {}

    explicit Rational(const mpz_class& integer) : value_(integer) {}

    /// Throws std::domain_error on a zero denominator.
    Rational(const mpz_class& numerator, const mpz_class& denominator);

    explicit Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

    const mpq_class& value() const noexcept { return value_; }
    mpz_class numerator() const { return value_.get_num(); }
    mpz_class denominator() const { return value_.get_den(); }

    int sign() const noexcept { return sgn(value_); }
    bool is_zero() const noexcept { return sign() == 0; }
    bool is_integer() const { return value_.get_den() == 1; }

    /// Nearest binary64; +-inf when the magnitude exceeds the double range.
    double to_double() const;

    /// Canonical literal: "n" or "n/d".
    std::string str() const;

    Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
    Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
    Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.value_)); }

    friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.value_, b.value_) == 0; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
    mpq_class value_;
};

/// base^exponent; negative exponents require a nonzero base. 0^0 = 1.
Rational pow(const Rational& base, long exponent);

Rational abs(const Rational& r);

/// Binomial coefficient C(n, k); zero when k < 0 or k > n.
mpz_class binomial(long n, long k);

/// Parses `[-]digits[/digits]` or `[-]digits.digits` (at most 18 fractional
/// digits, converted exactly). Throws std::invalid_argument on malformed text
/// and std::domain_error on a zero denominator.
Rational parse_rational(std::string_view text);

} // namespace delannoy
