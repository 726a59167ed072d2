#pragma once

#include <cstdint>
#include <string>

#include "delannoy/rational.hpp"

namespace delannoy {

/// Binary64 mantissa with a 64-bit power-of-two exponent, for magnitudes far
/// outside the double range. The value is mantissa * 2^exponent with
/// |mantissa| in [1, 2), or mantissa == 0 and exponent == 0.
///
/// Addition of nearly equal magnitudes with opposite signs cancels exactly as
/// it would in binary64; the relative error of such a result is not bounded.
class XFloat {
public:
    XFloat() = default;
    XFloat(double v); // NOLINT(google-explicit-constructor)
    static XFloat from_parts(double mantissa, std::int64_t exponent);
    static XFloat from_rational(const Rational& r);

    double mantissa() const noexcept { return mantissa_; }
    std::int64_t exponent() const noexcept { return exponent_; }
    bool is_zero() const noexcept { return mantissa_ == 0.0; }
    int sign() const noexcept { return (mantissa_ > 0) - (mantissa_ < 0); }

    /// Nearest double; +-inf or 0 when out of range.
    double to_double() const;
    /// log2 |x|; -inf for zero.
    double log2_abs() const;
    std::string str() const;

    XFloat& operator+=(const XFloat& o);
    XFloat& operator-=(const XFloat& o) { return *this += -o; }
    XFloat& operator*=(const XFloat& o);
    XFloat& operator/=(const XFloat& o);

    friend XFloat operator+(XFloat a, const XFloat& b) { return a += b; }
    friend XFloat operator-(XFloat a, const XFloat& b) { return a -= b; }
    friend XFloat operator*(XFloat a, const XFloat& b) { return a *= b; }
    friend XFloat operator/(XFloat a, const XFloat& b) { return a /= b; }
    friend XFloat operator-(const XFloat& a) { return from_parts(-a.mantissa_, a.exponent_); }

    friend bool operator==(const XFloat&, const XFloat&) = default;

private:
    void normalize();

    double mantissa_ = 0.0;
    std::int64_t exponent_ = 0;
};

/// a / b as a double (NaN when b is zero).
double ratio(const XFloat& a, const XFloat& b);

} // namespace delannoy
