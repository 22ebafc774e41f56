#pragma once

// Exact rational scalars and the integer combinatorics used throughout.

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace cliffex {

using BigInt = mpz_class;

/// Arbitrary-precision rational, always in lowest terms with a positive
/// denominator. Thin value wrapper over GMP's mpq_class so that expression
/// templates never leak into client code.
class Rational {
public:
    Rational() = default;
    Rational(long value) : value_(value) {}
    Rational(const BigInt& value) : value_(value) {}
    Rational(const BigInt& numerator, const BigInt& denominator);

    /// Parses "p", "-p", "p/q" (surrounding whitespace allowed).
    static Rational parse(std::string_view text);

    [[nodiscard]] BigInt numerator() const { return value_.get_num(); }
    [[nodiscard]] BigInt denominator() const { return value_.get_den(); }
    [[nodiscard]] bool is_zero() const { return sgn(value_) == 0; }
    [[nodiscard]] int sign() const { return sgn(value_); }
    [[nodiscard]] bool is_integer() const { return value_.get_den() == 1; }
    [[nodiscard]] double to_double() const { return value_.get_d(); }
    [[nodiscard]] Rational abs() const;
    [[nodiscard]] Rational inverse() const;
    [[nodiscard]] Rational pow(int exponent) const;

    /// "p/q", or "p" when the denominator is one.
    [[nodiscard]] std::string str() const { return value_.get_str(); }

    [[nodiscard]] const mpq_class& raw() const { return value_; }

    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    Rational& operator/=(const Rational& rhs);

    friend Rational operator-(const Rational& x);
    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

    friend bool operator==(const Rational& lhs, const Rational& rhs) { return lhs.value_ == rhs.value_; }
    friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs);

    friend std::ostream& operator<<(std::ostream& os, const Rational& x) { return os << x.str(); }

private:
    mpq_class value_{0};
};

/// m! for m >= 0.
BigInt factorial(int m);

/// m!! for m >= -1, with (-1)!! = 0!! = 1.
BigInt double_factorial(int m);

/// C(k, s) for k >= 0; zero outside 0 <= s <= k.
BigInt binomial(int k, int s);

/// Rising factorial q (q+1) ... (q+l-1); equals 1 for l = 0.
Rational pochhammer(const Rational& q, int l);

/// (-1)^m as a small integer.
constexpr int sign_power(int m) { return (m % 2 == 0) ? 1 : -1; }

}  // namespace cliffex
