#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <string>

#include "ncmoments/errors.hpp"

namespace ncmoments {

/// Arbitrary-precision integer.  All exact counters in the library use this
/// type; intermediate values routinely exceed 64 bits (e.g. 22! or (2n)!/n!).
using BigInt = boost::multiprecision::cpp_int;

/// Exact rational number with canonical representation: denominator positive,
/// numerator and denominator coprime, zero stored as 0/1.  Equality is
/// structural, which is safe because construction always normalizes.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {}  // NOLINT: implicit by design
    Rational(BigInt n) : num_(std::move(n)), den_(1) {}
    Rational(BigInt num, BigInt den);

    /// Parses "a/b", "a", or "-a/b" with optional surrounding whitespace.
    static Rational from_string(const std::string& text);

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    Rational abs() const { return num_ < 0 ? Rational(-num_, den_) : *this; }
    double to_double() const;

    /// "a/b" for non-integers, "a" when the denominator is 1.
    std::string to_string() const;

    Rational operator-() const { return Rational(-num_, den_, NoNormalize{}); }
    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return a.num_ * b.den_ < b.num_ * a.den_;
    }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

private:
    struct NoNormalize {};
    Rational(BigInt num, BigInt den, NoNormalize)
        : num_(std::move(num)), den_(std::move(den)) {}
    void normalize();

    BigInt num_;
    BigInt den_;
};

/// n! as an exact integer.
BigInt factorial(int n);

/// The n-th Catalan number C_n = (2n)! / (n! (n+1)!).
BigInt catalan(int n);

/// base^exp for a non-negative integer exponent.
BigInt ipow(const BigInt& base, int exp);

}  // namespace ncmoments
