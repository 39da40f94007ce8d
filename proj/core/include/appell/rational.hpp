#pragma once

#include <gmpxx.h>

#include <string>

namespace appell {

using Integer = mpz_class;

/// Exact arbitrary-precision rational scalar.
///
/// Invariants: the denominator is always positive, numerator and denominator
/// are coprime, and zero is stored as 0/1. Every constructor and operation
/// restores this canonical form, so equality is plain value equality.
class Rational {
public:
    Rational() : value_(0) {}
    Rational(long n) : value_(n) {}
    Rational(const Integer& n) : value_(n) {}
    Rational(long num, long den);
    Rational(const Integer& num, const Integer& den);

    /// Parses base-10 "p" or "p/q"; the result is reduced.
    static Rational parse(const std::string& text);

    Integer numerator() const { return value_.get_num(); }
    Integer denominator() const { return value_.get_den(); }

    bool is_zero() const { return sgn(value_) == 0; }
    bool is_one() const { return value_ == 1; }
    bool is_integer() const { return value_.get_den() == 1; }
    int sign() const { return sgn(value_); }

    Rational& operator+=(const Rational& rhs) { value_ += rhs.value_; return *this; }
    Rational& operator-=(const Rational& rhs) { value_ -= rhs.value_; return *this; }
    Rational& operator*=(const Rational& rhs) { value_ *= rhs.value_; return *this; }
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
    Rational operator-() const;

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) { return cmp(a.value_, b.value_) < 0; }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    /// "p" when integral, otherwise reduced "p/q".
    std::string str() const { return value_.get_str(); }

private:
    mpq_class value_;
};

Rational abs(const Rational& r);

/// base^exponent; negative exponents invert (base must be nonzero for those).
Rational pow(const Rational& base, long exponent);

Integer factorial(unsigned long n);

/// Binomial coefficient; 0 when k > n.
Integer binomial(unsigned long n, unsigned long k);

/// Falling factorial i(i-1)...(i-m+1); 1 when m = 0, 0 when m > i.
Integer falling_factorial(unsigned long i, unsigned long m);

}  // namespace appell
