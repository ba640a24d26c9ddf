#pragma once

/**
 * @file rational.hpp
 * @brief Exact arbitrary-precision fractions, the carrier type for every value
 *        the library emits.
 *
 * Invariants, maintained after every operation:
 *  - denominator > 0 (sign lives in the numerator)
 *  - gcd(|numerator|, denominator) = 1
 *  - zero is uniquely 0/1
 *
 * Backed by GMP; this wrapper pins the canonical form, the error behavior and
 * the "num/den" text representation (integers print without the "/1").
 */

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <ostream>
#include <string>
#include <string_view>

#include "lucanomial/errors.hpp"

namespace lucanomial {

using Integer = mpz_class;

class Rational {
public:
    Rational() : value_(0) {}
    Rational(int n) : value_(n) {}
    Rational(long n) : value_(static_cast<signed long>(n)) {}
    Rational(const Integer& n) : value_(n) {}

    Rational(const Integer& num, const Integer& den) {
        if (den == 0) throw DivisionByZero("rational with zero denominator");
        value_ = mpq_class(num, den);
        value_.canonicalize();
    }

    Rational(long num, long den) : Rational(Integer(num), Integer(den)) {}

    /// Parses "num" or "num/den" (base 10, optional leading '-' on either part).
    static Rational parse(std::string_view text);

    Integer num() const { return Integer(value_.get_num()); }
    Integer den() const { return Integer(value_.get_den()); }

    bool is_zero() const { return sgn(value_) == 0; }
    bool is_integer() const { return value_.get_den() == 1; }
    int sign() const { return sgn(value_); }

    Rational operator-() const { return Rational(mpq_class(-value_)); }

    Rational operator+(const Rational& o) const { return Rational(mpq_class(value_ + o.value_)); }
    Rational operator-(const Rational& o) const { return Rational(mpq_class(value_ - o.value_)); }
    Rational operator*(const Rational& o) const { return Rational(mpq_class(value_ * o.value_)); }

    Rational operator/(const Rational& o) const {
        if (o.is_zero()) throw DivisionByZero("rational division by zero");
        return Rational(mpq_class(value_ / o.value_));
    }

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    Rational inverse() const {
        if (is_zero()) throw DivisionByZero("inverse of zero");
        return Rational(den(), num());
    }

    Rational abs() const { return sign() < 0 ? -*this : *this; }

    bool operator==(const Rational& o) const { return mpq_equal(value_.get_mpq_t(), o.value_.get_mpq_t()) != 0; }
    std::strong_ordering operator<=>(const Rational& o) const {
        int c = mpq_cmp(value_.get_mpq_t(), o.value_.get_mpq_t());
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    /// "num/den", or just "num" when the denominator is 1.
    std::string str() const { return value_.get_str(); }

private:
    explicit Rational(mpq_class v) : value_(std::move(v)) {}

    mpq_class value_;
};

inline std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

inline Rational Rational::parse(std::string_view text) {
    auto is_digits = [](std::string_view s) {
        if (s.empty()) return false;
        if (s.front() == '-') s.remove_prefix(1);
        if (s.empty()) return false;
        for (char c : s)
            if (c < '0' || c > '9') return false;
        return true;
    };
    auto slash = text.find('/');
    std::string_view num_part = text.substr(0, slash);
    std::string_view den_part = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
    if (!is_digits(num_part) || !is_digits(den_part))
        throw Error("malformed rational: '" + std::string(text) + "'");
    return Rational(Integer(std::string(num_part)), Integer(std::string(den_part)));
}

/// The operation named in the module contract; identical to the two-argument constructor.
inline Rational make_rational(const Integer& num, const Integer& den) { return Rational(num, den); }

/// base^exp for exp >= 0, by repeated squaring (0^0 = 1 by empty-product convention).
inline Rational pow_rational(const Rational& base, long exp) {
    if (exp < 0) throw Error("pow_rational: negative exponent");
    Rational acc(1);
    Rational sq = base;
    for (; exp > 0; exp >>= 1) {
        if (exp & 1) acc = acc * sq;
        sq = sq * sq;
    }
    return acc;
}

}  // namespace lucanomial
