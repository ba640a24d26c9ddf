#pragma once

/**
 * @file quadfield.hpp
 * @brief Exact arithmetic in the quadratic extension Q(sqrt(D)), D = P^2 - 4Q.
 *
 * A QuadraticSurd is a + b*sqrt(D) with rational a, b and integer D. Values are
 * immutable; every operation returns a new value. If D is a perfect square the
 * irrational part is folded into the rational one right away, so "is this value
 * rational" stays decidable without ever factoring D. Rational values carry the
 * canonical discriminant 1 and combine freely with any extension.
 *
 * LucasParams holds the defining data of one sequence family: the rational
 * parameters P, Q of x^2 = P*x - Q, the discriminant, and the two roots
 * p = (P + sqrt(D))/2 and q = (P - sqrt(D))/2. D = 0 (coincident roots) is
 * rejected at construction.
 */

#include <ostream>
#include <string>
#include <utility>

#include "lucanomial/errors.hpp"
#include "lucanomial/rational.hpp"

namespace lucanomial {

class QuadraticSurd {
public:
    QuadraticSurd() : rat_(0), coef_(0), disc_(1) {}
    QuadraticSurd(const Rational& value) : rat_(value), coef_(0), disc_(1) {}

    QuadraticSurd(Rational rat, Rational coef, Integer disc)
        : rat_(std::move(rat)), coef_(std::move(coef)), disc_(std::move(disc)) {
        normalize();
    }

    const Rational& rat() const { return rat_; }
    const Rational& coef() const { return coef_; }
    const Integer& disc() const { return disc_; }

    bool is_rational() const { return coef_.is_zero(); }
    bool is_zero() const { return rat_.is_zero() && coef_.is_zero(); }

    /// The rational part, provided the irrational one vanished.
    Rational as_rational() const {
        if (!is_rational())
            throw NotRational("surd " + str() + " has a nonzero irrational part");
        return rat_;
    }

    QuadraticSurd conj() const { return QuadraticSurd(rat_, -coef_, disc_); }

    QuadraticSurd operator-() const { return QuadraticSurd(-rat_, -coef_, disc_); }

    QuadraticSurd operator+(const QuadraticSurd& o) const {
        Integer d = combined_disc(o, "+");
        return QuadraticSurd(rat_ + o.rat_, coef_ + o.coef_, d);
    }

    QuadraticSurd operator-(const QuadraticSurd& o) const {
        Integer d = combined_disc(o, "-");
        return QuadraticSurd(rat_ - o.rat_, coef_ - o.coef_, d);
    }

    QuadraticSurd operator*(const QuadraticSurd& o) const {
        Integer d = combined_disc(o, "*");
        // (a + b sqrt(D)) (c + e sqrt(D)) = (ac + beD) + (ae + bc) sqrt(D)
        Rational cross = coef_ * o.coef_;
        return QuadraticSurd(rat_ * o.rat_ + cross * Rational(d), rat_ * o.coef_ + coef_ * o.rat_, d);
    }

    /// Multiplicative inverse via the conjugate: 1/x = conj(x) / (a^2 - b^2 D).
    QuadraticSurd inverse() const {
        if (is_zero()) throw DivisionByZero("inverse of zero surd");
        Rational norm = rat_ * rat_ - coef_ * coef_ * Rational(disc_);
        // norm = x * conj(x); nonzero whenever x is, since sqrt(D) is irrational here
        return QuadraticSurd(rat_ / norm, -coef_ / norm, disc_);
    }

    QuadraticSurd operator/(const QuadraticSurd& o) const { return *this * o.inverse(); }

    QuadraticSurd& operator+=(const QuadraticSurd& o) { return *this = *this + o; }
    QuadraticSurd& operator-=(const QuadraticSurd& o) { return *this = *this - o; }
    QuadraticSurd& operator*=(const QuadraticSurd& o) { return *this = *this * o; }
    QuadraticSurd& operator/=(const QuadraticSurd& o) { return *this = *this / o; }

    /// x^n for n >= 0, by repeated squaring.
    QuadraticSurd pow(unsigned long n) const {
        QuadraticSurd base = *this;
        QuadraticSurd acc{Rational(1)};
        while (n > 0) {
            if (n & 1) acc = acc * base;
            base = base * base;
            n >>= 1;
        }
        return acc;
    }

    bool operator==(const QuadraticSurd& o) const {
        return rat_ == o.rat_ && coef_ == o.coef_ && disc_ == o.disc_;
    }

    std::string str() const {
        if (is_rational()) return rat_.str();
        std::string root = "sqrt(" + disc_.get_str() + ")";
        std::string tail = coef_.abs() == Rational(1) ? root : coef_.abs().str() + "*" + root;
        if (rat_.is_zero()) return (coef_.sign() < 0 ? "-" : "") + tail;
        return rat_.str() + (coef_.sign() < 0 ? " - " : " + ") + tail;
    }

private:
    void normalize() {
        if (!coef_.is_zero() && disc_ >= 0 && mpz_perfect_square_p(disc_.get_mpz_t())) {
            Integer root;
            mpz_sqrt(root.get_mpz_t(), disc_.get_mpz_t());
            rat_ += coef_ * Rational(root);
            coef_ = Rational(0);
        }
        if (coef_.is_zero()) disc_ = 1;
    }

    Integer combined_disc(const QuadraticSurd& o, const char* op) const {
        if (coef_.is_zero()) return o.disc_;
        if (o.coef_.is_zero()) return disc_;
        if (disc_ != o.disc_)
            throw DiscriminantMismatch("cannot apply '" + std::string(op) + "' to surds over sqrt(" +
                                       disc_.get_str() + ") and sqrt(" + o.disc_.get_str() + ")");
        return disc_;
    }

    Rational rat_;
    Rational coef_;
    Integer disc_;
};

inline QuadraticSurd conj(const QuadraticSurd& x) { return x.conj(); }
inline QuadraticSurd inv(const QuadraticSurd& x) { return x.inverse(); }
inline QuadraticSurd pow(const QuadraticSurd& x, unsigned long n) { return x.pow(n); }
inline Rational as_rational(const QuadraticSurd& x) { return x.as_rational(); }

inline std::ostream& operator<<(std::ostream& os, const QuadraticSurd& x) { return os << x.str(); }

/// Parameters of x^2 = P*x - Q together with its discriminant and roots.
class LucasParams {
public:
    LucasParams(Rational P, Rational Q) : p_(std::move(P)), q_(std::move(Q)) {
        d_ = p_ * p_ - Rational(4) * q_;
        if (d_.is_zero())
            throw DegenerateDiscriminant("P = " + p_.str() + ", Q = " + q_.str() +
                                         " gives coincident roots (P^2 = 4Q)");
        // sqrt(u/v) = sqrt(u*v)/v keeps the surd discriminant integral
        kernel_ = d_.num() * d_.den();
        scale_ = Rational(Integer(1), d_.den());
    }

    const Rational& P() const { return p_; }
    const Rational& Q() const { return q_; }
    const Rational& D() const { return d_; }

    /// sqrt(D) as an element of the extension (= p - q).
    QuadraticSurd sqrt_disc() const { return QuadraticSurd(Rational(0), scale_, kernel_); }

    QuadraticSurd root_p() const {
        return QuadraticSurd(p_ / Rational(2), scale_ / Rational(2), kernel_);
    }

    QuadraticSurd root_q() const {
        return QuadraticSurd(p_ / Rational(2), -scale_ / Rational(2), kernel_);
    }

    bool operator==(const LucasParams& o) const { return p_ == o.p_ && q_ == o.q_; }

private:
    Rational p_;       // P
    Rational q_;       // Q
    Rational d_;       // P^2 - 4Q
    Integer kernel_;   // integer discriminant carried by the surds
    Rational scale_;   // sqrt(D) = scale * sqrt(kernel)
};

inline QuadraticSurd root_p(const LucasParams& params) { return params.root_p(); }
inline QuadraticSurd root_q(const LucasParams& params) { return params.root_q(); }

}  // namespace lucanomial
