#pragma once

/**
 * @file sequences.hpp
 * @brief Lucas-type sequences: U, V, Horadam W/H, and user-supplied custom sequences.
 *
 * Every non-custom kind obeys the two-term recurrence L_{n+1} = P*L_n - Q*L_{n-1}
 * and differs only in its seeds: U starts 0, 1; V starts 2, P; Horadam W/H start
 * from caller-supplied rationals. A SequenceContext memoizes terms, factorials
 * (L_n! = L_1 * ... * L_n), and root powers, and can evaluate each term a second
 * way through the closed form in Q(sqrt(D)) as a built-in cross-check.
 *
 * The addition/shift identity checkers evaluate both sides exactly and return the
 * witnesses; nothing here rounds or approximates.
 */

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lucanomial/errors.hpp"
#include "lucanomial/quadfield.hpp"
#include "lucanomial/rational.hpp"

namespace lucanomial {

/// Which member of the Lucas family a context generates, plus its seed data.
class SequenceKind {
public:
    enum class Family { U, V, HoradamW, HoradamH, Custom };

    static SequenceKind u() { return SequenceKind(Family::U); }
    static SequenceKind v() { return SequenceKind(Family::V); }

    static SequenceKind horadam_w(Rational w0, Rational w1) {
        SequenceKind k(Family::HoradamW);
        k.seed0_ = std::move(w0);
        k.seed1_ = std::move(w1);
        return k;
    }

    static SequenceKind horadam_h(Rational h0, Rational h1) {
        SequenceKind k(Family::HoradamH);
        k.seed0_ = std::move(h0);
        k.seed1_ = std::move(h1);
        return k;
    }

    static SequenceKind custom(std::vector<Rational> values) {
        if (values.empty()) throw Error("custom sequence needs at least one term");
        SequenceKind k(Family::Custom);
        k.values_ = std::move(values);
        return k;
    }

    Family family() const { return family_; }
    bool is_custom() const { return family_ == Family::Custom; }
    bool has_closed_form() const { return family_ != Family::Custom; }

    /// "u", "v", "horadam-w", "horadam-h", or "custom".
    std::string label() const {
        switch (family_) {
            case Family::U: return "u";
            case Family::V: return "v";
            case Family::HoradamW: return "horadam-w";
            case Family::HoradamH: return "horadam-h";
            case Family::Custom: return "custom";
        }
        return "?";
    }

    /// Seed terms for Horadam kinds (w0/w1 or h0/h1).
    const Rational& seed0() const { return seed0_; }
    const Rational& seed1() const { return seed1_; }

    /// Backing terms of a custom sequence.
    const std::vector<Rational>& values() const { return values_; }

    bool operator==(const SequenceKind& o) const {
        return family_ == o.family_ && seed0_ == o.seed0_ && seed1_ == o.seed1_ &&
               values_ == o.values_;
    }

private:
    explicit SequenceKind(Family family) : family_(family) {}

    Family family_;
    Rational seed0_;
    Rational seed1_;
    std::vector<Rational> values_;
};

/**
 * One sequence instance: parameters + kind + memo tables.
 *
 * A context owns mutable memo tables, so a single instance must stay confined to
 * one thread at a time (or be pre-warmed via ensure_terms and then only read).
 * Distinct contexts are fully independent.
 */
class SequenceContext {
public:
    SequenceContext(LucasParams params, SequenceKind kind);

    /// Context for a custom sequence; no recurrence parameters are attached.
    explicit SequenceContext(SequenceKind kind);

    static SequenceContext custom(std::vector<Rational> values) {
        return SequenceContext(SequenceKind::custom(std::move(values)));
    }

    const SequenceKind& kind() const { return kind_; }
    bool has_params() const { return params_.has_value(); }

    const LucasParams& params() const {
        if (!params_) throw Error("sequence context has no recurrence parameters");
        return *params_;
    }

    /// Human-readable descriptor, e.g. "u (P=1, Q=-1)".
    std::string describe() const;

    /// n-th term by (memoized) recurrence; custom kinds index their value list.
    Rational term(long n);

    /// n-th term through the closed form in Q(sqrt(D)); must equal term(n).
    Rational term_closed_form(long n);

    /// Closed-form weights (A, B): U/V give (1, 1); Horadam kinds solve the seeds.
    std::pair<QuadraticSurd, QuadraticSurd> closed_form_weights();

    /// L_n! = L_1 * ... * L_n (empty product for n = 0); memoized.
    Rational factorial(long n);

    /// Falling factorial L_n * L_{n-1} * ... * L_{n-k+1} (k factors).
    Rational falling_factorial(long n, long k);

    /// Smallest m in [1, limit] with L_m = 0, if any.
    std::optional<long> first_vanishing_term(long limit);

    /// Pre-warm the term memo up to index n (for read-only concurrent use).
    void ensure_terms(long n);

    /// Highest valid index for custom kinds; unbounded kinds return nullopt.
    std::optional<long> max_index() const {
        if (!kind_.is_custom()) return std::nullopt;
        return static_cast<long>(kind_.values().size()) - 1;
    }

    /// Memoized root powers p^n, q^n as field elements.
    QuadraticSurd pow_p(long n);
    QuadraticSurd pow_q(long n);

private:
    void check_index(long n) const;

    std::optional<LucasParams> params_;
    SequenceKind kind_;
    std::vector<Rational> memo_;
    std::vector<Rational> fact_;
    std::vector<QuadraticSurd> pow_p_;
    std::vector<QuadraticSurd> pow_q_;
    std::optional<std::pair<QuadraticSurd, QuadraticSurd>> weights_;
};

inline Rational term(SequenceContext& ctx, long n) { return ctx.term(n); }
inline Rational term_closed_form(SequenceContext& ctx, long n) { return ctx.term_closed_form(n); }
inline std::pair<QuadraticSurd, QuadraticSurd> derive_closed_form_weights(SequenceContext& ctx) {
    return ctx.closed_form_weights();
}

/// The companion pair (U, V) over one parameter set, as used by the identity checks.
class LucasPair {
public:
    explicit LucasPair(const LucasParams& params)
        : u_(params, SequenceKind::u()), v_(params, SequenceKind::v()) {}

    SequenceContext& u() { return u_; }
    SequenceContext& v() { return v_; }
    const LucasParams& params() const { return u_.params(); }

private:
    SequenceContext u_;
    SequenceContext v_;
};

/// Both sides of 2*U_{r+s} = U_r*V_s + U_s*V_r, evaluated exactly.
struct AdditionUVerdict {
    long r = 0;
    long s = 0;
    Rational lhs;
    Rational rhs;
    bool holds = false;
};

/**
 * Both candidate right-hand sides for 2*V_{r+s}: the printed form
 * V_r*V_s + U_s*U_r and the discriminant-corrected form V_r*V_s + D*U_r*U_s.
 */
struct AdditionVVerdict {
    long r = 0;
    long s = 0;
    Rational lhs;
    Rational printed_rhs;
    Rational corrected_rhs;
    bool printed_holds = false;
    bool corrected_holds = false;
    std::string note;
};

/**
 * Shift identities with the root-product power read as (p*q)^s = Q^s:
 * U_{r+s} = U_r*V_s - Q^s*U_{r-s} and V_{r+s} = V_r*V_s - Q^s*V_{r-s}, r >= s.
 */
struct ShiftVerdict {
    long r = 0;
    long s = 0;
    Rational u_lhs;
    Rational u_rhs;
    Rational v_lhs;
    Rational v_rhs;
    bool u_holds = false;
    bool v_holds = false;
    std::string note;
};

AdditionUVerdict check_addition_u(LucasPair& pair, long r, long s);
AdditionVVerdict check_addition_v(LucasPair& pair, long r, long s);
ShiftVerdict check_shift_identities(LucasPair& pair, long r, long s);

}  // namespace lucanomial
