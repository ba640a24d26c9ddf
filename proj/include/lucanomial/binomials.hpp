#pragma once

/**
 * @file binomials.hpp
 * @brief Generalized binomial/multinomial coefficients by two independent routes.
 *
 * Route one (the oracle) is the factorial formula C(n,k) = L_n!/(L_k! L_{n-k}!),
 * evaluated as a falling factorial over L_k! to keep intermediates small. Route
 * two fills a Pascal-like table with site-dependent coefficient pairs (g1, g2):
 *
 *     C(r+s; r,s) = g1(r,s) * C(r+s-1; r-1,s) + g2(r,s) * C(r+s-1; r,s-1)
 *
 * which reproduces the factorial values exactly whenever every pair satisfies
 * g1*L_r + g2*L_s = L_{r+s}. Four coefficient families are provided: root-power
 * pairs for U, a linear solve in Q(sqrt(D)) for V (with a separate r = s
 * identification), rational Fontene pairs for arbitrary sequences, and weighted
 * root-power pairs for Horadam H. Every pair's linear relation is asserted in
 * the field at construction time, before any use.
 *
 * The recurrence table lives entirely in Q(sqrt(D)) and collapses to Rational
 * only at extraction: the U/V/H families have irrational pair entries even
 * though every table value is rational.
 */

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lucanomial/quadfield.hpp"
#include "lucanomial/rational.hpp"
#include "lucanomial/sequences.hpp"

namespace lucanomial {

/// The (g1, g2) multipliers attached to lattice site (r, s); g1 pairs with L_r.
struct CoefficientPair {
    QuadraticSurd g1;
    QuadraticSurd g2;
    long r = 0;
    long s = 0;
};

/// Which of the two contract-satisfying U root-power orderings to use.
enum class UVariant { Primary, Swapped };

/// Which side of the Fontene pair carries the coefficient 1.
enum class FonteneVariant { Left, Right };

/// Coefficient family driving the recurrence route.
enum class CoeffRule { UPrimary, USwapped, V, FonteneLeft, FonteneRight, HoradamH };

/// "u", "u-swapped", "v", "fontene-left", "fontene-right", "horadam-h".
std::string coeff_rule_label(CoeffRule rule);
std::optional<CoeffRule> parse_coeff_rule(std::string_view text);

/// The natural coefficient family for a sequence kind (Fontene for W/custom).
CoeffRule default_rule_for(const SequenceKind& kind);

/// Oracle route: L_n! / (L_k! * L_{n-k}!) via falling factorial over L_k!.
Rational factorial_binomial(SequenceContext& ctx, long n, long k);

/// L_n! / prod L_{k_i}! when the parts sum to n; exactly 0 otherwise.
Rational multinomial(SequenceContext& ctx, long n, const std::vector<long>& parts);

/// Both sides of C(n,k) * C(n-k; parts) = C(n; k, parts), evaluated exactly.
struct ProductVerdict {
    long n = 0;
    long k = 0;
    std::vector<long> parts;
    Rational lhs;
    Rational rhs;
    bool holds = false;
};

ProductVerdict check_multinomial_product(SequenceContext& ctx, long n, long k,
                                         const std::vector<long>& parts);

/**
 * Root-power pair for the U family. Primary is (g1, g2) = (p^s, q^r); swapped
 * is (q^s, p^r). Both satisfy g1*U_r + g2*U_s = U_{r+s}, since
 * p^s(p^r - q^r) + q^r(p^s - q^s) telescopes to p^{r+s} - q^{r+s}.
 */
CoefficientPair u_coeffs(SequenceContext& ctx, long r, long s,
                         UVariant variant = UVariant::Primary);

/**
 * V-family pair. For r != s the 2x2 root-power system
 *   h1*p^r + h2*p^s = p^{r+s},  h1*q^r + h2*q^s = q^{r+s}
 * is solved exactly in Q(sqrt(D)); the determinant p^r q^s - q^r p^s must not
 * vanish. For r = s each half is the genuine surd h_i = root_i^{2r}/(p^r + q^r)
 * (requires P != 0 and V_r != 0); only the sum h1 + h2 = V_{2r}/V_r is rational.
 */
CoefficientPair v_coeffs(SequenceContext& ctx, long r, long s);

/**
 * Rational pair for an arbitrary sequence A: left variant (1, (A_{r+s}-A_r)/A_s),
 * right variant ((A_{r+s}-A_s)/A_r, 1). The dividing term must be nonzero.
 */
CoefficientPair fontene_coeffs(SequenceContext& ctx, long r, long s, FonteneVariant variant);

/**
 * Horadam-H pair. For r = s: h_i = W_i * root_i^{2r} / (A*p^r + B*q^r) with the
 * closed-form weights (A, B); singular when H_r vanishes. For r != s the pair
 * coincides with the V solve (the root-power system is weight-independent).
 */
CoefficientPair horadam_h_coeffs(SequenceContext& ctx, long r, long s);

/// Dispatch on the rule tag; enforces that the context kind matches the rule.
CoefficientPair coeffs_for_rule(SequenceContext& ctx, CoeffRule rule, long r, long s);

/**
 * Recurrence route: dynamic programming over the (r, s) lattice with
 * (r, s) = (k, n-k) as the target and boundary values 1; collapses to Rational
 * at extraction. Must agree with factorial_binomial everywhere (tested, not
 * assumed).
 */
Rational recurrence_binomial(SequenceContext& ctx, CoeffRule rule, long n, long k);

/// Rows 0..n_max of C(n,k) plus the metadata needed to reproduce them.
struct Triangle {
    std::string family;                 // sequence kind label
    std::optional<Rational> param_p;    // absent for custom sequences
    std::optional<Rational> param_q;
    std::string rule;                   // "factorial" or "recurrence-<family>"
    std::vector<std::vector<Rational>> rows;

    bool operator==(const Triangle&) const = default;
};

/// Build rows 0..n_max; rule = nullopt selects the factorial route.
Triangle build_triangle(SequenceContext& ctx, std::optional<CoeffRule> rule, long n_max);

}  // namespace lucanomial
