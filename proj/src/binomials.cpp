#include "lucanomial/binomials.hpp"

#include <string>
#include <utility>

namespace lucanomial {

namespace {

void require_site(long r, long s) {
    if (r < 1 || s < 1)
        throw IndexOutOfRange("coefficient site needs r, s >= 1, got r=" + std::to_string(r) +
                              ", s=" + std::to_string(s));
}

void require_kind(SequenceContext& ctx, SequenceKind::Family family, const char* rule_name) {
    if (ctx.kind().family() != family)
        throw Error(std::string(rule_name) + " coefficients need a matching sequence kind, got '" +
                    ctx.kind().label() + "'");
}

/// Any L_m = 0 with 1 <= m <= n makes L-factorials non-invertible; abort early.
void require_nondegenerate(SequenceContext& ctx, long n) {
    if (auto m = ctx.first_vanishing_term(n))
        throw DegenerateSequence(static_cast<int>(*m), ctx.describe());
}

/// Assert the linear relation g1*L_r + g2*L_s = L_{r+s} in the field, then wrap.
CoefficientPair checked_pair(SequenceContext& ctx, long r, long s, QuadraticSurd g1,
                             QuadraticSurd g2) {
    QuadraticSurd lhs = g1 * QuadraticSurd(ctx.term(r)) + g2 * QuadraticSurd(ctx.term(s));
    QuadraticSurd rhs{ctx.term(r + s)};
    if (!(lhs == rhs))
        throw InternalInconsistency("coefficient contract g1*L_r + g2*L_s = L_{r+s} broken at (" +
                                    std::to_string(r) + ", " + std::to_string(s) + "): " +
                                    lhs.str() + " vs " + rhs.str());
    return CoefficientPair{std::move(g1), std::move(g2), r, s};
}

/**
 * Exact solution of the two-root system
 *   h1*p^r + h2*p^s = p^{r+s},  h1*q^r + h2*q^s = q^{r+s}
 * by Cramer's rule. Any solution works for every sequence of the form
 * A*p^n + B*q^n, so both the V and the Horadam-H family share it for r != s.
 */
std::pair<QuadraticSurd, QuadraticSurd> root_power_solve(SequenceContext& ctx, long r, long s) {
    QuadraticSurd det = ctx.pow_p(r) * ctx.pow_q(s) - ctx.pow_q(r) * ctx.pow_p(s);
    if (det.is_zero())
        throw SingularCoefficient(static_cast<int>(r), static_cast<int>(s),
                                  "divisor p^r*q^s - q^r*p^s vanishes");
    QuadraticSurd h1 = (ctx.pow_p(r + s) * ctx.pow_q(s) - ctx.pow_p(s) * ctx.pow_q(r + s)) / det;
    QuadraticSurd h2 = (ctx.pow_p(r) * ctx.pow_q(r + s) - ctx.pow_p(r + s) * ctx.pow_q(r)) / det;
    return {std::move(h1), std::move(h2)};
}

}  // namespace

std::string coeff_rule_label(CoeffRule rule) {
    switch (rule) {
        case CoeffRule::UPrimary: return "u";
        case CoeffRule::USwapped: return "u-swapped";
        case CoeffRule::V: return "v";
        case CoeffRule::FonteneLeft: return "fontene-left";
        case CoeffRule::FonteneRight: return "fontene-right";
        case CoeffRule::HoradamH: return "horadam-h";
    }
    return "?";
}

std::optional<CoeffRule> parse_coeff_rule(std::string_view text) {
    if (text == "u") return CoeffRule::UPrimary;
    if (text == "u-swapped") return CoeffRule::USwapped;
    if (text == "v") return CoeffRule::V;
    if (text == "fontene-left") return CoeffRule::FonteneLeft;
    if (text == "fontene-right") return CoeffRule::FonteneRight;
    if (text == "horadam-h") return CoeffRule::HoradamH;
    return std::nullopt;
}

CoeffRule default_rule_for(const SequenceKind& kind) {
    switch (kind.family()) {
        case SequenceKind::Family::U: return CoeffRule::UPrimary;
        case SequenceKind::Family::V: return CoeffRule::V;
        case SequenceKind::Family::HoradamH: return CoeffRule::HoradamH;
        default: return CoeffRule::FonteneLeft;  // Fontene works for any sequence
    }
}

Rational factorial_binomial(SequenceContext& ctx, long n, long k) {
    if (n < 0 || k < 0 || k > n)
        throw IndexOutOfRange("binomial needs 0 <= k <= n, got n=" + std::to_string(n) +
                              ", k=" + std::to_string(k));
    require_nondegenerate(ctx, n);
    return ctx.falling_factorial(n, k) / ctx.factorial(k);
}

Rational multinomial(SequenceContext& ctx, long n, const std::vector<long>& parts) {
    if (n < 0) throw IndexOutOfRange("multinomial needs n >= 0");
    long sum = 0;
    for (long part : parts) {
        if (part < 0) throw IndexOutOfRange("multinomial parts must be nonnegative");
        sum += part;
    }
    if (sum != n) return Rational(0);
    require_nondegenerate(ctx, n);
    Rational result = ctx.factorial(n);
    for (long part : parts) result = result / ctx.factorial(part);
    return result;
}

ProductVerdict check_multinomial_product(SequenceContext& ctx, long n, long k,
                                         const std::vector<long>& parts) {
    long sum = k;
    for (long part : parts) sum += part;
    if (sum != n)
        throw IndexOutOfRange("decomposition must satisfy k + sum(parts) = n, got " +
                              std::to_string(sum) + " vs n=" + std::to_string(n));
    ProductVerdict v;
    v.n = n;
    v.k = k;
    v.parts = parts;
    v.lhs = factorial_binomial(ctx, n, k) * multinomial(ctx, n - k, parts);
    std::vector<long> joint;
    joint.reserve(parts.size() + 1);
    joint.push_back(k);
    joint.insert(joint.end(), parts.begin(), parts.end());
    v.rhs = multinomial(ctx, n, joint);
    v.holds = v.lhs == v.rhs;
    return v;
}

CoefficientPair u_coeffs(SequenceContext& ctx, long r, long s, UVariant variant) {
    require_site(r, s);
    require_kind(ctx, SequenceKind::Family::U, "u");
    // (p^s, q^r) and (q^s, p^r) both telescope against U_r, U_s:
    //   p^s(p^r - q^r) + q^r(p^s - q^s) = p^{r+s} - q^{r+s}
    if (variant == UVariant::Primary) return checked_pair(ctx, r, s, ctx.pow_p(s), ctx.pow_q(r));
    return checked_pair(ctx, r, s, ctx.pow_q(s), ctx.pow_p(r));
}

CoefficientPair v_coeffs(SequenceContext& ctx, long r, long s) {
    require_site(r, s);
    require_kind(ctx, SequenceKind::Family::V, "v");
    if (r != s) {
        auto [h1, h2] = root_power_solve(ctx, r, s);
        return checked_pair(ctx, r, s, std::move(h1), std::move(h2));
    }
    if (ctx.params().P().is_zero())
        throw SingularCoefficient(static_cast<int>(r), static_cast<int>(s),
                                  "the r = s identification needs P != 0");
    QuadraticSurd vr = ctx.pow_p(r) + ctx.pow_q(r);
    if (vr.is_zero())
        throw SingularCoefficient(static_cast<int>(r), static_cast<int>(s), "V_r vanishes");
    CoefficientPair pair = checked_pair(ctx, r, s, ctx.pow_p(2 * r) / vr, ctx.pow_q(2 * r) / vr);
    // each half is a genuine surd; only the sum collapses, to V_{2r}/V_r
    Rational sum = (pair.g1 + pair.g2).as_rational();
    if (sum != ctx.term(2 * r) / ctx.term(r))
        throw InternalInconsistency("r = s pair sum " + sum.str() + " differs from V_2r/V_r");
    return pair;
}

CoefficientPair fontene_coeffs(SequenceContext& ctx, long r, long s, FonteneVariant variant) {
    require_site(r, s);
    Rational whole = ctx.term(r + s);
    if (variant == FonteneVariant::Left) {
        Rational divisor = ctx.term(s);
        if (divisor.is_zero())
            throw SingularCoefficient(static_cast<int>(r), static_cast<int>(s),
                                      "left pair divides by A_s = 0");
        return checked_pair(ctx, r, s, QuadraticSurd(Rational(1)),
                            QuadraticSurd((whole - ctx.term(r)) / divisor));
    }
    Rational divisor = ctx.term(r);
    if (divisor.is_zero())
        throw SingularCoefficient(static_cast<int>(r), static_cast<int>(s),
                                  "right pair divides by A_r = 0");
    return checked_pair(ctx, r, s, QuadraticSurd((whole - ctx.term(s)) / divisor),
                        QuadraticSurd(Rational(1)));
}

CoefficientPair horadam_h_coeffs(SequenceContext& ctx, long r, long s) {
    require_site(r, s);
    require_kind(ctx, SequenceKind::Family::HoradamH, "horadam-h");
    if (r != s) {
        auto [h1, h2] = root_power_solve(ctx, r, s);
        return checked_pair(ctx, r, s, std::move(h1), std::move(h2));
    }
    auto [a, b] = ctx.closed_form_weights();
    QuadraticSurd hr = a * ctx.pow_p(r) + b * ctx.pow_q(r);
    if (hr.is_zero())
        throw SingularCoefficient(static_cast<int>(r), static_cast<int>(s),
                                  "H_r vanishes in the field");
    return checked_pair(ctx, r, s, a * ctx.pow_p(2 * r) / hr, b * ctx.pow_q(2 * r) / hr);
}

CoefficientPair coeffs_for_rule(SequenceContext& ctx, CoeffRule rule, long r, long s) {
    switch (rule) {
        case CoeffRule::UPrimary: return u_coeffs(ctx, r, s, UVariant::Primary);
        case CoeffRule::USwapped: return u_coeffs(ctx, r, s, UVariant::Swapped);
        case CoeffRule::V: return v_coeffs(ctx, r, s);
        case CoeffRule::FonteneLeft: return fontene_coeffs(ctx, r, s, FonteneVariant::Left);
        case CoeffRule::FonteneRight: return fontene_coeffs(ctx, r, s, FonteneVariant::Right);
        case CoeffRule::HoradamH: return horadam_h_coeffs(ctx, r, s);
    }
    throw Error("unreachable coefficient rule");
}

Rational recurrence_binomial(SequenceContext& ctx, CoeffRule rule, long n, long k) {
    if (n < 0 || k < 0 || k > n)
        throw IndexOutOfRange("binomial needs 0 <= k <= n, got n=" + std::to_string(n) +
                              ", k=" + std::to_string(k));
    require_nondegenerate(ctx, n);
    // table[r][s] = C(r+s; r,s) in the field; boundary rows/columns are 1
    long rows = k, cols = n - k;
    std::vector<std::vector<QuadraticSurd>> table(
        static_cast<std::size_t>(rows) + 1,
        std::vector<QuadraticSurd>(static_cast<std::size_t>(cols) + 1,
                                   QuadraticSurd(Rational(1))));
    for (long r = 1; r <= rows; ++r)
        for (long s = 1; s <= cols; ++s) {
            CoefficientPair pair = coeffs_for_rule(ctx, rule, r, s);
            table[r][s] = pair.g1 * table[r - 1][s] + pair.g2 * table[r][s - 1];
        }
    return table[rows][cols].as_rational();
}

Triangle build_triangle(SequenceContext& ctx, std::optional<CoeffRule> rule, long n_max) {
    if (n_max < 0) throw IndexOutOfRange("triangle needs n_max >= 0");
    require_nondegenerate(ctx, n_max);
    Triangle tri;
    tri.family = ctx.kind().label();
    if (ctx.has_params()) {
        tri.param_p = ctx.params().P();
        tri.param_q = ctx.params().Q();
    }
    tri.rule = rule ? "recurrence-" + coeff_rule_label(*rule) : "factorial";
    tri.rows.reserve(static_cast<std::size_t>(n_max) + 1);
    if (!rule) {
        for (long n = 0; n <= n_max; ++n) {
            std::vector<Rational> row;
            row.reserve(static_cast<std::size_t>(n) + 1);
            Rational value(1);
            row.push_back(value);
            for (long k = 0; k < n; ++k) {
                // ratio of consecutive falling-factorial forms: C(n,k+1) = C(n,k) * L_{n-k} / L_{k+1}
                value = value * ctx.term(n - k) / ctx.term(k + 1);
                row.push_back(value);
            }
            tri.rows.push_back(std::move(row));
        }
        return tri;
    }
    // one DP pass over the lattice {(r, s) : r + s <= n_max}, then read anti-diagonals
    std::vector<std::vector<QuadraticSurd>> table(static_cast<std::size_t>(n_max) + 1);
    for (long r = 0; r <= n_max; ++r)
        table[static_cast<std::size_t>(r)].assign(static_cast<std::size_t>(n_max - r) + 1,
                                                  QuadraticSurd(Rational(1)));
    for (long r = 1; r <= n_max; ++r)
        for (long s = 1; r + s <= n_max; ++s) {
            CoefficientPair pair = coeffs_for_rule(ctx, *rule, r, s);
            table[r][s] = pair.g1 * table[r - 1][s] + pair.g2 * table[r][s - 1];
        }
    for (long n = 0; n <= n_max; ++n) {
        std::vector<Rational> row;
        row.reserve(static_cast<std::size_t>(n) + 1);
        for (long k = 0; k <= n; ++k) row.push_back(table[k][n - k].as_rational());
        tri.rows.push_back(std::move(row));
    }
    return tri;
}

}  // namespace lucanomial
