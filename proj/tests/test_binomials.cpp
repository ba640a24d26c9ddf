/**
 * @file test_binomials.cpp
 * @brief Both binomial routes, coefficient pairs, and triangle construction.
 */

#include <doctest.h>

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lucanomial/binomials.hpp"

using namespace lucanomial;

namespace {

SequenceContext make(long p, long q, SequenceKind kind) {
    return SequenceContext(LucasParams(Rational(p), Rational(q)), std::move(kind));
}

std::string row_str(SequenceContext& ctx, long n) {
    std::string out;
    for (long k = 0; k <= n; ++k) {
        if (k) out += " ";
        out += factorial_binomial(ctx, n, k).str();
    }
    return out;
}

}  // namespace

TEST_CASE("golden rows for the classic families") {
    auto fib = make(1, -1, SequenceKind::u());
    CHECK(row_str(fib, 5) == "1 5 15 15 5 1");
    CHECK(factorial_binomial(fib, 6, 3).str() == "60");

    auto gauss2 = make(3, 2, SequenceKind::u());
    CHECK(row_str(gauss2, 4) == "1 15 35 15 1");

    auto lucas = make(1, -1, SequenceKind::v());
    CHECK(factorial_binomial(lucas, 4, 2).str() == "28/3");
}

TEST_CASE("binomials are symmetric with unit edges") {
    auto fib = make(1, -1, SequenceKind::u());
    for (long n = 0; n <= 12; ++n)
        for (long k = 0; k <= n; ++k)
            CHECK(factorial_binomial(fib, n, k) == factorial_binomial(fib, n, n - k));
    CHECK(factorial_binomial(fib, 12, 0).str() == "1");
    CHECK(factorial_binomial(fib, 12, 12).str() == "1");
}

TEST_CASE("fibonomial and gaussian values are integers; lucas-v is not") {
    auto fib = make(1, -1, SequenceKind::u());
    auto g2 = make(3, 2, SequenceKind::u());
    auto g3 = make(4, 3, SequenceKind::u());
    for (long n = 0; n <= 30; ++n)
        for (long k = 0; k <= n; ++k) {
            CHECK(factorial_binomial(fib, n, k).is_integer());
            CHECK(factorial_binomial(g2, n, k).is_integer());
            CHECK(factorial_binomial(g3, n, k).is_integer());
        }

    auto lucas = make(1, -1, SequenceKind::v());
    bool non_integer = false;
    for (long n = 0; n <= 8 && !non_integer; ++n)
        for (long k = 0; k <= n && !non_integer; ++k)
            non_integer = !factorial_binomial(lucas, n, k).is_integer();
    CHECK(non_integer);
}

TEST_CASE("multinomials vanish off the simplex and obey the product rule") {
    auto fib = make(1, -1, SequenceKind::u());
    CHECK(multinomial(fib, 6, {3, 2, 1}).str() == "120");
    CHECK(multinomial(fib, 6, {3, 2, 2}).str() == "0");
    CHECK(multinomial(fib, 0, {}).str() == "1");

    auto verdict = check_multinomial_product(fib, 6, 3, {2, 1});
    CHECK(verdict.holds);
    CHECK(verdict.lhs.str() == "120");
    CHECK(verdict.rhs.str() == "120");

    CHECK_THROWS_AS(multinomial(fib, -1, {}), IndexOutOfRange);
    CHECK_THROWS_AS(multinomial(fib, 3, {-1, 4}), IndexOutOfRange);
}

TEST_CASE("degenerate sequences are rejected by both routes") {
    auto ctx = make(1, 1, SequenceKind::u());  // U_3 = 0
    CHECK_THROWS_AS(factorial_binomial(ctx, 5, 2), DegenerateSequence);
    CHECK_THROWS_AS(recurrence_binomial(ctx, CoeffRule::UPrimary, 5, 2), DegenerateSequence);
    CHECK_THROWS_AS(build_triangle(ctx, std::nullopt, 5), DegenerateSequence);
    // a lattice shallow enough to miss the zero still works
    CHECK(factorial_binomial(ctx, 2, 1).str() == "1");
}

TEST_CASE("index guards on both routes") {
    auto fib = make(1, -1, SequenceKind::u());
    CHECK_THROWS_AS(factorial_binomial(fib, 4, 5), IndexOutOfRange);
    CHECK_THROWS_AS(factorial_binomial(fib, -1, 0), IndexOutOfRange);
    CHECK_THROWS_AS(recurrence_binomial(fib, CoeffRule::UPrimary, 4, 5), IndexOutOfRange);
    CHECK_THROWS_AS(u_coeffs(fib, 0, 1), IndexOutOfRange);
}

TEST_CASE("u pairs satisfy the linear relation in both orderings") {
    auto fib = make(1, -1, SequenceKind::u());
    for (long r = 1; r <= 6; ++r)
        for (long s = 1; s <= 6; ++s) {
            auto primary = u_coeffs(fib, r, s, UVariant::Primary);
            auto swapped = u_coeffs(fib, r, s, UVariant::Swapped);
            QuadraticSurd ur(fib.term(r)), us(fib.term(s)), urs(fib.term(r + s));
            CHECK(primary.g1 * ur + primary.g2 * us == urs);
            CHECK(swapped.g1 * ur + swapped.g2 * us == urs);
            CHECK(primary.g1 == fib.pow_p(s));
            CHECK(primary.g2 == fib.pow_q(r));
            CHECK(swapped.g1 == fib.pow_q(s));
            CHECK(swapped.g2 == fib.pow_p(r));
        }
}

TEST_CASE("v pairs: rational closed forms off the diagonal, surd halves on it") {
    auto lucas = make(1, -1, SequenceKind::v());
    auto pair21 = v_coeffs(lucas, 2, 1);
    CHECK(pair21.g1 == QuadraticSurd(Rational(1)));
    CHECK(pair21.g2 == QuadraticSurd(Rational(1)));

    // for r > s the solve reduces to g1 = U_r/U_{r-s}, g2 = -Q^{r-s} U_s/U_{r-s}
    auto u_ctx = make(1, -1, SequenceKind::u());
    for (long r = 2; r <= 6; ++r)
        for (long s = 1; s < r; ++s) {
            auto pair = v_coeffs(lucas, r, s);
            Rational udiff = u_ctx.term(r - s);
            CHECK(pair.g1 == QuadraticSurd(u_ctx.term(r) / udiff));
            Rational qpow = pow_rational(Rational(-1), r - s);
            CHECK(pair.g2 == QuadraticSurd(-(qpow * u_ctx.term(s)) / udiff));
        }

    auto diag = v_coeffs(lucas, 1, 1);
    CHECK(!diag.g1.is_rational());
    CHECK(!diag.g2.is_rational());
    CHECK((diag.g1 + diag.g2).as_rational().str() == "3");  // V_2/V_1
}

TEST_CASE("singular coefficient sites carry their location") {
    auto v_zero_p = make(0, -1, SequenceKind::v());  // the r = s form needs P != 0
    CHECK_THROWS_AS(v_coeffs(v_zero_p, 1, 1), SingularCoefficient);

    auto v_zero_q = make(2, 0, SequenceKind::v());  // one root is 0: the solve degenerates
    CHECK_THROWS_AS(v_coeffs(v_zero_q, 2, 1), SingularCoefficient);
    try {
        v_coeffs(v_zero_q, 2, 1);
        FAIL("singular site must throw");
    } catch (const SingularCoefficient& e) {
        CHECK(e.site_r() == 2);
        CHECK(e.site_s() == 1);
    }

    auto cust = SequenceContext::custom(
        {Rational(5), Rational(1), Rational(2), Rational(0), Rational(7)});
    CHECK_THROWS_AS(fontene_coeffs(cust, 1, 3, FonteneVariant::Left), SingularCoefficient);
    CHECK_THROWS_AS(fontene_coeffs(cust, 3, 1, FonteneVariant::Right), SingularCoefficient);
}

TEST_CASE("fontene pairs keep one side at one") {
    auto fib = make(1, -1, SequenceKind::u());
    auto left = fontene_coeffs(fib, 2, 3, FonteneVariant::Left);
    CHECK(left.g1 == QuadraticSurd(Rational(1)));
    CHECK(left.g2 == QuadraticSurd(Rational(2)));  // (U_5 - U_2)/U_3
    auto right = fontene_coeffs(fib, 2, 3, FonteneVariant::Right);
    CHECK(right.g2 == QuadraticSurd(Rational(1)));
    CHECK(right.g1 == QuadraticSurd(Rational(3)));  // (U_5 - U_3)/U_2
}

TEST_CASE("horadam pairs weight the root powers") {
    auto h = make(1, -1, SequenceKind::horadam_h(Rational(3), Rational(1)));
    auto diag = horadam_h_coeffs(h, 1, 1);
    CHECK((diag.g1 + diag.g2).as_rational() == h.term(2) / h.term(1));

    auto off = horadam_h_coeffs(h, 3, 1);
    QuadraticSurd lhs = off.g1 * QuadraticSurd(h.term(3)) + off.g2 * QuadraticSurd(h.term(1));
    CHECK(lhs == QuadraticSurd(h.term(4)));

    // the off-diagonal solve is weight-independent: identical to the v pair
    auto v_ctx = make(1, -1, SequenceKind::v());
    auto v_pair = v_coeffs(v_ctx, 3, 1);
    CHECK(off.g1 == v_pair.g1);
    CHECK(off.g2 == v_pair.g2);
}

TEST_CASE("rules refuse mismatched sequence kinds") {
    auto lucas = make(1, -1, SequenceKind::v());
    CHECK_THROWS_AS(u_coeffs(lucas, 1, 1), Error);
    auto fib = make(1, -1, SequenceKind::u());
    CHECK_THROWS_AS(v_coeffs(fib, 1, 1), Error);
    CHECK_THROWS_AS(horadam_h_coeffs(fib, 1, 1), Error);
}

TEST_CASE("rule names round-trip and defaults match the kind") {
    for (const char* name :
         {"u", "u-swapped", "v", "fontene-left", "fontene-right", "horadam-h"}) {
        auto rule = parse_coeff_rule(name);
        REQUIRE(rule.has_value());
        CHECK(coeff_rule_label(*rule) == name);
    }
    CHECK(!parse_coeff_rule("nope").has_value());
    CHECK(coeff_rule_label(default_rule_for(SequenceKind::u())) == "u");
    CHECK(coeff_rule_label(default_rule_for(SequenceKind::v())) == "v");
    CHECK(coeff_rule_label(default_rule_for(SequenceKind::horadam_h(Rational(3), Rational(1)))) ==
          "horadam-h");
    CHECK(coeff_rule_label(default_rule_for(SequenceKind::horadam_w(Rational(1), Rational(3)))) ==
          "fontene-left");
    CHECK(coeff_rule_label(default_rule_for(
              SequenceKind::custom({Rational(1), Rational(2)}))) == "fontene-left");
}

TEST_CASE("recurrence route reproduces the factorial route for every family") {
    auto fib = make(1, -1, SequenceKind::u());
    auto lucas = make(1, -1, SequenceKind::v());
    auto h = make(1, -1, SequenceKind::horadam_h(Rational(3), Rational(1)));
    auto w = make(1, -1, SequenceKind::horadam_w(Rational(1), Rational(3)));
    for (long n = 0; n <= 8; ++n)
        for (long k = 0; k <= n; ++k) {
            Rational fib_oracle = factorial_binomial(fib, n, k);
            CHECK(recurrence_binomial(fib, CoeffRule::UPrimary, n, k) == fib_oracle);
            CHECK(recurrence_binomial(fib, CoeffRule::USwapped, n, k) == fib_oracle);
            CHECK(recurrence_binomial(fib, CoeffRule::FonteneLeft, n, k) == fib_oracle);
            CHECK(recurrence_binomial(fib, CoeffRule::FonteneRight, n, k) == fib_oracle);
            CHECK(recurrence_binomial(lucas, CoeffRule::V, n, k) ==
                  factorial_binomial(lucas, n, k));
            CHECK(recurrence_binomial(h, CoeffRule::HoradamH, n, k) ==
                  factorial_binomial(h, n, k));
            CHECK(recurrence_binomial(w, CoeffRule::FonteneLeft, n, k) ==
                  factorial_binomial(w, n, k));
        }
}

TEST_CASE("triangles carry their provenance and agree across routes") {
    auto fib = make(1, -1, SequenceKind::u());
    Triangle fact = build_triangle(fib, std::nullopt, 6);
    CHECK(fact.family == "u");
    CHECK(fact.rule == "factorial");
    REQUIRE(fact.param_p.has_value());
    CHECK(fact.param_p->str() == "1");
    CHECK(fact.rows.size() == 7);

    Triangle rec = build_triangle(fib, CoeffRule::UPrimary, 6);
    CHECK(rec.rule == "recurrence-u");
    CHECK(fact.rows == rec.rows);
    CHECK(!(fact == rec));  // same values, different provenance

    auto cust = SequenceContext::custom(
        {Rational(1), Rational(1), Rational(2), Rational(3), Rational(5)});
    Triangle via_fontene = build_triangle(cust, CoeffRule::FonteneLeft, 4);
    Triangle via_factorial = build_triangle(cust, std::nullopt, 4);
    CHECK(via_fontene.family == "custom");
    CHECK(!via_fontene.param_p.has_value());
    CHECK(via_fontene.rows == via_factorial.rows);

    CHECK_THROWS_AS(build_triangle(fib, std::nullopt, -1), IndexOutOfRange);
}
