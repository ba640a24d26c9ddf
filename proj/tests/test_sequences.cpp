/**
 * @file test_sequences.cpp
 * @brief Sequence terms, factorials, closed forms, and identity verdicts.
 */

#include <doctest.h>

#include <string>
#include <utility>
#include <vector>

#include "lucanomial/sequences.hpp"

using namespace lucanomial;

namespace {

SequenceContext make(long p, long q, SequenceKind kind) {
    return SequenceContext(LucasParams(Rational(p), Rational(q)), std::move(kind));
}

std::string terms(SequenceContext& ctx, long n) {
    std::string out;
    for (long i = 0; i <= n; ++i) {
        if (i) out += ",";
        out += ctx.term(i).str();
    }
    return out;
}

}  // namespace

TEST_CASE("classic sequences match their tables") {
    auto fib = make(1, -1, SequenceKind::u());
    CHECK(terms(fib, 10) == "0,1,1,2,3,5,8,13,21,34,55");
    auto lucas = make(1, -1, SequenceKind::v());
    CHECK(terms(lucas, 7) == "2,1,3,4,7,11,18,29");
    auto pell = make(2, -1, SequenceKind::u());
    CHECK(terms(pell, 6) == "0,1,2,5,12,29,70");
    auto mersenne = make(3, 2, SequenceKind::u());
    CHECK(terms(mersenne, 6) == "0,1,3,7,15,31,63");
}

TEST_CASE("horadam kinds run the same recurrence from caller seeds") {
    auto w = make(1, -1, SequenceKind::horadam_w(Rational(1), Rational(0)));
    CHECK(terms(w, 7) == "1,0,1,1,2,3,5,8");
    auto h = make(1, -1, SequenceKind::horadam_h(Rational(3), Rational(1)));
    CHECK(terms(h, 6) == "3,1,4,5,9,14,23");
}

TEST_CASE("negative indices are rejected") {
    auto fib = make(1, -1, SequenceKind::u());
    CHECK_THROWS_AS(fib.term(-1), IndexOutOfRange);
    CHECK_THROWS_AS(fib.factorial(-2), IndexOutOfRange);
}

TEST_CASE("closed forms agree with the recurrence for every kind") {
    std::vector<SequenceKind> kinds = {
        SequenceKind::u(),
        SequenceKind::v(),
        SequenceKind::horadam_w(Rational(1), Rational(0)),
        SequenceKind::horadam_h(Rational(3), Rational(1)),
    };
    std::vector<std::pair<long, long>> points = {{1, -1}, {3, 2}, {2, -1}, {-3, 3}};
    for (const auto& kind : kinds)
        for (auto [p, q] : points) {
            auto ctx = make(p, q, kind);
            for (long n = 0; n <= 30; ++n) CHECK(ctx.term(n) == ctx.term_closed_form(n));
        }
}

TEST_CASE("closed-form weights reproduce the seeds") {
    auto h = make(1, -1, SequenceKind::horadam_h(Rational(3), Rational(1)));
    auto [ha, hb] = h.closed_form_weights();
    CHECK((ha + hb).as_rational().str() == "3");  // H_0
    const LucasParams& params = h.params();
    CHECK((ha * params.root_p() + hb * params.root_q()).as_rational().str() == "1");  // H_1

    auto w = make(1, -1, SequenceKind::horadam_w(Rational(1), Rational(0)));
    auto [wa, wb] = w.closed_form_weights();
    CHECK(((wa - wb) / params.sqrt_disc()).as_rational().str() == "1");  // W_0
}

TEST_CASE("custom sequences are bounded and have no closed form") {
    auto ctx = SequenceContext::custom({Rational(1), Rational(4), Rational(9), Rational(16)});
    CHECK(ctx.term(2).str() == "9");
    CHECK(ctx.max_index() == 3);
    CHECK(!ctx.has_params());
    CHECK(ctx.kind().label() == "custom");
    CHECK_THROWS_AS(ctx.term(4), IndexOutOfRange);
    CHECK_THROWS_AS(ctx.term(-1), IndexOutOfRange);
    CHECK_THROWS_AS(ctx.term_closed_form(1), Error);
    CHECK_THROWS_AS(ctx.params(), Error);
    CHECK(ctx.factorial(3).str() == "576");  // 4 * 9 * 16
    CHECK_THROWS_AS(SequenceKind::custom({}), Error);
}

TEST_CASE("factorials and falling factorials") {
    auto fib = make(1, -1, SequenceKind::u());
    CHECK(fib.factorial(0).str() == "1");
    CHECK(fib.factorial(5).str() == "30");  // 1*1*2*3*5
    CHECK(fib.falling_factorial(6, 3).str() == "120");  // 8*5*3
    CHECK(fib.falling_factorial(6, 0).str() == "1");
}

TEST_CASE("vanishing terms poison factorials with a precise index") {
    auto ctx = make(1, 1, SequenceKind::u());  // 0,1,1,0,-1,-1,0,... six-periodic
    CHECK(ctx.first_vanishing_term(10) == 3);
    CHECK_THROWS_AS(ctx.factorial(5), DegenerateSequence);
    try {
        ctx.factorial(5);
        FAIL("factorial over a vanishing term must throw");
    } catch (const DegenerateSequence& e) {
        CHECK(e.index() == 3);
    }
    auto fib = make(1, -1, SequenceKind::u());
    CHECK(!fib.first_vanishing_term(50).has_value());
}

TEST_CASE("root powers track the closed form") {
    auto fib = make(1, -1, SequenceKind::u());
    const LucasParams& params = fib.params();
    CHECK(fib.pow_p(7) == params.root_p().pow(7));
    CHECK(fib.pow_q(4) == params.root_q().pow(4));
    CHECK((fib.pow_p(9) - fib.pow_q(9)) / params.sqrt_disc() == QuadraticSurd(fib.term(9)));
}

TEST_CASE("u addition identity holds with exact witnesses") {
    LucasPair pair(LucasParams(Rational(1), Rational(-1)));
    auto verdict = check_addition_u(pair, 3, 2);
    CHECK(verdict.holds);
    CHECK(verdict.lhs.str() == "10");  // 2*U_5
    CHECK(verdict.rhs.str() == "10");
}

TEST_CASE("printed v addition fails where the corrected form holds") {
    LucasPair pair(LucasParams(Rational(1), Rational(-1)));
    auto verdict = check_addition_v(pair, 1, 1);
    CHECK(verdict.lhs.str() == "6");          // 2*V_2
    CHECK(verdict.printed_rhs.str() == "2");  // V_1*V_1 + U_1*U_1
    CHECK(!verdict.printed_holds);
    CHECK(verdict.corrected_rhs.str() == "6");  // V_1*V_1 + D*U_1*U_1
    CHECK(verdict.corrected_holds);

    // with D = 1 both readings coincide
    LucasPair unit(LucasParams(Rational(1), Rational(0)));
    auto both = check_addition_v(unit, 1, 1);
    CHECK(both.printed_holds);
    CHECK(both.corrected_holds);
}

TEST_CASE("shift identities hold under the Q^s reading") {
    LucasPair pair(LucasParams(Rational(1), Rational(-1)));
    auto verdict = check_shift_identities(pair, 5, 2);
    CHECK(verdict.u_holds);
    CHECK(verdict.v_holds);
    CHECK(verdict.u_lhs.str() == "13");  // U_7
    CHECK(verdict.v_lhs.str() == "29");  // V_7
    CHECK_THROWS_AS(check_shift_identities(pair, 1, 2), IndexOutOfRange);
}
