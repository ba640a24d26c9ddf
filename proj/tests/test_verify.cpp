/**
 * @file test_verify.cpp
 * @brief Verification sweeps: report semantics, tallies, and determinism.
 */

#include <doctest.h>

#include <cstddef>
#include <string>

#include "lucanomial/triangle_io.hpp"
#include "lucanomial/verify.hpp"

using namespace lucanomial;

namespace {

GridSpec point(long p, long q) {
    GridSpec grid;
    grid.p_min = grid.p_max = p;
    grid.q_min = grid.q_max = q;
    grid.n_max = 8;
    grid.r_max = 6;
    grid.s_max = 6;
    grid.multinomial_n_max = 8;
    grid.closed_form_n_max = 20;
    return grid;
}

}  // namespace

TEST_CASE("oracle equivalence passes for every family at a healthy point") {
    auto reports = run_suite(point(1, -1), Suite::OracleEquivalence);
    CHECK(reports.size() == 6);  // u, u-swapped, v, fontene-left, fontene-right, horadam-h
    for (const auto& report : reports) {
        CHECK(report.status == Report::Status::Pass);
        CHECK(report.id.rfind("eq5-", 0) == 0);
    }
    auto summary = summarize(reports);
    CHECK(summary.pass == 6);
    CHECK(summary.unexpected_fail == 0);
}

TEST_CASE("the printed addition formula fails exactly where predicted") {
    auto reports = run_suite(point(1, -1), Suite::Eq7Printed);
    long fails = 0;
    for (const auto& report : reports)
        if (report.status == Report::Status::Fail) {
            ++fails;
            CHECK(is_expected_fail(report));
            CHECK(report.lhs != report.rhs);
        }
    CHECK(fails == 36);  // every site 1 <= r,s <= 6: U_r*U_s != 0 and D = 5 != 1
    auto summary = summarize(reports);
    CHECK(summary.expected_fail == 36);
    CHECK(summary.unexpected_fail == 0);

    // with D = 1 the printed form is correct and the point reports one aggregate pass
    auto unit = run_suite(point(1, 0), Suite::Eq7Printed);
    REQUIRE(unit.size() == 1);
    CHECK(unit[0].status == Report::Status::Pass);
}

TEST_CASE("the corrected addition forms pass the same sweep") {
    auto summary = summarize(run_suite(point(1, -1), Suite::Eq7));
    CHECK(summary.fail == 0);
    CHECK(summary.pass > 0);
    auto shifts = summarize(run_suite(point(1, -1), Suite::Eq8));
    CHECK(shifts.fail == 0);
    CHECK(shifts.pass > 0);
}

TEST_CASE("the diagonal v identification is singular at P = 0") {
    auto reports = run_suite(point(0, -1), Suite::Eq13);
    CHECK(!reports.empty());
    for (const auto& report : reports)
        CHECK(report.status == Report::Status::SkippedSingular);
}

TEST_CASE("degenerate grid points are skipped, never failed") {
    auto coincident = run_suite(point(2, 1), Suite::OracleEquivalence);
    CHECK(coincident.empty());  // D = 0 never enters the sweep

    auto vanishing = run_suite(point(1, 1), Suite::OracleEquivalence);  // U_3 = 0
    CHECK(!vanishing.empty());
    for (const auto& report : vanishing) CHECK(report.status != Report::Status::Fail);
}

TEST_CASE("suite names parse back to their labels") {
    for (const auto& name : suite_names()) {
        auto suite = parse_suite(name);
        REQUIRE(suite.has_value());
        CHECK(suite_label(*suite) == name);
    }
    CHECK(!parse_suite("bogus").has_value());
}

TEST_CASE("a full run is deterministic and internally consistent") {
    GridSpec grid = point(0, 0);
    grid.p_min = -2;
    grid.p_max = 2;
    grid.q_min = -2;
    grid.q_max = 2;
    auto first = run_suite(grid, Suite::All);
    auto second = run_suite(grid, Suite::All);
    REQUIRE(first.size() == second.size());
    for (std::size_t i = 0; i < first.size(); ++i)
        CHECK(report_to_json_line(first[i]) == report_to_json_line(second[i]));

    auto summary = summarize(first);
    CHECK(summary.total == static_cast<long>(first.size()));
    CHECK(summary.pass + summary.fail + summary.skipped == summary.total);
    CHECK(summary.expected_fail + summary.unexpected_fail == summary.fail);
    CHECK(summary.unexpected_fail == 0);
    CHECK(summary.expected_fail > 0);  // the printed form fails somewhere on any real grid
}

TEST_CASE("the streaming and collecting overloads agree") {
    GridSpec grid = point(2, -1);
    long streamed = 0;
    run_suite(grid, Suite::Contracts, [&](const Report&) { ++streamed; });
    auto collected = run_suite(grid, Suite::Contracts);
    CHECK(streamed == static_cast<long>(collected.size()));
}
