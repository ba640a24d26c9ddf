#pragma once

/**
 * @file verify.hpp
 * @brief Batch identity-verification sweeps over integer parameter grids.
 *
 * A suite walks every (P, Q) grid point with D = P^2 - 4Q != 0 and evaluates a
 * family of identity checks at every site, in a fixed deterministic order, with
 * exact arithmetic throughout. Outcomes become Reports:
 *
 *  - one aggregate "pass" report per (identity, grid point) when every site
 *    under it passed,
 *  - one "fail" report per failing site, carrying both sides as exact strings,
 *  - one "skipped-singular" report per site (or per point) whose side
 *    conditions fail: vanishing sequence terms, vanishing coefficient
 *    divisors, or the r = s identification at P = 0.
 *
 * The eq7-printed suite exercises a formula that is genuinely wrong as printed;
 * its fail reports are expected and are tallied separately by Summary.
 */

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lucanomial/rational.hpp"

namespace lucanomial {

/// Inclusive integer parameter ranges plus sweep bounds.
struct GridSpec {
    long p_min = -3;
    long p_max = 3;
    long q_min = -3;
    long q_max = 3;
    long n_max = 20;              // triangle depth for oracle equivalence
    long r_max = 20;              // lattice-site bounds for identity sweeps
    long s_max = 20;
    long multinomial_n_max = 12;  // decomposition sweep bound
    long closed_form_n_max = 50;  // term / closed-form agreement bound
};

/// One checked identity at one grid point and site, with exact witnesses.
struct Report {
    enum class Status { Pass, Fail, SkippedSingular };

    std::string id;    // identity id, e.g. "eq5-u" or "eq7-printed"
    Rational p;        // grid point
    Rational q;
    std::string site;  // e.g. "r=3,s=1", "n=5,k=2", or an aggregate like "n<=20"
    Status status = Status::Pass;
    std::string lhs;   // exact witness values; empty on aggregates/skips
    std::string rhs;
    std::string note;
};

/// "pass", "fail", or "skipped-singular".
std::string status_label(Report::Status status);

enum class Suite {
    OracleEquivalence,  // recurrence route == factorial route, all families
    Eq4,                // multinomial product identity
    Eq7,                // U addition formula + discriminant-corrected V form
    Eq7Printed,         // V addition formula exactly as printed (expected fails)
    Eq8,                // shift identities under the Q^s reading
    Eq13,               // r = s V-pair: sum is rational and equals V_2r/V_r
    Eq20,               // Fontene tautology, both variants
    Contracts,          // every coefficient family's linear relation
    ClosedForm,         // term == term_closed_form for all kinds
    All,
};

std::string suite_label(Suite suite);
std::optional<Suite> parse_suite(std::string_view text);

/// All selectable suite names, in evaluation order (for CLI help text).
std::vector<std::string> suite_names();

/// A fail report for an identity that is wrong as stated (not an artifact bug).
bool is_expected_fail(const Report& report);

/// Tally of one run; unexpected_fail decides the process exit status.
struct Summary {
    long total = 0;
    long pass = 0;
    long fail = 0;
    long expected_fail = 0;
    long unexpected_fail = 0;
    long skipped = 0;

    void add(const Report& report);
};

using ReportSink = std::function<void(const Report&)>;

/// Stream every report of the suite, in deterministic order, to the sink.
void run_suite(const GridSpec& grid, Suite suite, const ReportSink& sink);

/// Convenience overload collecting the reports into a vector.
std::vector<Report> run_suite(const GridSpec& grid, Suite suite);

Summary summarize(const std::vector<Report>& reports);

}  // namespace lucanomial
