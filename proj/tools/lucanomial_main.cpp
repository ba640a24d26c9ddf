/**
 * @file lucanomial_main.cpp
 * @brief Command-line front end: sequences, coefficients, triangles, verification.
 *
 * Exit statuses: 0 success, 1 usage or malformed input, 2 degenerate or
 * singular input (vanishing terms, D = 0, vanishing coefficient divisors),
 * 3 internal inconsistency (two exact routes disagreed — should never happen).
 * Every number printed is an exact string; no floating point anywhere.
 */

#include <functional>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "lucanomial/binomials.hpp"
#include "lucanomial/errors.hpp"
#include "lucanomial/presets.hpp"
#include "lucanomial/quadfield.hpp"
#include "lucanomial/rational.hpp"
#include "lucanomial/sequences.hpp"
#include "lucanomial/triangle_io.hpp"
#include "lucanomial/verify.hpp"

namespace {

using namespace lucanomial;

/// Map the exception hierarchy onto the documented exit statuses.
int run_guarded(const std::function<void()>& body) {
    try {
        body();
        return 0;
    } catch (const InternalInconsistency& e) {
        std::cerr << "internal inconsistency: " << e.what() << "\n";
        return 3;
    } catch (const NotRational& e) {
        std::cerr << "internal inconsistency: " << e.what() << "\n";
        return 3;
    } catch (const DegenerateSequence& e) {
        std::cerr << "degenerate input: " << e.what() << "\n";
        return 2;
    } catch (const SingularCoefficient& e) {
        std::cerr << "singular input: " << e.what() << "\n";
        return 2;
    } catch (const DegenerateDiscriminant& e) {
        std::cerr << "degenerate input: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

/// Shared --preset/--P/--Q/--family/seed options.
struct ParamsOptions {
    std::string preset;
    std::string p_text;
    std::string q_text;
    std::string family = "u";
    std::string w0, w1, h0, h1;
};

void add_params_options(CLI::App* cmd, ParamsOptions& opt) {
    cmd->add_option("--preset", opt.preset,
                    "named preset: fibonacci, lucas, pell, mersenne, gaussian:<q>, or one from "
                    "the LUCANOMIAL_PRESETS file");
    cmd->add_option("--P", opt.p_text, "recurrence parameter P (exact rational)");
    cmd->add_option("--Q", opt.q_text, "recurrence parameter Q (exact rational)");
    cmd->add_option("--family", opt.family, "sequence family: u, v, w, h (default u)");
    cmd->add_option("--w0", opt.w0, "seed W_0 for family w");
    cmd->add_option("--w1", opt.w1, "seed W_1 for family w");
    cmd->add_option("--h0", opt.h0, "seed H_0 for family h");
    cmd->add_option("--h1", opt.h1, "seed H_1 for family h");
}

SequenceContext make_context(const ParamsOptions& opt) {
    if (!opt.preset.empty()) {
        std::optional<Preset> preset = resolve_preset(opt.preset, load_env_presets());
        if (!preset) throw Error("unknown preset: " + opt.preset);
        return SequenceContext{preset->params, preset->kind};
    }
    if (opt.p_text.empty() || opt.q_text.empty())
        throw Error("need --preset, or both --P and --Q");
    LucasParams params{Rational::parse(opt.p_text), Rational::parse(opt.q_text)};
    if (opt.family == "u") return SequenceContext{params, SequenceKind::u()};
    if (opt.family == "v") return SequenceContext{params, SequenceKind::v()};
    if (opt.family == "w") {
        if (opt.w0.empty() || opt.w1.empty()) throw Error("family w needs --w0 and --w1");
        return SequenceContext{
            params, SequenceKind::horadam_w(Rational::parse(opt.w0), Rational::parse(opt.w1))};
    }
    if (opt.family == "h") {
        if (opt.h0.empty() || opt.h1.empty()) throw Error("family h needs --h0 and --h1");
        return SequenceContext{
            params, SequenceKind::horadam_h(Rational::parse(opt.h0), Rational::parse(opt.h1))};
    }
    throw Error("unknown family '" + opt.family + "' (expected u, v, w, or h)");
}

/// "a..b" (or a single integer "a") as an inclusive range.
std::pair<long, long> parse_range(const std::string& text) {
    auto parse_long = [&](const std::string& piece) {
        try {
            std::size_t used = 0;
            long value = std::stol(piece, &used);
            if (used != piece.size()) throw Error("");
            return value;
        } catch (const std::exception&) {
            throw Error("malformed range '" + text + "' (expected a..b with integers)");
        }
    };
    auto dots = text.find("..");
    if (dots == std::string::npos) {
        long value = parse_long(text);
        return {value, value};
    }
    return {parse_long(text.substr(0, dots)), parse_long(text.substr(dots + 2))};
}

/// Run `emit` against --out (or stdout when empty).
void with_output(const std::string& path, const std::function<void(std::ostream&)>& emit) {
    if (path.empty()) {
        emit(std::cout);
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot open output file: " + path);
    emit(out);
}

std::optional<CoeffRule> pick_rule(const std::string& rule, const std::string& coeff_rule,
                                   const SequenceKind& kind) {
    if (rule == "factorial") return std::nullopt;
    if (rule != "recurrence")
        throw Error("unknown rule '" + rule + "' (expected factorial or recurrence)");
    if (coeff_rule.empty()) return default_rule_for(kind);
    std::optional<CoeffRule> parsed = parse_coeff_rule(coeff_rule);
    if (!parsed) throw Error("unknown coefficient rule '" + coeff_rule + "'");
    return parsed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Lucas-type sequences, generalized binomials, and identity sweeps"};
    app.require_subcommand(1);

    // ---- seq ----
    ParamsOptions seq_params;
    long seq_n = 0;
    std::string seq_format = "text";
    CLI::App* seq = app.add_subcommand("seq", "print terms 0..n of a sequence");
    add_params_options(seq, seq_params);
    seq->add_option("-n,--n", seq_n, "highest index to print")->required();
    seq->add_option("--format", seq_format, "output format: text or json (default text)");

    // ---- binom ----
    ParamsOptions binom_params;
    long binom_n = 0, binom_k = 0;
    std::string binom_rule = "factorial";
    std::string binom_coeff_rule;
    bool binom_check = false;
    CLI::App* binom = app.add_subcommand("binom", "print one generalized binomial coefficient");
    add_params_options(binom, binom_params);
    binom->add_option("-n,--n", binom_n, "upper index")->required();
    binom->add_option("-k,--k", binom_k, "lower index")->required();
    binom->add_option("--rule", binom_rule, "route: factorial (default) or recurrence");
    binom->add_option("--coeff-rule", binom_coeff_rule,
                      "coefficient family for the recurrence route: u, u-swapped, v, "
                      "fontene-left, fontene-right, horadam-h (default: match the sequence)");
    binom->add_flag("--check", binom_check, "compute both routes and report equality");

    // ---- triangle ----
    ParamsOptions tri_params;
    long tri_rows = 0;
    std::string tri_rule = "factorial";
    std::string tri_coeff_rule;
    std::string tri_format = "json";
    std::string tri_out;
    CLI::App* triangle = app.add_subcommand("triangle", "emit rows 0..rows-1 of a triangle");
    add_params_options(triangle, tri_params);
    triangle->add_option("--rows", tri_rows, "number of rows (>= 1)")->required();
    triangle->add_option("--rule", tri_rule, "route: factorial (default) or recurrence");
    triangle->add_option("--coeff-rule", tri_coeff_rule,
                         "coefficient family for the recurrence route");
    triangle->add_option("--format", tri_format, "output format: json (default) or csv");
    triangle->add_option("--out", tri_out, "output file (default stdout)");

    // ---- verify ----
    std::string verify_suite = "all";
    std::string verify_p_range, verify_q_range;
    GridSpec grid;
    std::string verify_out;
    CLI::App* verify = app.add_subcommand("verify", "run identity sweeps over a parameter grid");
    verify->add_option("--suite", verify_suite,
                       "suite: oracle-equivalence, eq4, eq7, eq7-printed, eq8, eq13, eq20, "
                       "contracts, closed-form, all (default all)");
    verify->add_option("--P-range", verify_p_range, "inclusive P range a..b (default -3..3)");
    verify->add_option("--Q-range", verify_q_range, "inclusive Q range a..b (default -3..3)");
    verify->add_option("--n-max", grid.n_max, "triangle depth for oracle equivalence");
    verify->add_option("--r-max", grid.r_max, "site bound r for identity sweeps");
    verify->add_option("--s-max", grid.s_max, "site bound s for identity sweeps");
    verify->add_option("--multinomial-max", grid.multinomial_n_max,
                       "decomposition sweep bound");
    verify->add_option("--closed-form-max", grid.closed_form_n_max,
                       "closed-form agreement bound");
    verify->add_option("--out", verify_out, "output file (default stdout)");

    // ---- fontene ----
    std::string fon_file;
    long fon_n = -1, fon_k = -1, fon_rows = 0;
    std::string fon_format = "json";
    std::string fon_out;
    CLI::App* fontene = app.add_subcommand(
        "fontene", "generalized binomials over a user-supplied sequence file");
    fontene->add_option("--file", fon_file, "sequence file: one exact rational per line "
                                            "(# comments allowed) or a JSON array of strings")
        ->required();
    fontene->add_option("-n,--n", fon_n, "upper index (with -k)");
    fontene->add_option("-k,--k", fon_k, "lower index (with -n)");
    fontene->add_option("--rows", fon_rows, "emit a whole triangle with this many rows instead");
    fontene->add_option("--format", fon_format, "triangle format: json (default) or csv");
    fontene->add_option("--out", fon_out, "output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;  // normalize every usage failure to 1
    }

    if (app.got_subcommand(seq))
        return run_guarded([&] {
            SequenceContext ctx = make_context(seq_params);
            if (seq_n < 0) throw Error("--n must be >= 0");
            if (seq_format == "text") {
                for (long n = 0; n <= seq_n; ++n)
                    std::cout << (n ? " " : "") << ctx.term(n).str();
                std::cout << "\n";
            } else if (seq_format == "json") {
                nlohmann::ordered_json terms = nlohmann::ordered_json::array();
                for (long n = 0; n <= seq_n; ++n) terms.push_back(ctx.term(n).str());
                std::cout << terms.dump() << "\n";
            } else {
                throw Error("unknown format '" + seq_format + "' (expected text or json)");
            }
        });

    if (app.got_subcommand(binom))
        return run_guarded([&] {
            SequenceContext ctx = make_context(binom_params);
            if (binom_check) {
                Rational by_factorial = factorial_binomial(ctx, binom_n, binom_k);
                CoeffRule rule = *pick_rule("recurrence", binom_coeff_rule, ctx.kind());
                Rational by_recurrence = recurrence_binomial(ctx, rule, binom_n, binom_k);
                bool equal = by_factorial == by_recurrence;
                std::cout << "factorial=" << by_factorial.str() << "\n"
                          << "recurrence=" << by_recurrence.str() << "\n"
                          << "equal=" << (equal ? "true" : "false") << "\n";
                if (!equal)
                    throw InternalInconsistency("factorial and recurrence routes disagree at n=" +
                                                std::to_string(binom_n) + ", k=" +
                                                std::to_string(binom_k));
                return;
            }
            std::optional<CoeffRule> rule = pick_rule(binom_rule, binom_coeff_rule, ctx.kind());
            Rational value = rule ? recurrence_binomial(ctx, *rule, binom_n, binom_k)
                                  : factorial_binomial(ctx, binom_n, binom_k);
            std::cout << value.str() << "\n";
        });

    if (app.got_subcommand(triangle))
        return run_guarded([&] {
            if (tri_rows < 1) throw Error("--rows must be >= 1");
            SequenceContext ctx = make_context(tri_params);
            std::optional<CoeffRule> rule = pick_rule(tri_rule, tri_coeff_rule, ctx.kind());
            Triangle tri = build_triangle(ctx, rule, tri_rows - 1);
            if (tri_format != "json" && tri_format != "csv")
                throw Error("unknown format '" + tri_format + "' (expected json or csv)");
            with_output(tri_out, [&](std::ostream& out) {
                out << (tri_format == "json" ? triangle_to_json(tri) : triangle_to_csv(tri));
            });
        });

    if (app.got_subcommand(verify)) {
        int exit_code = 0;
        int guarded = run_guarded([&] {
            std::optional<Suite> suite = parse_suite(verify_suite);
            if (!suite) throw Error("unknown suite '" + verify_suite + "'");
            if (!verify_p_range.empty())
                std::tie(grid.p_min, grid.p_max) = parse_range(verify_p_range);
            if (!verify_q_range.empty())
                std::tie(grid.q_min, grid.q_max) = parse_range(verify_q_range);
            with_output(verify_out, [&](std::ostream& out) {
                Summary summary;
                run_suite(grid, *suite, [&](const Report& report) {
                    summary.add(report);
                    out << report_to_json_line(report) << "\n";
                });
                out << summary_to_json_line(suite_label(*suite), summary) << "\n";
                // expected fails (the formula is wrong as printed) do not fail the run
                exit_code = summary.unexpected_fail == 0 ? 0 : 3;
            });
        });
        return guarded != 0 ? guarded : exit_code;
    }

    if (app.got_subcommand(fontene))
        return run_guarded([&] {
            std::vector<Rational> values = parse_sequence_file(read_text_file(fon_file));
            SequenceContext ctx = SequenceContext::custom(values);
            bool single = fon_n >= 0 || fon_k >= 0;
            if (single == (fon_rows > 0))
                throw Error("use either -n with -k, or --rows");
            if (single) {
                if (fon_n < 0 || fon_k < 0) throw Error("-n and -k must both be given");
                Rational left = recurrence_binomial(ctx, CoeffRule::FonteneLeft, fon_n, fon_k);
                Rational right = recurrence_binomial(ctx, CoeffRule::FonteneRight, fon_n, fon_k);
                Rational oracle = factorial_binomial(ctx, fon_n, fon_k);
                if (!(left == right) || !(left == oracle))
                    throw InternalInconsistency(
                        "variant cross-check failed: left=" + left.str() + ", right=" +
                        right.str() + ", factorial=" + oracle.str());
                std::cout << left.str() << "\n";
                return;
            }
            Triangle oracle = build_triangle(ctx, std::nullopt, fon_rows - 1);
            Triangle left = build_triangle(ctx, CoeffRule::FonteneLeft, fon_rows - 1);
            Triangle right = build_triangle(ctx, CoeffRule::FonteneRight, fon_rows - 1);
            if (!(left.rows == right.rows) || !(left.rows == oracle.rows))
                throw InternalInconsistency("variant cross-check failed on the triangle");
            if (fon_format != "json" && fon_format != "csv")
                throw Error("unknown format '" + fon_format + "' (expected json or csv)");
            with_output(fon_out, [&](std::ostream& out) {
                out << (fon_format == "json" ? triangle_to_json(oracle)
                                             : triangle_to_csv(oracle));
            });
        });

    std::cerr << "error: no subcommand selected\n";
    return 1;
}
