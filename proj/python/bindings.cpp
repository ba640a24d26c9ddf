/**
 * @file bindings.cpp
 * @brief Python bindings for the lucanomial core (module lucanomial._core).
 *
 * The surface mirrors the C++ API but trades enums for strings: coefficient
 * rules, Fontene variants, and verify suites are all selected by the same
 * names the CLI accepts. Python ints and "num/den" strings convert implicitly
 * to Rational, so exactness survives the language boundary; floats are
 * rejected rather than rounded.
 */

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lucanomial/binomials.hpp"
#include "lucanomial/errors.hpp"
#include "lucanomial/presets.hpp"
#include "lucanomial/quadfield.hpp"
#include "lucanomial/rational.hpp"
#include "lucanomial/sequences.hpp"
#include "lucanomial/triangle_io.hpp"
#include "lucanomial/verify.hpp"

namespace py = pybind11;
using namespace lucanomial;

namespace {

CoeffRule rule_from_string(const std::string& text) {
    auto rule = parse_coeff_rule(text);
    if (!rule) throw Error("unknown coefficient rule: '" + text + "'");
    return *rule;
}

Suite suite_from_string(const std::string& text) {
    auto suite = parse_suite(text);
    if (!suite) throw Error("unknown suite: '" + text + "'");
    return *suite;
}

FonteneVariant fontene_variant_from_string(const std::string& text) {
    if (text == "left") return FonteneVariant::Left;
    if (text == "right") return FonteneVariant::Right;
    throw Error("unknown fontene variant: '" + text + "' (expected 'left' or 'right')");
}

Rational rational_pow(const Rational& base, long exp) {
    if (exp >= 0) return pow_rational(base, exp);
    return pow_rational(base.inverse(), -exp);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact Lucas-type sequences, generalized binomial coefficients, "
              "and identity verification.";

    // Base first, derived after: the translator registered last is tried
    // first, so derived C++ exceptions surface as their own Python types.
    auto base_exc = py::register_exception<Error>(m, "LucanomialError");
    py::register_exception<DivisionByZero>(m, "DivisionByZeroError", base_exc);
    py::register_exception<DegenerateDiscriminant>(m, "DegenerateDiscriminantError", base_exc);
    py::register_exception<DiscriminantMismatch>(m, "DiscriminantMismatchError", base_exc);
    py::register_exception<NotRational>(m, "NotRationalError", base_exc);
    py::register_exception<IndexOutOfRange>(m, "IndexOutOfRangeError", base_exc);
    py::register_exception<DegenerateSequence>(m, "DegenerateSequenceError", base_exc);
    py::register_exception<SingularCoefficient>(m, "SingularCoefficientError", base_exc);
    py::register_exception<InternalInconsistency>(m, "InternalInconsistencyError", base_exc);

    py::class_<Rational>(m, "Rational")
        .def(py::init([](const py::int_& value) {
                 return Rational::parse(std::string(py::str(value)));
             }),
             py::arg("value"))
        .def(py::init([](const std::string& text) { return Rational::parse(text); }),
             py::arg("text"))
        .def_property_readonly("num", [](const Rational& r) { return py::int_(py::str(r.num().get_str())); })
        .def_property_readonly("den", [](const Rational& r) { return py::int_(py::str(r.den().get_str())); })
        .def("is_zero", &Rational::is_zero)
        .def("is_integer", &Rational::is_integer)
        .def("sign", &Rational::sign)
        .def("abs", &Rational::abs)
        .def("inverse", &Rational::inverse)
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def(py::self * py::self)
        .def(py::self / py::self)
        .def(-py::self)
        .def(py::self == py::self)
        .def(py::self != py::self)
        .def(py::self < py::self)
        .def(py::self <= py::self)
        .def(py::self > py::self)
        .def(py::self >= py::self)
        .def("__pow__", &rational_pow, py::arg("exp"))
        .def("__hash__", [](const Rational& r) { return py::hash(py::str(r.str())); })
        .def("__str__", &Rational::str)
        .def("__repr__", [](const Rational& r) { return "Rational('" + r.str() + "')"; });
    py::implicitly_convertible<py::int_, Rational>();
    py::implicitly_convertible<py::str, Rational>();

    py::class_<QuadraticSurd>(m, "QuadraticSurd")
        .def(py::init<const Rational&>(), py::arg("value"))
        .def(py::init([](const Rational& rat, const Rational& coef, const py::int_& disc) {
                 return QuadraticSurd(rat, coef, Integer(std::string(py::str(disc))));
             }),
             py::arg("rat"), py::arg("coef"), py::arg("disc"))
        .def_property_readonly("rat", [](const QuadraticSurd& x) { return x.rat(); })
        .def_property_readonly("coef", [](const QuadraticSurd& x) { return x.coef(); })
        .def_property_readonly("disc",
                               [](const QuadraticSurd& x) { return py::int_(py::str(x.disc().get_str())); })
        .def("is_rational", &QuadraticSurd::is_rational)
        .def("is_zero", &QuadraticSurd::is_zero)
        .def("as_rational", &QuadraticSurd::as_rational)
        .def("conj", &QuadraticSurd::conj)
        .def("inverse", &QuadraticSurd::inverse)
        .def("pow", &QuadraticSurd::pow, py::arg("n"))
        .def("__pow__", &QuadraticSurd::pow, py::arg("n"))
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def(py::self * py::self)
        .def(py::self / py::self)
        .def(-py::self)
        .def(py::self == py::self)
        .def("__str__", &QuadraticSurd::str)
        .def("__repr__", [](const QuadraticSurd& x) { return "QuadraticSurd(" + x.str() + ")"; });

    py::class_<LucasParams>(m, "LucasParams")
        .def(py::init<Rational, Rational>(), py::arg("P"), py::arg("Q"))
        .def_property_readonly("P", [](const LucasParams& p) { return p.P(); })
        .def_property_readonly("Q", [](const LucasParams& p) { return p.Q(); })
        .def_property_readonly("D", [](const LucasParams& p) { return p.D(); })
        .def("sqrt_disc", &LucasParams::sqrt_disc)
        .def("root_p", &LucasParams::root_p)
        .def("root_q", &LucasParams::root_q)
        .def(py::self == py::self)
        .def("__repr__", [](const LucasParams& p) {
            return "LucasParams(P=" + p.P().str() + ", Q=" + p.Q().str() + ")";
        });

    py::class_<SequenceKind>(m, "SequenceKind")
        .def_static("u", &SequenceKind::u)
        .def_static("v", &SequenceKind::v)
        .def_static("horadam_w", &SequenceKind::horadam_w, py::arg("w0"), py::arg("w1"))
        .def_static("horadam_h", &SequenceKind::horadam_h, py::arg("h0"), py::arg("h1"))
        .def_static("custom", &SequenceKind::custom, py::arg("values"))
        .def_property_readonly("label", &SequenceKind::label)
        .def("is_custom", &SequenceKind::is_custom)
        .def("has_closed_form", &SequenceKind::has_closed_form)
        .def_property_readonly("seed0", [](const SequenceKind& k) { return k.seed0(); })
        .def_property_readonly("seed1", [](const SequenceKind& k) { return k.seed1(); })
        .def_property_readonly("values", [](const SequenceKind& k) { return k.values(); })
        .def(py::self == py::self)
        .def("__repr__", [](const SequenceKind& k) { return "SequenceKind('" + k.label() + "')"; });

    py::class_<SequenceContext>(m, "SequenceContext")
        .def(py::init<LucasParams, SequenceKind>(), py::arg("params"), py::arg("kind"))
        .def_static("custom", &SequenceContext::custom, py::arg("values"))
        .def_property_readonly("kind", [](const SequenceContext& c) { return c.kind(); })
        .def("has_params", &SequenceContext::has_params)
        .def_property_readonly("params", [](const SequenceContext& c) { return c.params(); })
        .def("describe", &SequenceContext::describe)
        .def("term", &SequenceContext::term, py::arg("n"))
        .def("term_closed_form", &SequenceContext::term_closed_form, py::arg("n"))
        .def("closed_form_weights", &SequenceContext::closed_form_weights)
        .def("factorial", &SequenceContext::factorial, py::arg("n"))
        .def("falling_factorial", &SequenceContext::falling_factorial, py::arg("n"), py::arg("k"))
        .def("first_vanishing_term", &SequenceContext::first_vanishing_term, py::arg("limit"))
        .def("ensure_terms", &SequenceContext::ensure_terms, py::arg("n"))
        .def("max_index", &SequenceContext::max_index)
        .def("pow_p", &SequenceContext::pow_p, py::arg("n"))
        .def("pow_q", &SequenceContext::pow_q, py::arg("n"))
        .def("__repr__", [](const SequenceContext& c) {
            return "SequenceContext(" + c.describe() + ")";
        });

    py::class_<LucasPair>(m, "LucasPair")
        .def(py::init<const LucasParams&>(), py::arg("params"))
        .def("u", &LucasPair::u, py::return_value_policy::reference_internal)
        .def("v", &LucasPair::v, py::return_value_policy::reference_internal)
        .def_property_readonly("params", [](const LucasPair& p) { return p.params(); });

    py::class_<AdditionUVerdict>(m, "AdditionUVerdict")
        .def_readonly("r", &AdditionUVerdict::r)
        .def_readonly("s", &AdditionUVerdict::s)
        .def_readonly("lhs", &AdditionUVerdict::lhs)
        .def_readonly("rhs", &AdditionUVerdict::rhs)
        .def_readonly("holds", &AdditionUVerdict::holds);

    py::class_<AdditionVVerdict>(m, "AdditionVVerdict")
        .def_readonly("r", &AdditionVVerdict::r)
        .def_readonly("s", &AdditionVVerdict::s)
        .def_readonly("lhs", &AdditionVVerdict::lhs)
        .def_readonly("printed_rhs", &AdditionVVerdict::printed_rhs)
        .def_readonly("corrected_rhs", &AdditionVVerdict::corrected_rhs)
        .def_readonly("printed_holds", &AdditionVVerdict::printed_holds)
        .def_readonly("corrected_holds", &AdditionVVerdict::corrected_holds)
        .def_readonly("note", &AdditionVVerdict::note);

    py::class_<ShiftVerdict>(m, "ShiftVerdict")
        .def_readonly("r", &ShiftVerdict::r)
        .def_readonly("s", &ShiftVerdict::s)
        .def_readonly("u_lhs", &ShiftVerdict::u_lhs)
        .def_readonly("u_rhs", &ShiftVerdict::u_rhs)
        .def_readonly("v_lhs", &ShiftVerdict::v_lhs)
        .def_readonly("v_rhs", &ShiftVerdict::v_rhs)
        .def_readonly("u_holds", &ShiftVerdict::u_holds)
        .def_readonly("v_holds", &ShiftVerdict::v_holds)
        .def_readonly("note", &ShiftVerdict::note);

    m.def("check_addition_u", &check_addition_u, py::arg("pair"), py::arg("r"), py::arg("s"));
    m.def("check_addition_v", &check_addition_v, py::arg("pair"), py::arg("r"), py::arg("s"));
    m.def("check_shift_identities", &check_shift_identities, py::arg("pair"), py::arg("r"),
          py::arg("s"));

    py::class_<CoefficientPair>(m, "CoefficientPair")
        .def_readonly("g1", &CoefficientPair::g1)
        .def_readonly("g2", &CoefficientPair::g2)
        .def_readonly("r", &CoefficientPair::r)
        .def_readonly("s", &CoefficientPair::s)
        .def("__repr__", [](const CoefficientPair& c) {
            return "CoefficientPair(g1=" + c.g1.str() + ", g2=" + c.g2.str() + ", r=" +
                   std::to_string(c.r) + ", s=" + std::to_string(c.s) + ")";
        });

    py::class_<ProductVerdict>(m, "ProductVerdict")
        .def_readonly("n", &ProductVerdict::n)
        .def_readonly("k", &ProductVerdict::k)
        .def_readonly("parts", &ProductVerdict::parts)
        .def_readonly("lhs", &ProductVerdict::lhs)
        .def_readonly("rhs", &ProductVerdict::rhs)
        .def_readonly("holds", &ProductVerdict::holds);

    m.def("coeff_rule_names", [] {
        return std::vector<std::string>{"u", "u-swapped", "v", "fontene-left", "fontene-right",
                                        "horadam-h"};
    });
    m.def("default_rule_for",
          [](const SequenceKind& kind) { return coeff_rule_label(default_rule_for(kind)); },
          py::arg("kind"));

    m.def("factorial_binomial", &factorial_binomial, py::arg("ctx"), py::arg("n"), py::arg("k"));
    m.def("multinomial", &multinomial, py::arg("ctx"), py::arg("n"), py::arg("parts"));
    m.def("check_multinomial_product", &check_multinomial_product, py::arg("ctx"), py::arg("n"),
          py::arg("k"), py::arg("parts"));

    m.def(
        "u_coeffs",
        [](SequenceContext& ctx, long r, long s, bool swapped) {
            return u_coeffs(ctx, r, s, swapped ? UVariant::Swapped : UVariant::Primary);
        },
        py::arg("ctx"), py::arg("r"), py::arg("s"), py::arg("swapped") = false);
    m.def("v_coeffs", &v_coeffs, py::arg("ctx"), py::arg("r"), py::arg("s"));
    m.def(
        "fontene_coeffs",
        [](SequenceContext& ctx, long r, long s, const std::string& variant) {
            return fontene_coeffs(ctx, r, s, fontene_variant_from_string(variant));
        },
        py::arg("ctx"), py::arg("r"), py::arg("s"), py::arg("variant") = "left");
    m.def("horadam_h_coeffs", &horadam_h_coeffs, py::arg("ctx"), py::arg("r"), py::arg("s"));
    m.def(
        "coeffs_for_rule",
        [](SequenceContext& ctx, const std::string& rule, long r, long s) {
            return coeffs_for_rule(ctx, rule_from_string(rule), r, s);
        },
        py::arg("ctx"), py::arg("rule"), py::arg("r"), py::arg("s"));

    m.def(
        "recurrence_binomial",
        [](SequenceContext& ctx, const std::string& rule, long n, long k) {
            return recurrence_binomial(ctx, rule_from_string(rule), n, k);
        },
        py::arg("ctx"), py::arg("rule"), py::arg("n"), py::arg("k"));

    py::class_<Triangle>(m, "Triangle")
        .def_readonly("family", &Triangle::family)
        .def_readonly("param_p", &Triangle::param_p)
        .def_readonly("param_q", &Triangle::param_q)
        .def_readonly("rule", &Triangle::rule)
        .def_readonly("rows", &Triangle::rows)
        .def(py::self == py::self)
        .def("__repr__", [](const Triangle& t) {
            return "Triangle(family='" + t.family + "', rule='" + t.rule + "', rows=" +
                   std::to_string(t.rows.size()) + ")";
        });

    m.def(
        "build_triangle",
        [](SequenceContext& ctx, const std::optional<std::string>& rule, long n_max) {
            std::optional<CoeffRule> coeff_rule;
            if (rule && *rule != "factorial") coeff_rule = rule_from_string(*rule);
            return build_triangle(ctx, coeff_rule, n_max);
        },
        py::arg("ctx"), py::arg("rule") = std::nullopt, py::arg("n_max") = 10);

    m.def("triangle_to_json", &triangle_to_json, py::arg("triangle"));
    m.def("triangle_from_json", &triangle_from_json, py::arg("text"));
    m.def("triangle_to_csv", &triangle_to_csv, py::arg("triangle"));

    py::class_<GridSpec>(m, "GridSpec")
        .def(py::init([](long p_min, long p_max, long q_min, long q_max, long n_max, long r_max,
                         long s_max, long multinomial_n_max, long closed_form_n_max) {
                 GridSpec grid;
                 grid.p_min = p_min;
                 grid.p_max = p_max;
                 grid.q_min = q_min;
                 grid.q_max = q_max;
                 grid.n_max = n_max;
                 grid.r_max = r_max;
                 grid.s_max = s_max;
                 grid.multinomial_n_max = multinomial_n_max;
                 grid.closed_form_n_max = closed_form_n_max;
                 return grid;
             }),
             py::arg("p_min") = -3, py::arg("p_max") = 3, py::arg("q_min") = -3,
             py::arg("q_max") = 3, py::arg("n_max") = 20, py::arg("r_max") = 20,
             py::arg("s_max") = 20, py::arg("multinomial_n_max") = 12,
             py::arg("closed_form_n_max") = 50)
        .def_readwrite("p_min", &GridSpec::p_min)
        .def_readwrite("p_max", &GridSpec::p_max)
        .def_readwrite("q_min", &GridSpec::q_min)
        .def_readwrite("q_max", &GridSpec::q_max)
        .def_readwrite("n_max", &GridSpec::n_max)
        .def_readwrite("r_max", &GridSpec::r_max)
        .def_readwrite("s_max", &GridSpec::s_max)
        .def_readwrite("multinomial_n_max", &GridSpec::multinomial_n_max)
        .def_readwrite("closed_form_n_max", &GridSpec::closed_form_n_max);

    py::class_<Report>(m, "Report")
        .def_readonly("id", &Report::id)
        .def_readonly("p", &Report::p)
        .def_readonly("q", &Report::q)
        .def_readonly("site", &Report::site)
        .def_property_readonly("status", [](const Report& r) { return status_label(r.status); })
        .def_readonly("lhs", &Report::lhs)
        .def_readonly("rhs", &Report::rhs)
        .def_readonly("note", &Report::note)
        .def("__repr__", [](const Report& r) {
            return "Report(id='" + r.id + "', P=" + r.p.str() + ", Q=" + r.q.str() + ", site='" +
                   r.site + "', status='" + status_label(r.status) + "')";
        });

    py::class_<Summary>(m, "Summary")
        .def_readonly("total", &Summary::total)
        .def_readonly("pass_count", &Summary::pass)
        .def_readonly("fail", &Summary::fail)
        .def_readonly("expected_fail", &Summary::expected_fail)
        .def_readonly("unexpected_fail", &Summary::unexpected_fail)
        .def_readonly("skipped", &Summary::skipped)
        .def("__repr__", [](const Summary& s) {
            return "Summary(total=" + std::to_string(s.total) + ", pass=" + std::to_string(s.pass) +
                   ", fail=" + std::to_string(s.fail) + ", expected_fail=" +
                   std::to_string(s.expected_fail) + ", skipped=" + std::to_string(s.skipped) + ")";
        });

    m.def("suite_names", &suite_names);
    m.def("is_expected_fail", &is_expected_fail, py::arg("report"));
    m.def(
        "run_suite",
        [](const GridSpec& grid, const std::string& suite) {
            return run_suite(grid, suite_from_string(suite));
        },
        py::arg("grid"), py::arg("suite") = "all");
    m.def("summarize", &summarize, py::arg("reports"));
    m.def("report_to_json_line", &report_to_json_line, py::arg("report"));
    m.def(
        "summary_to_json_line",
        [](const std::string& suite, const Summary& summary) {
            return summary_to_json_line(suite, summary);
        },
        py::arg("suite"), py::arg("summary"));

    py::class_<Preset>(m, "Preset")
        .def_readonly("name", &Preset::name)
        .def_readonly("params", &Preset::params)
        .def_readonly("kind", &Preset::kind)
        .def("__repr__", [](const Preset& p) {
            return "Preset('" + p.name + "', P=" + p.params.P().str() + ", Q=" +
                   p.params.Q().str() + ", kind='" + p.kind.label() + "')";
        });

    m.def("builtin_presets", &builtin_presets);
    m.def(
        "resolve_preset",
        [](const std::string& name) { return resolve_preset(name, load_env_presets()); },
        py::arg("name"));
    m.def("parse_preset_file", &parse_preset_file, py::arg("text"));
}
