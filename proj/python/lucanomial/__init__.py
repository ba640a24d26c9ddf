"""Exact Lucas-type sequences, generalized binomial coefficients, and identity checks.

All arithmetic is exact: values are GMP rationals (or elements of the quadratic
field Q(sqrt(D)) internally), never floats. Python ints and "num/den" strings
convert implicitly wherever a Rational is expected.

Quick start::

    import lucanomial as ln

    fib = ln.SequenceContext(ln.LucasParams(1, -1), ln.SequenceKind.u())
    assert str(fib.term(10)) == "55"
    assert str(ln.factorial_binomial(fib, 6, 3)) == "60"

    tri = ln.build_triangle(fib, rule="u", n_max=5)
    assert tri.rows == ln.build_triangle(fib, n_max=5).rows  # recurrence == factorial
"""

from ._core import (
    AdditionUVerdict,
    AdditionVVerdict,
    CoefficientPair,
    DegenerateDiscriminantError,
    DegenerateSequenceError,
    DiscriminantMismatchError,
    DivisionByZeroError,
    GridSpec,
    IndexOutOfRangeError,
    InternalInconsistencyError,
    LucanomialError,
    LucasPair,
    LucasParams,
    NotRationalError,
    Preset,
    ProductVerdict,
    QuadraticSurd,
    Rational,
    Report,
    SequenceContext,
    SequenceKind,
    ShiftVerdict,
    SingularCoefficientError,
    Summary,
    Triangle,
    build_triangle,
    builtin_presets,
    check_addition_u,
    check_addition_v,
    check_multinomial_product,
    check_shift_identities,
    coeff_rule_names,
    coeffs_for_rule,
    default_rule_for,
    factorial_binomial,
    fontene_coeffs,
    horadam_h_coeffs,
    is_expected_fail,
    multinomial,
    parse_preset_file,
    recurrence_binomial,
    report_to_json_line,
    resolve_preset,
    run_suite,
    suite_names,
    summarize,
    summary_to_json_line,
    triangle_from_json,
    triangle_to_csv,
    triangle_to_json,
    u_coeffs,
    v_coeffs,
)

__version__ = "0.1.0"

__all__ = [
    "AdditionUVerdict",
    "AdditionVVerdict",
    "CoefficientPair",
    "DegenerateDiscriminantError",
    "DegenerateSequenceError",
    "DiscriminantMismatchError",
    "DivisionByZeroError",
    "GridSpec",
    "IndexOutOfRangeError",
    "InternalInconsistencyError",
    "LucanomialError",
    "LucasPair",
    "LucasParams",
    "NotRationalError",
    "Preset",
    "ProductVerdict",
    "QuadraticSurd",
    "Rational",
    "Report",
    "SequenceContext",
    "SequenceKind",
    "ShiftVerdict",
    "SingularCoefficientError",
    "Summary",
    "Triangle",
    "build_triangle",
    "builtin_presets",
    "check_addition_u",
    "check_addition_v",
    "check_multinomial_product",
    "check_shift_identities",
    "coeff_rule_names",
    "coeffs_for_rule",
    "default_rule_for",
    "factorial_binomial",
    "fontene_coeffs",
    "horadam_h_coeffs",
    "is_expected_fail",
    "multinomial",
    "parse_preset_file",
    "recurrence_binomial",
    "report_to_json_line",
    "resolve_preset",
    "run_suite",
    "sequence",
    "suite_names",
    "summarize",
    "summary_to_json_line",
    "triangle_from_json",
    "triangle_to_csv",
    "triangle_to_json",
    "u_coeffs",
    "v_coeffs",
]


def sequence(preset_or_p, q=None, kind=None):
    """Build a SequenceContext from a preset name or explicit parameters.

    ``sequence("fibonacci")`` resolves a preset (built-ins, then gaussian:<q>);
    ``sequence(1, -1)`` builds U over P=1, Q=-1; pass ``kind`` to override.
    """
    if isinstance(preset_or_p, str) and q is None:
        preset = resolve_preset(preset_or_p)
        if preset is None:
            raise LucanomialError(f"unknown preset: '{preset_or_p}'")
        return SequenceContext(preset.params, kind if kind is not None else preset.kind)
    if q is None:
        raise LucanomialError("sequence(P, Q) needs both parameters")
    params = LucasParams(Rational(preset_or_p), Rational(q))
    return SequenceContext(params, kind if kind is not None else SequenceKind.u())
