"""Plain-text rendering of series, tables and check reports."""
from typing import Iterable, Sequence

from symstack.multigraded import GradedDimension


def format_monomial(variables: Sequence[str], degree: Sequence[int]) -> str:
    factors = []
    for variable, exponent in zip(variables, degree):
        if exponent == 0:
            continue
        factors.append(variable if exponent == 1 else "%s^%d" % (variable, exponent))
    return " ".join(factors) or "1"


def format_term(coefficient, variables, degree) -> str:
    monomial = format_monomial(variables, degree)
    if monomial == "1":
        return str(coefficient)
    if coefficient == 1:
        return monomial
    return "%s %s" % (coefficient, monomial)


def format_polynomial(dims: GradedDimension, variables: Sequence[str] = None) -> str:
    """Render as '1 + 8 t + 48 t^2'; a single axis is written in t unless told otherwise."""
    if variables is None:
        variables = ("t",) if len(dims.axes) == 1 else dims.axes
    if dims.is_zero():
        return "0"
    return " + ".join(
        format_term(dim, variables, degree) for degree, dim in dims.items()
    )


def format_coefficients(coefficients: dict, variables: Sequence[str]) -> str:
    terms = [
        format_term(c, variables, degree)
        for degree, c in sorted(coefficients.items())
        if c != 0
    ]
    return " + ".join(terms).replace("+ -", "- ") or "0"


def format_table(dims: GradedDimension, title: str = None) -> str:
    """A two-axis table, first axis down and second axis across."""
    if len(dims.axes) != 2:
        raise ValueError("format_table needs two axes, got %s" % (dims.axes,))
    lines = [title] if title else []
    if dims.is_zero():
        lines.append("  (zero)")
        return "\n".join(lines)
    rows = sorted({d[0] for d in dims.support})
    columns = range(min(d[1] for d in dims.support), max(d[1] for d in dims.support) + 1)
    width = max(len(str(v)) for _, v in dims.items()) + 1
    header = "%4s |" % ("%s\\%s" % dims.axes) + "".join(
        str(c).rjust(width) for c in columns
    )
    lines.append(header)
    lines.append("-" * len(header))
    for r in rows:
        lines.append(
            "%4d |" % r + "".join(str(dims[(r, c)]).rjust(width) for c in columns)
        )
    return "\n".join(lines)


def format_summands(summands: Iterable, variables: Sequence[str] = None) -> str:
    """One line per partition: '(2)      t^4 + 2 t^5 + t^6'."""
    lines = []
    for summand in summands:
        lines.append(
            "  %-12s %s"
            % (str(summand.cycle_type), format_polynomial(summand.dims, variables))
        )
    return "\n".join(lines)


def format_mismatch(variables, mismatch, labels=("expected", "actual")) -> str:
    return "%s: %s %s vs %s %s" % (
        format_monomial(variables, mismatch.degree),
        labels[0],
        mismatch.expected,
        labels[1],
        mismatch.actual,
    )


def format_check(report) -> str:
    if report.passed:
        return "  PASS %s" % report.name
    first = format_mismatch(report.axes, report.first_mismatch)
    return "  FAIL %s (%d mismatches; first at %s)" % (
        report.name,
        len(report.mismatches),
        first,
    )


def format_suite(suite_report) -> str:
    status = "passed" if suite_report.passed else "FAILED"
    lines = ["%s: %d checks %s" % (suite_report.name, len(suite_report.checks), status)]
    lines.extend(format_check(check) for check in suite_report.checks if not check.passed)
    return "\n".join(lines)
