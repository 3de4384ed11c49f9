"""
Partition formulas and generating series for symmetric quotient stacks.

Every symmetric power below is super-graded: the Hochschild axis j, and the
Hodge axes (p, q) or (x, y), carry Koszul signs. Series in t are truncated
at an explicit t^N.
"""
import logging
from dataclasses import dataclass, field, replace
from typing import Dict, List, Optional, Tuple

from sympy import Poly, Rational, binomial, factorial, symbols

from symstack.geometry import (
    CoefficientFamily,
    VarietyData,
    hs_of_variety,
    line_bundle_family,
    serre_family,
)
from symstack.multigraded import (
    GradedDimension,
    MultiDegree,
    SuperAxes,
    TruncationWindow,
    collapse,
    shift,
    sym_n,
    sym_total,
    tensor,
)
from symstack.partitions import CycleType, age, all_parts_odd, partitions_of

HODGE_SUPER = SuperAxes({"p", "q"})
HOCHSCHILD_SUPER = SuperAxes({"j"})
ORBIFOLD_SUPER = SuperAxes({"x", "y"})
ORBIFOLD_AXES = {"p": "x", "q": "y"}
TRIVARIATE_AXES = ("x", "y", "t")

logger = logging.getLogger(__name__)


class ConsistencyError(Exception):
    """Two independent computations of the same number disagree."""


@dataclass(frozen=True)
class PartitionSummand:
    cycle_type: CycleType
    dims: GradedDimension


@dataclass(frozen=True)
class SymQuotResult:
    n: int
    dims: GradedDimension
    summands: Tuple[PartitionSummand, ...] = ()

    def summand(self, cycle_type: CycleType) -> GradedDimension:
        for s in self.summands:
            if s.cycle_type == cycle_type:
                return s.dims
        return GradedDimension.zero(self.dims.axes)


@dataclass(frozen=True)
class TruncatedSeries:
    """A GradedDimension with a trailing axis t, known through t^max_n."""

    dims: GradedDimension
    max_n: int

    def __post_init__(self):
        if self.dims.axes[-1] != "t":
            raise ValueError("Series axes %s do not end in t" % (self.dims.axes,))

    def coefficient(self, n: int) -> GradedDimension:
        if n > self.max_n:
            raise ValueError("t^%d is beyond the truncation t^%d" % (n, self.max_n))
        return self.dims.slice("t", n)


class TrivariateSeries(TruncatedSeries):
    def __post_init__(self):
        if self.dims.axes != TRIVARIATE_AXES:
            raise ValueError("Expected axes %s, got %s" % (TRIVARIATE_AXES, self.dims.axes))


@dataclass(frozen=True)
class Mismatch:
    degree: MultiDegree
    expected: object
    actual: object


@dataclass
class CheckReport:
    name: str
    axes: Tuple[str, ...]
    mismatches: List[Mismatch] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.mismatches

    @property
    def first_mismatch(self) -> Optional[Mismatch]:
        return self.mismatches[0] if self.mismatches else None


def compare_dimensions(
    name: str, expected: GradedDimension, actual: GradedDimension
) -> CheckReport:
    if expected.axes != actual.axes:
        raise ValueError(
            "%s: cannot compare axes %s with %s" % (name, expected.axes, actual.axes)
        )
    report = CheckReport(name, expected.axes)
    for degree in sorted(set(expected.support) | set(actual.support)):
        if expected[degree] != actual[degree]:
            report.mismatches.append(Mismatch(degree, expected[degree], actual[degree]))
    return report


def compare_coefficients(
    name: str, axes: Tuple[str, ...], expected: Dict, actual: Dict
) -> CheckReport:
    report = CheckReport(name, axes)
    for degree in sorted(set(expected) | set(actual)):
        e, a = expected.get(degree, 0), actual.get(degree, 0)
        if e != a:
            report.mismatches.append(Mismatch(degree, e, a))
    return report


def _symmetrize(n, factor, super_axes, axes, skip=None) -> SymQuotResult:
    """⊕ over partitions ν of n of ⊗_i Sym^{λ_i}(factor(i))."""
    total = GradedDimension.zero(axes)
    summands = []
    for cycle_type in partitions_of(n):
        if skip is not None and skip(cycle_type):
            continue
        term = GradedDimension.unit(axes)
        for i, count in cycle_type.multiplicities:
            term = tensor(term, sym_n(factor(i), count, super_axes))
        logger.debug("Partition %s contributes %d dimensions", cycle_type, term.total_dimension)
        summands.append(PartitionSummand(cycle_type, term))
        total = total + term
    return SymQuotResult(n, total, tuple(summands))


def inertia_hodge_sym(family: CoefficientFamily, n: int) -> SymQuotResult:
    """Bigraded H^{#,*} of the inertia of [Sym^n X] with values in the family."""
    return _symmetrize(n, family.shifted_table, HODGE_SUPER, ("p", "q"))


def hh_with_coefficients_sym(family: CoefficientFamily, n: int) -> SymQuotResult:
    """HH_*([Sym^n X], F), graded by j = q - p after the per-i shifts."""
    return _symmetrize(n, family.hochschild_table, HOCHSCHILD_SUPER, ("j",))


def hs_sym(variety: VarietyData, k: int, n: int) -> SymQuotResult:
    """
    HS_k([Sym^n X]) from the HS_{1+(k-1)i}(X). When (k-1)d is odd only
    partitions with odd parts contribute.
    """
    odd = ((k - 1) * variety.dim) % 2 == 1
    return _symmetrize(
        n,
        lambda i: hs_of_variety(variety, 1 + (k - 1) * i).dims,
        HOCHSCHILD_SUPER,
        ("j",),
        skip=(lambda c: not all_parts_odd(c)) if odd else None,
    )


def _series_window(max_n: int) -> TruncationWindow:
    if max_n < 0:
        raise ValueError("Truncation must be non-negative, got %d" % max_n)
    return TruncationWindow.up_to("t", max_n)


def hh_series_product(
    variety: VarietyData, family: CoefficientFamily, max_n: int
) -> TruncatedSeries:
    """∏_k ∏_j (1 - (-s)^j t^k)^{-(-1)^j hh_j(X, F^<k>)} through t^max_n."""
    if family.dim != variety.dim:
        raise ValueError(
            "Family of dimension %d does not live on %s" % (family.dim, variety.name)
        )
    generators = GradedDimension.zero(("j", "t"))
    for k in range(1, max_n + 1):
        generators = generators + family.hochschild_table(k).with_axis("t", k)
    dims = sym_total(generators, HOCHSCHILD_SUPER, _series_window(max_n))
    return TruncatedSeries(dims, max_n)


def hs_series(variety: VarietyData, k: int, max_n: int) -> TruncatedSeries:
    return hh_series_product(variety, serre_family(variety, k, max_n), max_n)


def closed_hh1_hh2(variety: VarietyData, n: int) -> Dict[int, int]:
    """
    dim HH^1 and HH^2 of [Sym^n X] in closed form. Extra terms: HS_{-1}^2(X)
    for surfaces, HS_{-2}^2(X) for curves once n >= 3.
    """
    if variety.hodge_diamond[(0, 0)] != 1:
        raise ValueError(
            "%s is not connected: h^{0,0} = %d" % (variety.name, variety.hodge_diamond[(0, 0)])
        )
    if n < 1:
        raise ValueError("Need n >= 1, got %d" % n)
    hh = hs_of_variety(variety, 0).dims
    hh1 = hh[(1,)]
    if n == 1:
        return {1: hh1, 2: hh[(2,)]}
    hh2 = hh[(2,)] + int(binomial(hh1, 2))
    if variety.dim == 2:
        hh2 += hs_of_variety(variety, -1).dims[(2,)]
    if variety.dim == 1 and n >= 3:
        hh2 += hs_of_variety(variety, -2).dims[(2,)]
    return {1: hh1, 2: hh2}


def _age_shift(dims: GradedDimension, amount: int) -> GradedDimension:
    return shift(dims, (-amount, -amount)).rename(ORBIFOLD_AXES)


def orbifold_hodge_age(family: CoefficientFamily, n: int) -> SymQuotResult:
    """The inertia table with the summand of ν moved by (age ν, age ν), on axes (x, y)."""
    inertia = inertia_hodge_sym(family, n)
    total = GradedDimension.zero(("x", "y"))
    summands = []
    for summand in inertia.summands:
        moved = _age_shift(summand.dims, age(summand.cycle_type))
        summands.append(PartitionSummand(summand.cycle_type, moved))
        total = total + moved
    return SymQuotResult(n, total, tuple(summands))


def _orbifold_generators(tables) -> GradedDimension:
    generators = GradedDimension.zero(TRIVARIATE_AXES)
    for k, table in tables:
        generators = generators + _age_shift(table, k - 1).with_axis("t", k)
    return generators


def corrected_conjecture_rhs(
    variety: VarietyData, label: str, max_n: int
) -> TrivariateSeries:
    """∏_k ∏_{p,q} (1 - (-1)^{p+q} x^{p+k-1} y^{q+k-1} t^k)^{-(-1)^{p+q} h^{p,q}(S, L^k)}."""
    family = line_bundle_family(variety, label, max_n)
    generators = _orbifold_generators(
        (k, family.table(k)) for k in range(1, max_n + 1)
    )
    dims = sym_total(generators, ORBIFOLD_SUPER, _series_window(max_n))
    return TrivariateSeries(dims, max_n)


def boissiere_original_rhs(
    variety: VarietyData, label: str, max_n: int
) -> TrivariateSeries:
    """The same product with the exponents h^{p,q}(S, L) for every k."""
    table = line_bundle_family(variety, label, 1).table(1)
    generators = _orbifold_generators((k, table) for k in range(1, max_n + 1))
    dims = sym_total(generators, ORBIFOLD_SUPER, _series_window(max_n))
    return TrivariateSeries(dims, max_n)


def counterexample_diff(variety: VarietyData, label: str, max_n: int) -> List[Mismatch]:
    """Monomials (x, y, t) where the corrected product (expected) and the original (actual) differ."""
    corrected = corrected_conjecture_rhs(variety, label, max_n)
    original = boissiere_original_rhs(variety, label, max_n)
    report = compare_dimensions("counterexample", corrected.dims, original.dims)
    logger.info(
        "%s, L=%s: %d monomials differ through t^%d",
        variety.name, label, len(report.mismatches), max_n,
    )
    return report.mismatches


def gottsche_soergel(variety: VarietyData, max_n: int) -> TrivariateSeries:
    return corrected_conjecture_rhs(variety, "O", max_n)


def total_degree_rhs(variety: VarietyData, label: str, max_n: int) -> TruncatedSeries:
    """∏_k ∏_i (1 - (-1)^i x^{i+2k-2} t^k)^{-(-1)^i h^i(S, L^k)}, h^i = Σ_{p+q=i} h^{p,q}."""
    family = line_bundle_family(variety, label, max_n)
    generators = GradedDimension.zero(("x", "t"))
    for k in range(1, max_n + 1):
        total = collapse(family.table(k), {"x": {"p": 1, "q": 1}})
        generators = generators + shift(total, (-(2 * k - 2),)).with_axis("t", k)
    dims = sym_total(generators, SuperAxes({"x"}), _series_window(max_n))
    return TruncatedSeries(dims, max_n)


def _global_sections_product(table: GradedDimension, max_n: int) -> Dict:
    """(1 + xt)^{h^{1,0}} (1 - t)^{-h^{0,0}} (1 - x^2 t)^{-h^{2,0}} as exact polynomials."""
    x, t = symbols("x t")
    h00, h10, h20 = table[(0, 0)], table[(1, 0)], table[(2, 0)]
    product = Poly((1 + x * t) ** h10, x, t)
    for dim, base in ((h00, 1), (h20, x**2)):
        factor = sum(
            binomial(dim + m - 1, m) * base**m * t**m for m in range(max_n + 1)
        )
        product = _truncate(product * Poly(factor, x, t), 1, max_n)
    product = _truncate(product, 1, max_n)
    return {degree: int(c) for degree, c in product.as_dict().items()}


def _truncate(poly: Poly, t_index: int, max_n: int) -> Poly:
    return Poly.from_dict(
        {m: c for m, c in poly.as_dict().items() if m[t_index] <= max_n},
        *poly.gens,
        domain=poly.domain,
    )


def specialization_checks(
    variety: VarietyData, label: str, max_n: int
) -> List[CheckReport]:
    """The x = y^{-1}, x = 0 and y = 0 specializations of the corrected product."""
    rhs = corrected_conjecture_rhs(variety, label, max_n)
    family = line_bundle_family(variety, label, max_n)
    window = _series_window(max_n)
    reports = []

    hochschild = collapse(rhs.dims, {"j": {"x": -1, "y": 1}, "t": {"t": 1}})
    reports.append(
        compare_dimensions(
            "x=1/y", hh_series_product(variety, family, max_n).dims, hochschild
        )
    )

    column = family.table(1).slice("p", 0).rename({"q": "y"}).with_axis("t", 1)
    reports.append(
        compare_dimensions(
            "x=0", sym_total(column, SuperAxes({"y"}), window), rhs.dims.slice("x", 0)
        )
    )

    closed_form = _global_sections_product(family.table(1), max_n)
    observed = {degree: dim for degree, dim in rhs.dims.slice("y", 0).items()}
    reports.append(compare_coefficients("y=0", ("x", "t"), closed_form, observed))

    for report in reports:
        logger.debug("%s on %s, L=%s: passed=%s", report.name, variety.name, label, report.passed)
    return reports


def chi_y(table: GradedDimension, y):
    """χ_{-y} = Σ (-1)^{p+q} h^{p,q} y^p of a twisted Hodge table."""
    return sum((-1) ** (p + q) * dim * y**p for (p, q), dim in table.items())


def chi_y_identity(variety: VarietyData, label: str, max_n: int) -> CheckReport:
    """
    The x -> -y, y -> -1 specialization of the corrected product against
    exp(Σ_{m,k} t^{km}/m y^{(k-1)m} χ_{-y^m}(S, L^k)), as exact series.
    """
    y, t = symbols("y t")
    family = line_bundle_family(variety, label, max_n)
    rhs = corrected_conjecture_rhs(variety, label, max_n)

    specialized = {}
    for (a, b, n), dim in rhs.dims.items():
        specialized[(a, n)] = specialized.get((a, n), 0) + (-1) ** (a + b) * dim

    exponent = Poly(0, y, t, domain="QQ")
    for k in range(1, max_n + 1):
        table = family.table(k)
        for m in range(1, max_n // k + 1):
            term = Rational(1, m) * t ** (k * m) * y ** ((k - 1) * m) * chi_y(table, y**m)
            exponent += Poly(term, y, t, domain="QQ")

    exponential = Poly(1, y, t, domain="QQ")
    power = Poly(1, y, t, domain="QQ")
    for r in range(1, max_n + 1):
        power = _truncate(power * exponent, 1, max_n)
        exponential += power * (Rational(1) / factorial(r))
    expected = {degree: c for degree, c in exponential.as_dict().items() if c != 0}
    return compare_coefficients("chi-y", ("y", "t"), expected, specialized)


def polyvector_fields(variety: VarietyData, n: int) -> GradedDimension:
    """
    dim H^0(Hilb^n S, ∧^{2n-r} T) graded by r: Sym^n of h^0(ω^∨) in degree 0,
    h^0(T) in degree 1 and h^0(O) in degree 2.
    """
    anticanonical = variety.omega_table(-1)
    generators = GradedDimension(
        ("r",),
        {
            (0,): anticanonical[(0, 0)],
            (1,): anticanonical[(1, 0)],
            (2,): variety.hodge_diamond[(0, 0)],
        },
    )
    return sym_n(generators, n, SuperAxes({"r"}))


@dataclass(frozen=True)
class DeformationSummary:
    n: int
    h0_tangent: int
    h1_tangent: int
    h1_structure_sheaf: int
    h2_structure_sheaf: int
    h0_bivectors: int
    h0_trivectors: int
    hh1: int
    hh2: int


def deformation_summary(variety: VarietyData, n: int) -> DeformationSummary:
    """Tangent, structure-sheaf and polyvector numbers of Hilb^n S from those of S."""
    if variety.dim != 2:
        raise ValueError("%s is not a surface" % variety.name)
    if n < 2:
        raise ValueError("Need n >= 2, got %d" % n)
    anticanonical = variety.omega_table(-1)
    structure = variety.hodge_diamond
    h0_t, h1_t = anticanonical[(1, 0)], anticanonical[(1, 1)]
    h0_anti = anticanonical[(0, 0)]
    h1_o, h2_o = structure[(0, 1)], structure[(0, 2)]

    summary = DeformationSummary(
        n=n,
        h0_tangent=h0_t,
        h1_tangent=h1_t + h0_t * h1_o + h0_anti,
        h1_structure_sheaf=h1_o,
        h2_structure_sheaf=h2_o + int(binomial(h1_o, 2)),
        h0_bivectors=int(binomial(h0_t, 2)) + h0_anti,
        h0_trivectors=h0_t * h0_anti + (int(binomial(h0_t, 3)) if n >= 3 else 0),
        hh1=h1_o + h0_t,
        hh2=0,
    )
    hochschild = hs_sym(variety, 0, n).dims
    hh2 = summary.h1_tangent + summary.h2_structure_sheaf + summary.h0_bivectors
    if hochschild[(1,)] != summary.hh1:
        raise ConsistencyError(
            "HH^1 of Sym^%d %s: engine %d, h^1(O) + h^0(T) = %d"
            % (n, variety.name, hochschild[(1,)], summary.hh1)
        )
    if hochschild[(2,)] != hh2:
        raise ConsistencyError(
            "HH^2 of Sym^%d %s: engine %d, deformation count %d"
            % (n, variety.name, hochschild[(2,)], hh2)
        )
    logger.info(
        "%s, n=%d: h^1(T) = %d, HH^2 = %d", variety.name, n, summary.h1_tangent, hh2
    )
    return replace(summary, hh2=hh2)


def fock(v: GradedDimension, max_n: int) -> TruncatedSeries:
    """Sym(⊕_{i>=1} V t^i) through t^max_n, super-graded on j."""
    generators = GradedDimension.zero(v.axes + ("t",))
    for i in range(1, max_n + 1):
        generators = generators + v.with_axis("t", i)
    return TruncatedSeries(
        sym_total(generators, HOCHSCHILD_SUPER, _series_window(max_n)), max_n
    )


def sod_fock_check(
    a: GradedDimension, b: GradedDimension, max_n: int
) -> List[CheckReport]:
    """Fock(A ⊕ B) = Fock(A) ⊗ Fock(B), as a whole and slice by slice."""
    fock_a, fock_b, fock_sum = fock(a, max_n), fock(b, max_n), fock(a + b, max_n)
    reports = [
        compare_dimensions(
            "fock-product",
            fock_sum.dims,
            tensor(fock_a.dims, fock_b.dims, _series_window(max_n)),
        )
    ]
    for n in range(max_n + 1):
        assembled = GradedDimension.zero(a.axes)
        for i in range(n + 1):
            assembled = assembled + fock_a.coefficient(i) * fock_b.coefficient(n - i)
        reports.append(
            compare_dimensions("kunneth t^%d" % n, fock_sum.coefficient(n), assembled)
        )
    return reports
