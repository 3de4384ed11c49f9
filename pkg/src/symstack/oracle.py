"""
Brute-force verifiers for the symmetric-power and inertia formulas.

Nothing here uses binomial coefficients: symmetric powers are counted on an
explicit signed basis, and group invariants are averages of traces computed
by counting fixed monomials with their Koszul signs.
"""
import logging
from collections import Counter, defaultdict
from dataclasses import dataclass
from itertools import combinations_with_replacement, product
from typing import List, Sequence, Tuple

from constance import config
from sympy.combinatorics import Permutation, PermutationGroup, SymmetricGroup

from symstack.geometry import CoefficientFamily
from symstack.multigraded import GradedDimension, MultiDegree, SuperAxes

HODGE_SUPER = SuperAxes({"p", "q"})

logger = logging.getLogger(__name__)


class OracleGuardError(ValueError):
    """An enumeration would exceed one of the configured size limits."""


class NonIntegralAverageError(ArithmeticError):
    """A trace average is not an integer; the signs are wrong somewhere."""


@dataclass(frozen=True)
class SignedBasis:
    axes: Tuple[str, ...]
    generators: Tuple[Tuple[str, MultiDegree], ...]
    super_axes: SuperAxes = SuperAxes()

    def __post_init__(self):
        labels = [label for label, _ in self.generators]
        if len(set(labels)) != len(labels):
            raise ValueError("Generator labels are not unique: %s" % labels)
        for label, degree in self.generators:
            if len(degree) != len(self.axes):
                raise ValueError(
                    "Generator %s has degree %s on axes %s" % (label, degree, self.axes)
                )
        self.super_axes.validate(self.axes)

    @classmethod
    def from_dimension(
        cls, v: GradedDimension, super_axes: SuperAxes = SuperAxes(), prefix: str = "e"
    ) -> "SignedBasis":
        generators = []
        for degree, dim in v.items():
            for i in range(dim):
                label = "%s%s_%d" % (prefix, ",".join(str(d) for d in degree), i)
                generators.append((label, degree))
        return cls(v.axes, tuple(generators), super_axes)

    def __len__(self):
        return len(self.generators)

    def degree(self, index: int) -> MultiDegree:
        return self.generators[index][1]

    def is_odd(self, index: int) -> bool:
        return self.super_axes.parity(self.axes, self.degree(index)) == 1

    def classes(self) -> List[Tuple[MultiDegree, bool, int]]:
        """Generators grouped by (degree, parity), with their counts."""
        counts = Counter((self.degree(i), self.is_odd(i)) for i in range(len(self)))
        return [(degree, odd, count) for (degree, odd), count in sorted(counts.items())]


def sym_bruteforce(basis: SignedBasis, n: int) -> GradedDimension:
    """Count size-n multisets of generators in which odd generators appear at most once."""
    if n > config.ORACLE_MAX_N:
        raise OracleGuardError(
            "n=%d exceeds ORACLE_MAX_N=%d" % (n, config.ORACLE_MAX_N)
        )
    if len(basis) > config.ORACLE_MAX_GENERATORS:
        raise OracleGuardError(
            "%d generators exceed ORACLE_MAX_GENERATORS=%d"
            % (len(basis), config.ORACLE_MAX_GENERATORS)
        )
    dims = defaultdict(int)
    for multiset in combinations_with_replacement(range(len(basis)), n):
        repeated = {i for i, count in Counter(multiset).items() if count > 1}
        if any(basis.is_odd(i) for i in repeated):
            continue
        degree = tuple(
            sum(basis.degree(i)[a] for i in multiset) for a in range(len(basis.axes))
        )
        dims[degree] += 1
    return GradedDimension(basis.axes, dims)


def _koszul_sign(images: Sequence[int], odd_slots: Sequence[int]) -> int:
    """Sign of moving the odd tensor factors from their slots to their images."""
    targets = [images[s] for s in sorted(odd_slots)]
    inversions = sum(
        1
        for i in range(len(targets))
        for j in range(i + 1, len(targets))
        if targets[i] > targets[j]
    )
    return -1 if inversions % 2 else 1


def _signed_trace(factors: Sequence[SignedBasis], g: Permutation, budget: int):
    """Σ over fixed basis monomials of ⊗ factors of their Koszul sign, by degree."""
    images = g.array_form
    cycles = g.full_cyclic_form
    for cycle in cycles:
        for slot in cycle:
            if factors[slot] != factors[cycle[0]]:
                raise ValueError(
                    "Permutation %s moves slot %d onto a different factor" % (g, slot)
                )
    axes = factors[0].axes
    per_cycle = [factors[cycle[0]].classes() for cycle in cycles]
    size = 1
    for choices in per_cycle:
        size *= len(choices)
    if size > budget:
        raise OracleGuardError(
            "%d fixed-monomial classes exceed ORACLE_MAX_BASIS=%d" % (size, budget)
        )
    trace = defaultdict(int)
    for choice in product(*per_cycle):
        weight = 1
        degree = [0] * len(axes)
        odd_slots = []
        for cycle, (class_degree, odd, count) in zip(cycles, choice):
            weight *= count
            for a in range(len(axes)):
                degree[a] += len(cycle) * class_degree[a]
            if odd:
                odd_slots.extend(cycle)
        trace[tuple(degree)] += weight * _koszul_sign(images, odd_slots)
    return trace


def invariants_by_trace(
    factors: Sequence[SignedBasis], group: PermutationGroup
) -> GradedDimension:
    """
    Invariants of a permutation group acting on the tensor product of the
    factors by permuting slots, with Koszul signs, as (1/|G|) Σ_g tr(g).
    """
    factors = list(factors)
    if not factors:
        raise ValueError("Need at least one tensor factor")
    if group.degree != len(factors):
        raise ValueError(
            "Group acts on %d points but there are %d factors" % (group.degree, len(factors))
        )
    order = group.order()
    if order > config.ORACLE_MAX_GROUP_ORDER:
        raise OracleGuardError(
            "Group of order %d exceeds ORACLE_MAX_GROUP_ORDER=%d"
            % (order, config.ORACLE_MAX_GROUP_ORDER)
        )
    totals = defaultdict(int)
    for g in group.generate():
        for degree, value in _signed_trace(factors, g, config.ORACLE_MAX_BASIS).items():
            totals[degree] += value
    dims = {}
    for degree, total in totals.items():
        if total % order:
            raise NonIntegralAverageError(
                "Trace sum %d in degree %s is not divisible by |G| = %d"
                % (total, degree, order)
            )
        if total < 0:
            raise NonIntegralAverageError(
                "Negative invariant dimension %d in degree %s" % (total // order, degree)
            )
        dims[degree] = total // order
    return GradedDimension(factors[0].axes, dims)


def young_subgroup(block_sizes: Sequence[int]) -> PermutationGroup:
    """∏ 𝔖_{b} acting on consecutive blocks of points."""
    size = sum(block_sizes)
    generators = [Permutation(size - 1)]
    start = 0
    for block in block_sizes:
        for a in range(start, start + block - 1):
            generators.append(Permutation([[a, a + 1]], size=size))
        start += block
    return PermutationGroup(generators)


def inertia_sum_bruteforce(family: CoefficientFamily, n: int) -> GradedDimension:
    """
    ⊕ over conjugacy classes of 𝔖_n of the centralizer invariants of the
    fixed-locus tables, one slot per orbit.
    """
    if n > config.ORACLE_MAX_INERTIA_N:
        raise OracleGuardError(
            "n=%d exceeds ORACLE_MAX_INERTIA_N=%d" % (n, config.ORACLE_MAX_INERTIA_N)
        )
    total = GradedDimension.zero(("p", "q"))
    if n == 0:
        return GradedDimension.unit(("p", "q"))
    for conjugacy_class in SymmetricGroup(n).conjugacy_classes():
        representative = min(conjugacy_class, key=lambda g: g.array_form)
        lengths = sorted(len(orbit) for orbit in representative.full_cyclic_form)
        blocks = [lengths.count(i) for i in sorted(set(lengths))]
        factors = [
            SignedBasis.from_dimension(
                family.shifted_table(i), HODGE_SUPER, prefix="o%d:" % i
            )
            for i in lengths
        ]
        if any(len(f) == 0 for f in factors):
            logger.debug("Class %s has an empty fixed-locus table", lengths)
            continue
        invariants = invariants_by_trace(factors, young_subgroup(blocks))
        logger.debug("Class %s: %d invariant dimensions", lengths, invariants.total_dimension)
        total = total + invariants
    return total
