import logging
from dataclasses import dataclass
from typing import List, Mapping, Sequence, Tuple, Union

from sympy import factorial
from sympy.combinatorics import Permutation
from sympy.utilities.iterables import partitions

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CycleType:
    """
    A partition of n stored as its multiplicities: lambda_i is the number of
    parts equal to i (the number of i-cycles of a permutation of this type).
    """

    n: int
    multiplicities: Tuple[Tuple[int, int], ...]

    def __post_init__(self):
        total = sum(i * count for i, count in self.multiplicities)
        if total != self.n:
            raise ValueError(
                "Multiplicities %s sum to %d, not %d" % (self.multiplicities, total, self.n)
            )
        if any(i < 1 or count < 1 for i, count in self.multiplicities):
            raise ValueError("Invalid multiplicities: %s" % (self.multiplicities,))

    @classmethod
    def from_multiplicities(cls, multiplicities: Mapping[int, int]) -> "CycleType":
        items = tuple(sorted((i, c) for i, c in multiplicities.items() if c))
        return cls(sum(i * c for i, c in items), items)

    @classmethod
    def from_parts(cls, parts: Sequence[int]) -> "CycleType":
        counts = {}
        for part in parts:
            counts[part] = counts.get(part, 0) + 1
        return cls.from_multiplicities(counts)

    def multiplicity(self, i: int) -> int:
        return dict(self.multiplicities).get(i, 0)

    @property
    def parts(self) -> Tuple[int, ...]:
        return tuple(
            i for i, count in sorted(self.multiplicities, reverse=True) for _ in range(count)
        )

    @property
    def length(self) -> int:
        return sum(count for _, count in self.multiplicities)

    def __str__(self):
        return "(%s)" % ",".join(str(part) for part in self.parts)


@dataclass(frozen=True)
class OrbitDecomposition:
    cycle_type: CycleType
    orbits: Tuple[Tuple[int, ...], ...]


def partitions_of(n: int) -> List[CycleType]:
    """All partitions of n, in reverse-lexicographic order of their parts."""
    if n < 0:
        raise ValueError("Cannot partition a negative number: %d" % n)
    if n == 0:
        return [CycleType(0, ())]
    # sympy reuses the yielded dict, so each one is copied into a CycleType
    return [CycleType.from_multiplicities(p) for p in partitions(n)]


def centralizer_order(c: CycleType) -> int:
    z = 1
    for i, count in c.multiplicities:
        z *= i**count * int(factorial(count))
    return z


def class_size(c: CycleType) -> int:
    return int(factorial(c.n)) // centralizer_order(c)


def age(c: CycleType) -> int:
    return sum((i - 1) * count for i, count in c.multiplicities)


def all_parts_odd(c: CycleType) -> bool:
    return all(i % 2 == 1 for i, _ in c.multiplicities)


def orbit_decomposition(g: Union[Permutation, Sequence[int]]) -> OrbitDecomposition:
    """
    Orbits of a permutation of {1..n}, given either as a sympy Permutation
    (acting on {0..n-1}) or as the list of images of 1..n.
    """
    if not isinstance(g, Permutation):
        images = [int(image) - 1 for image in g]
        if sorted(images) != list(range(len(images))):
            raise ValueError("Not a bijection on {1..%d}: %s" % (len(images), list(g)))
        g = Permutation(images)
    orbits = tuple(
        tuple(point + 1 for point in cycle) for cycle in g.full_cyclic_form
    )
    cycle_type = CycleType.from_parts([len(orbit) for orbit in orbits])
    return OrbitDecomposition(cycle_type, orbits)
