"""
Borel-Weil-Bott and Schur functor dimensions on Grassmannians.

Irreducible homogeneous bundles on Gr(k, n+1) are written 𝕊_{λ_S}S ⊗ 𝕊_{λ_Q}Q,
with S the rank-k tautological subbundle and Q the quotient. Projective space
P^n is Gr(1, n+1), where S = O(-1) and Ω^1 = S ⊗ Q^∨.
"""
import logging
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from sympy import Rational

logger = logging.getLogger(__name__)


class NonDominantWeightError(ValueError):
    """A weight that must be non-increasing is not."""


@dataclass(frozen=True)
class GLWeight:
    entries: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(int(e) for e in self.entries))

    def __len__(self):
        return len(self.entries)

    def __add__(self, other: "GLWeight") -> "GLWeight":
        return GLWeight(self.entries + other.entries)

    def __str__(self):
        return "(%s)" % ",".join(str(e) for e in self.entries)

    @property
    def is_dominant(self) -> bool:
        return all(a >= b for a, b in zip(self.entries, self.entries[1:]))

    def dual(self) -> "GLWeight":
        return GLWeight(tuple(-e for e in reversed(self.entries)))

    def twist(self, amount: int) -> "GLWeight":
        """Tensor with the amount-th power of the determinant."""
        return GLWeight(tuple(e + amount for e in self.entries))


@dataclass(frozen=True)
class BundleWeight:
    lambda_S: GLWeight
    lambda_Q: GLWeight

    def __post_init__(self):
        for part in (self.lambda_S, self.lambda_Q):
            if not part.is_dominant:
                raise NonDominantWeightError("Weight %s is not dominant" % part)

    @classmethod
    def of(cls, lambda_S, lambda_Q) -> "BundleWeight":
        return cls(GLWeight(tuple(lambda_S)), GLWeight(tuple(lambda_Q)))

    @property
    def rank(self) -> int:
        return schur_dim(self.lambda_S) * schur_dim(self.lambda_Q)


@dataclass(frozen=True)
class BWBResult:
    degree: int
    weight: GLWeight

    @property
    def dimension(self) -> int:
        return schur_dim(self.weight)


def schur_dim(weight: GLWeight, r: Optional[int] = None) -> int:
    """Weyl dimension formula for the GL_r representation of highest weight `weight`."""
    if r is not None and r != len(weight):
        raise ValueError("Weight %s does not have length %d" % (weight, r))
    if not weight.is_dominant:
        raise NonDominantWeightError("Weight %s is not dominant" % weight)
    entries = weight.entries
    value = Rational(1)
    for i in range(len(entries)):
        for j in range(i + 1, len(entries)):
            value *= Rational(entries[i] - entries[j] + j - i, j - i)
    return int(value)


def _inversions(values) -> int:
    return sum(
        1
        for i in range(len(values))
        for j in range(i + 1, len(values))
        if values[i] < values[j]
    )


def bwb_cohomology(w: BundleWeight, n: int) -> Optional[BWBResult]:
    """
    Cohomology of 𝕊_{λ_S}S ⊗ 𝕊_{λ_Q}Q on Gr(k, n+1) by the rho-shift algorithm.

    Returns None when all cohomology vanishes, otherwise the unique degree l
    with H^l = 𝕊_μ V and the weight μ.
    """
    concatenated = (w.lambda_Q + w.lambda_S).entries
    if len(concatenated) != n + 1:
        raise ValueError(
            "Bundle weight %s does not live on a Grassmannian of %d-dimensional space"
            % (w, n + 1)
        )
    rho = tuple(range(n, -1, -1))
    shifted = tuple(a + b for a, b in zip(concatenated, rho))
    if len(set(shifted)) < len(shifted):
        return None
    degree = _inversions(shifted)
    weight = tuple(a - b for a, b in zip(sorted(shifted, reverse=True), rho))
    return BWBResult(degree, GLWeight(weight))


def bott(p: int, j: int, n: int) -> Dict[int, int]:
    """h^q(P^n, Ω^p(j)) for all q with a nonzero value."""
    if not 0 <= p <= n:
        raise ValueError("Need 0 <= p <= n, got p=%d, n=%d" % (p, n))
    w = BundleWeight.of((p - j,), (0,) * (n - p) + (-1,) * p)
    result = bwb_cohomology(w, n)
    if result is None:
        return {}
    return {result.degree: result.dimension}


def gl2_tensor(a: GLWeight, b: GLWeight) -> List[GLWeight]:
    """Clebsch-Gordan: 𝕊_a ⊗ 𝕊_b for GL_2, as a list of irreducible summands."""
    if len(a) != 2 or len(b) != 2:
        raise ValueError("GL_2 weights have length 2: %s, %s" % (a, b))
    (a1, a2), (b1, b2) = a.entries, b.entries
    return [
        GLWeight((a1 + b1 - i, a2 + b2 + i)) for i in range(min(a1 - a2, b1 - b2) + 1)
    ]


def grassmannian_serre_dual(w: BundleWeight, n: int) -> BundleWeight:
    """The weight of w^∨ ⊗ ω_G on Gr(k, n+1), where ω_G = (det S)^{n+1-k} ⊗ (det Q)^{-k}."""
    k = len(w.lambda_S)
    return BundleWeight(
        w.lambda_S.dual().twist(n + 1 - k), w.lambda_Q.dual().twist(-k)
    )


# Hilbert square of P^2 as the P^2-bundle π: H -> G = Gr(2, 3).
# Rπ_* ∧^a T_π as sums of 𝕊_λ S; these pushforwards are input data.
RELATIVE_POLYVECTOR_PUSHFORWARDS = {
    0: [(0, 0)],
    1: [(2, -2), (1, -1)],
    2: [(3, -3), (1, -1)],
}

# ∧^b T_G = ∧^b(S^∨ ⊗ Q) with Q of rank one, as (λ_S, λ_Q)
BASE_POLYVECTORS = {
    0: ((0, 0), (0,)),
    1: ((0, -1), (1,)),
    2: ((-1, -1), (2,)),
}


@dataclass(frozen=True)
class Hilb2HKRTable:
    """h^q(Hilb^2 P^2, ∧^p T) for p = 0..4, keyed rows[p][q]."""

    rows: Dict[int, Dict[int, int]]
    euler_characteristics: Dict[int, int]

    def hochschild(self) -> Dict[int, int]:
        """HKR column sums: HH^j = ⊕_{p+q=j} H^q(∧^p T)."""
        columns = {}
        for p, row in self.rows.items():
            for q, dim in row.items():
                columns[p + q] = columns.get(p + q, 0) + dim
        return dict(sorted(columns.items()))


def graded_pieces(p: int) -> List[BundleWeight]:
    """Irreducible summands of Rπ_* of the graded pieces of ∧^p T_H."""
    pieces = []
    for a, pushforward in RELATIVE_POLYVECTOR_PUSHFORWARDS.items():
        b = p - a
        if b not in BASE_POLYVECTORS:
            continue
        base_S, base_Q = BASE_POLYVECTORS[b]
        for relative in pushforward:
            for summand in gl2_tensor(GLWeight(relative), GLWeight(base_S)):
                pieces.append(BundleWeight(summand, GLWeight(base_Q)))
    return pieces


def hilb2_p2_hkr() -> Hilb2HKRTable:
    rows = {}
    euler = {}
    for p in range(5):
        row = {}
        chi = 0
        for piece in graded_pieces(p):
            result = bwb_cohomology(piece, 2)
            if result is None:
                continue
            row[result.degree] = row.get(result.degree, 0) + result.dimension
            chi += (-1) ** result.degree * result.dimension
            logger.debug(
                "∧^%d T piece %s: H^%d = 𝕊%s V", p, piece, result.degree, result.weight
            )
        rows[p] = dict(sorted(row.items()))
        euler[p] = chi
    return Hilb2HKRTable(rows, euler)


def hilb2_anticanonical_sections() -> int:
    """h^0(Hilb^2 P^2, ω^∨) as Sym^2 of the ten cubics, h^0(P^2, O(3))."""
    sections = bott(0, 3, 2)[0]
    return schur_dim(GLWeight((2,) + (0,) * (sections - 1)))
