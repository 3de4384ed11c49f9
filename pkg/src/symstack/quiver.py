"""
Cartan and Coxeter matrices of directed finite-dimensional algebras, and the
Hochschild series of the tilting algebra of Sym^2 P^1.
"""
import json
import logging
from dataclasses import dataclass
from typing import Dict, Sequence, Tuple

from sympy import Matrix

from symstack.bwb import GLWeight, schur_dim
from symstack.engine import ConsistencyError

logger = logging.getLogger(__name__)


class CartanMatrixError(ValueError):
    """The matrix is not the Cartan matrix of a directed algebra."""


@dataclass(frozen=True)
class CartanMatrix:
    entries: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        size = len(self.entries)
        if size == 0:
            raise CartanMatrixError("Cartan matrix is empty")
        for i, row in enumerate(self.entries):
            if len(row) != size:
                raise CartanMatrixError(
                    "Row %d has %d entries, expected %d" % (i, len(row), size)
                )
            for j, value in enumerate(row):
                if not isinstance(value, int) or isinstance(value, bool):
                    raise CartanMatrixError("Entry (%d,%d) is not an integer: %r" % (i, j, value))
                if i == j and value != 1:
                    raise CartanMatrixError("Diagonal entry (%d,%d) is %d, not 1" % (i, j, value))
                if i > j and value != 0:
                    raise CartanMatrixError(
                        "Entry (%d,%d) below the diagonal is %d" % (i, j, value)
                    )

    @classmethod
    def of(cls, rows: Sequence[Sequence[int]]) -> "CartanMatrix":
        return cls(tuple(tuple(row) for row in rows))

    @property
    def size(self) -> int:
        return len(self.entries)

    @property
    def matrix(self) -> Matrix:
        return Matrix(self.entries)


# Full exceptional collection on Sym^2 P^1 = P^2, three blocks, five objects
SYM2_P1_CARTAN = CartanMatrix.of(
    [
        [1, 0, 2, 3, 1],
        [0, 1, 2, 1, 3],
        [0, 0, 1, 2, 2],
        [0, 0, 0, 1, 0],
        [0, 0, 0, 0, 1],
    ]
)


def coxeter(cartan: CartanMatrix) -> Matrix:
    """C = -A^{-1} A^T, computed exactly."""
    a = cartan.matrix
    if a.det() != 1:
        raise CartanMatrixError("Cartan matrix has determinant %s" % a.det())
    c = -a.inv() * a.T
    if any(not entry.is_integer for entry in c):
        raise CartanMatrixError("Coxeter matrix is not integral: %s" % c.tolist())
    return c


def hh_euler_characteristic(cartan: CartanMatrix) -> int:
    """Σ (-1)^i dim HH^i = -tr C."""
    return int(-coxeter(cartan).trace())


def sym2_p1_series() -> Dict[int, int]:
    """
    (h^0, h^1, h^2) of HH^* of the tilting algebra: h^0 = 1 (acyclic quiver),
    h^1 = dim sl_2, h^2 from the Euler characteristic. Global dimension 2.
    """
    chi = hh_euler_characteristic(SYM2_P1_CARTAN)
    h0 = 1
    h1 = schur_dim(GLWeight((1, -1)))
    h2 = chi - h0 + h1
    if h2 < 0:
        raise ConsistencyError(
            "Euler characteristic %d forces h^2 = %d < 0" % (chi, h2)
        )
    logger.debug("Coxeter trace %d gives HH = (%d, %d, %d)", -chi, h0, h1, h2)
    return {0: h0, 1: h1, 2: h2}


def load_cartan(path) -> CartanMatrix:
    with open(path, "r") as f:
        try:
            rows = json.load(f)
        except json.JSONDecodeError as ex:
            raise CartanMatrixError("%s is not valid JSON: %s" % (path, ex))
    if not isinstance(rows, list) or not all(isinstance(row, list) for row in rows):
        raise CartanMatrixError("%s must hold a JSON array of arrays" % path)
    return CartanMatrix.of(rows)
