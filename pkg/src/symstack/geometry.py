"""
Geometric input: twisted Hodge tables of a base variety.

Every table is a GradedDimension on the axes (p, q) holding
h^{p,q}(X, E) = dim H^q(X, Ω^p ⊗ E). Presets are generated from closed rules
(Borel-Weil-Bott on projective spaces, the splitting of the tangent bundle of a
bielliptic surface); user varieties are loaded from JSON.
"""
import json
import logging
import re
from dataclasses import dataclass, field, replace
from functools import lru_cache, partial
from typing import Callable, Dict, List, Mapping, Optional

from constance import config

from symstack import bwb
from symstack.multigraded import HKR_COLLAPSE, GradedDimension, collapse, shift

HODGE_AXES = ("p", "q")
OMEGA_LABEL = re.compile(r"^omega(\^(?P<power>-?\d+))?$")
logger = logging.getLogger(__name__)


class MissingTableError(LookupError):
    """A twisted Hodge table needed by a computation is not stored."""


class VarietyValidationError(ValueError):
    """Input tables violate a structural invariant."""

    def __init__(self, message, triple=None):
        super().__init__(message)
        self.triple = triple


def _zero_table() -> GradedDimension:
    return GradedDimension.zero(HODGE_AXES)


@dataclass(frozen=True)
class VarietyData:
    name: str
    dim: int
    omega_order: int
    omega_tables: Mapping[int, GradedDimension]
    line_bundle_tables: Mapping[str, Mapping[int, GradedDimension]] = field(
        default_factory=dict
    )
    # closed rules for powers outside the stored window, e.g. Bott on P^n
    omega_rule: Optional[Callable[[int], GradedDimension]] = field(
        default=None, compare=False, repr=False
    )
    line_bundle_rules: Mapping[str, Callable[[int], GradedDimension]] = field(
        default_factory=dict, compare=False, repr=False
    )

    def omega_table(self, m: int) -> GradedDimension:
        """h^{p,q}(X, ω^m), using ω^r = O when the canonical bundle is r-torsion."""
        if m in self.omega_tables:
            return self.omega_tables[m]
        if self.omega_order > 0:
            for stored in sorted(self.omega_tables):
                if (stored - m) % self.omega_order == 0:
                    return self.omega_tables[stored]
        if self.omega_rule is not None:
            logger.debug("Computing ω^%d on %s outside the stored window", m, self.name)
            return self.omega_rule(m)
        raise MissingTableError(
            "No table for ω^%d on %s (stored: %s)"
            % (m, self.name, sorted(self.omega_tables))
        )

    def has_omega_table(self, m: int) -> bool:
        try:
            self.omega_table(m)
        except MissingTableError:
            return False
        return True

    @property
    def hodge_diamond(self) -> GradedDimension:
        return self.omega_table(0)

    def validate(self):
        """Box, periodicity and twisted Serre duality checks."""
        d = self.dim
        if d < 1:
            raise VarietyValidationError("Dimension must be positive, got %d" % d)
        if self.omega_order < 0:
            raise VarietyValidationError(
                "omega_order must be non-negative, got %d" % self.omega_order
            )
        tables = [(("omega", m), t) for m, t in self.omega_tables.items()]
        for label, powers in self.line_bundle_tables.items():
            tables.extend(((label, k), t) for k, t in powers.items())
        for (label, m), table in tables:
            if table.axes != HODGE_AXES:
                raise VarietyValidationError(
                    "Table %s^%d has axes %s" % (label, m, table.axes)
                )
            for p, q in table.support:
                if not (0 <= p <= d and 0 <= q <= d):
                    raise VarietyValidationError(
                        "Table %s^%d has h^{%d,%d} outside [0,%d]x[0,%d]"
                        % (label, m, p, q, d, d),
                        (p, q, m),
                    )
        if self.omega_order > 0:
            for m, table in self.omega_tables.items():
                for other, other_table in self.omega_tables.items():
                    if (m - other) % self.omega_order == 0 and table != other_table:
                        raise VarietyValidationError(
                            "ω has order %d but the tables of ω^%d and ω^%d differ"
                            % (self.omega_order, m, other),
                            (0, 0, m),
                        )
        for m, table in sorted(self.omega_tables.items()):
            if not self.has_omega_table(-m):
                continue
            dual = self.omega_table(-m)
            for p in range(d + 1):
                for q in range(d + 1):
                    if table[(p, q)] != dual[(d - p, d - q)]:
                        raise VarietyValidationError(
                            "Serre duality fails at (p,q,m)=(%d,%d,%d): "
                            "h^{%d,%d}(ω^%d)=%d but h^{%d,%d}(ω^%d)=%d"
                            % (
                                p, q, m,
                                p, q, m, table[(p, q)],
                                d - p, d - q, -m, dual[(d - p, d - q)],
                            ),
                            (p, q, m),
                        )
        return self


@dataclass(frozen=True)
class HSTable:
    """Dimensions of HS_k^j(X) on the single Hochschild axis j."""

    k: int
    dims: GradedDimension

    def check_support(self, d: int):
        lower, upper = -self.k * d, 2 * d - self.k * d
        for (j,) in self.dims.support:
            if not lower <= j <= upper:
                raise VarietyValidationError(
                    "HS_%d has degree %d outside [%d, %d]" % (self.k, j, lower, upper)
                )
        return self


@dataclass(frozen=True)
class CoefficientFamily:
    """
    Tables of H^{#,*}(X, F^<i>) for i >= 1, with the cohomological shift of
    each F^<i> recorded separately: F^<i> = E_i[shift_i].
    """

    dim: int
    tables: Mapping[int, GradedDimension]
    shifts: Mapping[int, int]
    provenance: str

    @property
    def max_i(self) -> int:
        return max(self.tables, default=0)

    def table(self, i: int) -> GradedDimension:
        try:
            return self.tables[i]
        except KeyError:
            raise MissingTableError(
                "Family %s has no table for i=%d" % (self.provenance, i)
            ) from None

    def shift_of(self, i: int) -> int:
        return self.shifts.get(i, 0)

    def shifted_table(self, i: int) -> GradedDimension:
        """The bigraded table of E_i[shift_i]: q moves to q - shift_i."""
        return shift(self.table(i), (0, self.shift_of(i)))

    def hochschild_table(self, i: int) -> GradedDimension:
        return collapse(self.shifted_table(i), HKR_COLLAPSE)


def hs_of_variety(variety: VarietyData, k: int) -> HSTable:
    """
    HS_k^j(X) = ⊕_{q-p = j+(k-1)d} h^{p,q}(X, ω^{k-1}),
    from ∧^p T ⊗ ω^k ≅ Ω^{d-p} ⊗ ω^{k-1}.
    """
    table = variety.omega_table(k - 1)
    dims = shift(collapse(table, HKR_COLLAPSE), ((k - 1) * variety.dim,))
    return HSTable(k, dims).check_support(variety.dim)


def serre_family(variety: VarietyData, k: int, max_i: int) -> CoefficientFamily:
    """F^<i> = ω^{(k-1)i}[(k-1)id], zero for even i when (k-1)d is odd."""
    odd = ((k - 1) * variety.dim) % 2 == 1
    tables, shifts = {}, {}
    for i in range(1, max_i + 1):
        shifts[i] = (k - 1) * i * variety.dim
        if odd and i % 2 == 0:
            tables[i] = _zero_table()
        else:
            tables[i] = variety.omega_table((k - 1) * i)
    return CoefficientFamily(variety.dim, tables, shifts, "serre k=%d" % k)


def available_line_bundles(variety: VarietyData) -> List[str]:
    labels = ["O", "omega", "omega^-1"]
    return labels + sorted(variety.line_bundle_tables)


def _omega_power(label: str) -> Optional[int]:
    if label == "O":
        return 0
    match = OMEGA_LABEL.match(label)
    if match is None:
        return None
    return int(match.group("power") or 1)


def line_bundle_family(
    variety: VarietyData, label: str, max_i: int
) -> CoefficientFamily:
    """F^<i> = L^{⊗i}; L is a stored table set or O / omega / omega^m."""
    power = _omega_power(label)
    tables = {}
    if label in variety.line_bundle_tables:
        stored = variety.line_bundle_tables[label]
        rule = variety.line_bundle_rules.get(label)
        for i in range(1, max_i + 1):
            if i not in stored and rule is not None:
                tables[i] = rule(i)
                continue
            if i not in stored:
                raise MissingTableError(
                    "Line bundle %s on %s has no table for power %d"
                    % (label, variety.name, i)
                )
            tables[i] = stored[i]
    elif power is not None:
        for i in range(1, max_i + 1):
            tables[i] = variety.omega_table(power * i)
    else:
        raise ValueError(
            "Unrecognized line bundle: %s (available: %s)"
            % (label, ", ".join(available_line_bundles(variety)))
        )
    return CoefficientFamily(variety.dim, tables, {}, "line bundle %s" % label)


@lru_cache(maxsize=None)
def projective_space_table(n: int, degree: int) -> GradedDimension:
    """h^{p,q}(P^n, O(degree)) assembled from Bott's formula."""
    dims = {}
    for p in range(n + 1):
        for q, dim in bwb.bott(p, degree, n).items():
            dims[(p, q)] = dim
    return GradedDimension(HODGE_AXES, dims)


def _projective_omega_table(n: int, m: int) -> GradedDimension:
    return projective_space_table(n, -(n + 1) * m)


def preset_projective_space(n: int, window: Optional[int] = None) -> VarietyData:
    if n < 1:
        raise ValueError("Projective space needs n >= 1, got %d" % n)
    if window is None:
        window = config.PRESET_OMEGA_WINDOW
    tables = {m: _projective_omega_table(n, m) for m in range(-window, window + 1)}
    return VarietyData(
        "P%d" % n, n, 0, tables, omega_rule=partial(_projective_omega_table, n)
    )


def projective_line_bundle(n: int, degree: int, max_k: int) -> Dict[int, GradedDimension]:
    return {k: projective_space_table(n, degree * k) for k in range(0, max_k + 1)}


BIELLIPTIC_ORDERS = (2, 3, 4, 6)


def _bielliptic_line_bundle(m: int, order: int) -> List[int]:
    # H^q(S, alb^*L^m), L of order `order` on the elliptic curve C
    if m % order == 0:
        return [1, 1, 0]
    if (m + 1) % order == 0:
        return [0, 1, 1]
    return [0, 0, 0]


def bielliptic_table(order: int, m: int) -> GradedDimension:
    """
    h^{p,q}(S, ω^m) with T_S = O ⊕ alb^*L and ω = alb^*L^{-1}, so that
    Ω^1 = O ⊕ alb^*L^{-1} and Ω^2 = alb^*L^{-1}.
    """
    rows = [
        _bielliptic_line_bundle(-m, order),
        [
            a + b
            for a, b in zip(
                _bielliptic_line_bundle(-m, order), _bielliptic_line_bundle(-m - 1, order)
            )
        ],
        _bielliptic_line_bundle(-m - 1, order),
    ]
    return GradedDimension.from_matrix(rows, HODGE_AXES)


def preset_bielliptic(order: int) -> VarietyData:
    if order not in BIELLIPTIC_ORDERS:
        raise ValueError(
            "Unrecognized bielliptic order: %s (expected one of %s)"
            % (order, BIELLIPTIC_ORDERS)
        )
    tables = {m: bielliptic_table(order, m) for m in range(order)}
    return VarietyData("bielliptic%d" % order, 2, order, tables)


def _projective_twist(n: int, degree: int, k: int) -> GradedDimension:
    return projective_space_table(n, degree * k)


def _p2_with_cubics(window: int) -> VarietyData:
    variety = preset_projective_space(2, window)
    return replace(
        variety,
        line_bundle_tables={"O3": projective_line_bundle(2, 3, window)},
        line_bundle_rules={"O3": partial(_projective_twist, 2, 3)},
    )


PRESETS = {
    "p1": lambda window: preset_projective_space(1, window),
    "p2": _p2_with_cubics,
    "p3": lambda window: preset_projective_space(3, window),
    "bielliptic2": lambda window: preset_bielliptic(2),
    "bielliptic3": lambda window: preset_bielliptic(3),
    "bielliptic4": lambda window: preset_bielliptic(4),
    "bielliptic6": lambda window: preset_bielliptic(6),
}


def preset_names() -> List[str]:
    return list(PRESETS)


@lru_cache(maxsize=None)
def _cached_preset(name: str, window: int) -> VarietyData:
    logger.debug("Building preset %s with ω-window %d", name, window)
    return PRESETS[name](window).validate()


def preset(name: str, window: Optional[int] = None) -> VarietyData:
    if name not in PRESETS:
        raise ValueError(
            "Unrecognized preset: %s (available: %s)" % (name, ", ".join(PRESETS))
        )
    if window is None:
        window = config.PRESET_OMEGA_WINDOW
    return _cached_preset(name, window)


def variety_from_document(document: Mapping) -> VarietyData:
    """Build and validate a VarietyData from the JSON document format."""
    # imported here: the serializers module imports this one
    from symstack.serializers import VarietySerializer

    serializer = VarietySerializer(data=document)
    if not serializer.is_valid():
        raise VarietyValidationError("Invalid variety document: %s" % serializer.errors)
    data = serializer.validated_data
    omega_tables = {
        int(m): GradedDimension.from_matrix(rows, HODGE_AXES)
        for m, rows in data["omega_tables"].items()
    }
    line_bundles = {
        label: {
            int(k): GradedDimension.from_matrix(rows, HODGE_AXES)
            for k, rows in powers.items()
        }
        for label, powers in data.get("line_bundles", {}).items()
    }
    variety = VarietyData(
        data["name"], data["dim"], data["omega_order"], omega_tables, line_bundles
    )
    return variety.validate()


def load_variety(path) -> VarietyData:
    logger.info("Loading variety from %s", path)
    with open(path, "r") as f:
        try:
            document = json.load(f)
        except json.JSONDecodeError as ex:
            raise VarietyValidationError("%s is not valid JSON: %s" % (path, ex))
    return variety_from_document(document)


def dump_variety(variety: VarietyData) -> Dict:
    size = variety.dim + 1
    document = {
        "name": variety.name,
        "dim": variety.dim,
        "omega_order": variety.omega_order,
        "omega_tables": {
            str(m): table.to_matrix(size) for m, table in sorted(variety.omega_tables.items())
        },
    }
    if variety.line_bundle_tables:
        document["line_bundles"] = {
            label: {str(k): t.to_matrix(size) for k, t in sorted(powers.items())}
            for label, powers in sorted(variety.line_bundle_tables.items())
        }
    return document


def save_variety(variety: VarietyData, path):
    with open(path, "w") as f:
        json.dump(dump_variety(variety), f, indent=2)
