"""
Exact arithmetic on multigraded dimension series.

A GradedDimension is a finitely supported map from integer multi-degrees to
positive integers, on a named axis system. Symmetric powers are super-graded:
the axes listed in a SuperAxes carry Koszul signs, so a generator whose degree
has odd total on those axes behaves like an exterior generator.
"""
import logging
from collections import defaultdict
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterable, Mapping, Optional, Tuple

from sympy import binomial

MultiDegree = Tuple[int, ...]

# (p, q) -> q - p, the grading of Hochschild (co)homology
HKR_COLLAPSE = {"j": {"p": -1, "q": 1}}

logger = logging.getLogger(__name__)


class AxisMismatchError(ValueError):
    """Two operands live on different axis systems."""


class DivergentSeriesError(ValueError):
    """A symmetric algebra would produce infinitely many terms inside the window."""


@dataclass(frozen=True)
class SuperAxes:
    names: FrozenSet[str] = frozenset()

    def __post_init__(self):
        object.__setattr__(self, "names", frozenset(self.names))

    def validate(self, axes: Tuple[str, ...]):
        unknown = self.names.difference(axes)
        if unknown:
            raise AxisMismatchError(
                "Super axes %s not in axis system %s" % (sorted(unknown), axes)
            )

    def parity(self, axes: Tuple[str, ...], degree: MultiDegree) -> int:
        return sum(d for a, d in zip(axes, degree) if a in self.names) % 2


@dataclass(frozen=True)
class TruncationWindow:
    """Inclusive per-axis bounds; None leaves that side open."""

    bounds: Mapping[str, Tuple[Optional[int], Optional[int]]] = field(
        default_factory=dict
    )

    def __post_init__(self):
        for axis, (lower, upper) in self.bounds.items():
            if lower is not None and upper is not None and lower > upper:
                raise ValueError(
                    "Empty window on axis %s: %d > %d" % (axis, lower, upper)
                )

    @classmethod
    def up_to(cls, axis: str, upper: int) -> "TruncationWindow":
        return cls({axis: (0, upper)})

    def upper(self, axis: str) -> Optional[int]:
        return self.bounds.get(axis, (None, None))[1]

    def contains(self, axes: Tuple[str, ...], degree: MultiDegree) -> bool:
        for axis, d in zip(axes, degree):
            lower, upper = self.bounds.get(axis, (None, None))
            if lower is not None and d < lower:
                return False
            if upper is not None and d > upper:
                return False
        return True


class GradedDimension:
    """
    Dimension function of a multigraded vector space.

    Zero entries are dropped on construction, so two instances are equal
    exactly when they have the same axes and the same support.
    """

    __slots__ = ("axes", "_dims")

    def __init__(self, axes: Iterable[str], dims: Optional[Mapping] = None):
        self.axes = tuple(axes)
        if len(set(self.axes)) != len(self.axes):
            raise AxisMismatchError("Repeated axis name in %s" % (self.axes,))
        cleaned = {}
        for degree, dim in (dims or {}).items():
            degree = tuple(int(d) for d in degree)
            if len(degree) != len(self.axes):
                raise AxisMismatchError(
                    "Degree %s has arity %d, axis system %s has %d"
                    % (degree, len(degree), self.axes, len(self.axes))
                )
            dim = int(dim)
            if dim < 0:
                raise ValueError("Negative dimension %d at degree %s" % (dim, degree))
            if dim:
                cleaned[degree] = cleaned.get(degree, 0) + dim
        self._dims: Dict[MultiDegree, int] = cleaned

    @classmethod
    def zero(cls, axes: Iterable[str]) -> "GradedDimension":
        return cls(axes)

    @classmethod
    def unit(cls, axes: Iterable[str]) -> "GradedDimension":
        axes = tuple(axes)
        return cls(axes, {(0,) * len(axes): 1})

    @classmethod
    def singleton(
        cls, axes: Iterable[str], degree: MultiDegree, dim: int = 1
    ) -> "GradedDimension":
        return cls(axes, {tuple(degree): dim})

    @classmethod
    def from_matrix(cls, rows, axes=("p", "q")) -> "GradedDimension":
        """Row index is the first axis, column index the second."""
        return cls(
            axes,
            {(i, j): value for i, row in enumerate(rows) for j, value in enumerate(row)},
        )

    def __getitem__(self, degree: MultiDegree) -> int:
        return self._dims.get(tuple(degree), 0)

    def __iter__(self):
        return iter(sorted(self._dims))

    def __len__(self):
        return len(self._dims)

    def __eq__(self, other):
        if not isinstance(other, GradedDimension):
            return NotImplemented
        return self.axes == other.axes and self._dims == other._dims

    def __hash__(self):
        return hash((self.axes, frozenset(self._dims.items())))

    def __repr__(self):
        return "GradedDimension(%r, %r)" % (self.axes, dict(self.items()))

    def __add__(self, other):
        return direct_sum(self, other)

    def __mul__(self, other):
        return tensor(self, other)

    def items(self):
        return [(degree, self._dims[degree]) for degree in sorted(self._dims)]

    @property
    def support(self):
        return sorted(self._dims)

    @property
    def total_dimension(self) -> int:
        return sum(self._dims.values())

    def is_zero(self) -> bool:
        return not self._dims

    def axis_index(self, axis: str) -> int:
        try:
            return self.axes.index(axis)
        except ValueError:
            raise AxisMismatchError("No axis %s in %s" % (axis, self.axes)) from None

    def restrict(self, window: TruncationWindow) -> "GradedDimension":
        return GradedDimension(
            self.axes,
            {d: v for d, v in self._dims.items() if window.contains(self.axes, d)},
        )

    def slice(self, axis: str, value: int) -> "GradedDimension":
        """The part sitting in degree `value` on `axis`, with that axis removed."""
        index = self.axis_index(axis)
        axes = self.axes[:index] + self.axes[index + 1 :]
        return GradedDimension(
            axes,
            {
                d[:index] + d[index + 1 :]: v
                for d, v in self._dims.items()
                if d[index] == value
            },
        )

    def with_axis(self, axis: str, value: int) -> "GradedDimension":
        """Place the whole series in degree `value` of a new trailing axis."""
        if axis in self.axes:
            raise AxisMismatchError("Axis %s already present in %s" % (axis, self.axes))
        return GradedDimension(
            self.axes + (axis,), {d + (value,): v for d, v in self._dims.items()}
        )

    def rename(self, mapping: Mapping[str, str]) -> "GradedDimension":
        return GradedDimension(
            tuple(mapping.get(a, a) for a in self.axes), dict(self._dims)
        )

    def to_matrix(self, size: int):
        if len(self.axes) != 2:
            raise AxisMismatchError("to_matrix needs two axes, got %s" % (self.axes,))
        return [[self[(i, j)] for j in range(size)] for i in range(size)]


def _check_axes(u: GradedDimension, v: GradedDimension):
    if u.axes != v.axes:
        raise AxisMismatchError("Axis systems differ: %s vs %s" % (u.axes, v.axes))


def shift(v: GradedDimension, d: MultiDegree) -> GradedDimension:
    """V[d], with (V[d])_i = V_{i+d}: the support moves by -d."""
    d = tuple(d)
    if len(d) != len(v.axes):
        raise AxisMismatchError(
            "Shift %s does not match axis system %s" % (d, v.axes)
        )
    return GradedDimension(
        v.axes,
        {tuple(a - b for a, b in zip(degree, d)): dim for degree, dim in v.items()},
    )


def direct_sum(u: GradedDimension, v: GradedDimension) -> GradedDimension:
    _check_axes(u, v)
    dims = defaultdict(int)
    for degree, dim in u.items():
        dims[degree] += dim
    for degree, dim in v.items():
        dims[degree] += dim
    return GradedDimension(u.axes, dims)


def tensor(
    u: GradedDimension, v: GradedDimension, window: Optional[TruncationWindow] = None
) -> GradedDimension:
    _check_axes(u, v)
    dims = defaultdict(int)
    for a, x in u.items():
        for b, y in v.items():
            degree = tuple(i + j for i, j in zip(a, b))
            if window is None or window.contains(u.axes, degree):
                dims[degree] += x * y
    return GradedDimension(u.axes, dims)


def _factor_coefficient(dim: int, power: int, odd: bool) -> int:
    # coefficient of u^power in (1 - u)^(-dim) for even generators, (1 + u)^dim for odd ones
    if odd:
        return int(binomial(dim, power))
    return int(binomial(dim + power - 1, power))


def sym_n(v: GradedDimension, n: int, k: SuperAxes = SuperAxes()) -> GradedDimension:
    """
    Dimension series of Sym^n(V), super-graded along the axes in `k`.

    Expands the product of (1 - (-1)^{|d|} u s^d)^{-(-1)^{|d|} dim V_d} over the
    support with an auxiliary counting variable u truncated at u^n, and returns
    the u^n coefficient.
    """
    if n < 0:
        raise ValueError("Symmetric power of negative order: %d" % n)
    k.validate(v.axes)
    zero_degree = (0,) * len(v.axes)
    partial = {(0, zero_degree): 1}
    for degree, dim in v.items():
        odd = k.parity(v.axes, degree) == 1
        step = defaultdict(int)
        for (used, base), coefficient in partial.items():
            for power in range(n - used + 1):
                factor = _factor_coefficient(dim, power, odd)
                if factor == 0:
                    break
                target = tuple(b + power * d for b, d in zip(base, degree))
                step[(used + power, target)] += coefficient * factor
        partial = step
    return GradedDimension(
        v.axes, {degree: c for (used, degree), c in partial.items() if used == n}
    )


def _counting_axis(v: GradedDimension, k: SuperAxes, window: TruncationWindow) -> int:
    for index, axis in enumerate(v.axes):
        if window.upper(axis) is None:
            continue
        if all(
            degree[index] > 0
            or (degree[index] == 0 and k.parity(v.axes, degree) == 1)
            for degree in v.support
        ):
            return index
    raise DivergentSeriesError(
        "No bounded axis of %s grows on every even generator of %s" % (window, v)
    )


def sym_total(
    v: GradedDimension, k: SuperAxes, window: TruncationWindow
) -> GradedDimension:
    """
    The total symmetric power Sym(V) = ⊕_n Sym^n(V), truncated to `window`.

    The window must bound, from above, an axis on which every generator of
    even parity has positive degree and no generator has negative degree.
    """
    k.validate(v.axes)
    if v.is_zero():
        return GradedDimension.unit(v.axes).restrict(window)
    index = _counting_axis(v, k, window)
    upper = window.upper(v.axes[index])
    partial = {(0,) * len(v.axes): 1}
    for degree, dim in v.items():
        odd = k.parity(v.axes, degree) == 1
        step = defaultdict(int)
        for base, coefficient in partial.items():
            power = 0
            while True:
                target = tuple(b + power * d for b, d in zip(base, degree))
                if target[index] > upper:
                    break
                factor = _factor_coefficient(dim, power, odd)
                if factor == 0:
                    break
                step[target] += coefficient * factor
                power += 1
        partial = step
    logger.debug("sym_total over %s produced %d terms", v.axes, len(partial))
    return GradedDimension(v.axes, partial).restrict(window)


def collapse(
    v: GradedDimension, regrading: Mapping[str, Mapping[str, int]]
) -> GradedDimension:
    """
    Regrade along integer linear combinations of the axes.

    `regrading` maps each target axis to its coefficients on the source axes, e.g.
    HKR_COLLAPSE = {"j": {"p": -1, "q": 1}} sends (p, q) to q - p.
    """
    rows = []
    for target, combination in regrading.items():
        rows.append([(v.axis_index(source), c) for source, c in combination.items()])
    dims = defaultdict(int)
    for degree, dim in v.items():
        image = tuple(sum(c * degree[i] for i, c in row) for row in rows)
        dims[image] += dim
    return GradedDimension(tuple(regrading), dims)
