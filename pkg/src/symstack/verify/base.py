"""
Verification suites. Each suite recomputes a family of numbers along two or
more independent routes and reports every disagreement.
"""
import logging
import random
import time
from abc import ABC, abstractmethod
from collections import Counter
from dataclasses import dataclass, field
from itertools import permutations
from typing import List, Optional

from constance import config
from sympy.combinatorics import SymmetricGroup
from sympy.combinatorics.named_groups import CyclicGroup

from symstack import bwb, engine, geometry, multigraded, oracle, partitions, quiver
from symstack.engine import CheckReport, compare_coefficients, compare_dimensions
from symstack.multigraded import GradedDimension, SuperAxes

SURFACE_PRESETS = ("p2", "bielliptic2", "bielliptic3", "bielliptic4", "bielliptic6")
SERRE_POWERS = (-1, 0, 1, 2)
ORBIT_ENUMERATION_MAX_N = 6
logger = logging.getLogger(__name__)


@dataclass
class SuiteReport:
    name: str
    checks: List[CheckReport] = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    @property
    def first_failure(self) -> Optional[CheckReport]:
        for check in self.checks:
            if not check.passed:
                return check
        return None


def _scalar_check(name, expected, actual) -> CheckReport:
    return compare_coefficients(name, (), {(): expected}, {(): actual})


def _series(values, axis="j") -> GradedDimension:
    """Dims from a coefficient list starting in degree 0, or a {degree: dim} map."""
    if not isinstance(values, dict):
        values = dict(enumerate(values))
    return GradedDimension((axis,), {(d,): v for d, v in values.items()})


class Suite(ABC):
    name = None

    def __init__(self):
        self.checks: List[CheckReport] = []

    def check(self, report: CheckReport):
        self.checks.append(report)
        if not report.passed:
            logger.warning("%s: %s failed", self.name, report.name)

    def check_equal(self, name, expected, actual):
        self.check(compare_dimensions(name, expected, actual))

    def check_scalar(self, name, expected, actual):
        self.check(_scalar_check(name, expected, actual))

    @abstractmethod
    def collect(self, max_n: int):
        """Run every check of the suite through self.check."""

    def run(self, max_n: int) -> SuiteReport:
        logger.info("Running suite %s with max n %d", self.name, max_n)
        self.checks = []
        start = time.time()
        self.collect(max_n)
        report = SuiteReport(self.name, self.checks, time.time() - start)
        logger.info(
            "Suite %s: %d checks, passed=%s in %0.3f seconds",
            self.name, len(report.checks), report.passed, report.elapsed,
        )
        return report


class MultigradedSuite(Suite):
    name = "multigraded"

    def collect(self, max_n):
        hodge = SuperAxes({"p", "q"})
        for name in geometry.preset_names():
            diamond = geometry.preset(name).hodge_diamond
            total = multigraded.sym_total(
                diamond.with_axis("t", 1), hodge, multigraded.TruncationWindow.up_to("t", max_n)
            )
            for n in range(max_n + 1):
                self.check_equal(
                    "%s sym_total t^%d" % (name, n),
                    multigraded.sym_n(diamond, n, hodge),
                    total.slice("t", n),
                )
            anticanonical = geometry.preset(name).omega_table(-1)
            for n in range(max_n + 1):
                split = GradedDimension.zero(diamond.axes)
                for i in range(n + 1):
                    split = split + multigraded.sym_n(diamond, i, hodge) * multigraded.sym_n(
                        anticanonical, n - i, hodge
                    )
                self.check_equal(
                    "%s sym of a sum, n=%d" % (name, n),
                    multigraded.sym_n(diamond + anticanonical, n, hodge),
                    split,
                )


class PartitionsSuite(Suite):
    name = "partitions"

    def collect(self, max_n):
        for n in range(1, max(max_n, 1) + 1):
            expected = {}
            for conjugacy_class in SymmetricGroup(n).conjugacy_classes():
                g = next(iter(conjugacy_class))
                cycle_type = partitions.orbit_decomposition(g).cycle_type
                expected[cycle_type.parts] = len(conjugacy_class)
            computed = {c.parts: partitions.class_size(c) for c in partitions.partitions_of(n)}
            self.check(compare_coefficients("class sizes of S_%d" % n, (), expected, computed))
            self.check_scalar(
                "class sizes sum to %d!" % n,
                sum(expected.values()),
                sum(computed.values()),
            )
            if n <= ORBIT_ENUMERATION_MAX_N:
                buckets = Counter(
                    partitions.orbit_decomposition(images).cycle_type.parts
                    for images in permutations(range(1, n + 1))
                )
                self.check(
                    compare_coefficients("orbits of all of S_%d" % n, (), computed, dict(buckets))
                )


class OracleSuite(Suite):
    name = "oracle"

    def _random_basis(self, rng: random.Random) -> oracle.SignedBasis:
        size = rng.randint(1, min(8, config.ORACLE_MAX_GENERATORS))
        generators = tuple(
            ("g%d" % i, (rng.randint(0, 3), rng.randint(0, 3))) for i in range(size)
        )
        super_axes = SuperAxes(rng.choice([set(), {"p"}, {"q"}, {"p", "q"}]))
        return oracle.SignedBasis(("p", "q"), generators, super_axes)

    def _basis_dimension(self, basis) -> GradedDimension:
        dims = {}
        for i in range(len(basis)):
            dims[basis.degree(i)] = dims.get(basis.degree(i), 0) + 1
        return GradedDimension(basis.axes, dims)

    def collect(self, max_n):
        rng = random.Random(config.ORACLE_RANDOM_SEED)
        for case in range(config.ORACLE_RANDOM_CASES):
            basis = self._random_basis(rng)
            n = rng.randint(0, min(5, config.ORACLE_MAX_N))
            self.check_equal(
                "random case %d (n=%d, %d generators)" % (case, n, len(basis)),
                multigraded.sym_n(self._basis_dimension(basis), n, basis.super_axes),
                oracle.sym_bruteforce(basis, n),
            )

        mixed = self._random_basis(rng)
        self.check_equal(
            "S_3 trace average vs multiset count",
            oracle.sym_bruteforce(mixed, 3),
            oracle.invariants_by_trace([mixed] * 3, SymmetricGroup(3)),
        )
        for i in range(1, 7):
            for odd in (False, True):
                line = oracle.SignedBasis(("j",), (("v", (1 if odd else 0,)),), SuperAxes({"j"}))
                invariants = oracle.invariants_by_trace([line] * i, CyclicGroup(i))
                self.check_scalar(
                    "cyclic %d on a line of parity %d" % (i, odd),
                    0 if odd and i % 2 == 0 else 1,
                    invariants.total_dimension,
                )

        inertia_n = min(max_n, 4, config.ORACLE_MAX_INERTIA_N)
        for name in geometry.preset_names():
            variety = geometry.preset(name)
            families = [geometry.serre_family(variety, k, inertia_n) for k in SERRE_POWERS]
            families += [
                geometry.line_bundle_family(variety, label, inertia_n)
                for label in geometry.available_line_bundles(variety)
            ]
            for family in families:
                for n in range(1, inertia_n + 1):
                    self.check_equal(
                        "%s %s inertia n=%d" % (name, family.provenance, n),
                        engine.inertia_hodge_sym(family, n).dims,
                        oracle.inertia_sum_bruteforce(family, n),
                    )


class PathsSuite(Suite):
    name = "paths"

    def collect(self, max_n):
        for name in geometry.preset_names():
            variety = geometry.preset(name)
            for k in SERRE_POWERS:
                family = geometry.serre_family(variety, k, max_n)
                series = engine.hs_series(variety, k, max_n)
                for n in range(max_n + 1):
                    direct = engine.hs_sym(variety, k, n).dims
                    label = "%s k=%d n=%d" % (name, k, n)
                    self.check_equal(
                        label + " serre family", direct, engine.hh_with_coefficients_sym(family, n).dims
                    )
                    self.check_equal(label + " product series", direct, series.coefficient(n))
                    for summand in engine.inertia_hodge_sym(family, n).summands:
                        odd = ((k - 1) * variety.dim) % 2 == 1
                        if odd and not partitions.all_parts_odd(summand.cycle_type):
                            self.check_scalar(
                                label + " vanishing on %s" % summand.cycle_type,
                                0,
                                summand.dims.total_dimension,
                            )
            for label in geometry.available_line_bundles(variety):
                rhs = engine.corrected_conjecture_rhs(variety, label, max_n)
                family = geometry.line_bundle_family(variety, label, max_n)
                for n in range(max_n + 1):
                    orbifold = engine.orbifold_hodge_age(family, n).dims
                    self.check_equal(
                        "%s L=%s orbifold n=%d" % (name, label, n), rhs.coefficient(n), orbifold
                    )
                    self.check_equal(
                        "%s L=%s age cancels n=%d" % (name, label, n),
                        multigraded.collapse(
                            engine.inertia_hodge_sym(family, n).dims, multigraded.HKR_COLLAPSE
                        ),
                        multigraded.collapse(orbifold, {"j": {"x": -1, "y": 1}}),
                    )


class SpecializationsSuite(Suite):
    name = "specializations"

    def collect(self, max_n):
        for name in SURFACE_PRESETS:
            variety = geometry.preset(name)
            for label in geometry.available_line_bundles(variety):
                for report in engine.specialization_checks(variety, label, max_n):
                    report.name = "%s L=%s %s" % (name, label, report.name)
                    self.check(report)
                rhs = engine.corrected_conjecture_rhs(variety, label, max_n)
                self.check_equal(
                    "%s L=%s x=y" % (name, label),
                    engine.total_degree_rhs(variety, label, max_n).dims,
                    multigraded.collapse(rhs.dims, {"x": {"x": 1, "y": 1}, "t": {"t": 1}}),
                )
            anticanonical = engine.corrected_conjecture_rhs(variety, "omega^-1", max_n)
            for n in range(max_n + 1):
                self.check_equal(
                    "%s polyvector fields n=%d" % (name, n),
                    engine.polyvector_fields(variety, n),
                    anticanonical.coefficient(n).slice("y", 0).rename({"x": "r"}),
                )


class ChiYSuite(Suite):
    name = "chi-y"

    def collect(self, max_n):
        for name in SURFACE_PRESETS:
            variety = geometry.preset(name)
            for label in geometry.available_line_bundles(variety):
                report = engine.chi_y_identity(variety, label, max_n)
                report.name = "%s L=%s %s" % (name, label, report.name)
                self.check(report)


class DeformationSuite(Suite):
    name = "deformation"
    expected_h1_tangent = {"bielliptic2": 3, "bielliptic3": 2, "bielliptic4": 2, "bielliptic6": 2}

    def collect(self, max_n):
        for name in SURFACE_PRESETS:
            variety = geometry.preset(name)
            for n in range(2, max(max_n, 2) + 1):
                try:
                    summary = engine.deformation_summary(variety, n)
                except engine.ConsistencyError as ex:
                    self.check(
                        CheckReport(
                            "%s n=%d consistency" % (name, n), (),
                            [engine.Mismatch((), "consistent", str(ex))],
                        )
                    )
                    continue
                if name in self.expected_h1_tangent:
                    self.check_scalar(
                        "%s n=%d h^1(T)" % (name, n), self.expected_h1_tangent[name], summary.h1_tangent
                    )
        self.check_scalar(
            "p2 n=2 h^1(T)", 10, engine.deformation_summary(geometry.preset("p2"), 2).h1_tangent
        )
        for name in geometry.preset_names():
            variety = geometry.preset(name)
            for n in range(1, max_n + 1):
                closed = engine.closed_hh1_hh2(variety, n)
                hochschild = engine.hs_sym(variety, 0, n).dims
                self.check(
                    compare_coefficients(
                        "%s n=%d closed HH^1, HH^2" % (name, n),
                        ("j",),
                        {(1,): closed[1], (2,): closed[2]},
                        {(1,): hochschild[(1,)], (2,): hochschild[(2,)]},
                    )
                )


class BWBSuite(Suite):
    name = "bwb"
    schur_dimensions = {(1, 0, -1): 8, (1, 1, -2): 10, (2, 1, -3): 35, (2, -1, -1): 10}

    def collect(self, max_n):
        for weight, dim in self.schur_dimensions.items():
            self.check_scalar("schur %s" % (weight,), dim, bwb.schur_dim(bwb.GLWeight(weight), 3))

        table = bwb.hilb2_p2_hkr()
        self.check_equal(
            "Hilb^2 P^2 HKR columns",
            engine.hs_sym(geometry.preset("p2"), 0, 2).dims,
            _series(table.hochschild()),
        )
        self.check_scalar("chi of trivectors", 52, table.euler_characteristics[3])
        self.check_scalar(
            "anticanonical sections", bwb.hilb2_anticanonical_sections(), table.rows[4].get(0, 0)
        )

        for n in range(1, 4):
            diamond = geometry.projective_space_table(n, 0)
            expected = GradedDimension(("p", "q"), {(p, p): 1 for p in range(n + 1)})
            self.check_equal("bott diamond of P^%d" % n, expected, diamond)

        rng = random.Random(config.ORACLE_RANDOM_SEED)
        for case in range(50):
            n = rng.randint(2, 4)
            k = rng.randint(1, n)
            lambda_S = sorted((rng.randint(-4, 4) for _ in range(k)), reverse=True)
            lambda_Q = sorted((rng.randint(-4, 4) for _ in range(n + 1 - k)), reverse=True)
            w = bwb.BundleWeight.of(lambda_S, lambda_Q)
            dual = bwb.grassmannian_serre_dual(w, n)
            grassmannian_dim = k * (n + 1 - k)
            result, dual_result = bwb.bwb_cohomology(w, n), bwb.bwb_cohomology(dual, n)
            expected = {} if result is None else {(result.degree,): result.dimension}
            actual = (
                {} if dual_result is None
                else {(grassmannian_dim - dual_result.degree,): dual_result.dimension}
            )
            self.check(compare_coefficients("Serre duality case %d" % case, ("l",), expected, actual))


class QuiverSuite(Suite):
    name = "quiver"

    def collect(self, max_n):
        series = quiver.sym2_p1_series()
        self.check_equal(
            "Sym^2 P^1 tilting algebra",
            engine.hs_sym(geometry.preset("p1"), 0, 2).dims,
            _series(series),
        )
        self.check_scalar(
            "Euler characteristic",
            quiver.hh_euler_characteristic(quiver.SYM2_P1_CARTAN),
            series[0] - series[1] + series[2],
        )
        self.check_scalar("Coxeter trace", -1, int(quiver.coxeter(quiver.SYM2_P1_CARTAN).trace()))


class FockSuite(Suite):
    name = "fock"

    def collect(self, max_n):
        hh_p1 = geometry.hs_of_variety(geometry.preset("p1"), 1).dims
        hh_p2 = geometry.hs_of_variety(geometry.preset("p2"), 1).dims
        for report in engine.sod_fock_check(hh_p1, hh_p2, max_n):
            self.check(report)
        for name in geometry.preset_names():
            variety = geometry.preset(name)
            fock = engine.fock(geometry.hs_of_variety(variety, 1).dims, max_n)
            for n in range(max_n + 1):
                self.check_equal(
                    "%s k=1 Fock slice n=%d" % (name, n), fock.coefficient(n), engine.hs_sym(variety, 1, n).dims
                )
        k3 = geometry.VarietyData(
            "k3", 2, 1, {0: GradedDimension.from_matrix([[1, 0, 1], [0, 20, 0], [1, 0, 1]])}
        ).validate()
        self.check_scalar(
            "K3 h^{1,1}(Hilb^2)", 21, engine.gottsche_soergel(k3, 2).coefficient(2)[(1, 1)]
        )


class BiellipticSuite(Suite):
    name = "bielliptic"
    hochschild = {2: [1, 2, 2, 2, 1], 3: [1, 2, 1], 4: [1, 2, 1], 6: [1, 2, 1]}
    serre_slice = {2: {3: 2, 4: 4, 5: 2}, 3: {4: 1, 5: 2, 6: 1}, 4: {}, 6: {}}
    hilbert_square = {
        2: [1, 2, 3, 8, 12, 8, 3, 2, 1],
        3: [1, 2, 2, 2, 2, 2, 1],
        4: [1, 2, 2, 2, 1],
        6: [1, 2, 2, 2, 1],
    }

    def collect(self, max_n):
        for order in geometry.BIELLIPTIC_ORDERS:
            variety = geometry.preset("bielliptic%d" % order)
            self.check_equal(
                "ord %d HH^*(S)" % order,
                _series(self.hochschild[order]),
                geometry.hs_of_variety(variety, 0).dims,
            )
            self.check_equal(
                "ord %d HS_-1(S)" % order,
                _series(self.serre_slice[order]),
                geometry.hs_of_variety(variety, -1).dims,
            )
            self.check_equal(
                "ord %d HH^*(Hilb^2 S)" % order,
                _series(self.hilbert_square[order]),
                engine.hs_sym(variety, 0, 2).dims,
            )
            self.check_equal(
                "ord %d diamond" % order,
                GradedDimension.from_matrix([[1, 1, 0], [1, 2, 1], [0, 1, 1]]),
                variety.hodge_diamond,
            )


class SuiteManager(object):
    suite_registry = {
        suite.name: suite
        for suite in (
            MultigradedSuite,
            PartitionsSuite,
            OracleSuite,
            PathsSuite,
            SpecializationsSuite,
            ChiYSuite,
            DeformationSuite,
            BWBSuite,
            QuiverSuite,
            FockSuite,
            BiellipticSuite,
        )
    }
    ALL = "all"

    def __init__(self, suite):
        if suite == self.ALL:
            self.suites = [suite_class() for suite_class in self.suite_registry.values()]
            return
        suite_class = self.suite_registry.get(suite)
        if suite_class is None:
            raise ValueError("Unrecognized suite: %s" % suite)
        self.suites = [suite_class()]

    @classmethod
    def suite_names(cls):
        return list(cls.suite_registry) + [cls.ALL]

    def run(self, max_n: int) -> List[SuiteReport]:
        return [suite.run(max_n) for suite in self.suites]
