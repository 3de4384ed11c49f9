import pytest

from symstack import engine, geometry
from symstack.engine import (
    ConsistencyError,
    TrivariateSeries,
    TruncatedSeries,
)
from symstack.multigraded import GradedDimension, shift
from symstack.partitions import CycleType


def j_series(values, start=0):
    return GradedDimension(("j",), {(start + i,): v for i, v in enumerate(values)})


class TestSeries:
    def test_truncated_series_needs_trailing_t(self):
        with pytest.raises(ValueError):
            TruncatedSeries(GradedDimension.unit(("j",)), 2)

    def test_coefficient_beyond_truncation_raises(self):
        # Arrange
        series = TruncatedSeries(GradedDimension.unit(("j", "t")), 2)

        # Act / Assert
        with pytest.raises(ValueError):
            series.coefficient(3)

    def test_trivariate_axes(self):
        with pytest.raises(ValueError):
            TrivariateSeries(GradedDimension.unit(("j", "t")), 2)

    def test_negative_truncation_raises(self, p2):
        with pytest.raises(ValueError):
            engine.hs_series(p2, 0, -1)


class TestCompare:
    def test_first_mismatch(self):
        # Arrange
        expected = j_series([1, 2, 3])
        actual = j_series([1, 5, 3, 1])

        # Act
        report = engine.compare_dimensions("check", expected, actual)

        # Assert
        assert not report.passed
        assert report.first_mismatch == engine.Mismatch((1,), 2, 5)
        assert len(report.mismatches) == 2

    def test_mismatched_axes_raise(self, hodge_p2):
        with pytest.raises(ValueError):
            engine.compare_dimensions("check", hodge_p2, j_series([1]))

    def test_coefficients_treat_missing_as_zero(self):
        # Act
        report = engine.compare_coefficients("check", ("x",), {(0,): 1, (1,): 0}, {(0,): 1})

        # Assert
        assert report.passed
        assert report.first_mismatch is None


class TestHochschildSerre:
    def test_hh_of_sym2_p2(self, p2):
        # Act
        result = engine.hs_sym(p2, 0, 2)

        # Assert
        assert result.dims == j_series([1, 8, 48, 115, 83])
        assert result.summand(CycleType.from_parts([2])) == GradedDimension(
            ("j",), {(2,): 10, (3,): 35, (4,): 28}
        )

    def test_odd_shift_keeps_odd_partitions(self, p1):
        # Act
        result = engine.hs_sym(p1, 0, 2)

        # Assert
        assert result.dims == j_series([1, 3, 3])
        assert [s.cycle_type for s in result.summands] == [CycleType.from_parts([1, 1])]

    def test_sym_one_is_the_variety(self, bielliptic):
        assert engine.hs_sym(bielliptic, 0, 1).dims == geometry.hs_of_variety(bielliptic, 0).dims

    def test_sym_zero_is_a_point(self, p2):
        assert engine.hs_sym(p2, 3, 0).dims == GradedDimension.unit(("j",))

    @pytest.mark.parametrize(
        "order,expected",
        [
            (2, [1, 2, 2, 2, 1]),
            (3, [1, 2, 1]),
            (4, [1, 2, 1]),
            (6, [1, 2, 1]),
        ],
    )
    def test_hh_of_bielliptic(self, order, expected):
        # Arrange
        variety = geometry.preset("bielliptic%d" % order)

        # Act / Assert
        assert engine.hs_sym(variety, 0, 1).dims == j_series(expected)

    @pytest.mark.parametrize(
        "order,expected",
        [
            (2, [1, 2, 3, 8, 12, 8, 3, 2, 1]),
            (3, [1, 2, 2, 2, 2, 2, 1]),
            (4, [1, 2, 2, 2, 1]),
            (6, [1, 2, 2, 2, 1]),
        ],
    )
    def test_hh_of_hilb2_bielliptic(self, order, expected):
        # Arrange
        variety = geometry.preset("bielliptic%d" % order)

        # Act / Assert
        assert engine.hs_sym(variety, 0, 2).dims == j_series(expected)

    @pytest.mark.parametrize("name", ["p1", "p2", "bielliptic2", "bielliptic3"])
    @pytest.mark.parametrize("k", [-1, 0, 1, 2])
    def test_series_coefficients_match_partition_sums(self, name, k):
        # Arrange
        variety = geometry.preset(name)
        max_n = 3

        # Act
        series = engine.hs_series(variety, k, max_n)

        # Assert
        for n in range(max_n + 1):
            assert series.coefficient(n) == engine.hs_sym(variety, k, n).dims

    def test_series_beyond_the_stored_window(self, p2):
        # Arrange: ω^{-16} is needed at t^4, outside the stored |m| <= 12
        max_n = 6

        # Act
        series = engine.hs_series(p2, -3, max_n)

        # Assert
        for n in range(4):
            assert series.coefficient(n) == engine.hs_sym(p2, -3, n).dims
        assert series.coefficient(6).total_dimension > 0

    def test_large_k_on_p1(self, p1):
        # Act
        dims = engine.hs_sym(p1, 5, 4).dims

        # Assert
        assert min(j for (j,) in dims.support) >= -20
        assert max(j for (j,) in dims.support) <= 8 - 20

    @pytest.mark.parametrize("name", geometry.preset_names())
    @pytest.mark.parametrize("k", [-1, 0, 1, 2])
    def test_support_window(self, name, k):
        # Arrange
        variety = geometry.preset(name)
        d = variety.dim

        for n in range(1, 4):
            # Act
            dims = engine.hs_sym(variety, k, n).dims

            # Assert
            lower, upper = -k * n * d, 2 * n * d - k * n * d
            assert all(lower <= j <= upper for (j,) in dims.support), (n, dims)

    def test_hh_series_with_line_bundle(self, p2):
        # Arrange
        family = geometry.line_bundle_family(p2, "O3", 3)

        # Act
        series = engine.hh_series_product(p2, family, 3)

        # Assert
        for n in range(4):
            assert series.coefficient(n) == engine.hh_with_coefficients_sym(family, n).dims

    def test_family_on_other_variety_raises(self, p1, p2):
        with pytest.raises(ValueError):
            engine.hh_series_product(p2, geometry.serre_family(p1, 0, 2), 2)


class TestClosedHH1HH2:
    def test_p2(self, p2):
        assert engine.closed_hh1_hh2(p2, 2) == {1: 8, 2: 48}

    def test_n_one_is_the_variety(self, p2):
        assert engine.closed_hh1_hh2(p2, 1) == {1: 8, 2: 10}

    @pytest.mark.parametrize("name", ["p1", "p2", "bielliptic2", "bielliptic3", "bielliptic4"])
    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    def test_agrees_with_engine(self, name, n):
        # Arrange
        variety = geometry.preset(name)

        # Act
        closed = engine.closed_hh1_hh2(variety, n)
        dims = engine.hs_sym(variety, 0, n).dims

        # Assert
        assert closed == {1: dims[(1,)], 2: dims[(2,)]}

    def test_disconnected_raises(self):
        # Arrange
        variety = geometry.VarietyData(
            "two-points", 1, 0, {0: GradedDimension(geometry.HODGE_AXES, {(0, 0): 2, (1, 1): 2})}
        )

        # Act / Assert
        with pytest.raises(ValueError):
            engine.closed_hh1_hh2(variety, 2)

    def test_n_zero_raises(self, p2):
        with pytest.raises(ValueError):
            engine.closed_hh1_hh2(p2, 0)


class TestOrbifoldHodge:
    def test_k3_hilb2(self, k3):
        # Arrange
        family = geometry.line_bundle_family(k3, "O", 2)

        # Act
        result = engine.orbifold_hodge_age(family, 2)

        # Assert
        assert result.dims[(1, 1)] == 21
        assert result.dims[(2, 2)] == 232
        assert result.summand(CycleType.from_parts([2])) == shift(
            k3.hodge_diamond, (-1, -1)
        ).rename({"p": "x", "q": "y"})

    @pytest.mark.parametrize(
        "name,label",
        [("p2", "O3"), ("p2", "omega^-1"), ("bielliptic2", "O"), ("bielliptic3", "omega")],
    )
    def test_corrected_product_matches_partition_sums(self, name, label):
        # Arrange
        variety = geometry.preset(name)
        max_n = 3

        # Act
        series = engine.corrected_conjecture_rhs(variety, label, max_n)

        # Assert
        for n in range(max_n + 1):
            family = geometry.line_bundle_family(variety, label, max(n, 1))
            assert series.coefficient(n) == engine.orbifold_hodge_age(family, n).dims

    def test_gottsche_soergel_is_the_structure_sheaf_case(self, k3):
        assert engine.gottsche_soergel(k3, 2) == engine.corrected_conjecture_rhs(k3, "O", 2)

    def test_k3_betti_numbers(self, k3):
        # Act
        series = engine.total_degree_rhs(k3, "O", 2)

        # Assert
        assert series.coefficient(2) == GradedDimension(
            ("x",), {(0,): 1, (2,): 23, (4,): 276, (6,): 23, (8,): 1}
        )


class TestCounterexample:
    def test_p2_cubics(self, p2):
        # Act
        mismatches = engine.counterexample_diff(p2, "O3", 2)

        # Assert
        assert [(m.degree, m.expected, m.actual) for m in mismatches] == [
            ((1, 1, 2), 28, 10),
            ((2, 1, 2), 35, 8),
            ((3, 1, 2), 10, 1),
        ]

    def test_trivial_bundle_has_no_difference(self, k3):
        assert engine.counterexample_diff(k3, "O", 3) == []

    def test_products_agree_through_t1(self, p2):
        assert engine.counterexample_diff(p2, "O3", 1) == []


class TestSpecializations:
    @pytest.mark.parametrize(
        "name,label",
        [("p2", "O3"), ("p2", "O"), ("bielliptic2", "omega"), ("bielliptic4", "O")],
    )
    def test_specializations_hold(self, name, label):
        # Act
        reports = engine.specialization_checks(geometry.preset(name), label, 3)

        # Assert
        assert [r.name for r in reports] == ["x=1/y", "x=0", "y=0"]
        assert all(r.passed for r in reports), [r.first_mismatch for r in reports]

    def test_chi_y_of_p2(self, p2):
        assert engine.chi_y(p2.hodge_diamond, 2) == 1 + 2 + 4

    @pytest.mark.parametrize("name,label", [("p2", "O3"), ("bielliptic3", "O")])
    def test_chi_y_identity(self, name, label):
        assert engine.chi_y_identity(geometry.preset(name), label, 3).passed

    def test_chi_y_identity_on_k3(self, k3):
        assert engine.chi_y_identity(k3, "O", 3).passed


class TestDeformation:
    def test_polyvector_fields_of_p2(self, p2):
        assert engine.polyvector_fields(p2, 2) == GradedDimension(
            ("r",), {(0,): 55, (1,): 80, (2,): 38, (3,): 8, (4,): 1}
        )

    def test_p2_summary(self, p2):
        # Act
        summary = engine.deformation_summary(p2, 2)

        # Assert
        assert summary.h0_tangent == 8
        assert summary.h1_tangent == 10
        assert summary.h0_bivectors == 38
        assert summary.h0_trivectors == 80
        assert (summary.hh1, summary.hh2) == (8, 48)

    @pytest.mark.parametrize("order,h1_tangent", [(2, 3), (3, 2), (4, 2), (6, 2)])
    def test_bielliptic_hilb2_tangent(self, order, h1_tangent):
        # Act
        summary = engine.deformation_summary(geometry.preset("bielliptic%d" % order), 2)

        # Assert
        assert summary.h1_tangent == h1_tangent
        assert summary.hh1 == 2

    def test_polyvectors_agree_with_summary(self, bielliptic):
        # Act
        summary = engine.deformation_summary(bielliptic, 2)
        polyvectors = engine.polyvector_fields(bielliptic, 2)

        # Assert
        assert polyvectors[(2,)] == summary.h0_bivectors
        assert polyvectors[(1,)] == summary.h0_trivectors

    def test_curve_raises(self, p1):
        with pytest.raises(ValueError):
            engine.deformation_summary(p1, 2)

    def test_n_one_raises(self, p2):
        with pytest.raises(ValueError):
            engine.deformation_summary(p2, 1)

    def test_disagreement_raises(self, p2, mocker):
        # Arrange
        mocker.patch(
            "symstack.engine.hs_sym",
            return_value=engine.SymQuotResult(2, j_series([1, 8, 47])),
        )

        # Act / Assert
        with pytest.raises(ConsistencyError):
            engine.deformation_summary(p2, 2)


class TestFock:
    def test_fock_of_a_line(self):
        # Act: the partition function
        series = engine.fock(j_series([1]), 5)

        # Assert
        assert [series.coefficient(n).total_dimension for n in range(6)] == [1, 1, 2, 3, 5, 7]

    def test_sod_checks_pass(self):
        # Arrange
        a = GradedDimension(("j",), {(0,): 2, (1,): 1})
        b = GradedDimension(("j",), {(-1,): 1, (2,): 3})

        # Act
        reports = engine.sod_fock_check(a, b, 4)

        # Assert
        assert len(reports) == 6
        assert all(r.passed for r in reports)
