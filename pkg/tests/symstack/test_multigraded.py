import pytest

from symstack.multigraded import (
    HKR_COLLAPSE,
    AxisMismatchError,
    DivergentSeriesError,
    GradedDimension,
    SuperAxes,
    TruncationWindow,
    collapse,
    direct_sum,
    shift,
    sym_n,
    sym_total,
    tensor,
)

PQ = ("p", "q")
HODGE = SuperAxes({"p", "q"})


class TestGradedDimension:
    def test_zero_entries_are_dropped(self):
        # Arrange
        dims = {(0, 0): 1, (1, 0): 0}

        # Act
        v = GradedDimension(PQ, dims)

        # Assert
        assert v.support == [(0, 0)]
        assert v == GradedDimension.singleton(PQ, (0, 0))

    def test_negative_dimension_raises(self):
        with pytest.raises(ValueError):
            GradedDimension(PQ, {(0, 0): -1})

    def test_wrong_arity_raises(self):
        with pytest.raises(AxisMismatchError):
            GradedDimension(PQ, {(0,): 1})

    def test_missing_degree_is_zero(self, hodge_p2):
        # Act / Assert
        assert hodge_p2[(0, 1)] == 0
        assert hodge_p2[(2, 2)] == 1

    def test_from_matrix_uses_rows_for_first_axis(self):
        # Act
        v = GradedDimension.from_matrix([[10, 0], [8, 0]])

        # Assert
        assert v[(1, 0)] == 8
        assert v[(0, 1)] == 0

    def test_slice_removes_axis(self):
        # Arrange
        v = GradedDimension(("x", "y", "t"), {(1, 0, 1): 2, (0, 0, 2): 3})

        # Act
        sliced = v.slice("t", 2)

        # Assert
        assert sliced == GradedDimension(("x", "y"), {(0, 0): 3})

    def test_equal_dims_on_different_axes_are_not_equal(self):
        assert GradedDimension.unit(("p", "q")) != GradedDimension.unit(("x", "y"))


class TestShift:
    def test_shift_moves_support_by_minus_d(self):
        # Arrange
        v = GradedDimension.singleton(PQ, (0, 0))

        # Act
        shifted = shift(v, (-1, -1))

        # Assert
        assert shifted == GradedDimension.singleton(PQ, (1, 1))

    def test_zero_shift_is_identity(self, hodge_p2):
        assert shift(hodge_p2, (0, 0)) == hodge_p2

    def test_shifts_compose(self, hodge_p2):
        assert shift(shift(hodge_p2, (1, -2)), (3, 1)) == shift(hodge_p2, (4, -1))

    def test_wrong_arity_raises(self, hodge_p2):
        with pytest.raises(AxisMismatchError):
            shift(hodge_p2, (1,))


class TestDirectSumAndTensor:
    def test_sum_with_zero(self, hodge_p2):
        assert direct_sum(hodge_p2, GradedDimension.zero(PQ)) == hodge_p2

    def test_disjoint_singletons(self):
        # Act
        v = GradedDimension.singleton(PQ, (0, 1)) + GradedDimension.singleton(PQ, (1, 0))

        # Assert
        assert len(v) == 2

    def test_mismatched_axes_raise(self, hodge_p2):
        with pytest.raises(AxisMismatchError):
            direct_sum(hodge_p2, GradedDimension.unit(("j",)))

    def test_tensor_with_unit(self, hodge_p2):
        assert tensor(hodge_p2, GradedDimension.unit(PQ)) == hodge_p2

    def test_tensor_of_singletons(self):
        # Act
        v = GradedDimension.singleton(PQ, (1, 2), 3) * GradedDimension.singleton(PQ, (2, 0), 5)

        # Assert
        assert v == GradedDimension.singleton(PQ, (3, 2), 15)

    def test_tensor_multiplies_polynomials(self):
        # Arrange: (1 + 2t)(3 + t^2) = 3 + 6t + t^2 + 2t^3
        u = GradedDimension(("t",), {(0,): 1, (1,): 2})
        v = GradedDimension(("t",), {(0,): 3, (2,): 1})

        # Act
        product = u * v

        # Assert
        assert product == GradedDimension(("t",), {(0,): 3, (1,): 6, (2,): 1, (3,): 2})

    def test_tensor_respects_window(self):
        # Arrange
        u = GradedDimension(("t",), {(0,): 1, (1,): 1})

        # Act
        product = tensor(u, u, TruncationWindow.up_to("t", 1))

        # Assert
        assert product == GradedDimension(("t",), {(0,): 1, (1,): 2})


class TestSymN:
    def test_exterior_square_of_odd_space(self):
        # Arrange: sl_2 in odd degree 1
        v = GradedDimension.singleton(("j",), (1,), 3)

        # Act
        square = sym_n(v, 2, SuperAxes({"j"}))

        # Assert
        assert square == GradedDimension.singleton(("j",), (2,), 3)

    def test_sym_zero_is_unit(self, hodge_p2):
        assert sym_n(hodge_p2, 0, HODGE) == GradedDimension.unit(PQ)

    def test_sym_one_is_identity(self, hodge_p2):
        assert sym_n(hodge_p2, 1, HODGE) == hodge_p2

    @pytest.mark.parametrize(
        "dim,n,expected",
        [
            (2, 3, 4),
            (3, 2, 6),
            (1, 5, 1),
            (4, 1, 4),
        ],
    )
    def test_even_space_gives_multiset_count(self, dim, n, expected):
        # Arrange
        v = GradedDimension.singleton(PQ, (1, 1), dim)

        # Act
        result = sym_n(v, n, HODGE)

        # Assert
        assert result.total_dimension == expected
        assert result.support == [(n, n)]

    def test_odd_generator_squares_to_zero(self):
        # Arrange
        v = GradedDimension.singleton(PQ, (1, 0))

        # Act / Assert
        assert sym_n(v, 2, HODGE).is_zero()

    def test_no_super_axes_means_ordinary_symmetric_power(self):
        # Arrange
        v = GradedDimension.singleton(PQ, (1, 0), 2)

        # Act
        result = sym_n(v, 2)

        # Assert
        assert result == GradedDimension.singleton(PQ, (2, 0), 3)

    def test_unknown_super_axis_raises(self, hodge_p2):
        with pytest.raises(AxisMismatchError):
            sym_n(hodge_p2, 2, SuperAxes({"j"}))

    def test_negative_order_raises(self, hodge_p2):
        with pytest.raises(ValueError):
            sym_n(hodge_p2, -1, HODGE)

    def test_sym_of_sum_splits(self):
        # Arrange
        u = GradedDimension(PQ, {(0, 0): 1, (1, 0): 2})
        v = GradedDimension(PQ, {(0, 1): 1, (1, 1): 3})
        n = 3

        # Act
        split = GradedDimension.zero(PQ)
        for i in range(n + 1):
            split = split + sym_n(u, i, HODGE) * sym_n(v, n - i, HODGE)

        # Assert
        assert sym_n(u + v, n, HODGE) == split


class TestSymTotal:
    def test_even_line_gives_geometric_series(self):
        # Arrange
        v = GradedDimension.singleton(("t",), (1,))

        # Act
        total = sym_total(v, SuperAxes(), TruncationWindow.up_to("t", 5))

        # Assert
        assert total == GradedDimension(("t",), {(i,): 1 for i in range(6)})

    def test_odd_line_gives_one_plus_s(self):
        # Arrange
        v = GradedDimension(("j", "t"), {(3, 1): 1})

        # Act
        total = sym_total(v, SuperAxes({"j"}), TruncationWindow.up_to("t", 6))

        # Assert
        assert total == GradedDimension(("j", "t"), {(0, 0): 1, (3, 1): 1})

    def test_even_space_of_rank_r(self):
        # Arrange: (1 - s)^{-2} = 1 + 2s + 3s^2 + ...
        v = GradedDimension.singleton(("s",), (1,), 2)

        # Act
        total = sym_total(v, SuperAxes(), TruncationWindow.up_to("s", 3))

        # Assert
        assert total == GradedDimension(("s",), {(0,): 1, (1,): 2, (2,): 3, (3,): 4})

    def test_total_of_sum_is_product(self):
        # Arrange
        window = TruncationWindow.up_to("t", 4)
        k = SuperAxes({"j"})
        u = GradedDimension(("j", "t"), {(0, 1): 2, (1, 1): 1, (1, 2): 1})
        v = GradedDimension(("j", "t"), {(-1, 1): 1, (2, 2): 3})

        # Act
        left = sym_total(u + v, k, window)
        right = tensor(sym_total(u, k, window), sym_total(v, k, window), window)

        # Assert
        assert left == right

    def test_slices_agree_with_sym_n(self, hodge_p2):
        # Arrange
        window = TruncationWindow.up_to("t", 3)

        # Act
        total = sym_total(hodge_p2.with_axis("t", 1), HODGE, window)

        # Assert
        for n in range(4):
            assert total.slice("t", n) == sym_n(hodge_p2, n, HODGE)

    def test_unbounded_even_generator_diverges(self):
        # Arrange: an even generator of t-degree 0 never leaves the window
        v = GradedDimension(("j", "t"), {(0, 0): 1, (0, 1): 1})

        # Act / Assert
        with pytest.raises(DivergentSeriesError):
            sym_total(v, SuperAxes({"j"}), TruncationWindow.up_to("t", 3))

    def test_zero_space_gives_unit(self):
        # Act
        total = sym_total(GradedDimension.zero(("t",)), SuperAxes(), TruncationWindow.up_to("t", 2))

        # Assert
        assert total == GradedDimension.unit(("t",))


class TestCollapse:
    def test_p2_diamond_collapses_to_degree_zero(self, hodge_p2):
        assert collapse(hodge_p2, HKR_COLLAPSE) == GradedDimension.singleton(("j",), (0,), 3)

    def test_bielliptic_diamond(self, bielliptic2):
        # Act
        collapsed = collapse(bielliptic2.hodge_diamond, HKR_COLLAPSE)

        # Assert
        assert collapsed == GradedDimension(("j",), {(-1,): 2, (0,): 4, (1,): 2})

    def test_collapse_preserves_total_dimension(self, p3):
        # Arrange
        table = p3.omega_table(-1)

        # Act / Assert
        assert collapse(table, HKR_COLLAPSE).total_dimension == table.total_dimension

    def test_collapse_commutes_with_tensor(self):
        # Arrange
        u = GradedDimension(PQ, {(0, 1): 2, (2, 0): 1})
        v = GradedDimension(PQ, {(1, 1): 1, (0, 2): 4})

        # Act / Assert
        assert collapse(u * v, HKR_COLLAPSE) == collapse(u, HKR_COLLAPSE) * collapse(
            v, HKR_COLLAPSE
        )

    def test_unknown_source_axis_raises(self, hodge_p2):
        with pytest.raises(AxisMismatchError):
            collapse(hodge_p2, {"j": {"x": 1}})


class TestTruncationWindow:
    def test_empty_window_raises(self):
        with pytest.raises(ValueError):
            TruncationWindow({"t": (3, 1)})

    def test_contains_respects_open_sides(self):
        # Arrange
        window = TruncationWindow({"t": (None, 2)})

        # Act / Assert
        assert window.contains(("j", "t"), (-5, -3))
        assert not window.contains(("j", "t"), (0, 3))
