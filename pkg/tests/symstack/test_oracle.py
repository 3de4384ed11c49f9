import pytest
from constance.test import override_config
from sympy.combinatorics import SymmetricGroup
from sympy.combinatorics.named_groups import CyclicGroup

from symstack import engine, geometry, oracle
from symstack.multigraded import GradedDimension, SuperAxes, sym_n
from symstack.oracle import NonIntegralAverageError, OracleGuardError, SignedBasis

PQ = ("p", "q")
HODGE = SuperAxes({"p", "q"})


@pytest.fixture
def mixed_space():
    return GradedDimension(PQ, {(0, 0): 1, (1, 0): 2, (1, 1): 1})


class TestSignedBasis:
    def test_from_dimension(self, mixed_space):
        # Act
        basis = SignedBasis.from_dimension(mixed_space, HODGE)

        # Assert
        assert len(basis) == 4
        assert [basis.is_odd(i) for i in range(len(basis))] == [False, True, True, False]
        assert basis.classes() == [((0, 0), False, 1), ((1, 0), True, 2), ((1, 1), False, 1)]

    def test_repeated_labels_raise(self):
        with pytest.raises(ValueError):
            SignedBasis(("j",), (("a", (0,)), ("a", (1,))))

    def test_wrong_arity_raises(self):
        with pytest.raises(ValueError):
            SignedBasis(PQ, (("a", (0,)),))


class TestSymBruteforce:
    @pytest.mark.parametrize("n", [0, 1, 2, 3, 4])
    def test_agrees_with_sym_n(self, mixed_space, n):
        # Arrange
        basis = SignedBasis.from_dimension(mixed_space, HODGE)

        # Act / Assert
        assert oracle.sym_bruteforce(basis, n) == sym_n(mixed_space, n, HODGE)

    def test_exterior_powers_stop(self):
        # Arrange
        basis = SignedBasis.from_dimension(GradedDimension.singleton(("j",), (1,), 3), SuperAxes({"j"}))

        # Act / Assert
        assert oracle.sym_bruteforce(basis, 3) == GradedDimension.singleton(("j",), (3,))
        assert oracle.sym_bruteforce(basis, 4).is_zero()

    def test_n_guard(self, mixed_space):
        # Arrange
        basis = SignedBasis.from_dimension(mixed_space, HODGE)

        # Act / Assert
        with override_config(ORACLE_MAX_N=2):
            with pytest.raises(OracleGuardError):
                oracle.sym_bruteforce(basis, 3)

    def test_generator_guard(self, mixed_space):
        # Arrange
        basis = SignedBasis.from_dimension(mixed_space, HODGE)

        # Act / Assert
        with override_config(ORACLE_MAX_GENERATORS=3):
            with pytest.raises(OracleGuardError):
                oracle.sym_bruteforce(basis, 1)


class TestInvariantsByTrace:
    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_symmetric_group_gives_sym_n(self, mixed_space, n):
        # Arrange
        basis = SignedBasis.from_dimension(mixed_space, HODGE)

        # Act
        invariants = oracle.invariants_by_trace([basis] * n, SymmetricGroup(n))

        # Assert
        assert invariants == sym_n(mixed_space, n, HODGE)

    @pytest.mark.parametrize(
        "order,odd,expected",
        [
            (2, False, 1),
            (2, True, 0),
            (3, True, 1),
            (4, True, 0),
            (5, True, 1),
        ],
    )
    def test_cyclic_group_on_a_line(self, order, odd, expected):
        # Arrange
        line = SignedBasis(("j",), (("v", (1 if odd else 0,)),), SuperAxes({"j"}))

        # Act
        invariants = oracle.invariants_by_trace([line] * order, CyclicGroup(order))

        # Assert
        assert invariants.total_dimension == expected

    def test_young_subgroup_order(self):
        assert oracle.young_subgroup([2, 1]).order() == 2
        assert oracle.young_subgroup([3, 2]).order() == 12
        assert oracle.young_subgroup([1, 1, 1]).order() == 1

    def test_group_size_guard(self, mixed_space):
        # Arrange
        basis = SignedBasis.from_dimension(mixed_space, HODGE)

        # Act / Assert
        with override_config(ORACLE_MAX_GROUP_ORDER=2):
            with pytest.raises(OracleGuardError):
                oracle.invariants_by_trace([basis] * 3, SymmetricGroup(3))

    def test_basis_guard(self, mixed_space):
        # Arrange
        basis = SignedBasis.from_dimension(mixed_space, HODGE)

        # Act / Assert
        with override_config(ORACLE_MAX_BASIS=2):
            with pytest.raises(OracleGuardError):
                oracle.invariants_by_trace([basis] * 2, SymmetricGroup(2))

    def test_wrong_degree_raises(self, mixed_space):
        # Arrange
        basis = SignedBasis.from_dimension(mixed_space, HODGE)

        # Act / Assert
        with pytest.raises(ValueError):
            oracle.invariants_by_trace([basis] * 2, SymmetricGroup(3))

    def test_non_integral_average_raises(self, mocker):
        # Arrange
        line = SignedBasis(("j",), (("v", (0,)),))
        mocker.patch("symstack.oracle._signed_trace", side_effect=[{(0,): 1}, {(0,): 0}])

        # Act / Assert
        with pytest.raises(NonIntegralAverageError):
            oracle.invariants_by_trace([line] * 2, SymmetricGroup(2))

    def test_negative_average_raises(self, mocker):
        # Arrange
        line = SignedBasis(("j",), (("v", (0,)),))
        mocker.patch("symstack.oracle._koszul_sign", return_value=-1)

        # Act / Assert
        with pytest.raises(NonIntegralAverageError):
            oracle.invariants_by_trace([line] * 2, SymmetricGroup(2))


class TestInertiaBruteforce:
    @pytest.mark.parametrize("n", [0, 1, 2, 3])
    def test_serre_family_on_p2(self, p2, n):
        # Arrange
        family = geometry.serre_family(p2, 0, max(n, 1))

        # Act / Assert
        assert oracle.inertia_sum_bruteforce(family, n) == engine.inertia_hodge_sym(family, n).dims

    @pytest.mark.parametrize("k", [-1, 0, 2])
    def test_serre_family_on_p1(self, p1, k):
        # Arrange: for k = 0 and k = 2 the classes with an even cycle drop out
        family = geometry.serre_family(p1, k, 3)

        # Act / Assert
        assert oracle.inertia_sum_bruteforce(family, 3) == engine.inertia_hodge_sym(family, 3).dims

    def test_line_bundle_family_on_bielliptic(self, bielliptic2):
        # Arrange
        family = geometry.line_bundle_family(bielliptic2, "omega", 3)

        # Act / Assert
        assert oracle.inertia_sum_bruteforce(family, 3) == engine.inertia_hodge_sym(family, 3).dims

    def test_n_guard(self, p2):
        # Arrange
        family = geometry.serre_family(p2, 1, 3)

        # Act / Assert
        with override_config(ORACLE_MAX_INERTIA_N=2):
            with pytest.raises(OracleGuardError):
                oracle.inertia_sum_bruteforce(family, 3)
