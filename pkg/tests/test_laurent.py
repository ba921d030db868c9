"""
Tests for Laurent polynomials over Z^r and weight functions.
"""
import pytest
import sys
from pathlib import Path

from hypothesis import given, strategies as st

# Add parent directory to path for imports
sys.path.insert(0, str(Path(__file__).parent.parent))

from heckeideal.errors import InvalidWeights, PhiUndefined
from heckeideal.laurent import (
    Scalar,
    WeightFunction,
    format_scalar,
    in_nonnegative,
    in_qs_ideal,
    parse_scalar,
    phi_scalar,
)

A2 = [[1, 3], [3, 1]]
I2_4 = [[1, 4], [4, 1]]

q = Scalar.q(1)

# doubled exponent -> nonzero coefficient
rank_one_scalars = st.dictionaries(
    st.integers(min_value=-8, max_value=8),
    st.integers(min_value=-5, max_value=5).filter(bool),
    max_size=5,
).map(lambda terms: Scalar({(e,): c for e, c in terms.items()}, 1))

rank_two_scalars = st.dictionaries(
    st.tuples(st.integers(min_value=-4, max_value=4), st.integers(min_value=-4, max_value=4)),
    st.integers(min_value=-3, max_value=3).filter(bool),
    max_size=4,
).map(lambda terms: Scalar(terms, 2))


class TestScalarArithmetic:
    """Ring operations on Z[Gamma]"""

    def test_square_of_q_minus_one(self):
        """(q - 1)^2 expands to q^2 - 2q + 1"""
        assert (q - 1) * (q - 1) == q ** 2 - 2 * q + 1
        assert format_scalar((q - 1) ** 2) == "q^2-2*q+1"

    def test_zero_terms_are_dropped(self):
        """Cancelling terms leave the zero scalar"""
        assert not (q - q)
        assert q - q == 0

    def test_inverse_of_monomial(self):
        """q^-1 * q = 1"""
        assert q.inverse() * q == 1
        assert (-q).inverse() == -(q ** -1)

    def test_inverse_of_non_unit_raises(self):
        """Only +-q^gamma are units"""
        with pytest.raises(ZeroDivisionError):
            (q - 1).inverse()
        with pytest.raises(ZeroDivisionError):
            (2 * q).inverse()

    def test_exact_division(self):
        """(q^2 - 1) / (q - 1) = q + 1"""
        assert (q ** 2 - 1).exact_div(q - 1) == q + 1

    def test_inexact_division_raises(self):
        """q - 1 does not divide q^2 + 1"""
        with pytest.raises(ValueError):
            (q ** 2 + 1).exact_div(q - 1)
        with pytest.raises(ZeroDivisionError):
            q.exact_div(0)

    @given(rank_one_scalars, rank_one_scalars)
    def test_product_divides_back(self, a, b):
        """(a * b) / b = a whenever b is nonzero"""
        if b:
            assert (a * b).exact_div(b) == a


class TestInvolutions:
    """bar and the sign twist on scalars"""

    def test_bar_inverts_exponents(self):
        """bar(q - 1) = q^-1 - 1"""
        assert (q - 1).bar() == q.inverse() - 1

    def test_phi_flips_half_integer_powers(self):
        """q^(1/2) -> -q^(1/2) while q is fixed"""
        half = Scalar.monomial((1,))
        assert half.phi() == -half
        assert q.phi() == q

    @given(rank_one_scalars)
    def test_bar_and_phi_are_commuting_involutions(self, a):
        """bar^2 = phi^2 = Id and bar o phi = phi o bar"""
        assert a.bar().bar() == a
        assert a.phi().phi() == a
        assert a.bar().phi() == a.phi().bar()

    def test_phi_scalar_needs_odd_weights(self):
        """The sign twist is undefined when some L(s) has even unit sum"""
        with pytest.raises(PhiUndefined):
            phi_scalar(q, WeightFunction.from_units([2, 2]))


class TestFormatting:
    """Printed form and its parser"""

    def test_known_forms(self):
        """Highest exponent first, half powers in parentheses"""
        assert format_scalar(Scalar.zero()) == "0"
        assert format_scalar(q - 1) == "q-1"
        assert format_scalar(Scalar.monomial((1,))) == "q^(1/2)"
        assert format_scalar(Scalar.monomial((-2,))) == "q^-1"
        assert format_scalar(Scalar.monomial((2, -2))) == "q1*q2^-1"

    def test_parse_known_forms(self):
        """parse_scalar reads what format_scalar prints"""
        assert parse_scalar("q^2-2*q+1") == (q - 1) ** 2
        assert parse_scalar("q^(1/2)") == Scalar.monomial((1,))
        assert parse_scalar("q^(-3/2)") == Scalar.monomial((-3,))
        assert parse_scalar("q1*q2^-1", rank=2) == Scalar.monomial((2, -2))
        assert parse_scalar(" 0 ") == Scalar.zero()

    def test_parse_rejects_garbage(self):
        """Malformed terms and out-of-range parameters raise ValueError"""
        with pytest.raises(ValueError):
            parse_scalar("q^x")
        with pytest.raises(ValueError):
            parse_scalar("q3", rank=2)

    @given(rank_one_scalars)
    def test_parse_inverts_format_rank_one(self, a):
        """parse(format(a)) = a for one parameter"""
        assert parse_scalar(format_scalar(a)) == a

    @given(rank_two_scalars)
    def test_parse_inverts_format_rank_two(self, a):
        """parse(format(a)) = a for two parameters"""
        assert parse_scalar(format_scalar(a), rank=2) == a


class TestWeightFunction:
    """Validation, phi-compatibility and generic parameters"""

    def test_equal_parameters(self):
        """L(s) = 1 everywhere gives q_s = q"""
        weights = WeightFunction.equal(2)
        assert weights.q(0) == q
        assert weights.q_word((0, 1)) == q ** 2
        assert weights.phi_compatible()

    def test_odd_bond_forces_equal_weights(self):
        """m = 3 joins s1 and s2, so L(s1) = L(s2)"""
        with pytest.raises(InvalidWeights):
            WeightFunction.from_units([1, 2]).validate(A2)

    def test_negative_weight_rejected(self):
        """L(s) >= 0"""
        with pytest.raises(InvalidWeights):
            WeightFunction.from_units([-1, -1]).validate(A2)

    def test_even_bond_allows_unequal_weights(self):
        """m = 4 allows L(s1) = 1, L(s2) = 3"""
        weights = WeightFunction.from_units([1, 3])
        weights.validate(I2_4)
        assert weights.q(1) == q ** 3
        assert weights.phi_compatible()

    def test_even_weight_is_not_phi_compatible(self):
        """phi needs odd unit sums"""
        assert not WeightFunction.from_units([1, 2]).phi_compatible()

    def test_generic_weights_for_dihedral_four(self):
        """Two odd classes give Gamma = Z^2 with unit vectors"""
        weights = WeightFunction.generic(I2_4)
        assert weights.rank == 2
        assert weights.units(0) == (1, 0)
        assert weights.units(1) == (0, 1)

    def test_generic_weights_collapse_odd_classes(self):
        """A2 has one class, so Gamma = Z"""
        assert WeightFunction.generic(A2).rank == 1

    def test_membership_predicates(self):
        """q_s Z[Gamma>=0] and Z[Gamma>=0] membership"""
        weights = WeightFunction.equal(2)
        assert in_qs_ideal(q ** 2, 0, weights)
        assert not in_qs_ideal(Scalar.one(), 0, weights)
        assert in_qs_ideal(Scalar.zero(), 0, weights)
        assert in_nonnegative(Scalar.one())
        assert not in_nonnegative(q.inverse())
