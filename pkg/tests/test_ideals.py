"""
Tests for ideals of the left weak order, Pos(E), the SD/SA/WD/WA split,
the maximal-suffix table and the D_K x F_J factorization.
"""
import pytest
import sys
from pathlib import Path

# Add parent directory to path for imports
sys.path.insert(0, str(Path(__file__).parent.parent))

from heckeideal.coxeter import build_system
from heckeideal.errors import BadParams, BadReference, FactorizationHypothesisViolated
from heckeideal.factorization import check_factorization_property, f_j, factorize_full, factorize_via_k
from heckeideal.ideals import (
    IdealCase,
    classify_ideal,
    ideal_closure,
    is_suffix_closed,
    pos,
    principal_ideals,
    split_dk,
    weak_ascents,
)
from heckeideal.systems import named_matrix


def system(name: str):
    return build_system(named_matrix(name), name=name)


def names(W, elements):
    return [W.format(w) for w in elements]


class TestIdealClosure:
    """Suffix closure and Pos(E)"""

    def test_closure_of_s2s1(self):
        """<s2s1> = {e, s1, s2s1}"""
        W = system("A2")
        E = ideal_closure(W, [W.parse("s2s1")])
        assert names(W, E.sorted()) == ["e", "s1", "s2s1"]
        assert W.format(E.maximal()) == "s2s1"
        assert is_suffix_closed(W, E.members)

    def test_not_suffix_closed(self):
        """{e, s2s1} misses s1"""
        W = system("A2")
        assert not is_suffix_closed(W, [W.identity, W.parse("s2s1")])

    def test_pos(self):
        """Pos(<s1>) = {s2} in A2"""
        W = system("A2")
        assert pos(W, ideal_closure(W, [W.parse("s1")])) == frozenset({1})
        assert pos(W, ideal_closure(W, [W.identity])) == frozenset({0, 1})

    def test_principal_ideals_are_distinct_in_a2(self):
        """One ideal per element"""
        W = system("A2")
        ideals = principal_ideals(W)
        assert len(ideals) == 6
        assert len({E.members for E in ideals}) == 6

    @pytest.mark.parametrize("name", ["A2", "B3", "A1xA1"])
    def test_pos_identity_on_principal_ideals(self, name):
        """Pos(E) = S minus E never raises on these systems"""
        W = system(name)
        for E in principal_ideals(W):
            K = pos(W, E)
            assert K == frozenset(s for s in W.generators if W.gen(s) not in E)


class TestIdealCases:
    """The four cases for E = {e, s1}, J = {s2} in A2"""

    def setup_method(self):
        self.W = system("A2")
        self.E = ideal_closure(self.W, [self.W.parse("s1")])
        self.J = frozenset({1})

    def test_cases(self):
        """SA, WD, SD and WA all occur"""
        W, E, J = self.W, self.E, self.J
        s1 = W.parse("s1")
        assert classify_ideal(W, 0, W.identity, E, J) == IdealCase.SA
        assert classify_ideal(W, 1, W.identity, E, J) == IdealCase.WD
        assert classify_ideal(W, 0, s1, E, J) == IdealCase.SD
        assert classify_ideal(W, 1, s1, E, J) == IdealCase.WA

    def test_weak_ascents(self):
        """s2 is the only weak ascent, at y = s1"""
        W, E, J = self.W, self.E, self.J
        assert weak_ascents(W, W.parse("s1"), E, J) == frozenset({1})
        assert weak_ascents(W, W.identity, E, J) == frozenset()

    def test_reference_subset_outside_pos(self):
        """J = {s1} is not in Pos(E)"""
        with pytest.raises(BadReference):
            classify_ideal(self.W, 0, self.W.identity, self.E, {0})

    def test_y_outside_e(self):
        """y must lie in E"""
        with pytest.raises(ValueError):
            classify_ideal(self.W, 0, self.W.parse("s2"), self.E, self.J)


class TestSuffixSplit:
    """alpha = x * y_max on D_K"""

    def test_split(self):
        """D_K = {e, s1, s2s1}; s2s1 = s2 * s1"""
        W = system("A2")
        E = ideal_closure(W, [W.parse("s1")])
        split = split_dk(W, E, {1})
        assert split.K == frozenset({1})
        assert names(W, split.d_k) == ["e", "s1", "s2s1"]
        assert names(W, split.d1) == ["e", "s1", "s2s1"]
        assert split.d2 == []
        s2s1 = W.parse("s2s1")
        assert W.format(split.x_part(s2s1)) == "s2"
        assert W.format(split.y_max(s2s1)) == "s1"
        assert names(W, split.e_bar) == ["e", "s2"]

    def test_d2_for_identity_ideal(self):
        """E = {e}: every alpha has e as a suffix, so D_K^2 is empty"""
        W = system("A1xA1")
        split = split_dk(W, ideal_closure(W, [W.identity]), {0})
        assert names(W, split.d_k) == ["e"]
        assert split.d2 == []

    def test_bad_reference(self):
        """J must lie in Pos(E)"""
        W = system("A2")
        with pytest.raises(BadReference):
            split_dk(W, ideal_closure(W, [W.parse("s1")]), {0})


class TestFactorization:
    """D_J = D_K x F_J with additive lengths"""

    def test_commuting_generators_factor(self):
        """A1xA1, J = {s1}, K = S"""
        W = system("A1xA1")
        report = check_factorization_property(W, {0}, {0, 1})
        assert report.passed, report.failures
        assert names(W, report.f_j) == ["e", "s2"]

    def test_a2_fails_with_witness(self):
        """A2, J = {s1}, K = S: s1s2 has no factorization"""
        W = system("A2")
        report = check_factorization_property(W, {0}, {0, 1})
        assert not report.passed
        assert names(W, report.witnesses) == ["s1s2"]

    def test_j_equals_k_is_trivial(self):
        """F_J = {e} when J = K"""
        W = system("A2")
        assert check_factorization_property(W, {0}, {0}).passed
        assert names(W, f_j(W, {0}, {0})) == ["e"]

    def test_j_not_in_k(self):
        """J <= K is required"""
        with pytest.raises(BadParams):
            check_factorization_property(system("A2"), {0, 1}, {0})

    def test_factorize_via_k(self):
        """s2 = e * s2 in A1xA1"""
        W = system("A1xA1")
        alpha, z = factorize_via_k(W, W.parse("s2"), {0}, {0, 1})
        assert alpha == W.identity
        assert W.format(z) == "s2"

    def test_factorize_full(self):
        """s1s2 = e * s2 * s1 in A1xA1 with J = {s1}"""
        W = system("A1xA1")
        alpha, z, w_J = factorize_full(W, W.parse("s1s2"), {0}, {0, 1})
        assert (W.format(alpha), W.format(z), W.format(w_J)) == ("e", "s2", "s1")

    def test_factorize_via_k_violation(self):
        """s1s2 in A2 has K part outside W_{K minus J}"""
        W = system("A2")
        with pytest.raises(FactorizationHypothesisViolated) as info:
            factorize_via_k(W, W.parse("s1s2"), {0}, {0, 1})
        assert names(W, info.value.witnesses) == ["s1s2"]
