"""
Tests for the ideal modules M(E_J) and M~(E_J), their validation and the
r-table solver.
"""
import pytest
import sys
from pathlib import Path

# Add parent directory to path for imports
sys.path.insert(0, str(Path(__file__).parent.parent))

from heckeideal.coxeter import build_system
from heckeideal.errors import BadReference, MissingRTableEntry, SolverIncomplete
from heckeideal.hecke import HeckeAlgebra
from heckeideal.ideal_module import (
    IdealModule,
    IdealPair,
    admissible_unknowns,
    build_datum,
    validate_ideal_module,
)
from heckeideal.ideals import ideal_closure
from heckeideal.laurent import Scalar
from heckeideal.parabolic import ParabolicModule, Variant
from heckeideal.report import CheckReport
from heckeideal.solver import Poly, solve_r_table
from heckeideal.systems import named_matrix

q = Scalar.q(1)


def a2_instance():
    """A2 with E = {e, s1} and J = {s2}"""
    W = build_system(named_matrix("A2"), name="A2")
    H = HeckeAlgebra(W)
    E = ideal_closure(W, [W.parse("s1")])
    return W, H, E, frozenset({1})


class TestIdealModuleAction:
    """The four-case action on Gamma_y"""

    def setup_method(self):
        self.W, self.H, self.E, self.J = a2_instance()
        s1 = self.W.parse("s1")
        datum = build_datum(self.W, self.E, self.J, [(1, s1, self.W.identity, q ** 2)])
        self.M = IdealModule(self.H, datum)

    def test_strict_ascent_and_descent(self):
        """T_{s1} Gamma_e = Gamma_{s1}; T_{s1} Gamma_{s1} = q Gamma_e + (q - 1) Gamma_{s1}"""
        W, M = self.W, self.M
        e, s1 = W.identity, W.parse("s1")
        assert M.act_gen(0, M.gamma(e)) == M.gamma(s1)
        assert M.act_gen(0, M.gamma(s1)) == M.gamma(e).scale(q) + M.gamma(s1).scale(q - 1)

    def test_weak_descent(self):
        """T_{s2} Gamma_e = -Gamma_e"""
        e = self.W.identity
        assert self.M.act_gen(1, self.M.gamma(e)) == -self.M.gamma(e)

    def test_weak_ascent_uses_rtable(self):
        """T_{s2} Gamma_{s1} = q Gamma_{s1} - q^2 Gamma_e"""
        W, M = self.W, self.M
        e, s1 = W.identity, W.parse("s1")
        assert M.act_gen(1, M.gamma(s1)) == M.gamma(s1).scale(q) - M.gamma(e).scale(q ** 2)

    def test_gamma_outside_e(self):
        """Gamma_{s2} does not exist"""
        with pytest.raises(ValueError):
            self.M.gamma(self.W.parse("s2"))

    def test_descriptor(self):
        """E, J and variant are recorded"""
        assert self.M.descriptor() == {
            "module": "ideal",
            "E": ["e", "s1"],
            "J": ["s2"],
            "variant": "minus_one",
            "size": 2,
        }


class TestValidation:
    """validate_ideal_module on good and bad r-tables"""

    def test_admissible_unknowns(self):
        """r^{s2}_{e,s1} and r^{s2}_{s1,s1}"""
        W, _, E, J = a2_instance()
        unknowns = admissible_unknowns(W, E, J)
        assert [(s, W.format(y), W.format(z)) for s, y, z in unknowns] == [(1, "s1", "e"), (1, "s1", "s1")]

    def test_valid_table(self):
        """r^{s2}_{e,s1} = q^2 gives a module"""
        W, H, E, J = a2_instance()
        datum = build_datum(W, E, J, [(1, W.parse("s1"), W.identity, q ** 2)])
        report = validate_ideal_module(H, datum)
        assert report.passed, report.witnesses

    def test_braid_failure(self):
        """r = q satisfies membership but breaks the braid relation"""
        W, H, E, J = a2_instance()
        datum = build_datum(W, E, J, [(1, W.parse("s1"), W.identity, q)])
        report = validate_ideal_module(H, datum)
        assert report.failed
        assert any("braid" in w for w in report.witnesses)

    def test_membership_failure(self):
        """r = 1 is not in q_s Z[Gamma>=0]"""
        W, H, E, J = a2_instance()
        datum = build_datum(W, E, J, [(1, W.parse("s1"), W.identity, Scalar.one())])
        report = validate_ideal_module(H, datum)
        assert report.failed
        assert "is not in q_s Z[Gamma>=0]" in report.witnesses[0]

    def test_missing_entry_is_reported(self):
        """A weak-ascent pair without a row fails instead of raising"""
        W, H, E, J = a2_instance()
        datum = build_datum(W, E, J, [], fill_missing=False)
        with pytest.raises(MissingRTableEntry):
            IdealModule(H, datum).act_gen(1, IdealModule(H, datum).gamma(W.parse("s1")))
        report = validate_ideal_module(H, datum)
        assert report.failed

    def test_bad_reference(self):
        """J = {s1} is not in Pos(E)"""
        W, H, E, _ = a2_instance()
        datum = build_datum(W, E, {0}, [])
        with pytest.raises(BadReference):
            IdealModule(H, datum)
        assert validate_ideal_module(H, datum).failed

    def test_full_ideal_matches_parabolic_module(self):
        """E = D_J (here W with J = {}) has no weak ascents and acts like M^J"""
        W, H, _, _ = a2_instance()
        E = ideal_closure(W, [W.longest_element()])
        module = IdealModule(H, build_datum(W, E, set()))
        parabolic = ParabolicModule(H, set())
        for y in W.elements():
            for s in W.generators:
                assert module.act_gen(s, module.gamma(y)).items() == parabolic.act_gen(s, parabolic.m(y)).items()


class TestSolver:
    """Finding r-tables from the relations"""

    def test_solves_minus_variant(self):
        """r^{s2}_{e,s1} = q^2, r^{s2}_{s1,s1} = 0"""
        W, H, E, J = a2_instance()
        datum = solve_r_table(H, E, J)
        s1 = W.parse("s1")
        assert datum.r(1, s1, W.identity, H.weights) == q ** 2
        assert datum.r(1, s1, s1, H.weights) == 0
        assert validate_ideal_module(H, datum).passed

    def test_solves_tilde_variant(self):
        """r~^{s2}_{e,s1} = 1, r~^{s2}_{s1,s1} = 0"""
        W, H, E, J = a2_instance()
        datum = solve_r_table(H, E, J, variant=Variant.QS)
        s1 = W.parse("s1")
        assert datum.variant == Variant.QS
        assert datum.r(1, s1, W.identity, H.weights) == 1
        assert datum.r(1, s1, s1, H.weights) == 0

    def test_identity_ideal_has_zero_table(self):
        """A1xA1, E = {e}, J = {s1}: r = r~ = 0"""
        W = build_system(named_matrix("A1xA1"))
        H = HeckeAlgebra(W)
        E = ideal_closure(W, [W.identity])
        for variant in (Variant.MINUS_ONE, Variant.QS):
            datum = solve_r_table(H, E, {0}, variant=variant)
            assert datum.r(1, W.identity, W.identity, H.weights) == 0
            assert (1, W.identity) in datum.rtable

    def test_unknown_budget(self):
        """Too many unknowns stops early"""
        _, H, E, J = a2_instance()
        with pytest.raises(SolverIncomplete):
            solve_r_table(H, E, J, max_unknowns=1)

    def test_bad_reference(self):
        """J outside Pos(E)"""
        _, H, E, _ = a2_instance()
        with pytest.raises(BadReference):
            solve_r_table(H, E, {0})


class TestPoly:
    """Polynomials over Z[Gamma] used by the solver"""

    def test_substitute_and_evaluate(self):
        """(x0 - q)(x1 + 1) at x0 = q vanishes"""
        x0, x1 = Poly.var(0), Poly.var(1)
        p = (x0 - q) * (x1 + 1)
        assert not p.substitute(0, q)
        assert p.evaluate({0: q ** 2, 1: Scalar.zero()}) == q ** 2 - q

    def test_coefficients_in(self):
        """q x0^2 + x0 x1 split by powers of x0"""
        x0, x1 = Poly.var(0), Poly.var(1)
        coeffs = (x0 * x0 * q + x0 * x1).coefficients_in(0)
        assert coeffs[2] == Poly.const(q)
        assert coeffs[1] == x1


class TestIdealDuality:
    """delta and rho between M(E_J) and M~(E_J)"""

    def test_duality(self):
        """rho o delta = Id and delta is Phi-semilinear"""
        W, H, E, J = a2_instance()
        pair = IdealPair(H, solve_r_table(H, E, J), solve_r_table(H, E, J, variant=Variant.QS))
        report = pair.check_duality(CheckReport(claim="ideal-duality"))
        assert report.passed, report.witnesses
