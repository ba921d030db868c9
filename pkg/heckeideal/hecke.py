"""
Weighted Iwahori-Hecke algebra with the T_w basis.

Multiplication is computed by letting T_s act on the left one generator at
a time; bar and the sign map are linear over the corresponding scalar
involutions.
"""
import logging
from typing import Dict, List, Optional, Sequence, Union

from .coxeter import CoxeterSystem, Element
from .laurent import Scalar, WeightFunction, eps, q_of
from .linear import HeckeModule, LinearCombination
from .report import CheckReport

LOG = logging.getLogger("heckeideal.hecke")


class HeckeElt(LinearCombination):
    """Element of H; multiplying two of them is the algebra product."""

    __slots__ = ()

    def __mul__(self, other):
        if isinstance(other, HeckeElt):
            return self.parent.mul(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)


class HeckeAlgebra(HeckeModule):
    """
    H over Z[Gamma] for a finite Coxeter system and a weight function.

    T_s T_w = T_{sw} if sw > w, and q_s T_{sw} + (q_s - 1) T_w otherwise.
    """

    element_class = HeckeElt
    symbol = "T"

    def __init__(self, system: CoxeterSystem, weights: Optional[WeightFunction] = None):
        weights = weights or WeightFunction.equal(system.rank)
        weights.validate(system.matrix.entries)
        self.system = system
        self.weights = weights
        super().__init__(self)
        self._inverse_cache: Dict[Element, HeckeElt] = {}

    def basis(self) -> List[Element]:
        return self.system.elements()

    def _as_element(self, w: Union[Element, str, Sequence[str]]) -> Element:
        return w if isinstance(w, Element) else self.system.parse(w)

    def T(self, w: Union[Element, str, Sequence[str]]) -> HeckeElt:
        return self.basis_element(self._as_element(w))

    def one(self) -> HeckeElt:
        return self.basis_element(self.system.identity)

    def q(self, s: int) -> Scalar:
        return self.weights.q(s)

    def q_of(self, w: Element) -> Scalar:
        return q_of(w, self.weights)

    def eps(self, w: Element) -> int:
        return eps(w)

    def act_gen_basis(self, s: int, w: Element) -> HeckeElt:
        sw = self.system.left_mul(s, w)
        if not self.system.is_left_descent(s, w):
            return self.element({sw: self.weights.one()})
        q = self.weights.q(s)
        return self.element({sw: q, w: q - 1})

    def gen_left_mul(self, s: int, h: HeckeElt) -> HeckeElt:
        return self.act_gen(s, h)

    def mul(self, a: HeckeElt, b: HeckeElt) -> HeckeElt:
        return self.act(a, b)

    def t_gen_inverse(self, s: int) -> HeckeElt:
        """T_s^{-1} = q_s^{-1} T_s + (q_s^{-1} - 1) T_e"""
        q_inv = self.weights.q(s).inverse()
        return self.element({self.system.gen(s): q_inv, self.system.identity: q_inv - 1})

    def t_inverse(self, w: Element) -> HeckeElt:
        """T_w^{-1}, built from the generator inverses along the reduced word."""
        cached = self._inverse_cache.get(w)
        if cached is None:
            cached = self.one()
            for s in w.word:
                cached = self.mul(self.t_gen_inverse(s), cached)
            self._inverse_cache[w] = cached
        return cached

    def bar_basis(self, w: Element) -> HeckeElt:
        """bar(T_w) = T_{w^{-1}}^{-1}"""
        return self.t_inverse(self.system.inverse(w))

    def bar(self, h: HeckeElt) -> HeckeElt:
        total = self.zero()
        for w, coeff in h.items():
            total = total + self.bar_basis(w).scale(coeff.bar())
        return total

    def phi(self, h: HeckeElt) -> HeckeElt:
        """
        Sign-twisted involution: sum c_w T_w -> sum phi(c_w) eps_w q_w bar(T_w).

        Raises:
            PhiUndefined: if some L(s) is zero or has even coordinate sum
        """
        self.weights.require_phi()
        total = self.zero()
        for w, coeff in h.items():
            total = total + self.bar_basis(w).scale(coeff.phi() * eps(w) * q_of(w, self.weights))
        return total

    def check_axioms(self, report: Optional[CheckReport] = None) -> CheckReport:
        """Quadratic and braid relations, bar an involutive ring map, and phi^2 = Id when phi exists."""
        report = report or CheckReport(claim="hecke-axioms")
        self.check_relations(report)
        elements = self.basis()
        for w in elements:
            tw = self.T(w)
            report.expect(self.bar(self.bar(tw)) == tw, f"bar twice on T_{self.system.format(w)}")
            report.expect(self.mul(self.t_inverse(w), tw) == self.one(),
                          f"T_{self.system.format(w)}^-1 is not a left inverse")
            for s in self.system.generators:
                ts = self.T(self.system.gen(s))
                report.expect(
                    self.bar(ts * tw) == self.bar(ts) * self.bar(tw),
                    f"bar not multiplicative on T_{self.system.names[s]} T_{self.system.format(w)}",
                )
        if self.weights.phi_compatible():
            for w in elements:
                tw = self.T(w)
                report.expect(self.phi(self.phi(tw)) == tw, f"phi twice on T_{self.system.format(w)}")
                report.expect(self.phi(self.bar(tw)) == self.bar(self.phi(tw)),
                              f"phi and bar do not commute on T_{self.system.format(w)}")
                for s in self.system.generators:
                    ts = self.T(self.system.gen(s))
                    report.expect(
                        self.phi(ts * tw) == self.phi(ts) * self.phi(tw),
                        f"phi not multiplicative on T_{self.system.names[s]} T_{self.system.format(w)}",
                    )
        else:
            report.note("phi checks skipped: weights have a zero or even-sum L(s)")
        LOG.debug("Hecke axioms on %s: %s (%d comparisons)", self.system.name, report.status.value, report.checked)
        return report
