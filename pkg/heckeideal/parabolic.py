"""
Parabolic modules M^J (u_s = -1) and M~^J (u_s = q_s) on the minimal coset
representatives D_J, with the natural maps from H and the duality between
the two variants.
"""
import logging
from enum import Enum
from typing import Any, Dict, FrozenSet, Iterable, List

from .coxeter import Element, ParabolicCase
from .errors import BadParams, NotACosetRep
from .hecke import HeckeAlgebra, HeckeElt
from .laurent import Scalar, eps, q_of
from .linear import HeckeModule, LinearCombination, dualize
from .report import CheckReport

LOG = logging.getLogger("heckeideal.parabolic")


class Variant(str, Enum):
    """Eigenvalue u_s of T_s in the third case; a root of x^2 = q_s + (q_s - 1) x."""
    MINUS_ONE = "minus_one"
    QS = "qs"


_VARIANT_ALIASES = {
    "minus_one": Variant.MINUS_ONE,
    "-1": Variant.MINUS_ONE,
    "minus": Variant.MINUS_ONE,
    "qs": Variant.QS,
    "q": Variant.QS,
    "tilde": Variant.QS,
}


def parse_variant(value: Any) -> Variant:
    """
    Read a variant name.

    Raises:
        BadParams: for unknown names or per-generator mixtures
    """
    if isinstance(value, Variant):
        return value
    if isinstance(value, (dict, list, tuple)):
        raise BadParams("Variant must be uniform across S; per-generator mixtures are not supported")
    key = str(value).strip().lower()
    if key not in _VARIANT_ALIASES:
        raise BadParams(f"Unknown variant '{value}'. Valid options: {', '.join(v.value for v in Variant)}")
    return _VARIANT_ALIASES[key]


class ParabolicModule(HeckeModule):
    """
    M^{J,u} with basis {m_sigma : sigma in D_J}.

    T_s m_sigma = q_s m_{s sigma} + (q_s - 1) m_sigma   (s sigma < sigma)
                = m_{s sigma}                            (s sigma > sigma, s sigma in D_J)
                = u_s m_sigma                            (otherwise)
    """

    def __init__(self, algebra: HeckeAlgebra, J: Iterable[int], variant: Any = Variant.MINUS_ONE):
        super().__init__(algebra)
        self.J: FrozenSet[int] = frozenset(J)
        for s in self.J:
            if not 0 <= s < self.system.rank:
                raise BadParams(f"Generator index {s} is not in S")
        self.variant = parse_variant(variant)
        self._basis = self.system.min_coset_reps(self.J)
        self._basis_set = frozenset(self._basis)
        LOG.debug("%s^J for J = %s: %d basis elements", self.symbol, self.system.format_set(self.J), len(self._basis))

    @property
    def symbol(self) -> str:
        return "m" if self.variant == Variant.MINUS_ONE else "m~"

    def basis(self) -> List[Element]:
        return list(self._basis)

    def u(self, s: int) -> Scalar:
        if self.variant == Variant.MINUS_ONE:
            return self.weights.constant(-1)
        return self.weights.q(s)

    def m(self, sigma: Element) -> LinearCombination:
        if sigma not in self._basis_set:
            raise NotACosetRep(
                f"{self.system.format(sigma)} is not in D_J for J = {self.system.format_set(self.J)}"
            )
        return self.basis_element(sigma)

    def act_gen_basis(self, s: int, sigma: Element) -> LinearCombination:
        case = self.system.classify_parabolic(s, sigma, self.J)
        s_sigma = self.system.left_mul(s, sigma)
        if case == ParabolicCase.MINUS:
            q = self.weights.q(s)
            return self.element({s_sigma: q, sigma: q - 1})
        if case == ParabolicCase.PLUS:
            return self.element({s_sigma: self.weights.one()})
        return self.element({sigma: self.u(s)})

    def varphi(self, h: HeckeElt) -> LinearCombination:
        """phi_J(T_w) = eps(w_J) m_sigma, or q_{w_J} m~_sigma for the q_s variant, with w = sigma w_J."""
        terms: Dict[Element, Scalar] = {}
        for w, coeff in h.items():
            sigma, w_J = self.system.coset_factorize(w, self.J)
            if self.variant == Variant.MINUS_ONE:
                value = coeff * eps(w_J)
            else:
                value = coeff * q_of(w_J, self.weights)
            terms[sigma] = terms[sigma] + value if sigma in terms else value
        return self.element(terms)

    def descriptor(self) -> Dict[str, Any]:
        return {
            "module": "parabolic",
            "J": [self.system.names[s] for s in sorted(self.J)],
            "variant": self.variant.value,
            "size": len(self._basis),
        }

    def check_module(self, report: CheckReport) -> CheckReport:
        """Module axioms, bar well-definedness, and phi_J(h) = h . m_e with phi_J commuting with bar."""
        self.check_relations(report)
        self.check_bar(report)
        base = self.basis_element(self.system.identity)
        for w in self.system.elements():
            tw = self.algebra.T(w)
            image = self.varphi(tw)
            label = f"T_{self.system.format(w)}"
            report.expect(image == self.act(tw, base), f"{self.symbol}: varphi({label}) differs from {label} . m_e")
            report.expect(self.varphi(self.algebra.bar(tw)) == self.bar(image),
                          f"{self.symbol}: varphi does not commute with bar on {label}")
        return report


class ParabolicPair:
    """M^J and M~^J for one J, with theta_J and eta_J between them."""

    def __init__(self, algebra: HeckeAlgebra, J: Iterable[int]):
        self.algebra = algebra
        self.J = frozenset(J)
        self.minus = ParabolicModule(algebra, self.J, Variant.MINUS_ONE)
        self.tilde = ParabolicModule(algebra, self.J, Variant.QS)

    def theta(self, m: LinearCombination) -> LinearCombination:
        """theta_J: M^J -> M~^J, m_sigma -> eps_sigma q_sigma bar(m~_sigma)."""
        return dualize(m, self.tilde)

    def eta(self, m: LinearCombination) -> LinearCombination:
        """eta_J: M~^J -> M^J, the inverse of theta_J."""
        return dualize(m, self.minus)

    def check_duality(self, report: CheckReport) -> CheckReport:
        """theta o varphi = varphi~ o Phi, theta commutes with bar, eta o theta = Id, theta(h m) = Phi(h) theta(m)."""
        system = self.algebra.system
        for w in system.elements():
            tw = self.algebra.T(w)
            label = f"T_{system.format(w)}"
            report.expect(
                self.theta(self.minus.varphi(tw)) == self.tilde.varphi(self.algebra.phi(tw)),
                f"theta o varphi != varphi~ o Phi on {label}",
            )
        for sigma in self.minus.basis():
            m = self.minus.m(sigma)
            label = f"m_{system.format(sigma)}"
            image = self.theta(m)
            report.expect(self.theta(self.minus.bar(m)) == self.tilde.bar(image), f"theta does not commute with bar on {label}")
            report.expect(self.eta(image) == m, f"eta o theta != Id on {label}")
            for s in system.generators:
                ts = self.algebra.T(system.gen(s))
                report.expect(
                    self.theta(self.minus.act_gen(s, m)) == self.tilde.act(self.algebra.phi(ts), image),
                    f"theta(T_{system.names[s]} {label}) != Phi(T_{system.names[s]}) theta({label})",
                )
        for sigma in self.tilde.basis():
            m = self.tilde.m(sigma)
            report.expect(self.theta(self.eta(m)) == m, f"theta o eta != Id on m~_{system.format(sigma)}")
        return report
