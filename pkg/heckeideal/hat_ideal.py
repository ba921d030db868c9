"""
The left ideal Q_J of H spanned by Q_z = sum_{y in W_J} eps_y q_y^{-1} T_{zy}, z in D_J,
and the isomorphism mu: M^J -> Q_J, m_z -> Q_z.

Only finite W is handled, so the completed algebra coincides with H.
"""
import logging
from typing import Dict, Iterable, List, Tuple

from .coxeter import Element, ParabolicCase
from .errors import NotACosetRep, NotScalarMultiple
from .hecke import HeckeAlgebra, HeckeElt
from .laurent import Scalar, eps, q_of
from .linear import LinearCombination
from .parabolic import ParabolicModule, Variant
from .report import CheckReport

LOG = logging.getLogger("heckeideal.hat_ideal")


def q_z(algebra: HeckeAlgebra, J: Iterable[int], z: Element) -> HeckeElt:
    """
    Raises:
        NotACosetRep: if z is not in D_J
    """
    system = algebra.system
    J = frozenset(J)
    if not system.in_coset_reps(z, J):
        raise NotACosetRep(f"{system.format(z)} is not in D_J for J = {system.format_set(J)}")
    terms = {}
    for y in system.parabolic_subgroup(J):
        terms[system.multiply(z, y)] = q_of(y, algebra.weights).inverse() * eps(y)
    return algebra.element(terms)


class HatIdeal:
    """Q_J for one J together with mu."""

    def __init__(self, algebra: HeckeAlgebra, J: Iterable[int]):
        self.algebra = algebra
        self.system = algebra.system
        self.J = frozenset(J)
        self.module = ParabolicModule(algebra, self.J, Variant.MINUS_ONE)
        self.basis: Dict[Element, HeckeElt] = {z: q_z(algebra, self.J, z) for z in self.module.basis()}
        LOG.debug("Q_J for J = %s: %d generators Q_z", self.system.format_set(self.J), len(self.basis))

    def q(self, z: Element) -> HeckeElt:
        if z not in self.basis:
            raise NotACosetRep(f"{self.system.format(z)} is not in D_J for J = {self.system.format_set(self.J)}")
        return self.basis[z]

    def mu(self, m: LinearCombination) -> HeckeElt:
        total = self.algebra.zero()
        for z, coeff in m.items():
            total = total + self.q(z).scale(coeff)
        return total

    def _label(self, z: Element) -> str:
        return self.system.format(z)

    def check_left_ideal(self, report: CheckReport) -> CheckReport:
        """T_s Q_z = q_s Q_{sz} + (q_s - 1) Q_z, Q_{sz}, or -Q_z according to the position of s."""
        for z, qz in self.basis.items():
            for s in self.system.generators:
                case = self.system.classify_parabolic(s, z, self.J)
                sz = self.system.left_mul(s, z)
                q = self.algebra.q(s)
                if case == ParabolicCase.MINUS:
                    expected = self.basis[sz].scale(q) + qz.scale(q - 1)
                elif case == ParabolicCase.PLUS:
                    expected = self.basis[sz]
                else:
                    expected = -qz
                report.bump(f"case-{case.value}")
                report.expect(
                    self.algebra.gen_left_mul(s, qz) == expected,
                    f"T_{self.system.names[s]} Q_{self._label(z)} ({case.value} case)",
                )
        return report

    def check_mu(self, report: CheckReport) -> CheckReport:
        """mu is H-linear, injective, Q_z = T_z Q_e; mu o bar vs bar o mu is measured only."""
        q_e = self.basis[self.system.identity]
        supports: List[Tuple[Element, set]] = []
        for z, qz in self.basis.items():
            m = self.module.m(z)
            for s in self.system.generators:
                report.expect(
                    self.mu(self.module.act_gen(s, m)) == self.algebra.gen_left_mul(s, self.mu(m)),
                    f"mu(T_{self.system.names[s]} m_{self._label(z)}) != T_{self.system.names[s]} mu(m_{self._label(z)})",
                )
            report.expect(qz == self.algebra.T(z) * q_e, f"Q_{self._label(z)} != T_{self._label(z)} Q_e")
            supports.append((z, set(qz.support())))
        seen: set = set()
        for z, support in supports:
            if not support or support & seen:
                report.fail(f"Q_{self._label(z)} shares support with another Q; mu may not be injective")
            seen |= support
        mismatches = [
            self._label(z) for z in self.basis
            if self.algebra.bar(self.mu(self.module.m(z))) != self.mu(self.module.bar(self.module.m(z)))
        ]
        if mismatches:
            report.note(f"bar(mu(m_z)) != mu(bar(m_z)) for z in {{{', '.join(mismatches)}}}")
        else:
            report.note("mu commutes with bar on every m_z")
        return report

    def l_table(self, report: CheckReport) -> Dict[Tuple[Element, Element], Scalar]:
        """
        L^z_y from T_z T_y m_e = L^z_y m_z, checked against eps_y and the recurrences.

        A product not supported on m_z is recorded as a failure, not raised.
        """
        module = self.module
        weights = self.algebra.weights
        base = module.basis_element(self.system.identity)
        w_j = self.system.parabolic_subgroup(self.J)
        table: Dict[Tuple[Element, Element], Scalar] = {}
        for z in module.basis():
            for y in w_j:
                value = module.act_word(z.word + y.word, base)
                label = f"L^{self._label(z)}_{self._label(y)}"
                if value.support() not in ([z], []):
                    exc = NotScalarMultiple(f"T_{self._label(z)} T_{self._label(y)} m_e is not a multiple of m_{self._label(z)}")
                    report.fail(str(exc))
                    continue
                table[(y, z)] = value.coefficient(z)
                report.expect(table[(y, z)] == eps(y), f"{label} = {table[(y, z)]}, expected {eps(y)}")

        def n(y: Element) -> Scalar:
            return q_of(y, weights).inverse() * eps(y)

        for z in module.basis():
            for s in self.system.generators:
                case = self.system.classify_parabolic(s, z, self.J)
                sz = self.system.left_mul(s, z)
                if case != ParabolicCase.ZERO:
                    for y in w_j:
                        if (y, z) in table and (y, sz) in table:
                            report.expect(table[(y, z)] == table[(y, sz)],
                                          f"L^{self._label(z)}_{self._label(y)} != L^{self._label(sz)}_{self._label(y)}")
                    continue
                t = self.system.multiply(self.system.inverse(z), self.system.multiply(self.system.gen(s), z))
                if t.length != 1 or t.word[0] not in self.J:
                    report.fail(f"z^-1 s z for z = {self._label(z)}, s = {self.system.names[s]} is not a generator in J")
                    continue
                q = weights.q(s)
                for y in w_j:
                    ty = self.system.multiply(t, y)
                    tag = f"z = {self._label(z)}, s = {self.system.names[s]}, y = {self._label(y)}"
                    if (y, z) in table and (ty, z) in table:
                        report.expect(table[(y, z)] == -table[(ty, z)], f"L recurrence fails at {tag}")
                        rescaled, rescaled_t = table[(y, z)] * q_of(y, weights).inverse(), table[(ty, z)] * q_of(ty, weights).inverse()
                        expected = -rescaled_t * (q.inverse() if ty.length < y.length else q)
                        report.expect(rescaled == expected, f"rescaled L recurrence fails at {tag}")
                    expected_n = -n(ty) * (q.inverse() if ty.length < y.length else q)
                    report.expect(n(y) == expected_n, f"N recurrence fails at {tag}")
        return table
