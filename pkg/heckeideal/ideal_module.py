"""
Modules M(E_J, L) and M~(E_J, L) on an ideal E of the left weak order.

T_s Gamma_y = q_s Gamma_{sy} + (q_s - 1) Gamma_y        strict descent
            = Gamma_{sy}                                strict ascent
            = -Gamma_y          (q_s Gamma_y for M~)    weak descent
            = q_s Gamma_y - sum_z r^s_{z,y} Gamma_z     weak ascent
              (-Gamma_y - sum_z r~^s_{z,y} Gamma_z for M~)
"""
import logging
from dataclasses import dataclass, field
from typing import Any, Dict, FrozenSet, Iterable, List, Tuple

from .coxeter import CoxeterSystem, Element
from .errors import BadReference, MissingRTableEntry
from .hecke import HeckeAlgebra
from .ideals import IdealCase, IdealE, _case, pos
from .laurent import WeightFunction, in_nonnegative, in_qs_ideal
from .linear import HeckeModule, LinearCombination, dualize
from .parabolic import Variant, parse_variant
from .report import CheckReport

LOG = logging.getLogger("heckeideal.ideal_module")

RTableData = Dict[Tuple[int, Element], Dict[Element, Any]]


@dataclass
class WGraphIdealDatum:
    """Ideal E, reference set J and the weak-ascent structure polynomials r^s_{z,y}."""
    E: IdealE
    J: FrozenSet[int]
    rtable: RTableData = field(default_factory=dict)
    variant: Variant = Variant.MINUS_ONE

    def r(self, s: int, y: Element, z: Element, weights: WeightFunction):
        return self.rtable.get((s, y), {}).get(z, weights.zero())

    def entries(self) -> List[Tuple[int, Element, Element, Any]]:
        out = []
        for (s, y) in sorted(self.rtable, key=lambda k: (k[1], k[0])):
            for z, value in sorted(self.rtable[(s, y)].items()):
                out.append((s, y, z, value))
        return out


def weak_ascent_pairs(system: CoxeterSystem, E: IdealE, J: FrozenSet[int]) -> List[Tuple[int, Element]]:
    """(s, y) with s a weak ascent of y, ordered by y then s."""
    return [(s, y) for y in E.sorted() for s in system.generators if _case(system, s, y, E, J) == IdealCase.WA]


def admissible_unknowns(system: CoxeterSystem, E: IdealE, J: Iterable[int]) -> List[Tuple[int, Element, Element]]:
    """(s, y, z) with s a weak ascent of y and z in E Bruhat-below sy."""
    J = frozenset(J)
    out = []
    for s, y in weak_ascent_pairs(system, E, J):
        sy = system.left_mul(s, y)
        for z in E.sorted():
            if z != sy and system.bruhat_leq(z, sy):
                out.append((s, y, z))
    return out


def build_datum(
    system: CoxeterSystem,
    E: IdealE,
    J: Iterable[int],
    entries: Iterable[Tuple[int, Element, Element, Any]] = (),
    variant: Any = Variant.MINUS_ONE,
    fill_missing: bool = True,
) -> WGraphIdealDatum:
    """
    Datum from (s, y, z, r) rows.

    With fill_missing every weak-ascent pair gets a row, so zero entries can
    be left out of a file.
    """
    J = frozenset(J)
    table: RTableData = {}
    if fill_missing:
        for s, y in weak_ascent_pairs(system, E, J):
            table[(s, y)] = {}
    for s, y, z, value in entries:
        table.setdefault((s, y), {})[z] = value
    return WGraphIdealDatum(E=E, J=J, rtable=table, variant=parse_variant(variant))


class IdealModule(HeckeModule):
    """M(E_J, L) or M~(E_J, L) with basis {Gamma_y : y in E}."""

    def __init__(self, algebra: HeckeAlgebra, datum: WGraphIdealDatum):
        super().__init__(algebra)
        self.datum = datum
        self.E = datum.E
        self.J = frozenset(datum.J)
        self.variant = datum.variant
        self.K = pos(self.system, self.E)
        if not self.J <= self.K:
            raise BadReference(
                f"J = {self.system.format_set(self.J)} is not contained in Pos(E) = {self.system.format_set(self.K)}"
            )
        self._basis = self.E.sorted()
        self._cases: Dict[Tuple[int, Element], IdealCase] = {}

    @property
    def symbol(self) -> str:
        return "Gamma" if self.variant == Variant.MINUS_ONE else "Gamma~"

    def basis(self) -> List[Element]:
        return list(self._basis)

    def gamma(self, y: Element) -> LinearCombination:
        if y not in self.E:
            raise ValueError(f"{self.system.format(y)} is not in E")
        return self.basis_element(y)

    def case(self, s: int, y: Element) -> IdealCase:
        key = (s, y)
        if key not in self._cases:
            self._cases[key] = _case(self.system, s, y, self.E, self.J)
        return self._cases[key]

    def act_gen_basis(self, s: int, y: Element) -> LinearCombination:
        case = self.case(s, y)
        q = self.weights.q(s)
        sy = self.system.left_mul(s, y)
        if case == IdealCase.SD:
            return self.element({sy: q, y: q - 1})
        if case == IdealCase.SA:
            return self.element({sy: self.weights.one()})
        tilde = self.variant == Variant.QS
        if case == IdealCase.WD:
            return self.element({y: q if tilde else self.weights.constant(-1)})
        row = self.datum.rtable.get((s, y))
        if row is None:
            raise MissingRTableEntry(
                f"No r-table data for s = {self.system.names[s]}, y = {self.system.format(y)}"
            )
        terms: Dict[Element, Any] = {y: self.weights.constant(-1) if tilde else q}
        for z, value in row.items():
            terms[z] = terms[z] - value if z in terms else -value
        return self.element(terms)

    def descriptor(self) -> Dict[str, Any]:
        return {
            "module": "ideal",
            "E": [self.system.format(y) for y in self._basis],
            "J": [self.system.names[s] for s in sorted(self.J)],
            "variant": self.variant.value,
            "size": len(self._basis),
        }


def validate_ideal_module(
    algebra: HeckeAlgebra,
    datum: WGraphIdealDatum,
    witness_limit: int = 5,
) -> CheckReport:
    """
    Check the r-table membership, the quadratic and braid relations, and the bar involution.

    Membership is r in q_s Z[Gamma>=0] for M and r~ in Z[Gamma>=0] for M~.
    """
    system = algebra.system
    report = CheckReport(
        claim="ideal-module",
        instance={
            "E": [system.format(y) for y in datum.E.sorted()],
            "J": [system.names[s] for s in sorted(datum.J)],
            "variant": datum.variant.value,
        },
        witness_limit=witness_limit,
    )
    try:
        module = IdealModule(algebra, datum)
    except BadReference as exc:
        report.fail(str(exc))
        return report
    for s, y, z, value in datum.entries():
        if datum.variant == Variant.MINUS_ONE:
            ok = in_qs_ideal(value, s, algebra.weights)
            where = "q_s Z[Gamma>=0]"
        else:
            ok = in_nonnegative(value)
            where = "Z[Gamma>=0]"
        report.expect(ok, f"r^{system.names[s]}_{{{system.format(z)},{system.format(y)}}} = {value} is not in {where}")
    try:
        module.check_relations(report)
        module.check_bar(report)
    except MissingRTableEntry as exc:
        report.fail(str(exc))
    LOG.debug("validate_ideal_module: %s after %d comparisons", report.status.value, report.checked)
    return report


class IdealPair:
    """M(E_J, L) and M~(E_J, L) with the dualities delta and rho."""

    def __init__(self, algebra: HeckeAlgebra, datum: WGraphIdealDatum, tilde_datum: WGraphIdealDatum):
        self.algebra = algebra
        self.minus = IdealModule(algebra, datum)
        self.tilde = IdealModule(algebra, tilde_datum)

    def delta(self, m: LinearCombination) -> LinearCombination:
        """delta: Gamma_y -> eps_y q_y bar(Gamma~_y)"""
        return dualize(m, self.tilde)

    def rho(self, m: LinearCombination) -> LinearCombination:
        return dualize(m, self.minus)

    def check_duality(self, report: CheckReport) -> CheckReport:
        system = self.algebra.system
        for y in self.minus.basis():
            g = self.minus.gamma(y)
            label = f"Gamma_{system.format(y)}"
            image = self.delta(g)
            report.expect(self.rho(image) == g, f"rho o delta != Id on {label}")
            report.expect(self.delta(self.minus.bar(g)) == self.tilde.bar(image), f"delta does not commute with bar on {label}")
            for s in system.generators:
                ts = self.algebra.T(system.gen(s))
                report.expect(
                    self.delta(self.minus.act_gen(s, g)) == self.tilde.act(self.algebra.phi(ts), image),
                    f"delta(T_{system.names[s]} {label}) != Phi(T_{system.names[s]}) delta({label})",
                )
        for y in self.tilde.basis():
            g = self.tilde.gamma(y)
            report.expect(self.delta(self.rho(g)) == g, f"delta o rho != Id on Gamma~_{system.format(y)}")
        return report
