"""
R-polynomial tables read off the bar involution of a module, and the
classical descent recursion used as an independent oracle.

For a module with standard basis {b_tau}:

    bar(b_tau) = sum_sigma eps_sigma eps_tau q_tau^{-1} R_{sigma,tau} b_sigma   (signed)
    bar(b_tau) = sum_sigma q_tau^{-1} R_{sigma,tau} b_sigma                     (unsigned)
"""
import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, List, Optional, Tuple

from .coxeter import CoxeterSystem, Element
from .errors import BadParams
from .laurent import Scalar, WeightFunction, eps, q_of
from .linear import HeckeModule
from .report import CheckReport

LOG = logging.getLogger("heckeideal.rpoly")


class Normalization(str, Enum):
    SIGNED = "signed"
    UNSIGNED = "unsigned"


def parse_normalization(value: Any) -> Normalization:
    if isinstance(value, Normalization):
        return value
    try:
        return Normalization(str(value).strip().lower())
    except ValueError:
        raise BadParams(
            f"Unknown normalization '{value}'. Valid options: {', '.join(n.value for n in Normalization)}"
        )


@dataclass
class RTable:
    """Sparse table (sigma, tau) -> R_{sigma,tau}; absent entries and indices outside `index` read as 0."""
    entries: Dict[Tuple[Element, Element], Scalar]
    index: List[Element]
    rank: int = 1
    descriptor: Dict[str, Any] = field(default_factory=dict)

    def get(self, sigma: Element, tau: Element) -> Scalar:
        return self.entries.get((sigma, tau), Scalar.zero(self.rank))

    def rows(self) -> List[Tuple[Element, Element, Scalar]]:
        """Nonzero entries ordered by tau, then sigma."""
        keys = sorted(self.entries, key=lambda k: (k[1], k[0]))
        return [(sigma, tau, self.entries[(sigma, tau)]) for sigma, tau in keys]

    def differences(self, other: "RTable") -> List[Tuple[Element, Element, Scalar, Scalar]]:
        keys = sorted(set(self.entries) | set(other.entries), key=lambda k: (k[1], k[0]))
        out = []
        for sigma, tau in keys:
            a, b = self.get(sigma, tau), other.get(sigma, tau)
            if a != b:
                out.append((sigma, tau, a, b))
        return out

    def __eq__(self, other) -> bool:
        if not isinstance(other, RTable):
            return NotImplemented
        return not self.differences(other)

    __hash__ = None


def extract_rtable(module: HeckeModule, normalization: Any = Normalization.SIGNED) -> RTable:
    """Expand bar(b_tau) for every basis vector and solve coefficient-wise for R."""
    normalization = parse_normalization(normalization)
    weights = module.weights
    entries: Dict[Tuple[Element, Element], Scalar] = {}
    for tau in module.basis():
        q_tau = q_of(tau, weights)
        for sigma, coeff in module.bar_basis(tau).items():
            value = coeff * q_tau
            if normalization == Normalization.SIGNED:
                value = value * (eps(sigma) * eps(tau))
            entries[(sigma, tau)] = value
    descriptor = dict(getattr(module, "descriptor", lambda: {})())
    descriptor["normalization"] = normalization.value
    LOG.debug("Extracted %d R-table entries from %s", len(entries), descriptor.get("module", "module"))
    return RTable(entries=entries, index=module.basis(), rank=weights.rank, descriptor=descriptor)


def rpoly_parabolic(module: HeckeModule, normalization: Any = Normalization.SIGNED) -> RTable:
    return extract_rtable(module, normalization)


def rpoly_ideal(module: HeckeModule, normalization: Any = Normalization.SIGNED) -> RTable:
    return extract_rtable(module, normalization)


def classical_r_oracle(system: CoxeterSystem, weights: Optional[WeightFunction] = None) -> RTable:
    """
    Classical R_{x,w} by the left-descent recursion, without any Hecke arithmetic.

    R_{x,e} = delta_{x,e}; for s a left descent of w,
    R_{x,w} = R_{sx,sw} if sx < x, else q_s R_{sx,sw} + (q_s - 1) R_{x,sw}.
    """
    weights = weights or WeightFunction.equal(system.rank)
    memo: Dict[Tuple[Element, Element], Scalar] = {}
    zero, one = weights.zero(), weights.one()

    def r(x: Element, w: Element) -> Scalar:
        key = (x, w)
        if key in memo:
            return memo[key]
        if w.length == 0:
            value = one if x.length == 0 else zero
        elif x.length > w.length:
            value = zero
        else:
            s = w.word[0]
            sw = system.left_mul(s, w)
            sx = system.left_mul(s, x)
            if system.is_left_descent(s, x):
                value = r(sx, sw)
            else:
                q = weights.q(s)
                value = q * r(sx, sw) + (q - 1) * r(x, sw)
        memo[key] = value
        return value

    elements = system.elements()
    entries = {}
    for w in elements:
        for x in elements:
            value = r(x, w)
            if value:
                entries[(x, w)] = value
    return RTable(
        entries=entries,
        index=elements,
        rank=weights.rank,
        descriptor={"module": "classical-oracle", "normalization": Normalization.SIGNED.value},
    )


def check_rtable_shape(system: CoxeterSystem, table: RTable, report: CheckReport) -> CheckReport:
    """R_{tau,tau} = 1 and R_{sigma,tau} = 0 unless sigma <= tau in Bruhat order."""
    one = Scalar.one(table.rank)
    for tau in table.index:
        report.expect(table.get(tau, tau) == one, f"R_{{{system.format(tau)},{system.format(tau)}}} != 1")
    for (sigma, tau), value in sorted(table.entries.items()):
        if value and not system.bruhat_leq(sigma, tau):
            report.fail(f"R_{{{system.format(sigma)},{system.format(tau)}}} = {value} but sigma is not Bruhat-below tau")
    return report


def check_degrees(system: CoxeterSystem, table: RTable, report: CheckReport) -> CheckReport:
    """Equal parameters: deg_q R_{x,w} = l(w) - l(x) whenever x <= w."""
    for (x, w), value in sorted(table.entries.items()):
        if not value:
            continue
        degree = value.leading()[0][0] // 2
        report.expect(degree == w.length - x.length,
                      f"deg R_{{{system.format(x)},{system.format(w)}}} = {degree}, expected {w.length - x.length}")
    return report


def table_descriptor(system: CoxeterSystem, weights: WeightFunction, table: RTable, **extra: Any) -> Dict[str, Any]:
    """Header recorded with every exported table."""
    out = {
        "system": system.name,
        "generators": list(system.names),
        "weights": weights.to_json(),
        "bruhat_reading": "z < sy read as Bruhat order restricted to E",
        "outside_index": "entries with an index outside the representative set are 0",
    }
    out.update(table.descriptor)
    out.update(extra)
    return out
