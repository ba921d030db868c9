"""
Ideals of the left weak order, the Pos set, the SD/SA/WD/WA case split and
the maximal-suffix table on D_K.
"""
import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, FrozenSet, Iterable, Iterator, List, Optional, Tuple

from .coxeter import CoxeterSystem, Element
from .errors import BadReference, NoUniqueMax, PosMismatch

LOG = logging.getLogger("heckeideal.ideals")


class IdealCase(str, Enum):
    """Case of T_s acting on Gamma_y in the ideal module"""
    SD = "strict_descent"   # sy < y
    SA = "strict_ascent"    # sy > y, sy in E
    WD = "weak_descent"     # sy > y, sy not in D_J
    WA = "weak_ascent"      # sy > y, sy in D_J but not in E


@dataclass(frozen=True)
class IdealE:
    """Suffix-closed subset of W, kept sorted by (length, ShortLex)."""
    members: FrozenSet[Element]
    generators: Tuple[Element, ...] = ()

    def __contains__(self, w: Element) -> bool:
        return w in self.members

    def __iter__(self) -> Iterator[Element]:
        return iter(self.sorted())

    def __len__(self) -> int:
        return len(self.members)

    def sorted(self) -> List[Element]:
        return sorted(self.members)

    def maximal(self) -> Element:
        return max(self.members)


def ideal_closure(system: CoxeterSystem, gens: Iterable[Element]) -> IdealE:
    """All suffixes of the given elements (always contains e)."""
    gens = tuple(sorted(set(gens)))
    members = {system.identity}
    stack = list(gens)
    while stack:
        w = stack.pop()
        if w in members:
            continue
        members.add(w)
        for s in system.descents(w):
            stack.append(system.left_mul(s, w))
    return IdealE(frozenset(members), gens)


def principal_ideals(system: CoxeterSystem) -> List[IdealE]:
    """The ideal generated by each single element, in element order."""
    return [ideal_closure(system, [w]) for w in system.elements()]


def is_suffix_closed(system: CoxeterSystem, members: Iterable[Element]) -> bool:
    members = set(members)
    if system.identity not in members:
        return False
    return all(system.left_mul(s, w) in members for w in members for s in system.descents(w))


def pos(system: CoxeterSystem, E: IdealE) -> FrozenSet[int]:
    """
    Pos(E) = {s : l(xs) > l(x) for all x in E}.

    Raises:
        PosMismatch: if the result differs from the generators outside E
    """
    result = frozenset(
        s for s in system.generators
        if not any(system.is_right_descent(s, x) for x in E.members)
    )
    outside = frozenset(s for s in system.generators if system.gen(s) not in E)
    if result != outside:
        raise PosMismatch(
            f"Pos(E) = {system.format_set(result)} but S minus E = {system.format_set(outside)}"
        )
    return result


def classify_ideal(system: CoxeterSystem, s: int, y: Element, E: IdealE, J: Iterable[int]) -> IdealCase:
    """
    Case of T_s on Gamma_y.

    Raises:
        BadReference: if J is not contained in Pos(E)
        ValueError: if y is not in E
    """
    J = frozenset(J)
    if not J <= pos(system, E):
        raise BadReference(f"J = {system.format_set(J)} is not contained in Pos(E)")
    if y not in E:
        raise ValueError(f"{system.format(y)} is not in E")
    return _case(system, s, y, E, J)


def _case(system: CoxeterSystem, s: int, y: Element, E: IdealE, J: FrozenSet[int]) -> IdealCase:
    sy = system.left_mul(s, y)
    if sy.length < y.length:
        return IdealCase.SD
    if sy in E:
        return IdealCase.SA
    if not system.in_coset_reps(sy, J):
        return IdealCase.WD
    return IdealCase.WA


def weak_ascents(system: CoxeterSystem, y: Element, E: IdealE, J: FrozenSet[int]) -> FrozenSet[int]:
    return frozenset(s for s in system.generators if _case(system, s, y, E, J) == IdealCase.WA)


@dataclass
class SuffixSplit:
    """
    D_K split by maximal suffix in E.

    table maps alpha in D_K^1 to (x, y_max) with alpha = x * y_max and
    additive lengths; d2 lists D_K^2; e_bar lists the x-parts.
    """
    E: IdealE
    J: FrozenSet[int]
    K: FrozenSet[int]
    d_k: List[Element]
    table: Dict[Element, Tuple[Element, Element]] = field(default_factory=dict)
    d1: List[Element] = field(default_factory=list)
    d2: List[Element] = field(default_factory=list)
    e_bar: List[Element] = field(default_factory=list)

    def y_max(self, alpha: Element) -> Optional[Element]:
        pair = self.table.get(alpha)
        return pair[1] if pair else None

    def x_part(self, alpha: Element) -> Optional[Element]:
        pair = self.table.get(alpha)
        return pair[0] if pair else None


def split_dk(system: CoxeterSystem, E: IdealE, J: Iterable[int]) -> SuffixSplit:
    """
    Compute (x, y_max) for every alpha in D_K, K = Pos(E).

    Raises:
        BadReference: if J is not contained in K
        NoUniqueMax: if the suffixes of some alpha lying in E have no dominating maximum
    """
    J = frozenset(J)
    K = pos(system, E)
    if not J <= K:
        raise BadReference(f"J = {system.format_set(J)} is not contained in K = {system.format_set(K)}")
    d_k = system.min_coset_reps(K)
    split = SuffixSplit(E=E, J=J, K=K, d_k=d_k)
    members = E.sorted()
    e_bar = set()
    for alpha in d_k:
        below = [y for y in members if system.is_suffix(y, alpha)]
        if not below:
            split.d2.append(alpha)
            continue
        top = max(below)
        if any(not system.is_suffix(y, top) for y in below):
            raise NoUniqueMax(
                f"Suffixes of {system.format(alpha)} in E have no dominating maximum",
                alpha=alpha,
            )
        x = system.multiply(alpha, system.inverse(top))
        split.table[alpha] = (x, top)
        split.d1.append(alpha)
        e_bar.add(x)
    split.e_bar = sorted(e_bar)
    LOG.debug("split_dk: |D_K| = %d, |D_K^1| = %d, |E bar| = %d", len(d_k), len(split.d1), len(split.e_bar))
    return split
