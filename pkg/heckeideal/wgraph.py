"""
W-graph representations.

A W-graph on vertices Lambda assigns each x a subset I(x) of S and edge
weights mu^s_{x,y}. For L(s) > 0:

    tau_s(b_y) = -b_y                                               if s in I(y)
               = q_s b_y + q_s^{1/2} sum_{x : s in I(x)} mu^s_{x,y} b_x   otherwise

and for L(s) = 0 a vertex map y -> sy gives tau_s(b_y) = b_{sy}.
"""
import logging
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, List, Tuple

from .coxeter import ParabolicCase
from .hecke import HeckeAlgebra
from .laurent import Scalar
from .linear import HeckeModule, LinearCombination
from .parabolic import ParabolicModule
from .report import CheckReport

LOG = logging.getLogger("heckeideal.wgraph")


@dataclass
class WGraphDatum:
    vertices: List[str]
    I: Dict[str, FrozenSet[int]]
    mu: Dict[Tuple[str, str, int], Scalar] = field(default_factory=dict)  # (x, y, s) -> mu^s_{x,y}
    zero_edges: Dict[int, Dict[str, str]] = field(default_factory=dict)    # s -> {y: sy}


class WGraphModule(HeckeModule):
    symbol = "b"

    def __init__(self, algebra: HeckeAlgebra, datum: WGraphDatum):
        super().__init__(algebra)
        self.datum = datum

    def basis(self) -> List[str]:
        return list(self.datum.vertices)

    def base_key(self) -> str:
        return self.datum.vertices[0]

    def format_key(self, key: str) -> str:
        return key

    def act_gen_basis(self, s: int, y: str) -> LinearCombination:
        if self.weights.is_zero_weight(s):
            target = self.datum.zero_edges.get(s, {}).get(y)
            if target is None:
                raise KeyError(f"No zero-weight edge for {self.system.names[s]} at vertex {y}")
            return self.element({target: self.weights.one()})
        if s in self.datum.I[y]:
            return self.element({y: self.weights.constant(-1)})
        q = self.weights.q(s)
        half = self.weights.q_half(s)
        terms: Dict[str, Scalar] = {y: q}
        for x in self.datum.vertices:
            if x == y or s not in self.datum.I[x]:
                continue
            mu = self.datum.mu.get((x, y, s))
            if mu:
                terms[x] = terms[x] + half * mu if x in terms else half * mu
        return self.element(terms)


def validate_wgraph(datum: WGraphDatum, algebra: HeckeAlgebra, witness_limit: int = 5) -> CheckReport:
    """Bar-invariance of mu, completeness of zero-weight edges, then the quadratic and braid relations."""
    system = algebra.system
    report = CheckReport(
        claim="wgraph-representation",
        instance={"vertices": list(datum.vertices), "system": system.name},
        witness_limit=witness_limit,
    )
    vertices = set(datum.vertices)
    for v in datum.vertices:
        if v not in datum.I:
            report.fail(f"vertex {v} has no descent set")
    for (x, y, s), value in sorted(datum.mu.items()):
        if x not in vertices or y not in vertices:
            report.fail(f"mu^{system.names[s]}_{{{x},{y}}} names an unknown vertex")
        report.expect(value.bar() == value, f"mu^{system.names[s]}_{{{x},{y}}} = {value} is not bar-invariant")
    for s in system.generators:
        if not algebra.weights.is_zero_weight(s):
            continue
        edges = datum.zero_edges.get(s, {})
        for v in datum.vertices:
            if edges.get(v) not in vertices:
                report.fail(f"zero-weight generator {system.names[s]} has no edge from {v}")
    if report.failed:
        return report
    WGraphModule(algebra, datum).check_relations(report)
    LOG.debug("validate_wgraph: %s (%d comparisons)", report.status.value, report.checked)
    return report


def wgraph_from_ideal_descents(module: ParabolicModule) -> WGraphDatum:
    """
    Vertices D_J with I(x) = {s : T_s m_x has a -m_x or q_s m_{sx} term}, i.e. the
    descents and the third-case generators, and mu = 1 on Bruhat covering pairs
    where exactly one endpoint has s in its set.
    """
    system = module.system
    reps = module.basis()
    names = {sigma: system.format(sigma) for sigma in reps}
    descent_sets: Dict[str, FrozenSet[int]] = {}
    for sigma in reps:
        descent_sets[names[sigma]] = frozenset(
            s for s in system.generators
            if system.classify_parabolic(s, sigma, module.J) in (ParabolicCase.MINUS, ParabolicCase.ZERO)
        )
    one = module.weights.one()
    mu: Dict[Tuple[str, str, int], Scalar] = {}
    for a in reps:
        for b in reps:
            if a == b or abs(a.length - b.length) != 1:
                continue
            low, high = (a, b) if a.length < b.length else (b, a)
            if not system.bruhat_leq(low, high):
                continue
            x, y = names[a], names[b]
            for s in descent_sets[x] - descent_sets[y]:
                mu[(x, y, s)] = one
    return WGraphDatum(vertices=[names[s] for s in reps], I=descent_sets, mu=mu)
