"""
Instance enumeration for `verify --all`.

System claims run once, parabolic claims for every J, factor claims for
every J <= K, and ideal claims for every principal ideal E with J <= Pos(E).
Contexts are shared between claims of the same instance so modules and
r-tables are built once.
"""
import logging
from itertools import combinations
from typing import Dict, FrozenSet, Iterable, Iterator, List, Optional, Tuple

from ..config import HarnessConfig
from ..coxeter import CoxeterSystem
from ..errors import PosMismatch
from ..ideals import IdealE, pos, principal_ideals
from ..laurent import WeightFunction
from ..report import CheckReport
from .checks import run_check
from .claims import CLAIM_SCOPES, ClaimId, Scope
from .context import InstanceContext

LOG = logging.getLogger("heckeideal.harness.instances")


def subsets(generators: Iterable[int]) -> List[FrozenSet[int]]:
    """All subsets, by size then lexicographically."""
    items = sorted(generators)
    return [frozenset(c) for k in range(len(items) + 1) for c in combinations(items, k)]


def distinct_principal_ideals(system: CoxeterSystem) -> List[IdealE]:
    seen = set()
    out = []
    for E in principal_ideals(system):
        if E.members not in seen:
            seen.add(E.members)
            out.append(E)
    return out


class InstancePlan:
    """Builds and caches one context per instance key."""

    def __init__(
        self,
        system: CoxeterSystem,
        weights: Optional[WeightFunction] = None,
        config: Optional[HarnessConfig] = None,
        descent_wgraph: bool = False,
    ):
        self.system = system
        self.weights = weights or WeightFunction.equal(system.rank)
        self.config = config or HarnessConfig()
        self.descent_wgraph = descent_wgraph
        self._contexts: Dict[Tuple, InstanceContext] = {}

    def _context(self, key: Tuple, **kwargs) -> InstanceContext:
        if key not in self._contexts:
            self._contexts[key] = InstanceContext(self.system, self.weights, self.config, **kwargs)
        return self._contexts[key]

    def instances(self, claim: ClaimId) -> Iterator[InstanceContext]:
        scope = CLAIM_SCOPES[claim]
        S = frozenset(self.system.generators)
        if scope == Scope.SYSTEM:
            yield self._context(("system",))
        elif scope == Scope.PARABOLIC:
            for J in subsets(S):
                yield self._context(("parabolic", J), J=J, descent_wgraph=self.descent_wgraph)
        elif scope == Scope.FACTOR:
            for K in subsets(S):
                for J in subsets(K):
                    yield self._context(("factor", J, K), J=J, K=K)
        else:
            for E in distinct_principal_ideals(self.system):
                try:
                    K = pos(self.system, E)
                except PosMismatch:
                    LOG.warning("Pos(E) mismatch for <%s>; ideal claims skipped", self.system.format(E.maximal()))
                    continue
                for J in subsets(K):
                    yield self._context(("ideal", E.members, J), J=J, E=E)


def run_all(plan: InstancePlan, claims: Iterable[ClaimId]) -> List[CheckReport]:
    """Every requested claim on every instance, in catalog order."""
    wanted = set(claims)
    reports: List[CheckReport] = []
    for claim in ClaimId:
        if claim not in wanted:
            continue
        count = 0
        for ctx in plan.instances(claim):
            reports.append(run_check(claim, ctx))
            count += 1
        LOG.info("%s: %d instances", claim.value, count)
    return reports


def summarize(reports: Iterable[CheckReport]) -> Dict[str, int]:
    out = {"pass": 0, "fail": 0, "skipped": 0}
    for r in reports:
        out[r.status.value] += 1
    return out
