"""
Per-instance state shared by the checks: the algebra, the modules for the
subsets involved and the ideal data, each built on first use.
"""
import logging
from functools import cached_property
from typing import Any, Dict, FrozenSet, Iterable, Optional

from ..config import HarnessConfig
from ..coxeter import CoxeterSystem
from ..errors import PosMismatch
from ..hat_ideal import HatIdeal
from ..hecke import HeckeAlgebra
from ..ideal_module import WGraphIdealDatum
from ..ideals import IdealE, ideal_closure, pos
from ..laurent import WeightFunction
from ..maps import CosetMaps, IdealMaps
from ..parabolic import ParabolicPair, Variant
from ..solver import solve_r_table
from ..wgraph import WGraphDatum, wgraph_from_ideal_descents

LOG = logging.getLogger("heckeideal.harness.context")


class InstanceContext:
    """
    A Coxeter system with weights plus optional J, K and E.

    Supplied r-tables are used as given; otherwise they are solved on demand.
    """

    def __init__(
        self,
        system: CoxeterSystem,
        weights: Optional[WeightFunction] = None,
        config: Optional[HarnessConfig] = None,
        J: Iterable[int] = (),
        K: Optional[Iterable[int]] = None,
        E: Optional[IdealE] = None,
        datum: Optional[WGraphIdealDatum] = None,
        tilde_datum: Optional[WGraphIdealDatum] = None,
        wgraph: Optional[WGraphDatum] = None,
        descent_wgraph: bool = False,
    ):
        self.system = system
        self.weights = weights or WeightFunction.equal(system.rank)
        self.config = config or HarnessConfig()
        self.J: FrozenSet[int] = frozenset(J)
        self.E = E
        self.K: FrozenSet[int] = frozenset(K) if K is not None else frozenset(system.generators)
        if K is None and E is not None:
            try:
                self.K = pos(system, E)
            except PosMismatch:
                LOG.warning("Pos(E) differs from S minus E; keeping K = S")
        self._datum = datum
        self._tilde_datum = tilde_datum
        self._wgraph = wgraph
        self.descent_wgraph = descent_wgraph
        self._pairs: Dict[FrozenSet[int], ParabolicPair] = {}
        self.gate_results: Dict[str, Optional[str]] = {}
        self.tables: Dict[Any, Any] = {}

    @classmethod
    def for_ideal(cls, system: CoxeterSystem, generators: Iterable, J: Iterable[int] = (), **kwargs: Any) -> "InstanceContext":
        return cls(system, J=J, E=ideal_closure(system, generators), **kwargs)

    @cached_property
    def algebra(self) -> HeckeAlgebra:
        return HeckeAlgebra(self.system, self.weights)

    def pair(self, J: Iterable[int]) -> ParabolicPair:
        J = frozenset(J)
        if J not in self._pairs:
            self._pairs[J] = ParabolicPair(self.algebra, J)
        return self._pairs[J]

    @property
    def wgraph(self) -> Optional[WGraphDatum]:
        """The supplied W-graph, else the descent-set graph on D_J when requested."""
        if self._wgraph is None and self.descent_wgraph:
            self._wgraph = wgraph_from_ideal_descents(self.pair(self.J).minus)
        return self._wgraph

    @cached_property
    def coset_maps(self) -> CosetMaps:
        return CosetMaps(self.algebra, self.J, self.K, pair_j=self.pair(self.J), pair_k=self.pair(self.K))

    @cached_property
    def hat_ideal(self) -> HatIdeal:
        return HatIdeal(self.algebra, self.J)

    def _solve(self, variant: Variant) -> WGraphIdealDatum:
        return solve_r_table(
            self.algebra,
            self.E,
            self.J,
            variant=variant,
            max_unknowns=self.config.solver_max_unknowns,
            max_branches=self.config.solver_max_branches,
        )

    @property
    def datum(self) -> WGraphIdealDatum:
        if self._datum is None:
            self._datum = self._solve(Variant.MINUS_ONE)
        return self._datum

    @property
    def tilde_datum(self) -> WGraphIdealDatum:
        if self._tilde_datum is None:
            self._tilde_datum = self._solve(Variant.QS)
        return self._tilde_datum

    @cached_property
    def maps(self) -> IdealMaps:
        return IdealMaps(self.algebra, self.datum, self.tilde_datum)

    def descriptor(self, scope: str) -> Dict[str, Any]:
        names = self.system.names
        out: Dict[str, Any] = {
            "system": self.system.name,
            "weights": [list(self.weights.units(s)) for s in self.system.generators],
        }
        if scope in ("parabolic", "factor", "ideal"):
            out["J"] = [names[s] for s in sorted(self.J)]
        if scope == "factor":
            out["K"] = [names[s] for s in sorted(self.K)]
        if scope == "ideal" and self.E is not None:
            out["E"] = [self.system.format(y) for y in self.E.sorted()]
            out["E_generators"] = [self.system.format(y) for y in self.E.generators]
        return out
