"""
Precondition gates and their resolution per claim.

A claim whose gates do not all pass is reported as skipped with the first
failing gate named.
"""
import logging
from enum import Enum
from typing import Callable, Dict, List, Optional, Set

from ..errors import (
    BadReference,
    Inconsistent,
    MissingRTableEntry,
    NoUniqueMax,
    PhiUndefined,
    PosMismatch,
    SolverIncomplete,
)
from ..factorization import check_factorization_property
from ..ideal_module import validate_ideal_module
from ..ideals import pos, split_dk
from .claims import ClaimId
from .context import InstanceContext

LOG = logging.getLogger("heckeideal.harness.gates")


class Gate(str, Enum):
    ORDER = "order-within-limit"
    POSITIVE_WEIGHTS = "positive-weights"
    PHI = "phi-compatible"
    IDEAL_GIVEN = "ideal-given"
    POS = "pos-identity"
    J_IN_K = "reference-subset"
    MAX_SUFFIX = "unique-max-suffix"
    FACTORIZATION = "coset-factorization"
    RTABLE = "rtable-solvable"
    TILDE_RTABLE = "tilde-rtable-solvable"
    WGRAPH_GIVEN = "wgraph-given"


class ClaimGateResolver:
    """Maps each claim to the gates it needs, prerequisites first."""

    # gate -> gates that must pass before it is evaluated
    GATE_DEPENDENCIES: Dict[Gate, List[Gate]] = {
        Gate.ORDER: [],
        Gate.POSITIVE_WEIGHTS: [],
        Gate.PHI: [],
        Gate.IDEAL_GIVEN: [],
        Gate.POS: [Gate.IDEAL_GIVEN],
        Gate.J_IN_K: [],
        Gate.MAX_SUFFIX: [Gate.POS, Gate.J_IN_K],
        Gate.FACTORIZATION: [Gate.J_IN_K],
        Gate.RTABLE: [Gate.POS, Gate.J_IN_K],
        Gate.TILDE_RTABLE: [Gate.RTABLE, Gate.POSITIVE_WEIGHTS],
        Gate.WGRAPH_GIVEN: [],
    }

    GATE_ORDER: List[Gate] = [
        Gate.ORDER,
        Gate.POSITIVE_WEIGHTS,
        Gate.PHI,
        Gate.IDEAL_GIVEN,
        Gate.POS,
        Gate.J_IN_K,
        Gate.MAX_SUFFIX,
        Gate.FACTORIZATION,
        Gate.RTABLE,
        Gate.TILDE_RTABLE,
        Gate.WGRAPH_GIVEN,
    ]

    _IDEAL_MAPS = [Gate.MAX_SUFFIX, Gate.RTABLE, Gate.TILDE_RTABLE]
    _R_TABLES = [Gate.POSITIVE_WEIGHTS]

    CLAIM_GATES: Dict[ClaimId, List[Gate]] = {
        ClaimId.HECKE_AXIOMS: [],
        ClaimId.PARABOLIC_MODULE_AXIOMS: [],
        ClaimId.PARABOLIC_DUALITY: [Gate.PHI],
        ClaimId.RPOLY_ORACLE: _R_TABLES,
        ClaimId.WGRAPH_REPRESENTATION: [Gate.WGRAPH_GIVEN],
        ClaimId.POS_IDENTITY: [],
        ClaimId.IDEAL_MODULE: [Gate.RTABLE],
        ClaimId.IDEAL_DUALITY: [Gate.PHI, Gate.RTABLE, Gate.TILDE_RTABLE],
        ClaimId.MAX_SUFFIX: [Gate.POS, Gate.J_IN_K],
        ClaimId.LAMBDA_BRANCH_TABLE: [Gate.MAX_SUFFIX, Gate.RTABLE],
        ClaimId.LAMBDA_BAR: [Gate.MAX_SUFFIX, Gate.RTABLE],
        ClaimId.LAMBDA_DUALITY_SQUARE: [Gate.PHI] + _IDEAL_MAPS,
        ClaimId.COSET_FACTORIZATION: [Gate.J_IN_K],
        ClaimId.LAMBDA_K_LINEARITY: [Gate.FACTORIZATION],
        ClaimId.LAMBDA_K_BASIS: [Gate.FACTORIZATION],
        ClaimId.LAMBDA_K_BAR: [Gate.FACTORIZATION],
        ClaimId.LAMBDA_K_DUALITY_SQUARE: [Gate.PHI, Gate.FACTORIZATION],
        ClaimId.NU_MAP: [Gate.PHI, Gate.FACTORIZATION] + _IDEAL_MAPS,
        ClaimId.LEFT_IDEAL: [],
        ClaimId.MU_ISOMORPHISM: [],
        ClaimId.IDEAL_RPOLY_VIA_PARABOLIC: _R_TABLES + [Gate.FACTORIZATION] + _IDEAL_MAPS,
        ClaimId.TILDE_IDEAL_RPOLY_VIA_PARABOLIC: _R_TABLES + [Gate.FACTORIZATION] + _IDEAL_MAPS,
        ClaimId.IDEAL_RPOLY_VIA_K: _R_TABLES + _IDEAL_MAPS,
        ClaimId.TILDE_IDEAL_RPOLY_VIA_K: _R_TABLES + _IDEAL_MAPS,
        ClaimId.K_RPOLY_VIA_J: _R_TABLES + [Gate.FACTORIZATION],
        ClaimId.TILDE_K_RPOLY_VIA_J: _R_TABLES + [Gate.FACTORIZATION],
    }

    @classmethod
    def resolve(cls, claim: ClaimId) -> List[Gate]:
        """All gates for the claim, prerequisites included, in evaluation order."""
        required: Set[Gate] = {Gate.ORDER}

        def add_with_deps(gate: Gate) -> None:
            if gate in required:
                return
            for dep in cls.GATE_DEPENDENCIES[gate]:
                add_with_deps(dep)
            required.add(gate)

        for gate in cls.CLAIM_GATES[claim]:
            add_with_deps(gate)
        return [g for g in cls.GATE_ORDER if g in required]

    @classmethod
    def first_failure(cls, claim: ClaimId, ctx: InstanceContext) -> Optional[Gate]:
        for gate in cls.resolve(claim):
            if evaluate_gate(gate, ctx) is not None:
                return gate
        return None


def _order(ctx: InstanceContext) -> Optional[str]:
    order = ctx.system.order()
    if order > ctx.config.max_order:
        return f"|W| = {order} exceeds the limit {ctx.config.max_order}"
    return None


def _positive(ctx: InstanceContext) -> Optional[str]:
    zero = [ctx.system.names[s] for s in ctx.system.generators if ctx.weights.is_zero_weight(s)]
    return f"L(s) = 0 for {', '.join(zero)}" if zero else None


def _phi(ctx: InstanceContext) -> Optional[str]:
    try:
        ctx.weights.require_phi()
    except PhiUndefined as exc:
        return str(exc)
    return None


def _ideal_given(ctx: InstanceContext) -> Optional[str]:
    return None if ctx.E is not None else "no ideal E was given"


def _wgraph_given(ctx: InstanceContext) -> Optional[str]:
    return None if ctx.wgraph is not None else "no W-graph was supplied (use a W-graph file or the descent-set graph)"


def _pos(ctx: InstanceContext) -> Optional[str]:
    try:
        pos(ctx.system, ctx.E)
    except PosMismatch as exc:
        return str(exc)
    return None


def _j_in_k(ctx: InstanceContext) -> Optional[str]:
    if ctx.J <= ctx.K:
        return None
    return f"J = {ctx.system.format_set(ctx.J)} is not contained in K = {ctx.system.format_set(ctx.K)}"


def _max_suffix(ctx: InstanceContext) -> Optional[str]:
    try:
        split_dk(ctx.system, ctx.E, ctx.J)
    except (NoUniqueMax, BadReference) as exc:
        return str(exc)
    return None


def _factorization(ctx: InstanceContext) -> Optional[str]:
    report = check_factorization_property(ctx.system, ctx.J, ctx.K)
    if report.passed:
        return None
    witnesses = ", ".join(ctx.system.format(w) for w in report.witnesses[: ctx.config.witness_limit])
    return f"{report.failures[0]} (witnesses: {witnesses})"


def _rtable(ctx: InstanceContext, tilde: bool) -> Optional[str]:
    try:
        datum = ctx.tilde_datum if tilde else ctx.datum
    except (SolverIncomplete, Inconsistent) as exc:
        return f"{exc} {exc.residue[:3]}"
    except (BadReference, MissingRTableEntry) as exc:
        return str(exc)
    report = validate_ideal_module(ctx.algebra, datum, ctx.config.witness_limit)
    if not report.passed:
        return f"supplied r-table fails validation: {report.witnesses[0] if report.witnesses else report.status.value}"
    return None


_EVALUATORS: Dict[Gate, Callable[[InstanceContext], Optional[str]]] = {
    Gate.ORDER: _order,
    Gate.POSITIVE_WEIGHTS: _positive,
    Gate.PHI: _phi,
    Gate.IDEAL_GIVEN: _ideal_given,
    Gate.POS: _pos,
    Gate.J_IN_K: _j_in_k,
    Gate.MAX_SUFFIX: _max_suffix,
    Gate.FACTORIZATION: _factorization,
    Gate.RTABLE: lambda ctx: _rtable(ctx, tilde=False),
    Gate.TILDE_RTABLE: lambda ctx: _rtable(ctx, tilde=True),
    Gate.WGRAPH_GIVEN: _wgraph_given,
}


def evaluate_gate(gate: Gate, ctx: InstanceContext) -> Optional[str]:
    """None when the gate passes, otherwise a description of the failure (cached per context)."""
    if gate.value not in ctx.gate_results:
        result = _EVALUATORS[gate](ctx)
        ctx.gate_results[gate.value] = result
        if result is not None:
            LOG.debug("Gate %s failed: %s", gate.value, result)
    return ctx.gate_results[gate.value]
