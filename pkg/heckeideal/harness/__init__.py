from .checks import check_hypotheses, run_check, skipped_without_ideal
from .claims import (
    CLAIM_ALIASES,
    CLAIM_SETS,
    CheckSpec,
    ClaimId,
    Scope,
    catalog,
    claim_ref,
    get_claim_set,
    parse_claim,
    validate_claim_names,
)
from .context import InstanceContext
from .gates import ClaimGateResolver, Gate
from .instances import InstancePlan, run_all, summarize

__all__ = [
    "CLAIM_ALIASES",
    "CLAIM_SETS",
    "CheckSpec",
    "ClaimGateResolver",
    "ClaimId",
    "Gate",
    "InstanceContext",
    "InstancePlan",
    "Scope",
    "catalog",
    "check_hypotheses",
    "claim_ref",
    "get_claim_set",
    "parse_claim",
    "run_all",
    "run_check",
    "skipped_without_ideal",
    "summarize",
    "validate_claim_names",
]
