"""
Claim catalog and named claim sets for selective verification.
"""
from enum import Enum
from typing import Dict, List, Optional, Set

from pydantic import BaseModel, Field

from ..errors import UnknownClaim


class ClaimId(str, Enum):
    """Every identity the harness can verify"""
    HECKE_AXIOMS = "hecke-axioms"
    PARABOLIC_MODULE_AXIOMS = "parabolic-module-axioms"
    PARABOLIC_DUALITY = "parabolic-duality"
    RPOLY_ORACLE = "rpoly-oracle"
    WGRAPH_REPRESENTATION = "wgraph-representation"
    POS_IDENTITY = "pos-identity"
    IDEAL_MODULE = "ideal-module"
    IDEAL_DUALITY = "ideal-duality"
    MAX_SUFFIX = "max-suffix"
    LAMBDA_BRANCH_TABLE = "lambda-branch-table"
    LAMBDA_BAR = "lambda-bar"
    LAMBDA_DUALITY_SQUARE = "lambda-duality-square"
    COSET_FACTORIZATION = "coset-factorization"
    LAMBDA_K_LINEARITY = "lambda-k-linearity"
    LAMBDA_K_BASIS = "lambda-k-basis"
    LAMBDA_K_BAR = "lambda-k-bar"
    LAMBDA_K_DUALITY_SQUARE = "lambda-k-duality-square"
    NU_MAP = "nu-map"
    LEFT_IDEAL = "left-ideal"
    MU_ISOMORPHISM = "mu-isomorphism"
    IDEAL_RPOLY_VIA_PARABOLIC = "ideal-rpoly-via-parabolic"
    TILDE_IDEAL_RPOLY_VIA_PARABOLIC = "tilde-ideal-rpoly-via-parabolic"
    IDEAL_RPOLY_VIA_K = "ideal-rpoly-via-k"
    TILDE_IDEAL_RPOLY_VIA_K = "tilde-ideal-rpoly-via-k"
    K_RPOLY_VIA_J = "k-rpoly-via-j"
    TILDE_K_RPOLY_VIA_J = "tilde-k-rpoly-via-j"


class Scope(str, Enum):
    """What an instance of a claim is parameterised by"""
    SYSTEM = "system"        # the Coxeter system and weights only
    PARABOLIC = "parabolic"  # one subset J
    FACTOR = "factor"        # a pair J <= K
    IDEAL = "ideal"          # an ideal E and J <= Pos(E)


CLAIM_SCOPES: Dict[ClaimId, Scope] = {
    ClaimId.HECKE_AXIOMS: Scope.SYSTEM,
    ClaimId.RPOLY_ORACLE: Scope.SYSTEM,
    ClaimId.POS_IDENTITY: Scope.SYSTEM,
    ClaimId.WGRAPH_REPRESENTATION: Scope.PARABOLIC,
    ClaimId.PARABOLIC_MODULE_AXIOMS: Scope.PARABOLIC,
    ClaimId.PARABOLIC_DUALITY: Scope.PARABOLIC,
    ClaimId.LEFT_IDEAL: Scope.PARABOLIC,
    ClaimId.MU_ISOMORPHISM: Scope.PARABOLIC,
    ClaimId.COSET_FACTORIZATION: Scope.FACTOR,
    ClaimId.LAMBDA_K_LINEARITY: Scope.FACTOR,
    ClaimId.LAMBDA_K_BASIS: Scope.FACTOR,
    ClaimId.LAMBDA_K_BAR: Scope.FACTOR,
    ClaimId.LAMBDA_K_DUALITY_SQUARE: Scope.FACTOR,
    ClaimId.K_RPOLY_VIA_J: Scope.FACTOR,
    ClaimId.TILDE_K_RPOLY_VIA_J: Scope.FACTOR,
    ClaimId.IDEAL_MODULE: Scope.IDEAL,
    ClaimId.IDEAL_DUALITY: Scope.IDEAL,
    ClaimId.MAX_SUFFIX: Scope.IDEAL,
    ClaimId.LAMBDA_BRANCH_TABLE: Scope.IDEAL,
    ClaimId.LAMBDA_BAR: Scope.IDEAL,
    ClaimId.LAMBDA_DUALITY_SQUARE: Scope.IDEAL,
    ClaimId.NU_MAP: Scope.IDEAL,
    ClaimId.IDEAL_RPOLY_VIA_PARABOLIC: Scope.IDEAL,
    ClaimId.TILDE_IDEAL_RPOLY_VIA_PARABOLIC: Scope.IDEAL,
    ClaimId.IDEAL_RPOLY_VIA_K: Scope.IDEAL,
    ClaimId.TILDE_IDEAL_RPOLY_VIA_K: Scope.IDEAL,
}

# One-line statement of each claim, printed by `verify --list`
CLAIM_ANCHORS: Dict[ClaimId, str] = {
    ClaimId.HECKE_AXIOMS: "Quadratic and braid relations; bar and Phi are commuting involutions",
    ClaimId.PARABOLIC_MODULE_AXIOMS: "M^J and M~^J are H-modules with a compatible bar; phi_J(h) = h m_e",
    ClaimId.PARABOLIC_DUALITY: "theta_J o phi_J = phi~_J o Phi, theta_J commutes with bar, eta_J inverts theta_J",
    ClaimId.RPOLY_ORACLE: "Parabolic R-polynomials for J = {} equal the classical descent recursion",
    ClaimId.WGRAPH_REPRESENTATION: "The W-graph operators tau_s satisfy the Hecke relations",
    ClaimId.POS_IDENTITY: "Pos(E) = S minus E for every principal ideal",
    ClaimId.IDEAL_MODULE: "The ideal module action with its r-table is an H-module with a compatible bar",
    ClaimId.IDEAL_DUALITY: "delta: M(E_J) -> M~(E_J) is Phi-semilinear, bar-compatible and inverted by rho",
    ClaimId.MAX_SUFFIX: "Each alpha in D_K with a suffix in E factors as x * y_max with a dominating maximum",
    ClaimId.LAMBDA_BRANCH_TABLE: "lambda_J(T_s m_alpha) follows the five-way branch table",
    ClaimId.LAMBDA_BAR: "lambda_J commutes with the bar involutions",
    ClaimId.LAMBDA_DUALITY_SQUARE: "delta o lambda_J = lambda~_J o theta_K",
    ClaimId.COSET_FACTORIZATION: "D_K x F_J -> D_J, (alpha, z) -> alpha z is a length-additive bijection",
    ClaimId.LAMBDA_K_LINEARITY: "lambda_K and lambda~_K are H-linear",
    ClaimId.LAMBDA_K_BASIS: "lambda_K(m_sigma) = T_sigma m^K_e",
    ClaimId.LAMBDA_K_BAR: "lambda_K and lambda~_K commute with bar",
    ClaimId.LAMBDA_K_DUALITY_SQUARE: "theta_K o lambda_K = lambda~_K o theta_J",
    ClaimId.NU_MAP: "nu = lambda_J o lambda_K o phi_J, nu commutes with bar, and the dual composite agrees",
    ClaimId.LEFT_IDEAL: "T_s Q_z follows the three parabolic cases, so Q_J is a left ideal",
    ClaimId.MU_ISOMORPHISM: "mu: M^J -> Q_J is an injective H-map with L^z_y = eps_y and N^z_y = eps_y q_y^-1",
    ClaimId.IDEAL_RPOLY_VIA_PARABOLIC: "R_{x,y} on E is a signed sum of R^J over E-bar, F_J and D_K^2",
    ClaimId.TILDE_IDEAL_RPOLY_VIA_PARABOLIC: "R~_{x,y} on E is a sum of eps_z q_z R~^J",
    ClaimId.IDEAL_RPOLY_VIA_K: "R_{x,y} on E is a signed sum of R^K over E-bar and D_K^2",
    ClaimId.TILDE_IDEAL_RPOLY_VIA_K: "R~_{x,y} on E is a plain sum of R~^K",
    ClaimId.K_RPOLY_VIA_J: "R^K_{alpha,beta} = sum over z in F_J of R^J_{alpha z, beta}",
    ClaimId.TILDE_K_RPOLY_VIA_J: "R~^K_{alpha,beta} = sum over z in F_J of eps_z q_z R~^J_{alpha z, beta}",
}

# Short reference ids accepted wherever a claim id is; the first one is the
# anchor printed by `verify --list`
CLAIM_ALIASES: Dict[ClaimId, List[str]] = {
    ClaimId.HECKE_AXIOMS: ["sec1"],
    ClaimId.PARABOLIC_MODULE_AXIOMS: ["sec1.1"],
    ClaimId.PARABOLIC_DUALITY: ["prop1.1"],
    ClaimId.RPOLY_ORACLE: [],
    ClaimId.WGRAPH_REPRESENTATION: ["def1.2"],
    ClaimId.POS_IDENTITY: ["sec1.2"],
    ClaimId.IDEAL_MODULE: ["prop1.5"],
    ClaimId.IDEAL_DUALITY: ["prop1.6"],
    ClaimId.MAX_SUFFIX: ["thm2.1"],
    ClaimId.LAMBDA_BRANCH_TABLE: ["thm2.2"],
    ClaimId.LAMBDA_BAR: ["cor2.4"],
    ClaimId.LAMBDA_DUALITY_SQUARE: ["thm2.6"],
    ClaimId.COSET_FACTORIZATION: ["thm2.8"],
    ClaimId.LAMBDA_K_LINEARITY: ["thm2.9"],
    ClaimId.LAMBDA_K_BASIS: ["cor2.10"],
    ClaimId.LAMBDA_K_BAR: ["cor2.11", "rem2.11"],
    ClaimId.LAMBDA_K_DUALITY_SQUARE: ["thm2.12"],
    ClaimId.NU_MAP: ["thm2.13"],
    ClaimId.LEFT_IDEAL: ["prop3.1"],
    ClaimId.MU_ISOMORPHISM: ["thm3.2"],
    ClaimId.IDEAL_RPOLY_VIA_PARABOLIC: ["thm4.3"],
    ClaimId.TILDE_IDEAL_RPOLY_VIA_PARABOLIC: ["rem4.4"],
    ClaimId.IDEAL_RPOLY_VIA_K: ["thm4.6"],
    ClaimId.TILDE_IDEAL_RPOLY_VIA_K: ["rem4.7"],
    ClaimId.K_RPOLY_VIA_J: ["thm4.8"],
    ClaimId.TILDE_K_RPOLY_VIA_J: ["rem4.9"],
}

_ALIAS_LOOKUP: Dict[str, ClaimId] = {a: c for c, aliases in CLAIM_ALIASES.items() for a in aliases}

_REF_KINDS = {"sec": "§", "def": "Def ", "prop": "Prop ", "thm": "Thm ", "cor": "Cor ", "rem": "Rem "}

# Predefined claim sets
CLAIM_SETS: Dict[str, List[ClaimId]] = {
    "hecke": [ClaimId.HECKE_AXIOMS, ClaimId.RPOLY_ORACLE],
    "parabolic": [
        ClaimId.PARABOLIC_MODULE_AXIOMS,
        ClaimId.PARABOLIC_DUALITY,
        ClaimId.WGRAPH_REPRESENTATION,
    ],
    "section3": [ClaimId.LEFT_IDEAL, ClaimId.MU_ISOMORPHISM],
    "factor": [c for c, s in CLAIM_SCOPES.items() if s == Scope.FACTOR],
    "ideal": [c for c, s in CLAIM_SCOPES.items() if s == Scope.IDEAL],
    "all": list(ClaimId),
}

# Remark identities whose R~ normalization is undetermined; both are evaluated
NORMALIZATION_PROBES = {
    ClaimId.TILDE_IDEAL_RPOLY_VIA_PARABOLIC,
    ClaimId.TILDE_IDEAL_RPOLY_VIA_K,
    ClaimId.TILDE_K_RPOLY_VIA_J,
}


class CheckSpec(BaseModel):
    """One verification request as read from the command line or a batch file."""
    claim: str = Field(..., description="Claim identifier from the catalog, or a reference id such as thm4.8")
    J: Optional[List[str]] = Field(None, description="Reference subset J as generator names")
    K: Optional[List[str]] = Field(None, description="Subset K containing J (factor claims; default S)")
    E: Optional[List[str]] = Field(None, description="Words generating the ideal E")
    normalization: Optional[str] = Field(None, description="R~ normalization: signed or unsigned")


def parse_claim(name: str) -> ClaimId:
    """
    Accepts a catalog id or one of its short reference ids (e.g. "thm4.8").

    Raises:
        UnknownClaim: listing the valid identifiers
    """
    key = name.strip().lower()
    if key in _ALIAS_LOOKUP:
        return _ALIAS_LOOKUP[key]
    try:
        return ClaimId(key)
    except ValueError:
        raise UnknownClaim(
            f"Unknown claim '{name}'. Valid options: {', '.join(c.value for c in ClaimId)}, "
            f"or a reference id: {', '.join(_ALIAS_LOOKUP)}"
        )


def claim_ref(claim: ClaimId) -> str:
    """Printed anchor of a claim, "Thm 4.8" for thm4.8; "-" when it has none."""
    aliases = CLAIM_ALIASES[claim]
    if not aliases:
        return "-"
    kind = aliases[0].rstrip("0123456789.")
    return f"{_REF_KINDS[kind]}{aliases[0][len(kind):]}"


def get_claim_set(name: str) -> List[ClaimId]:
    if name not in CLAIM_SETS:
        raise ValueError(f"Unknown claim set '{name}'. Valid options: {', '.join(CLAIM_SETS.keys())}")
    return list(CLAIM_SETS[name])


def validate_claim_names(names: Set[str]) -> List[ClaimId]:
    """Claim names to ClaimIds in catalog order."""
    parsed = {parse_claim(n) for n in names}
    return [c for c in ClaimId if c in parsed]


def catalog() -> List[Dict[str, str]]:
    return [
        {
            "claim": c.value,
            "ref": claim_ref(c),
            "aliases": ", ".join(CLAIM_ALIASES[c]),
            "scope": CLAIM_SCOPES[c].value,
            "statement": CLAIM_ANCHORS[c],
        }
        for c in ClaimId
    ]
