"""
Exception hierarchy for the Hecke / W-graph-ideal toolkit.

Everything derives from HeckeIdealError. Errors caused by bad input values
also derive from ValueError, so callers written against the builtin keep
working.
"""
from typing import Any, List, Optional


class HeckeIdealError(Exception):
    """Base class for all package errors"""


class ConfigError(HeckeIdealError, ValueError):
    """A system, ideal, r-table or W-graph file could not be loaded"""


class InvalidMatrix(HeckeIdealError, ValueError):
    """Coxeter matrix is not symmetric, has a bad diagonal or a bad entry"""


class InfiniteOrTooLarge(HeckeIdealError):
    """Positive-root closure exceeded the configured cap"""


class InvalidWeights(HeckeIdealError, ValueError):
    """Weight function violates L(s) >= 0 or conjugacy constancy"""


class PhiUndefined(HeckeIdealError):
    """The sign map on scalars is not defined for these weights"""


class NotACosetRep(HeckeIdealError, ValueError):
    """Element is not a minimal left coset representative for J"""


class PosMismatch(HeckeIdealError):
    """Pos(E) differs from the generators outside E"""


class BadReference(HeckeIdealError, ValueError):
    """Reference subset J is not contained in Pos(E)"""


class NoUniqueMax(HeckeIdealError):
    """The suffixes of alpha lying in E have no dominating maximum"""

    def __init__(self, message: str, alpha: Any = None):
        super().__init__(message)
        self.alpha = alpha


class FactorizationHypothesisViolated(HeckeIdealError):
    """D_K x F_J does not factor D_J with additive lengths"""

    def __init__(self, message: str, witnesses: Optional[List[Any]] = None):
        super().__init__(message)
        self.witnesses = list(witnesses or [])


class MissingRTableEntry(HeckeIdealError, KeyError):
    """A weak-ascent case has no structure polynomials"""


class SolverIncomplete(HeckeIdealError):
    """The r-table solver stalled on nonlinear constraints"""

    def __init__(self, message: str, residue: Optional[List[str]] = None):
        super().__init__(message)
        self.residue = list(residue or [])


class Inconsistent(HeckeIdealError):
    """The r-table constraints have no admissible solution"""

    def __init__(self, message: str, residue: Optional[List[str]] = None):
        super().__init__(message)
        self.residue = list(residue or [])


class NotScalarMultiple(HeckeIdealError):
    """T_z T_y m_e is not supported on the single basis vector m_z"""


class UnknownClaim(HeckeIdealError, ValueError):
    """Claim id is not in the catalog"""


class BadParams(HeckeIdealError, ValueError):
    """Parameters do not fit the requested claim"""
