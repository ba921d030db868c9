"""
Check report shared by validators, the section-3 checks and the harness.
"""
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, List, Optional


class Status(str, Enum):
    PASS = "pass"
    FAIL = "fail"
    SKIPPED = "skipped"


# Conventions echoed in every report
CONVENTIONS: Dict[str, str] = {
    "bruhat_reading": "index set 'z < sy' read as Bruhat order restricted to E",
    "outside_index": "R-polynomials with an index outside the representative set are 0",
    "gamma": "Gamma realised as Z^r with lexicographic order; exponents stored doubled",
    "finite_w": "formal sums realised for finite W only",
}


@dataclass
class CheckReport:
    claim: str
    instance: Dict[str, Any] = field(default_factory=dict)
    status: Status = Status.PASS
    witnesses: List[str] = field(default_factory=list)
    notes: List[str] = field(default_factory=list)
    counts: Dict[str, int] = field(default_factory=dict)
    precondition: Optional[str] = None
    checked: int = 0
    elapsed: Optional[float] = None
    witness_limit: int = 5

    @property
    def passed(self) -> bool:
        return self.status == Status.PASS

    @property
    def failed(self) -> bool:
        return self.status == Status.FAIL

    def fail(self, witness: str) -> None:
        if self.status != Status.SKIPPED:
            self.status = Status.FAIL
        if len(self.witnesses) < self.witness_limit:
            self.witnesses.append(witness)

    def expect(self, ok: bool, witness: str) -> bool:
        """Count one comparison; record the witness when it fails."""
        self.checked += 1
        if not ok:
            self.fail(witness)
        return ok

    def skip(self, gate: str, detail: str = "") -> None:
        self.status = Status.SKIPPED
        self.precondition = gate
        if detail:
            self.notes.append(detail)

    def note(self, text: str) -> None:
        if text not in self.notes:
            self.notes.append(text)

    def bump(self, key: str, amount: int = 1) -> None:
        self.counts[key] = self.counts.get(key, 0) + amount

    def absorb(self, other: "CheckReport", prefix: str = "") -> None:
        """Fold another report's outcome into this one."""
        self.checked += other.checked
        for w in other.witnesses:
            self.fail(f"{prefix}{w}")
        if other.failed and not other.witnesses:
            self.fail(f"{prefix}{other.claim} failed")
        for n in other.notes:
            self.note(f"{prefix}{n}")
        for k, v in other.counts.items():
            self.bump(k, v)

    def to_dict(self, include_timing: bool = False) -> Dict[str, Any]:
        out: Dict[str, Any] = {
            "claim": self.claim,
            "instance": self.instance,
            "status": self.status.value,
            "witnesses": list(self.witnesses),
            "notes": list(self.notes),
            "counts": dict(sorted(self.counts.items())),
            "checked": self.checked,
            "conventions": CONVENTIONS,
        }
        if self.precondition:
            out["precondition"] = self.precondition
        if include_timing and self.elapsed is not None:
            out["elapsed_seconds"] = round(self.elapsed, 4)
        return out
