"""
Factorization of D_J through D_K x F_J, where F_J = W_{K minus J}.
"""
import logging
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterable, List, Tuple

from .coxeter import CoxeterSystem, Element
from .errors import BadParams, FactorizationHypothesisViolated

LOG = logging.getLogger("heckeideal.factorization")


@dataclass
class FactorizationReport:
    J: FrozenSet[int]
    K: FrozenSet[int]
    passed: bool = True
    failures: List[str] = field(default_factory=list)
    witnesses: List[Element] = field(default_factory=list)
    d_j: List[Element] = field(default_factory=list)
    d_k: List[Element] = field(default_factory=list)
    f_j: List[Element] = field(default_factory=list)

    def fail(self, message: str, witness: Element = None) -> None:
        self.passed = False
        self.failures.append(message)
        if witness is not None and witness not in self.witnesses:
            self.witnesses.append(witness)


def f_j(system: CoxeterSystem, J: Iterable[int], K: Iterable[int]) -> List[Element]:
    """F_J = W_{K minus J}"""
    return system.parabolic_subgroup(frozenset(K) - frozenset(J))


def check_factorization_property(system: CoxeterSystem, J: Iterable[int], K: Iterable[int]) -> FactorizationReport:
    """
    Check that (alpha, z) -> alpha z maps D_K x F_J bijectively onto D_J with additive lengths.

    Also checks D_K in D_J, F_J in D_J and D_K meet F_J = {e}. Every sigma of
    D_J left uncovered is listed as a witness.
    """
    J, K = frozenset(J), frozenset(K)
    if not J <= K:
        raise BadParams(f"J = {system.format_set(J)} must be contained in K = {system.format_set(K)}")
    report = FactorizationReport(J=J, K=K)
    report.d_j = system.min_coset_reps(J)
    report.d_k = system.min_coset_reps(K)
    report.f_j = f_j(system, J, K)
    d_j = set(report.d_j)

    for alpha in report.d_k:
        if alpha not in d_j:
            report.fail(f"{system.format(alpha)} in D_K but not in D_J", alpha)
    for z in report.f_j:
        if z not in d_j:
            report.fail(f"{system.format(z)} in F_J but not in D_J", z)
    common = set(report.d_k) & set(report.f_j)
    if common != {system.identity}:
        for w in sorted(common - {system.identity}):
            report.fail(f"{system.format(w)} lies in both D_K and F_J", w)

    image: Dict[Element, Tuple[Element, Element]] = {}
    for alpha in report.d_k:
        for z in report.f_j:
            sigma = system.multiply(alpha, z)
            if sigma.length != alpha.length + z.length:
                report.fail(f"{system.format(alpha)}*{system.format(z)} is not length-additive", sigma)
                continue
            if sigma not in d_j:
                report.fail(f"{system.format(alpha)}*{system.format(z)} = {system.format(sigma)} is not in D_J", sigma)
                continue
            if sigma in image:
                report.fail(f"{system.format(sigma)} has two factorizations", sigma)
                continue
            image[sigma] = (alpha, z)
    for sigma in report.d_j:
        if sigma not in image:
            report.fail(f"{system.format(sigma)} in D_J has no factorization in D_K x F_J", sigma)
    LOG.debug(
        "Factorization J=%s K=%s: %s", system.format_set(J), system.format_set(K),
        "pass" if report.passed else f"{len(report.failures)} failures",
    )
    return report


def factorize_via_k(system: CoxeterSystem, sigma: Element, J: Iterable[int], K: Iterable[int]) -> Tuple[Element, Element]:
    """
    Split sigma in D_J as alpha * z with alpha in D_K, z in F_J.

    The only candidate is the classical coset split of sigma for K; it is
    accepted when its W_K part lies in W_{K minus J}.

    Raises:
        FactorizationHypothesisViolated: if the candidate is not admissible
    """
    J, K = frozenset(J), frozenset(K)
    alpha, w_k = system.coset_factorize(sigma, K)
    if not system.in_parabolic(w_k, K - J):
        raise FactorizationHypothesisViolated(
            f"{system.format(sigma)} has no factorization in D_K x F_J "
            f"(K part {system.format(w_k)} is not in W_{system.format_set(K - J)})",
            witnesses=[sigma],
        )
    return alpha, w_k


def factorize_full(system: CoxeterSystem, w: Element, J: Iterable[int], K: Iterable[int]) -> Tuple[Element, Element, Element]:
    """w = alpha * z * w_J with alpha in D_K, z in F_J, w_J in W_J."""
    sigma, w_J = system.coset_factorize(w, J)
    alpha, z = factorize_via_k(system, sigma, J, K)
    return alpha, z, w_J
