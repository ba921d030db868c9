"""
Maps from parabolic modules onto ideal modules.

    lambda_J : M^K -> M(E_J, L)     m_alpha -> q_x Gamma_{y_max}   (alpha in D_K^1)
                                    m_alpha -> q_alpha Gamma_e     (alpha in D_K^2)
    lambda_K : M^J -> M^K           m_sigma -> eps_z m_alpha       (sigma = alpha z)
    nu       : H -> M(E_J, L)       T_w -> eps_z eps_{w_J} lambda_J(m_alpha)

with K = Pos(E) and the q_s-variant analogues lambda~_J, lambda~_K.
"""
import logging
from typing import Dict, Iterable, Optional, Tuple

from .coxeter import Element, ParabolicCase
from .errors import FactorizationHypothesisViolated
from .factorization import FactorizationReport, check_factorization_property, factorize_full, factorize_via_k
from .hecke import HeckeAlgebra, HeckeElt
from .ideal_module import IdealModule, IdealPair, WGraphIdealDatum
from .ideals import IdealCase, SuffixSplit, _case, split_dk
from .laurent import eps, q_of
from .linear import LinearCombination
from .parabolic import ParabolicPair

LOG = logging.getLogger("heckeideal.maps")


class Branch:
    """Labels for the action of T_s on lambda_J(m_alpha)."""
    COMMUTES = "in-E-not-weak-ascent"        # T_s lambda(m)
    WA_INTO_D1 = "in-E-weak-ascent-into-D1"  # q_s lambda(m)
    WA_OUT_OF_DK = "in-E-weak-ascent-out-of-DK"  # -lambda(m)
    MOVES = "outside-E-moves"                # q_s lambda(m)
    FIXED = "outside-E-fixed"                # -lambda(m)
    UNCOVERED = "uncovered"


class CosetMaps:
    """lambda_K and lambda~_K for a pair J <= K; no ideal involved."""

    def __init__(
        self,
        algebra: HeckeAlgebra,
        J: Iterable[int],
        K: Iterable[int],
        pair_j: Optional[ParabolicPair] = None,
        pair_k: Optional[ParabolicPair] = None,
    ):
        self.algebra = algebra
        self.system = algebra.system
        self.weights = algebra.weights
        self.J = frozenset(J)
        self.K = frozenset(K)
        self.pair_j = pair_j or ParabolicPair(algebra, self.J)
        self.pair_k = pair_k or ParabolicPair(algebra, self.K)
        self._factorization: Optional[FactorizationReport] = None

    def factorization(self) -> FactorizationReport:
        if self._factorization is None:
            self._factorization = check_factorization_property(self.system, self.J, self.K)
            if not self._factorization.passed:
                LOG.debug("D_J = D_K x F_J fails for J = %s, K = %s", self.system.format_set(self.J), self.system.format_set(self.K))
        return self._factorization

    def require_factorization(self) -> None:
        report = self.factorization()
        if not report.passed:
            raise FactorizationHypothesisViolated(
                f"D_J does not factor as D_K x F_J: {report.failures[0]}",
                witnesses=report.witnesses,
            )

    def lambda_k(self, m: LinearCombination) -> LinearCombination:
        """
        Raises:
            FactorizationHypothesisViolated: if D_J does not factor through D_K x F_J
        """
        self.require_factorization()
        total = self.pair_k.minus.zero()
        for sigma, coeff in m.items():
            alpha, z = factorize_via_k(self.system, sigma, self.J, self.K)
            total = total + self.pair_k.minus.m(alpha).scale(coeff * eps(z))
        return total

    def lambda_k_tilde(self, m: LinearCombination) -> LinearCombination:
        self.require_factorization()
        total = self.pair_k.tilde.zero()
        for sigma, coeff in m.items():
            alpha, z = factorize_via_k(self.system, sigma, self.J, self.K)
            total = total + self.pair_k.tilde.m(alpha).scale(coeff * q_of(z, self.weights))
        return total


class IdealMaps:
    """
    All maps attached to one W-graph ideal datum.

    The q_s-variant datum is optional; the tilde maps and delta need it.
    """

    def __init__(
        self,
        algebra: HeckeAlgebra,
        datum: WGraphIdealDatum,
        tilde_datum: Optional[WGraphIdealDatum] = None,
    ):
        self.algebra = algebra
        self.system = algebra.system
        self.weights = algebra.weights
        self.datum = datum
        self.ideal = IdealModule(algebra, datum)
        self.E = datum.E
        self.J = self.ideal.J
        self.K = self.ideal.K
        self.split: SuffixSplit = split_dk(self.system, self.E, self.J)
        self.coset = CosetMaps(algebra, self.J, self.K)
        self.pair_j = self.coset.pair_j
        self.pair_k = self.coset.pair_k
        self.ideal_pair: Optional[IdealPair] = None
        if tilde_datum is not None:
            self.ideal_pair = IdealPair(algebra, datum, tilde_datum)

    @property
    def ideal_tilde(self) -> IdealModule:
        if self.ideal_pair is None:
            raise ValueError("No q_s-variant r-table was supplied for this ideal")
        return self.ideal_pair.tilde

    def factorization(self) -> FactorizationReport:
        return self.coset.factorization()

    def require_factorization(self) -> None:
        self.coset.require_factorization()

    # -- lambda_J ------------------------------------------------------

    def _lambda_j_basis(self, alpha: Element, tilde: bool = False) -> LinearCombination:
        target = self.ideal_tilde if tilde else self.ideal
        pair = self.split.table.get(alpha)
        if pair is not None:
            x, y = pair
            factor = eps(x) if tilde else q_of(x, self.weights)
            return target.gamma(y).scale(factor)
        factor = eps(alpha) if tilde else q_of(alpha, self.weights)
        return target.gamma(self.system.identity).scale(factor)

    def lambda_j(self, m: LinearCombination) -> LinearCombination:
        total = self.ideal.zero()
        for alpha, coeff in m.items():
            total = total + self._lambda_j_basis(alpha).scale(coeff)
        return total

    def lambda_j_tilde(self, m: LinearCombination) -> LinearCombination:
        total = self.ideal_tilde.zero()
        for alpha, coeff in m.items():
            total = total + self._lambda_j_basis(alpha, tilde=True).scale(coeff)
        return total

    def branch(self, s: int, alpha: Element) -> Tuple[str, Optional[LinearCombination]]:
        """Predicted value of lambda_J(T_s m_alpha) for alpha in D_K."""
        lam = self._lambda_j_basis(alpha)
        q = self.weights.q(s)
        if alpha in self.E:
            if _case(self.system, s, alpha, self.E, self.J) != IdealCase.WA:
                return Branch.COMMUTES, self.ideal.act_gen(s, lam)
            s_alpha = self.system.left_mul(s, alpha)
            if s_alpha in self.split.table:
                return Branch.WA_INTO_D1, lam.scale(q)
            if not self.system.in_coset_reps(s_alpha, self.K):
                return Branch.WA_OUT_OF_DK, -lam
            return Branch.UNCOVERED, None
        case = self.system.classify_parabolic(s, alpha, self.K)
        if case == ParabolicCase.ZERO:
            return Branch.FIXED, -lam
        return Branch.MOVES, lam.scale(q)

    # -- lambda_K ------------------------------------------------------

    def lambda_k(self, m: LinearCombination) -> LinearCombination:
        return self.coset.lambda_k(m)

    def lambda_k_tilde(self, m: LinearCombination) -> LinearCombination:
        return self.coset.lambda_k_tilde(m)

    # -- nu ------------------------------------------------------------

    def nu(self, h: HeckeElt) -> LinearCombination:
        """T_w -> eps_z eps_{w_J} lambda_J(m_alpha) along w = alpha z w_J."""
        self.require_factorization()
        total = self.ideal.zero()
        for w, coeff in h.items():
            alpha, z, w_J = factorize_full(self.system, w, self.J, self.K)
            total = total + self._lambda_j_basis(alpha).scale(coeff * (eps(z) * eps(w_J)))
        return total

    def nu_composite(self, h: HeckeElt) -> LinearCombination:
        return self.lambda_j(self.lambda_k(self.pair_j.minus.varphi(h)))

    def nu_dual_composite(self, h: HeckeElt) -> LinearCombination:
        """lambda~_J o lambda~_K o varphi~_J o Phi"""
        return self.lambda_j_tilde(self.lambda_k_tilde(self.pair_j.tilde.varphi(self.algebra.phi(h))))

    def delta(self, m: LinearCombination) -> LinearCombination:
        if self.ideal_pair is None:
            raise ValueError("No q_s-variant r-table was supplied for this ideal")
        return self.ideal_pair.delta(m)

    def describe_split(self) -> Dict[str, object]:
        fmt = self.system.format
        return {
            "K": [self.system.names[s] for s in sorted(self.K)],
            "D_K^1": {fmt(a): [fmt(x), fmt(y)] for a, (x, y) in sorted(self.split.table.items())},
            "D_K^2": [fmt(a) for a in self.split.d2],
            "E_bar": [fmt(x) for x in self.split.e_bar],
        }
