"""
Exhaustive checks on rank-three and larger dihedral systems: A3, B3 with
equal and unequal weights, I2(5) and I2(7).
"""
import pytest
import sys
from pathlib import Path

# Add parent directory to path for imports
sys.path.insert(0, str(Path(__file__).parent.parent))

from heckeideal.coxeter import build_system
from heckeideal.harness import InstanceContext, run_check
from heckeideal.harness.instances import subsets
from heckeideal.hecke import HeckeAlgebra
from heckeideal.ideal_module import IdealModule, validate_ideal_module
from heckeideal.ideals import ideal_closure
from heckeideal.laurent import Scalar, WeightFunction
from heckeideal.maps import IdealMaps
from heckeideal.parabolic import ParabolicModule, Variant
from heckeideal.report import Status
from heckeideal.rpoly import classical_r_oracle, rpoly_parabolic
from heckeideal.solver import solve_r_table
from heckeideal.systems import named_matrix

q = Scalar.q(1)

RANK_THREE = [frozenset(J) for J in subsets(range(3))]


def system(name: str):
    return build_system(named_matrix(name), name=name)


def label(J) -> str:
    return "{" + ",".join(f"s{s + 1}" for s in sorted(J)) + "}"


def parabolic_ideal(W, J):
    """E = D_J"""
    return ideal_closure(W, W.min_coset_reps(J))


class TestHeckeAxioms:
    """Relations, bar and Phi on every T_w"""

    @pytest.mark.parametrize("name,units", [
        ("A3", None),
        ("B3", None),
        ("I2(5)", None),
        ("I2(7)", None),
        ("B3", [1, 1, 3]),
    ])
    def test_axioms(self, name, units):
        """hecke-axioms passes"""
        W = system(name)
        weights = WeightFunction.from_units(units) if units else None
        report = run_check("hecke-axioms", InstanceContext(W, weights))
        assert report.status == Status.PASS, report.witnesses
        assert report.checked > 0


class TestParabolicEverySubset:
    """M^J, M~^J, theta_J and the hat ideal for every J in A3 and B3"""

    @pytest.mark.parametrize("claim", [
        "parabolic-module-axioms",
        "parabolic-duality",
        "left-ideal",
        "mu-isomorphism",
    ])
    @pytest.mark.parametrize("J", RANK_THREE, ids=label)
    @pytest.mark.parametrize("name", ["A3", "B3"])
    def test_claim(self, name, J, claim):
        """Passes on (W, J)"""
        report = run_check(claim, InstanceContext(system(name), J=J))
        assert report.status == Status.PASS, report.witnesses


class TestClassicalOracleA3:
    """Parabolic extraction with J = {} against the descent recursion"""

    def test_all_pairs(self):
        """All 24 x 24 pairs agree"""
        H = HeckeAlgebra(system("A3"))
        table = rpoly_parabolic(ParabolicModule(H, set()))
        oracle = classical_r_oracle(H.system, H.weights)
        assert table.differences(oracle) == []
        assert table == oracle

    def test_oracle_claim(self):
        """rpoly-oracle with its shape and degree checks"""
        report = run_check("rpoly-oracle", InstanceContext(system("A3")))
        assert report.status == Status.PASS, report.witnesses


class TestParabolicIdeals:
    """E = D_J for every J in A3"""

    @pytest.mark.parametrize("J", RANK_THREE, ids=label)
    def test_matches_parabolic_module(self, J):
        """The solved table is zero and the action agrees with M^{J,-1}"""
        W = system("A3")
        H = HeckeAlgebra(W)
        E = parabolic_ideal(W, J)
        assert set(E) == set(W.min_coset_reps(J))
        datum = solve_r_table(H, E, J)
        assert all(v == 0 for row in datum.rtable.values() for v in row.values())
        assert validate_ideal_module(H, datum).passed
        module = IdealModule(H, datum)
        parabolic = ParabolicModule(H, J, Variant.MINUS_ONE)
        for y in E:
            for s in W.generators:
                assert module.act_gen(s, module.gamma(y)).items() == parabolic.act_gen(s, parabolic.m(y)).items()

    @pytest.mark.parametrize("claim", [
        "ideal-module",
        "lambda-branch-table",
        "lambda-bar",
        "ideal-rpoly-via-parabolic",
        "ideal-rpoly-via-k",
    ])
    @pytest.mark.parametrize("J", RANK_THREE, ids=label)
    def test_claim(self, J, claim):
        """Passes with K = Pos(D_J) = J"""
        W = system("A3")
        ctx = InstanceContext(W, J=J, E=parabolic_ideal(W, J))
        assert ctx.K == J
        report = run_check(claim, ctx)
        assert report.status == Status.PASS, report.witnesses


class TestPosIdentity:
    """Pos(E) = S minus E"""

    @pytest.mark.parametrize("name", ["A3", "B3"])
    def test_every_principal_ideal(self, name):
        """One comparison per distinct principal ideal"""
        report = run_check("pos-identity", InstanceContext(system(name)))
        assert report.status == Status.PASS, report.witnesses


class TestCosetMapsA3:
    """lambda_K, its dual and R^K from R^J with J = {}"""

    @pytest.mark.parametrize("claim", [
        "coset-factorization",
        "lambda-k-linearity",
        "lambda-k-basis",
        "lambda-k-bar",
        "lambda-k-duality-square",
        "k-rpoly-via-j",
    ])
    @pytest.mark.parametrize("K", [{0}, {0, 1}, {0, 1, 2}], ids=label)
    def test_claim(self, K, claim):
        """J = {} always factorizes"""
        report = run_check(claim, InstanceContext(system("A3"), J=(), K=K))
        assert report.status == Status.PASS, report.witnesses

    @pytest.mark.parametrize("claim", ["lambda-k-basis", "lambda-k-bar", "k-rpoly-via-j"])
    def test_commuting_triple(self, claim):
        """A1xA1xA1, J = {s1}, K = S"""
        report = run_check(claim, InstanceContext(system("A1xA1xA1"), J={0}, K={0, 1, 2}))
        assert report.status == Status.PASS, report.witnesses


class TestBranchTableCounterexample:
    """A3 with E = <s1s2> = {e, s2, s1s2}, J = {s3} and K = Pos(E) = {s1, s3}"""

    def setup_method(self):
        self.W = system("A3")
        self.H = HeckeAlgebra(self.W)
        self.E = ideal_closure(self.W, [self.W.parse("s1s2")])
        self.J = frozenset({2})

    def test_maximal_suffix_jumps(self):
        """T_{s1} m_{s3s2} = m_{s1s3s2} moves y_max from s2 to s1s2"""
        W = self.W
        maps = IdealMaps(self.H, solve_r_table(self.H, self.E, self.J))
        assert maps.K == frozenset({0, 2})
        assert maps.split.y_max(W.parse("s3s2")) == W.parse("s2")
        assert maps.split.y_max(W.parse("s1s3s2")) == W.parse("s1s2")
        module = maps.pair_k.minus
        alpha = W.parse("s3s2")
        image = maps.lambda_j(module.act_gen(0, module.m(alpha)))
        assert image == maps.ideal.gamma(W.parse("s1s2")).scale(q)
        _, predicted = maps.branch(0, alpha)
        assert image != predicted

    def test_claim_fails(self):
        """lambda-branch-table reports the failure with a witness"""
        ctx = InstanceContext(self.W, J=self.J, E=self.E)
        report = run_check("thm2.2", ctx)
        assert report.claim == "lambda-branch-table"
        assert report.status == Status.FAIL
        assert report.witnesses
