"""
Tests for the verification harness: claim catalog, gates, per-claim checks
and instance enumeration.
"""
import pytest
import sys
from pathlib import Path

# Add parent directory to path for imports
sys.path.insert(0, str(Path(__file__).parent.parent))

from heckeideal.config import HarnessConfig
from heckeideal.coxeter import build_system
from heckeideal.errors import BadParams, UnknownClaim
from heckeideal.harness import (
    CLAIM_ALIASES,
    ClaimGateResolver,
    ClaimId,
    Gate,
    InstanceContext,
    InstancePlan,
    catalog,
    check_hypotheses,
    claim_ref,
    get_claim_set,
    parse_claim,
    run_all,
    run_check,
    skipped_without_ideal,
    summarize,
    validate_claim_names,
)
from heckeideal.harness.instances import distinct_principal_ideals, subsets
from heckeideal.ideals import ideal_closure
from heckeideal.report import Status
from heckeideal.systems import named_matrix


def system(name: str):
    return build_system(named_matrix(name), name=name)


def ideal_ctx(name: str, words, J, **kwargs) -> InstanceContext:
    W = system(name)
    E = ideal_closure(W, [W.parse(w) for w in words])
    return InstanceContext(W, J=J, E=E, **kwargs)


class TestClaimCatalog:
    """Claim identifiers and named sets"""

    def test_parse_claim(self):
        """Case and whitespace are ignored"""
        assert parse_claim(" Hecke-Axioms ") == ClaimId.HECKE_AXIOMS

    def test_unknown_claim(self):
        """Unknown ids list the valid options"""
        with pytest.raises(UnknownClaim, match="Valid options"):
            parse_claim("theorem-9")

    def test_claim_sets(self):
        """Named sets partition by scope"""
        assert get_claim_set("hecke") == [ClaimId.HECKE_AXIOMS, ClaimId.RPOLY_ORACLE]
        assert ClaimId.COSET_FACTORIZATION in get_claim_set("factor")
        assert ClaimId.IDEAL_MODULE in get_claim_set("ideal")
        assert get_claim_set("all") == list(ClaimId)

    def test_unknown_claim_set(self):
        """Unknown set names raise ValueError"""
        with pytest.raises(ValueError, match="Valid options"):
            get_claim_set("everything")

    def test_validate_keeps_catalog_order(self):
        """Names come back in catalog order"""
        claims = validate_claim_names({"mu-isomorphism", "hecke-axioms"})
        assert claims == [ClaimId.HECKE_AXIOMS, ClaimId.MU_ISOMORPHISM]

    def test_catalog_covers_every_claim(self):
        """One entry with a statement per claim"""
        entries = catalog()
        assert len(entries) == len(ClaimId)
        assert all(entry["statement"] for entry in entries)

    @pytest.mark.parametrize("ref, claim", [
        ("prop1.1", ClaimId.PARABOLIC_DUALITY),
        ("def1.2", ClaimId.WGRAPH_REPRESENTATION),
        ("thm2.2", ClaimId.LAMBDA_BRANCH_TABLE),
        ("cor2.4", ClaimId.LAMBDA_BAR),
        ("thm2.6", ClaimId.LAMBDA_DUALITY_SQUARE),
        ("thm2.8", ClaimId.COSET_FACTORIZATION),
        ("thm2.9", ClaimId.LAMBDA_K_LINEARITY),
        ("thm2.12", ClaimId.LAMBDA_K_DUALITY_SQUARE),
        ("thm2.13", ClaimId.NU_MAP),
        ("prop3.1", ClaimId.LEFT_IDEAL),
        ("thm3.2", ClaimId.MU_ISOMORPHISM),
        ("thm4.3", ClaimId.IDEAL_RPOLY_VIA_PARABOLIC),
        ("rem4.4", ClaimId.TILDE_IDEAL_RPOLY_VIA_PARABOLIC),
        ("thm4.6", ClaimId.IDEAL_RPOLY_VIA_K),
        ("rem4.7", ClaimId.TILDE_IDEAL_RPOLY_VIA_K),
        ("thm4.8", ClaimId.K_RPOLY_VIA_J),
        ("rem4.9", ClaimId.TILDE_K_RPOLY_VIA_J),
        ("hecke-axioms", ClaimId.HECKE_AXIOMS),
    ])
    def test_reference_ids(self, ref, claim):
        """Reference ids resolve to catalog claims"""
        assert parse_claim(ref) == claim
        assert parse_claim(ref.upper()) == claim

    def test_every_alias_resolves_to_its_claim(self):
        """The alias table and parse_claim agree"""
        for claim, aliases in CLAIM_ALIASES.items():
            for alias in aliases:
                assert parse_claim(alias) == claim
            assert parse_claim(claim.value) == claim

    def test_aliases_are_unique(self):
        """No reference id names two claims"""
        aliases = [a for names in CLAIM_ALIASES.values() for a in names]
        assert len(aliases) == len(set(aliases))
        assert not set(aliases) & {c.value for c in ClaimId}

    def test_printed_refs(self):
        """Anchors as printed by the catalog"""
        assert claim_ref(ClaimId.K_RPOLY_VIA_J) == "Thm 4.8"
        assert claim_ref(ClaimId.LAMBDA_K_BASIS) == "Cor 2.10"
        assert claim_ref(ClaimId.POS_IDENTITY) == "§1.2"
        assert claim_ref(ClaimId.RPOLY_ORACLE) == "-"
        rows = {row["claim"]: row for row in catalog()}
        assert rows["k-rpoly-via-j"]["ref"] == "Thm 4.8"
        assert rows["lambda-k-bar"]["aliases"] == "cor2.11, rem2.11"

    def test_reference_id_runs(self):
        """thm4.8 on A2 with K = {s1} and J = {}"""
        report = run_check("thm4.8", InstanceContext(system("A2"), J=(), K={0}))
        assert report.claim == "k-rpoly-via-j"
        assert report.status == Status.PASS, report.witnesses


class TestGateResolver:
    """Gate prerequisites"""

    def test_order_gate_always_first(self):
        """Every claim checks the order limit"""
        for claim in ClaimId:
            assert ClaimGateResolver.resolve(claim)[0] == Gate.ORDER

    def test_dependencies_pulled_in(self):
        """rtable-solvable needs pos-identity and the ideal"""
        gates = ClaimGateResolver.resolve(ClaimId.IDEAL_MODULE)
        assert gates == [Gate.ORDER, Gate.IDEAL_GIVEN, Gate.POS, Gate.J_IN_K, Gate.RTABLE]

    def test_order_limit_skips(self):
        """A small max_order skips with the order gate"""
        ctx = InstanceContext(system("A2"), config=HarnessConfig(max_order=4))
        report = run_check("hecke-axioms", ctx)
        assert report.status == Status.SKIPPED
        assert report.precondition == "order-within-limit"


class TestSystemAndParabolicClaims:
    """Claims on A2 without an ideal"""

    @pytest.mark.parametrize("claim", [
        "hecke-axioms",
        "rpoly-oracle",
        "pos-identity",
        "parabolic-module-axioms",
        "parabolic-duality",
        "left-ideal",
        "mu-isomorphism",
    ])
    def test_claims_pass(self, claim):
        """A2 with J = {s1}"""
        report = run_check(claim, InstanceContext(system("A2"), J={0}))
        assert report.status == Status.PASS, report.witnesses
        assert report.checked > 0

    def test_wgraph_needs_a_graph(self):
        """Without a graph the claim is skipped"""
        report = run_check("wgraph-representation", InstanceContext(system("A2"), J={0}))
        assert report.status == Status.SKIPPED
        assert report.precondition == "wgraph-given"

    def test_descent_wgraph(self):
        """The descent-set graph on D_{s1} passes"""
        ctx = InstanceContext(system("A2"), J={0}, descent_wgraph=True)
        report = run_check(ClaimId.WGRAPH_REPRESENTATION, ctx)
        assert report.status == Status.PASS, report.witnesses
        assert report.counts["vertices"] == 3


class TestFactorClaims:
    """Claims on pairs J <= K"""

    def test_a2_factorization_fails(self):
        """A2, J = {s1}, K = S"""
        ctx = InstanceContext(system("A2"), J={0}, K={0, 1})
        report = run_check("coset-factorization", ctx)
        assert report.status == Status.FAIL
        assert report.witnesses

    def test_lambda_k_skipped_without_factorization(self):
        """lambda_K claims need the factorization"""
        ctx = InstanceContext(system("A2"), J={0}, K={0, 1})
        report = run_check("lambda-k-basis", ctx)
        assert report.status == Status.SKIPPED
        assert report.precondition == "coset-factorization"

    def test_k_rpoly_with_empty_j(self):
        """K = {s1}, J = {}: R^K from R^J summed over F_J"""
        ctx = InstanceContext(system("A2"), J=(), K={0})
        report = run_check("k-rpoly-via-j", ctx)
        assert report.status == Status.PASS, report.witnesses

    @pytest.mark.parametrize("claim", ["lambda-k-linearity", "lambda-k-basis", "lambda-k-bar"])
    def test_commuting_pair(self, claim):
        """A1xA1, J = {s1}, K = S"""
        ctx = InstanceContext(system("A1xA1"), J={0}, K={0, 1})
        report = run_check(claim, ctx)
        assert report.status == Status.PASS, report.witnesses

    def test_j_not_in_k(self):
        """J outside K skips with the reference-subset gate"""
        ctx = InstanceContext(system("A2"), J={0, 1}, K={0})
        report = run_check("coset-factorization", ctx)
        assert report.status == Status.SKIPPED
        assert report.precondition == "reference-subset"


class TestIdealClaims:
    """A2 with E = {e, s1} and J = {s2}"""

    def setup_method(self):
        self.ctx = ideal_ctx("A2", ["s1"], {1})

    @pytest.mark.parametrize("claim", ["ideal-module", "max-suffix", "lambda-branch-table"])
    def test_claims_pass(self, claim):
        """The solved r-table gives a module and the branch table holds"""
        report = run_check(claim, self.ctx)
        assert report.status == Status.PASS, report.witnesses

    def test_lambda_bar_restricted_note(self):
        """bar fails on D_K but holds for alpha in E"""
        report = run_check("lambda-bar", self.ctx)
        assert report.status == Status.FAIL
        assert "restricted to alpha in E (2 elements): holds" in report.notes

    def test_lambda_duality_square_fails(self):
        """The square does not commute on this instance"""
        report = run_check("lambda-duality-square", self.ctx)
        assert report.status == Status.FAIL

    def test_needs_an_ideal(self):
        """Ideal claims without E are bad parameters"""
        with pytest.raises(BadParams):
            run_check("ideal-module", InstanceContext(system("A2"), J={1}))

    def test_unknown_claim(self):
        """Unknown ids raise"""
        with pytest.raises(UnknownClaim):
            run_check("nope", self.ctx)

    def test_k_defaults_to_pos(self):
        """K = Pos(E) when E is given"""
        assert self.ctx.K == frozenset({1})

    def test_report_instance(self):
        """The instance descriptor names E and J"""
        report = run_check("ideal-module", self.ctx)
        assert report.instance["E"] == ["e", "s1"]
        assert report.instance["J"] == ["s2"]


class TestCheckHypotheses:
    """Gate summary per instance"""

    def test_commuting_instance(self):
        """A1xA1, E = {e}, J = {s1} satisfies every evaluated gate"""
        report = check_hypotheses(ideal_ctx("A1xA1", ["e"], {0}))
        assert report.claim == "check-hypotheses"
        assert report.status == Status.PASS, report.witnesses
        assert "wgraph-given: not evaluated" in report.notes
        assert "coset-factorization: pass" in report.notes
        assert any(n.startswith("testable: ") for n in report.notes)

    def test_a2_factorization_gate(self):
        """A2, E = {e}, J = {s1}: K = S and the factorization fails"""
        report = check_hypotheses(ideal_ctx("A2", ["e"], {0}))
        assert report.status == Status.FAIL
        assert any(w.startswith("coset-factorization:") for w in report.witnesses)
        assert any(n.startswith("blocked: ") for n in report.notes)

    def test_factorization_only_instance(self):
        """A1xA1, K = S, J = {s1} and no ideal: only the factor gates are evaluated"""
        report = check_hypotheses(InstanceContext(system("A1xA1"), J={0}))
        assert report.status == Status.PASS, report.witnesses
        assert "ideal-given: not evaluated" in report.notes
        assert "pos-identity: not evaluated" in report.notes
        assert "coset-factorization: pass" in report.notes

    def test_skipped_without_ideal(self):
        """Batch runs record ideal claims without E as skipped"""
        report = skipped_without_ideal(ClaimId.IDEAL_MODULE, InstanceContext(system("A2"), J={1}))
        assert report.status == Status.SKIPPED
        assert report.precondition == "ideal-given"
        assert report.to_dict()["precondition"] == "ideal-given"


class TestInstances:
    """Enumeration for verify --all"""

    def test_subsets_order(self):
        """By size then lexicographically"""
        assert subsets(range(2)) == [frozenset(), frozenset({0}), frozenset({1}), frozenset({0, 1})]

    def test_distinct_principal_ideals(self):
        """Six distinct ideals in A2"""
        assert len(distinct_principal_ideals(system("A2"))) == 6

    def test_factor_instances(self):
        """A1xA1 has nine pairs J <= K, all factorizing"""
        plan = InstancePlan(system("A1xA1"))
        reports = run_all(plan, [ClaimId.COSET_FACTORIZATION])
        assert len(reports) == 9
        assert summarize(reports) == {"pass": 9, "fail": 0, "skipped": 0}

    def test_contexts_are_shared(self):
        """Claims of the same instance reuse one context"""
        plan = InstancePlan(system("A1xA1"))
        first = list(plan.instances(ClaimId.LAMBDA_K_BASIS))
        second = list(plan.instances(ClaimId.LAMBDA_K_BAR))
        assert all(a is b for a, b in zip(first, second))

    def test_system_claims_run_once(self):
        """hecke-axioms has one instance"""
        reports = run_all(InstancePlan(system("A2")), get_claim_set("hecke"))
        assert [r.claim for r in reports] == ["hecke-axioms", "rpoly-oracle"]
        assert summarize(reports)["pass"] == 2
