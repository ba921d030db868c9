"""
Per-claim exhaustive checks.

Each check walks every basis element and generator of its instance and
records the first failing comparisons as witnesses. Mathematical failures
never raise; only bad parameters do.
"""
import logging
import time
from typing import Callable, Dict, List, Union

from ..errors import (
    BadParams,
    FactorizationHypothesisViolated,
    MissingRTableEntry,
    NoUniqueMax,
    NotScalarMultiple,
    PosMismatch,
)
from ..factorization import check_factorization_property, f_j
from ..ideal_module import IdealModule, IdealPair, validate_ideal_module
from ..ideals import is_suffix_closed, pos, principal_ideals, split_dk
from ..laurent import Scalar, eps, q_of
from ..linear import HeckeModule
from ..parabolic import Variant
from ..report import CheckReport
from ..rpoly import (
    Normalization,
    RTable,
    check_degrees,
    check_rtable_shape,
    classical_r_oracle,
    extract_rtable,
    parse_normalization,
)
from ..wgraph import validate_wgraph
from .claims import CLAIM_SCOPES, ClaimId, Scope, parse_claim
from .context import InstanceContext
from .gates import ClaimGateResolver, evaluate_gate, Gate

LOG = logging.getLogger("heckeideal.harness.checks")


def _table(ctx: InstanceContext, name: str, module: HeckeModule, normalization: Normalization) -> RTable:
    key = (name, normalization)
    if key not in ctx.tables:
        ctx.tables[key] = extract_rtable(module, normalization)
    return ctx.tables[key]


def _parabolic_table(ctx: InstanceContext, J, variant: Variant, normalization: Normalization) -> RTable:
    pair = ctx.pair(J)
    module = pair.minus if variant == Variant.MINUS_ONE else pair.tilde
    return _table(ctx, f"parabolic:{variant.value}:{sorted(J)}", module, normalization)


def _compare(report: CheckReport, label: str, actual: Scalar, expected: Scalar) -> None:
    report.expect(actual == expected, f"{label}: {actual} != {expected}")


def _equal_parameters(ctx: InstanceContext) -> bool:
    return ctx.weights.rank == 1 and all(ctx.weights.units(s) == (1,) for s in ctx.system.generators)


# -- Hecke algebra and parabolic modules -------------------------------


def _hecke_axioms(ctx: InstanceContext, report: CheckReport) -> None:
    ctx.algebra.check_axioms(report)


def _parabolic_module_axioms(ctx: InstanceContext, report: CheckReport) -> None:
    pair = ctx.pair(ctx.J)
    pair.minus.check_module(report)
    pair.tilde.check_module(report)


def _parabolic_duality(ctx: InstanceContext, report: CheckReport) -> None:
    ctx.pair(ctx.J).check_duality(report)


def _rpoly_oracle(ctx: InstanceContext, report: CheckReport) -> None:
    system = ctx.system
    table = _parabolic_table(ctx, (), Variant.MINUS_ONE, Normalization.SIGNED)
    oracle = classical_r_oracle(system, ctx.weights)
    keys = sorted(set(table.entries) | set(oracle.entries), key=lambda k: (k[1], k[0]))
    for sigma, tau in keys:
        _compare(report, f"R_{{{system.format(sigma)},{system.format(tau)}}}", table.get(sigma, tau), oracle.get(sigma, tau))
    e = system.identity
    for s in system.generators:
        _compare(report, f"R_{{e,{system.names[s]}}}", table.get(e, system.gen(s)), ctx.weights.q(s) - 1)
    check_rtable_shape(system, table, report)
    if ctx.J:
        check_rtable_shape(system, _parabolic_table(ctx, ctx.J, Variant.MINUS_ONE, Normalization.SIGNED), report)
    if _equal_parameters(ctx):
        check_degrees(system, oracle, report)
    report.bump("pairs", len(system.elements()) ** 2)


def _wgraph_representation(ctx: InstanceContext, report: CheckReport) -> None:
    sub = validate_wgraph(ctx.wgraph, ctx.algebra, ctx.config.witness_limit)
    report.absorb(sub)
    report.bump("vertices", len(ctx.wgraph.vertices))


def _pos_identity(ctx: InstanceContext, report: CheckReport) -> None:
    system = ctx.system
    for E in principal_ideals(system):
        label = f"E = <{system.format(E.maximal())}>"
        report.expect(is_suffix_closed(system, E.members), f"{label} is not suffix-closed")
        try:
            pos(system, E)
            report.checked += 1
        except PosMismatch as exc:
            report.fail(f"{label}: {exc}")
    report.bump("ideals", system.order())


# -- ideal modules -----------------------------------------------------


def _ideal_module(ctx: InstanceContext, report: CheckReport) -> None:
    system = ctx.system
    report.absorb(validate_ideal_module(ctx.algebra, ctx.datum, ctx.config.witness_limit), prefix="M: ")
    if evaluate_gate(Gate.TILDE_RTABLE, ctx) is None:
        report.absorb(validate_ideal_module(ctx.algebra, ctx.tilde_datum, ctx.config.witness_limit), prefix="M~: ")
    else:
        report.note("q_s-variant module not validated: no admissible r~-table")
    report.bump("r-entries", len(ctx.datum.entries()))
    if set(ctx.E.members) == set(system.min_coset_reps(ctx.J)):
        ideal = IdealModule(ctx.algebra, ctx.datum)
        parabolic = ctx.pair(ctx.J).minus
        for y in ideal.basis():
            for s in system.generators:
                report.expect(
                    ideal.act_gen(s, ideal.gamma(y)) == parabolic.act_gen(s, parabolic.m(y)),
                    f"E = D_J but T_{system.names[s]} Gamma_{system.format(y)} differs from the M^J action",
                )
        report.note("E = D_J: action compared entrywise with M^J")


def _ideal_duality(ctx: InstanceContext, report: CheckReport) -> None:
    IdealPair(ctx.algebra, ctx.datum, ctx.tilde_datum).check_duality(report)


def _max_suffix(ctx: InstanceContext, report: CheckReport) -> None:
    system = ctx.system
    split = split_dk(system, ctx.E, ctx.J)
    members = ctx.E.sorted()
    for alpha, (x, y) in split.table.items():
        label = system.format(alpha)
        report.expect(y in ctx.E, f"y_max({label}) = {system.format(y)} is not in E")
        report.expect(system.multiply(x, y) == alpha, f"x * y_max != {label}")
        report.expect(x.length + y.length == alpha.length, f"{label} = x * y_max is not length-additive")
        for u in members:
            if system.is_suffix(u, alpha):
                report.expect(system.is_suffix(u, y), f"suffix {system.format(u)} of {label} is not below y_max")
    for alpha in split.d2:
        report.expect(
            not any(system.is_suffix(u, alpha) for u in members),
            f"{system.format(alpha)} in D_K^2 has a suffix in E",
        )
    report.expect(
        sorted(split.d1 + split.d2) == sorted(split.d_k) and not set(split.d1) & set(split.d2),
        "D_K^1 and D_K^2 do not partition D_K",
    )
    report.bump("D_K^1", len(split.d1))
    report.bump("D_K^2", len(split.d2))
    report.bump("E_bar", len(split.e_bar))


def _lambda_branch_table(ctx: InstanceContext, report: CheckReport) -> None:
    maps = ctx.maps
    module = maps.pair_k.minus
    system = ctx.system
    for alpha in maps.split.d_k:
        m = module.m(alpha)
        for s in system.generators:
            label, expected = maps.branch(s, alpha)
            report.bump(label)
            tag = f"T_{system.names[s]} m_{system.format(alpha)} ({label})"
            if expected is None:
                report.fail(f"{tag} falls outside the branch table")
                continue
            report.expect(maps.lambda_j(module.act_gen(s, m)) == expected, f"lambda_J({tag}) differs from the predicted value")
    for label in sorted(report.counts):
        report.note(f"branch {label}: {report.counts[label]}")


def _lambda_bar(ctx: InstanceContext, report: CheckReport) -> None:
    maps = ctx.maps
    module = maps.pair_k.minus
    inside: List[bool] = []
    for alpha in maps.split.d_k:
        m = module.m(alpha)
        ok = report.expect(
            maps.lambda_j(module.bar(m)) == maps.ideal.bar(maps.lambda_j(m)),
            f"lambda_J(bar m_{ctx.system.format(alpha)}) != bar lambda_J(m_{ctx.system.format(alpha)})",
        )
        if alpha in ctx.E:
            inside.append(ok)
    held = "holds" if all(inside) else "fails"
    report.note(f"restricted to alpha in E ({len(inside)} elements): {held}")


def _lambda_duality_square(ctx: InstanceContext, report: CheckReport) -> None:
    maps = ctx.maps
    for alpha in maps.split.d_k:
        m = maps.pair_k.minus.m(alpha)
        report.expect(
            maps.delta(maps.lambda_j(m)) == maps.lambda_j_tilde(maps.pair_k.theta(m)),
            f"delta o lambda_J != lambda~_J o theta_K on m_{ctx.system.format(alpha)}",
        )


# -- the factorization D_J = D_K x F_J ---------------------------------


def _coset_factorization(ctx: InstanceContext, report: CheckReport) -> None:
    result = check_factorization_property(ctx.system, ctx.J, ctx.K)
    report.checked += len(result.d_j)
    for message in result.failures:
        report.fail(message)
    report.bump("D_J", len(result.d_j))
    report.bump("D_K", len(result.d_k))
    report.bump("F_J", len(result.f_j))


def _lambda_k_linearity(ctx: InstanceContext, report: CheckReport) -> None:
    maps = ctx.coset_maps
    system = ctx.system
    for variant, source, target, lam in (
        ("", maps.pair_j.minus, maps.pair_k.minus, maps.lambda_k),
        ("~", maps.pair_j.tilde, maps.pair_k.tilde, maps.lambda_k_tilde),
    ):
        for sigma in source.basis():
            m = source.m(sigma)
            for s in system.generators:
                report.expect(
                    lam(source.act_gen(s, m)) == target.act_gen(s, lam(m)),
                    f"lambda{variant}_K(T_{system.names[s]} m_{system.format(sigma)}) != T_{system.names[s]} lambda{variant}_K(m)",
                )


def _lambda_k_basis(ctx: InstanceContext, report: CheckReport) -> None:
    maps = ctx.coset_maps
    algebra = ctx.algebra
    for variant, source, target, lam in (
        ("", maps.pair_j.minus, maps.pair_k.minus, maps.lambda_k),
        ("~", maps.pair_j.tilde, maps.pair_k.tilde, maps.lambda_k_tilde),
    ):
        base = target.basis_element(ctx.system.identity)
        for sigma in source.basis():
            report.expect(
                lam(source.m(sigma)) == target.act(algebra.T(sigma), base),
                f"lambda{variant}_K(m_{ctx.system.format(sigma)}) != T_{ctx.system.format(sigma)} m^K_e",
            )


def _lambda_k_bar(ctx: InstanceContext, report: CheckReport) -> None:
    maps = ctx.coset_maps
    for variant, source, target, lam in (
        ("", maps.pair_j.minus, maps.pair_k.minus, maps.lambda_k),
        ("~", maps.pair_j.tilde, maps.pair_k.tilde, maps.lambda_k_tilde),
    ):
        for sigma in source.basis():
            m = source.m(sigma)
            report.expect(
                lam(source.bar(m)) == target.bar(lam(m)),
                f"lambda{variant}_K does not commute with bar on m_{ctx.system.format(sigma)}",
            )


def _lambda_k_duality_square(ctx: InstanceContext, report: CheckReport) -> None:
    maps = ctx.coset_maps
    for sigma in maps.pair_j.minus.basis():
        m = maps.pair_j.minus.m(sigma)
        report.expect(
            maps.pair_k.theta(maps.lambda_k(m)) == maps.lambda_k_tilde(maps.pair_j.theta(m)),
            f"theta_K o lambda_K != lambda~_K o theta_J on m_{ctx.system.format(sigma)}",
        )


def _nu_map(ctx: InstanceContext, report: CheckReport) -> None:
    maps = ctx.maps
    algebra = ctx.algebra
    system = ctx.system
    report.expect(
        maps.nu(algebra.one()) == maps.ideal.gamma(system.identity),
        "nu(1) != Gamma_e",
    )
    for w in system.elements():
        tw = algebra.T(w)
        label = f"T_{system.format(w)}"
        image = maps.nu(tw)
        report.expect(image == maps.nu_composite(tw), f"nu != lambda_J o lambda_K o phi_J on {label}")
        report.expect(maps.nu(algebra.bar(tw)) == maps.ideal.bar(image), f"nu does not commute with bar on {label}")
        report.expect(maps.delta(image) == maps.nu_dual_composite(tw), f"delta o nu != lambda~_J o lambda~_K o phi~_J o Phi on {label}")
        for s in system.generators:
            report.expect(
                maps.nu(algebra.gen_left_mul(s, tw)) == maps.ideal.act_gen(s, image),
                f"nu(T_{system.names[s]} {label}) != T_{system.names[s]} nu({label})",
            )


# -- the left ideal Q_J ------------------------------------------------


def _left_ideal(ctx: InstanceContext, report: CheckReport) -> None:
    ctx.hat_ideal.check_left_ideal(report)


def _mu_isomorphism(ctx: InstanceContext, report: CheckReport) -> None:
    hat = ctx.hat_ideal
    hat.check_mu(report)
    table = hat.l_table(report)
    report.bump("L-entries", len(table))


# -- R-polynomial identities -------------------------------------------


def _ideal_sum(
    ctx: InstanceContext,
    report: CheckReport,
    ideal_table: RTable,
    source: RTable,
    weight: Callable,
    through_f_j: bool,
    name: str,
) -> None:
    """
    Compare R_{x,y} on E with the sum over u in E-bar (and z in F_J) of
    weight(u, z) * source[u x z, y], plus the D_K^2 part when x = e.
    """
    system = ctx.system
    split = ctx.maps.split
    zs = f_j(system, ctx.J, ctx.K) if through_f_j else [system.identity]
    members = ctx.E.sorted()
    for y in members:
        for x in members:
            total = ctx.weights.zero()
            for u in split.e_bar:
                ux = system.multiply(u, x)
                for z in zs:
                    total = total + weight(u, z) * source.get(system.multiply(ux, z), y)
            if x == system.identity:
                for alpha in split.d2:
                    for z in zs:
                        total = total + weight(alpha, z) * source.get(system.multiply(alpha, z), y)
            _compare(report, f"{name}_{{{system.format(x)},{system.format(y)}}}", ideal_table.get(x, y), total)


def _f_j_sum(
    ctx: InstanceContext,
    report: CheckReport,
    k_table: RTable,
    j_table: RTable,
    weight: Callable,
    name: str,
) -> None:
    """R^K_{alpha,beta} against sum over z in F_J of weight(z) * R^J_{alpha z, beta}."""
    system = ctx.system
    zs = f_j(system, ctx.J, ctx.K)
    d_k = system.min_coset_reps(ctx.K)
    for beta in d_k:
        for alpha in d_k:
            total = ctx.weights.zero()
            for z in zs:
                total = total + weight(z) * j_table.get(system.multiply(alpha, z), beta)
            _compare(report, f"{name}_{{{system.format(alpha)},{system.format(beta)}}}", k_table.get(alpha, beta), total)


def _signed(ctx: InstanceContext) -> Callable:
    return lambda w: q_of(w, ctx.weights) * eps(w)


def _probe(ctx: InstanceContext, report: CheckReport, body: Callable[[CheckReport, Normalization], None]) -> None:
    """Evaluate an R~ identity under each normalization; pass if any does."""
    outcomes: Dict[Normalization, CheckReport] = {}
    for norm in Normalization:
        sub = CheckReport(claim=report.claim, witness_limit=report.witness_limit)
        body(sub, norm)
        outcomes[norm] = sub
        detail = f" (first witness: {sub.witnesses[0]})" if sub.witnesses else ""
        report.note(f"normalization {norm.value}: {sub.status.value}{detail}")
    passing = [n for n, sub in outcomes.items() if sub.passed]
    if passing:
        report.checked += outcomes[passing[0]].checked
        report.note(f"identity holds under: {', '.join(n.value for n in passing)}")
    else:
        report.absorb(outcomes[parse_normalization(ctx.config.normalization)])


def _ideal_rpoly_via_parabolic(ctx: InstanceContext, report: CheckReport) -> None:
    signed = _signed(ctx)
    _ideal_sum(
        ctx, report,
        _table(ctx, "ideal", ctx.maps.ideal, Normalization.SIGNED),
        _parabolic_table(ctx, ctx.J, Variant.MINUS_ONE, Normalization.SIGNED),
        lambda u, z: signed(u),
        through_f_j=True,
        name="R",
    )


def _tilde_ideal_rpoly_via_parabolic(ctx: InstanceContext, report: CheckReport) -> None:
    signed = _signed(ctx)

    def body(sub: CheckReport, norm: Normalization) -> None:
        _ideal_sum(
            ctx, sub,
            _table(ctx, "ideal~", ctx.maps.ideal_tilde, norm),
            _parabolic_table(ctx, ctx.J, Variant.QS, norm),
            lambda u, z: signed(z),
            through_f_j=True,
            name="R~",
        )

    _probe(ctx, report, body)


def _ideal_rpoly_via_k(ctx: InstanceContext, report: CheckReport) -> None:
    system = ctx.system
    signed = _signed(ctx)
    ideal_table = _table(ctx, "ideal", ctx.maps.ideal, Normalization.SIGNED)
    k_table = _parabolic_table(ctx, ctx.K, Variant.MINUS_ONE, Normalization.SIGNED)
    _ideal_sum(ctx, report, ideal_table, k_table, lambda u, z: signed(u), through_f_j=False, name="R")

    # Same identity grouped by maximal suffix: alpha = x(alpha) * y_max(alpha)
    split = ctx.maps.split
    mismatched = []
    for y in ctx.E.sorted():
        for x in ctx.E.sorted():
            total = ctx.weights.zero()
            for alpha, (x_part, top) in split.table.items():
                if top == x:
                    total = total + signed(x_part) * k_table.get(alpha, y)
            if x == system.identity:
                for alpha in split.d2:
                    total = total + signed(alpha) * k_table.get(alpha, y)
            if total != ideal_table.get(x, y):
                mismatched.append(f"({system.format(x)},{system.format(y)})")
    if mismatched:
        report.note(f"suffix-grouped form differs at {', '.join(mismatched[:report.witness_limit])}")
    else:
        report.note("suffix-grouped form agrees on every pair")


def _tilde_ideal_rpoly_via_k(ctx: InstanceContext, report: CheckReport) -> None:
    def body(sub: CheckReport, norm: Normalization) -> None:
        _ideal_sum(
            ctx, sub,
            _table(ctx, "ideal~", ctx.maps.ideal_tilde, norm),
            _parabolic_table(ctx, ctx.K, Variant.QS, norm),
            lambda u, z: ctx.weights.one(),
            through_f_j=False,
            name="R~",
        )

    _probe(ctx, report, body)


def _k_rpoly_via_j(ctx: InstanceContext, report: CheckReport) -> None:
    _f_j_sum(
        ctx, report,
        _parabolic_table(ctx, ctx.K, Variant.MINUS_ONE, Normalization.SIGNED),
        _parabolic_table(ctx, ctx.J, Variant.MINUS_ONE, Normalization.SIGNED),
        lambda z: ctx.weights.one(),
        name="R^K",
    )


def _tilde_k_rpoly_via_j(ctx: InstanceContext, report: CheckReport) -> None:
    signed = _signed(ctx)

    def body(sub: CheckReport, norm: Normalization) -> None:
        _f_j_sum(
            ctx, sub,
            _parabolic_table(ctx, ctx.K, Variant.QS, norm),
            _parabolic_table(ctx, ctx.J, Variant.QS, norm),
            signed,
            name="R~^K",
        )

    _probe(ctx, report, body)


CHECKS: Dict[ClaimId, Callable[[InstanceContext, CheckReport], None]] = {
    ClaimId.HECKE_AXIOMS: _hecke_axioms,
    ClaimId.PARABOLIC_MODULE_AXIOMS: _parabolic_module_axioms,
    ClaimId.PARABOLIC_DUALITY: _parabolic_duality,
    ClaimId.RPOLY_ORACLE: _rpoly_oracle,
    ClaimId.WGRAPH_REPRESENTATION: _wgraph_representation,
    ClaimId.POS_IDENTITY: _pos_identity,
    ClaimId.IDEAL_MODULE: _ideal_module,
    ClaimId.IDEAL_DUALITY: _ideal_duality,
    ClaimId.MAX_SUFFIX: _max_suffix,
    ClaimId.LAMBDA_BRANCH_TABLE: _lambda_branch_table,
    ClaimId.LAMBDA_BAR: _lambda_bar,
    ClaimId.LAMBDA_DUALITY_SQUARE: _lambda_duality_square,
    ClaimId.COSET_FACTORIZATION: _coset_factorization,
    ClaimId.LAMBDA_K_LINEARITY: _lambda_k_linearity,
    ClaimId.LAMBDA_K_BASIS: _lambda_k_basis,
    ClaimId.LAMBDA_K_BAR: _lambda_k_bar,
    ClaimId.LAMBDA_K_DUALITY_SQUARE: _lambda_k_duality_square,
    ClaimId.NU_MAP: _nu_map,
    ClaimId.LEFT_IDEAL: _left_ideal,
    ClaimId.MU_ISOMORPHISM: _mu_isomorphism,
    ClaimId.IDEAL_RPOLY_VIA_PARABOLIC: _ideal_rpoly_via_parabolic,
    ClaimId.TILDE_IDEAL_RPOLY_VIA_PARABOLIC: _tilde_ideal_rpoly_via_parabolic,
    ClaimId.IDEAL_RPOLY_VIA_K: _ideal_rpoly_via_k,
    ClaimId.TILDE_IDEAL_RPOLY_VIA_K: _tilde_ideal_rpoly_via_k,
    ClaimId.K_RPOLY_VIA_J: _k_rpoly_via_j,
    ClaimId.TILDE_K_RPOLY_VIA_J: _tilde_k_rpoly_via_j,
}


def run_check(claim: Union[str, ClaimId], ctx: InstanceContext) -> CheckReport:
    """
    Run one claim on one instance.

    Gate failures give a skipped report naming the gate.

    Raises:
        UnknownClaim: if the claim id is not in the catalog
        BadParams: if an ideal claim is requested without an ideal
    """
    claim = claim if isinstance(claim, ClaimId) else parse_claim(claim)
    scope = CLAIM_SCOPES[claim]
    if scope == Scope.IDEAL and ctx.E is None:
        raise BadParams(f"Claim '{claim.value}' needs an ideal E")
    report = CheckReport(
        claim=claim.value,
        instance=ctx.descriptor(scope.value),
        witness_limit=ctx.config.witness_limit,
    )
    start = time.perf_counter()
    gate = ClaimGateResolver.first_failure(claim, ctx)
    if gate is not None:
        report.skip(gate.value, ctx.gate_results[gate.value] or "")
        LOG.warning("Skipped %s on %s: gate %s failed", claim.value, report.instance, gate.value)
    else:
        LOG.info("Checking %s on %s", claim.value, report.instance)
        try:
            CHECKS[claim](ctx, report)
        except (FactorizationHypothesisViolated, NoUniqueMax, NotScalarMultiple, MissingRTableEntry) as exc:
            report.fail(f"{type(exc).__name__}: {exc}")
    report.elapsed = time.perf_counter() - start
    LOG.info("%s: %s (%d comparisons)", claim.value, report.status.value, report.checked)
    return report


def skipped_without_ideal(claim: ClaimId, ctx: InstanceContext) -> CheckReport:
    """Skipped report for an ideal claim in a batch run that has no ideal E."""
    report = CheckReport(
        claim=claim.value,
        instance=ctx.descriptor(CLAIM_SCOPES[claim].value),
        witness_limit=ctx.config.witness_limit,
    )
    report.skip(Gate.IDEAL_GIVEN.value, "no ideal E was given")
    LOG.warning("Skipped %s: no ideal E was given", claim.value)
    return report


def check_hypotheses(ctx: InstanceContext) -> CheckReport:
    """
    Evaluate every gate whose prerequisites pass and list which claims are
    testable on this instance.
    """
    scope = Scope.IDEAL if ctx.E is not None else Scope.FACTOR
    report = CheckReport(
        claim="check-hypotheses",
        instance=ctx.descriptor(scope.value),
        witness_limit=len(Gate),
    )
    start = time.perf_counter()
    outcome: Dict[Gate, bool] = {}
    for gate in ClaimGateResolver.GATE_ORDER:
        deps = ClaimGateResolver.GATE_DEPENDENCIES[gate]
        if not all(outcome.get(d, False) for d in deps):
            report.note(f"{gate.value}: not evaluated")
            continue
        if (gate == Gate.WGRAPH_GIVEN and ctx.wgraph is None) or (gate == Gate.IDEAL_GIVEN and ctx.E is None):
            report.note(f"{gate.value}: not evaluated")
            continue
        result = evaluate_gate(gate, ctx)
        outcome[gate] = result is None
        report.checked += 1
        if result is None:
            report.note(f"{gate.value}: pass")
        else:
            report.fail(f"{gate.value}: {result}")
    testable, blocked = [], []
    for claim in ClaimId:
        if CLAIM_SCOPES[claim] == Scope.IDEAL and ctx.E is None:
            continue
        gate = ClaimGateResolver.first_failure(claim, ctx)
        if gate is None:
            testable.append(claim.value)
        else:
            blocked.append(f"{claim.value} ({gate.value})")
    report.note(f"testable: {', '.join(testable) or 'none'}")
    if blocked:
        report.note(f"blocked: {', '.join(blocked)}")
    report.bump("testable", len(testable))
    report.bump("blocked", len(blocked))
    report.elapsed = time.perf_counter() - start
    LOG.info("Hypotheses: %s, %d claims testable", report.status.value, len(testable))
    return report
