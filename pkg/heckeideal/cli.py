import argparse
import logging
import sys
from pathlib import Path
from typing import List, Optional

from dotenv import load_dotenv
load_dotenv()

from .config import HarnessConfig, as_dict
from .coxeter import Side
from .errors import BadParams, HeckeIdealError, Inconsistent, SolverIncomplete
from .formatters import SUPPORTED_FORMATS, save_reports, save_tables
from .formatters.json_formatter import JSONFormatter
from .harness import (
    CLAIM_SETS,
    InstanceContext,
    InstancePlan,
    Scope,
    catalog,
    check_hypotheses,
    get_claim_set,
    parse_claim,
    run_all,
    run_check,
    skipped_without_ideal,
    summarize,
)
from .harness.claims import CLAIM_SCOPES
from .hecke import HeckeAlgebra
from .ideal_module import IdealModule
from .ideals import pos
from .loader import load_ideal, load_rtable, load_system, load_wgraph, parse_subset, rtable_to_document
from .parabolic import ParabolicModule, Variant, parse_variant
from .rpoly import classical_r_oracle, parse_normalization, rpoly_ideal, rpoly_parabolic, table_descriptor
from .solver import solve_r_table
from .utils import print_written, write_text

LOG = logging.getLogger("heckeideal.cli")

EXIT_OK, EXIT_FAIL, EXIT_CONFIG = 0, 1, 2


def _build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="heckeideal",
        description="Hecke algebra modules on W-graph ideals: R-polynomial tables and exhaustive identity checks",
    )
    ap.add_argument("--verbose", action="store_true")
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser, needs_system: bool = True) -> None:
        p.add_argument("--system", required=needs_system, help="Named type (A3, B3, I2(5), A1xA1) or a system file")
        p.add_argument("--outdir", default=None, help="Output directory (default: out)")
        p.add_argument("--max-order", type=int, default=None, help="Skip exhaustive checks when |W| exceeds this")
        p.add_argument("--witness-limit", type=int, default=None)
        p.add_argument("--include-timing", action="store_true", help="Write elapsed times (breaks byte-identical reruns)")

    def instance(p: argparse.ArgumentParser) -> None:
        p.add_argument("--J", default=None, help="Reference subset J, e.g. s1,s2 (default: empty)")
        p.add_argument("--K", default=None, help="Subset K containing J (default: Pos(E), or S)")
        p.add_argument("--E", default=None, help="Ideal: comma-separated words or an ideal file")
        p.add_argument("--rtable", default=None, help="r-table file for M(E_J)")
        p.add_argument("--tilde-rtable", default=None, help="r~-table file for M~(E_J)")

    p = sub.add_parser("describe", help="Rank, matrix, positive roots, |W|, weights")
    common(p)
    p.add_argument("--E", default=None, help="Also describe this ideal")

    p = sub.add_parser("enumerate", help="All elements with length and descent sets")
    common(p)

    p = sub.add_parser("rpoly", help="Export an R-polynomial table")
    common(p)
    instance(p)
    p.add_argument("--kind", choices=["classical", "parabolic", "ideal"], required=True)
    p.add_argument("--variant", default="minus_one", help="minus_one (M) or qs (M~)")
    p.add_argument("--normalization", default=None, help="signed or unsigned")
    p.add_argument("--out", nargs="*", default=None, help=f"Formats: {', '.join(SUPPORTED_FORMATS)} (default: json)")

    p = sub.add_parser("verify", help="Run claim checks")
    common(p, needs_system=False)
    instance(p)
    what = p.add_mutually_exclusive_group(required=True)
    what.add_argument("--claim", help="One claim id or reference id such as thm4.8 (see --list)")
    what.add_argument("--set", dest="claim_set", help=f"Claim set: {', '.join(CLAIM_SETS)}")
    what.add_argument("--all", action="store_true", help="Every claim on every enumerated instance")
    what.add_argument("--list", action="store_true", help="Print the claim catalog")
    p.add_argument("--only", default=None, help="With --all: restrict to a claim set")
    p.add_argument("--wgraph", default=None, help="W-graph file for wgraph-representation")
    p.add_argument("--wgraph-from-descents", action="store_true", help="Use the descent-set W-graph on D_J")
    p.add_argument("--normalization", default=None, help="R~ normalization reported on failure: signed or unsigned")

    p = sub.add_parser("check-hypotheses", help="Evaluate every precondition gate on one instance")
    common(p)
    instance(p)

    p = sub.add_parser("solve-rtable", help="Solve for the r-table of (E, J)")
    common(p)
    p.add_argument("--E", required=True, help="Ideal: comma-separated words or an ideal file")
    p.add_argument("--J", default=None)
    p.add_argument("--variant", default="minus_one", help="minus_one (M) or qs (M~)")
    return ap


def _config(args: argparse.Namespace) -> HarnessConfig:
    return HarnessConfig.from_env(
        max_order=args.max_order,
        witness_limit=args.witness_limit,
        normalization=getattr(args, "normalization", None),
        output_dir=Path(args.outdir) if args.outdir else None,
        include_timing=args.include_timing or None,
    )


def _context(args: argparse.Namespace, cfg: HarnessConfig) -> InstanceContext:
    system, weights = load_system(args.system, cfg.root_cap)
    E, J = None, None
    if getattr(args, "E", None):
        E, J = load_ideal(args.E, system)
    if args.J is not None or J is None:
        J = parse_subset(system, args.J)
    K = parse_subset(system, args.K) if getattr(args, "K", None) is not None else None
    datum = load_rtable(args.rtable, system, weights, E, J) if getattr(args, "rtable", None) else None
    tilde = None
    if getattr(args, "tilde_rtable", None):
        tilde = load_rtable(args.tilde_rtable, system, weights, E, J, variant="qs")
    wgraph = load_wgraph(args.wgraph, system, weights) if getattr(args, "wgraph", None) else None
    return InstanceContext(
        system, weights, cfg, J=J, K=K, E=E,
        datum=datum, tilde_datum=tilde, wgraph=wgraph,
        descent_wgraph=getattr(args, "wgraph_from_descents", False),
    )


def _print_reports(reports) -> None:
    marks = {"pass": "PASS", "fail": "FAIL", "skipped": "SKIP"}
    for r in reports:
        where = ", ".join(f"{k}={v}" for k, v in sorted(r.instance.items()) if k != "weights")
        print(f"{marks[r.status.value]}  {r.claim}  {where}")
        if r.precondition:
            print(f"      gate: {r.precondition}")
        for w in r.witnesses:
            print(f"      witness: {w}")


def cmd_describe(args: argparse.Namespace, cfg: HarnessConfig) -> int:
    system, weights = load_system(args.system, cfg.root_cap)
    info = system.describe()
    info["weights"] = weights.to_json()
    info["phi_compatible"] = weights.phi_compatible()
    if args.E:
        E, _ = load_ideal(args.E, system)
        info["ideal"] = {
            "elements": [system.format(y) for y in E.sorted()],
            "pos": [system.names[s] for s in sorted(pos(system, E))],
        }
    print(JSONFormatter().dumps(info), end="")
    return EXIT_OK


def cmd_enumerate(args: argparse.Namespace, cfg: HarnessConfig) -> int:
    system, _ = load_system(args.system, cfg.root_cap)
    for w in system.elements():
        left = system.format_set(system.descents(w, Side.LEFT))
        right = system.format_set(system.descents(w, Side.RIGHT))
        print(f"{system.format(w)}\t{w.length}\tleft {left}\tright {right}")
    LOG.info("%d elements", system.order())
    return EXIT_OK


def cmd_rpoly(args: argparse.Namespace, cfg: HarnessConfig) -> int:
    ctx = _context(args, cfg)
    system, weights = ctx.system, ctx.weights
    normalization = parse_normalization(args.normalization or cfg.normalization)
    variant = parse_variant(args.variant)
    algebra = HeckeAlgebra(system, weights)
    if args.kind == "classical":
        table = classical_r_oracle(system, weights)
        header = table_descriptor(system, weights, table, kind="classical")
        name = "rpoly-classical"
    elif args.kind == "parabolic":
        table = rpoly_parabolic(ParabolicModule(algebra, ctx.J, variant), normalization)
        header = table_descriptor(system, weights, table, kind="parabolic")
        name = f"rpoly-parabolic-{variant.value}"
    else:
        if ctx.E is None:
            raise BadParams("--kind ideal needs --E")
        datum = ctx.datum if variant == Variant.MINUS_ONE else ctx.tilde_datum
        table = rpoly_ideal(IdealModule(algebra, datum), normalization)
        header = table_descriptor(system, weights, table, kind="ideal")
        name = f"rpoly-ideal-{variant.value}"
    written = save_tables({name: (table, header)}, cfg.output_dir, system, args.out or sorted(cfg.output_formats))
    print_written(written)
    return EXIT_OK


def cmd_verify(args: argparse.Namespace, cfg: HarnessConfig) -> int:
    if args.list:
        for row in catalog():
            print(f"{row['claim']:<34} {row['ref']:<9} {row['scope']:<10} {row['statement']}")
        return EXIT_OK
    if not args.system:
        raise BadParams("verify needs --system")
    ctx = _context(args, cfg)
    metadata = {"system": ctx.system.describe(), "weights": ctx.weights.to_json(), "config": as_dict(cfg)}
    if args.all:
        claims = get_claim_set(args.only) if args.only else get_claim_set("all")
        plan = InstancePlan(ctx.system, ctx.weights, cfg, descent_wgraph=args.wgraph_from_descents)
        reports = run_all(plan, claims)
        name = "verify-all"
    elif args.claim_set:
        reports = []
        for claim in get_claim_set(args.claim_set):
            if CLAIM_SCOPES[claim] == Scope.IDEAL and ctx.E is None:
                reports.append(skipped_without_ideal(claim, ctx))
            else:
                reports.append(run_check(claim, ctx))
        name = f"verify-{args.claim_set}"
    else:
        claim = parse_claim(args.claim)
        reports = [run_check(claim, ctx)]
        name = f"verify-{claim.value}"
    _print_reports(reports)
    path = save_reports(reports, cfg.output_dir / f"{name}.json", metadata, cfg.include_timing)
    counts = summarize(reports)
    print(f"{counts['pass']} passed, {counts['fail']} failed, {counts['skipped']} skipped")
    print_written([path])
    return EXIT_FAIL if counts["fail"] else EXIT_OK


def cmd_check_hypotheses(args: argparse.Namespace, cfg: HarnessConfig) -> int:
    ctx = _context(args, cfg)
    report = check_hypotheses(ctx)
    for note in report.notes:
        print(f"  {note}")
    for w in report.witnesses:
        print(f"  FAILED {w}")
    path = save_reports([report], cfg.output_dir / "hypotheses.json", include_timing=cfg.include_timing)
    print_written([path])
    return EXIT_OK if report.passed else EXIT_FAIL


def cmd_solve_rtable(args: argparse.Namespace, cfg: HarnessConfig) -> int:
    system, weights = load_system(args.system, cfg.root_cap)
    E, file_j = load_ideal(args.E, system)
    J = parse_subset(system, args.J) if args.J is not None or file_j is None else file_j
    variant = parse_variant(args.variant)
    try:
        datum = solve_r_table(
            HeckeAlgebra(system, weights), E, J, variant=variant,
            max_unknowns=cfg.solver_max_unknowns, max_branches=cfg.solver_max_branches,
        )
    except (SolverIncomplete, Inconsistent) as exc:
        print(f"❌ {type(exc).__name__}: {exc}")
        for line in exc.residue[:cfg.witness_limit]:
            print(f"  {line}")
        return EXIT_FAIL
    document = rtable_to_document(datum, system)
    for row in document["entries"]:
        if row["poly"] != "0":
            print(f"r^{row['s']}_{{{row['z']},{row['y']}}} = {row['poly']}")
    path = cfg.output_dir / f"rtable-{variant.value}.json"
    write_text(path, JSONFormatter().dumps(document))
    print_written([path])
    return EXIT_OK


COMMANDS = {
    "describe": cmd_describe,
    "enumerate": cmd_enumerate,
    "rpoly": cmd_rpoly,
    "verify": cmd_verify,
    "check-hypotheses": cmd_check_hypotheses,
    "solve-rtable": cmd_solve_rtable,
}


def main(argv: Optional[List[str]] = None) -> int:
    args = _build_parser().parse_args(argv)

    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.INFO,
        format="%(asctime)s %(levelname)s %(name)s - %(message)s",
    )

    cfg = _config(args)
    try:
        return COMMANDS[args.command](args, cfg)
    except (HeckeIdealError, ValueError) as exc:
        LOG.error("%s", exc)
        print(f"❌ {exc}", file=sys.stderr)
        return EXIT_CONFIG


if __name__ == "__main__":
    raise SystemExit(main())
