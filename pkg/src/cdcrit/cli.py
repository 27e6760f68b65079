"""Command-line interface.

Commands: ``gen``, ``analyze``, ``verify-theorem``, ``path`` and ``witness``.
``analyze`` is diagnostic (exit 0 unless a check errors); ``verify-theorem``
is assertive (non-zero exit on any failed check).

Budgets come from flags, falling back to ``CDCRIT_MAX_N`` (exact
Hamiltonian-path vertex cap) and ``CDCRIT_TIME_BUDGET_S`` (per-search
clock); flags win over the environment.
"""

from __future__ import annotations

import argparse
import os
import shlex
import sys
from pathlib import Path
from typing import Sequence

from cdcrit import families, theorems
from cdcrit.criticality import criticality_report
from cdcrit.domination import DEFAULT_MAX_CANDIDATES, Budget, connected_domination_number
from cdcrit.errors import CdcritError
from cdcrit.graph import Graph, cut_vertices_and_blocks, format_graph, parse_graph
from cdcrit.hamiltonicity import (
    DEFAULT_MAX_N,
    constructive_hamiltonian_path,
    hamiltonian_path_exact,
    witness_search,
)
from cdcrit.report import RunReport

SIDECAR_SUFFIX = ".tag"
CHECKS = ("gammac", "critical", "cuts", "trace")


def _ints(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _profiles(text: str) -> list[tuple[int, ...]]:
    """``1,1;2,1`` -> ``[(1, 1), (2, 1)]``."""
    return [tuple(_ints(p)) for p in text.split(";") if p.strip()]


def _max_n(args: argparse.Namespace) -> int:
    if getattr(args, "max_n", None) is not None:
        return args.max_n
    return int(os.environ.get("CDCRIT_MAX_N", DEFAULT_MAX_N))


def _budget(args: argparse.Namespace) -> Budget:
    time_s = getattr(args, "time_budget", None)
    if time_s is None and os.environ.get("CDCRIT_TIME_BUDGET_S"):
        time_s = float(os.environ["CDCRIT_TIME_BUDGET_S"])
    return Budget(max_candidates=args.max_candidates, time_s=time_s)


def _sidecar(path: Path) -> Path:
    return path.with_name(path.name + SIDECAR_SUFFIX)


def _load(path: str, tag_path: str | None) -> tuple[Graph, families.FamilyTag | None]:
    gpath = Path(path)
    g = parse_graph(gpath.read_text(encoding="utf-8"))
    tpath = Path(tag_path) if tag_path else _sidecar(gpath)
    tag = None
    if tag_path or tpath.exists():
        tag = families.parse_tag(tpath.read_text(encoding="utf-8"))
        problems = tag.validate(g)
        if problems:
            raise CdcritError(f"sidecar does not match graph: {problems[0]}")
    return g, tag


def _emit(report: RunReport, args: argparse.Namespace) -> None:
    sys.stdout.write(report.render(args.format, timings=not args.no_timings))


# -- gen --------------------------------------------------------------------


def _generate(args: argparse.Namespace) -> tuple[Graph, families.FamilyTag]:
    fam = args.family
    stars = args.stars if args.stars is not None else [1, 1]
    if fam == "B1":
        return families.build_B1(stars, args.isolated)
    if fam == "Uk":
        return families.build_Uk(args.k, stars, args.isolated, allow_degenerate=args.allow_degenerate)
    if fam == "G1":
        return families.build_G1(args.k, args.ell, args.n_ell, stars, args.isolated)
    if fam == "G2":
        if args.block:
            h = parse_graph(Path(args.block).read_text(encoding="utf-8"))
            b = args.head
        else:
            h, b = families.smallest_b2_block()
        return families.build_G2(args.k, h, b)
    if fam == "Ns":
        return families.build_Ns(args.s)
    if fam == "Pkl":
        base, btag = families.build_Ns(args.s)
        return families.build_Pkl(base, btag, args.sizes or [2])
    raise CdcritError(f"unknown family {fam}")


def cmd_gen(args: argparse.Namespace) -> int:
    g, tag = _generate(args)
    out = Path(args.out)
    out.parent.mkdir(parents=True, exist_ok=True)
    out.write_text(format_graph(g), encoding="utf-8")
    _sidecar(out).write_text(families.format_tag(tag), encoding="utf-8")
    print(f"wrote {out} (n={g.n}, m={g.m}) and {_sidecar(out)}")
    return 0


# -- analyze ----------------------------------------------------------------


def cmd_analyze(args: argparse.Namespace) -> int:
    report = RunReport(_command(args))
    try:
        g, tag = _load(args.graph, args.tag)
    except (OSError, CdcritError) as exc:
        report.add("parse", "skipped", str(exc))
        _emit(report, args)
        return 0
    requested = args.checks
    for name in requested:
        with report.timed(name):
            try:
                _analyze_one(report, name, g, tag, args)
            except CdcritError as exc:
                report.add(name, "skipped", f"{type(exc).__name__}: {exc}")
    _emit(report, args)
    return 0


def _analyze_one(report: RunReport, name: str, g: Graph, tag, args) -> None:
    if name == "gammac":
        gc, witness = connected_domination_number(g, _budget(args))
        report.add("gammac", "pass", gamma_c=gc, witness=witness)
    elif name == "critical":
        crit = criticality_report(g, with_sets=False, budget=_budget(args))
        details: dict[str, object] = {"gamma_c": crit.gamma_c, "critical": crit.is_critical}
        if crit.is_critical:
            details["k"] = crit.k
        else:
            details["pair"] = crit.failing_pairs()[0]
        report.add("critical", "pass" if crit.is_critical else "fail", **details)
    elif name == "cuts":
        dec = cut_vertices_and_blocks(g)
        report.add("cuts", "pass", zeta=dec.zeta, cut_vertices=dec.cut_vertices, blocks=len(dec.blocks))
    elif name == "trace":
        limit = _max_n(args)
        if tag is not None:
            w = witness_search(g, tag, size_bound=0)
            if w is not None:
                report.add("trace", "fail", traceable=False, witness=w.format())
                return
        if g.n <= limit:
            cert = hamiltonian_path_exact(g, limit)
            if cert is not None:
                report.add("trace", "pass", traceable=True, path=cert.format())
                return
        w = witness_search(g, tag, size_bound=args.witness_bound)
        if w is not None:
            report.add("trace", "fail", traceable=False, witness=w.format())
        elif g.n <= limit:
            report.add("trace", "fail", traceable=False, witness="none-found")
        else:
            report.add("trace", "skipped", "size-limit", n=g.n, max_n=limit)
    else:
        raise CdcritError(f"unknown check {name}")


# -- verify-theorem ---------------------------------------------------------


def cmd_verify(args: argparse.Namespace) -> int:
    report = RunReport(_command(args))
    thm = args.theorem
    profiles = args.stars or list(theorems.DEFAULT_PROFILES)
    isolated = args.isolated if args.isolated is not None else list(theorems.DEFAULT_ISOLATED)
    if thm == "mpm":
        theorems.verify_mpm(report, args.k or [4, 5], profiles, isolated, audits=args.audits)
    elif thm == "traceability":
        ks = args.k or [4, 5, 6]
        theorems.verify_traceability(
            report,
            uk_ks=ks,
            g1_ks=[k for k in ks if k >= 4],
            n_ells=args.n_ell or [1, 2],
            profiles=profiles,
            isolated=isolated,
            g2_ks=[k for k in ks if k >= 5],
            max_n=_max_n(args),
        )
    elif thm == "NT1":
        for s in args.s or [6]:
            theorems.verify_nt1(report, s, audits=args.audits)
    elif thm == "gl":
        if args.k and set(args.k) != {4}:
            report.add("gl", "skipped", "only k=4 bases (N(s)) are available")
        else:
            if args.sizes:
                size_lists = [args.sizes]
            else:
                size_lists = [[n1] * args.l for n1 in (args.n1 or [1, 2])]
            for s in args.s or [6]:
                theorems.verify_gl(report, size_lists, s, audits=args.audits)
    elif thm == "real":
        for s in args.s or [6]:
            theorems.verify_real(report, args.k or [5, 6], s, critical_max_ell=args.critical_max_ell)
    _emit(report, args)
    return report.assertion_exit_code()


# -- path / witness ---------------------------------------------------------


def cmd_path(args: argparse.Namespace) -> int:
    g, tag = _load(args.graph, args.tag)
    cert = None
    if args.method in ("constructive", "auto") and tag is not None:
        try:
            cert = constructive_hamiltonian_path(g, tag)
        except CdcritError:
            if args.method == "constructive":
                raise
    elif args.method == "constructive":
        raise CdcritError("constructive method needs a family sidecar")
    if cert is None:
        cert = hamiltonian_path_exact(g, _max_n(args))
    if cert is None:
        print("no hamiltonian path", file=sys.stderr)
        return 1
    print(cert.format())
    return 0


def cmd_witness(args: argparse.Namespace) -> int:
    g, tag = _load(args.graph, args.tag)
    w = witness_search(g, tag, size_bound=args.bound)
    if w is None:
        print("no witness found", file=sys.stderr)
        return 1
    print(w.format())
    return 0


# -- parser -----------------------------------------------------------------


def _command(args: argparse.Namespace) -> str:
    return "cdcrit " + " ".join(shlex.quote(a) for a in args._argv)


def _common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--max-candidates", type=int, default=DEFAULT_MAX_CANDIDATES)
    p.add_argument("--max-n", type=int, default=None, help="exact Hamiltonian-path vertex cap")
    p.add_argument("--time-budget", type=float, default=None, help="seconds per search")
    p.add_argument("--format", choices=("text", "structured"), default="text")
    p.add_argument("--no-timings", action="store_true")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cdcrit", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="generate a family member and its sidecar")
    gen.add_argument("family", choices=families.FAMILIES)
    gen.add_argument("--out", required=True)
    gen.add_argument("--k", type=int, default=4)
    gen.add_argument("--stars", type=_ints, default=None)
    gen.add_argument("--isolated", type=int, default=0)
    gen.add_argument("--ell", type=int, default=1)
    gen.add_argument("--n-ell", type=int, default=2)
    gen.add_argument("--s", type=int, default=6)
    gen.add_argument("--sizes", type=_ints, default=None, help="clique orders for Pkl")
    gen.add_argument("--block", default=None, help="graph file with the G2 end block")
    gen.add_argument("--head", type=int, default=0)
    gen.add_argument("--allow-degenerate", action="store_true")
    gen.set_defaults(func=cmd_gen)

    ana = sub.add_parser("analyze", help="run diagnostic checks on a graph file")
    ana.add_argument("graph")
    ana.add_argument("--tag", default=None)
    ana.add_argument(
        "--checks",
        type=lambda t: [c for c in t.split(",") if c],
        default=list(CHECKS),
    )
    ana.add_argument("--witness-bound", type=int, default=3)
    _common(ana)
    ana.set_defaults(func=cmd_analyze)

    ver = sub.add_parser("verify-theorem", help="assert a theorem over a parameter grid")
    ver.add_argument("theorem", choices=("mpm", "traceability", "NT1", "gl", "real"))
    ver.add_argument("--k", type=_ints, default=None)
    ver.add_argument("--stars", type=_profiles, default=None, help="profiles, e.g. '1,1;2,1'")
    ver.add_argument("--isolated", type=_ints, default=None)
    ver.add_argument("--n-ell", type=_ints, default=None)
    ver.add_argument("--s", type=_ints, default=None)
    ver.add_argument("--l", type=int, default=1)
    ver.add_argument("--n1", type=_ints, default=None)
    ver.add_argument("--sizes", type=_ints, default=None)
    ver.add_argument("--critical-max-ell", type=int, default=1)
    ver.add_argument("--audits", action="store_true")
    _common(ver)
    ver.set_defaults(func=cmd_verify)

    pth = sub.add_parser("path", help="print a Hamiltonian path certificate")
    pth.add_argument("graph")
    pth.add_argument("--tag", default=None)
    pth.add_argument("--method", choices=("auto", "constructive", "exact"), default="auto")
    pth.add_argument("--max-n", type=int, default=None)
    pth.set_defaults(func=cmd_path)

    wit = sub.add_parser("witness", help="print a non-traceability witness")
    wit.add_argument("graph")
    wit.add_argument("--tag", default=None)
    wit.add_argument("--bound", type=int, default=None)
    wit.set_defaults(func=cmd_witness)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    args = parser.parse_args(argv)
    args._argv = argv
    try:
        return args.func(args)
    except (CdcritError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
