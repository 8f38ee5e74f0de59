"""Command-line interface.

Exit codes: 0 success / pass, 1 domain failure (not in class, bound
violated, failed audit), 2 usage or I/O error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import harness
from .colorers import bound_target, color_auto, color_in_class
from .decomposition import TRACE_NOTE, check_properties, decompose_c5, structural_flags
from .errors import (
    ChromaboundError,
    FormatError,
    ForbiddenTrace,
    IndexOutOfRange,
    NotACycle,
    NotGood,
    NotInAnyClass,
    NotInClass,
    OverlappingSets,
    PreconditionOmega,
    SelfLoop,
)
from .formats import read_graph, read_graphs, to_graph6
from .generators import GenSpec, random_good_graph, random_in_class
from .goodgraph import GoodPartition, color_good
from .graph import Graph
from .oracle import OracleBudget, chromatic_number, clique_number, is_perfect, max_stable_set
from .patterns import ClassId, class_membership, class_violation, find_c5

CLASS_CHOICES = [c.slug for c in ClassId]


class UsageError(Exception):
    pass


INPUT_ERRORS = (UsageError, FormatError, IndexOutOfRange, SelfLoop, OverlappingSets, NotACycle, OSError)


def _emit(args, payload: dict, text: str) -> None:
    print(json.dumps(payload, sort_keys=True) if args.json else text)


def _budget(args) -> OracleBudget:
    return OracleBudget(args.budget)


def _load(path: str) -> list[Graph]:
    try:
        return read_graphs(path)
    except OSError as e:
        raise UsageError(f"cannot read {path}: {e}") from e


def _cls(slug: str) -> ClassId:
    return ClassId.from_slug(slug)


# commands ------------------------------------------------------------


def cmd_color(args) -> int:
    if args.good:
        return _color_good(args)
    if not args.file or not args.cls:
        raise UsageError("color needs --class and an input file (or --good with --partition)")
    graphs = _load(args.file)
    status = 0
    certs = []
    for k, g in enumerate(graphs):
        prefix = f"graph={k} " if len(graphs) > 1 else ""
        try:
            if args.cls == "auto":
                cls, col, cert = color_auto(g, _budget(args), args.tier_n)
            else:
                cls = _cls(args.cls)
                col, cert = color_in_class(g, cls, _budget(args), args.tier_n)
        except (NotInClass, NotInAnyClass) as e:
            _emit(args, {"graph": k, "error": str(e)}, f"{prefix}FAIL {e}")
            status = 1
            continue
        bound = bound_target(cls, cert.omega)
        ok = col.palette_size <= bound and col.is_proper(g)
        status = max(status, 0 if ok else 1)
        certs.append(cert.to_dict())
        _emit(
            args,
            {
                "graph": k,
                "class": cls.slug,
                "chi": col.palette_size,
                "omega": cert.omega,
                "bound": bound,
                "pass": ok,
                "coloring": list(col.colors),
                "steps": cert.kinds(),
            },
            f"{prefix}class={cls.slug} chi={col.palette_size} omega={cert.omega} bound={bound} "
            + ("PASS" if ok else "FAIL"),
        )
    if args.certificate:
        doc = certs[0] if len(certs) == 1 else {"certificates": certs}
        Path(args.certificate).write_text(json.dumps(doc, sort_keys=True, indent=1))
    return status


def _read_partition(path: str) -> GoodPartition:
    try:
        lines = [ln.split() for ln in Path(path).read_text().splitlines() if ln.strip() and not ln.startswith("#")]
    except OSError as e:
        raise UsageError(f"cannot read {path}: {e}") from e
    while len(lines) < 3:
        lines.append([])
    if len(lines) != 3:
        raise UsageError("a partition file has at most three lines of vertex indices")
    try:
        return GoodPartition.of(*([int(t) for t in ln] for ln in lines))
    except ValueError as e:
        raise UsageError(f"bad partition file: {e}") from e


def _color_good(args) -> int:
    if not args.partition:
        raise UsageError("--good needs --partition")
    g = read_graph(args.good)
    p = _read_partition(args.partition)
    try:
        col = color_good(g, p)
    except (NotGood, PreconditionOmega) as e:
        _emit(args, {"error": str(e)}, f"FAIL {e}")
        return 1
    w = clique_number(g, _budget(args))
    ok = col.palette_size == w
    _emit(
        args,
        {"chi": col.palette_size, "omega": w, "pass": ok, "coloring": list(col.colors)},
        f"good chi={col.palette_size} omega={w} " + ("PASS" if ok else "FAIL"),
    )
    return 0 if ok else 1


def cmd_check(args) -> int:
    status = 0
    graphs = _load(args.file)
    for k, g in enumerate(graphs):
        prefix = f"graph={k} " if len(graphs) > 1 else ""
        if args.cls == "auto":
            member = sorted(c.slug for c in class_membership(g))
            _emit(args, {"graph": k, "classes": member}, prefix + ("classes=" + ",".join(member) if member else "classes=none"))
            status = max(status, 0 if member else 1)
            continue
        emb = class_violation(g, _cls(args.cls))
        if emb is None:
            _emit(args, {"graph": k, "member": True}, prefix + f"member class={args.cls}")
        else:
            status = 1
            hosts = ",".join(map(str, emb.hosts))
            _emit(args, {"graph": k, "member": False, "witness": emb.to_dict()}, prefix + f"violation pattern={emb.pattern} hosts={hosts}")
    return status


def cmd_oracle(args) -> int:
    budget = _budget(args)
    for g in _load(args.file):
        if args.quantity == "chi":
            value = chromatic_number(g, budget)[0]
        elif args.quantity == "omega":
            value = clique_number(g, budget)
        elif args.quantity == "alpha":
            value = len(max_stable_set(g, budget))
        else:
            value = is_perfect(g, args.tier_n)
        _emit(args, {"quantity": args.quantity, "value": value}, str(value).lower() if isinstance(value, bool) else str(value))
    return 0


def cmd_gen(args) -> int:
    out = Path(args.output)
    out.mkdir(parents=True, exist_ok=True)
    lines = []
    for k in range(args.count):
        seed = args.seed + k
        if args.cls == "good":
            sizes = tuple(int(t) for t in args.sizes.split(","))
            if len(sizes) != 3:
                raise UsageError("--sizes needs three comma-separated counts")
            g, _ = random_good_graph(sizes, args.p, seed)
        else:
            if args.n is None:
                raise UsageError("gen needs -n")
            g = random_in_class(GenSpec(args.n, args.p, _cls(args.cls), seed))
        lines.append(to_graph6(g))
    size = f"q{args.sizes.replace(',', '-')}" if args.cls == "good" else f"n{args.n}"
    name = f"{args.cls}-{size}-p{args.p}-s{args.seed}.g6"
    path = out / name
    path.write_text("\n".join(lines) + "\n")
    _emit(args, {"path": str(path), "count": len(lines)}, str(path))
    return 0


def cmd_decompose(args) -> int:
    g = read_graph(args.file)
    if args.cycle:
        cyc = tuple(int(t) for t in args.cycle.split(","))
    else:
        emb = find_c5(g)
        if emb is None:
            _emit(args, {"error": "no induced C5"}, "no induced C5")
            return 1
        cyc = emb.hosts
    try:
        d = decompose_c5(g, cyc)
    except ForbiddenTrace as e:
        _emit(args, {"error": str(e)}, f"FAIL {e}")
        return 1
    level = args.level
    if level is None:
        member = class_membership(g)
        level = "L" if ClassId.THREEP1P2_K4E in member else "M" if ClassId.TWOP1P3_K4E in member else "O"
    report = check_properties(g, d, level)
    flags = sorted(structural_flags(d))
    text = "\n".join(d.lines() + report.lines() + ["flags " + " ".join(flags), TRACE_NOTE])
    payload = {
        "cycle": list(d.C),
        "sets": {ln.split()[0]: [int(t) for t in ln.split()[1:]] for ln in d.lines()[1:]},
        "level": level,
        "properties": report.lines(),
        "flags": flags,
        "note": TRACE_NOTE,
    }
    _emit(args, payload, text)
    return 0 if report.all_pass else 1


def cmd_verify(args) -> int:
    cfg = harness.Config.from_env(
        tier_n=args.tier_n,
        node_budget=args.budget,
        seed=args.seed,
        with_oracle=not args.no_oracle,
        certificate_dir=args.certificates,
        **({"threads": args.threads} if args.threads else {}),
    )
    if args.certificates:
        Path(args.certificates).mkdir(parents=True, exist_ok=True)
    cls = None if args.cls in (None, "auto") else _cls(args.cls)
    if args.corpus:
        graphs = harness.load_corpus(args.corpus)
    else:
        if cls is None:
            raise UsageError("verify needs --corpus or --class with --count")
        from .generators import class_corpus

        graphs = class_corpus(cls, args.count, args.seed, args.max_n)
    report = harness.verify(graphs, cls, cfg)
    if args.report:
        Path(args.report).write_text(json.dumps(report, sort_keys=True, indent=1))
    s = report["summary"]
    if args.json:
        print(json.dumps(report, sort_keys=True))
    else:
        for r in report["records"]:
            status = "PASS" if r["pass"] else "FAIL"
            line = f"{r['id']} class={r['class']} n={r['n']} omega={r['omega']} chi={r['chi_algorithm']} bound={r['bound']} {status}"
            if r["error"]:
                line += f" ({r['error']})"
            print(line)
        print(f"total={s['total']} passed={s['passed']} failed={s['failed']} hash={report['stable_hash'][:16]}")
    return 0 if s["failed"] == 0 else 1


# parser --------------------------------------------------------------


def _common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--json", action="store_true", help="machine-readable output")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--tier-n", type=int, default=40, help="largest n for the perfection check")
    p.add_argument("--budget", type=int, default=20_000_000, help="oracle node budget")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="chromabound", description="Colorers and oracles for (F, K4-e)-free graphs")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("color", help="color a graph and check the class bound")
    p.add_argument("file", nargs="?")
    p.add_argument("--class", dest="cls", choices=CLASS_CHOICES + ["auto"])
    p.add_argument("--certificate", help="write the derivation certificate as JSON")
    p.add_argument("--good", help="graph file to color as a good graph")
    p.add_argument("--partition", help="file with the three cliques, one line each")
    _common(p)
    p.set_defaults(func=cmd_color)

    p = sub.add_parser("check", help="class membership with a witness")
    p.add_argument("file")
    p.add_argument("--class", dest="cls", choices=CLASS_CHOICES + ["auto"], default="auto")
    _common(p)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("oracle", help="exact chi, omega, alpha or perfection")
    p.add_argument("quantity", choices=["chi", "omega", "alpha", "perfect"])
    p.add_argument("file")
    _common(p)
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("gen", help="write seeded graphs as graph6 lines")
    p.add_argument("--class", dest="cls", choices=CLASS_CHOICES + ["good"], required=True)
    p.add_argument("-n", type=int)
    p.add_argument("-p", type=float, default=0.5)
    p.add_argument("--sizes", default="4,4,4", help="clique sizes for --class good")
    p.add_argument("--count", type=int, default=1)
    p.add_argument("-o", "--output", required=True)
    _common(p)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("decompose", help="C5 decomposition and property audit")
    p.add_argument("file")
    p.add_argument("--cycle", help="five comma-separated vertices; default is the least induced C5")
    p.add_argument("--level", choices=["O", "M", "L"])
    _common(p)
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("verify", help="run the verification harness over a corpus")
    p.add_argument("--corpus", help="graph file or directory")
    p.add_argument("--class", dest="cls", choices=CLASS_CHOICES + ["auto"])
    p.add_argument("--count", type=int, default=100, help="generated corpus size when no --corpus")
    p.add_argument("--max-n", type=int, default=18)
    p.add_argument("--report", help="write the JSON report here")
    p.add_argument("--certificates", help="directory for per-graph certificates")
    p.add_argument("--threads", type=int)
    p.add_argument("--no-oracle", action="store_true")
    _common(p)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 0 if e.code == 0 else 2
    try:
        return args.func(args)
    except INPUT_ERRORS as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except ChromaboundError as e:
        print(f"error: {type(e).__name__}: {e}", file=sys.stderr)
        return 1
    except (ValueError, KeyError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
