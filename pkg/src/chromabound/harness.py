"""Corpus verification: class check, coloring, bound check, oracle, audit."""

from __future__ import annotations

import hashlib
import json
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from pathlib import Path
from typing import Iterable

from .colorers import FLAG_FALLBACK_NONPERFECT, bound_target, color_in_class
from .decomposition import check_properties, decompose_c5
from .errors import ChromaboundError, NotInClass
from .formats import read_graphs, to_graph6
from .graph import Graph
from .oracle import PERFECT_TIER_N, OracleBudget, chromatic_number
from .patterns import ClassId, class_membership, find_c5

SCHEMA_VERSION = 1
AUDIT_LEVEL = {ClassId.P12P2_K4E: "O", ClassId.TWOP1P3_K4E: "M", ClassId.THREEP1P2_K4E: "L"}


@dataclass(frozen=True)
class Config:
    tier_n: int = PERFECT_TIER_N
    oracle_tier_n: int = 24
    node_budget: int = 20_000_000
    seed: int = 0
    threads: int = 1
    with_oracle: bool = True
    certificate_dir: str | None = None

    def __post_init__(self):
        if self.tier_n <= 0 or self.oracle_tier_n <= 0 or self.node_budget <= 0:
            raise ValueError("tiers and budgets must be positive")
        if self.threads < 1:
            raise ValueError("parallelism must be at least 1")

    @classmethod
    def from_env(cls, **kw) -> "Config":
        env = os.environ.get("CHROMABOUND_THREADS")
        if env:
            kw["threads"] = int(env)
        return cls(**kw)


@dataclass
class Record:
    id: str
    cls: str | None
    n: int
    omega: int | None = None
    chi_algorithm: int | None = None
    chi_oracle: int | None = None
    bound: int | None = None
    passed: bool = False
    error: str | None = None
    witness: dict | None = None
    audit: str | None = None
    flags: list[str] = field(default_factory=list)
    steps: list[str] = field(default_factory=list)
    certificate: str | None = None
    graph6: str = ""

    def to_dict(self) -> dict:
        d = asdict(self)
        d["class"] = d.pop("cls")
        d["pass"] = d.pop("passed")
        return d


def _safe_name(gid: str) -> str:
    return "".join(c if c.isalnum() or c in "-_." else "_" for c in gid)


def run_one(gid: str, g: Graph, cls: ClassId | None, cfg: Config) -> tuple[Record, float]:
    """One graph through the pipeline; domain errors become failing records."""
    start = time.perf_counter()
    rec = Record(gid, cls.slug if cls else None, g.n, graph6=to_graph6(g))
    budget = OracleBudget(cfg.node_budget)
    try:
        if cls is None:
            member = class_membership(g)
            if not member:
                raise NotInClass("graph belongs to none of the three classes")
            cls = min(member, key=lambda c: c.constant)
            rec.cls = cls.slug
        col, cert = color_in_class(g, cls, budget, cfg.tier_n)
        rec.omega = cert.omega
        rec.chi_algorithm = col.palette_size
        rec.bound = bound_target(cls, cert.omega)
        rec.flags = sorted(set(cert.flags))
        rec.steps = sorted(set(cert.kinds()))
        proper = col.is_proper(g)
        rec.passed = proper and col.palette_size <= rec.bound
        if cfg.with_oracle and g.n <= cfg.oracle_tier_n:
            rec.chi_oracle = chromatic_number(g, budget)[0]
            if rec.chi_oracle > rec.chi_algorithm:
                rec.passed = False
                rec.error = "oracle chromatic number exceeds the palette"
        c5 = find_c5(g)
        if c5 is not None:
            report = check_properties(g, decompose_c5(g, c5.hosts), AUDIT_LEVEL[cls])
            rec.audit = "pass" if report.all_pass else "fail"
            if not report.all_pass:
                rec.passed = False
                rec.error = "property audit: " + "; ".join(r.line() for r in report.failures)
        if FLAG_FALLBACK_NONPERFECT in rec.flags:
            rec.passed = False
            rec.error = "structure-theorem fallback on a non-perfect core"
        if cfg.certificate_dir:
            path = Path(cfg.certificate_dir) / f"{_safe_name(gid)}.json"
            path.write_text(cert.to_json())
            rec.certificate = str(path)
    except NotInClass as e:
        rec.error = f"NotInClass: {e}"
        v = e.violation
        if hasattr(v, "to_dict"):
            rec.witness = v.to_dict()
    except ChromaboundError as e:
        rec.error = f"{type(e).__name__}: {e}"
    return rec, time.perf_counter() - start


def _job(args):
    return run_one(*args)


def verify(graphs: Iterable[tuple[str, Graph]], cls: ClassId | None, cfg: Config) -> dict:
    """Run the pipeline over a corpus and assemble the report (records sorted by id)."""
    jobs = [(gid, g, cls, cfg) for gid, g in graphs]
    if cfg.threads > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(cfg.threads) as pool:
            results = list(pool.map(_job, jobs, chunksize=8))
    else:
        results = [_job(j) for j in jobs]
    results.sort(key=lambda rt: rt[0].id)
    records = [r.to_dict() for r, _ in results]
    cells: dict[str, int] = {}
    for r in records:
        if r["chi_algorithm"] is not None:
            key = f"{r['class']}:{r['omega']}"
            cells[key] = max(cells.get(key, 0), r["chi_algorithm"])
    failed = [r["id"] for r in records if not r["pass"]]
    report = {
        "schema_version": SCHEMA_VERSION,
        "config": {k: v for k, v in asdict(cfg).items() if k not in ("threads", "certificate_dir")},
        "records": records,
        "summary": {
            "total": len(records),
            "passed": len(records) - len(failed),
            "failed": len(failed),
            "failed_ids": failed,
            "flagged_ids": [r["id"] for r in records if FLAG_FALLBACK_NONPERFECT in r["flags"]],
            "max_palette": dict(sorted(cells.items())),
        },
    }
    report["stable_hash"] = stable_hash(report)
    report["timings"] = {r.id: round(t, 6) for r, t in results}
    return report


def stable_hash(report: dict) -> str:
    body = {k: v for k, v in report.items() if k not in ("timings", "stable_hash")}
    return hashlib.sha256(json.dumps(body, sort_keys=True).encode()).hexdigest()


def load_corpus(path: str | Path) -> list[tuple[str, Graph]]:
    """Graphs from a file or every graph file in a directory, with stable ids."""
    p = Path(path)
    files = sorted(f for f in p.iterdir() if f.is_file()) if p.is_dir() else [p]
    out = []
    for f in files:
        gs = read_graphs(f)
        if len(gs) == 1:
            out.append((f.stem, gs[0]))
        else:
            out.extend((f"{f.stem}:{k:04d}", g) for k, g in enumerate(gs))
    return out
