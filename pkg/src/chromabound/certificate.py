"""Derivation traces for colorings, with replay and a stable JSON form."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any

from .graph import Coloring, Graph, bits

SCHEMA_VERSION = 1

STEP_KINDS = (
    "PeelMinDegree",
    "PerfectBase",
    "ExactBase",
    "GoodPartitionUsed",
    "C7Isomorphic",
    "ExplicitStableSets",
    "MaxCliqueAnchor",
    "PieceColoring",
    "LFound",
    "CoBipartiteBase",
)


@dataclass
class Step:
    """One derivation step.  ``assignment`` maps root vertex ids to colors."""

    kind: str
    fields: dict[str, Any] = field(default_factory=dict)
    assignment: dict[int, int] = field(default_factory=dict)

    def __post_init__(self):
        if self.kind not in STEP_KINDS:
            raise ValueError(f"unknown step kind {self.kind!r}")

    def to_dict(self) -> dict:
        out: dict[str, Any] = {"kind": self.kind, "fields": self.fields}
        if self.assignment:
            out["assignment"] = [[v, c] for v, c in sorted(self.assignment.items())]
        return out

    @classmethod
    def from_dict(cls, d: dict) -> "Step":
        return cls(d["kind"], dict(d.get("fields", {})), {int(v): int(c) for v, c in d.get("assignment", [])})


@dataclass
class Certificate:
    cls: str
    n: int
    omega: int
    bound: int
    steps: list[Step] = field(default_factory=list)
    flags: list[str] = field(default_factory=list)

    def add(self, kind: str, assignment: dict[int, int] | None = None, **fields) -> Step:
        step = Step(kind, fields, dict(assignment or {}))
        self.steps.append(step)
        return step

    def kinds(self) -> list[str]:
        return [s.kind for s in self.steps]

    def has(self, kind: str, **match) -> bool:
        return any(s.kind == kind and all(s.fields.get(k) == v for k, v in match.items()) for s in self.steps)

    def replay(self, g: Graph) -> Coloring:
        """Rebuild the coloring: base assignments, then peeled vertices in reverse, smallest free color."""
        colors: dict[int, int] = {}
        for s in self.steps:
            colors.update(s.assignment)
        for s in reversed(self.steps):
            if s.kind != "PeelMinDegree":
                continue
            v = s.fields["v"]
            taken = {colors[u] for u in bits(g.adj[v]) if u in colors}
            c = 0
            while c in taken:
                c += 1
            colors[v] = c
        return Coloring.from_mapping(g.n, colors)

    def to_dict(self) -> dict:
        return {
            "schema_version": SCHEMA_VERSION,
            "class": self.cls,
            "n": self.n,
            "omega": self.omega,
            "bound": self.bound,
            "flags": sorted(self.flags),
            "steps": [s.to_dict() for s in self.steps],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=1)

    @classmethod
    def from_dict(cls, d: dict) -> "Certificate":
        if d.get("schema_version") != SCHEMA_VERSION:
            raise ValueError(f"unsupported certificate schema {d.get('schema_version')!r}")
        return cls(d["class"], d["n"], d["omega"], d["bound"], [Step.from_dict(s) for s in d["steps"]], list(d["flags"]))
