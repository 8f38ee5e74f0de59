"""Readers and writers: edge list, graph6, DIMACS ``.col``."""

from __future__ import annotations

from pathlib import Path

from .errors import FormatError
from .graph import Graph

_G6_HEADER = ">>graph6<<"


def _encode_n(n: int) -> str:
    if n < 0:
        raise FormatError("negative order")
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return chr(126) + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    if n <= 68719476735:
        return chr(126) * 2 + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))
    raise FormatError("order too large for graph6")


def _decode_n(data: bytes) -> tuple[int, int]:
    if not data:
        raise FormatError("empty graph6 string")
    if data[0] != 126:
        return data[0] - 63, 1
    if len(data) >= 2 and data[1] == 126:
        chunk, start = data[2:8], 2
    else:
        chunk, start = data[1:4], 1
    if len(chunk) not in (3, 6):
        raise FormatError("truncated graph6 order field")
    n = 0
    for c in chunk:
        n = (n << 6) | (c - 63)
    return n, start + len(chunk)


def to_graph6(g: Graph) -> str:
    """graph6 string (no header, no newline).

    Bits are the upper triangle in column order: x(0,1), x(0,2), x(1,2), ...
    padded with zeros to a multiple of six.
    """
    out = [_encode_n(g.n)]
    acc = nbits = 0
    for j in range(1, g.n):
        row = g.adj[j]
        for i in range(j):
            acc = (acc << 1) | (row >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(acc + 63))
                acc = nbits = 0
    if nbits:
        out.append(chr((acc << (6 - nbits)) + 63))
    return "".join(out)


def from_graph6(text: str | bytes) -> Graph:
    if isinstance(text, str):
        text = text.encode("ascii")
    data = text.strip()
    if data.startswith(_G6_HEADER.encode()):
        data = data[len(_G6_HEADER):]
    if data.startswith(b":") or data.startswith(b";"):
        raise FormatError("sparse6 input is not supported")
    if any(c < 63 or c > 126 for c in data):
        raise FormatError("graph6 byte outside 63..126")
    n, pos = _decode_n(data)
    need = (n * (n - 1) // 2 + 5) // 6
    body = data[pos:]
    if len(body) != need:
        raise FormatError(f"graph6 body has {len(body)} bytes, expected {need}")
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            byte = body[k // 6] - 63
            if byte >> (5 - k % 6) & 1:
                edges.append((i, j))
            k += 1
    return Graph.from_edge_list(n, edges)


def to_edge_list_text(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"] + [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def from_edge_list_text(text: str) -> Graph:
    rows = [ln.split() for ln in text.splitlines()]
    rows = [r for r in rows if r and not r[0].startswith("#")]
    if not rows:
        raise FormatError("empty edge list")
    try:
        n, m = int(rows[0][0]), int(rows[0][1])
        edges = [(int(r[0]), int(r[1])) for r in rows[1:]]
    except (ValueError, IndexError) as exc:
        raise FormatError(f"bad edge list: {exc}") from None
    if len(edges) != m:
        raise FormatError(f"header says {m} edges, found {len(edges)}")
    return Graph.from_edge_list(n, edges)


def from_dimacs(text: str) -> Graph:
    n = None
    edges = []
    for ln in text.splitlines():
        parts = ln.split()
        if not parts or parts[0] == "c":
            continue
        if parts[0] == "p":
            if len(parts) < 4:
                raise FormatError("bad DIMACS problem line")
            n = int(parts[2])
        elif parts[0] == "e":
            if n is None:
                raise FormatError("edge before problem line")
            edges.append((int(parts[1]) - 1, int(parts[2]) - 1))
    if n is None:
        raise FormatError("missing DIMACS problem line")
    return Graph.from_edge_list(n, edges)


def read_graphs(path: str | Path) -> list[Graph]:
    """All graphs in a file; format chosen by suffix (.g6, .el, .col)."""
    path = Path(path)
    text = path.read_text()
    suffix = path.suffix.lower()
    if suffix == ".g6":
        return [from_graph6(ln) for ln in text.splitlines() if ln.strip()]
    if suffix == ".col":
        return [from_dimacs(text)]
    if suffix in (".el", ".txt", ".edges"):
        return [from_edge_list_text(text)]
    raise FormatError(f"unknown graph file suffix {suffix!r}")


def read_graph(path: str | Path) -> Graph:
    graphs = read_graphs(path)
    if not graphs:
        raise FormatError(f"no graph in {path}")
    return graphs[0]
