"""Graph exporters and importers: graph6, DOT and edge-list JSON."""

from __future__ import annotations

import json
import re

from .errors import UnsupportedFormat
from .graph import Graph

FORMATS = ("graph6", "dot", "edge-list-json")


def _n_header(n: int) -> bytes:
    if n <= 62:
        return bytes([n + 63])
    if n <= 258047:
        return bytes([126] + [(n >> s & 63) + 63 for s in (12, 6, 0)])
    return bytes([126, 126] + [(n >> s & 63) + 63 for s in (30, 24, 18, 12, 6, 0)])


def to_graph6(g: Graph) -> bytes:
    # upper triangle, column by column: x(0,1), x(0,2), x(1,2), x(0,3), ...
    bitlist = [g.rows[i] >> j & 1 for j in range(1, g.n) for i in range(j)]
    bitlist += [0] * (-len(bitlist) % 6)
    body = bytes(63 + int("".join(map(str, bitlist[k:k + 6])), 2) for k in range(0, len(bitlist), 6))
    return _n_header(g.n) + body


def from_graph6(data: bytes | str) -> Graph:
    if isinstance(data, str):
        data = data.encode("ascii")
    data = data.strip()
    if data.startswith(b">>graph6<<"):
        data = data[10:]
    vals = [c - 63 for c in data]
    if any(v < 0 or v > 63 for v in vals):
        raise ValueError("graph6 byte out of range")
    if vals[0] != 63:
        n, pos = vals[0], 1
    elif vals[1] != 63:
        n, pos = (vals[1] << 12) | (vals[2] << 6) | vals[3], 4
    else:
        n = 0
        for v in vals[2:8]:
            n = n << 6 | v
        pos = 8
    need = (n * (n - 1) // 2 + 5) // 6
    if len(vals) - pos != need:
        raise ValueError(f"graph6 body has {len(vals) - pos} bytes, expected {need}")
    stream = [v >> s & 1 for v in vals[pos:] for s in range(5, -1, -1)]
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if stream[k]:
                edges.append((i, j))
            k += 1
    return Graph.from_edges(n, edges)


def to_dot(g: Graph, name: str = "G") -> bytes:
    lines = [f"graph {name} {{"]
    for v in range(g.n):
        lines.append(f'  {v} [label="{g.vertex_label(v)}"];')
    for u, v in g.edges():
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return ("\n".join(lines) + "\n").encode()


_DOT_NODE = re.compile(r'^\s*(\d+)\s*\[label="([^"]*)"\];\s*$')
_DOT_EDGE = re.compile(r"^\s*(\d+)\s*--\s*(\d+)\s*;\s*$")


def from_dot(data: bytes | str) -> Graph:
    """Reads the subset of DOT written by to_dot."""
    text = data.decode() if isinstance(data, bytes) else data
    labels: dict[int, str] = {}
    edges = []
    for line in text.splitlines():
        if m := _DOT_NODE.match(line):
            labels[int(m.group(1))] = m.group(2)
        elif m := _DOT_EDGE.match(line):
            edges.append((int(m.group(1)), int(m.group(2))))
    n = len(labels)
    if sorted(labels) != list(range(n)):
        raise ValueError("DOT vertices must be 0..n-1")
    return Graph.from_edges(n, edges, [labels[v] for v in range(n)]).validate()


def to_edge_list_json(g: Graph) -> bytes:
    doc = {"n": g.n, "edges": [list(e) for e in g.edges()], "labels": [g.vertex_label(v) for v in range(g.n)]}
    return json.dumps(doc).encode()


def from_edge_list_json(data: bytes | str) -> Graph:
    doc = json.loads(data)
    return Graph.from_edges(doc["n"], [tuple(e) for e in doc["edges"]], doc.get("labels")).validate()


_WRITERS = {"graph6": to_graph6, "dot": to_dot, "edge-list-json": to_edge_list_json}
_READERS = {"graph6": from_graph6, "dot": from_dot, "edge-list-json": from_edge_list_json}


def export(g: Graph, fmt: str) -> bytes:
    try:
        return _WRITERS[fmt](g)
    except KeyError:
        raise UnsupportedFormat(f"unknown format {fmt!r}; choose from {', '.join(FORMATS)}") from None


def import_graph(data: bytes | str, fmt: str) -> Graph:
    try:
        reader = _READERS[fmt]
    except KeyError:
        raise UnsupportedFormat(f"unknown format {fmt!r}; choose from {', '.join(FORMATS)}") from None
    return reader(data)
