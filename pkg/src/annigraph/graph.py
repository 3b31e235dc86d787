"""Group-annihilator graphs: x ~ y iff [x:G][y:G]G = {0}, i.e. exp(G) | d_x d_y."""

from __future__ import annotations

import os
from collections import defaultdict
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from .errors import EquitabilityViolated, GraphTooLarge, WrongGroupKind
from .groups import FiniteAbelianGroup, Orbit, annihilator, valuation

GRAPH_CAP = 10_000


def default_cap() -> int:
    return int(os.environ.get("ANNIGRAPH_MAX_VERTICES", GRAPH_CAP))


@dataclass(frozen=True, eq=False)
class Graph:
    """Simple undirected graph; row v is a Python int with bit u set iff u ~ v."""

    n: int
    rows: tuple[int, ...]
    labels: tuple[str, ...] | None = None

    def __post_init__(self):
        if len(self.rows) != self.n:
            raise ValueError("need one adjacency row per vertex")

    def validate(self) -> "Graph":
        """Check simplicity and symmetry; importers call this on untrusted input."""
        for v, r in enumerate(self.rows):
            if r < 0 or r >> self.n:
                raise ValueError(f"row {v} references a vertex outside 0..{self.n - 1}")
            if r >> v & 1:
                raise ValueError(f"self loop at {v}")
        A = self.dense(np.uint8)
        if not np.array_equal(A, A.T):
            raise ValueError("adjacency is not symmetric")
        return self

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]], labels=None) -> "Graph":
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"self loop at {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows), None if labels is None else tuple(labels))

    @classmethod
    def from_adjacency(cls, A, labels=None) -> "Graph":
        A = np.asarray(A)
        n = A.shape[0]
        return cls.from_edges(n, zip(*np.nonzero(np.triu(A, 1))), labels)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return bits(self.rows[v])

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def degrees(self) -> list[int]:
        return [r.bit_count() for r in self.rows]

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in bits(self.rows[u] >> (u + 1), u + 1)]

    @property
    def num_edges(self) -> int:
        return sum(self.degrees()) // 2

    def dense(self, dtype=np.int64) -> np.ndarray:
        nbytes = (self.n + 7) // 8
        A = np.zeros((self.n, self.n), dtype=dtype)
        for v, r in enumerate(self.rows):
            raw = np.frombuffer(r.to_bytes(nbytes, "little"), dtype=np.uint8)
            A[v] = np.unpackbits(raw, bitorder="little")[: self.n]
        return A

    def laplacian(self) -> np.ndarray:
        A = self.dense()
        return np.diag(A.sum(axis=1)) - A

    def vertex_label(self, v: int) -> str:
        return self.labels[v] if self.labels else str(v)

    def same_edges(self, other: "Graph") -> bool:
        return self.n == other.n and self.rows == other.rows


def bits(x: int, offset: int = 0) -> list[int]:
    out = []
    while x:
        low = x & -x
        out.append(low.bit_length() - 1 + offset)
        x ^= low
    return out


@dataclass(frozen=True, eq=False)
class AnnGraph(Graph):
    group: FiniteAbelianGroup | None = None
    vertex_gen: tuple[int, ...] = field(default=())


def element_label(G: FiniteAbelianGroup, idx: int) -> str:
    c = G.coords(idx)
    return str(c[0]) if G.rank == 1 else "(" + ",".join(map(str, c)) + ")"


def vertex_generators(G: FiniteAbelianGroup) -> list[int]:
    """d_v with [v:G] = d_v Z, one per element index."""
    if G.is_cyclic_p_group():
        p, (alpha,) = G.p_group_view
        return [p ** valuation(a, p, alpha) for a in range(G.order)]
    return [annihilator(G, G.coords(v)).generator for v in range(G.order)]


def build_graph(G: FiniteAbelianGroup, cap: int | None = None) -> AnnGraph:
    """Gamma(G) on vertices 0..|G|-1 in element-index order."""
    cap = default_cap() if cap is None else cap
    if G.order > cap:
        raise GraphTooLarge(f"|G| = {G.order} exceeds vertex cap {cap}")
    gens = vertex_generators(G)
    exp = G.exponent
    by_gen: dict[int, int] = defaultdict(int)
    for v, d in enumerate(gens):
        by_gen[d] |= 1 << v
    # mask of all vertices whose generator pairs with d to kill G
    mask = {d: sum(m for e, m in by_gen.items() if (d * e) % exp == 0) for d in by_gen}
    rows = tuple(mask[d] & ~(1 << v) for v, d in enumerate(gens))
    labels = tuple(element_label(G, v) for v in range(G.order))
    return AnnGraph(G.order, rows, labels, group=G, vertex_gen=tuple(gens))


def _require_cyclic(G: FiniteAbelianGroup) -> tuple[int, int]:
    if not G.is_cyclic_p_group():
        raise WrongGroupKind(f"{G} is not a cyclic p-group")
    p, (alpha,) = G.p_group_view
    return p, alpha


def cyclic_orbits(G: FiniteAbelianGroup) -> list[Orbit]:
    """[O_{alpha,1}, O_{alpha,p}, ..., O_{alpha,p^alpha} = {0}]."""
    p, alpha = _require_cyclic(G)
    members: list[set[int]] = [set() for _ in range(alpha + 1)]
    for a in range(G.order):
        members[valuation(a, p, alpha)].add(a)
    return [Orbit(p, alpha, i, frozenset(m)) for i, m in enumerate(members)]


@dataclass(frozen=True)
class QuotientGraph:
    parts: tuple[frozenset[int], ...]
    sizes: tuple[int, ...]
    M: np.ndarray


def equitable_quotient(g: Graph, parts: Sequence[Iterable[int]]) -> QuotientGraph:
    """Quotient matrix m_ij = |N(u) & V_j|, recomputed for every u in V_i."""
    parts = tuple(frozenset(P) for P in parts)
    masks = [sum(1 << v for v in P) for P in parts]
    s = len(parts)
    M = np.zeros((s, s), dtype=np.int64)
    for i, P in enumerate(parts):
        first = True
        for u in sorted(P):
            row = [(g.rows[u] & m).bit_count() for m in masks]
            if first:
                M[i] = row
                first = False
            elif list(M[i]) != row:
                raise EquitabilityViolated(f"vertex {u} in part {i} sees {row}, expected {list(M[i])}")
    return QuotientGraph(parts, tuple(len(P) for P in parts), M)


def quotient(G: FiniteAbelianGroup, g: Graph | None = None) -> QuotientGraph:
    """Equitable quotient of Gamma(Z/p^alpha) with V_i = O_{alpha, p^(alpha+1-i)}, so V_1 = {0}."""
    _require_cyclic(G)
    g = build_graph(G) if g is None else g
    orbits = cyclic_orbits(G)
    return equitable_quotient(g, [o.members for o in reversed(orbits)])


def degree_sequence(g: Graph) -> list[int]:
    return sorted(g.degrees(), reverse=True)


@dataclass(frozen=True)
class Metrics:
    diameter: int | None  # None when disconnected
    girth: int | None  # None for forests
    eccentricity_of_zero: int | None


def _eccentricity(g: Graph, s: int) -> int | None:
    full = (1 << g.n) - 1
    seen = 1 << s
    frontier = [s]
    d = 0
    while seen != full:
        nxt = 0
        for v in frontier:
            nxt |= g.rows[v]
        nxt &= ~seen
        if not nxt:
            return None
        seen |= nxt
        frontier = bits(nxt)
        d += 1
    return d


def girth(g: Graph) -> int | None:
    for u, v in g.edges():
        if g.rows[u] & g.rows[v]:
            return 3
    best = None
    for s in range(g.n):
        dist = {s: 0}
        parent = {s: -1}
        queue = [s]
        for v in queue:
            for w in g.neighbors(v):
                if w not in dist:
                    dist[w] = dist[v] + 1
                    parent[w] = v
                    queue.append(w)
                elif parent[v] != w:
                    c = dist[v] + dist[w] + 1
                    best = c if best is None else min(best, c)
    return best


def metrics(g: Graph, with_diameter: bool = True) -> Metrics:
    ecc0 = _eccentricity(g, 0) if g.n > 1 else 0
    diam = None
    if with_diameter:
        eccs = [_eccentricity(g, v) for v in range(g.n)] if g.n > 1 else [0]
        diam = None if any(e is None for e in eccs) else max(eccs)
    return Metrics(diam, girth(g), ecc0)


def twin_orbits(g: Graph) -> list[frozenset[int]]:
    """Classes of u ~ v iff N(u) - {v} = N(v) - {u}, ordered by smallest member."""
    parent = list(range(g.n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for key in (lambda v: g.rows[v], lambda v: g.rows[v] | 1 << v):
        first: dict[int, int] = {}
        for v in range(g.n):
            k = key(v)
            if k in first:
                parent[find(v)] = find(first[k])
            else:
                first[k] = v
    classes: dict[int, set[int]] = defaultdict(set)
    for v in range(g.n):
        classes[find(v)].add(v)
    return sorted((frozenset(c) for c in classes.values()), key=min)
