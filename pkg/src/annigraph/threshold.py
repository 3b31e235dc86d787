"""Threshold graphs: alternating 4-cycles, creation sequences, Ferrers conjugates, Laplacian spectra."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Sequence

from .errors import NotThreshold
from .graph import Graph, bits, degree_sequence


@dataclass(frozen=True)
class CreationSequence:
    """b_i = 0: vertex i arrives isolated; b_i = 1: vertex i arrives dominating."""

    bits: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "bits", tuple(int(b) for b in self.bits))
        if any(b not in (0, 1) for b in self.bits):
            raise ValueError("creation sequence bits must be 0 or 1")

    @classmethod
    def from_string(cls, s: str) -> "CreationSequence":
        return cls(tuple(int(c) for c in s.strip()))

    @classmethod
    def from_runs(cls, runs: Sequence[tuple[int, int]]) -> "CreationSequence":
        """From (bit, repeat) pairs, e.g. [(0, 1), (1, 4)] -> 01111."""
        return cls(tuple(b for b, r in runs for _ in range(r)))

    def __len__(self):
        return len(self.bits)

    def __str__(self):
        return "".join(map(str, self.bits))

    def is_connected(self) -> bool:
        return len(self.bits) == 1 or self.bits[-1] == 1


@dataclass(frozen=True)
class IntPartition:
    parts: tuple[int, ...]

    def __post_init__(self):
        parts = tuple(int(x) for x in self.parts)
        if any(x < 0 for x in parts):
            raise ValueError("partition parts must be non-negative")
        object.__setattr__(self, "parts", tuple(sorted(parts, reverse=True)))

    def nonzero(self) -> "IntPartition":
        return IntPartition(tuple(x for x in self.parts if x))

    def conjugate(self) -> "IntPartition":
        top = self.parts[0] if self.parts else 0
        return IntPartition(tuple(sum(1 for x in self.parts if x >= j) for j in range(1, top + 1)))

    @property
    def size(self) -> int:
        return sum(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __len__(self):
        return len(self.parts)


def conjugate(x: IntPartition | Sequence[int]) -> IntPartition:
    if not isinstance(x, IntPartition):
        x = IntPartition(tuple(x))
    return x.conjugate()


def find_alternating_4cycle(g: Graph, method: str = "vicinal") -> tuple[int, int, int, int] | None:
    """(a, b, c, d) with ab, cd edges and ac, bd non-edges, or None when g is threshold.

    "naive" scans ordered edge pairs (a, b), (c, d) and returns the first witness.
    "vicinal" sorts vertices by degree and compares neighbourhoods of
    consecutive vertices only: g is threshold iff N(v) - {u} lies in N(u) for
    every such pair (u ahead of v), since the vicinal preorder is transitive.
    Both return None on exactly the same graphs; witnesses may differ.
    """
    if method == "naive":
        return _naive_4cycle(g)
    if method != "vicinal":
        raise ValueError(f"unknown method {method!r}")
    order = sorted(range(g.n), key=lambda v: (-g.degree(v), v))
    for u, v in zip(order, order[1:]):
        nu = g.rows[u] | 1 << u
        nv = g.rows[v] | 1 << v
        if g.rows[v] & ~nu:
            extra_u = g.rows[u] & ~nv
            extra_v = g.rows[v] & ~nu
            if not extra_u:
                raise AssertionError("degree order violated")
            x = (extra_u & -extra_u).bit_length() - 1
            y = (extra_v & -extra_v).bit_length() - 1
            return u, x, y, v
    return None


def _naive_4cycle(g: Graph):
    full = (1 << g.n) - 1
    for a in range(g.n):
        non_a = full & ~g.rows[a] & ~(1 << a)
        for b in bits(g.rows[a]):
            non_b = full & ~g.rows[b] & ~(1 << b) & ~(1 << a)
            for c in bits(non_a & ~(1 << b)):
                d_set = g.rows[c] & non_b
                if d_set:
                    return a, b, c, (d_set & -d_set).bit_length() - 1
    return None


def is_threshold(g: Graph) -> bool:
    return find_alternating_4cycle(g) is None


def peel_creation_sequence(g: Graph) -> CreationSequence:
    """Strip isolated (0) or dominating (1) vertices until one is left, then reverse.

    A vertex's degree in what remains is its original degree minus the number
    of dominating vertices already removed, so sorting once is enough.
    """
    if g.n == 0:
        return CreationSequence(())
    order = sorted(range(g.n), key=lambda v: g.degree(v))
    lo, hi = 0, g.n - 1
    removed_dom = 0
    out = []
    while lo < hi:
        remaining = hi - lo + 1
        if g.degree(order[lo]) - removed_dom == 0:
            out.append(0)
            lo += 1
        elif g.degree(order[hi]) - removed_dom == remaining - 1:
            out.append(1)
            hi -= 1
            removed_dom += 1
        else:
            raise NotThreshold(f"no isolated or dominating vertex among {remaining} remaining")
    out.append(0)
    return CreationSequence(tuple(reversed(out)))


def graph_from_creation_sequence(seq: CreationSequence | str | Sequence[int]) -> Graph:
    if isinstance(seq, str):
        seq = CreationSequence.from_string(seq)
    elif not isinstance(seq, CreationSequence):
        seq = CreationSequence(tuple(seq))
    rows = [0] * len(seq)
    for v, b in enumerate(seq.bits):
        if b:
            rows[v] = (1 << v) - 1
            for u in range(v):
                rows[u] |= 1 << v
    return Graph(len(seq), tuple(rows))


def orbit_size(p: int, alpha: int, i: int) -> int:
    """|O_{alpha,p^i}|: phi(p^alpha)/p^i, or 1 for the zero orbit."""
    return 1 if i == alpha else (p - 1) * p ** (alpha - 1 - i)


def closed_form_creation_sequence(p: int, alpha: int) -> CreationSequence:
    """Creation word of Gamma(Z/p^alpha) built orbit by orbit.

    alpha = 2k:   0 1^{|O_k|-1} 0^{|O_{k-1}|} 1^{|O_{k+1}|} ... 0^{|O_0|} 1^{|O_{2k}|}
    alpha = 2k-1: 0^{|O_{k-1}|} 1^{|O_k|} 0^{|O_{k-2}|} 1^{|O_{k+1}|} ... 0^{|O_0|} 1^{|O_{2k-1}|}
    """
    if alpha < 1:
        raise ValueError("alpha must be >= 1")
    O = lambda i: orbit_size(p, alpha, i)  # noqa: E731
    if alpha % 2 == 0:
        k = alpha // 2
        runs = [(0, 1), (1, O(k) - 1)]
        for t in range(1, k + 1):
            runs += [(0, O(k - t)), (1, O(k + t))]
    else:
        k = (alpha + 1) // 2
        runs = []
        for t in range(k):
            runs += [(0, O(k - 1 - t)), (1, O(k + t))]
    return CreationSequence.from_runs(runs)


def clique_independent_split(p: int, alpha: int) -> tuple[set[int], set[int]]:
    """(independent set, clique) of Gamma(Z/p^alpha): valuations below alpha/2 versus the rest."""
    from .groups import valuation

    indep, clique = set(), set()
    for a in range(p**alpha):
        (indep if 2 * valuation(a, p, alpha) < alpha else clique).add(a)
    return indep, clique


def laplacian_spectrum_threshold(g: Graph, check: bool = True) -> list[int]:
    """Conjugate degree sequence padded with zeros to n values, non-increasing."""
    if check and not is_threshold(g):
        raise NotThreshold("graph has an alternating 4-cycle")
    conj = conjugate(degree_sequence(g)).parts
    if len(conj) > g.n:
        raise AssertionError("conjugate longer than vertex count")
    return list(conj) + [0] * (g.n - len(conj))


def closed_form_degrees(p: int, alpha: int) -> dict[int, int]:
    """degree -> number of vertices of Gamma(Z/p^alpha)."""
    deg: Counter[int] = Counter({p**alpha - 1: 1})
    for i in range(alpha):
        deg[p**i if 2 * i < alpha else p**i - 1] += orbit_size(p, alpha, i)
    return dict(deg)


def laplacian_multiplicity_table(p: int, alpha: int) -> dict[int, int]:
    """Laplacian eigenvalue -> multiplicity for Gamma(Z/p^alpha), from the Ferrers diagram.

    With distinct degrees d_1 > d_2 > ... and C_t vertices of degree >= d_t,
    the conjugate takes value C_t exactly d_t - d_{t+1} times (d_last+1 = 0).
    """
    deg = closed_form_degrees(p, alpha)
    ds = sorted((d for d in deg if d > 0), reverse=True)
    table: dict[int, int] = {}
    cum = 0
    for t, d in enumerate(ds):
        cum += deg[d]
        nxt = ds[t + 1] if t + 1 < len(ds) else 0
        if d > nxt:
            table[cum] = table.get(cum, 0) + d - nxt
    table[0] = table.get(0, 0) + 1
    return table
