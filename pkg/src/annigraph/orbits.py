"""Aut(G)-orbits on a finite abelian group: Miller's count and an exact search oracle."""

from __future__ import annotations

import itertools
import math
from collections import defaultdict
from dataclasses import dataclass
from typing import Iterator, Sequence

from sympy import divisors, factorint

from .errors import GroupTooLarge
from .groups import FiniteAbelianGroup, make_group

AUT_CAP = 64


@dataclass(frozen=True)
class PartitionType:
    """G_{lambda,p} = Z/p^lambda_1 + ... + Z/p^lambda_r."""

    lam: tuple[int, ...]
    p: int = 2

    def __post_init__(self):
        lam = tuple(sorted((int(x) for x in self.lam), reverse=True))
        if any(x < 1 for x in lam):
            raise ValueError("partition parts must be >= 1")
        object.__setattr__(self, "lam", lam)

    def group(self) -> FiniteAbelianGroup:
        return make_group([self.p**x for x in self.lam])


def miller_orbit_count(t: PartitionType | Sequence[int]) -> int:
    """(lambda_r + 1) * prod_i (lambda_i - lambda_{i+1} + 1)."""
    lam = t.lam if isinstance(t, PartitionType) else tuple(sorted(t, reverse=True))
    if not lam:
        return 1
    out = lam[-1] + 1
    for a, b in zip(lam, lam[1:]):
        out *= a - b + 1
    return out


def ss_orbit_count_experimental(t: PartitionType | Sequence[int]) -> int:
    """Distinct-parts formula evaluated exactly as printed: EXPERIMENTAL, never asserted.

    With tau_1 < ... < tau_s the distinct parts, sums over k = 0..s and index
    sets i_1 < ... < i_k the term tau_{i_k} * prod_{j<k} (tau_{i_j} - tau_{i_{j+1}} - 1);
    the k = 0 term is taken as 1.
    """
    lam = t.lam if isinstance(t, PartitionType) else tuple(t)
    tau = sorted(set(lam))
    total = 0
    for k in range(len(tau) + 1):
        for idx in itertools.combinations(range(len(tau)), k):
            if k == 0:
                total += 1
                continue
            term = tau[idx[-1]]
            for j in range(k - 1):
                term *= tau[idx[j]] - tau[idx[j + 1]] - 1
            total += term
    return total


def p_components(G: FiniteAbelianGroup) -> dict[int, tuple[int, ...]]:
    """prime -> partition of the p-primary part."""
    comp: dict[int, list[int]] = defaultdict(list)
    for n in G.moduli:
        for p, e in factorint(n).items():
            comp[p].append(e)
    return {p: tuple(sorted(v, reverse=True)) for p, v in sorted(comp.items())}


def miller_orbit_count_group(G: FiniteAbelianGroup) -> int:
    """Product of the per-prime counts (Aut(G) splits over primary components)."""
    return math.prod(miller_orbit_count(lam) for lam in p_components(G).values())


class _Arith:
    """Index-level arithmetic on G for the searches below."""

    def __init__(self, G: FiniteAbelianGroup):
        self.G = G
        self.n = G.order
        self.coords = [G.coords(i) for i in range(self.n)]
        self.add = [[G.index(tuple(a + b for a, b in zip(self.coords[i], self.coords[j])))
                     for j in range(self.n)] for i in range(self.n)]

    def mul(self, k: int, x: int) -> int:
        return self.G.index(tuple(k * a for a in self.coords[x]))

    def span(self, gens: Sequence[int]) -> set[int]:
        seen = {0}
        frontier = [0]
        while frontier:
            nxt = []
            for x in frontier:
                for g in gens:
                    y = self.add[x][g]
                    if y not in seen:
                        seen.add(y)
                        nxt.append(y)
            frontier = nxt
        return seen

    def image(self, hs: Sequence[int], x: int) -> int:
        """phi(x) where phi(e_t) = hs[t]."""
        acc = 0
        for c, h in zip(self.coords[x], hs):
            acc = self.add[acc][self.mul(c, h)]
        return acc

    def invariant(self, x: int, sub: dict[int, frozenset[int]]) -> tuple:
        # membership of every multiple m*x in every dG; preserved by automorphisms
        return tuple(tuple(self.mul(m, x) in s for s in sub.values()) for m in sub)


def _candidates(ar: _Arith) -> list[list[int]]:
    """Per generator e_t, elements h with n_t h = 0, the homomorphism condition."""
    return [[h for h in range(ar.n) if ar.mul(n, h) == 0] for n in ar.G.moduli]


def automorphisms(G: FiniteAbelianGroup, cap: int = AUT_CAP) -> Iterator[tuple[int, ...]]:
    """Every automorphism as the tuple of generator images, by full enumeration.

    Candidate images are filtered by order, then by injectivity of the partial
    map (the span of the first t images must have n_1 ... n_t elements).
    """
    if G.order > cap:
        raise GroupTooLarge(f"|G| = {G.order} exceeds automorphism cap {cap}")
    ar = _Arith(G)
    cands = _candidates(ar)
    moduli = G.moduli

    def rec(t, hs, size):
        if t == len(moduli):
            yield tuple(hs)
            return
        for h in cands[t]:
            if len(ar.span(hs + [h])) == size * moduli[t]:
                yield from rec(t + 1, hs + [h], size * moduli[t])

    yield from rec(0, [], 1)


def _find_automorphism(ar: _Arith, cands, x: int, y: int) -> tuple[int, ...] | None:
    """Some automorphism with phi(x) = y, as generator images, or None."""
    moduli = ar.G.moduli
    support = [t for t, c in enumerate(ar.coords[x]) if c]
    order = support + [t for t in range(len(moduli)) if t not in support]
    last_support = len(support)

    def rec(pos, hs, size):
        if pos == last_support:
            full = [0] * len(moduli)
            for t, h in zip(order, hs):
                full[t] = h
            if ar.image(full, x) != y:
                return None
        if pos == len(order):
            full = [0] * len(moduli)
            for t, h in zip(order, hs):
                full[t] = h
            return tuple(full)
        t = order[pos]
        for h in cands[t]:
            if len(ar.span(hs + [h])) == size * moduli[t]:
                found = rec(pos + 1, hs + [h], size * moduli[t])
                if found is not None:
                    return found
        return None

    return rec(0, [], 1)


@dataclass(frozen=True)
class OrbitResult:
    orbits: tuple[frozenset[int], ...]
    witnesses: tuple[tuple[int, ...], ...]  # automorphisms used to merge elements


def bruteforce_aut_orbits(G: FiniteAbelianGroup, cap: int = AUT_CAP) -> OrbitResult:
    """Exact Aut(G)-orbit partition, orbits sorted by smallest element index.

    Elements are first split by an automorphism invariant (which multiples m*x
    lie in which dG); inside a block, y joins the orbit of x only when an
    explicit automorphism sending x to y is found by backtracking.
    """
    if G.order > cap:
        raise GroupTooLarge(f"|G| = {G.order} exceeds automorphism cap {cap}")
    ar = _Arith(G)
    cands = _candidates(ar)
    sub = {d: frozenset(ar.mul(d, x) for x in range(ar.n)) for d in divisors(G.exponent)}
    blocks: dict[tuple, list[int]] = defaultdict(list)
    for x in range(ar.n):
        blocks[ar.invariant(x, sub)].append(x)
    orbits, witnesses = [], []
    for block in blocks.values():
        left = list(block)
        while left:
            x = left.pop(0)
            orbit = {x}
            for y in list(left):
                phi = _find_automorphism(ar, cands, x, y)
                if phi is not None:
                    orbit.add(y)
                    left.remove(y)
                    witnesses.append(phi)
            orbits.append(frozenset(orbit))
    return OrbitResult(tuple(sorted(orbits, key=min)), tuple(witnesses))


def apply_automorphism(G: FiniteAbelianGroup, images: Sequence[int], x: int) -> int:
    return _Arith(G).image(images, x)


def orbit_report(lam: Sequence[int], p: int, cap: int = AUT_CAP) -> dict:
    t = PartitionType(tuple(lam), p)
    miller = miller_orbit_count(t)
    ss = ss_orbit_count_experimental(t)
    G = t.group()
    oracle = len(bruteforce_aut_orbits(G, cap).orbits) if G.order <= cap else None
    return {"lambda": list(t.lam), "p": p, "miller": miller, "oracle": oracle,
            "ss_experimental": ss, "agree": ss == miller}


def partitions_within(p: int, cap: int = AUT_CAP) -> list[tuple[int, ...]]:
    """All partitions lambda with p^|lambda| <= cap."""
    out = []
    total = 1
    while p ** total <= cap:
        out.extend(_partitions(total, total))
        total += 1
    return out


def _partitions(n: int, largest: int) -> list[tuple[int, ...]]:
    if n == 0:
        return [()]
    out = []
    for first in range(min(n, largest), 0, -1):
        out.extend((first,) + rest for rest in _partitions(n - first, first))
    return out
