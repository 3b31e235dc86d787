"""Finite abelian groups and their a-annihilator ideals [a:G].

Elements are addressed by a mixed-radix index, little-endian in factor
order: coords (a_0, a_1, ...) <-> a_0 + n_0*(a_1 + n_1*(a_2 + ...)).
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterator, Sequence

from sympy import divisors, factorint

from .errors import CaseNotCovered, InvalidGroup, OracleCapExceeded, WrongGroupKind

log = logging.getLogger(__name__)

ORACLE_CAP = 100_000


def prime_power(n: int) -> tuple[int, int] | None:
    """Return (p, e) with n = p**e, or None if n is not a prime power."""
    if n < 2:
        return None
    f = factorint(n)
    if len(f) != 1:
        return None
    (p, e), = f.items()
    return p, e


@dataclass(frozen=True)
class FiniteAbelianGroup:
    moduli: tuple[int, ...]
    order: int = field(init=False)
    exponent: int = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "moduli", tuple(int(n) for n in self.moduli))
        if not self.moduli:
            raise InvalidGroup("a group needs at least one cyclic factor")
        for n in self.moduli:
            if n < 2:
                raise InvalidGroup(f"modulus {n} < 2")
        object.__setattr__(self, "order", math.prod(self.moduli))
        object.__setattr__(self, "exponent", math.lcm(*self.moduli))

    @property
    def rank(self) -> int:
        return len(self.moduli)

    @cached_property
    def p_group_view(self) -> tuple[int, tuple[int, ...]] | None:
        """(p, exponents in factor order) when every modulus is a power of one prime p."""
        pps = [prime_power(n) for n in self.moduli]
        if any(pp is None for pp in pps):
            return None
        primes = {pp[0] for pp in pps}
        if len(primes) != 1:
            return None
        return pps[0][0], tuple(pp[1] for pp in pps)

    @property
    def partition(self) -> tuple[int, ...] | None:
        """Type lambda of a p-group, non-increasing."""
        view = self.p_group_view
        return None if view is None else tuple(sorted(view[1], reverse=True))

    def is_cyclic_p_group(self) -> bool:
        return self.rank == 1 and self.p_group_view is not None

    def is_homogeneous_p_group(self) -> bool:
        view = self.p_group_view
        return view is not None and self.rank >= 2 and len(set(view[1])) == 1

    def is_strict_rank3_p_group(self) -> bool:
        view = self.p_group_view
        if view is None or self.rank != 3:
            return False
        a, b, c = view[1]
        return a < b < c

    # element indexing
    def index(self, coords: Sequence[int]) -> int:
        idx = 0
        for a, n in zip(reversed(coords), reversed(self.moduli)):
            idx = idx * n + (a % n)
        return idx

    def coords(self, index: int) -> tuple[int, ...]:
        out = []
        for n in self.moduli:
            index, r = divmod(index, n)
            out.append(r)
        return tuple(out)

    def element(self, coords: Sequence[int] | int) -> "GroupElement":
        if isinstance(coords, int):
            coords = (coords,)
        return GroupElement(self, tuple(coords))

    def elements(self) -> Iterator["GroupElement"]:
        for i in range(self.order):
            yield GroupElement(self, self.coords(i))

    def zero(self) -> "GroupElement":
        return GroupElement(self, (0,) * self.rank)

    def generators(self) -> list["GroupElement"]:
        """Canonical generators e_t = (0, ..., 1, ..., 0)."""
        return [GroupElement(self, tuple(int(s == t) for s in range(self.rank))) for t in range(self.rank)]

    def __str__(self):
        return " + ".join(f"Z/{n}Z" for n in self.moduli)


@dataclass(frozen=True)
class GroupElement:
    group: FiniteAbelianGroup = field(repr=False)
    coords: tuple[int, ...]

    def __post_init__(self):
        if len(self.coords) != self.group.rank:
            raise InvalidGroup(f"element has {len(self.coords)} coordinates, group has rank {self.group.rank}")
        object.__setattr__(self, "coords", tuple(int(a) % n for a, n in zip(self.coords, self.group.moduli)))

    @property
    def index(self) -> int:
        return self.group.index(self.coords)

    def __add__(self, other: "GroupElement") -> "GroupElement":
        return GroupElement(self.group, tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __neg__(self):
        return GroupElement(self.group, tuple(-a for a in self.coords))

    def __rmul__(self, k: int) -> "GroupElement":
        return GroupElement(self.group, tuple(k * a for a in self.coords))

    def is_zero(self) -> bool:
        return not any(self.coords)

    def order(self) -> int:
        return math.lcm(*(n // math.gcd(a, n) for a, n in zip(self.coords, self.group.moduli)))


@dataclass(frozen=True)
class IdealZ:
    """The ideal dZ of the integers, recorded with the exponent of the ambient group."""

    generator: int
    context_exponent: int

    def __contains__(self, x: int) -> bool:
        if self.generator == 0:
            return x == 0
        return x % self.generator == 0

    def __mul__(self, other: "IdealZ") -> "IdealZ":
        return IdealZ(self.generator * other.generator, self.context_exponent)

    def annihilates_group(self) -> bool:
        """True iff (dZ)G = {0}, i.e. exp(G) divides d."""
        return self.generator % self.context_exponent == 0

    def __str__(self):
        return f"{self.generator}Z"


@dataclass(frozen=True)
class Orbit:
    """O_{alpha, p^i}: elements of Z/p^alpha Z of p-adic valuation exactly i."""

    p: int
    alpha: int
    i: int
    members: frozenset[int]


def make_group(moduli: Sequence[int]) -> FiniteAbelianGroup:
    return FiniteAbelianGroup(tuple(moduli))


def cyclic(n: int) -> FiniteAbelianGroup:
    return FiniteAbelianGroup((n,))


def _as_element(G: FiniteAbelianGroup, a) -> GroupElement:
    if isinstance(a, GroupElement):
        return a
    if isinstance(a, int):
        return G.element((a,)) if G.rank == 1 else G.element(G.coords(a))
    return G.element(tuple(a))


def valuation(a: int, p: int, alpha: int) -> int:
    """p-adic valuation of a residue mod p**alpha, capped at alpha (so 0 -> alpha)."""
    a %= p**alpha
    if a == 0:
        return alpha
    i = 0
    while a % p == 0:
        a //= p
        i += 1
    return i


def p_valuation(G: FiniteAbelianGroup, a) -> int:
    if not G.is_cyclic_p_group():
        raise WrongGroupKind(f"{G} is not a cyclic p-group")
    p, (alpha,) = G.p_group_view
    return valuation(_as_element(G, a).coords[0], p, alpha)


def annihilator_bruteforce(G: FiniteAbelianGroup, a, cap: int = ORACLE_CAP) -> IdealZ:
    """[a:G] by enumerating the cyclic subgroup Za.

    Tests divisors d of exp(G) in ascending order and returns the first one
    with d*e_t in Za for every canonical generator e_t.
    """
    if G.order > cap:
        raise OracleCapExceeded(f"|G| = {G.order} exceeds oracle cap {cap}")
    a = _as_element(G, a)
    moduli = G.moduli
    span = set()
    x = (0,) * G.rank
    while True:
        idx = G.index(x)
        if idx in span:
            break
        span.add(idx)
        x = tuple((u + v) % n for u, v, n in zip(x, a.coords, moduli))
    for d in divisors(G.exponent):
        if all(G.index(tuple(d if s == t else 0 for s in range(G.rank))) in span for t in range(G.rank)):
            return IdealZ(d, G.exponent)
    raise AssertionError("exp(G) always lies in [a:G]")


def annihilator_cyclic(G: FiniteAbelianGroup, a) -> IdealZ:
    i = p_valuation(G, a)
    return IdealZ(G.p_group_view[0] ** i, G.exponent)


def annihilator_homogeneous(G: FiniteAbelianGroup, a) -> IdealZ:
    """(Z/p^alpha Z)^l with l >= 2: every element has [a:G] = p^alpha Z."""
    if not G.is_homogeneous_p_group():
        raise WrongGroupKind(f"{G} is not (Z/p^alpha Z)^l with l >= 2")
    _as_element(G, a)
    return IdealZ(G.exponent, G.exponent)


def rank3_case(alpha: int, beta: int, gamma: int, k: int, j: int, i: int,
               complete: bool = True) -> tuple[str | None, int | None]:
    """Case label and exponent e with [(a,b,c):G] = p^e Z.

    (k, j, i) are the valuations of a, b, c in Z/p^alpha, Z/p^beta, Z/p^gamma
    (a zero coordinate has valuation equal to its exponent). Guards are tried
    in printed order, first match wins. Labels: A = a zero, B = a nonzero;
    suffix 1 = b zero, 2 = b nonzero; then the guard's position in its list.

    The printed guards leave j == beta - alpha (with j <= i and i > beta - alpha)
    uncovered. With ``complete`` that boundary is resolved by guard "B2.4*",
    which is guard B2.4 with its strict j < beta - alpha relaxed; otherwise
    (None, None) is returned for it.
    """
    A, B, C = alpha, beta, gamma
    if k == A:
        if j == B:
            if i == C:
                return "A1.1", C
            if 0 <= i <= B - 1:
                return "A1.2", B
            if B <= i <= C - 1:
                return "A1.3", i
        else:
            if i == C:
                return "A2.1", C
            if 0 <= i <= j:
                return "A2.2", B
            if j + 1 <= i <= C - B + j:
                return "A2.3", i + B - j
            if C - B + j + 1 <= i <= C - 1:
                return "A2.4", C
    elif j == B:
        if i == C:
            return "B1.1", C
        if 0 <= i <= B - A + k:
            return "B1.2", B
        if B - A + k + 1 <= i <= C - A + k - 1:
            return "B1.3", i + A - k
        if C - A + k <= i <= C - 1:
            return "B1.4", C
    else:
        if i == C:
            return "B2.1", C
        if i <= j and 0 <= i <= B - A and 0 <= i <= C - B + j:
            return "B2.2", B
        if i > j and 0 <= i <= B - A and 0 <= i <= C - B + j:
            return "B2.3", B + i - j
        if C - B + j >= i >= j and B - A < i and B - A > j:
            return "B2.4", i + B - j
        if C - B + j >= i >= j and C - A + k > i and j > B - A + k:
            return "B2.5", A - k + i
        if C - B + j >= i >= j and C - A + k <= i and j > B - A + k:
            return "B2.6", C
        if C - B + j >= i >= j and B - A < j <= B - A + k:
            return "B2.7", B + i - j
        if i < j and C - B + j >= i > B - A and j <= B - A + k:
            return "B2.8", B
        if i < j and C - B + j >= i and B - A + k > i > B - A and j > B - A + k:
            return "B2.9", B
        if i < j and C - B + j >= i and C - A + k > i >= B - A + k:
            return "B2.10", A + i - k
        if i < j and C - B + j >= i >= C - A + k and j > B - A + k:
            return "B2.11", C
        if C - B + j <= i <= C - 1:
            return "B2.12", C
        if complete and C - B + j >= i >= j and B - A < i and B - A == j:
            return "B2.4*", i + B - j
    return None, None


def annihilator_rank3(G: FiniteAbelianGroup, a, *, complete: bool = True, validate: bool = False) -> IdealZ:
    """[(a,b,c):G] for Z/p^alpha + Z/p^beta + Z/p^gamma with alpha < beta < gamma as written.

    Raises CaseNotCovered when no guard applies (only possible with
    ``complete=False``). With ``validate`` the brute-force oracle is run too and
    any disagreement is logged with the triple, the case label and both answers.
    """
    if not G.is_strict_rank3_p_group():
        raise WrongGroupKind(f"{G} is not Z/p^a + Z/p^b + Z/p^c with a < b < c")
    p, (alpha, beta, gamma) = G.p_group_view
    x = _as_element(G, a)
    k = valuation(x.coords[0], p, alpha)
    j = valuation(x.coords[1], p, beta)
    i = valuation(x.coords[2], p, gamma)
    label, e = rank3_case(alpha, beta, gamma, k, j, i, complete=complete)
    if label is None:
        raise CaseNotCovered(f"no case for valuations (k, j, i) = {(k, j, i)} in {G}")
    ideal = IdealZ(p**e, G.exponent)
    if validate:
        oracle = annihilator_bruteforce(G, x)
        if oracle.generator != ideal.generator:
            log.warning("rank-3 mismatch at %s (case %s): closed form %s, oracle %s",
                        x.coords, label, ideal, oracle)
    return ideal


def annihilator(G: FiniteAbelianGroup, a, cap: int = ORACLE_CAP) -> IdealZ:
    """[a:G] via the applicable closed form, else the brute-force oracle."""
    if G.is_cyclic_p_group():
        return annihilator_cyclic(G, a)
    if G.is_homogeneous_p_group():
        return annihilator_homogeneous(G, a)
    if G.is_strict_rank3_p_group():
        return annihilator_rank3(G, a)
    return annihilator_bruteforce(G, a, cap=cap)
