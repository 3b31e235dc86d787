"""Exact integer polynomials: characteristic polynomials and Sturm root isolation."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from .errors import NotSquarefree


@dataclass(frozen=True)
class IntPoly:
    """Polynomial with exact integer coefficients, ascending powers (coeffs[i] multiplies x**i)."""

    coeffs: tuple[int, ...]

    def __post_init__(self):
        c = [int(v) for v in self.coeffs]
        while len(c) > 1 and c[-1] == 0:
            c.pop()
        if not c:
            c = [0]
        object.__setattr__(self, "coeffs", tuple(c))

    @classmethod
    def from_desc(cls, coeffs: Sequence[int]) -> "IntPoly":
        return cls(tuple(reversed(list(coeffs))))

    @classmethod
    def from_roots(cls, roots: Sequence[int]) -> "IntPoly":
        out = cls((1,))
        for r in roots:
            out = out * cls((-r, 1))
        return out

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1 if self.coeffs != (0,) else -1

    @property
    def leading(self) -> int:
        return self.coeffs[-1]

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __add__(self, other: "IntPoly") -> "IntPoly":
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (n - len(self.coeffs))
        b = other.coeffs + (0,) * (n - len(other.coeffs))
        return IntPoly(tuple(x + y for x, y in zip(a, b)))

    def __mul__(self, other: "IntPoly") -> "IntPoly":
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPoly(tuple(out))

    def __pow__(self, k: int) -> "IntPoly":
        out = IntPoly((1,))
        for _ in range(k):
            out = out * self
        return out

    def derivative(self) -> "IntPoly":
        return IntPoly(tuple(i * c for i, c in enumerate(self.coeffs))[1:] or (0,))

    def to_json(self) -> dict:
        # decimal strings: coefficients overflow 64-bit consumers quickly
        return {"order": "ascending", "coefficients": [str(c) for c in self.coeffs]}

    def __str__(self):
        terms = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            mono = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
            coef = str(c) if (abs(c) != 1 or i == 0) else ("-" if c < 0 else "")
            terms.append(f"{coef}{mono}")
        return " + ".join(terms).replace("+ -", "- ") or "0"


def charpoly(A) -> IntPoly:
    """det(xI - A) for an integer matrix, exactly, by Faddeev-LeVerrier.

    Python integers throughout (object arrays), so no overflow; every division
    by k is exact.
    """
    A = np.asarray(A)
    n = A.shape[0]
    if A.shape != (n, n):
        raise ValueError("square matrix required")
    if not np.all(np.equal(np.mod(A, 1), 0)):
        raise ValueError("integer matrix required")
    Ao = np.array([[int(v) for v in row] for row in A.tolist()], dtype=object).reshape(n, n)
    eye = np.zeros((n, n), dtype=object)
    for i in range(n):
        eye[i, i] = 1
    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    AM = np.zeros((n, n), dtype=object)
    for k in range(1, n + 1):
        # M_k = A M_{k-1} + c_{n-k+1} I, and c_{n-k} = -tr(A M_k) / k
        AM = Ao.dot(AM + coeffs[n - k + 1] * eye)
        tr = sum(AM[i, i] for i in range(n)) if n else 0
        q, r = divmod(-tr, k)
        assert r == 0, "Faddeev-LeVerrier trace not divisible"
        coeffs[n - k] = q
    return IntPoly(tuple(coeffs))


# rational polynomial helpers (ascending lists of Fractions)

def _trim(a):
    a = list(a)
    while len(a) > 1 and a[-1] == 0:
        a.pop()
    return a


def _divmod(a, b):
    a = [Fraction(x) for x in a]
    b = _trim([Fraction(x) for x in b])
    if len(b) == 1 and b[0] == 0:
        raise ZeroDivisionError("polynomial division by zero")
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 1)
    a = _trim(a)
    while len(a) >= len(b) and any(a):
        shift = len(a) - len(b)
        f = a[-1] / b[-1]
        q[shift] = f
        for i, bc in enumerate(b):
            a[i + shift] -= f * bc
        a = _trim(a[:-1]) if len(a) > 1 else [Fraction(0)]
    return _trim(q), _trim(a)


def _is_zero(a):
    return all(x == 0 for x in a)


def _gcd(a, b):
    a, b = _trim(a), _trim(b)
    while not _is_zero(b):
        _, r = _divmod(a, b)
        a, b = b, r
    return [x / a[-1] for x in a]


def _primitive(a) -> IntPoly:
    a = _trim(a)
    den = math.lcm(*(Fraction(x).denominator for x in a))
    ints = [int(Fraction(x) * den) for x in a]
    g = math.gcd(*ints) or 1
    if ints[-1] < 0:
        g = -g
    return IntPoly(tuple(v // g for v in ints))


def poly_gcd(f: IntPoly, g: IntPoly) -> IntPoly:
    return _primitive(_gcd(f.coeffs, g.coeffs))


def is_squarefree(f: IntPoly) -> bool:
    return poly_gcd(f, f.derivative()).degree == 0


def squarefree_decomposition(f: IntPoly) -> list[tuple[IntPoly, int]]:
    """Yun's algorithm: f = c * prod(g_m ** m) with each g_m squarefree and coprime."""
    out = []
    fp = f.derivative().coeffs
    a = _gcd(f.coeffs, fp)
    b, _ = _divmod(f.coeffs, a)
    c, _ = _divmod(fp, a)
    d = [x - y for x, y in zip(_pad(c, len(_deriv(b))), _pad(_deriv(b), len(c)))]
    m = 1
    while len(_trim(b)) > 1:
        a = _gcd(b, d)
        if len(_trim(a)) > 1:
            out.append((_primitive(a), m))
        b, _ = _divmod(b, a)
        c, _ = _divmod(d, a)
        db = _deriv(b)
        d = [x - y for x, y in zip(_pad(c, len(db)), _pad(db, len(c)))]
        m += 1
    return out


def _deriv(a):
    return [i * x for i, x in enumerate(a)][1:] or [Fraction(0)]


def _pad(a, n):
    a = list(a)
    return a + [Fraction(0)] * (max(n, len(a)) - len(a))


# Sturm sequences

def sturm_sequence(f: IntPoly) -> list[list[Fraction]]:
    seq = [[Fraction(c) for c in f.coeffs], [Fraction(c) for c in f.derivative().coeffs]]
    while not _is_zero(seq[-1]) and len(_trim(seq[-1])) > 1:
        _, r = _divmod(seq[-2], seq[-1])
        if _is_zero(r):
            break
        seq.append([-x for x in r])
    return seq


def _eval(a, x):
    acc = Fraction(0)
    for c in reversed(a):
        acc = acc * x + c
    return acc


def sign_changes(seq, x) -> int:
    signs = [v for v in (_eval(p, x) for p in seq) if v != 0]
    return sum(1 for u, v in zip(signs, signs[1:]) if (u < 0) != (v < 0))


def root_bound(f: IntPoly) -> Fraction:
    """Cauchy bound: every real root lies strictly inside (-B, B)."""
    lead = abs(f.leading)
    return 1 + Fraction(max(abs(c) for c in f.coeffs[:-1]), lead) if f.degree > 0 else Fraction(1)


def count_roots(f: IntPoly, lo, hi) -> int:
    """Exact number of distinct real roots of f in (lo, hi]."""
    seq = sturm_sequence(f)
    return sign_changes(seq, Fraction(lo)) - sign_changes(seq, Fraction(hi))


@dataclass(frozen=True)
class RootBracket:
    lo: Fraction
    hi: Fraction

    @property
    def mid(self) -> float:
        return float((self.lo + self.hi) / 2)

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo


def real_roots(f: IntPoly, interval=None, tol=1e-12) -> list[RootBracket]:
    """Isolate the real roots of a squarefree f in (lo, hi] and refine each to width <= tol.

    The number of brackets is exact (Sturm); positions are accurate to tol.
    Exact rational roots come back as degenerate brackets lo == hi.
    """
    if f.degree < 1:
        return []
    if not is_squarefree(f):
        raise NotSquarefree(f"{f} has a repeated factor; deflate with squarefree_decomposition first")
    if interval is None:
        B = root_bound(f)
        lo, hi = -B, B
    else:
        lo, hi = (Fraction(v) for v in interval)
    tol = Fraction(tol)
    seq = sturm_sequence(f)
    fr = [Fraction(c) for c in f.coeffs]

    def V(x):
        return sign_changes(seq, x)

    out = []
    stack = [(lo, hi, V(lo), V(hi))]
    while stack:
        a, b, va, vb = stack.pop()
        n = va - vb
        if n == 0:
            continue
        if n == 1:
            out.append(_refine(fr, a, b, tol))
            continue
        m = (a + b) / 2
        vm = V(m)
        stack.append((m, b, vm, vb))
        stack.append((a, m, va, vm))
    return sorted(out, key=lambda r: r.lo)


def _refine(fr, a, b, tol) -> RootBracket:
    # single root in (a, b]
    fb = _eval(fr, b)
    if fb == 0:
        return RootBracket(b, b)
    fa = _eval(fr, a)
    while b - a > tol:
        m = (a + b) / 2
        fm = _eval(fr, m)
        if fm == 0:
            return RootBracket(m, m)
        if (fm < 0) == (fb < 0):
            b, fb = m, fm
        else:
            a, fa = m, fm
    return RootBracket(a, b)


def real_roots_with_multiplicity(f: IntPoly, tol=1e-12) -> list[tuple[RootBracket, int]]:
    out = []
    for g, m in squarefree_decomposition(f):
        out.extend((r, m) for r in real_roots(g, tol=tol))
    return sorted(out, key=lambda t: t[0].lo)
