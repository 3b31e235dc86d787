"""Dense symmetric eigenvalues: cyclic Jacobi rotations, with LAPACK for large matrices."""

from __future__ import annotations

from dataclasses import dataclass

import numba
import numpy as np

from .errors import GraphTooLarge, NoConvergence, NotSymmetric

EIGEN_CAP = 3000
JACOBI_MAX_DIM = 256


@dataclass(frozen=True)
class Spectrum:
    eigenvalues: np.ndarray  # ascending
    tol: float  # achieved residual: off-diagonal norm (jacobi) or max |Av - lambda v| (lapack)
    method: str = "jacobi"
    sweeps: int = 0

    def __len__(self):
        return len(self.eigenvalues)

    def __iter__(self):
        return iter(self.eigenvalues)

    def count_near(self, value: float, radius: float = 1e-6) -> int:
        return int(np.sum(np.abs(self.eigenvalues - value) <= radius))


@numba.njit(cache=True)
def _jacobi_sweep(a):
    n = a.shape[0]
    for p in range(n - 1):
        for q in range(p + 1, n):
            apq = a[p, q]
            if apq == 0.0:
                continue
            app = a[p, p]
            aqq = a[q, q]
            if abs(apq) < 1e-18 * (abs(app) + abs(aqq)):
                a[p, q] = 0.0
                a[q, p] = 0.0
                continue
            theta = (aqq - app) / (2.0 * apq)
            if theta >= 0.0:
                t = 1.0 / (theta + np.sqrt(theta * theta + 1.0))
            else:
                t = -1.0 / (-theta + np.sqrt(theta * theta + 1.0))
            c = 1.0 / np.sqrt(t * t + 1.0)
            s = t * c
            for k in range(n):
                apk = a[p, k]
                aqk = a[q, k]
                a[p, k] = c * apk - s * aqk
                a[q, k] = s * apk + c * aqk
            for k in range(n):
                akp = a[k, p]
                akq = a[k, q]
                a[k, p] = c * akp - s * akq
                a[k, q] = s * akp + c * akq
            a[p, q] = 0.0
            a[q, p] = 0.0


def off_diagonal_norm(a: np.ndarray) -> float:
    # summing the off-diagonal entries directly; ||A||^2 - sum(diag^2) cancels badly
    b = a.copy()
    np.fill_diagonal(b, 0.0)
    return float(np.sqrt(np.sum(b * b)))


def jacobi_eigenvalues(A, tol: float = 1e-10, max_sweeps: int = 100) -> Spectrum:
    a = np.array(A, dtype=np.float64, copy=True)
    sweeps = 0
    off = off_diagonal_norm(a)
    while off > tol:
        if sweeps >= max_sweeps:
            raise NoConvergence(f"off-diagonal norm {off:.3e} > {tol:.1e} after {sweeps} sweeps")
        _jacobi_sweep(a)
        sweeps += 1
        off = off_diagonal_norm(a)
    return Spectrum(np.sort(np.diag(a)), off, "jacobi", sweeps)


def lapack_eigenvalues(A) -> Spectrum:
    a = np.asarray(A, dtype=np.float64)
    w, v = np.linalg.eigh(a)
    resid = float(np.max(np.linalg.norm(a @ v - v * w, axis=0))) if len(w) else 0.0
    return Spectrum(w, resid, "lapack", 0)


def symmetric_eigenvalues(A, tol: float = 1e-10, max_sweeps: int = 100, method: str = "auto",
                          cap: int = EIGEN_CAP) -> Spectrum:
    """Eigenvalues of a dense real symmetric matrix, ascending.

    method: "jacobi" (cyclic Jacobi, stops once the off-diagonal Frobenius norm is
    <= tol), "lapack" (numpy eigh), or "auto" (jacobi up to JACOBI_MAX_DIM rows,
    lapack beyond). Trace and Frobenius norm are checked against the result.
    """
    a = np.asarray(A, dtype=np.float64)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise NotSymmetric(f"square matrix required, got shape {a.shape}")
    n = a.shape[0]
    if n > cap:
        raise GraphTooLarge(f"dimension {n} exceeds eigensolver cap {cap}")
    if n and np.max(np.abs(a - a.T)) > 1e-12:
        raise NotSymmetric("matrix is not symmetric within 1e-12")
    if method == "auto":
        method = "jacobi" if n <= JACOBI_MAX_DIM else "lapack"
    if method == "jacobi":
        spec = jacobi_eigenvalues(a, tol, max_sweeps)
    elif method == "lapack":
        spec = lapack_eigenvalues(a)
    else:
        raise ValueError(f"unknown method {method!r}")
    scale = max(1.0, float(np.abs(a).max(initial=0.0))) * max(n, 1)
    bound = 10 * max(tol, spec.tol) * scale + 1e-9 * scale
    lam = spec.eigenvalues
    assert abs(lam.sum() - np.trace(a)) <= bound, "trace invariant violated"
    assert abs(np.sum(lam**2) - np.sum(a * a)) <= bound * scale, "Frobenius invariant violated"
    return spec
