"""Largest eigenvalues of adjacency and signless Laplacian matrices.

The solver is the cyclic two-sided Jacobi method, compiled with numba and
run over whole batches of small matrices.  The result carries a certified
bracket for the top eigenvalue:

* lower end: the Rayleigh quotient of the returned eigenvector,
* upper end: a Bauer-Fike bound on the computed decomposition M V ~ V D,
  max(D) + ||M V - V D||_F / sigma_min(V),

both padded for the rounding error of evaluating them in double precision.
"""

from __future__ import annotations

from dataclasses import dataclass
import math

import numpy as np
from numba import njit

from .graph import Graph
from .interval import Interval

DEFAULT_TOL = 1e-10
MAX_SWEEPS = 60
_U = np.finfo(float).eps / 2


class SpectralInputError(ValueError):
    pass


@dataclass(frozen=True)
class SpectralResult:
    lambda_max: float
    lo: float
    hi: float
    residual: float
    iterations: int

    @property
    def bracket(self) -> Interval:
        return Interval(self.lo, self.hi)


def adjacency_matrix(g: Graph) -> np.ndarray:
    n = g.n
    rows = np.array(g.rows, dtype=np.uint64)
    return ((rows[:, None] >> np.arange(n, dtype=np.uint64)) & np.uint64(1)).astype(float)


def signless_laplacian(g: Graph) -> np.ndarray:
    a = adjacency_matrix(g)
    return a + np.diag(a.sum(axis=1))


def batch_matrices(graphs, kind: str = "q") -> np.ndarray:
    """Stack A or Q for graphs that all share the same order."""
    n = graphs[0].n
    rows = np.array([g.rows for g in graphs], dtype=np.uint64)
    a = ((rows[:, :, None] >> np.arange(n, dtype=np.uint64)) & np.uint64(1)).astype(float)
    if kind == "q":
        idx = np.arange(n)
        a[:, idx, idx] = a.sum(axis=2)
    elif kind != "a":
        raise ValueError(f"kind must be 'a' or 'q', got {kind!r}")
    return a


@njit(cache=True)
def _jacobi_one(a, v, target, max_sweeps):
    """Cyclic-by-row Jacobi on one matrix, in place; returns sweeps used."""
    n = a.shape[0]
    for sweep in range(max_sweeps + 1):
        off = 0.0
        for p in range(n - 1):
            for q in range(p + 1, n):
                off += 2.0 * a[p, q] * a[p, q]
        if math.sqrt(off) <= target or sweep == max_sweeps:
            return sweep
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                # rotations below this size cannot change any diagonal entry
                if abs(apq) <= 1e-18 * (abs(a[p, p]) + abs(a[q, q])) + 1e-290:
                    continue
                tau = (a[q, q] - a[p, p]) / (2.0 * apq)
                if tau >= 0:
                    t = 1.0 / (tau + math.hypot(1.0, tau))
                else:
                    t = -1.0 / (-tau + math.hypot(1.0, tau))
                c = 1.0 / math.sqrt(1.0 + t * t)
                s = t * c
                for k in range(n):
                    akp = a[k, p]
                    akq = a[k, q]
                    a[k, p] = c * akp - s * akq
                    a[k, q] = s * akp + c * akq
                for k in range(n):
                    apk = a[p, k]
                    aqk = a[q, k]
                    a[p, k] = c * apk - s * aqk
                    a[q, k] = s * apk + c * aqk
                for k in range(n):
                    vkp = v[k, p]
                    vkq = v[k, q]
                    v[k, p] = c * vkp - s * vkq
                    v[k, q] = s * vkp + c * vkq
    return max_sweeps


@njit(cache=True)
def _jacobi_batch(m, v, target, max_sweeps, sweeps):
    for i in range(m.shape[0]):
        sweeps[i] = _jacobi_one(m[i], v[i], target[i], max_sweeps)


def jacobi_eigen(mats: np.ndarray, tol: float = DEFAULT_TOL):
    """Diagonalize a batch (B, n, n) of symmetric matrices.

    Returns (eigenvalues (B, n) unsorted, eigenvectors (B, n, n) by column,
    sweeps per matrix).
    """
    m = np.array(mats, dtype=float, copy=True)
    b, n, _ = m.shape
    v = np.broadcast_to(np.eye(n), (b, n, n)).copy()
    scale = np.sqrt((m * m).sum(axis=(1, 2)))
    target = np.maximum(1e-3 * tol, 4 * _U * scale)
    sweeps = np.zeros(b, dtype=np.int64)
    _jacobi_batch(m, v, target, MAX_SWEEPS, sweeps)
    return np.diagonal(m, axis1=1, axis2=2).copy(), v, sweeps


def largest_eigenvalues(mats: np.ndarray, tol: float = DEFAULT_TOL) -> list[SpectralResult]:
    """Certified top eigenvalue for each matrix of a batch."""
    mats = np.asarray(mats, dtype=float)
    if mats.ndim != 3 or mats.shape[1] != mats.shape[2] or mats.shape[1] < 1:
        raise SpectralInputError(f"expected a (B, n, n) batch, got shape {mats.shape}")
    if not np.all(np.isfinite(mats)):
        raise SpectralInputError("matrix has non-finite entries")
    if not np.array_equal(mats, np.swapaxes(mats, 1, 2)):
        raise SpectralInputError("matrix is not symmetric")
    if tol <= 0:
        raise SpectralInputError("tol must be positive")
    b, n, _ = mats.shape
    d, v, sweeps = jacobi_eigen(mats, tol)

    top = np.argmax(d, axis=1)
    idx = np.arange(b)
    dmax = d[idx, top]
    x = v[idx, :, top]
    x = x / np.linalg.norm(x, axis=1)[:, None]
    y = np.einsum("bij,bj->bi", mats, x)
    rayleigh = np.einsum("bi,bi->b", x, y) / np.einsum("bi,bi->b", x, x)
    residual = np.abs(y - rayleigh[:, None] * x).max(axis=1)

    gamma = (n + 3) * _U / (1 - (n + 3) * _U)
    frob = np.sqrt((mats * mats).sum(axis=(1, 2)))
    dabs = np.abs(d).max(axis=1)
    lo = rayleigh - 2 * gamma * (frob + np.abs(rayleigh))

    e = np.einsum("bij,bjk->bik", mats, v) - v * d[:, None, :]
    e_norm = np.sqrt((e * e).sum(axis=(1, 2)))
    e_norm += gamma * np.sqrt(n) * 1.01 * (frob + dabs)
    gram = np.einsum("bji,bjk->bik", v, v) - np.eye(n)
    eta = np.sqrt((gram * gram).sum(axis=(1, 2))) + 2 * gamma * n
    if np.any(eta >= 0.5):
        raise ArithmeticError("Jacobi eigenvectors lost orthogonality")
    hi = (dmax + e_norm / np.sqrt(1 - eta)) * (1 + 4 * _U) + 4 * _U * np.abs(dmax)
    lo = np.minimum(lo, hi)
    est = np.clip(rayleigh, lo, hi)

    return [
        SpectralResult(float(est[i]), float(lo[i]), float(hi[i]), float(residual[i]), int(sweeps[i]))
        for i in range(b)
    ]


def largest_eigenvalue(m: np.ndarray, tol: float = DEFAULT_TOL) -> SpectralResult:
    m = np.asarray(m, dtype=float)
    if m.ndim != 2:
        raise SpectralInputError(f"expected a square matrix, got shape {m.shape}")
    return largest_eigenvalues(m[None], tol)[0]


def q_radius(g: Graph, tol: float = DEFAULT_TOL) -> SpectralResult:
    return largest_eigenvalue(signless_laplacian(g), tol)


def lambda1(g: Graph, tol: float = DEFAULT_TOL) -> SpectralResult:
    return largest_eigenvalue(adjacency_matrix(g), tol)


def batch_radii(graphs, kind: str = "q", tol: float = DEFAULT_TOL, chunk: int = 4096) -> list[SpectralResult]:
    """q (kind='q') or lambda1 (kind='a') for many graphs, grouped by order."""
    out: list[SpectralResult | None] = [None] * len(graphs)
    by_n: dict[int, list[int]] = {}
    for i, g in enumerate(graphs):
        by_n.setdefault(g.n, []).append(i)
    for idxs in by_n.values():
        for start in range(0, len(idxs), chunk):
            part = idxs[start:start + chunk]
            res = largest_eigenvalues(batch_matrices([graphs[i] for i in part], kind), tol)
            for i, r in zip(part, res):
                out[i] = r
    return out
