"""Dense complex eigensolver for the channel matrices.

Characteristic polynomial (Faddeev-LeVerrier), roots by Durand-Kerner,
eigenvectors by inverse iteration.  The loops live in ``_backend``.
"""
from __future__ import annotations

import math

import numpy as np

from . import _backend
from .errors import ConvergenceFailure, DimensionError

MAX_DIM = 32
DK_MAXITER = 500
DK_TOL = 1e-13
INVIT_MAXITER = 50
SHIFT_OFFSET = 1e-10
CLUSTER_TOL = 1e-8
MERGE_TOL = 1e-4
RESIDUAL_BOUND = 1e-8

_EPS = np.finfo(float).eps


def _square(a) -> np.ndarray:
    a = np.asarray(a, dtype=complex)
    if a.ndim != 2 or a.shape[0] != a.shape[1] or a.shape[0] < 1:
        raise DimensionError(f"expected a non-empty square matrix, got shape {a.shape}")
    if not np.all(np.isfinite(a)):
        raise ValueError("matrix has non-finite entries")
    return a


def poly_roots(coeffs) -> np.ndarray:
    """Roots of the monic polynomial ``coeffs`` (highest degree first)."""
    c = np.asarray(coeffs, dtype=complex)
    n = len(c) - 1
    if n < 1:
        return np.zeros(0, dtype=complex)
    # rescale so the roots are O(1) for the fixed starting points
    powers = np.arange(1, n + 1)
    mags = np.abs(c[1:])
    scale = float(np.max(np.where(mags > 0, mags ** (1.0 / powers), 0.0)))
    if scale == 0.0:
        return np.zeros(n, dtype=complex)
    scaled = c / scale ** np.arange(n + 1)
    roots, iters, ok = _backend.durand_kerner(scaled, DK_MAXITER, DK_TOL)
    if not ok:
        raise ConvergenceFailure(f"Durand-Kerner did not converge in {iters} iterations")
    return _merge_multiple(scaled, np.asarray(roots, dtype=complex)) * scale


def _merge_multiple(c: np.ndarray, roots: np.ndarray) -> np.ndarray:
    """Collapse root clusters that approximate one multiple root.

    A k-fold root is only resolved to about eps**(1/k), so its copies come
    back scattered.  A candidate group is merged when the polynomial at the
    group mean is zero to rounding level.
    """
    n = len(roots)
    noise = 4.0 * n * _EPS
    out = roots.copy()
    for group in cluster_roots(roots, MERGE_TOL):
        if len(group) < 2:
            continue
        mu = _polish(c, complex(np.mean(roots[group])), len(group))
        bound = float(np.polyval(np.abs(c), abs(mu)))
        if abs(np.polyval(c, mu)) <= noise * bound:
            out[group] = mu
    return out


def _polish(c: np.ndarray, z: complex, k: int, steps: int = 8) -> complex:
    # a k-fold root of p is a simple root of p^(k-1)
    d = np.polyder(c, k - 1) if k > 1 else c
    dd = np.polyder(d)
    for _ in range(steps):
        den = np.polyval(dd, z)
        if den == 0:
            break
        step = np.polyval(d, z) / den
        z -= step
        if abs(step) <= _EPS * max(1.0, abs(z)):
            break
    return complex(z)


def cluster_roots(roots: np.ndarray, tol: float = CLUSTER_TOL) -> list[list[int]]:
    """Group indices of roots lying within ``tol`` (relative) of each other."""
    n = len(roots)
    parent = list(range(n))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i in range(n):
        for j in range(i + 1, n):
            size = max(1.0, abs(roots[i]), abs(roots[j]))
            if abs(roots[i] - roots[j]) <= tol * size:
                parent[find(i)] = find(j)
    groups: dict[int, list[int]] = {}
    for i in range(n):
        groups.setdefault(find(i), []).append(i)
    return sorted(groups.values(), key=lambda g: g[0])


def fix_phase(v: np.ndarray) -> np.ndarray:
    """Unit 2-norm with the largest-magnitude entry real and positive."""
    v = v / np.linalg.norm(v)
    k = int(np.argmax(np.abs(v)))
    mag = abs(v[k])
    v = v * (mag / v[k])
    v[k] = mag
    return v


def _start_vector(n: int, k: int) -> np.ndarray:
    v = np.ones(n, dtype=complex)
    if k < n:
        v[k] += 1.0 + 0.5j
    return v


def complex_eig(a) -> list[tuple[complex, np.ndarray]]:
    """All ``n`` eigenpairs of a complex matrix, with multiplicity.

    Vectors are unit-norm with a fixed phase.  Within a cluster of equal
    roots the vectors are made orthogonal when the matrix allows it
    (diagonalizable case); for a defective block the same eigenvector may
    be returned more than once.  Raises ``ConvergenceFailure`` if any pair
    misses ``|A v - lam v| <= 1e-8 (1 + |A|_F) |v|``.
    """
    a = _square(a)
    n = a.shape[0]
    if n > MAX_DIM:
        raise DimensionError(f"dimension {n} exceeds the supported maximum {MAX_DIM}")
    fro = float(np.linalg.norm(a))
    bound = RESIDUAL_BOUND * (1.0 + fro)
    target_tol = 64 * _EPS * (1.0 + fro)

    roots = poly_roots(_backend.charpoly(a))
    pairs: list[tuple[complex, np.ndarray]] = []
    for group in cluster_roots(roots):
        lam = complex(np.mean(roots[group]))
        shift = lam + SHIFT_OFFSET * max(1.0, abs(lam))
        found: list[np.ndarray] = []
        for k in range(len(group)):
            ortho = np.array(found) if found else np.zeros((0, n), dtype=complex)
            v, res, _ = _backend.inverse_iteration(
                a, lam, shift, _start_vector(n, k), ortho, INVIT_MAXITER, target_tol)
            if not res <= bound and found:
                # defective cluster: no independent eigenvector left
                v, res, _ = _backend.inverse_iteration(
                    a, lam, shift, _start_vector(n, k), np.zeros((0, n)), INVIT_MAXITER,
                    target_tol)
            v = np.asarray(v, dtype=complex)
            lam_k = lam
            if len(group) == 1:
                lam_k, res = _rayleigh(a, v, lam, res)
            if not (math.isfinite(res) and res <= bound):
                raise ConvergenceFailure(
                    f"inverse iteration for eigenvalue {lam_k} stalled at residual {res:.3e}")
            v = fix_phase(v)
            found.append(v)
            pairs.append((lam_k, v))
    return pairs


def _rayleigh(a: np.ndarray, v: np.ndarray, lam: complex, res: float) -> tuple[complex, float]:
    """Keep the Rayleigh quotient when it lowers the residual of ``(lam, v)``."""
    av = a @ v
    rq = complex(np.vdot(v, av) / np.vdot(v, v))
    rq_res = float(np.linalg.norm(av - rq * v) / np.linalg.norm(v))
    if rq_res < res:
        return rq, rq_res
    return lam, res


def multiplicities(values, tol: float = CLUSTER_TOL) -> list[int]:
    """Algebraic multiplicity of each value, by clustering at ``tol`` relative."""
    values = np.asarray(values, dtype=complex)
    out = [1] * len(values)
    for group in cluster_roots(values, tol):
        for i in group:
            out[i] = len(group)
    return out


def residual(a, lam: complex, v) -> float:
    a = np.asarray(a, dtype=complex)
    v = np.asarray(v, dtype=complex)
    return float(np.linalg.norm(a @ v - lam * v))
