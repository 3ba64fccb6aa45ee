"""Pure-Python versions of the eigensolver inner loops.

Used when the compiled ``_ckernels`` extension is unavailable or when
``BCH_PURE_PYTHON`` is set.  Signatures and results match the compiled
module; both take and return numpy arrays at the boundary but loop over
plain Python ``complex`` values inside.
"""
import math

import numpy as np

EPS = 2.220446049250313e-16


def charpoly(a):
    """Monic characteristic polynomial of ``a`` (highest degree first).

    Faddeev-LeVerrier: ``M_k = A M_{k-1} + c_{k-1} I``, ``c_k = -tr(A M_k)/k``.
    """
    a = np.asarray(a, dtype=complex).tolist()
    n = len(a)
    coeffs = [1.0 + 0j]
    m = [[0j] * n for _ in range(n)]
    for k in range(1, n + 1):
        # m <- a @ m + c_{k-1} I
        prev = coeffs[-1]
        new = [[0j] * n for _ in range(n)]
        for i in range(n):
            ai = a[i]
            row = new[i]
            for l in range(n):
                ail = ai[l]
                if ail == 0:
                    continue
                ml = m[l]
                for j in range(n):
                    row[j] += ail * ml[j]
            row[i] += prev
        m = new
        tr = 0j
        for i in range(n):
            ai = a[i]
            for l in range(n):
                tr += ai[l] * m[l][i]
        coeffs.append(-tr / k)
    return np.array(coeffs, dtype=complex)


def _horner(c, z):
    p = c[0]
    bound = abs(c[0])
    az = abs(z)
    for ck in c[1:]:
        p = p * z + ck
        bound = bound * az + abs(ck)
    return p, bound


def durand_kerner(coeffs, maxiter=500, tol=1e-13):
    """Roots of a monic polynomial by Weierstrass/Durand-Kerner iteration.

    Starting points are powers of ``0.4 + 0.9i``.  Stops when every root
    moves by at most ``tol`` relative, or when every residual is at the
    rounding level of Horner's rule (which is where multiple roots stall).
    Returns ``(roots, iterations, converged)``.
    """
    c = [complex(x) for x in np.asarray(coeffs, dtype=complex)]
    n = len(c) - 1
    if n < 1:
        return np.zeros(0, dtype=complex), 0, True
    seed = 0.4 + 0.9j
    z = [seed ** i for i in range(n)]
    noise = 4.0 * n * EPS
    for it in range(1, maxiter + 1):
        small_moves = True
        small_resid = True
        for i in range(n):
            zi = z[i]
            num, bound = _horner(c, zi)
            if abs(num) > noise * bound:
                small_resid = False
            den = 1.0 + 0j
            for j in range(n):
                if j != i:
                    den *= zi - z[j]
            if den == 0:
                den = EPS
            delta = num / den
            z[i] = zi - delta
            if abs(delta) > tol * max(abs(z[i]), 1.0):
                small_moves = False
        if small_moves or small_resid:
            return np.array(z, dtype=complex), it, True
    return np.array(z, dtype=complex), maxiter, False


def _lu(m, n, tiny):
    piv = list(range(n))
    for k in range(n):
        p = max(range(k, n), key=lambda r: abs(m[r][k]))
        if p != k:
            m[k], m[p] = m[p], m[k]
            piv[k], piv[p] = piv[p], piv[k]
        if abs(m[k][k]) <= tiny:
            m[k][k] = tiny
        d = m[k][k]
        for r in range(k + 1, n):
            f = m[r][k] / d
            m[r][k] = f
            if f != 0:
                rk, rr = m[k], m[r]
                for col in range(k + 1, n):
                    rr[col] -= f * rk[col]
    return piv


def _lu_solve(m, piv, b, n):
    x = [b[piv[i]] for i in range(n)]
    for i in range(n):
        s = x[i]
        row = m[i]
        for j in range(i):
            s -= row[j] * x[j]
        x[i] = s
    for i in range(n - 1, -1, -1):
        s = x[i]
        row = m[i]
        for j in range(i + 1, n):
            s -= row[j] * x[j]
        x[i] = s / row[i]
    return x


def _orthogonalize(v, basis):
    for u in basis:
        proj = sum(ui.conjugate() * vi for ui, vi in zip(u, v))
        v = [vi - proj * ui for ui, vi in zip(u, v)]
    return v


def _normalize(v):
    nrm = math.sqrt(sum(abs(x) ** 2 for x in v))
    if nrm == 0.0:
        return v, 0.0
    return [x / nrm for x in v], nrm


def inverse_iteration(a, target, shift, v0, ortho, maxiter, restol):
    """Inverse iteration on ``a - shift*I`` for the eigenvalue ``target``.

    ``ortho`` holds unit vectors (rows) the iterate is kept orthogonal to.
    Returns ``(v, residual, iterations)`` with ``residual = |a v - target v|``
    for the unit vector ``v``; stops early once ``residual <= restol``.
    """
    a_l = np.asarray(a, dtype=complex).tolist()
    n = len(a_l)
    target = complex(target)
    shift = complex(shift)
    scale = max((abs(x) for row in a_l for x in row), default=0.0) + abs(shift) + 1.0
    m = [[a_l[i][j] - (shift if i == j else 0) for j in range(n)] for i in range(n)]
    piv = _lu(m, n, EPS * scale)
    basis = [list(u) for u in np.asarray(ortho, dtype=complex).reshape(-1, n).tolist()]
    v, _ = _normalize(_orthogonalize([complex(x) for x in np.asarray(v0, dtype=complex)], basis))
    resid = math.inf
    it = 0
    for it in range(1, maxiter + 1):
        w = _lu_solve(m, piv, v, n)
        w = _orthogonalize(w, basis)
        w, nrm = _normalize(w)
        if nrm == 0.0 or not all(math.isfinite(abs(x)) for x in w):
            break
        v = w
        resid = math.sqrt(sum(
            abs(sum(a_l[i][j] * v[j] for j in range(n)) - target * v[i]) ** 2
            for i in range(n)))
        if resid <= restol:
            break
    return np.array(v, dtype=complex), resid, it
