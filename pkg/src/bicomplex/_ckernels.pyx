# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled eigensolver inner loops; mirrors ``_pykernels`` exactly."""
import numpy as np

from libc.math cimport sqrt, isfinite, INFINITY

cdef double EPS = 2.220446049250313e-16


cdef inline double cabs2(double complex z) nogil:
    return z.real * z.real + z.imag * z.imag


cdef inline double cabs_(double complex z) nogil:
    return sqrt(z.real * z.real + z.imag * z.imag)


def charpoly(a):
    cdef double complex[:, :] A = np.ascontiguousarray(a, dtype=np.complex128)
    cdef Py_ssize_t n = A.shape[0]
    cdef Py_ssize_t i, j, l, k
    out = np.zeros(n + 1, dtype=np.complex128)
    cdef double complex[:] c = out
    cdef double complex[:, :] m = np.zeros((n, n), dtype=np.complex128)
    cdef double complex[:, :] new = np.zeros((n, n), dtype=np.complex128)
    cdef double complex prev, ail, tr
    c[0] = 1.0
    with nogil:
        for k in range(1, n + 1):
            prev = c[k - 1]
            for i in range(n):
                for j in range(n):
                    new[i, j] = 0
                for l in range(n):
                    ail = A[i, l]
                    if ail == 0:
                        continue
                    for j in range(n):
                        new[i, j] = new[i, j] + ail * m[l, j]
                new[i, i] = new[i, i] + prev
            for i in range(n):
                for j in range(n):
                    m[i, j] = new[i, j]
            tr = 0
            for i in range(n):
                for l in range(n):
                    tr = tr + A[i, l] * m[l, i]
            c[k] = -tr / <double>k
    return out


cdef inline double complex horner(double complex[:] c, Py_ssize_t n,
                                  double complex z, double *bound) nogil:
    cdef double complex p = c[0]
    cdef double b = cabs_(c[0])
    cdef double az = cabs_(z)
    cdef Py_ssize_t k
    for k in range(1, n + 1):
        p = p * z + c[k]
        b = b * az + cabs_(c[k])
    bound[0] = b
    return p


def durand_kerner(coeffs, int maxiter=500, double tol=1e-13):
    cdef double complex[:] c = np.ascontiguousarray(coeffs, dtype=np.complex128)
    cdef Py_ssize_t n = c.shape[0] - 1
    if n < 1:
        return np.zeros(0, dtype=np.complex128), 0, True
    out = np.empty(n, dtype=np.complex128)
    cdef double complex[:] z = out
    cdef double complex seed = 0.4 + 0.9j
    cdef double complex zi, num, den, delta
    cdef double bound, noise = 4.0 * n * EPS, az
    cdef Py_ssize_t i, j
    cdef int it
    cdef bint small_moves, small_resid, converged = False
    z[0] = 1.0
    for i in range(1, n):
        z[i] = z[i - 1] * seed
    with nogil:
        for it in range(1, maxiter + 1):
            small_moves = True
            small_resid = True
            for i in range(n):
                zi = z[i]
                num = horner(c, n, zi, &bound)
                if cabs_(num) > noise * bound:
                    small_resid = False
                den = 1.0
                for j in range(n):
                    if j != i:
                        den = den * (zi - z[j])
                if den == 0:
                    den = EPS
                delta = num / den
                z[i] = zi - delta
                az = cabs_(z[i])
                if az < 1.0:
                    az = 1.0
                if cabs_(delta) > tol * az:
                    small_moves = False
            if small_moves or small_resid:
                converged = True
                break
    if converged:
        return out, it, True
    return out, maxiter, False


cdef void orthogonalize(double complex[:] v, double complex[:, :] basis) nogil:
    cdef Py_ssize_t b, i, n = v.shape[0]
    cdef double complex proj
    for b in range(basis.shape[0]):
        proj = 0
        for i in range(n):
            proj = proj + basis[b, i].conjugate() * v[i]
        for i in range(n):
            v[i] = v[i] - proj * basis[b, i]


cdef double normalize(double complex[:] v) nogil:
    cdef Py_ssize_t i, n = v.shape[0]
    cdef double s = 0
    for i in range(n):
        s += cabs2(v[i])
    s = sqrt(s)
    if s != 0:
        for i in range(n):
            v[i] = v[i] / s
    return s


def inverse_iteration(a, target_, shift_, v0, ortho, int maxiter, double restol):
    cdef double complex[:, :] A = np.ascontiguousarray(a, dtype=np.complex128)
    cdef Py_ssize_t n = A.shape[0]
    cdef double complex target = complex(target_), shift = complex(shift_)
    cdef double complex[:, :] basis = np.ascontiguousarray(
        np.asarray(ortho, dtype=np.complex128).reshape(-1, n))
    cdef double complex[:, :] m = np.array(A, dtype=np.complex128)
    cdef Py_ssize_t[:] piv = np.arange(n, dtype=np.intp)
    out = np.array(v0, dtype=np.complex128)
    cdef double complex[:] v = out
    cdef double complex[:] w = np.empty(n, dtype=np.complex128)
    cdef double complex d, f, s, t
    cdef double scale = 0, tiny, best, nrm, resid = INFINITY
    cdef Py_ssize_t i, j, k, p, r, col
    cdef Py_ssize_t tmpi
    cdef int it = 0
    cdef bint finite
    for i in range(n):
        m[i, i] = m[i, i] - shift
        for j in range(n):
            if cabs_(A[i, j]) > scale:
                scale = cabs_(A[i, j])
    scale += cabs_(shift) + 1.0
    tiny = EPS * scale
    with nogil:
        # LU with partial pivoting, rows swapped in place
        for k in range(n):
            p = k
            best = cabs_(m[k, k])
            for r in range(k + 1, n):
                if cabs_(m[r, k]) > best:
                    best = cabs_(m[r, k])
                    p = r
            if p != k:
                for col in range(n):
                    t = m[k, col]
                    m[k, col] = m[p, col]
                    m[p, col] = t
                tmpi = piv[k]
                piv[k] = piv[p]
                piv[p] = tmpi
            if cabs_(m[k, k]) <= tiny:
                m[k, k] = tiny
            d = m[k, k]
            for r in range(k + 1, n):
                f = m[r, k] / d
                m[r, k] = f
                if f != 0:
                    for col in range(k + 1, n):
                        m[r, col] = m[r, col] - f * m[k, col]

        orthogonalize(v, basis)
        normalize(v)
        for it in range(1, maxiter + 1):
            for i in range(n):
                w[i] = v[piv[i]]
            for i in range(n):
                s = w[i]
                for j in range(i):
                    s = s - m[i, j] * w[j]
                w[i] = s
            for i in range(n - 1, -1, -1):
                s = w[i]
                for j in range(i + 1, n):
                    s = s - m[i, j] * w[j]
                w[i] = s / m[i, i]
            orthogonalize(w, basis)
            nrm = normalize(w)
            finite = True
            for i in range(n):
                if not (isfinite(w[i].real) and isfinite(w[i].imag)):
                    finite = False
            if nrm == 0 or not finite:
                break
            for i in range(n):
                v[i] = w[i]
            resid = 0
            for i in range(n):
                s = 0
                for j in range(n):
                    s = s + A[i, j] * v[j]
                resid += cabs2(s - target * v[i])
            resid = sqrt(resid)
            if resid <= restol:
                break
    return out, resid, it
