"""Bicomplex matrices acting on T^n.

An operator splits into two complex matrices, one per idempotent channel,
and the bicomplex eigenproblem ``A psi = lam psi`` is exactly the pair of
channel problems ``A_k psi_k = lam_k psi_k``.  ``bicomplex_eig`` solves both
and recombines ``lam = e1 lam_1 + e2 lam_2``, ``psi = e1 psi_1 + e2 psi_2``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Literal

import numpy as np

from .errors import DimensionError, NotSelfAdjointError, PairingOverflow
from .linalg import MAX_DIM, complex_eig, multiplicities
from .scalar import Bicomplex, as_bicomplex, from_idempotent, is_hyperbolic, to_idempotent
from .tmodule import TVector, join_channels, norm, recombine, split_channels, vec_scale, vec_sub

__all__ = [
    "TMatrix", "EigenPair", "EigenReport", "SpectrumCheck",
    "mat_apply", "mat_mul", "mat_add", "mat_scale", "adjoint", "project_mat",
    "is_self_adjoint", "frobenius", "complex_eig", "bicomplex_eig", "verify_eig",
    "selfadjoint_spectrum_check", "DEFAULT_TOL", "MAX_FULL_PAIRING",
]

DEFAULT_TOL = 1e-10
MAX_FULL_PAIRING = 8

_CONJ3 = np.array([1.0, -1.0, -1.0, 1.0])


class TMatrix:
    """Square bicomplex matrix, stored as an ``(n, n, 4)`` float array."""

    __slots__ = ("_a",)

    def __init__(self, entries):
        a = np.array(_nested_components(entries), dtype=float)
        if a.ndim == 2 and a.shape[1] == 4:
            # flat row-major list of n*n entries
            n = math.isqrt(a.shape[0])
            if n * n != a.shape[0]:
                raise DimensionError(f"{a.shape[0]} entries do not form a square matrix")
            a = a.reshape(n, n, 4)
        if a.ndim != 3 or a.shape[0] != a.shape[1] or a.shape[2] != 4 or a.shape[0] < 1:
            raise DimensionError(f"expected an n x n matrix of 4-component entries, got {a.shape}")
        if not np.all(np.isfinite(a)):
            raise ValueError("TMatrix has non-finite entries")
        a.setflags(write=False)
        object.__setattr__(self, "_a", a)

    def __setattr__(self, name, value):
        raise AttributeError("TMatrix is immutable")

    @classmethod
    def identity(cls, n: int) -> TMatrix:
        a = np.zeros((n, n, 4))
        a[np.arange(n), np.arange(n), 0] = 1.0
        return cls(a)

    @classmethod
    def from_rows(cls, rows) -> TMatrix:
        """Build from rows of scalars (reals, C(i1) complex, Bicomplex)."""
        return cls([[as_bicomplex(x) for x in row] for row in rows])

    @classmethod
    def diag(cls, values) -> TMatrix:
        values = [as_bicomplex(v) for v in values]
        a = np.zeros((len(values), len(values), 4))
        for i, v in enumerate(values):
            a[i, i] = v.as_tuple()
        return cls(a)

    @classmethod
    def from_channels(cls, a1, a2) -> TMatrix:
        return cls(join_channels(a1, a2))

    @property
    def n(self) -> int:
        return self._a.shape[0]

    @property
    def components(self) -> np.ndarray:
        return self._a

    def channels(self) -> tuple[np.ndarray, np.ndarray]:
        return split_channels(self._a)

    def __getitem__(self, ij) -> Bicomplex:
        i, j = ij
        return Bicomplex(*self._a[i, j])

    def rows(self) -> list[list[Bicomplex]]:
        return [[Bicomplex(*e) for e in row] for row in self._a]

    def __eq__(self, other):
        if not isinstance(other, TMatrix):
            return NotImplemented
        return self._a.shape == other._a.shape and bool(np.all(self._a == other._a))

    __hash__ = None

    def __add__(self, other):
        return mat_add(self, other) if isinstance(other, TMatrix) else NotImplemented

    def __sub__(self, other):
        if not isinstance(other, TMatrix):
            return NotImplemented
        _same_dim(self, other)
        return TMatrix(self._a - other._a)

    def __matmul__(self, other):
        if isinstance(other, TMatrix):
            return mat_mul(self, other)
        if isinstance(other, TVector):
            return mat_apply(self, other)
        return NotImplemented

    def __rmul__(self, lam):
        return mat_scale(lam, self)

    def tolist(self) -> list[list[float]]:
        """Row-major flat list of entries, the JSON form."""
        return self._a.reshape(-1, 4).tolist()

    def __repr__(self):
        return f"TMatrix(n={self.n}, entries={self.tolist()!r})"


def _entry(e) -> list[float]:
    if isinstance(e, Bicomplex):
        return list(e.as_tuple())
    if isinstance(e, (list, tuple, np.ndarray)) and len(e) == 4 and all(
            isinstance(x, (int, float, np.floating, np.integer)) for x in e):
        return [float(x) for x in e]
    raise TypeError(f"matrix entry must be a Bicomplex or 4 reals, got {e!r}")


def _nested_components(entries):
    """Accept an array, a flat row-major list of entries, or a list of rows."""
    if isinstance(entries, np.ndarray):
        return entries
    entries = list(entries)
    if entries and isinstance(entries[0], (list, tuple)) and entries[0] and isinstance(
            entries[0][0], (list, tuple, np.ndarray, Bicomplex)):
        return [[_entry(e) for e in row] for row in entries]
    return [_entry(e) for e in entries]


def _same_dim(a: TMatrix, b: TMatrix) -> None:
    if a.n != b.n:
        raise DimensionError(f"dimension mismatch: {a.n} vs {b.n}")


def mat_apply(a: TMatrix, x: TVector) -> TVector:
    if a.n != len(x):
        raise DimensionError(f"matrix is {a.n}x{a.n}, vector has length {len(x)}")
    a1, a2 = a.channels()
    x1, x2 = x.channels()
    return recombine(a1 @ x1, a2 @ x2)


def mat_mul(a: TMatrix, b: TMatrix) -> TMatrix:
    _same_dim(a, b)
    a1, a2 = a.channels()
    b1, b2 = b.channels()
    return TMatrix.from_channels(a1 @ b1, a2 @ b2)


def mat_add(a: TMatrix, b: TMatrix) -> TMatrix:
    _same_dim(a, b)
    return TMatrix(a.components + b.components)


def mat_scale(lam, a: TMatrix) -> TMatrix:
    l1, l2 = to_idempotent(as_bicomplex(lam))
    a1, a2 = a.channels()
    return TMatrix.from_channels(l1 * a1, l2 * a2)


def adjoint(a: TMatrix) -> TMatrix:
    """Entrywise ``dag3`` followed by transposition."""
    return TMatrix(np.transpose(a.components * _CONJ3 + 0.0, (1, 0, 2)))


def project_mat(a: TMatrix, k: int) -> np.ndarray:
    if k not in (1, 2) or isinstance(k, bool):
        raise ValueError(f"channel index must be 1 or 2, got {k!r}")
    return a.channels()[k - 1]


def frobenius(a: TMatrix) -> float:
    """``sqrt(sum |a_ij|^2)`` with the Euclidean modulus on each entry."""
    return float(np.linalg.norm(a.components))


def is_self_adjoint(a: TMatrix, tol: float = DEFAULT_TOL) -> bool:
    gap = np.linalg.norm(a.components - adjoint(a).components, axis=-1).max()
    return bool(gap <= tol * (1.0 + frobenius(a)))


def verify_eig(a: TMatrix, lam, v: TVector) -> float:
    """Relative residual ``|A v - lam v| / (|v| (1 + |A|_F))``.

    Returns ``inf`` for a zero vector, which is never an eigenvector.
    """
    nv = norm(v)
    if nv == 0.0:
        return math.inf
    r = vec_sub(mat_apply(a, v), vec_scale(as_bicomplex(lam), v))
    return norm(r) / (nv * (1.0 + frobenius(a)))


@dataclass(frozen=True)
class EigenPair:
    lam: Bicomplex
    vector: TVector
    residual: float
    lambda_hyperbolic: bool
    vector_null_cone: bool = False
    channels: tuple[int, int] = (0, 0)


@dataclass(frozen=True)
class EigenReport:
    spectrum1: list[complex]
    spectrum2: list[complex]
    pairs: list[EigenPair]
    pairing_mode: Literal["diagonal", "full"]

    @property
    def multiplicity1(self) -> list[int]:
        return multiplicities(self.spectrum1)

    @property
    def multiplicity2(self) -> list[int]:
        return multiplicities(self.spectrum2)

    @property
    def eigenvalues(self) -> list[Bicomplex]:
        return [p.lam for p in self.pairs]


def _sorted_eig(mat: np.ndarray) -> list[tuple[complex, np.ndarray]]:
    return sorted(complex_eig(mat), key=lambda p: (p[0].real, p[0].imag))


def bicomplex_eig(a: TMatrix, pairing: str = "diagonal", tol: float = DEFAULT_TOL) -> EigenReport:
    """Solve ``A psi = lam psi`` through the two channel eigenproblems.

    ``diagonal`` pairs the i-th eigenvalue of each channel after sorting
    both spectra by ``(re, im)``; ``full`` emits all ``n**2`` combinations
    (only for ``n <= 8``).  Each eigenvector has unit channel components, so
    none lies in the null-cone.
    """
    if pairing not in ("diagonal", "full"):
        raise ValueError(f"pairing must be 'diagonal' or 'full', got {pairing!r}")
    n = a.n
    if n > MAX_DIM:
        raise DimensionError(f"dimension {n} exceeds the supported maximum {MAX_DIM}")
    if pairing == "full" and n > MAX_FULL_PAIRING:
        raise PairingOverflow(f"full pairing is limited to n <= {MAX_FULL_PAIRING}, got {n}")
    a1, a2 = a.channels()
    eig1 = _sorted_eig(a1)
    eig2 = _sorted_eig(a2)
    if pairing == "diagonal":
        index_pairs = [(i, i) for i in range(n)]
    else:
        index_pairs = [(i, j) for i in range(n) for j in range(n)]
    pairs = []
    for i, j in index_pairs:
        (l1, v1), (l2, v2) = eig1[i], eig2[j]
        null_cone = not (np.any(v1 != 0) and np.any(v2 != 0))
        if null_cone:
            continue
        lam = from_idempotent(l1, l2)
        vec = recombine(v1, v2)
        pairs.append(EigenPair(
            lam=lam,
            vector=vec,
            residual=verify_eig(a, lam, vec),
            lambda_hyperbolic=is_hyperbolic(lam, tol),
            vector_null_cone=False,
            channels=(i, j),
        ))
    return EigenReport(
        spectrum1=[l for l, _ in eig1],
        spectrum2=[l for l, _ in eig2],
        pairs=pairs,
        pairing_mode=pairing,
    )


@dataclass(frozen=True)
class SpectrumCheck:
    max_imag: float
    all_hyperbolic: bool
    reports: dict[str, EigenReport] = field(default_factory=dict)


def selfadjoint_spectrum_check(a: TMatrix, tol: float = DEFAULT_TOL) -> SpectrumCheck:
    """Eigenvalues of a self-adjoint operator must be hyperbolic.

    Runs the eigensolver in diagonal mode (and full mode for ``n <= 8``) and
    reports the largest imaginary part found in either channel spectrum.
    """
    if not is_self_adjoint(a, tol):
        raise NotSelfAdjointError("operator differs from its adjoint")
    modes = ["diagonal"] + (["full"] if a.n <= MAX_FULL_PAIRING else [])
    reports = {mode: bicomplex_eig(a, mode, tol) for mode in modes}
    rep = reports["diagonal"]
    max_imag = max(abs(l.imag) for l in rep.spectrum1 + rep.spectrum2)
    all_hyp = all(p.lambda_hyperbolic for r in reports.values() for p in r.pairs)
    return SpectrumCheck(max_imag=max_imag, all_hyperbolic=all_hyp, reports=reports)
