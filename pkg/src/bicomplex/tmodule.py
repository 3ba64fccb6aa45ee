"""Finite free T-modules: kets, scalar products, norms and bras.

A ket in T^n is stored as an ``(n, 4)`` float array of bicomplex
coordinates in the canonical basis.  Channel ``k`` of a ket is the complex
vector of ``k``-th idempotent components; every product and norm here is
computed channelwise and recombined with ``e1``/``e2``.
"""
from __future__ import annotations

import math
from typing import Iterable

import numpy as np

from .errors import DimensionError, MetricError, ZeroChannelError
from .linalg import complex_eig
from .scalar import (
    DEFAULT_TOL, Bicomplex, Hyperbolic, as_bicomplex, bc_conj, euclid, from_idempotent,
    hyp_from_angles, to_idempotent,
)

SQRT2 = math.sqrt(2.0)


def split_channels(w: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Idempotent channels of an array of bicomplex numbers (last axis = 4)."""
    w = np.asarray(w, dtype=float)
    w0, w1, w2, w3 = w[..., 0], w[..., 1], w[..., 2], w[..., 3]
    return (w0 + w3) + 1j * (w1 - w2), (w0 - w3) + 1j * (w1 + w2)


def join_channels(p1, p2) -> np.ndarray:
    """Inverse of :func:`split_channels`."""
    p1 = np.asarray(p1, dtype=complex)
    p2 = np.asarray(p2, dtype=complex)
    return np.stack([
        (p1.real + p2.real) / 2.0,
        (p1.imag + p2.imag) / 2.0,
        (p2.imag - p1.imag) / 2.0,
        (p1.real - p2.real) / 2.0,
    ], axis=-1)


def _as_components(coeffs) -> np.ndarray:
    if isinstance(coeffs, np.ndarray) and coeffs.dtype.kind == "f":
        arr = np.array(coeffs, dtype=float)
    else:
        items = list(coeffs)
        if items and all(isinstance(c, (list, tuple, np.ndarray)) for c in items):
            arr = np.array(items, dtype=float)
        else:
            arr = np.array([as_bicomplex(c).as_tuple() for c in items], dtype=float).reshape(-1, 4)
    return arr


class TVector:
    """Ket in T^n; immutable."""

    __slots__ = ("_w",)

    def __init__(self, coeffs):
        w = _as_components(coeffs)
        if w.ndim != 2 or w.shape[1] != 4 or w.shape[0] < 1:
            raise DimensionError(f"expected n >= 1 coordinates of 4 reals, got shape {w.shape}")
        if not np.all(np.isfinite(w)):
            raise ValueError("TVector has non-finite coefficients")
        w.setflags(write=False)
        object.__setattr__(self, "_w", w)

    def __setattr__(self, name, value):
        raise AttributeError("TVector is immutable")

    @classmethod
    def zeros(cls, n: int) -> TVector:
        return cls(np.zeros((n, 4)))

    @classmethod
    def from_complex(cls, v) -> TVector:
        """Embed a vector of V (C(i1) coordinates) into M."""
        v = np.asarray(v, dtype=complex)
        return cls(join_channels(v, v))

    @property
    def components(self) -> np.ndarray:
        return self._w

    @property
    def n(self) -> int:
        return self._w.shape[0]

    def channels(self) -> tuple[np.ndarray, np.ndarray]:
        return split_channels(self._w)

    def __len__(self):
        return self.n

    def __getitem__(self, i) -> Bicomplex:
        return Bicomplex(*self._w[i])

    def __iter__(self):
        for row in self._w:
            yield Bicomplex(*row)

    def __add__(self, other):
        if not isinstance(other, TVector):
            return NotImplemented
        return vec_add(self, other)

    def __sub__(self, other):
        if not isinstance(other, TVector):
            return NotImplemented
        return vec_sub(self, other)

    def __neg__(self):
        return TVector(-self._w)

    def __rmul__(self, scalar):
        return vec_scale(scalar, self)

    def __eq__(self, other):
        if not isinstance(other, TVector):
            return NotImplemented
        return self._w.shape == other._w.shape and bool(np.all(self._w == other._w))

    __hash__ = None

    def tolist(self) -> list[list[float]]:
        return self._w.tolist()

    def __repr__(self):
        return f"TVector({self.tolist()!r})"


class HVector:
    """Element of a free D-module, stored as an ``(n, 2)`` array of ``(x, y)``."""

    __slots__ = ("_h",)

    def __init__(self, coeffs):
        items = coeffs if isinstance(coeffs, np.ndarray) else [
            tuple(c) if isinstance(c, Hyperbolic) else c for c in coeffs]
        h = np.array(items, dtype=float)
        if h.ndim == 1:
            # plain reals
            h = np.stack([h, np.zeros_like(h)], axis=-1)
        if h.ndim != 2 or h.shape[1] != 2 or h.shape[0] < 1:
            raise DimensionError(f"expected n >= 1 hyperbolic coordinates, got shape {h.shape}")
        if not np.all(np.isfinite(h)):
            raise ValueError("HVector has non-finite coefficients")
        h.setflags(write=False)
        object.__setattr__(self, "_h", h)

    def __setattr__(self, name, value):
        raise AttributeError("HVector is immutable")

    @classmethod
    def from_idempotent(cls, a, b) -> HVector:
        a = np.asarray(a, dtype=float)
        b = np.asarray(b, dtype=float)
        return cls(np.stack([(a + b) / 2.0, (a - b) / 2.0], axis=-1))

    @property
    def components(self) -> np.ndarray:
        return self._h

    def channels(self) -> tuple[np.ndarray, np.ndarray]:
        """Real channel vectors ``(x + y, x - y)``."""
        return self._h[:, 0] + self._h[:, 1], self._h[:, 0] - self._h[:, 1]

    def __len__(self):
        return self._h.shape[0]

    def __getitem__(self, i) -> Hyperbolic:
        return Hyperbolic(*self._h[i])

    def to_tvector(self) -> TVector:
        w = np.zeros((len(self), 4))
        w[:, 0] = self._h[:, 0]
        w[:, 3] = self._h[:, 1]
        return TVector(w)

    def tolist(self):
        return self._h.tolist()

    def __repr__(self):
        return f"HVector({self.tolist()!r})"


def _same_length(x, y) -> None:
    if len(x) != len(y):
        raise DimensionError(f"length mismatch: {len(x)} vs {len(y)}")


def vec_add(x: TVector, y: TVector) -> TVector:
    _same_length(x, y)
    return TVector(x.components + y.components)


def vec_sub(x: TVector, y: TVector) -> TVector:
    _same_length(x, y)
    return TVector(x.components - y.components)


def vec_scale(lam, x: TVector) -> TVector:
    l1, l2 = to_idempotent(as_bicomplex(lam))
    p1, p2 = x.channels()
    return TVector(join_channels(l1 * p1, l2 * p2))


def _check_k(k: int) -> None:
    if k not in (1, 2) or isinstance(k, bool):
        raise ValueError(f"channel index must be 1 or 2, got {k!r}")


def project(x: TVector, k: int) -> np.ndarray:
    """Channel ``k`` of ``x`` as a complex vector in V."""
    _check_k(k)
    return x.channels()[k - 1]


def recombine(x1, x2) -> TVector:
    """``e1*x1 + e2*x2`` for complex vectors ``x1, x2``."""
    x1 = np.asarray(x1, dtype=complex)
    x2 = np.asarray(x2, dtype=complex)
    if x1.shape != x2.shape or x1.ndim != 1:
        raise DimensionError(f"channel shapes differ: {x1.shape} vs {x2.shape}")
    return TVector(join_channels(x1, x2))


def dot(x: TVector, y: TVector) -> Bicomplex:
    """Canonical scalar product ``sum(conj3(x_i) * y_i)``.

    Antilinear in the first slot; channel ``k`` is the ordinary Hermitian
    product of the ``k``-th channel vectors.
    """
    _same_length(x, y)
    x1, x2 = x.channels()
    y1, y2 = y.channels()
    return from_idempotent(np.vdot(x1, y1), np.vdot(x2, y2))


class SplitMetric:
    """Pair of Hermitian positive definite Gram matrices, one per channel."""

    __slots__ = ("g1", "g2")

    def __init__(self, g1, g2, tol: float = 1e-12):
        mats = []
        for name, g in (("g1", g1), ("g2", g2)):
            g = np.array(g, dtype=complex)
            if g.ndim != 2 or g.shape[0] != g.shape[1] or g.shape[0] < 1:
                raise DimensionError(f"{name} must be square, got shape {g.shape}")
            if not np.all(np.isfinite(g)):
                raise MetricError(f"{name} has non-finite entries")
            scale = max(1.0, float(np.abs(g).max()))
            if np.abs(g - g.conj().T).max() > tol * scale:
                raise MetricError(f"{name} is not Hermitian")
            smallest = min(lam.real for lam, _ in complex_eig(g))
            if not smallest > 0.0:
                raise MetricError(f"{name} is not positive definite (eigenvalue {smallest:.3e})")
            g.setflags(write=False)
            mats.append(g)
        if mats[0].shape != mats[1].shape:
            raise DimensionError("g1 and g2 must have the same dimension")
        object.__setattr__(self, "g1", mats[0])
        object.__setattr__(self, "g2", mats[1])

    def __setattr__(self, name, value):
        raise AttributeError("SplitMetric is immutable")

    @classmethod
    def identity(cls, n: int) -> SplitMetric:
        return cls(np.eye(n), np.eye(n))

    @property
    def n(self) -> int:
        return self.g1.shape[0]


def is_closed(m: SplitMetric, tol: float = DEFAULT_TOL) -> bool:
    """Whether ``dot_split`` maps pairs of V into C(i1): holds iff ``g1 == g2``."""
    scale = max(1.0, float(np.abs(m.g1).max()), float(np.abs(m.g2).max()))
    return float(np.abs(m.g1 - m.g2).max()) <= tol * scale


def dot_split(x: TVector, y: TVector, m: SplitMetric) -> Bicomplex:
    _same_length(x, y)
    if len(x) != m.n:
        raise DimensionError(f"metric has dimension {m.n}, vectors have {len(x)}")
    x1, x2 = x.channels()
    y1, y2 = y.channels()
    return from_idempotent(np.vdot(x1, m.g1 @ y1), np.vdot(x2, m.g2 @ y2))


def _scaled_norm(v: np.ndarray) -> float:
    # rescale first so tiny or huge entries neither underflow nor overflow
    mags = np.abs(v)
    m = float(mags.max(initial=0.0))
    if m == 0.0 or not math.isfinite(m):
        return m
    return m * float(np.linalg.norm(mags / m))


def _channel_norms(x: TVector) -> tuple[float, float]:
    p1, p2 = x.channels()
    return _scaled_norm(p1), _scaled_norm(p2)


def norm(x: TVector) -> float:
    """``|(X, X)^(1/2)|``: with ``(X, X) = a e1 + b e2`` this is ``sqrt((a+b)/2)``."""
    n1, n2 = _channel_norms(x)
    return math.hypot(n1, n2) / SQRT2


def distance(x: TVector, y: TVector) -> float:
    return norm(vec_sub(x, y))


def schwarz_witness(x: TVector, y: TVector) -> tuple[float, float, float]:
    """The three members of ``|(X,Y)| <= |(X,X)^½ (Y,Y)^½| <= √2 ‖X‖ ‖Y‖``."""
    _same_length(x, y)
    lhs = euclid(dot(x, y))
    x1, x2 = _channel_norms(x)
    y1, y2 = _channel_norms(y)
    mid = euclid(Hyperbolic.from_idempotent(x1 * y1, x2 * y2).to_bicomplex())
    rhs = SQRT2 * norm(x) * norm(y)
    return lhs, mid, rhs


class Functional:
    """Bra induced by a ket: ``<phi| psi> = (phi, psi)``.

    Closed under addition and left scalar multiplication, with
    ``c * <phi| == <conj3(c) phi|``.
    """

    __slots__ = ("ket",)

    def __init__(self, ket: TVector):
        object.__setattr__(self, "ket", ket)

    def __setattr__(self, name, value):
        raise AttributeError("Functional is immutable")

    def __call__(self, y: TVector) -> Bicomplex:
        return bra_apply(self, y)

    def __add__(self, other):
        if not isinstance(other, Functional):
            return NotImplemented
        return Functional(self.ket + other.ket)

    def __rmul__(self, c):
        return Functional(vec_scale(bc_conj(as_bicomplex(c), 3), self.ket))

    def __repr__(self):
        return f"Functional({self.ket!r})"


def bra(x: TVector) -> Functional:
    return Functional(x)


def bra_apply(f: Functional, y: TVector) -> Bicomplex:
    return dot(f.ket, y)


class ComplexFunctional:
    """Channel ``k`` of a bra, acting on V: ``psi -> P_k(<phi|psi>)``."""

    __slots__ = ("parent", "k")

    def __init__(self, parent: TVector, k: int):
        _check_k(k)
        object.__setattr__(self, "parent", parent)
        object.__setattr__(self, "k", k)

    def __setattr__(self, name, value):
        raise AttributeError("ComplexFunctional is immutable")

    @property
    def ket(self) -> np.ndarray:
        """The channel ket ``P_k(phi)`` inducing this functional on V."""
        return project(self.parent, self.k)

    def __call__(self, psi) -> complex:
        psi = np.asarray(psi, dtype=complex)
        value = dot(self.parent, TVector.from_complex(psi))
        return to_idempotent(value)[self.k - 1]


def bra_project(x: TVector, k: int) -> ComplexFunctional:
    return ComplexFunctional(x, k)


def hyp_dot(x: HVector, y: HVector) -> Hyperbolic:
    """Symmetric D-valued product ``sum(x_i * y_i)``."""
    _same_length(x, y)
    xa, xb = x.channels()
    ya, yb = y.channels()
    return Hyperbolic.from_idempotent(float(xa @ ya), float(xb @ yb))


def hyperbolic_angle(x: HVector, y: HVector, tol: float = DEFAULT_TOL) -> Hyperbolic:
    """``theta1*e1 + theta2*e2`` from the two real channel angles."""
    _same_length(x, y)
    thetas = []
    for xk, yk in zip(x.channels(), y.channels()):
        nx, ny = float(np.linalg.norm(xk)), float(np.linalg.norm(yk))
        if nx <= tol or ny <= tol:
            raise ZeroChannelError("hyperbolic angle undefined: a channel vector vanishes")
        # acos(dot/(|x||y|)) loses half the digits near 0 and pi
        ux, uy = xk / nx, yk / ny
        thetas.append(2.0 * math.atan2(float(np.linalg.norm(ux - uy)),
                                       float(np.linalg.norm(ux + uy))))
    return hyp_from_angles(*thetas)


def channel_norms(x: HVector) -> tuple[float, float]:
    xa, xb = x.channels()
    return float(np.linalg.norm(xa)), float(np.linalg.norm(xb))


def as_tvector(v: TVector | Iterable) -> TVector:
    return v if isinstance(v, TVector) else TVector(v)
