"""Scalar arithmetic over C(i1), D and T.

A bicomplex number is stored as four reals ``w0 + w1*i1 + w2*i2 + w3*j``.
Complex numbers in C(i1) are plain Python ``complex`` values (``1j`` plays
the role of ``i1``).  Values in C(i2) get their own small type so the three
square moduli cannot be confused with each other.

Products, inverses and moduli are evaluated through the idempotent split
``w = p1*e1 + p2*e2`` with ``e1 = (1+j)/2``, ``e2 = (1-j)/2``; in that basis
the ring is just two independent copies of C(i1).
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from numbers import Real

from .errors import NullConeError

__all__ = [
    "ComplexC2", "Hyperbolic", "Bicomplex",
    "ZERO", "ONE", "I1", "I2", "J", "E1", "E2",
    "DEFAULT_TOL",
    "bc_add", "bc_sub", "bc_neg", "bc_mul", "bc_conj", "conj_compose",
    "mod_sq_i1", "mod_sq_i2", "mod_sq_j", "mod1", "mod3", "euclid",
    "bc_inv", "to_idempotent", "from_idempotent",
    "is_null_cone", "is_hyperbolic", "is_hyperbolic_positive",
    "hyp_cos", "hyp_from_angles", "as_bicomplex",
]

DEFAULT_TOL = 1e-12

# sign patterns applied to (w0, w1, w2, w3) by conjugation k
_SIGNATURES = (
    (1.0, 1.0, 1.0, 1.0),
    (1.0, -1.0, 1.0, -1.0),
    (1.0, 1.0, -1.0, -1.0),
    (1.0, -1.0, -1.0, 1.0),
)


def _finite(*values: float) -> None:
    for v in values:
        if not math.isfinite(v):
            raise ValueError(f"non-finite component: {v!r}")


def _check_conj_index(k: int) -> int:
    if isinstance(k, bool) or not isinstance(k, int) or not 0 <= k <= 3:
        raise ValueError(f"conjugation index must be 0, 1, 2 or 3, got {k!r}")
    return k


@dataclass(frozen=True)
class ComplexC2:
    """``re + i2 * i2`` in C(i2)."""

    re: float
    i2: float

    def __post_init__(self):
        object.__setattr__(self, "re", float(self.re))
        object.__setattr__(self, "i2", float(self.i2))
        _finite(self.re, self.i2)

    def __abs__(self) -> float:
        return math.hypot(self.re, self.i2)

    def to_bicomplex(self) -> Bicomplex:
        return Bicomplex(self.re, 0.0, self.i2, 0.0)


class Hyperbolic:
    """Hyperbolic number ``x + y*j``.

    The idempotent coordinates are ``a = x + y`` and ``b = x - y``, so that
    the number equals ``a*e1 + b*e2``.
    """

    __slots__ = ("x", "y")

    def __init__(self, x: float = 0.0, y: float = 0.0):
        x, y = float(x), float(y)
        _finite(x, y)
        object.__setattr__(self, "x", x)
        object.__setattr__(self, "y", y)

    def __setattr__(self, name, value):
        raise AttributeError("Hyperbolic is immutable")

    @classmethod
    def from_idempotent(cls, a: float, b: float) -> Hyperbolic:
        return cls((a + b) / 2.0, (a - b) / 2.0)

    @property
    def a(self) -> float:
        return self.x + self.y

    @property
    def b(self) -> float:
        return self.x - self.y

    def is_positive(self, tol: float = DEFAULT_TOL) -> bool:
        return self.a >= -tol and self.b >= -tol

    def to_bicomplex(self) -> Bicomplex:
        return Bicomplex(self.x, 0.0, 0.0, self.y)

    def __add__(self, other):
        if not isinstance(other, Hyperbolic):
            return NotImplemented
        return Hyperbolic(self.x + other.x, self.y + other.y)

    def __sub__(self, other):
        if not isinstance(other, Hyperbolic):
            return NotImplemented
        return Hyperbolic(self.x - other.x, self.y - other.y)

    def __mul__(self, other):
        if isinstance(other, Real):
            return Hyperbolic(self.x * other, self.y * other)
        if not isinstance(other, Hyperbolic):
            return NotImplemented
        return Hyperbolic.from_idempotent(self.a * other.a, self.b * other.b)

    __rmul__ = __mul__

    def __neg__(self):
        return Hyperbolic(-self.x, -self.y)

    def __eq__(self, other):
        if isinstance(other, Hyperbolic):
            return self.x == other.x and self.y == other.y
        return NotImplemented

    def __hash__(self):
        return hash((self.x, self.y))

    def __iter__(self):
        yield self.x
        yield self.y

    def __repr__(self):
        return f"Hyperbolic({self.x!r}, {self.y!r})"


class Bicomplex:
    """Immutable bicomplex number ``w0 + w1*i1 + w2*i2 + w3*j``."""

    __slots__ = ("w0", "w1", "w2", "w3")

    def __init__(self, w0: float = 0.0, w1: float = 0.0, w2: float = 0.0, w3: float = 0.0):
        w = (float(w0), float(w1), float(w2), float(w3))
        _finite(*w)
        for name, v in zip(self.__slots__, w):
            object.__setattr__(self, name, v)

    def __setattr__(self, name, value):
        raise AttributeError("Bicomplex is immutable")

    @classmethod
    def from_cartesian(cls, z1: complex, z2: complex) -> Bicomplex:
        """``z1 + z2*i2`` with ``z1, z2`` in C(i1)."""
        z1, z2 = complex(z1), complex(z2)
        return cls(z1.real, z1.imag, z2.real, z2.imag)

    @classmethod
    def from_idempotent(cls, p1: complex, p2: complex) -> Bicomplex:
        return from_idempotent(p1, p2)

    @property
    def z1(self) -> complex:
        return complex(self.w0, self.w1)

    @property
    def z2(self) -> complex:
        return complex(self.w2, self.w3)

    @property
    def idempotent(self) -> tuple[complex, complex]:
        return to_idempotent(self)

    def as_tuple(self) -> tuple[float, float, float, float]:
        return (self.w0, self.w1, self.w2, self.w3)

    def __iter__(self):
        return iter(self.as_tuple())

    def conj(self, k: int) -> Bicomplex:
        return bc_conj(self, k)

    def inverse(self, tol: float = DEFAULT_TOL) -> Bicomplex:
        return bc_inv(self, tol)

    def __add__(self, other):
        other = _maybe(other)
        return NotImplemented if other is None else bc_add(self, other)

    __radd__ = __add__

    def __sub__(self, other):
        other = _maybe(other)
        return NotImplemented if other is None else bc_sub(self, other)

    def __rsub__(self, other):
        other = _maybe(other)
        return NotImplemented if other is None else bc_sub(other, self)

    def __mul__(self, other):
        other = _maybe(other)
        return NotImplemented if other is None else bc_mul(self, other)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _maybe(other)
        return NotImplemented if other is None else bc_mul(self, bc_inv(other))

    def __neg__(self):
        return bc_neg(self)

    def __pos__(self):
        return self

    def __abs__(self) -> float:
        return euclid(self)

    def __eq__(self, other):
        other = _maybe(other)
        if other is None:
            return NotImplemented
        return self.as_tuple() == other.as_tuple()

    def __hash__(self):
        return hash(self.as_tuple())

    def __repr__(self):
        return "Bicomplex({!r}, {!r}, {!r}, {!r})".format(*self.as_tuple())


def _maybe(x):
    try:
        return as_bicomplex(x)
    except TypeError:
        return None


def as_bicomplex(x) -> Bicomplex:
    """Coerce reals, C(i1) complex numbers, C(i2) and D values into T."""
    if isinstance(x, Bicomplex):
        return x
    if isinstance(x, (Hyperbolic, ComplexC2)):
        return x.to_bicomplex()
    if isinstance(x, Real):
        return Bicomplex(float(x))
    if isinstance(x, complex):
        return Bicomplex(x.real, x.imag)
    raise TypeError(f"cannot interpret {type(x).__name__} as a bicomplex number")


ZERO = Bicomplex()
ONE = Bicomplex(1.0)
I1 = Bicomplex(0.0, 1.0)
I2 = Bicomplex(0.0, 0.0, 1.0)
J = Bicomplex(0.0, 0.0, 0.0, 1.0)
E1 = Bicomplex(0.5, 0.0, 0.0, 0.5)
E2 = Bicomplex(0.5, 0.0, 0.0, -0.5)


def bc_add(s: Bicomplex, t: Bicomplex) -> Bicomplex:
    return Bicomplex(s.w0 + t.w0, s.w1 + t.w1, s.w2 + t.w2, s.w3 + t.w3)


def bc_sub(s: Bicomplex, t: Bicomplex) -> Bicomplex:
    return Bicomplex(s.w0 - t.w0, s.w1 - t.w1, s.w2 - t.w2, s.w3 - t.w3)


def bc_neg(s: Bicomplex) -> Bicomplex:
    return Bicomplex(-s.w0, -s.w1, -s.w2, -s.w3)


def to_idempotent(w: Bicomplex) -> tuple[complex, complex]:
    """Return ``(p1, p2)`` with ``w = p1*e1 + p2*e2``.

    ``p1 = z1 - z2*i1`` and ``p2 = z1 + z2*i1`` where ``w = z1 + z2*i2``.
    """
    return (complex(w.w0 + w.w3, w.w1 - w.w2),
            complex(w.w0 - w.w3, w.w1 + w.w2))


def from_idempotent(p1: complex, p2: complex) -> Bicomplex:
    p1, p2 = complex(p1), complex(p2)
    # z1 = (p1 + p2)/2, z2 = i1*(p1 - p2)/2
    return Bicomplex(
        (p1.real + p2.real) / 2.0,
        (p1.imag + p2.imag) / 2.0,
        (p2.imag - p1.imag) / 2.0,
        (p1.real - p2.real) / 2.0,
    )


def bc_mul(s: Bicomplex, t: Bicomplex) -> Bicomplex:
    p1, p2 = to_idempotent(s)
    q1, q2 = to_idempotent(t)
    return from_idempotent(p1 * q1, p2 * q2)


def bc_conj(w: Bicomplex, k: int) -> Bicomplex:
    sig = _SIGNATURES[_check_conj_index(k)]
    # + 0.0 turns a flipped zero back into +0.0
    return Bicomplex(*(s * c + 0.0 for s, c in zip(sig, w.as_tuple())))


def conj_compose(k1: int, k2: int) -> int:
    """Index of the conjugation equal to applying ``k1`` then ``k2``.

    The four conjugations form the Klein four-group; with the indexing used
    here the group law is bitwise xor.
    """
    return _check_conj_index(k1) ^ _check_conj_index(k2)


def mod_sq_i1(w: Bicomplex) -> complex:
    """``w * w^dag2 = z1**2 + z2**2`` in C(i1)."""
    p1, p2 = to_idempotent(w)
    return p1 * p2


def mod_sq_i2(w: Bicomplex) -> ComplexC2:
    """``w * w^dag1 = (|z1|^2 - |z2|^2) + 2 Re(z1 conj(z2)) i2``."""
    z1, z2 = w.z1, w.z2
    return ComplexC2(abs(z1) ** 2 - abs(z2) ** 2, 2.0 * (z1 * z2.conjugate()).real)


def mod_sq_j(w: Bicomplex) -> Hyperbolic:
    """``w * w^dag3 = (|z1|^2 + |z2|^2) - 2 Im(z1 conj(z2)) j``.

    Its idempotent channels are ``|p1|^2`` and ``|p2|^2``.
    """
    z1, z2 = w.z1, w.z2
    return Hyperbolic(abs(z1) ** 2 + abs(z2) ** 2, -2.0 * (z1 * z2.conjugate()).imag + 0.0)


def mod1(w: Bicomplex) -> float:
    """First real modulus ``|z1**2 + z2**2| ** 0.5``; vanishes on the null-cone."""
    p1, p2 = to_idempotent(w)
    return math.sqrt(abs(p1) * abs(p2))


def euclid(w: Bicomplex) -> float:
    return math.hypot(w.w0, w.w1, w.w2, w.w3)


mod3 = euclid


def is_null_cone(w: Bicomplex, tol: float = DEFAULT_TOL) -> bool:
    p1, p2 = to_idempotent(w)
    return min(abs(p1), abs(p2)) <= tol * max(1.0, euclid(w))


def is_hyperbolic(w: Bicomplex, tol: float = DEFAULT_TOL) -> bool:
    bound = tol * max(1.0, euclid(w))
    return abs(w.w1) <= bound and abs(w.w2) <= bound


def is_hyperbolic_positive(w: Bicomplex, tol: float = DEFAULT_TOL) -> bool:
    if not is_hyperbolic(w, tol):
        return False
    p1, p2 = to_idempotent(w)
    return p1.real >= -tol and p2.real >= -tol


def bc_inv(w: Bicomplex, tol: float = DEFAULT_TOL) -> Bicomplex:
    if is_null_cone(w, tol):
        raise NullConeError(f"{w!r} is a zero divisor and has no inverse")
    p1, p2 = to_idempotent(w)
    return from_idempotent(1.0 / p1, 1.0 / p2)


def hyp_cos(d: Hyperbolic) -> Hyperbolic:
    return Hyperbolic.from_idempotent(math.cos(d.a), math.cos(d.b))


def hyp_from_angles(theta1: float, theta2: float) -> Hyperbolic:
    """``theta1*e1 + theta2*e2`` written as ``x + y*j``."""
    return Hyperbolic.from_idempotent(theta1, theta2)
