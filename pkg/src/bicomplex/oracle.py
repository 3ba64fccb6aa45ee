"""Brute-force reference arithmetic for differential testing.

Everything here works straight from the multiplication table of the basis
``{1, i1, i2, j}`` and the sign patterns of the conjugations.  It must not
import anything that goes through the idempotent channels: only the
``Bicomplex`` value type is shared with the rest of the package.
"""
from __future__ import annotations

from itertools import product
from typing import Sequence

from .errors import DimensionError
from .scalar import Bicomplex

# BASIS_TABLE[a][b] = (sign, index) with e_a * e_b = sign * e_index,
# basis order (1, i1, i2, j)
BASIS_TABLE = (
    ((1, 0), (1, 1), (1, 2), (1, 3)),
    ((1, 1), (-1, 0), (1, 3), (-1, 2)),
    ((1, 2), (1, 3), (-1, 0), (-1, 1)),
    ((1, 3), (-1, 2), (-1, 1), (1, 0)),
)

_CONJ3 = (1.0, -1.0, -1.0, 1.0)

MAX_DET_DIM = 6


def oracle_mul(s: Bicomplex, t: Bicomplex) -> Bicomplex:
    """16-term expansion of ``s * t`` over the basis table."""
    a = s.as_tuple()
    b = t.as_tuple()
    out = [0.0, 0.0, 0.0, 0.0]
    for i, j in product(range(4), repeat=2):
        sign, k = BASIS_TABLE[i][j]
        out[k] += sign * a[i] * b[j]
    return Bicomplex(*out)


def oracle_add(s: Bicomplex, t: Bicomplex) -> Bicomplex:
    return Bicomplex(*(x + y for x, y in zip(s.as_tuple(), t.as_tuple())))


def oracle_conj3(w: Bicomplex) -> Bicomplex:
    return Bicomplex(*(c * x for c, x in zip(_CONJ3, w.as_tuple())))


def oracle_dot(x: Sequence[Bicomplex], y: Sequence[Bicomplex]) -> Bicomplex:
    x, y = list(x), list(y)
    if len(x) != len(y):
        raise DimensionError(f"length mismatch: {len(x)} vs {len(y)}")
    acc = Bicomplex()
    for xi, yi in zip(x, y):
        acc = oracle_add(acc, oracle_mul(oracle_conj3(xi), yi))
    return acc


def _rows(a) -> list[list[Bicomplex]]:
    rows = [list(r) for r in a]
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise DimensionError("matrix must be square")
    return rows


def oracle_matvec(a, x: Sequence[Bicomplex]) -> list[Bicomplex]:
    """``A x`` by direct summation; ``a`` is any row-major nesting of Bicomplex."""
    rows = _rows(a)
    x = list(x)
    if len(rows) != len(x):
        raise DimensionError(f"matrix is {len(rows)}x{len(rows)}, vector has {len(x)}")
    out = []
    for row in rows:
        acc = Bicomplex()
        for aij, xj in zip(row, x):
            acc = oracle_add(acc, oracle_mul(aij, xj))
        out.append(acc)
    return out


def oracle_det(a) -> Bicomplex:
    """Laplace cofactor expansion along the first row; division free."""
    rows = _rows(a)
    n = len(rows)
    if n > MAX_DET_DIM:
        raise DimensionError(f"cofactor determinant limited to n <= {MAX_DET_DIM}, got {n}")
    if n == 0:
        return Bicomplex(1.0)
    return _det(rows)


def _det(rows: list[list[Bicomplex]]) -> Bicomplex:
    n = len(rows)
    if n == 1:
        return rows[0][0]
    acc = Bicomplex()
    for col in range(n):
        minor = [r[:col] + r[col + 1:] for r in rows[1:]]
        term = oracle_mul(rows[0][col], _det(minor))
        if col % 2:
            term = Bicomplex(*(-c for c in term.as_tuple()))
        acc = oracle_add(acc, term)
    return acc
