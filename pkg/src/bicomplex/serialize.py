"""JSON forms of the value types.

Bicomplex ``[w0, w1, w2, w3]``, Hyperbolic ``[x, y]``, C(i1) and C(i2)
values ``[re, im]``; vectors are lists of those; a matrix is
``{"n": n, "entries": [...]}`` with entries in row-major order; a split
metric is ``{"g1": [...], "g2": [...]}`` with row-major ``[re, im]`` pairs.

Floats are written with 17 significant digits so every value re-parses to
the identical double.
"""
from __future__ import annotations

import json
import math
from typing import Any

import numpy as np

from .operators import EigenPair, EigenReport, TMatrix
from .scalar import Bicomplex, ComplexC2, Hyperbolic
from .tmodule import HVector, SplitMetric, TVector


class InputError(ValueError):
    """Malformed JSON input (CLI exit code 2)."""

    code = "input_error"


def _number(x) -> float:
    if isinstance(x, bool) or not isinstance(x, (int, float)):
        raise InputError(f"expected a number, got {x!r}")
    return float(x)


def _pair(x, what: str) -> tuple[float, float]:
    if not isinstance(x, list) or len(x) != 2:
        raise InputError(f"{what} must be a 2-array, got {x!r}")
    return _number(x[0]), _number(x[1])


def parse_bicomplex(x) -> Bicomplex:
    if not isinstance(x, list) or len(x) != 4:
        raise InputError(f"a bicomplex number is a 4-array of numbers, got {x!r}")
    return Bicomplex(*(_number(c) for c in x))


def parse_tvector(x) -> TVector:
    if not isinstance(x, list) or not x:
        raise InputError("a vector is a non-empty list of 4-arrays")
    return TVector([parse_bicomplex(c).as_tuple() for c in x])


def parse_hvector(x) -> HVector:
    if not isinstance(x, list) or not x:
        raise InputError("a hyperbolic vector is a non-empty list of 2-arrays")
    return HVector([_pair(c, "hyperbolic coordinate") for c in x])


def parse_tmatrix(x) -> TMatrix:
    if not isinstance(x, dict) or "n" not in x or "entries" not in x:
        raise InputError('a matrix is {"n": int, "entries": [[w0, w1, w2, w3], ...]}')
    n = x["n"]
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise InputError(f"n must be a positive integer, got {n!r}")
    entries = x["entries"]
    if not isinstance(entries, list) or len(entries) != n * n:
        raise InputError(f"expected {n * n} entries for n={n}")
    return TMatrix([parse_bicomplex(e).as_tuple() for e in entries])


def parse_complex_matrix(x, n: int | None = None) -> np.ndarray:
    if not isinstance(x, list) or not x:
        raise InputError("a complex matrix is a row-major list of [re, im] pairs")
    vals = [complex(*_pair(c, "complex entry")) for c in x]
    size = math.isqrt(len(vals))
    if size * size != len(vals) or (n is not None and size != n):
        raise InputError(f"{len(vals)} entries do not form the expected square matrix")
    return np.array(vals, dtype=complex).reshape(size, size)


def parse_split_metric(x) -> SplitMetric:
    if not isinstance(x, dict) or "g1" not in x or "g2" not in x:
        raise InputError('a split metric is {"g1": [...], "g2": [...]}')
    return SplitMetric(parse_complex_matrix(x["g1"]), parse_complex_matrix(x["g2"]))


def encode(value) -> Any:
    """Convert library values to plain JSON-ready Python structures."""
    if isinstance(value, Bicomplex):
        return list(value.as_tuple())
    if isinstance(value, Hyperbolic):
        return [value.x, value.y]
    if isinstance(value, ComplexC2):
        return [value.re, value.i2]
    if isinstance(value, complex):
        return [value.real, value.imag]
    if isinstance(value, (TVector, HVector)):
        return value.tolist()
    if isinstance(value, TMatrix):
        return {"n": value.n, "entries": value.tolist()}
    if isinstance(value, SplitMetric):
        return {"g1": [[z.real, z.imag] for z in value.g1.ravel()],
                "g2": [[z.real, z.imag] for z in value.g2.ravel()]}
    if isinstance(value, EigenPair):
        return {
            "lambda": encode(value.lam),
            "vector": encode(value.vector),
            "residual": value.residual,
            "lambda_hyperbolic": value.lambda_hyperbolic,
            "vector_null_cone": value.vector_null_cone,
            "channels": list(value.channels),
        }
    if isinstance(value, EigenReport):
        return {
            "pairing_mode": value.pairing_mode,
            "spectrum1": [encode(z) for z in value.spectrum1],
            "spectrum2": [encode(z) for z in value.spectrum2],
            "multiplicity1": value.multiplicity1,
            "multiplicity2": value.multiplicity2,
            "pairs": [encode(p) for p in value.pairs],
        }
    if isinstance(value, np.ndarray):
        return encode(value.tolist())
    if isinstance(value, dict):
        return {str(k): encode(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [encode(v) for v in value]
    if isinstance(value, (np.floating, np.integer, np.bool_)):
        return value.item()
    return value


def _fmt_float(x: float) -> str:
    if math.isnan(x) or math.isinf(x):
        return "null"
    if x == 0.0:
        return "-0.0" if math.copysign(1.0, x) < 0 else "0.0"
    s = format(x, ".17g")
    if "e" not in s and "." not in s and "n" not in s:
        s += ".0"
    return s


def dumps(obj) -> str:
    """Compact JSON with 17-significant-digit floats and stable key order."""
    obj = encode(obj)
    if obj is None:
        return "null"
    if obj is True:
        return "true"
    if obj is False:
        return "false"
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, float):
        return _fmt_float(obj)
    if isinstance(obj, str):
        return json.dumps(obj)
    if isinstance(obj, list):
        return "[" + ", ".join(dumps(v) for v in obj) + "]"
    if isinstance(obj, dict):
        return "{" + ", ".join(f"{json.dumps(k)}: {dumps(v)}" for k, v in obj.items()) + "}"
    raise TypeError(f"cannot serialize {type(obj).__name__}")
