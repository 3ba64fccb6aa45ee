"""Differential checks of the fast paths against the brute-force oracle."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .operators import TMatrix, mat_apply, project_mat
from .oracle import oracle_det, oracle_dot, oracle_matvec, oracle_mul
from .scalar import Bicomplex, bc_mul, euclid, to_idempotent
from .tmodule import TVector, dot

DIFF_TOL = 1e-12
DET_TOL = 1e-10


@dataclass(frozen=True)
class SuiteResult:
    name: str
    samples: int
    max_error: float
    tol: float

    @property
    def passed(self) -> bool:
        return self.max_error <= self.tol


def random_bicomplex(rng: np.random.Generator, scale: float = 10.0) -> Bicomplex:
    return Bicomplex(*rng.uniform(-scale, scale, 4))


def random_tvector(rng: np.random.Generator, n: int, scale: float = 10.0) -> TVector:
    return TVector(rng.uniform(-scale, scale, (n, 4)))


def random_tmatrix(rng: np.random.Generator, n: int, scale: float = 1.0) -> TMatrix:
    return TMatrix(rng.uniform(-scale, scale, (n, n, 4)))


def rel_err(got: Bicomplex, want: Bicomplex, scale: float | None = None) -> float:
    diff = euclid(Bicomplex(*(a - b for a, b in zip(got.as_tuple(), want.as_tuple()))))
    return diff / max(1.0, euclid(want) if scale is None else scale)


def check_mul(samples: int, rng: np.random.Generator) -> SuiteResult:
    worst = 0.0
    for _ in range(samples):
        s, t = random_bicomplex(rng), random_bicomplex(rng)
        # products cancel, so measure against the size of the factors
        worst = max(worst, rel_err(bc_mul(s, t), oracle_mul(s, t), euclid(s) * euclid(t)))
    return SuiteResult("mul", samples, worst, DIFF_TOL)


def check_dot(samples: int, rng: np.random.Generator, max_n: int = 8) -> SuiteResult:
    worst = 0.0
    for _ in range(samples):
        n = int(rng.integers(1, max_n + 1))
        x, y = random_tvector(rng, n), random_tvector(rng, n)
        scale = float(np.linalg.norm(x.components) * np.linalg.norm(y.components))
        worst = max(worst, rel_err(dot(x, y), oracle_dot(x, y), scale))
    return SuiteResult("dot", samples, worst, DIFF_TOL)


def check_matvec(samples: int, rng: np.random.Generator, max_n: int = 6) -> SuiteResult:
    worst = 0.0
    for _ in range(samples):
        n = int(rng.integers(1, max_n + 1))
        a, x = random_tmatrix(rng, n, 10.0), random_tvector(rng, n)
        got = mat_apply(a, x)
        want = oracle_matvec(a.rows(), x)
        scale = float(np.linalg.norm(a.components) * np.linalg.norm(x.components))
        worst = max(worst, max(rel_err(g, w, scale) for g, w in zip(got, want)))
    return SuiteResult("matvec", samples, worst, DIFF_TOL)


def check_det(samples: int, rng: np.random.Generator, max_n: int = 4) -> SuiteResult:
    """Channels of the cofactor determinant equal the channel determinants."""
    worst = 0.0
    for _ in range(samples):
        n = int(rng.integers(1, max_n + 1))
        a = random_tmatrix(rng, n)
        p1, p2 = to_idempotent(oracle_det(a.rows()))
        for k, p in ((1, p1), (2, p2)):
            want = complex(np.linalg.det(project_mat(a, k)))
            scale = max(1.0, float(np.prod(np.linalg.norm(project_mat(a, k), axis=1))))
            worst = max(worst, abs(p - want) / scale)
    return SuiteResult("det", samples, worst, DET_TOL)


def run_all(samples: int = 1000, seed: int = 0) -> list[SuiteResult]:
    rng = np.random.default_rng(seed)
    det_samples = max(1, min(samples, 1000))
    return [
        check_mul(samples, rng),
        check_dot(samples, rng),
        check_matvec(samples, rng),
        check_det(det_samples, rng),
    ]
