"""Compare the compiled and pure-Python eigensolver kernels.

    python benchmarks/bench_kernels.py [--sizes 4 8 16 32] [--repeat 5]
"""
import argparse
import timeit

import numpy as np

from bicomplex import _pykernels, linalg
import bicomplex._backend as backend

try:
    from bicomplex import _ckernels
except ImportError:
    _ckernels = None


def _matrix(n, seed=0):
    rng = np.random.default_rng(seed)
    return rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))


def _cases(mod, a):
    n = a.shape[0]
    c = mod.charpoly(a)
    lam = complex(np.linalg.eigvals(a)[0])
    empty = np.zeros((0, n), dtype=complex)
    v0 = np.ones(n, dtype=complex)
    return {
        "charpoly": lambda: mod.charpoly(a),
        "durand_kerner": lambda: mod.durand_kerner(c, 500, 1e-13),
        "inverse_iteration": lambda: mod.inverse_iteration(
            a, lam, lam + 1e-10, v0, empty, 50, 1e-13),
    }


def _full_eig(mod, a):
    def run():
        saved = {k: getattr(backend, k) for k in ("charpoly", "durand_kerner", "inverse_iteration")}
        for k in saved:
            setattr(backend, k, getattr(mod, k))
        try:
            linalg.complex_eig(a)
        finally:
            for k, v in saved.items():
                setattr(backend, k, v)
    return run


def best(fn, repeat):
    number = max(1, int(0.05 / max(1e-7, min(timeit.repeat(fn, number=1, repeat=2)))))
    return min(timeit.repeat(fn, number=number, repeat=repeat)) / number


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--sizes", type=int, nargs="+", default=[4, 8, 16, 32])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    if _ckernels is None:
        print("compiled kernels not built; run `pip install -e . --no-build-isolation` first")
        return
    print(f"{'kernel':<18}{'n':>4}{'python (us)':>14}{'cython (us)':>14}{'speedup':>10}")
    for n in args.sizes:
        a = _matrix(n)
        py, cy = _cases(_pykernels, a), _cases(_ckernels, a)
        py["complex_eig"] = _full_eig(_pykernels, a)
        cy["complex_eig"] = _full_eig(_ckernels, a)
        for name in py:
            tp, tc = best(py[name], args.repeat), best(cy[name], args.repeat)
            print(f"{name:<18}{n:>4}{tp * 1e6:>14.1f}{tc * 1e6:>14.1f}{tp / tc:>9.1f}x")


if __name__ == "__main__":
    main()
