"""Pick the compiled kernels when importable, else the Python fallback.

Set ``BCH_PURE_PYTHON=1`` to force the fallback.
"""
import os

from . import _pykernels

kernels = _pykernels
NAME = "python"

if not os.environ.get("BCH_PURE_PYTHON"):
    try:
        from . import _ckernels
    except ImportError:  # extension not built
        pass
    else:
        kernels = _ckernels
        NAME = "cython"

charpoly = kernels.charpoly
durand_kerner = kernels.durand_kerner
inverse_iteration = kernels.inverse_iteration
