import math

import numpy as np
import pytest
from hypothesis import settings, strategies as st

from bicomplex import Bicomplex, TMatrix, TVector

settings.register_profile("default", max_examples=200, deadline=None)
settings.load_profile("default")

real = st.floats(-10, 10, allow_nan=False, allow_infinity=False)
nonzero_real = real.filter(lambda x: abs(x) > 1e-3)
bicomplex = st.builds(Bicomplex, real, real, real, real)


@st.composite
def tvectors(draw, n=None):
    n = draw(st.integers(1, 8)) if n is None else n
    return TVector([draw(st.tuples(real, real, real, real)) for _ in range(n)])


@st.composite
def tvector_pairs(draw):
    n = draw(st.integers(1, 8))
    return draw(tvectors(n)), draw(tvectors(n))


@st.composite
def tmatrices(draw, n=None):
    n = draw(st.integers(1, 4)) if n is None else n
    return TMatrix([[draw(st.tuples(real, real, real, real)) for _ in range(n)] for _ in range(n)])


def close(a, b, tol, scale=None):
    """Relative closeness of two Bicomplex values."""
    d = math.hypot(*(x - y for x, y in zip(a.as_tuple(), b.as_tuple())))
    if scale is None:
        scale = math.hypot(*b.as_tuple())
    return d <= tol * max(1.0, scale)


@pytest.fixture
def rng():
    return np.random.default_rng(12345)
