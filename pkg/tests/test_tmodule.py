import math

import numpy as np
import pytest
from hypothesis import assume, given, strategies as st

from bicomplex import (
    E1, E2, I1, I2, J, ONE, Bicomplex, DimensionError, HVector, Hyperbolic, MetricError,
    SplitMetric, TVector, ZeroChannelError, bc_conj, bc_mul, bra, bra_apply, bra_project,
    distance, dot, dot_split, euclid, hyp_cos, hyp_dot, hyperbolic_angle, is_closed,
    is_hyperbolic_positive, norm, project, recombine, schwarz_witness, to_idempotent, vec_add,
    vec_scale,
)
from bicomplex.tmodule import channel_norms

from conftest import bicomplex, close, real, tvector_pairs, tvectors

W = Bicomplex(1, 2, 3, 4)


def tv(*entries):
    return TVector([Bicomplex(*e).as_tuple() if isinstance(e, tuple) else e.as_tuple()
                    for e in entries])


def test_vec_examples():
    x = tv(W, J)
    assert vec_scale(ONE, x) == x
    assert vec_add(vec_scale(E1, tv(ONE)), vec_scale(E2, tv(ONE))) == tv(ONE)
    assert vec_scale(J, tv(ONE, I1)) == tv(J, -I2)
    with pytest.raises(DimensionError):
        vec_add(tv(ONE), tv(ONE, ONE))


def test_project_examples():
    assert project(tv(Bicomplex(3, 0, 4, 0)), 1).tolist() == [3 - 4j]
    real_vec = TVector([[1, 0, 0, 0], [-2.5, 0, 0, 0]])
    for k in (1, 2):
        assert project(real_vec, k).tolist() == [1, -2.5]
    assert project(tv(I1 + I2), 1).tolist() == [0]
    with pytest.raises(ValueError):
        project(real_vec, 3)


def test_recombine_examples():
    x = np.array([1 + 2j, -3j])
    assert recombine(x, x) == TVector.from_complex(x)
    assert recombine([1], [-1]) == tv(J)
    y = tv(W, J, I2)
    assert recombine(project(y, 1), project(y, 2)) == y
    with pytest.raises(DimensionError):
        recombine([1], [1, 2])


def test_dot_examples():
    x = tv(ONE + I2)
    assert dot(x, x) == Bicomplex(2)
    assert dot(tv(W, J), TVector.zeros(2)) == Bicomplex()
    assert dot(tv(I1), tv(I1)) == ONE


def test_dot_split_examples():
    x, y = tv(W, J), tv(I1, ONE + I2)
    assert close(dot_split(x, y, SplitMetric.identity(2)), dot(x, y), 1e-15)
    m = SplitMetric([[2]], [[3]])
    got = dot_split(tv(ONE), tv(ONE), m)
    assert got == bc_mul(Bicomplex(2), E1) + bc_mul(Bicomplex(3), E2)
    assert is_hyperbolic_positive(dot_split(x, x, SplitMetric([[2, 1j], [-1j, 2]],
                                                             [[1, 0], [0, 5]])))


def test_split_metric_validation():
    with pytest.raises(MetricError):
        SplitMetric([[1, 1j], [1j, 1]], [[1, 0], [0, 1]])
    with pytest.raises(MetricError):
        SplitMetric([[1, 0], [0, -1]], [[1, 0], [0, 1]])
    with pytest.raises(DimensionError):
        SplitMetric([[1]], [[1, 0], [0, 1]])


def test_split_closure_violation():
    m = SplitMetric([[2]], [[3]])
    assert not is_closed(m)
    assert is_closed(SplitMetric.identity(3))
    val = dot_split(tv(ONE), tv(ONE), m)
    assert abs(val.w2) > 1e-10 or abs(val.w3) > 1e-10


def test_norm_examples():
    assert norm(tv(ONE + I2)) == pytest.approx(math.sqrt(2))
    assert norm(TVector.zeros(3)) == 0.0
    assert norm(tv(W)) == pytest.approx(math.sqrt(30))
    assert distance(tv(W), tv(W)) == 0.0


def test_schwarz_examples():
    x = tv(ONE)
    lhs, mid, rhs = schwarz_witness(x, tv(J))
    assert lhs == pytest.approx(1.0) and rhs == pytest.approx(math.sqrt(2))
    real_x = TVector([[1, 0, 0, 0], [2, 0, 0, 0]])
    lhs, mid, rhs = schwarz_witness(real_x, real_x)
    assert lhs == pytest.approx(mid) == pytest.approx(norm(real_x) ** 2)
    lhs, _, _ = schwarz_witness(TVector([[1, 0, 0, 0], [0] * 4]), TVector([[0] * 4, [1, 0, 0, 0]]))
    assert lhs == 0.0


def test_schwarz_equal_vectors_unequal_channels():
    # lhs = mid always; equals norm^2 only when both channel norms agree
    x = tv(E1 + bc_mul(Bicomplex(2), E2))
    lhs, mid, _ = schwarz_witness(x, x)
    assert lhs == pytest.approx(mid)
    assert lhs != pytest.approx(norm(x) ** 2)


def test_bra_examples():
    x, y = tv(W, J), tv(I1, I2)
    assert bra_apply(bra(x), x) == dot(x, x)
    assert is_hyperbolic_positive(bra_apply(bra(x), x))
    assert bra_apply(bra(vec_scale(J, x)), y) == bra_apply(bc_conj(J, 3) * bra(x), y)
    assert bra_apply(bra(vec_scale(J, x)), y) == bc_mul(J, bra_apply(bra(x), y))
    assert bra_apply(bra(TVector.zeros(2)), y) == Bicomplex()


def test_bra_project_examples():
    x = tv(W, J)
    f1 = bra_project(x, 1)
    a, _ = to_idempotent(dot(x, x))
    assert f1(project(x, 1)) == pytest.approx(a)
    assert f1(project(x, 1)) == pytest.approx(np.linalg.norm(project(x, 1)) ** 2)
    r = TVector([[1, 0, 0, 0], [3, 0, 0, 0]])
    psi = np.array([1 + 1j, 2])
    assert bra_project(r, 1)(psi) == pytest.approx(bra_project(r, 2)(psi))
    fj1, fj2 = bra_project(tv(J), 1), bra_project(tv(J), 2)
    assert fj1.ket.tolist() == [1] and fj2.ket.tolist() == [-1]
    assert fj1([2j]) == pytest.approx(2j)
    assert fj2([2j]) == pytest.approx(-2j)
    with pytest.raises(ValueError):
        bra_project(x, 0)


def test_angle_examples():
    x = HVector([[1, 0], [2, 0]])
    assert hyperbolic_angle(x, x) == Hyperbolic(0, 0)
    ang = hyperbolic_angle(HVector([[1, 0], [0, 0]]), HVector([[0, 0], [1, 0]]))
    assert (ang.x, ang.y) == pytest.approx((math.pi / 2, 0.0), abs=1e-15)
    # [1, e2] against [1, 0]: channel angles 0 and pi/4
    ang = hyperbolic_angle(HVector([[1, 0], [0.5, -0.5]]), HVector([[1, 0], [0, 0]]))
    assert (ang.x, ang.y) == pytest.approx((math.pi / 8, -math.pi / 8), abs=1e-15)
    with pytest.raises(ZeroChannelError):
        hyperbolic_angle(HVector([[0.5, 0.5]]), HVector([[1, 0]]))


def test_hyp_dot():
    x, y = HVector([[1, 2], [3, -1]]), HVector([[0, 1], [2, 2]])
    want = Hyperbolic(1, 2) * Hyperbolic(0, 1) + Hyperbolic(3, -1) * Hyperbolic(2, 2)
    assert hyp_dot(x, y) == want
    assert x.to_tvector() == TVector([[1, 0, 0, 2], [3, 0, 0, -1]])


# --- invariants -------------------------------------------------------------

def _bscale(x, y):
    return max(1.0, float(np.linalg.norm(x.components) * np.linalg.norm(y.components)))


@given(tvector_pairs(), bicomplex)
def test_dot_axioms(pair, alpha):
    x, y = pair
    s = _bscale(x, y)
    assert close(dot(x, vec_scale(alpha, y)), bc_mul(alpha, dot(x, y)), 1e-12, 2 * s * euclid(alpha))
    assert close(dot(x, y), bc_conj(dot(y, x), 3), 1e-12, s)
    assert close(dot(x, vec_add(x, y)), dot(x, x) + dot(x, y), 1e-12, 2 * s + _bscale(x, x))


@given(tvector_pairs())
def test_channel_decomposition(pair):
    x, y = pair
    p1, p2 = to_idempotent(dot(x, y))
    s = _bscale(x, y)
    assert abs(p1 - np.vdot(project(x, 1), project(y, 1))) <= 1e-12 * s * 4
    assert abs(p2 - np.vdot(project(x, 2), project(y, 2))) <= 1e-12 * s * 4


@given(tvectors())
def test_positivity_and_zero(x):
    d = dot(x, x)
    assert is_hyperbolic_positive(d)
    assert (norm(x) == 0) == bool(np.all(x.components == 0))


@given(st.integers(1, 8).flatmap(lambda n: st.tuples(
    st.lists(st.tuples(real, real), min_size=n, max_size=n),
    st.lists(st.tuples(real, real), min_size=n, max_size=n))))
def test_closure(data):
    x = TVector.from_complex([complex(*c) for c in data[0]])
    y = TVector.from_complex([complex(*c) for c in data[1]])
    d = dot(x, y)
    assert d.w2 == 0.0 and d.w3 == 0.0


@st.composite
def tvector_triples(draw):
    n = draw(st.integers(1, 8))
    return draw(tvectors(n)), draw(tvectors(n)), draw(tvectors(n))


@given(tvector_triples(), real, real, bicomplex)
def test_norm_metric_axioms(triple, a, b, alpha):
    x, y, z = triple
    assert norm(x) >= 0
    for lam in (Bicomplex(a, b), Bicomplex(a, 0, b, 0)):
        assert norm(vec_scale(lam, x)) == pytest.approx(
            euclid(lam) * norm(x), rel=1e-10, abs=1e-10)
    assert norm(vec_scale(alpha, x)) <= math.sqrt(2) * euclid(alpha) * norm(x) * (1 + 1e-12) + 1e-12
    assert norm(vec_add(x, y)) <= norm(x) + norm(y) + 1e-10
    assert distance(x, y) == pytest.approx(distance(y, x))
    assert distance(x, z) <= distance(x, y) + distance(y, z) + 1e-10
    assert distance(x, x) == 0.0


@given(tvectors())
def test_channel_norm_bound(x):
    for k in (1, 2):
        assert np.linalg.norm(project(x, k)) <= math.sqrt(2) * norm(x) * (1 + 1e-12)


@given(tvector_pairs())
def test_schwarz_chain(pair):
    lhs, mid, rhs = schwarz_witness(*pair)
    assert lhs <= mid * (1 + 1e-12) + 1e-12
    assert mid <= rhs * (1 + 1e-12) + 1e-12


@given(tvector_pairs())
def test_schwarz_equality_case(pair):
    x, _ = pair
    lhs, mid, _ = schwarz_witness(x, x)
    assert lhs == pytest.approx(mid, rel=1e-12, abs=1e-12)


@given(tvector_pairs(), bicomplex, bicomplex)
def test_bra_antilinear(pair, l1, l2):
    x1, x2 = pair
    y = x2
    combo = vec_add(vec_scale(l1, x1), vec_scale(l2, x2))
    want = bc_mul(bc_conj(l1, 3), bra_apply(bra(x1), y)) + bc_mul(bc_conj(l2, 3), bra_apply(bra(x2), y))
    s = (euclid(l1) + euclid(l2)) * _bscale(x1, y) * 4
    assert close(bra_apply(bra(combo), y), want, 1e-12, s)
    as_functionals = bc_conj(l1, 3) * bra(x1) + bc_conj(l2, 3) * bra(x2)
    assert close(bra_apply(as_functionals, y), want, 1e-12, s)


@given(tvector_pairs())
def test_bra_project_channels(pair):
    x, psi = pair
    p = to_idempotent(dot(x, psi))
    for k in (1, 2):
        assert bra_project(x, k)(project(psi, k)) == pytest.approx(
            p[k - 1], rel=1e-12, abs=1e-12 * _bscale(x, psi))


@st.composite
def hvector_pairs(draw):
    n = draw(st.integers(1, 6))
    pts = st.lists(st.tuples(real, real), min_size=n, max_size=n)
    return HVector(draw(pts)), HVector(draw(pts))


@given(hvector_pairs())
def test_angle_cosine(pair):
    x, y = pair
    nx, ny = channel_norms(x), channel_norms(y)
    assume(min(nx + ny) > 1e-6)
    c = hyp_cos(hyperbolic_angle(x, y))
    d = hyp_dot(x, y)
    assert c.a == pytest.approx(d.a / (nx[0] * ny[0]), abs=1e-10)
    assert c.b == pytest.approx(d.b / (nx[1] * ny[1]), abs=1e-10)
    self_angle = hyperbolic_angle(x, x)
    assert abs(self_angle.x) <= 1e-15 and abs(self_angle.y) <= 1e-15
