import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from quatkg.errors import DegenerateInput
from quatkg.quaternion import (I, J, K, ONE, PolarForm, Quaternion, conj, from_polar,
                               from_symplectic, left_mul_i, mul, norm_sq, right_mul_i, to_polar)

TOL = 1e-12

finite = st.floats(min_value=-1e3, max_value=1e3, allow_nan=False, allow_infinity=False)
quaternions = st.builds(Quaternion, finite, finite, finite, finite)


def assert_close(a: Quaternion, b: Quaternion, tol=TOL):
    assert abs(a - b) <= tol, f"{a} != {b}"


MULT_TABLE = [
    (I, I, -ONE), (J, J, -ONE), (K, K, -ONE),
    (I, J, K), (J, I, -K),
    (J, K, I), (K, J, -I),
    (K, I, J), (I, K, -J),
    (ONE, I, I), (ONE, J, J), (ONE, K, K),
]


@pytest.mark.parametrize("a,b,expected", MULT_TABLE)
def test_multiplication_table(a, b, expected):
    assert mul(a, b) == expected


@given(quaternions)
def test_one_is_identity(q):
    assert mul(ONE, q) == q
    assert mul(q, ONE) == q


def left_matrix(a: Quaternion) -> np.ndarray:
    """4x4 real representation of left multiplication by a (columns a*e_i)."""
    basis = [ONE, I, J, K]
    return np.array([mul(a, e).components() for e in basis]).T


def test_product_matches_matrix_representation():
    rng = np.random.default_rng(42)
    for _ in range(50):
        a = Quaternion(*rng.normal(size=4))
        b = Quaternion(*rng.normal(size=4))
        expected = left_matrix(a) @ np.array(b.components())
        got = np.array(mul(a, b).components())
        assert np.max(np.abs(expected - got)) <= TOL * max(1.0, np.max(np.abs(expected)))


@given(quaternions, quaternions, quaternions)
def test_associativity(a, b, c):
    lhs = mul(mul(a, b), c)
    rhs = mul(a, mul(b, c))
    scale = max(1.0, abs(a) * abs(b) * abs(c))
    assert abs(lhs - rhs) <= 1e-12 * scale


def test_anticommutators_vanish():
    for u, v in [(I, J), (J, K), (K, I)]:
        assert mul(u, v) + mul(v, u) == Quaternion()


def test_conj_examples():
    assert conj(J) == -J
    assert conj(Quaternion(1, 1, 1, 1)) == Quaternion(1, -1, -1, -1)


@given(quaternions)
def test_q_times_conj_is_norm(q):
    prod = mul(q, conj(q))
    n = norm_sq(q)
    assert abs(prod - Quaternion(n)) <= 1e-12 * max(1.0, n)


@given(quaternions, quaternions)
def test_conj_antiautomorphism(a, b):
    lhs = conj(mul(a, b))
    rhs = mul(conj(b), conj(a))
    assert abs(lhs - rhs) <= 1e-12 * max(1.0, abs(a) * abs(b))


def test_norm_sq_examples():
    assert norm_sq(Quaternion(1, 1, 1, 1)) == 4
    assert norm_sq(Quaternion()) == 0


@given(quaternions, quaternions)
def test_norm_multiplicative(a, b):
    lhs = norm_sq(mul(a, b))
    rhs = norm_sq(a) * norm_sq(b)
    assert abs(lhs - rhs) <= 1e-12 * max(1.0, rhs)


def test_right_mul_i_unit_table():
    assert right_mul_i(J) == -K
    pair = right_mul_i(from_symplectic(1 + 0j, 1 + 0j)).symplectic()
    assert pair.z0 == 1j and pair.z1 == -1j


@given(quaternions)
def test_right_mul_i_is_product_with_i(q):
    assert_close(right_mul_i(q), mul(q, I), tol=0)


@given(quaternions)
def test_right_mul_i_fourth_power_is_identity(q):
    out = q
    for _ in range(4):
        out = right_mul_i(out)
    assert out == q


def test_left_mul_i_differs_on_j_sector():
    assert left_mul_i(J) == K
    assert right_mul_i(J) == -K


def test_symplectic_round_trip():
    q = Quaternion(0.1, -0.2, 0.3, -0.4)
    pair = q.symplectic()
    assert pair.z0 == complex(0.1, -0.2) and pair.z1 == complex(0.3, -0.4)
    assert pair.quaternion() == q
    assert pair.conj().quaternion() == Quaternion(0.1, 0.2, -0.3, 0.4)


def test_polar_pure_j():
    p = to_polar(J)
    assert p.magnitude == pytest.approx(1.0)
    assert p.theta == pytest.approx(math.pi / 2)
    assert p.phi == 0.0
    assert p.xi == 0.0


def test_polar_real_positive():
    p = to_polar(Quaternion(2.0))
    assert (p.magnitude, p.theta, p.phi, p.xi) == (2.0, 0.0, 0.0, 0.0)


def test_polar_zero_raises():
    with pytest.raises(DegenerateInput):
        to_polar(Quaternion())


@given(quaternions)
def test_polar_round_trip(q):
    if abs(q) < 1e-6:
        return
    p = to_polar(q)
    assert 0.0 <= p.theta <= math.pi / 2
    assert abs(from_polar(p) - q) <= 1e-12 * abs(q)
    assert p.magnitude == pytest.approx(math.sqrt(norm_sq(q)), rel=1e-12)


def test_from_polar_known_value():
    p = PolarForm(2.0, math.pi / 4, math.pi / 2, 0.0)
    q = from_polar(p)
    assert q.x1 == pytest.approx(math.sqrt(2.0))
    assert q.x2 == pytest.approx(math.sqrt(2.0))
    assert abs(q.x0) < 1e-15 and abs(q.x3) < 1e-16
