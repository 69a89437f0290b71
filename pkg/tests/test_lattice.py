import random

import pytest
from hypothesis import given, strategies as st

from closed_vertex.lattice import (
    MINUS_K_X,
    PAIRS,
    CurveClassX,
    CurveClassXhat,
    DivisorClassX,
    DivisorClassXhat,
    complement_pair,
    intersect_div_curve_X,
    intersect_div_curve_Xhat,
    intersect_div_div_X,
    intersect_div_div_Xhat,
    lift_to_Xhat,
    pushforward_to_X,
    section_class,
)
from closed_vertex.nef import djk_divisor

ints = st.integers(-50, 50)
six = st.tuples(*[ints] * 6)
curve_x = st.builds(CurveClassX, ints, six)
div_x = st.builds(DivisorClassX, ints, six)
curve_xh = st.builds(CurveClassXhat, ints, six, six)
div_xh = st.builds(DivisorClassXhat, ints, six, six)


def test_X_pairing_table():
    H, E = DivisorClassX.H(), DivisorClassX.E
    assert intersect_div_div_X(H, H) == CurveClassX.h()
    assert intersect_div_div_X(E(1), E(1)) == -CurveClassX.e(1)
    assert intersect_div_div_X(H, E(3)) == CurveClassX.zero()
    assert intersect_div_div_X(E(1), E(2)) == CurveClassX.zero()
    assert intersect_div_curve_X(H, CurveClassX.h()) == 1
    assert intersect_div_curve_X(E(1), CurveClassX.e(1)) == -1
    assert intersect_div_curve_X(H, CurveClassX.e(2)) == 0


def test_anticanonical_square():
    assert intersect_div_div_X(MINUS_K_X, MINUS_K_X) == CurveClassX(16, (-4,) * 6)


def test_Xhat_pairing_table():
    H, E, F = DivisorClassXhat.H(), DivisorClassXhat.E, DivisorClassXhat.F
    h, e, f = CurveClassXhat.h(), CurveClassXhat.e, CurveClassXhat.f
    assert intersect_div_div_Xhat(H, F((1, 2))) == f((1, 2))
    assert intersect_div_div_Xhat(E(1), F((1, 2))) == f((1, 2))
    assert intersect_div_div_Xhat(E(2), F((1, 2))) == f((1, 2))
    assert intersect_div_div_Xhat(E(3), F((1, 2))) == CurveClassXhat.zero()
    assert intersect_div_div_Xhat(E(5), F((3, 4))) == CurveClassXhat.zero()
    assert intersect_div_div_Xhat(F((1, 2)), F((1, 2))) == -h + e(1) + e(2) - 2 * f((1, 2))
    assert intersect_div_div_Xhat(F((1, 2)), F((3, 4))) == CurveClassXhat.zero()
    assert intersect_div_curve_Xhat(H, h) == 1
    assert intersect_div_curve_Xhat(E(4), e(4)) == -1
    assert intersect_div_curve_Xhat(F((1, 2)), f((1, 2))) == -1
    assert intersect_div_curve_Xhat(F((1, 2)), f((1, 3))) == 0


def test_fiber_self_intersection_is_minus_s_minus_f():
    for p in PAIRS:
        F = DivisorClassXhat.F(p)
        assert intersect_div_div_Xhat(F, F) == -section_class(p) - CurveClassXhat.f(p)


def test_section_class():
    assert section_class((1, 2)) == CurveClassXhat(1, (-1, -1, 0, 0, 0, 0), (1, 0, 0, 0, 0, 0))
    assert section_class((3, 4)) == CurveClassXhat(1, (0, 0, -1, -1, 0, 0), (0, 0, 0, 0, 0, 1))
    assert pushforward_to_X(section_class((1, 2))) == CurveClassX(1, (-1, -1, 0, 0, 0, 0))
    assert pushforward_to_X(CurveClassXhat.f((1, 2))) == CurveClassX.zero()


def test_complement_pair():
    assert complement_pair((1, 2)) == (3, 4)
    assert complement_pair((1, 4)) == (2, 3)
    for p in PAIRS:
        q = complement_pair(p)
        assert set(p) | set(q) == {1, 2, 3, 4}
        assert complement_pair(q) == p
    with pytest.raises(ValueError):
        complement_pair((2, 1))


def test_lift_and_pushforward():
    c = CurveClassX(1, (-1, -1, 0, 0, 0, 0))
    assert lift_to_Xhat(c) == CurveClassXhat.h() - CurveClassXhat.e(1) - CurveClassXhat.e(2)
    assert lift_to_Xhat(CurveClassX.zero()) == CurveClassXhat.zero()


@given(curve_x)
def test_pushforward_of_lift_is_identity(c):
    assert pushforward_to_X(lift_to_Xhat(c)) == c


@given(div_x, div_x, curve_x, curve_x, ints)
def test_X_pairings_bilinear(D1, D2, c1, c2, k):
    assert intersect_div_curve_X(D1 + k * D2, c1) == (
        intersect_div_curve_X(D1, c1) + k * intersect_div_curve_X(D2, c1)
    )
    assert intersect_div_curve_X(D1, c1 + k * c2) == (
        intersect_div_curve_X(D1, c1) + k * intersect_div_curve_X(D1, c2)
    )
    assert intersect_div_div_X(D1 + k * D2, D1) == (
        intersect_div_div_X(D1, D1) + k * intersect_div_div_X(D2, D1)
    )


@given(div_xh, div_xh, div_xh, curve_xh, ints)
def test_Xhat_pairings_bilinear(D1, D2, D3, c, k):
    assert intersect_div_div_Xhat(D1 + k * D2, D3) == (
        intersect_div_div_Xhat(D1, D3) + k * intersect_div_div_Xhat(D2, D3)
    )
    assert intersect_div_div_Xhat(D1, D2) == intersect_div_div_Xhat(D2, D1)
    assert intersect_div_curve_Xhat(D1 + k * D2, c) == (
        intersect_div_curve_Xhat(D1, c) + k * intersect_div_curve_Xhat(D2, c)
    )


def _triple(pair, D1, D2, D3, curve):
    return curve(D3, pair(D1, D2))


@given(div_xh, div_xh, div_xh)
def test_Xhat_triple_product_symmetric(D1, D2, D3):
    vals = {
        _triple(intersect_div_div_Xhat, a, b, c, intersect_div_curve_Xhat)
        for a, b, c in [(D1, D2, D3), (D1, D3, D2), (D2, D3, D1), (D2, D1, D3), (D3, D1, D2), (D3, D2, D1)]
    }
    assert len(vals) == 1


@given(div_x, div_x, div_x)
def test_X_triple_product_symmetric(D1, D2, D3):
    vals = {
        _triple(intersect_div_div_X, a, b, c, intersect_div_curve_X)
        for a, b, c in [(D1, D2, D3), (D1, D3, D2), (D2, D3, D1)]
    }
    assert len(vals) == 1


def test_bilinearity_randomized_10k():
    rng = random.Random(20240611)
    r = lambda: rng.randint(-30, 30)  # noqa: E731
    for _ in range(10_000):
        D1 = DivisorClassXhat(r(), [r() for _ in range(6)], [r() for _ in range(6)])
        D2 = DivisorClassXhat(r(), [r() for _ in range(6)], [r() for _ in range(6)])
        D3 = DivisorClassXhat(r(), [r() for _ in range(6)], [r() for _ in range(6)])
        a, b = r(), r()
        lhs = intersect_div_div_Xhat(a * D1 + b * D2, D3)
        rhs = a * intersect_div_div_Xhat(D1, D3) + b * intersect_div_div_Xhat(D2, D3)
        assert lhs == rhs


def _random_balanced(rng, lo=-100, hi=100):
    c = [rng.randint(lo, hi) for _ in range(6)]
    # fix the parity so 2d + sum(c) = 0 has an integer solution
    if sum(c) % 2:
        c[0] += 1
    return CurveClassX(-sum(c) // 2, tuple(c))


def test_balanced_classes_pair_to_zero():
    rng = random.Random(3)
    for _ in range(2000):
        beta = _random_balanced(rng)
        assert beta.is_balanced
        assert intersect_div_curve_X(MINUS_K_X, beta) == 0
        for p in PAIRS:
            assert intersect_div_curve_Xhat(djk_divisor(p), lift_to_Xhat(beta)) == 0


def test_json_round_trip():
    c = CurveClassXhat(3, (1, -2, 0, 0, 5, 0), (0, 1, 0, 0, -1, 2))
    assert CurveClassXhat.from_json(c.to_json()) == c
    assert c.to_json()["f"] == {"12": 0, "13": 1, "14": 0, "23": 0, "24": -1, "34": 2}
    D = DivisorClassXhat(2, (-1,) * 6, (-1, 0, 0, 0, 0, -1))
    assert DivisorClassXhat.from_json(D.to_json()) == D
    assert CurveClassX.from_json({"d": 3, "c": [-1] * 6}) == CurveClassX(3, (-1,) * 6)
    assert DivisorClassX.from_json(MINUS_K_X.to_json()) == MINUS_K_X
    with pytest.raises(ValueError):
        CurveClassX.from_json({"d": 1, "c": [0] * 5})
    with pytest.raises(ValueError):
        CurveClassXhat.from_json({"d": 1, "c": [0] * 6, "f": {"15": 1}})
