import random

import pytest
from hypothesis import given, strategies as st

from closed_vertex.lattice import (
    PAIRS,
    CurveClassXhat,
    DivisorClassX,
    DivisorClassXhat,
    MINUS_K_X,
    intersect_div_curve_Xhat,
    intersect_div_div_X,
    intersect_div_div_Xhat,
    section_class,
)
from closed_vertex.nef import (
    ANTI_LINE,
    CONIC,
    H_S,
    E_S,
    PreconditionViolation,
    SurfaceClass,
    certify,
    curve_in_plane_Xhat,
    djk_divisor,
    djk_dot_curve,
    djk_parts,
    dp6_effective_generators,
    half_anticanonical_parts,
    is_nef_on_dp6,
    minus_k_dot_curve,
    normal_bundle_degree_Dprime,
    random_effective,
    surface_intersect,
)


def test_surface_pairing():
    assert surface_intersect(CONIC, CONIC) == 1
    c = SurfaceClass.from_a(7, (1, 2, 3))
    assert surface_intersect(ANTI_LINE, c) == 7 - 1 - 2 - 3
    assert surface_intersect(H_S, E_S(1)) == 0
    with pytest.raises(ValueError):
        surface_intersect(SurfaceClass(1, (0, 0)), H_S)


def test_generators():
    gens = dp6_effective_generators()
    assert len(gens) == 6
    for g in gens:
        assert surface_intersect(g, g) == -1
        assert surface_intersect(CONIC, g) in (0, 1)


def test_nef_examples():
    assert is_nef_on_dp6(CONIC)
    assert is_nef_on_dp6(SurfaceClass.from_a(1, (1, 0, 0)))
    assert not is_nef_on_dp6(E_S(1))
    assert is_nef_on_dp6(SurfaceClass.from_a(1, (0, 0, 1)))  # h' - e_5'


def test_minus_k_dot_curve():
    assert minus_k_dot_curve(H_S) == 2
    assert minus_k_dot_curve(CONIC) == 1
    assert minus_k_dot_curve(SurfaceClass.from_a(1, (1, 1, 0))) == 0
    with pytest.raises(PreconditionViolation):
        minus_k_dot_curve(SurfaceClass.from_a(1, (1, 1, 1)))


def test_djk_dot_curve():
    assert djk_dot_curve(H_S) == 1
    assert djk_dot_curve(SurfaceClass.from_a(1, (0, 0, 1))) == 0
    assert djk_dot_curve(SurfaceClass.from_a(3, (1, 1, 2))) == 1
    with pytest.raises(PreconditionViolation):
        djk_dot_curve(SurfaceClass.from_a(1, (0, 0, 2)))


def test_normal_bundle_degrees():
    c = SurfaceClass.from_a(5, (1, 2, 3))
    assert normal_bundle_degree_Dprime(c, "anticanonical") == 5 - 6
    assert normal_bundle_degree_Dprime(c, "djk") == -3
    assert normal_bundle_degree_Dprime(H_S, "djk") == 0


def test_djk_divisor():
    D = djk_divisor((1, 2))
    assert D == DivisorClassXhat(2, (-1,) * 6, (-1, 0, 0, 0, 0, -1))
    for p in PAIRS:
        D = djk_divisor(p)
        assert intersect_div_curve_Xhat(D, section_class(p)) == 1
        assert intersect_div_curve_Xhat(D, CurveClassXhat.f(p)) == 1


def test_decompositions_into_planes():
    Dp, Dpp = half_anticanonical_parts()
    assert 2 * (Dp + Dpp) == MINUS_K_X
    assert intersect_div_div_X(Dp, Dp).to_json() == {"d": 1, "c": [-1, -1, -1, 0, 0, 0]}
    for p in PAIRS:
        Dp, Dpp = djk_parts(p)
        assert Dp + Dpp == djk_divisor(p)
        j, k = p
        E, F = DivisorClassXhat.E, DivisorClassXhat.F
        assert Dp == DivisorClassXhat.H() - E(j) - E(k) - E(5) - F(p)
        # normal bundle of D' is -e_5'
        assert intersect_div_div_Xhat(Dp, Dp) == -CurveClassXhat.e(5)


def test_plane_coordinates_consistent():
    rng = random.Random(5)
    for _ in range(500):
        c = SurfaceClass(rng.randint(-20, 20), [rng.randint(-20, 20) for _ in range(3)])
        for p in PAIRS:
            Dp, _ = djk_parts(p)
            lifted = curve_in_plane_Xhat(c, p)
            assert intersect_div_curve_Xhat(Dp, lifted) == normal_bundle_degree_Dprime(c, "djk")


def test_plane_basis_images():
    h = curve_in_plane_Xhat(H_S, (1, 2))
    assert h == CurveClassXhat.h() - CurveClassXhat.f((1, 2))
    assert curve_in_plane_Xhat(E_S(1), (1, 2)) == CurveClassXhat.e(1) - CurveClassXhat.f((1, 2))
    assert curve_in_plane_Xhat(E_S(3), (1, 2)) == CurveClassXhat.e(5)


def test_effective_combinations_nonnegative():
    rng = random.Random(1)
    for _ in range(10_000):
        c = random_effective(rng)
        assert surface_intersect(CONIC, c) >= 0
        assert minus_k_dot_curve(c) >= 0


@given(st.integers(-10**4, 10**4), st.tuples(*[st.integers(-10**4, 10**4)] * 3))
def test_djk_nonnegative_on_its_cone(d, c):
    s = SurfaceClass(d, c)
    if d >= s.a[2]:
        assert djk_dot_curve(s) >= 0
    else:
        with pytest.raises(PreconditionViolation):
            djk_dot_curve(s)


@pytest.mark.parametrize("target", ["anticanonical", "djk"])
def test_certify_reproducible(target):
    r1 = certify(target, 500, seed=7)
    r2 = certify(target, 500, seed=7)
    assert r1.nef_certified
    assert r1.to_json() == r2.to_json()
    assert certify(target, 500, seed=8).to_json() != r1.to_json()


def test_threefold_route_for_anticanonical():
    # -K_X = 2D, so -K_X.C is twice the certified value
    from closed_vertex.lattice import intersect_div_curve_X
    from closed_vertex.nef import curve_in_plane_X

    rng = random.Random(2)
    for _ in range(200):
        c = random_effective(rng)
        assert intersect_div_curve_X(MINUS_K_X, curve_in_plane_X(c)) == 2 * minus_k_dot_curve(c)


def test_minus_k_divisor_class():
    assert MINUS_K_X == 4 * DivisorClassX.H() - 2 * sum(
        (DivisorClassX.E(i) for i in range(2, 7)), DivisorClassX.E(1)
    )
