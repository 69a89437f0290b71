"""Nef certificates for -K_X on X and for the divisors D_jk on X-hat.

Both arguments reduce to a surface S isomorphic to P^2 blown up at three
points (a degree 6 del Pezzo surface):

* -K_X = 2D with D = D' + D'', D' = H - E_1 - E_2 - E_3 and
  D'' = H - E_4 - E_5 - E_6.  For a curve C = d h - sum a_i e_i on D',
  D.C = (d - a_1 - a_2 - a_3) + d, non-negative because 2h - e_1 - e_2 - e_3
  is nef on D'.
* D_jk = D' + D'' with D' = H - E_j - E_k - E_5 - F_jk.  On D' the line
  and exceptional classes are h' = h - f_jk, e_j' = e_j - f_jk,
  e_k' = e_k - f_jk, e_5' = e_5, and for C = d h' - a_j e_j' - a_k e_k' - a_5 e_5'
  one gets D_jk.C = -a_5 + d >= 0 because h' - e_5' is nef on D'.

Each check is evaluated twice: on the surface and, after pushing the
curve into the threefold, with the lattice pairings of
:mod:`closed_vertex.lattice`.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .lattice import (
    PAIRS,
    CurveClassX,
    CurveClassXhat,
    DivisorClassX,
    DivisorClassXhat,
    complement_pair,
    intersect_div_curve_X,
    intersect_div_curve_Xhat,
    pair_index,
)


class PreconditionViolation(ValueError):
    """The curve lies outside the cone the certificate is stated for."""


@dataclass(frozen=True)
class SurfaceClass:
    """d*h + sum(c_i*e_i) on a blowup of P^2; ``a`` gives a_i = -c_i."""

    d: int
    c: tuple[int, ...] = (0, 0, 0)

    def __post_init__(self):
        object.__setattr__(self, "c", tuple(int(x) for x in self.c))

    @classmethod
    def from_a(cls, d: int, a) -> SurfaceClass:
        return cls(d, tuple(-int(x) for x in a))

    @property
    def a(self) -> tuple[int, ...]:
        return tuple(-x for x in self.c)

    def __add__(self, other: SurfaceClass) -> SurfaceClass:
        if len(self.c) != len(other.c):
            raise ValueError("surface classes live on different blowups")
        return SurfaceClass(self.d + other.d, tuple(x + y for x, y in zip(self.c, other.c)))

    def __rmul__(self, k: int) -> SurfaceClass:
        return SurfaceClass(k * self.d, tuple(k * x for x in self.c))

    def to_json(self) -> dict:
        return {"d": self.d, "c": list(self.c)}


def surface_intersect(c1: SurfaceClass, c2: SurfaceClass) -> int:
    if len(c1.c) != len(c2.c):
        raise ValueError(
            f"dimension mismatch: {len(c1.c)} vs {len(c2.c)} exceptional coordinates"
        )
    return c1.d * c2.d - sum(x * y for x, y in zip(c1.c, c2.c))


H_S = SurfaceClass(1)


def E_S(i: int) -> SurfaceClass:
    c = [0, 0, 0]
    c[i - 1] = 1
    return SurfaceClass(0, tuple(c))


# 2h - e_1 - e_2 - e_3 and h - e_1 - e_2 - e_3
CONIC = SurfaceClass(2, (-1, -1, -1))
ANTI_LINE = SurfaceClass(1, (-1, -1, -1))


def dp6_effective_generators() -> list[SurfaceClass]:
    """The six (-1)-curves, which generate the effective cone."""
    return [
        E_S(1),
        E_S(2),
        E_S(3),
        SurfaceClass(1, (-1, -1, 0)),
        SurfaceClass(1, (-1, 0, -1)),
        SurfaceClass(1, (0, -1, -1)),
    ]


def is_nef_on_dp6(D: SurfaceClass) -> bool:
    if len(D.c) != 3:
        raise ValueError("expected a class on the blowup of P^2 at three points")
    return all(surface_intersect(D, g) >= 0 for g in dp6_effective_generators())


def normal_bundle_degree_Dprime(c: SurfaceClass, variant: str = "anticanonical") -> int:
    """Degree of the normal bundle of D' along the curve ``c`` in D'.

    ``"anticanonical"``: D' is the plane through x_1, x_2, x_3 in X, normal
    class h - e_1 - e_2 - e_3.  ``"djk"``: D' is the plane through x_j, x_k,
    x_5 in X-hat, normal class -e_5' (third exceptional coordinate).
    """
    if variant == "anticanonical":
        return surface_intersect(ANTI_LINE, c)
    if variant == "djk":
        return surface_intersect(SurfaceClass(0, (0, 0, -1)), c)
    raise ValueError(f"unknown variant {variant!r}")


def minus_k_dot_curve(c: SurfaceClass) -> int:
    """D.C for D = -K_X / 2 and a curve C in the plane D' through x_1, x_2, x_3."""
    d, a = c.d, c.a
    if len(a) != 3:
        raise ValueError("expected a class on the blowup of P^2 at three points")
    if 2 * d < sum(a):
        raise PreconditionViolation(f"2d >= a_1+a_2+a_3 fails for d={d}, a={a}")
    return normal_bundle_degree_Dprime(c, "anticanonical") + d


def djk_dot_curve(c: SurfaceClass) -> int:
    """D_jk.C for a curve C = d h' - a_j e_j' - a_k e_k' - a_5 e_5' in D'."""
    if len(c.c) != 3:
        raise ValueError("expected a class on the blowup of P^2 at three points")
    a5 = c.a[2]
    if c.d < a5:
        raise PreconditionViolation(f"d >= a_5 fails for d={c.d}, a_5={a5}")
    return normal_bundle_degree_Dprime(c, "djk") + c.d


# -- threefold side ----------------------------------------------------------


def half_anticanonical_parts() -> tuple[DivisorClassX, DivisorClassX]:
    """(D', D'') with D' + D'' = -K_X / 2."""
    H, E = DivisorClassX.H(), DivisorClassX.E
    return H - E(1) - E(2) - E(3), H - E(4) - E(5) - E(6)


def djk_divisor(p) -> DivisorClassXhat:
    """D_jk = 2H - (E_1 + ... + E_6) - F_jk - F_j'k'."""
    p = PAIRS[pair_index(p)]
    q = complement_pair(p)
    return (
        2 * DivisorClassXhat.H()
        - DivisorClassXhat(0, (1,) * 6)
        - DivisorClassXhat.F(p)
        - DivisorClassXhat.F(q)
    )


def djk_parts(p) -> tuple[DivisorClassXhat, DivisorClassXhat]:
    """(D', D'') with D' the plane through x_j, x_k, x_5 and D'' through x_j', x_k', x_6."""
    (j, k) = PAIRS[pair_index(p)]
    (jj, kk) = complement_pair((j, k))
    H, E, F = DivisorClassXhat.H(), DivisorClassXhat.E, DivisorClassXhat.F
    return H - E(j) - E(k) - E(5) - F((j, k)), H - E(jj) - E(kk) - E(6) - F((jj, kk))


def curve_in_plane_X(c: SurfaceClass) -> CurveClassX:
    """Class in X of a curve lying on the plane through x_1, x_2, x_3."""
    return CurveClassX(c.d, (*c.c, 0, 0, 0))


def curve_in_plane_Xhat(c: SurfaceClass, p) -> CurveClassXhat:
    """Class in X-hat of a curve on the plane through x_j, x_k, x_5.

    Uses h' = h - f_jk, e_j' = e_j - f_jk, e_k' = e_k - f_jk, e_5' = e_5.
    """
    (j, k) = PAIRS[pair_index(p)]
    sj, sk, s5 = c.c
    cc = [0] * 6
    cc[j - 1], cc[k - 1], cc[4] = sj, sk, s5
    phi = [0] * len(PAIRS)
    phi[pair_index((j, k))] = -(c.d + sj + sk)
    return CurveClassXhat(c.d, tuple(cc), tuple(phi))


# -- randomized certification ------------------------------------------------


@dataclass(frozen=True)
class NefCheck:
    curve: SurfaceClass
    value: int  # on the surface
    lattice_value: int  # same number from the threefold pairing
    pair: tuple[int, int] | None = None

    @property
    def ok(self) -> bool:
        return self.value >= 0 and self.value == self.lattice_value

    def to_json(self) -> dict:
        out = {"curve": self.curve.to_json(), "value": self.value,
               "lattice_value": self.lattice_value}
        if self.pair is not None:
            out["pair"] = f"{self.pair[0]}{self.pair[1]}"
        return out


@dataclass(frozen=True)
class NefReport:
    target: str
    seed: int
    samples: int
    max_coefficient: int
    divisor: dict
    checks: tuple[NefCheck, ...]

    @property
    def nef_certified(self) -> bool:
        return all(ch.ok for ch in self.checks)

    def to_json(self) -> dict:
        return {
            "target": self.target,
            "seed": self.seed,
            "samples": self.samples,
            "max_coefficient": self.max_coefficient,
            "divisor": self.divisor,
            "checks": [ch.to_json() for ch in self.checks],
            "nef_certified": self.nef_certified,
        }


def random_effective(rng: random.Random, max_coefficient: int = 20) -> SurfaceClass:
    """A non-negative integer combination of the six (-1)-curves."""
    out = SurfaceClass(0)
    for g in dp6_effective_generators():
        k = rng.randint(0, max_coefficient)
        if k:
            out = out + k * g
    return out


def certify_anticanonical(samples: int, seed: int, max_coefficient: int = 20) -> NefReport:
    rng = random.Random(seed)
    Dp, Dpp = half_anticanonical_parts()
    D = Dp + Dpp
    checks = []
    for _ in range(samples):
        c = random_effective(rng, max_coefficient)
        value = minus_k_dot_curve(c)
        lattice_value = intersect_div_curve_X(D, curve_in_plane_X(c))
        checks.append(NefCheck(c, value, lattice_value))
    divisor = {"name": "-K_X/2 = D' + D''", "class": D.to_json()}
    return NefReport("anticanonical", seed, samples, max_coefficient, divisor, tuple(checks))


def certify_djk(samples: int, seed: int, max_coefficient: int = 20) -> NefReport:
    """Checks D_jk.C >= 0 for random curves C on D', cycling over the six pairs."""
    rng = random.Random(seed)
    checks = []
    for n in range(samples):
        p = PAIRS[n % len(PAIRS)]
        c = random_effective(rng, max_coefficient)
        value = djk_dot_curve(c)
        lattice_value = intersect_div_curve_Xhat(djk_divisor(p), curve_in_plane_Xhat(c, p))
        checks.append(NefCheck(c, value, lattice_value, p))
    divisor = {
        "name": "D_jk = 2H - sum E_i - F_jk - F_j'k'",
        "classes": {f"{p[0]}{p[1]}": djk_divisor(p).to_json() for p in PAIRS},
    }
    return NefReport("djk", seed, samples, max_coefficient, divisor, tuple(checks))


TARGETS = {"anticanonical": certify_anticanonical, "djk": certify_djk}


def certify(target: str, samples: int, seed: int, max_coefficient: int = 20) -> NefReport:
    if target not in TARGETS:
        raise ValueError(f"unknown target {target!r}")
    return TARGETS[target](samples, seed, max_coefficient)
