"""Homology lattices of X and X-hat and their intersection pairings.

X is the blowup of P^3 at six points x_1..x_6, X-hat is the further blowup of
X along the six lines l_jk (1 <= j < k <= 4) joining the first four points.

Curve classes are stored with *signed* exceptional coefficients::

    beta = d*h + c_1*e_1 + ... + c_6*e_6

so the usual convention beta = d*h - sum(a_i*e_i) is recovered through the
``a`` property (a_i = -c_i).  Divisor classes are stored the same way:
m*H + sum(n_i*E_i) (+ sum(q_jk*F_jk) on X-hat).

Pairings on X::

    H.H = h      E_i.E_i = -e_i      H.h = p      E_i.e_i = -p

Pairings on X-hat (everything not listed is zero)::

    H.H = h      E_i.E_i = -e_i      F_jk.F_jk = -s_jk - f_jk
    H.F_jk = f_jk                    E_i.F_jk = f_jk  (only for i in {j, k})
    H.h = p      E_i.e_i = -p        F_jk.f_jk = -p

with the section class s_jk = h - e_j - e_k + f_jk.
"""

from __future__ import annotations

from dataclasses import dataclass

N_POINTS = 6

PAIRS: tuple[tuple[int, int], ...] = ((1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4))
_PAIR_POS = {p: i for i, p in enumerate(PAIRS)}


def pair_index(p) -> int:
    """Position of the pair (j, k) in :data:`PAIRS`; accepts "12" style keys too."""
    if isinstance(p, str):
        if len(p) != 2 or not p.isdigit():
            raise ValueError(f"bad pair key {p!r}")
        p = (int(p[0]), int(p[1]))
    p = tuple(p)
    if p not in _PAIR_POS:
        raise ValueError(f"pair must satisfy 1 <= j < k <= 4, got {p}")
    return _PAIR_POS[p]


def pair_key(p: tuple[int, int]) -> str:
    return f"{p[0]}{p[1]}"


def complement_pair(p: tuple[int, int]) -> tuple[int, int]:
    """The pair (j', k') with {j, k} | {j', k'} = {1, 2, 3, 4}."""
    pair_index(p)
    rest = sorted({1, 2, 3, 4} - set(p))
    return (rest[0], rest[1])


def _six(values, name: str) -> tuple[int, ...]:
    values = tuple(int(v) for v in values)
    if len(values) != N_POINTS:
        raise ValueError(f"{name} needs exactly {N_POINTS} entries, got {len(values)}")
    return values


def _unit(i: int) -> tuple[int, ...]:
    if not 1 <= i <= N_POINTS:
        raise ValueError(f"point index must be in 1..6, got {i}")
    return tuple(1 if k == i - 1 else 0 for k in range(N_POINTS))


def _int_field(obj: dict, key: str) -> int:
    value = obj[key]
    if isinstance(value, bool) or not isinstance(value, int):
        raise ValueError(f"field {key!r} must be an integer")
    return value


def _int_list(obj: dict, key: str) -> tuple[int, ...]:
    values = obj[key]
    if not isinstance(values, list) or any(
        isinstance(v, bool) or not isinstance(v, int) for v in values
    ):
        raise ValueError(f"field {key!r} must be a list of integers")
    return _six(values, key)


def _pair_dict(obj: dict, key: str) -> tuple[int, ...]:
    raw = obj.get(key, {})
    if not isinstance(raw, dict):
        raise ValueError(f"field {key!r} must be an object keyed by pairs")
    out = [0] * len(PAIRS)
    for k, v in raw.items():
        if isinstance(v, bool) or not isinstance(v, int):
            raise ValueError(f"{key}[{k!r}] must be an integer")
        out[pair_index(k)] = v
    return tuple(out)


# -- X ----------------------------------------------------------------------


@dataclass(frozen=True)
class CurveClassX:
    d: int
    c: tuple[int, ...] = (0,) * N_POINTS

    def __post_init__(self):
        object.__setattr__(self, "d", int(self.d))
        object.__setattr__(self, "c", _six(self.c, "c"))

    @classmethod
    def h(cls) -> CurveClassX:
        return cls(1)

    @classmethod
    def e(cls, i: int) -> CurveClassX:
        return cls(0, _unit(i))

    @classmethod
    def zero(cls) -> CurveClassX:
        return cls(0)

    @classmethod
    def from_a(cls, d: int, a) -> CurveClassX:
        """Build d*h - sum(a_i*e_i)."""
        return cls(d, tuple(-int(x) for x in a))

    @property
    def a(self) -> tuple[int, ...]:
        return tuple(-x for x in self.c)

    @property
    def is_balanced(self) -> bool:
        return 2 * self.d + sum(self.c) == 0

    def __add__(self, other: CurveClassX) -> CurveClassX:
        return CurveClassX(self.d + other.d, tuple(x + y for x, y in zip(self.c, other.c)))

    def __neg__(self) -> CurveClassX:
        return CurveClassX(-self.d, tuple(-x for x in self.c))

    def __sub__(self, other: CurveClassX) -> CurveClassX:
        return self + (-other)

    def __rmul__(self, k: int) -> CurveClassX:
        return CurveClassX(k * self.d, tuple(k * x for x in self.c))

    def to_json(self) -> dict:
        return {"d": self.d, "c": list(self.c)}

    @classmethod
    def from_json(cls, obj: dict) -> CurveClassX:
        return cls(_int_field(obj, "d"), _int_list(obj, "c"))


@dataclass(frozen=True)
class DivisorClassX:
    m: int
    n: tuple[int, ...] = (0,) * N_POINTS

    def __post_init__(self):
        object.__setattr__(self, "m", int(self.m))
        object.__setattr__(self, "n", _six(self.n, "n"))

    @classmethod
    def H(cls) -> DivisorClassX:
        return cls(1)

    @classmethod
    def E(cls, i: int) -> DivisorClassX:
        return cls(0, _unit(i))

    def __add__(self, other: DivisorClassX) -> DivisorClassX:
        return DivisorClassX(self.m + other.m, tuple(x + y for x, y in zip(self.n, other.n)))

    def __neg__(self) -> DivisorClassX:
        return DivisorClassX(-self.m, tuple(-x for x in self.n))

    def __sub__(self, other: DivisorClassX) -> DivisorClassX:
        return self + (-other)

    def __rmul__(self, k: int) -> DivisorClassX:
        return DivisorClassX(k * self.m, tuple(k * x for x in self.n))

    def to_json(self) -> dict:
        return {"m": self.m, "n": list(self.n)}

    @classmethod
    def from_json(cls, obj: dict) -> DivisorClassX:
        return cls(_int_field(obj, "m"), _int_list(obj, "n"))


# -K_X = 4H - 2(E_1 + ... + E_6)
MINUS_K_X = DivisorClassX(4, (-2,) * N_POINTS)


def intersect_div_div_X(D1: DivisorClassX, D2: DivisorClassX) -> CurveClassX:
    return CurveClassX(D1.m * D2.m, tuple(-x * y for x, y in zip(D1.n, D2.n)))


def intersect_div_curve_X(D: DivisorClassX, c: CurveClassX) -> int:
    """Degree of D restricted to c, i.e. the coefficient of the point class."""
    return D.m * c.d - sum(x * y for x, y in zip(D.n, c.c))


# -- X-hat ------------------------------------------------------------------


@dataclass(frozen=True)
class CurveClassXhat:
    d: int
    c: tuple[int, ...] = (0,) * N_POINTS
    phi: tuple[int, ...] = (0,) * len(PAIRS)

    def __post_init__(self):
        object.__setattr__(self, "d", int(self.d))
        object.__setattr__(self, "c", _six(self.c, "c"))
        phi = tuple(int(v) for v in self.phi)
        if len(phi) != len(PAIRS):
            raise ValueError(f"phi needs exactly {len(PAIRS)} entries")
        object.__setattr__(self, "phi", phi)

    @classmethod
    def h(cls) -> CurveClassXhat:
        return cls(1)

    @classmethod
    def e(cls, i: int) -> CurveClassXhat:
        return cls(0, _unit(i))

    @classmethod
    def f(cls, p) -> CurveClassXhat:
        phi = [0] * len(PAIRS)
        phi[pair_index(p)] = 1
        return cls(0, phi=tuple(phi))

    @classmethod
    def zero(cls) -> CurveClassXhat:
        return cls(0)

    @property
    def a(self) -> tuple[int, ...]:
        return tuple(-x for x in self.c)

    def __add__(self, other: CurveClassXhat) -> CurveClassXhat:
        return CurveClassXhat(
            self.d + other.d,
            tuple(x + y for x, y in zip(self.c, other.c)),
            tuple(x + y for x, y in zip(self.phi, other.phi)),
        )

    def __neg__(self) -> CurveClassXhat:
        return CurveClassXhat(-self.d, tuple(-x for x in self.c), tuple(-x for x in self.phi))

    def __sub__(self, other: CurveClassXhat) -> CurveClassXhat:
        return self + (-other)

    def __rmul__(self, k: int) -> CurveClassXhat:
        return CurveClassXhat(k * self.d, tuple(k * x for x in self.c), tuple(k * x for x in self.phi))

    def to_json(self) -> dict:
        return {
            "d": self.d,
            "c": list(self.c),
            "f": {pair_key(p): v for p, v in zip(PAIRS, self.phi)},
        }

    @classmethod
    def from_json(cls, obj: dict) -> CurveClassXhat:
        return cls(_int_field(obj, "d"), _int_list(obj, "c"), _pair_dict(obj, "f"))


@dataclass(frozen=True)
class DivisorClassXhat:
    m: int
    n: tuple[int, ...] = (0,) * N_POINTS
    q: tuple[int, ...] = (0,) * len(PAIRS)

    def __post_init__(self):
        object.__setattr__(self, "m", int(self.m))
        object.__setattr__(self, "n", _six(self.n, "n"))
        q = tuple(int(v) for v in self.q)
        if len(q) != len(PAIRS):
            raise ValueError(f"q needs exactly {len(PAIRS)} entries")
        object.__setattr__(self, "q", q)

    @classmethod
    def H(cls) -> DivisorClassXhat:
        return cls(1)

    @classmethod
    def E(cls, i: int) -> DivisorClassXhat:
        return cls(0, _unit(i))

    @classmethod
    def F(cls, p) -> DivisorClassXhat:
        q = [0] * len(PAIRS)
        q[pair_index(p)] = 1
        return cls(0, q=tuple(q))

    def __add__(self, other: DivisorClassXhat) -> DivisorClassXhat:
        return DivisorClassXhat(
            self.m + other.m,
            tuple(x + y for x, y in zip(self.n, other.n)),
            tuple(x + y for x, y in zip(self.q, other.q)),
        )

    def __neg__(self) -> DivisorClassXhat:
        return DivisorClassXhat(-self.m, tuple(-x for x in self.n), tuple(-x for x in self.q))

    def __sub__(self, other: DivisorClassXhat) -> DivisorClassXhat:
        return self + (-other)

    def __rmul__(self, k: int) -> DivisorClassXhat:
        return DivisorClassXhat(k * self.m, tuple(k * x for x in self.n), tuple(k * x for x in self.q))

    def to_json(self) -> dict:
        return {
            "m": self.m,
            "n": list(self.n),
            "q": {pair_key(p): v for p, v in zip(PAIRS, self.q)},
        }

    @classmethod
    def from_json(cls, obj: dict) -> DivisorClassXhat:
        return cls(_int_field(obj, "m"), _int_list(obj, "n"), _pair_dict(obj, "q"))


def section_class(p) -> CurveClassXhat:
    """s_jk = h - e_j - e_k + f_jk, the section of the trivial fibration F_jk -> l_jk."""
    j, k = PAIRS[pair_index(p)]
    return CurveClassXhat.h() - CurveClassXhat.e(j) - CurveClassXhat.e(k) + CurveClassXhat.f((j, k))


def intersect_div_div_Xhat(D1: DivisorClassXhat, D2: DivisorClassXhat) -> CurveClassXhat:
    d = D1.m * D2.m
    c = [-x * y for x, y in zip(D1.n, D2.n)]
    phi = [0] * len(PAIRS)
    for idx, (j, k) in enumerate(PAIRS):
        q1, q2 = D1.q[idx], D2.q[idx]
        # H.F and E_j.F, E_k.F land on f_jk
        phi[idx] += D1.m * q2 + q1 * D2.m
        for i in (j, k):
            phi[idx] += D1.n[i - 1] * q2 + q1 * D2.n[i - 1]
        # F.F = -s - f = -h + e_j + e_k - 2 f
        qq = q1 * q2
        if qq:
            d -= qq
            c[j - 1] += qq
            c[k - 1] += qq
            phi[idx] -= 2 * qq
    return CurveClassXhat(d, tuple(c), tuple(phi))


def intersect_div_curve_Xhat(D: DivisorClassXhat, c: CurveClassXhat) -> int:
    return (
        D.m * c.d
        - sum(x * y for x, y in zip(D.n, c.c))
        - sum(x * y for x, y in zip(D.q, c.phi))
    )


def lift_to_Xhat(c: CurveClassX) -> CurveClassXhat:
    return CurveClassXhat(c.d, c.c)


def pushforward_to_X(c: CurveClassXhat) -> CurveClassX:
    """Push forward along the blowdown X-hat -> X; fibers f_jk contract."""
    return CurveClassX(c.d, c.c)

