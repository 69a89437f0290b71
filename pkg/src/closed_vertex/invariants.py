"""Local Gromov-Witten invariants N^g_{d1,d2,d3} of the closed topological vertex.

The vertex invariant equals an ordinary invariant of X (P^3 blown up at six
points) in the class

    beta = (d1+d2+d3) h - d1 (e_1+e_2) - d2 (e_3+e_4) - d3 (e_5+e_6)

with d1 >= d2 >= d3 > 0.  Applying the Cremona involution either produces a
class with a negative exceptional coefficient (the invariant vanishes) or
the class d(h - e_5 - e_6), whose invariant is the degree-d contribution of
a rigid (-1,-1) curve:

    N^g_d = |B_2g * (2g - 1)| / (2g)! * d^(2g - 3)
"""

from __future__ import annotations

import threading
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial

from .cremona import cremona_on_X
from .lattice import CurveClassX


class InvalidDegrees(ValueError):
    pass


# -- Bernoulli numbers -----------------------------------------------------

_bernoulli_cache: list[Fraction] = [Fraction(1)]
_bernoulli_lock = threading.Lock()


def bernoulli(n: int) -> Fraction:
    """B_n from sum_{j<=m} C(m+1, j) B_j = 0, B_0 = 1 (so B_1 = -1/2)."""
    if n < 0:
        raise ValueError("Bernoulli index must be non-negative")
    with _bernoulli_lock:
        B = _bernoulli_cache
        for m in range(len(B), n + 1):
            if m > 1 and m % 2:
                B.append(Fraction(0))
                continue
            s = sum(comb(m + 1, j) * B[j] for j in range(m))
            B.append(-s / (m + 1))
        return B[n]


def fp_invariant(g: int, d: int) -> Fraction:
    """Genus g, degree d multiple-cover contribution of a (-1,-1) rational curve."""
    if g < 0:
        raise ValueError("genus must be non-negative")
    if d < 1:
        raise InvalidDegrees(f"degree must be positive, got {d}")
    coeff = abs(bernoulli(2 * g) * (2 * g - 1)) / factorial(2 * g)
    return coeff * Fraction(d) ** (2 * g - 3)


# -- the reduction ---------------------------------------------------------


@dataclass(frozen=True)
class VertexDegrees:
    g: int
    d1: int
    d2: int
    d3: int

    def __post_init__(self):
        if self.g < 0:
            raise InvalidDegrees("genus must be non-negative")
        if min(self.d1, self.d2, self.d3) < 0:
            raise InvalidDegrees("degrees must be non-negative")
        if self.d1 == self.d2 == self.d3 == 0:
            raise InvalidDegrees("degrees must not all be zero")

    def sorted(self) -> tuple[int, int, int]:
        a, b, c = sorted((self.d1, self.d2, self.d3), reverse=True)
        return a, b, c


def build_vertex_class(d1: int, d2: int, d3: int) -> CurveClassX:
    """The class sum_i d_i (h - e_{2i-1} - e_{2i}); degrees are sorted first."""
    if min(d1, d2, d3) < 0:
        raise InvalidDegrees("degrees must be non-negative")
    if d1 == d2 == d3 == 0:
        raise InvalidDegrees("degrees must not all be zero")
    d1, d2, d3 = sorted((d1, d2, d3), reverse=True)
    return CurveClassX.from_a(d1 + d2 + d3, (d1, d1, d2, d2, d3, d3))


def vanishing_witness(c: CurveClassX) -> int | None:
    """Smallest 1-based i with a_i < 0, which forces the invariant to vanish."""
    for i, a in enumerate(c.a, start=1):
        if a < 0:
            return i
    return None


# Route labels recorded in the trace.
ROUTE_CREMONA = "cremona"
ROUTE_SINGLE_CURVE = "single_curve"  # d2 = d3 = 0
ROUTE_TWO_CURVE = "two_curve"  # d1 = d2, d3 = 0


@dataclass(frozen=True)
class ReductionTrace:
    route: str
    initial: CurveClassX
    transformed: CurveClassX | None = None
    witness: int | None = None
    reduced_degree: int | None = None
    # a_5 or a_6 nonzero, the hypothesis under which the Cremona step
    # preserves the invariant
    cremona_hypothesis: bool | None = None

    def to_json(self) -> dict:
        return {
            "route": self.route,
            "initial": self.initial.to_json(),
            "transformed": None if self.transformed is None else self.transformed.to_json(),
            "witness": self.witness,
            "reduced_degree": self.reduced_degree,
            "cremona_hypothesis": self.cremona_hypothesis,
        }


@dataclass(frozen=True)
class InvariantResult:
    degrees: VertexDegrees
    value: Fraction
    trace: ReductionTrace

    def to_json(self, with_trace: bool = True) -> dict:
        out = {
            "g": self.degrees.g,
            "d": [self.degrees.d1, self.degrees.d2, self.degrees.d3],
            "value": rational_to_json(self.value),
        }
        if with_trace:
            out["trace"] = self.trace.to_json()
        return out


def closed_vertex_invariant(v: VertexDegrees) -> InvariantResult:
    d1, d2, d3 = v.sorted()
    beta = build_vertex_class(d1, d2, d3)
    if d2 == 0:
        trace = ReductionTrace(ROUTE_SINGLE_CURVE, beta, reduced_degree=d1)
        return InvariantResult(v, fp_invariant(v.g, d1), trace)
    if d3 == 0 and d1 == d2:
        trace = ReductionTrace(ROUTE_TWO_CURVE, beta, reduced_degree=d1)
        return InvariantResult(v, fp_invariant(v.g, d1), trace)

    beta_prime = cremona_on_X(beta)
    hypothesis = beta.c[4] != 0 or beta.c[5] != 0
    witness = vanishing_witness(beta_prime)
    if witness is not None:
        trace = ReductionTrace(ROUTE_CREMONA, beta, beta_prime, witness=witness,
                               cremona_hypothesis=hypothesis)
        return InvariantResult(v, Fraction(0), trace)

    d = beta_prime.d
    if beta_prime != d * CurveClassX.from_a(1, (0, 0, 0, 0, 1, 1)) or d < 1:
        raise RuntimeError(f"unexpected reduced class {beta_prime}")
    trace = ReductionTrace(ROUTE_CREMONA, beta, beta_prime, reduced_degree=d,
                           cremona_hypothesis=hypothesis)
    return InvariantResult(v, fp_invariant(v.g, d), trace)


def invariant(g: int, d1: int, d2: int, d3: int) -> Fraction:
    return closed_vertex_invariant(VertexDegrees(g, d1, d2, d3)).value


def table_degrees(g_max: int, d_max: int) -> list[VertexDegrees]:
    """All (g, d1 >= d2 >= d3) with g <= g_max, d1 <= d_max, in lexicographic order."""
    if g_max < 0 or d_max < 0:
        raise ValueError("table bounds must be non-negative")
    rows = []
    for g in range(g_max + 1):
        for d1 in range(1, d_max + 1):
            for d2 in range(d1 + 1):
                for d3 in range(d2 + 1):
                    rows.append(VertexDegrees(g, d1, d2, d3))
    return rows


def invariant_table(g_max: int, d_max: int, workers: int = 1) -> list[InvariantResult]:
    """Evaluate every row of :func:`table_degrees`.

    Output order does not depend on ``workers``.  Cost is dominated by the
    Bernoulli numbers, whose numerators grow roughly like (2g)! in size.
    """
    degrees = table_degrees(g_max, d_max)
    # warm the cache once so workers only read it
    bernoulli(2 * g_max)
    if workers <= 1:
        return [closed_vertex_invariant(v) for v in degrees]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(closed_vertex_invariant, degrees))


def rational_to_json(x: Fraction) -> dict:
    return {"num": str(x.numerator), "den": str(x.denominator)}


def rational_from_json(obj: dict) -> Fraction:
    return Fraction(int(obj["num"]), int(obj["den"]))
