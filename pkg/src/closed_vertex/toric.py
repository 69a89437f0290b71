"""Torus-invariant curves of X and an exhaustive decomposition search over them.

X is built torically: blow up P^3 at three torus-fixed points x_1, x_2, x_3,
then at the points x_i' where the coordinate lines x_0 x_i meet the new
exceptional divisors.  The torus-invariant curves form a trivalent graph with
16 fixed points and 24 edges, stored in ``data/invariant_curves.json``.
Curve classes use the basis {h, e_1, e_2, e_3, e_1', e_2', e_3'}.

A stable map fixed by the torus has image a connected union of these edges,
so its class is a connected non-negative combination of edge classes.
:func:`verify_vertex_support` checks, by exhaustion, that the only such
combination in the class sum d_i (h - e_i - e_i') is d_1 C_1 + d_2 C_2 + d_3 C_3.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from functools import cache, cached_property
from importlib import resources

from .lattice import CurveClassX

# coordinate order of ToricCurveClass.coeffs
BASIS = ("h", "e1", "e2", "e3", "e1'", "e2'", "e3'")


@dataclass(frozen=True, order=True)
class ToricCurveClass:
    coeffs: tuple[int, ...]

    def __post_init__(self):
        coeffs = tuple(int(x) for x in self.coeffs)
        if len(coeffs) != 7:
            raise ValueError("a toric curve class has 7 coefficients")
        object.__setattr__(self, "coeffs", coeffs)

    @classmethod
    def make(cls, h=0, e=(0, 0, 0), ep=(0, 0, 0)) -> ToricCurveClass:
        return cls((h, *e, *ep))

    @classmethod
    def vertex(cls, d1: int, d2: int, d3: int) -> ToricCurveClass:
        """sum_i d_i (h - e_i - e_i')."""
        return cls.make(d1 + d2 + d3, (-d1, -d2, -d3), (-d1, -d2, -d3))

    @property
    def h(self) -> int:
        return self.coeffs[0]

    @property
    def e(self) -> tuple[int, int, int]:
        return self.coeffs[1:4]

    @property
    def ep(self) -> tuple[int, int, int]:
        return self.coeffs[4:7]

    def __add__(self, other: ToricCurveClass) -> ToricCurveClass:
        return ToricCurveClass(tuple(x + y for x, y in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: ToricCurveClass) -> ToricCurveClass:
        return ToricCurveClass(tuple(x - y for x, y in zip(self.coeffs, other.coeffs)))

    def __rmul__(self, k: int) -> ToricCurveClass:
        return ToricCurveClass(tuple(k * x for x in self.coeffs))

    def to_curve_class_x(self) -> CurveClassX:
        # e_i -> e_{2i-1}, e_i' -> e_{2i}
        c = [0] * 6
        for i in range(3):
            c[2 * i] = self.e[i]
            c[2 * i + 1] = self.ep[i]
        return CurveClassX(self.h, tuple(c))

    def label(self) -> str:
        parts = []
        for name, k in zip(BASIS, self.coeffs):
            if k == 0:
                continue
            sign = "-" if k < 0 else "+"
            mag = "" if abs(k) == 1 else str(abs(k))
            parts.append(f"{sign}{mag}{name}")
        if not parts:
            return "0"
        s = "".join(parts)
        return s[1:] if s[0] == "+" else s

    def to_json(self) -> dict:
        return {"h": self.h, "e": list(self.e), "ep": list(self.ep)}

    @classmethod
    def from_json(cls, obj: dict) -> ToricCurveClass:
        return cls.make(int(obj.get("h", 0)), tuple(obj.get("e", (0, 0, 0))), tuple(obj.get("ep", (0, 0, 0))))


@dataclass(frozen=True)
class Edge:
    index: int
    ends: tuple[str, str]
    cls: ToricCurveClass
    label: str = ""


@dataclass(frozen=True)
class ToricGraph:
    vertices: tuple[str, ...]
    edges: tuple[Edge, ...]
    central: tuple[int, int, int] = field(default=(0, 1, 2))

    @cached_property
    def central_vertex(self) -> str:
        ends = [set(self.edges[i].ends) for i in self.central]
        common = ends[0] & ends[1] & ends[2]
        if len(common) != 1:
            raise ValueError("C_1, C_2, C_3 do not share a single vertex")
        return common.pop()

    def degree(self, v: str) -> int:
        return sum(e.ends.count(v) for e in self.edges)

    def components(self, edge_indices) -> list[frozenset[int]]:
        """Connected components (as edge-index sets) of the subgraph on ``edge_indices``."""
        parent: dict[str, str] = {}

        def find(x):
            while parent.setdefault(x, x) != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        idx = list(edge_indices)
        for i in idx:
            a, b = self.edges[i].ends
            ra, rb = find(a), find(b)
            if ra != rb:
                parent[ra] = rb
        groups: dict[str, set[int]] = {}
        for i in idx:
            groups.setdefault(find(self.edges[i].ends[0]), set()).add(i)
        return sorted((frozenset(g) for g in groups.values()), key=min)

    def is_connected(self, edge_indices) -> bool:
        return len(self.components(edge_indices)) <= 1

    def to_json(self) -> dict:
        return {
            "vertices": list(self.vertices),
            "edges": [
                {"ends": list(e.ends), "class": e.cls.to_json(), "label": e.label}
                for e in self.edges
            ],
        }


def load_graph(path=None) -> ToricGraph:
    if path is None:
        text = resources.files("closed_vertex").joinpath("data/invariant_curves.json").read_text()
    else:
        with open(path) as fh:
            text = fh.read()
    data = json.loads(text)
    vertices = tuple(v["id"] if isinstance(v, dict) else v for v in data["vertices"])
    edges = []
    for i, e in enumerate(data["edges"]):
        a, b = e["ends"]
        if a not in vertices or b not in vertices:
            raise ValueError(f"edge {i} has an unknown endpoint")
        edges.append(Edge(i, (a, b), ToricCurveClass.from_json(e["class"]), e.get("label", "")))
    central = []
    for name in ("C1", "C2", "C3"):
        hits = [i for i, e in enumerate(edges) if e.label == name]
        if len(hits) != 1:
            raise ValueError(f"graph data must label exactly one edge {name}")
        central.append(hits[0])
    central = tuple(central)
    return ToricGraph(vertices, tuple(edges), central)


@cache
def invariant_curve_graph() -> ToricGraph:
    """The packaged graph of torus-invariant curves, loaded once."""
    return load_graph()


# -- decompositions ----------------------------------------------------------


@dataclass(frozen=True, order=True)
class Decomposition:
    """Edge multiplicities, as a sorted tuple of (edge index, multiplicity > 0)."""

    items: tuple[tuple[int, int], ...]

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(i for i, _ in self.items)

    def as_dict(self) -> dict[int, int]:
        return dict(self.items)

    def total(self, graph: ToricGraph) -> ToricCurveClass:
        out = ToricCurveClass((0,) * 7)
        for i, k in self.items:
            out = out + k * graph.edges[i].cls
        return out

    def to_json(self, graph: ToricGraph) -> list:
        return [
            {
                "edge": i,
                "ends": list(graph.edges[i].ends),
                "class": graph.edges[i].cls.label(),
                "multiplicity": k,
            }
            for i, k in self.items
        ]


def _positive_weight(cls: ToricCurveClass) -> int:
    # 2*[e_i] + [e_i'] is positive on e_i, e_i', e_i - e_i'
    return sum(2 * x for x in cls.e) + sum(cls.ep)


def _compositions(total: int, parts: int):
    """All tuples of ``parts`` non-negative ints summing to ``total``."""
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first, *rest)


def enumerate_decompositions(
    graph: ToricGraph, target: ToricCurveClass, connected_only: bool = False
) -> list[Decomposition]:
    """Every way of writing ``target`` as a non-negative combination of edges.

    Edges carrying h are assigned first (their h-coefficients must add up to
    the h-degree of the target).  The remaining edges have h-coefficient 0 and
    are all positive under the weight 2*sum(e) + sum(e'), which bounds their
    total multiplicity by the weight of what is left; so the search is finite
    and exhaustive with no artificial caps.  Results are sorted.
    """
    d = target.h
    if d < 0:
        raise ValueError("target must have non-negative h coefficient")

    h_edges = [e for e in graph.edges if e.cls.h > 0]
    rest = [e for e in graph.edges if e.cls.h == 0]
    if any(e.cls.h < 0 for e in graph.edges):
        raise ValueError("edges with negative h coefficient are not supported")
    if any(_positive_weight(e.cls) <= 0 for e in rest):
        raise ValueError("an h-free edge class is not positive under the search weight")

    # h-free edges grouped by class; a class multiplicity is later spread over its parallel edges
    groups: dict[ToricCurveClass, list[int]] = {}
    for e in rest:
        groups.setdefault(e.cls, []).append(e.index)
    classes = sorted(groups, key=lambda c: tuple(i for i in range(1, 7) if c.coeffs[i]))
    weights = [_positive_weight(c) for c in classes]
    last_touch = {}
    for pos, c in enumerate(classes):
        for coord in range(1, 7):
            if c.coeffs[coord]:
                last_touch[coord] = pos
    # coordinates that no h-free class can change must already match
    frozen = [coord for coord in range(1, 7) if coord not in last_touch]
    nonneg = [coord for coord in range(1, 7)
              if coord in last_touch and all(c.coeffs[coord] >= 0 for c in classes)]
    closes_at: dict[int, list[int]] = {}
    for coord, pos in last_touch.items():
        closes_at.setdefault(pos, []).append(coord)

    def class_solutions(residual: list[int]):
        out = []
        mult = [0] * len(classes)

        def rec(pos: int, res: list[int], budget: int):
            if pos == len(classes):
                if not any(res[1:]):
                    out.append(tuple(mult))
                return
            c = classes[pos].coeffs
            for k in range(budget // weights[pos] + 1):
                nres = [r - k * x for r, x in zip(res, c)] if k else res
                if any(nres[coord] for coord in closes_at.get(pos, ())):
                    continue
                mult[pos] = k
                rec(pos + 1, nres, budget - k * weights[pos])
            mult[pos] = 0

        rec(0, residual, _positive_weight(ToricCurveClass(tuple(residual))))
        return out

    results: list[Decomposition] = []
    for h_mult in _h_assignments(h_edges, d):
        residual = list(target.coeffs)
        for e, k in zip(h_edges, h_mult):
            if k:
                residual = [r - k * x for r, x in zip(residual, e.cls.coeffs)]
        if residual[0] != 0 or any(residual[c] for c in frozen):
            continue
        if any(residual[c] < 0 for c in nonneg):
            continue
        if _positive_weight(ToricCurveClass(tuple(residual))) < 0:
            continue
        base = [(e.index, k) for e, k in zip(h_edges, h_mult) if k]
        for sol in class_solutions(residual):
            per_class = []
            for c, k in zip(classes, sol):
                idxs = groups[c]
                per_class.append([list(zip(idxs, comp)) for comp in _compositions(k, len(idxs))])
            for combo in itertools.product(*per_class):
                items = base + [(i, k) for part in combo for i, k in part if k]
                dec = Decomposition(tuple(sorted(items)))
                if connected_only and not graph.is_connected(dec.support):
                    continue
                results.append(dec)
    results.sort()
    return results


def _h_assignments(h_edges: list[Edge], d: int):
    """Multiplicities on h-carrying edges whose h-coefficients sum to d."""
    hs = [e.cls.h for e in h_edges]

    def rec(pos: int, remaining: int):
        if pos == len(hs):
            if remaining == 0:
                yield ()
            return
        for k in range(remaining // hs[pos] + 1):
            for tail in rec(pos + 1, remaining - k * hs[pos]):
                yield (k, *tail)

    yield from rec(0, d)


@dataclass(frozen=True)
class VertexSupportCertificate:
    degrees: tuple[int, int, int]
    verified: bool
    connected: tuple[Decomposition, ...]
    total_found: int  # all decompositions, connected or not

    def to_json(self, graph: ToricGraph, with_list: bool = True) -> dict:
        out = {
            "degrees": list(self.degrees),
            "verified": self.verified,
            "connected_decompositions": len(self.connected),
            "all_decompositions": self.total_found,
        }
        if with_list:
            out["decompositions"] = [dec.to_json(graph) for dec in self.connected]
        return out


def verify_vertex_support(d1: int, d2: int, d3: int, graph: ToricGraph | None = None):
    """Check that d_1 C_1 + d_2 C_2 + d_3 C_3 is the only connected decomposition.

    Returns ``(verified, certificate)``.
    """
    if min(d1, d2, d3) < 1:
        raise ValueError("all degrees must be positive")
    graph = graph or invariant_curve_graph()
    target = ToricCurveClass.vertex(d1, d2, d3)
    everything = enumerate_decompositions(graph, target)
    connected = [dec for dec in everything if graph.is_connected(dec.support)]
    expected = Decomposition(tuple(sorted(zip(graph.central, (d1, d2, d3)))))
    verified = connected == [expected]
    cert = VertexSupportCertificate((d1, d2, d3), verified, tuple(connected), len(everything))
    return verified, cert
