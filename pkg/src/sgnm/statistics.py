"""Structural observables of a graph drawn from the surface model.

Pendant objects, appearances and triangulated appearances, g-addable
non-edges, good triangles, cut edges and the mass held by non-multicyclic
components. :class:`StatReport` bundles them for CSV/JSON export.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from itertools import combinations
from math import comb
from typing import Callable, Sequence

from .embedding import is_genus_at_most, max_face_size
from .errors import BudgetError, PreconditionError
from .graph import (
    Edge,
    LabeledGraph,
    block_decomposition,
    component_sets,
    components,
    components_isomorphic_to,
    has_copy,
    is_isomorphic,
    pattern_from_name,
    to_graph6,
)

EXACT_MIS_CAP = 24


@dataclass(frozen=True)
class Appearance:
    W: frozenset[int]
    root: int
    connecting_edge: Edge


@dataclass(frozen=True)
class TriangulatedAppearance:
    W: frozenset[int]
    boundary: tuple[int, int, int]
    anchors: tuple[int, int, int]
    total_edge_set: frozenset[Edge]
    rooted: bool


def pendant_stats(G: LabeledGraph) -> tuple[int, int]:
    """``(pendant vertices, pendant edges)``; an isolated edge has two
    pendant vertices but is one pendant edge."""
    deg = G.degrees
    pv = sum(1 for v in G.vertices() if deg[v] == 1)
    pe = sum(1 for u, v in G.edges if deg[u] == 1 or deg[v] == 1)
    return pv, pe


def max_degree(G: LabeledGraph) -> int:
    return max(G.degrees[1:], default=0)


def cut_edge_count(G: LabeledGraph) -> int:
    return len(block_decomposition(G).cut_edges)


def _bridge_sides(G: LabeledGraph):
    """Yield ``(side vertex set, endpoint inside, bridge)`` for both sides of every bridge."""
    comp_of = {}
    for c in component_sets(G):
        for v in c:
            comp_of[v] = c
    for u, v in block_decomposition(G).cut_edges:
        seen = {u}
        stack = [u]
        while stack:
            x = stack.pop()
            for y in G.adj[x]:
                if y not in seen and not (x == u and y == v):
                    seen.add(y)
                    stack.append(y)
        side_u = frozenset(seen)
        yield side_u, u, (u, v)
        yield comp_of[u] - side_u, v, (u, v)


def appearances(H: LabeledGraph, G: LabeledGraph) -> list[Appearance]:
    """All ``W`` at which ``H`` appears in ``G``.

    ``H`` appears at ``W`` when the increasing bijection ``[|H|] -> W`` is an
    isomorphism onto ``G[W]`` and the only edge leaving ``W`` hangs off
    ``min(W)``. Such a ``W`` is one side of a bridge, which is how they are
    found.
    """
    if H.n >= G.n:
        raise PreconditionError(f"pattern order {H.n} must be below n={G.n}")
    if not H.is_connected():
        raise PreconditionError("pattern must be connected")
    out = []
    for side, inner, bridge in _bridge_sides(G):
        if len(side) != H.n or min(side) != inner:
            continue
        if G.induced(side) == H:
            out.append(Appearance(side, inner, bridge))
    return sorted(out, key=lambda a: sorted(a.W))


def pendant_copies(H: LabeledGraph, G: LabeledGraph) -> list[frozenset[int]]:
    """Vertex sets of induced copies of connected ``H`` joined to the rest by one edge."""
    if not H.is_connected():
        raise PreconditionError("pattern must be connected")
    out = set()
    for side, _, _ in _bridge_sides(G):
        if len(side) == H.n:
            sub = G.induced(side)
            if sub.m == H.m and is_isomorphic(sub, H):
                out.add(side)
    return sorted(out, key=sorted)


def _max_independent(conflicts: list[set[int]]) -> int:
    """Exact maximum independent set size on a small conflict graph."""
    k = len(conflicts)
    nbr = [0] * k
    for i, cs in enumerate(conflicts):
        for j in cs:
            nbr[i] |= 1 << j
    best = 0

    def rec(cand: int, size: int):
        nonlocal best
        if size + bin(cand).count("1") <= best:
            return
        if not cand:
            best = size
            return
        i = (cand & -cand).bit_length() - 1
        rec(cand & ~nbr[i] & ~(1 << i), size + 1)
        if nbr[i] & cand:
            rec(cand & ~(1 << i), size)

    rec((1 << k) - 1, 0)
    return best


def _greedy_independent(conflicts: list[set[int]]) -> int:
    left = set(range(len(conflicts)))
    size = 0
    while left:
        i = min(left, key=lambda x: (len(conflicts[x] & left), x))
        size += 1
        left -= conflicts[i] | {i}
    return size


def _max_disjoint(items: Sequence, overlap: Callable) -> int:
    k = len(items)
    conflicts = [set() for _ in range(k)]
    for i, j in combinations(range(k), 2):
        if overlap(items[i], items[j]):
            conflicts[i].add(j)
            conflicts[j].add(i)
    if k > EXACT_MIS_CAP:
        greedy = _greedy_independent(conflicts)
        raise BudgetError(f"conflict graph has {k} nodes; exact cap is {EXACT_MIS_CAP}",
                          lower=greedy)
    return _max_independent(conflicts)


def max_vertex_disjoint_appearances(H: LabeledGraph, G: LabeledGraph) -> int:
    apps = appearances(H, G)
    return _max_disjoint(apps, lambda a, b: bool(a.W & b.W))


def _triangles(G: LabeledGraph) -> list[tuple[int, int, int]]:
    adj = G.adj
    out = []
    for u, v in G.edges:
        for w in adj[u] & adj[v]:
            if w > v:
                out.append((u, v, w))
    return out


def _tri_appearances_all(G: LabeledGraph, order: int | None = None) -> list[TriangulatedAppearance]:
    """Every ``W`` (optionally of fixed order) with connected ``G[W]`` attached
    to an outside triangle by exactly the alternating hexagon of six edges."""
    adj = G.adj
    found: dict[frozenset[int], TriangulatedAppearance] = {}
    for tri in _triangles(G):
        cut = set(tri)
        seen = set(cut)
        for s in G.vertices():
            if s in seen:
                continue
            comp = {s}
            stack = [s]
            seen.add(s)
            while stack:
                x = stack.pop()
                for y in adj[x]:
                    if y not in seen:
                        seen.add(y)
                        comp.add(y)
                        stack.append(y)
            if len(comp) < 3 or (order is not None and len(comp) != order):
                continue
            W = frozenset(comp)
            if W in found:
                continue
            app = _hexagon(G, W, tri)
            if app is not None:
                found[W] = app
    return sorted(found.values(), key=lambda a: sorted(a.W))


def _hexagon(G: LabeledGraph, W: frozenset[int], tri: tuple[int, int, int]) -> TriangulatedAppearance | None:
    adj = G.adj
    leaving = [(r, v) for r in W for v in adj[r] if v not in W]
    if len(leaving) != 6:
        return None
    rs: dict[int, list[int]] = {}
    vs: dict[int, list[int]] = {}
    for r, v in leaving:
        rs.setdefault(r, []).append(v)
        vs.setdefault(v, []).append(r)
    if len(rs) != 3 or len(vs) != 3 or set(vs) != set(tri):
        return None
    if any(len(x) != 2 for x in rs.values()) or any(len(x) != 2 for x in vs.values()):
        return None
    # a 2-regular bipartite graph on 3+3 vertices is the 6-cycle; walk it
    r = min(rs)
    boundary, anchors = [r], []
    prev_v = None
    for i in range(3):
        v = min(x for x in rs[r] if x != prev_v)
        anchors.append(v)
        r = next(x for x in vs[v] if x != r)
        if i < 2:
            boundary.append(r)
        prev_v = v
    internal = [(u, w) for u, w in G.edges if u in W and w in W]
    total = frozenset(internal + [(min(r, v), max(r, v)) for r, v in leaving])
    rooted = set(boundary) == set(sorted(W)[:3])
    return TriangulatedAppearance(W, tuple(boundary), tuple(anchors), total, rooted)


def triangulated_appearances(T: LabeledGraph, G: LabeledGraph,
                             rooted_only: bool = False) -> list[TriangulatedAppearance]:
    """All triangulated appearances of connected ``T`` (increasing bijection)."""
    if not T.is_connected():
        raise PreconditionError("pattern must be connected")
    if T.n < 3:
        return []
    out = [a for a in _tri_appearances_all(G, T.n) if G.induced(a.W) == T]
    if rooted_only:
        out = [a for a in out if a.rooted]
    return out


def triangulated_appearances_of_order(t: int, G: LabeledGraph) -> list[TriangulatedAppearance]:
    """Triangulated appearances of every connected order-``t`` pattern."""
    return _tri_appearances_all(G, t)


def max_totally_edge_disjoint_tri_appearances(T: LabeledGraph, G: LabeledGraph) -> int:
    apps = triangulated_appearances(T, G)
    return _max_disjoint(apps, lambda a, b: bool(a.total_edge_set & b.total_edge_set))


def addable_nonedges(G: LabeledGraph, g: int, budget: int | None = None) -> list[Edge]:
    """Non-edges whose insertion keeps the genus at most ``g``."""
    if not is_genus_at_most(G, g, budget):
        raise PreconditionError(f"graph has genus greater than {g}")
    comp_of = {}
    for i, c in enumerate(component_sets(G)):
        for v in c:
            comp_of[v] = i
    out = []
    for u, v in G.non_edges():
        if comp_of[u] != comp_of[v] or is_genus_at_most(G.add_edge(u, v), g, budget):
            out.append((u, v))
    return out


def good_triangles(G: LabeledGraph) -> int:
    """Triangles (of the abstract graph) with a vertex of degree at most 6."""
    deg = G.degrees
    return sum(1 for t in _triangles(G) if min(deg[t[0]], deg[t[1]], deg[t[2]]) <= 6)


def non_multicyclic_mass(G: LabeledGraph) -> tuple[int, int]:
    vs = es = 0
    for c in components(G):
        if c.kind != "multicyclic":
            vs += len(c.vertices)
            es += c.edge_count
    return vs, es


# ---------------------------------------------------------------------------
# Reports

REPORT_FIELDS = (
    "n",
    "m",
    "g",
    "pendantEdges",
    "pendantVertices",
    "maxDegree",
    "goodTriangles",
    "cutEdges",
    "addableNonEdges",
    "nonMulticyclicVertices",
    "nonMulticyclicEdges",
)


@dataclass
class StatReport:
    """Flat record of every observable for one graph.

    Field order for CSV/JSON is :data:`REPORT_FIELDS` followed by one
    ``app:<graph6>`` column per requested appearance pattern.
    """

    n: int
    m: int
    g: int
    pendantEdges: int
    pendantVertices: int
    maxDegree: int
    goodTriangles: int
    cutEdges: int
    addableNonEdges: int
    nonMulticyclicVertices: int
    nonMulticyclicEdges: int
    appearances: dict[str, int] = field(default_factory=dict)

    def as_row(self) -> dict[str, int]:
        row = {k: getattr(self, k) for k in REPORT_FIELDS}
        for code in sorted(self.appearances):
            row[f"app:{code}"] = self.appearances[code]
        return row

    def to_json(self) -> str:
        return json.dumps(self.as_row())

    def to_csv(self, header: bool = True) -> str:
        row = self.as_row()
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        if header:
            w.writerow(row.keys())
        w.writerow(row.values())
        return buf.getvalue()


def stat_report(G: LabeledGraph, g: int, patterns: Sequence[LabeledGraph] = (),
                budget: int | None = None) -> StatReport:
    pv, pe = pendant_stats(G)
    nv, ne = non_multicyclic_mass(G)
    apps = {}
    for H in patterns:
        apps[to_graph6(H)] = len(appearances(H, G)) if H.n < G.n else 0
    return StatReport(
        n=G.n,
        m=G.m,
        g=g,
        pendantEdges=pe,
        pendantVertices=pv,
        maxDegree=max_degree(G),
        goodTriangles=good_triangles(G),
        cutEdges=cut_edge_count(G),
        addableNonEdges=len(addable_nonedges(G, g, budget)),
        nonMulticyclicVertices=nv,
        nonMulticyclicEdges=ne,
        appearances=apps,
    )


# ---------------------------------------------------------------------------
# Named statistics used by the census, samplers and CLI

Statistic = Callable[[LabeledGraph, int], float]

_BASIC: dict[str, Statistic] = {
    "connected": lambda G, g: int(G.is_connected()),
    "maxDegree": lambda G, g: max_degree(G),
    "pendantEdges": lambda G, g: pendant_stats(G)[1],
    "pendantVertices": lambda G, g: pendant_stats(G)[0],
    "goodTriangles": lambda G, g: good_triangles(G),
    "cutEdges": lambda G, g: cut_edge_count(G),
    "addableNonEdges": lambda G, g: len(addable_nonedges(G, g)),
    "nonMulticyclicVertices": lambda G, g: non_multicyclic_mass(G)[0],
    "nonMulticyclicEdges": lambda G, g: non_multicyclic_mass(G)[1],
    "maxFaceSize": lambda G, g: max_face_size(G, g),
    "isolatedVertices": lambda G, g: sum(1 for v in G.vertices() if not G.adj[v]),
    "components": lambda G, g: len(component_sets(G)),
}


def statistic_names() -> list[str]:
    return sorted(_BASIC) + ["copy:<pattern>", "component:<pattern>", "appearances:<pattern>"]


def resolve_statistic(name: str) -> Statistic:
    """Look up a statistic by name.

    Parametric forms take a pattern name (``K4``, ``P3``, ...) or a graph6
    string: ``copy:K4`` is the indicator of a (not necessarily induced)
    copy, ``component:K1`` counts components isomorphic to the pattern and
    ``appearances:K1`` counts appearances.
    """
    if name in _BASIC:
        return _BASIC[name]
    kind, _, arg = name.partition(":")
    if not arg:
        raise KeyError(f"unknown statistic {name!r}; known: {', '.join(statistic_names())}")
    H = pattern_from_name(arg)
    if kind == "copy":
        return lambda G, g: int(has_copy(H, G))
    if kind == "component":
        return lambda G, g: components_isomorphic_to(H, G)
    if kind == "appearances":
        return lambda G, g: len(appearances(H, G)) if H.n < G.n else 0
    raise KeyError(f"unknown statistic {name!r}")


def edge_count_bound_slack(n: int, m: int, g: int) -> int:
    """``3n - 6 + 6g - m``: edges a triangulation of genus ``g`` would add."""
    return 3 * n - 6 + 6 * g - m


def good_triangle_floor(n: int, m: int, g: int) -> int:
    """Lower bound on good triangles from extending to a triangulation."""
    return -(-(n + 12 - 12 * g) // 21) - 2 * edge_count_bound_slack(n, m, g)


def cut_edge_ceiling(n: int, m: int, g: int) -> float:
    """Strict upper bound on cut edges: ``(3n - m + 6g) / 2``."""
    return (3 * n - m + 6 * g) / 2


def intersection_cap(t: int) -> int:
    return comb(t + 3, 3)
