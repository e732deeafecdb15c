"""Invariant suite run over the census corpus.

``check_graph`` returns human-readable violations for one member of
``S^g(n, m)``; ``verify`` walks every member of the census grid and adds
the table-level checks (edge bound, monotonicity in ``g``, planar totals).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable, Iterable

from .census import build_census, isomorphism_classes, iter_graphs
from .graph import LabeledGraph, component_sets, from_canonical_code, make_graph
from .statistics import (
    addable_nonedges,
    appearances,
    cut_edge_count,
    good_triangle_floor,
    good_triangles,
    intersection_cap,
    non_multicyclic_mass,
    pendant_copies,
    pendant_stats,
    triangulated_appearances_of_order,
)

APPINTER_MAX_ORDER = 4
K1 = make_graph(1, [])


def connected_patterns(max_order: int = APPINTER_MAX_ORDER) -> list[LabeledGraph]:
    """One representative per connected unlabeled graph on 1..max_order vertices."""
    out = []
    for k in range(1, max_order + 1):
        for m in range(k - 1, k * (k - 1) // 2 + 1):
            for code in isomorphism_classes(k, m):
                H = from_canonical_code(code)
                if H.is_connected():
                    out.append(H)
    return out


def check_appinter(G: LabeledGraph, patterns: Iterable[LabeledGraph]) -> list[str]:
    """Each pendant copy of ``H`` meets at most ``|H| - 1`` other pendant copies."""
    bad = []
    for H in patterns:
        if H.n >= G.n:
            continue
        copies = pendant_copies(H, G)
        for W in copies:
            meets = sum(1 for X in copies if X != W and X & W)
            if meets > H.n - 1:
                bad.append(f"appinter: copy {sorted(W)} of order {H.n} meets {meets} others")
    return bad


def check_intersections(G: LabeledGraph) -> list[str]:
    """Each order-t triangulated appearance shares total edges with at most
    ``C(t+3, 3)`` others of the same order."""
    bad = []
    for t in range(3, G.n - 2):
        apps = triangulated_appearances_of_order(t, G)
        for a in apps:
            hits = sum(1 for b in apps if b is not a and a.total_edge_set & b.total_edge_set)
            if hits > intersection_cap(t):
                bad.append(f"intersections: W={sorted(a.W)} meets {hits} > {intersection_cap(t)}")
    return bad


def check_graph(G: LabeledGraph, g: int, patterns: Iterable[LabeledGraph] = (),
                addable: bool = True) -> list[str]:
    """Violations of the statistics invariants for ``G`` with genus at most ``g``."""
    n, m = G.n, G.m
    bad: list[str] = []
    pv, pe = pendant_stats(G)
    if n >= 2 and len(appearances(K1, G)) != pv:
        bad.append(f"K1 appearances {len(appearances(K1, G))} != pendant vertices {pv}")
    k2 = sum(1 for c in component_sets(G) if len(c) == 2)
    if pv != pe + k2:
        bad.append(f"pendant vertices {pv} != pendant edges {pe} + single-edge components {k2}")
    if n >= 3 and m > 3 * n - 6 + 6 * g:
        bad.append(f"edge bound: m={m} > 3n-6+6g")
    c = cut_edge_count(G)
    if not 2 * c < 3 * n - m + 6 * g:
        bad.append(f"cut edges {c} not below (3n-m+6g)/2")
    if n >= 3 and G.is_connected():
        floor = good_triangle_floor(n, m, g)
        if floor > 0 and good_triangles(G) < floor:
            bad.append(f"good triangles {good_triangles(G)} below {floor}")
    vs, es = non_multicyclic_mass(G)
    if not (0 <= es <= vs <= n):
        bad.append(f"non-multicyclic mass ({vs}, {es}) out of range")
    bad += check_appinter(G, patterns)
    bad += check_intersections(G)
    if addable:
        comps = component_sets(G)
        cross = {(min(u, v), max(u, v)) for a, b in combinations(comps, 2) for u in a for v in b}
        missing = cross - set(addable_nonedges(G, g))
        if missing:
            bad.append(f"addable non-edges miss cross-component pairs {sorted(missing)[:3]}")
    return bad


@dataclass
class VerifyReport:
    graphs_checked: int = 0
    violations: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


def verify(max_n: int = 6, max_g: int = 1, addable_max_n: int = 6,
           progress: Callable[[str], None] | None = None) -> VerifyReport:
    """Run every invariant over the census grid ``n <= max_n``, ``g <= max_g``."""
    report = VerifyReport()
    patterns = connected_patterns()
    for n in range(1, max_n + 1):
        for g in range(max_g + 1):
            for m in range(n * (n - 1) // 2 + 1):
                for G in iter_graphs(n, m, g):
                    report.graphs_checked += 1
                    for msg in check_graph(G, g, patterns, addable=n <= addable_max_n):
                        report.violations.append(f"n={n} m={m} g={g} {G.edges}: {msg}")
        if progress:
            progress(f"n={n} done, {report.graphs_checked} graphs checked")
    report.violations += table_violations(max_n, max_g)
    return report


PLANAR_TOTALS = {1: 1, 2: 2, 3: 8, 4: 64, 5: 1023, 6: 32071}


def table_violations(max_n: int, max_g: int) -> list[str]:
    """Edge-bound emptiness in both directions, monotonicity in ``g`` and the
    labeled planar totals."""
    bad = []
    table = build_census(range(1, max_n + 1), range(max_g + 1))
    for (n, m, g), count in sorted(table.counts.items()):
        empty = n >= 3 and m > 3 * n - 6 + 6 * g
        if (count == 0) != empty:
            bad.append(f"edge bound: count({n},{m},{g})={count}")
        if count > math.comb(n * (n - 1) // 2, m):
            bad.append(f"count({n},{m},{g}) exceeds C(C(n,2),m)")
        if g > 0 and count < table.counts[(n, m, g - 1)]:
            bad.append(f"count({n},{m},{g}) below genus {g - 1}")
    for n in range(1, max_n + 1):
        total = sum(table.counts[(n, m, 0)] for m in range(n * (n - 1) // 2 + 1))
        if n in PLANAR_TOTALS and total != PLANAR_TOTALS[n]:
            bad.append(f"planar total for n={n} is {total}, expected {PLANAR_TOTALS[n]}")
    return bad
