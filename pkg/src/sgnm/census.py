"""Exact censuses of ``S^g(n, m)``: labeled graphs on ``{1..n}`` with ``m``
edges and genus at most ``g``.

Two counting routes are provided. The labeled route walks every ``m``-subset
of the edge slots in lexicographic order; it is what ``enumerate_graphs``,
``probability`` and ``distribution`` use. The class route generates one
representative per isomorphism class and weights it by ``n!/|Aut|``; it
reaches sizes (such as ``n = 8`` near ``m = 1.5 n``) where the labeled walk
is too slow, and the two routes cross-check each other.
"""

from __future__ import annotations

import csv
import io
import json
import math
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from pathlib import Path
from typing import Callable, Iterable

from . import __version__
from .embedding import (
    default_budget,
    genus_lower_bound,
    is_planar,
    min_genus,
)
from .errors import BudgetError, CapabilityError, UndefinedProbabilityError
from .graph import (
    LabeledGraph,
    automorphism_count,
    canonical_code,
    edge_slots,
    from_canonical_code,
    to_graph6,
)
from .statistics import Statistic, resolve_statistic

PLANAR_CAP = 8
HIGHER_GENUS_CAP = 7
CLASS_CAP = 8  # the class route stays fast at n = 8 for every genus
LABELED_WALK_LIMIT = 5_000  # above this the class route is much faster
GAMMA_REFERENCE = 27.23  # labeled planar growth constant, for context only

Visitor = Callable[[LabeledGraph], None]
Predicate = Callable[[LabeledGraph], bool]


def census_cap(g: int) -> int:
    return PLANAR_CAP if g == 0 else HIGHER_GENUS_CAP


def _check_cap(n: int, g: int, cap: int | None) -> None:
    limit = census_cap(g) if cap is None else cap
    if n > limit:
        raise CapabilityError(f"census capped at n={limit} for g={g}, got n={n}")
    if n < 1:
        raise CapabilityError("census needs n >= 1")


class GenusFilter:
    """Membership test ``genus(G) <= g`` with a minimum-genus memo keyed by
    canonical code, so isomorphic graphs are searched once."""

    def __init__(self, budget: int | None = None):
        self.budget = default_budget() if budget is None else budget
        self._memo: dict[bytes, int] = {}
        self.searches = 0

    def genus(self, G: LabeledGraph) -> int:
        if G.n <= 4 or G.m <= 8 or (G.m <= 3 * G.n - 6 and is_planar(G)):
            return 0
        key = canonical_code(G)
        if key not in self._memo:
            self.searches += 1
            try:
                self._memo[key] = min_genus(G, self.budget).genus
            except BudgetError as exc:
                raise BudgetError(f"embedding budget exhausted on graph {to_graph6(G)}",
                                  lower=exc.lower, upper=exc.upper, nodes=exc.nodes) from None
        return self._memo[key]

    def __call__(self, G: LabeledGraph, g: int) -> bool:
        if g == 0:
            return G.n <= 4 or G.m <= 8 or is_planar(G)
        if G.m <= 3 * G.n - 6 and is_planar(G):
            return True
        if genus_lower_bound(G) > g:
            return False
        return self.genus(G) <= g


_shared_filter: GenusFilter | None = None


def _filter(budget: int | None) -> GenusFilter:
    global _shared_filter
    if budget is not None:
        return GenusFilter(budget)
    if _shared_filter is None or _shared_filter.budget != default_budget():
        _shared_filter = GenusFilter()
    return _shared_filter


def _edge_bound_empty(n: int, m: int, g: int) -> bool:
    return n >= 3 and m > 3 * n - 6 + 6 * g


def iter_graphs(n: int, m: int, g: int, cap: int | None = None,
                budget: int | None = None) -> Iterable[LabeledGraph]:
    """Members of ``S^g(n, m)`` in lexicographic edge-set order."""
    _check_cap(n, g, cap)
    slots = edge_slots(n)
    if not 0 <= m <= len(slots) or _edge_bound_empty(n, m, g):
        return
    member = _filter(budget)
    for combo in combinations(slots, m):
        G = LabeledGraph(n, combo)
        if member(G, g):
            yield G


def enumerate_graphs(n: int, m: int, g: int, visitor: Visitor | None = None,
                     cap: int | None = None, budget: int | None = None) -> int:
    """Call ``visitor`` once per member of ``S^g(n, m)`` (lexicographic
    order) and return ``|S^g(n, m)|``."""
    count = 0
    for G in iter_graphs(n, m, g, cap, budget):
        if visitor is not None:
            visitor(G)
        count += 1
    return count


def probability(n: int, m: int, g: int, predicate: Predicate, cap: int | None = None,
                budget: int | None = None) -> Fraction:
    """Exact ``P[predicate(S_g(n, m))]``."""
    hits = total = 0
    for G in iter_graphs(n, m, g, cap, budget):
        total += 1
        hits += bool(predicate(G))
    if total == 0:
        raise UndefinedProbabilityError(f"S^{g}({n},{m}) is empty")
    return Fraction(hits, total)


def _statistic(statistic: str | Statistic) -> Statistic:
    return resolve_statistic(statistic) if isinstance(statistic, str) else statistic


def distribution(n: int, m: int, g: int, statistic: str | Statistic, cap: int | None = None,
                 budget: int | None = None) -> dict[int, int]:
    """Exact histogram ``value -> frequency`` of a statistic over ``S^g(n, m)``."""
    stat = _statistic(statistic)
    hist: Counter[int] = Counter()
    for G in iter_graphs(n, m, g, cap, budget):
        hist[stat(G, g)] += 1
    return dict(sorted(hist.items()))


def expectation(n: int, m: int, g: int, statistic: str | Statistic, cap: int | None = None,
                budget: int | None = None) -> Fraction:
    """Exact mean of a statistic over ``S^g(n, m)``."""
    hist = distribution(n, m, g, statistic, cap, budget)
    total = sum(hist.values())
    if total == 0:
        raise UndefinedProbabilityError(f"S^{g}({n},{m}) is empty")
    return Fraction(sum(v * c for v, c in hist.items()), total)


# ---------------------------------------------------------------------------
# Isomorphism classes


_class_levels: dict[int, list[list[bytes]]] = {}


def isomorphism_classes(n: int, m: int) -> list[bytes]:
    """Canonical codes of all unlabeled graphs with ``n`` vertices and ``m``
    edges, grown level by level by single-edge augmentation."""
    if not 0 <= m <= n * (n - 1) // 2:
        return []
    levels = _class_levels.setdefault(n, [[canonical_code(LabeledGraph(n, ()))]])
    while len(levels) <= m:
        nxt: set[bytes] = set()
        for code in levels[-1]:
            G = from_canonical_code(code)
            present = G.edge_set
            for e in combinations(range(1, n + 1), 2):
                if e not in present:
                    nxt.add(canonical_code(LabeledGraph(n, tuple(sorted(present | {e})))))
        levels.append(sorted(nxt))
    return levels[m]


def labeled_count(G: LabeledGraph) -> int:
    """Number of labeled graphs isomorphic to ``G``."""
    return math.factorial(G.n) // automorphism_count(G)


def count_by_classes(n: int, m: int, g: int, cap: int | None = None,
                     budget: int | None = None) -> int:
    """``|S^g(n, m)|`` as ``sum n!/|Aut|`` over isomorphism classes."""
    _check_cap(n, g, CLASS_CAP if cap is None else cap)
    if _edge_bound_empty(n, m, g):
        return 0
    member = _filter(budget)
    total = 0
    for code in isomorphism_classes(n, m):
        G = from_canonical_code(code)
        if member(G, g):
            total += labeled_count(G)
    return total


def count_graphs(n: int, m: int, g: int, method: str = "auto", cap: int | None = None,
                 budget: int | None = None) -> int:
    """``|S^g(n, m)|`` by the labeled walk or the class route."""
    if method == "auto":
        small = math.comb(n * (n - 1) // 2, m) <= LABELED_WALK_LIMIT
        method = "labeled" if small and n <= census_cap(g) else "classes"
    if method == "labeled":
        return enumerate_graphs(n, m, g, cap=cap, budget=budget)
    if method == "classes":
        return count_by_classes(n, m, g, cap, budget)
    raise ValueError(f"unknown counting method {method!r}")


# ---------------------------------------------------------------------------
# Growth constant


@dataclass(frozen=True)
class GammaEstimate:
    q: float
    n: int
    g: int
    m: int
    count: int
    value: float
    zero: bool
    reference: float = GAMMA_REFERENCE

    def as_dict(self) -> dict:
        return {"q": self.q, "n": self.n, "g": self.g, "m": self.m, "count": self.count,
                "value": self.value, "zero": self.zero, "reference": self.reference}


def gamma_value(count: int, n: int) -> float:
    if count == 0:
        return 0.0
    # exp of the mean log keeps huge integers out of float range
    return math.exp((math.log(count) - math.lgamma(n + 1)) / n)


def gamma_estimate(q: float, g: int, n: int, cap: int | None = None,
                   budget: int | None = None) -> GammaEstimate:
    """``(|S^g(n, floor(qn))| / n!)^(1/n)``."""
    m = math.floor(q * n + 1e-9)
    count = count_graphs(n, m, g, cap=cap, budget=budget)
    return GammaEstimate(q, n, g, m, count, gamma_value(count, n), count == 0)


# ---------------------------------------------------------------------------
# Tables


@dataclass
class CensusTable:
    """Exact counts keyed by ``(n, m, g)`` plus optional histograms keyed by
    ``(stat, n, m, g)``."""

    counts: dict[tuple[int, int, int], int] = field(default_factory=dict)
    histograms: dict[tuple[str, int, int, int], dict[int, int]] = field(default_factory=dict)
    version: str = __version__
    budget: int = field(default_factory=default_budget)

    def count(self, n: int, m: int, g: int) -> int:
        return self.counts[(n, m, g)]

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["n", "m", "g", "count"])
        for (n, m, g), c in sorted(self.counts.items()):
            w.writerow([n, m, g, c])
        return buf.getvalue()

    def to_json(self) -> str:
        doc = {
            "version": self.version,
            "budget": self.budget,
            "histograms": [
                {"stat": stat, "n": n, "m": m, "g": g, "bins": {str(k): v for k, v in bins.items()}}
                for (stat, n, m, g), bins in sorted(self.histograms.items())
            ],
        }
        return json.dumps(doc, indent=2, sort_keys=True) + "\n"

    def save(self, csv_path: str | Path, json_path: str | Path | None = None) -> None:
        csv_path = Path(csv_path)
        csv_path.write_text(self.to_csv())
        json_path = Path(json_path) if json_path else csv_path.with_suffix(".json")
        json_path.write_text(self.to_json())

    @classmethod
    def load(cls, csv_path: str | Path, json_path: str | Path | None = None) -> "CensusTable":
        csv_path = Path(csv_path)
        table = cls()
        with csv_path.open() as fh:
            for row in csv.DictReader(fh):
                table.counts[(int(row["n"]), int(row["m"]), int(row["g"]))] = int(row["count"])
        json_path = Path(json_path) if json_path else csv_path.with_suffix(".json")
        if json_path.exists():
            doc = json.loads(json_path.read_text())
            table.version = doc.get("version", table.version)
            table.budget = doc.get("budget", table.budget)
            for h in doc.get("histograms", []):
                key = (h["stat"], h["n"], h["m"], h["g"])
                table.histograms[key] = {int(k): v for k, v in h["bins"].items()}
        return table

    def mismatches(self, other: "CensusTable") -> list[tuple]:
        """Keys present in both tables whose values differ."""
        bad = []
        for key in sorted(set(self.counts) & set(other.counts)):
            if self.counts[key] != other.counts[key]:
                bad.append((key, self.counts[key], other.counts[key]))
        for key in sorted(set(self.histograms) & set(other.histograms)):
            if self.histograms[key] != other.histograms[key]:
                bad.append((key, self.histograms[key], other.histograms[key]))
        return bad


def build_census(ns: Iterable[int], gs: Iterable[int], ms: Iterable[int] | None = None,
                 stats: Iterable[str] = (), cap: int | None = None,
                 budget: int | None = None) -> CensusTable:
    """Counts (and histograms for ``stats``) over the grid. Without ``ms``
    every ``m`` from 0 to ``C(n, 2)`` is included."""
    table = CensusTable(budget=default_budget() if budget is None else budget)
    stats = list(stats)
    resolved = {s: resolve_statistic(s) for s in stats}
    for n in ns:
        for g in gs:
            grid = range(n * (n - 1) // 2 + 1) if ms is None else ms
            for m in grid:
                if not 0 <= m <= n * (n - 1) // 2:
                    continue
                hists: dict[str, Counter[int]] = {s: Counter() for s in stats}
                total = 0
                for G in iter_graphs(n, m, g, cap, budget):
                    total += 1
                    for s, f in resolved.items():
                        hists[s][f(G, g)] += 1
                table.counts[(n, m, g)] = total
                for s in stats:
                    table.histograms[(s, n, m, g)] = dict(sorted(hists[s].items()))
    return table
