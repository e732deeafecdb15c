"""Rotation-system embeddings: face tracing, minimum genus, genus bounds and
the largest-face statistic.

A rotation system maps each vertex to the cyclic order of its neighbors.
Faces are the orbits of the dart map ``(u -> v)  |->  (v -> succ_v(u))``
where ``succ_v`` is the rotation successor at ``v``.

The search engine builds a rotation system while tracing faces: each step
extends the current face walk by choosing the rotation successor at the
vertex just reached, so every face closes as soon as its last link is fixed.
That makes a cheap upper bound available at every node (closed faces, plus
the open face, plus a third of the untouched darts, since faces of a simple
connected graph with two or more edges have length at least three).
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Mapping, Sequence

import networkx as nx

from .errors import BudgetError, PreconditionError
from .graph import LabeledGraph, block_decomposition, component_sets

DEFAULT_BUDGET = 10**8


def default_budget() -> int:
    env = os.environ.get("SGNM_BUDGET")
    return int(env) if env else DEFAULT_BUDGET


@dataclass(frozen=True)
class RotationSystem:
    """Cyclic neighbor order at each vertex (vertex -> tuple of neighbors)."""

    rotation: Mapping[int, tuple[int, ...]]

    def successor(self, v: int, u: int) -> int:
        rot = self.rotation[v]
        return rot[(rot.index(u) + 1) % len(rot)]

    def darts(self) -> int:
        return sum(len(r) for r in self.rotation.values())

    def validate(self, G: LabeledGraph) -> None:
        for v in G.vertices():
            rot = self.rotation.get(v, ())
            if sorted(rot) != sorted(G.adj[v]) or len(set(rot)) != len(rot):
                raise PreconditionError(f"rotation at vertex {v} is not a permutation of its neighbors")


@dataclass(frozen=True)
class EmbeddingSummary:
    faces: tuple[tuple[int, ...], ...]  # each face as its cyclic vertex walk
    genus: int
    face_sizes: tuple[int, ...]

    @property
    def face_count(self) -> int:
        return len(self.faces)

    def dump(self) -> str:
        """Text form: header ``genus <g> faces <F>`` then one walk per line."""
        lines = [f"genus {self.genus} faces {len(self.faces)}"]
        lines.extend(" ".join(map(str, f)) for f in self.faces)
        return "\n".join(lines) + "\n"


@dataclass
class GenusResult:
    genus: int
    witness: list[RotationSystem] = field(default_factory=list)
    nodes_explored: int = 0


# ---------------------------------------------------------------------------
# Face tracing


def trace_faces(G: LabeledGraph, R: RotationSystem) -> EmbeddingSummary:
    """Trace the faces of the cellular embedding of connected ``G`` given by ``R``."""
    if not G.is_connected():
        raise PreconditionError("face tracing needs a connected graph; trace each component")
    R.validate(G)
    if G.m == 0:
        return EmbeddingSummary(((1,),) if G.n else (), 0, (0,) if G.n else ())
    nxt = {}
    for v, rot in R.rotation.items():
        k = len(rot)
        for i, u in enumerate(rot):
            nxt[(u, v)] = (v, rot[(i + 1) % k])
    seen = set()
    faces = []
    for u, v in sorted(nxt):
        if (u, v) in seen:
            continue
        walk = []
        d = (u, v)
        while d not in seen:
            seen.add(d)
            walk.append(d[0])
            d = nxt[d]
        faces.append(tuple(walk))
    F = len(faces)
    chi = G.n - G.m + F
    genus = (2 - chi) // 2
    return EmbeddingSummary(tuple(faces), genus, tuple(len(f) for f in faces))


def euler_lower_bound(n: int, m: int) -> int:
    """Smallest genus compatible with ``m <= 3n - 6 + 6g`` (connected, ``n >= 3``)."""
    if n < 3:
        return 0
    return max(0, -(-(m - 3 * n + 6) // 6))


# ---------------------------------------------------------------------------
# Search engine


class _Search:
    """Rotation-system search for one connected graph with ``m >= 2``."""

    def __init__(self, G: LabeledGraph, budget: int):
        self.G = G
        self.n = G.n
        self.m = G.m
        self.budget = budget
        self.nodes = 0
        tail, head = [], []
        for u, v in G.edges:
            tail += [u, v]
            head += [v, u]
        self.tail = tail
        self.head = head
        self.out = [[] for _ in range(self.n + 1)]
        for d in range(2 * self.m):
            self.out[tail[d]].append(d)
        self.deg = [len(o) for o in self.out]

    def _rotation(self, succ: Sequence[int]) -> RotationSystem:
        rot = {}
        for v in range(1, self.n + 1):
            ds = self.out[v]
            if not ds:
                rot[v] = ()
                continue
            seq = [ds[0]]
            d = succ[ds[0]]
            while d != ds[0]:
                seq.append(d)
                d = succ[d]
            rot[v] = tuple(self.head[x] for x in seq)
        return RotationSystem(rot)

    def run(self, mode: str, target_faces: int = 0, stop_faces: int | None = None):
        """Depth-first search over rotation systems.

        ``mode="faces"`` maximizes the face count (stopping early once
        ``stop_faces`` is reached) among systems with at least
        ``target_faces`` faces. ``mode="largest"`` maximizes the largest face
        among systems with at least ``target_faces`` faces.
        Returns ``(best value, best face count, succ array or None)``.
        """
        n2 = 2 * self.m
        tail, head, out, deg = self.tail, self.head, self.out, self.deg
        parity = (self.m - self.n) & 1
        succ = [-1] * n2
        pred = [-1] * n2
        start_of = list(range(n2))  # for a chain end: its chain start
        end_of = list(range(n2))  # for a chain start: its chain end
        links = [0] * (self.n + 1)
        visited = [False] * n2
        budget = self.budget
        largest_mode = mode == "largest"
        max_face_bound = n2 - 3 * (target_faces - 1) if largest_mode else 0
        state = {
            "best": -1,
            "best_faces": -1,
            "best_succ": None,
            "done": False,
        }
        if not largest_mode:
            state["best"] = target_faces - 2

        def fbound(closed: int, remaining: int, open_face: int) -> int:
            ub = closed + open_face + remaining // 3
            if (ub & 1) != parity:
                ub -= 1
            return ub

        def pick_start() -> int:
            best_d, best_score = -1, -1
            for d in range(n2):
                if not visited[d]:
                    s = links[head[d]] * 4 + links[tail[d]]
                    if s > best_score:
                        best_d, best_score = d, s
            return best_d

        def step(fs: int, cur: int, flen: int, closed: int, remaining: int, largest: int):
            # Extend the open face (start dart fs, last dart cur) by one dart.
            if state["done"]:
                return
            self.nodes += 1
            if self.nodes > budget:
                raise _OutOfBudget()
            ub = fbound(closed, remaining, 1)
            if largest_mode:
                if ub < target_faces or max(largest, flen + remaining) <= state["best"]:
                    return
            elif ub < state["best"] + 2:
                return
            a = cur ^ 1
            v = tail[a]
            goal = tail[fs]
            last = links[v] == deg[v] - 1
            cands = []
            for b in out[v]:
                if pred[b] != -1:
                    continue
                if start_of[a] == b and not last:
                    continue
                if b == fs:
                    key = 0
                elif head[b] == goal:
                    key = 1
                else:
                    key = 2
                cands.append((key, b))
            cands.sort()
            if largest_mode:
                cands.reverse()
            for _, b in cands:
                # link a -> b at v
                s, t = start_of[a], end_of[b]
                old_end_s, old_start_t = end_of[s], start_of[t]
                succ[a] = b
                pred[b] = a
                end_of[s] = t
                start_of[t] = s
                links[v] += 1
                if b == fs:
                    face_len = flen
                    new_largest = max(largest, face_len)
                    if remaining == 0:
                        leaf(closed + 1, new_largest)
                    else:
                        ns = pick_start()
                        visited[ns] = True
                        step(ns, ns, 1, closed + 1, remaining - 1, new_largest)
                        visited[ns] = False
                else:
                    visited[b] = True
                    step(fs, b, flen + 1, closed, remaining - 1, largest)
                    visited[b] = False
                links[v] -= 1
                end_of[s] = old_end_s
                start_of[t] = old_start_t
                succ[a] = -1
                pred[b] = -1
                if state["done"]:
                    return

        def leaf(faces: int, largest: int):
            if largest_mode:
                if faces >= target_faces and largest > state["best"]:
                    state["best"] = largest
                    state["best_faces"] = faces
                    state["best_succ"] = succ[:]
                    if largest >= max_face_bound:
                        state["done"] = True
            elif faces > state["best"]:
                state["best"] = faces
                state["best_faces"] = faces
                state["best_succ"] = succ[:]
                if stop_faces is not None and faces >= stop_faces:
                    state["done"] = True

        visited[0] = True
        try:
            step(0, 0, 1, 0, n2 - 1, 0)
        except _OutOfBudget:
            raise BudgetError(
                f"rotation search exceeded budget of {budget} nodes",
                upper=state["best"] if state["best_succ"] is not None else None,
                nodes=self.nodes,
            ) from None
        return state["best"], state["best_faces"], state["best_succ"]


class _OutOfBudget(Exception):
    pass


def _trivial_rotation(G: LabeledGraph) -> RotationSystem:
    return RotationSystem({v: tuple(sorted(G.adj[v])) for v in G.vertices()})


def _max_faces_possible(n: int, m: int) -> int:
    ub = 2 * m // 3
    if (ub & 1) != ((m - n) & 1):
        ub -= 1
    return ub


def _connected_min_genus(G: LabeledGraph, budget: int) -> GenusResult:
    """Minimum genus of a connected graph by whole-graph rotation search."""
    if G.m <= 1 or G.m == G.n - 1:
        return GenusResult(0, [_trivial_rotation(G)], 0)
    search = _Search(G, budget)
    stop = G.m - G.n + 2 - 2 * euler_lower_bound(G.n, G.m)
    stop = min(stop, _max_faces_possible(G.n, G.m))
    try:
        faces, _, succ = search.run("faces", target_faces=1, stop_faces=stop)
    except BudgetError as exc:
        upper = None if exc.upper is None else (2 - G.n + G.m - exc.upper) // 2
        raise BudgetError(str(exc), lower=euler_lower_bound(G.n, G.m), upper=upper,
                          nodes=exc.nodes) from None
    genus = (2 - G.n + G.m - faces) // 2
    return GenusResult(genus, [search._rotation(succ)], search.nodes)


def _nx_graph(G: LabeledGraph) -> nx.Graph:
    g = nx.Graph()
    g.add_nodes_from(G.vertices())
    g.add_edges_from(G.edges)
    return g


@lru_cache(maxsize=1 << 16)
def is_planar(G: LabeledGraph) -> bool:
    """Dedicated planarity test (left-right algorithm via networkx)."""
    if G.n <= 4 or G.m <= 8:
        return True
    if G.m > 3 * G.n - 6:
        return False
    return nx.check_planarity(_nx_graph(G))[0]


def planar_rotation(G: LabeledGraph) -> RotationSystem | None:
    """A genus-0 rotation system of ``G`` or ``None`` when ``G`` is non-planar."""
    ok, emb = nx.check_planarity(_nx_graph(G))
    if not ok:
        return None
    return RotationSystem({v: tuple(emb.neighbors_cw_order(v)) if G.adj[v] else () for v in G.vertices()})


@lru_cache(maxsize=1 << 16)
def _block_genus(B: LabeledGraph, budget: int) -> GenusResult:
    if euler_lower_bound(B.n, B.m) == 0 and is_planar(B):
        rot = planar_rotation(B)
        return GenusResult(0, [rot], 0)
    return _connected_min_genus(B, budget)


def _splice(rotations: list[dict[int, tuple[int, ...]]], vertices: Sequence[int]) -> RotationSystem:
    """Join block rotations at shared cut vertices by concatenating local orders."""
    merged: dict[int, list[int]] = {v: [] for v in vertices}
    for rot in rotations:
        for v, seq in rot.items():
            merged[v].extend(seq)
    return RotationSystem({v: tuple(seq) for v, seq in merged.items()})


def min_genus(G: LabeledGraph, budget: int | None = None) -> GenusResult:
    """Minimum orientable genus as the sum of per-block minimum genera.

    The witness holds one rotation system per component (in order of the
    smallest vertex), each spliced from its blocks' optimal rotations.
    """
    budget = default_budget() if budget is None else budget
    total = 0
    nodes = 0
    lower_sum = 0
    comp_of = {}
    comps = component_sets(G)
    for i, c in enumerate(comps):
        for v in c:
            comp_of[v] = i
    per_comp: list[list[dict[int, tuple[int, ...]]]] = [[] for _ in comps]
    for blk in block_decomposition(G).blocks:
        vs = sorted({v for e in blk for v in e})
        pos = {v: i + 1 for i, v in enumerate(vs)}
        B = LabeledGraph(len(vs), tuple(sorted((pos[u], pos[v]) for u, v in blk)))
        if B.m == 1:
            per_comp[comp_of[vs[0]]].append({vs[0]: (vs[1],), vs[1]: (vs[0],)})
            continue
        try:
            res = _block_genus(B, budget)
        except BudgetError as exc:
            raise BudgetError(str(exc), lower=lower_sum + total + (exc.lower or 0),
                              upper=None, nodes=nodes + exc.nodes) from None
        total += res.genus
        nodes += res.nodes_explored
        rot = res.witness[0].rotation
        per_comp[comp_of[vs[0]]].append({vs[i - 1]: tuple(vs[w - 1] for w in rot[i]) for i in rot})
    witness = [_splice(per_comp[i], sorted(c)) for i, c in enumerate(comps)]
    return GenusResult(total, witness, nodes)


def min_genus_whole(G: LabeledGraph, budget: int | None = None) -> GenusResult:
    """Minimum genus by rotation search on each component without block
    splitting and without the planarity test (cross-check route)."""
    budget = default_budget() if budget is None else budget
    total, nodes, witness = 0, 0, []
    for comp in component_sets(G):
        vs = sorted(comp)
        res = _connected_min_genus(G.induced(vs), budget - nodes)
        total += res.genus
        nodes += res.nodes_explored
        rot = res.witness[0].rotation
        witness.append(RotationSystem({vs[i - 1]: tuple(vs[w - 1] for w in rot[i]) for i in rot}))
    return GenusResult(total, witness, nodes)


def genus_lower_bound(G: LabeledGraph) -> int:
    """Sum over blocks of the Euler bound; cheap certificate for rejection."""
    lb = 0
    for blk in block_decomposition(G).blocks:
        if len(blk) >= 3:
            nv = len({v for e in blk for v in e})
            lb += euler_lower_bound(nv, len(blk))
    return lb


@lru_cache(maxsize=1 << 18)
def _genus_at_most_cached(G: LabeledGraph, g: int, budget: int) -> bool:
    if g == 0:
        return is_planar(G)
    if genus_lower_bound(G) > g:
        return False
    return min_genus(G, budget).genus <= g


def is_genus_at_most(G: LabeledGraph, g: int, budget: int | None = None) -> bool:
    """Whether ``G`` embeds on the orientable surface of genus ``g``."""
    if g < 0:
        return False
    if G.m <= 8 or G.n <= 4:
        return True
    budget = default_budget() if budget is None else budget
    return _genus_at_most_cached(G, g, budget)


# ---------------------------------------------------------------------------
# Largest face


def _connected_max_face(C: LabeledGraph, g: int, budget: int) -> tuple[int, RotationSystem | None]:
    """Largest face over rotation systems of connected ``C`` with genus <= ``g``."""
    if C.m == 0:
        return 0, _trivial_rotation(C)
    if C.m == C.n - 1:
        return 2 * C.m, _trivial_rotation(C)
    target = C.m - C.n + 2 - 2 * g
    if target > _max_faces_possible(C.n, C.m):
        raise PreconditionError(f"graph does not embed with genus <= {g}")
    search = _Search(C, budget)
    largest, _, succ = search.run("largest", target_faces=max(target, 1))
    if succ is None:
        raise PreconditionError(f"graph does not embed with genus <= {g}")
    return largest, search._rotation(succ)


def max_face_size(G: LabeledGraph, g: int, budget: int | None = None) -> int:
    """Largest face size maximized over embeddings of genus at most ``g``.

    Components are combined by nesting: a component embedded inside a face
    of another merges the two face boundaries, so sizes and genera add.
    The result maximizes the summed per-component optimum over all genus
    allocations with total at most ``g``.
    """
    budget = default_budget() if budget is None else budget
    if not is_genus_at_most(G, g, budget):
        raise PreconditionError(f"graph has genus greater than {g}")
    NEG = -1
    best = [0] + [NEG] * g  # best[h]: max summed face size using genus exactly h
    for comp in component_sets(G):
        if len(comp) == 1:
            continue
        C = G.induced(comp)
        lo = genus_lower_bound(C)
        values = [NEG] * (g + 1)
        for h in range(lo, g + 1):
            if values[h - 1] != NEG and h > lo and _saturated(C, values[h - 1]):
                values[h] = values[h - 1]
                continue
            try:
                values[h] = _component_face_cached(C, h, budget)
            except PreconditionError:
                values[h] = NEG
        new = [NEG] * (g + 1)
        for total in range(g + 1):
            if best[total] == NEG:
                continue
            for h in range(g + 1 - total):
                if values[h] != NEG:
                    cand = best[total] + values[h]
                    if cand > new[total + h]:
                        new[total + h] = cand
        best = new
    return max(best)


def _saturated(C: LabeledGraph, value: int) -> bool:
    """A connected graph cannot have a face longer than ``2m`` darts."""
    return value >= 2 * C.m


@lru_cache(maxsize=1 << 16)
def _component_face_cached(C: LabeledGraph, h: int, budget: int) -> int:
    return _connected_max_face(C, h, budget)[0]
