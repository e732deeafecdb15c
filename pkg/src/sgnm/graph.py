"""Labeled simple graphs on ``{1..n}`` and the small-graph toolbox around them.

Vertices are 1-based everywhere. Edges are stored as sorted pairs ``(u, v)``
with ``u < v`` in lexicographic order, which is also the slot order used by
the census (slot 0 is ``(1, 2)``, slot 1 is ``(1, 3)``, ...).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Iterable, Iterator, Sequence

from .errors import CapabilityError, DecodeError, GraphError

Edge = tuple[int, int]

PATTERN_LIMIT = 8
CANONICAL_LIMIT = 10
GRAPH6_LIMIT = 62


@dataclass(frozen=True)
class LabeledGraph:
    """Immutable simple graph on ``{1..n}``.

    Build instances with :func:`make_graph`; the constructor itself trusts
    its input (edges sorted, deduplicated, in range).
    """

    n: int
    edges: tuple[Edge, ...]

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def adj(self) -> tuple[frozenset[int], ...]:
        """Neighbor sets indexed by vertex; index 0 is an unused empty set."""
        nbrs: list[set[int]] = [set() for _ in range(self.n + 1)]
        for u, v in self.edges:
            nbrs[u].add(v)
            nbrs[v].add(u)
        return tuple(frozenset(s) for s in nbrs)

    @cached_property
    def edge_set(self) -> frozenset[Edge]:
        return frozenset(self.edges)

    @cached_property
    def mask(self) -> int:
        """Bitmask over the lexicographic edge slots of ``K_n``."""
        return sum(1 << slot_index(self.n, u, v) for u, v in self.edges)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        """Degrees indexed by vertex (index 0 unused and set to 0)."""
        return tuple(len(s) for s in self.adj)

    def vertices(self) -> range:
        return range(1, self.n + 1)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def non_edges(self) -> list[Edge]:
        return [(u, v) for u, v in combinations(self.vertices(), 2) if v not in self.adj[u]]

    def add_edge(self, u: int, v: int) -> "LabeledGraph":
        return make_graph(self.n, list(self.edges) + [(u, v)])

    def remove_edge(self, u: int, v: int) -> "LabeledGraph":
        e = (min(u, v), max(u, v))
        if e not in self.edge_set:
            raise GraphError(f"edge {e} not present", e)
        return LabeledGraph(self.n, tuple(x for x in self.edges if x != e))

    def swap_edge(self, old: Edge, new: Edge) -> "LabeledGraph":
        """Return the graph with ``old`` removed and ``new`` inserted."""
        es = set(self.edges)
        es.discard((min(old), max(old)))
        es.add((min(new), max(new)))
        return LabeledGraph(self.n, tuple(sorted(es)))

    def relabel(self, perm: Sequence[int]) -> "LabeledGraph":
        """Apply ``v -> perm[v]``; ``perm`` is indexed from 1 (``perm[0]`` ignored)."""
        return LabeledGraph(
            self.n, tuple(sorted((min(perm[u], perm[v]), max(perm[u], perm[v])) for u, v in self.edges))
        )

    def induced(self, vertices: Iterable[int]) -> "LabeledGraph":
        """Induced subgraph relabeled by the increasing bijection onto ``1..k``."""
        vs = sorted(vertices)
        pos = {v: i + 1 for i, v in enumerate(vs)}
        es = [(pos[u], pos[v]) for u, v in self.edges if u in pos and v in pos]
        return LabeledGraph(len(vs), tuple(sorted(es)))

    def is_connected(self) -> bool:
        if self.n <= 1:
            return True
        return len(_reach(self.adj, 1)) == self.n

    def __str__(self) -> str:
        return f"LabeledGraph(n={self.n}, m={self.m}, edges={list(self.edges)})"


def make_graph(n: int, edges: Iterable[Iterable[int]]) -> LabeledGraph:
    """Validate and build a graph on ``{1..n}``.

    Raises :class:`GraphError` naming the offending pair for loops,
    duplicates and out-of-range endpoints.
    """
    if n < 0:
        raise GraphError(f"vertex count must be nonnegative, got {n}")
    seen: set[Edge] = set()
    for pair in edges:
        pair = tuple(pair)
        if len(pair) != 2:
            raise GraphError(f"edge {pair!r} is not a pair", pair)
        u, v = pair
        if not (1 <= u <= n and 1 <= v <= n):
            raise GraphError(f"edge {pair!r} has an endpoint outside 1..{n}", pair)
        if u == v:
            raise GraphError(f"edge {pair!r} is a loop", pair)
        e = (min(u, v), max(u, v))
        if e in seen:
            raise GraphError(f"edge {pair!r} is a duplicate", pair)
        seen.add(e)
    return LabeledGraph(n, tuple(sorted(seen)))


def empty_graph(n: int) -> LabeledGraph:
    return LabeledGraph(n, ())


def complete_graph(n: int) -> LabeledGraph:
    return LabeledGraph(n, tuple(combinations(range(1, n + 1), 2)))


def complete_bipartite(a: int, b: int) -> LabeledGraph:
    return LabeledGraph(a + b, tuple((u, v) for u in range(1, a + 1) for v in range(a + 1, a + b + 1)))


def path_graph(n: int) -> LabeledGraph:
    return LabeledGraph(n, tuple((i, i + 1) for i in range(1, n)))


def cycle_graph(n: int) -> LabeledGraph:
    if n < 3:
        raise GraphError("a cycle needs at least 3 vertices")
    return make_graph(n, [(i, i + 1) for i in range(1, n)] + [(1, n)])


def star_graph(leaves: int) -> LabeledGraph:
    return LabeledGraph(leaves + 1, tuple((1, v) for v in range(2, leaves + 2)))


def disjoint_union(*graphs: LabeledGraph) -> LabeledGraph:
    """Place graphs side by side, shifting labels of later graphs."""
    off = 0
    es: list[Edge] = []
    for g in graphs:
        es.extend((u + off, v + off) for u, v in g.edges)
        off += g.n
    return LabeledGraph(off, tuple(sorted(es)))


NAMED_PATTERNS = {
    "K1": lambda: complete_graph(1),
    "K2": lambda: complete_graph(2),
    "K3": lambda: complete_graph(3),
    "K4": lambda: complete_graph(4),
    "K5": lambda: complete_graph(5),
    "K33": lambda: complete_bipartite(3, 3),
    "P3": lambda: path_graph(3),
    "P4": lambda: path_graph(4),
    "C4": lambda: cycle_graph(4),
}


def pattern_from_name(name: str) -> LabeledGraph:
    """Resolve ``K4``/``P3``/... or a graph6 string to a pattern graph."""
    if name in NAMED_PATTERNS:
        return NAMED_PATTERNS[name]()
    return from_graph6(name)


# ---------------------------------------------------------------------------
# Edge slots


def slot_index(n: int, u: int, v: int) -> int:
    """Lexicographic index of pair ``u < v`` among all pairs of ``{1..n}``."""
    return (u - 1) * n - (u - 1) * u // 2 + (v - u - 1)


def edge_slots(n: int) -> list[Edge]:
    return list(combinations(range(1, n + 1), 2))


def from_mask(n: int, mask: int) -> LabeledGraph:
    slots = edge_slots(n)
    return LabeledGraph(n, tuple(slots[i] for i in range(len(slots)) if mask >> i & 1))


# ---------------------------------------------------------------------------
# Components and blocks


@dataclass(frozen=True)
class ComponentClass:
    kind: str  # "tree" | "unicyclic" | "multicyclic"
    vertices: frozenset[int]
    edge_count: int = field(default=0, compare=False)


def _reach(adj, start: int) -> set[int]:
    seen = {start}
    stack = [start]
    while stack:
        u = stack.pop()
        for w in adj[u]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return seen


def component_sets(G: LabeledGraph) -> list[frozenset[int]]:
    """Vertex sets of the connected components, ordered by smallest vertex."""
    seen: set[int] = set()
    out = []
    for v in G.vertices():
        if v not in seen:
            comp = _reach(G.adj, v)
            seen |= comp
            out.append(frozenset(comp))
    return out


def components(G: LabeledGraph) -> list[ComponentClass]:
    out = []
    for comp in component_sets(G):
        e = sum(len(G.adj[v]) for v in comp) // 2
        k = len(comp)
        kind = "tree" if e == k - 1 else "unicyclic" if e == k else "multicyclic"
        out.append(ComponentClass(kind, comp, e))
    return out


def component_graphs(G: LabeledGraph) -> list[tuple[LabeledGraph, list[int]]]:
    """Each component as its own graph on ``1..k`` plus the original labels."""
    out = []
    for comp in component_sets(G):
        vs = sorted(comp)
        out.append((G.induced(vs), vs))
    return out


@dataclass(frozen=True)
class BlockDecomposition:
    blocks: tuple[frozenset[Edge], ...]
    cut_edges: frozenset[Edge]
    cut_vertices: frozenset[int]


def block_decomposition(G: LabeledGraph) -> BlockDecomposition:
    """Biconnected components (iterative Hopcroft-Tarjan)."""
    n = G.n
    adj = [sorted(s) for s in G.adj]
    disc = [0] * (n + 1)
    low = [0] * (n + 1)
    timer = 1
    blocks: list[frozenset[Edge]] = []
    cut_vertices: set[int] = set()
    edge_stack: list[Edge] = []
    for root in G.vertices():
        if disc[root]:
            continue
        disc[root] = low[root] = timer
        timer += 1
        root_children = 0
        stack = [(root, 0, iter(adj[root]))]
        while stack:
            u, parent, it = stack[-1]
            advanced = False
            for w in it:
                if not disc[w]:
                    disc[w] = low[w] = timer
                    timer += 1
                    edge_stack.append((u, w))
                    stack.append((w, u, iter(adj[w])))
                    if u == root:
                        root_children += 1
                    advanced = True
                    break
                if w != parent and disc[w] < disc[u]:
                    edge_stack.append((u, w))
                    low[u] = min(low[u], disc[w])
            if advanced:
                continue
            stack.pop()
            if not stack:
                continue
            p = stack[-1][0]
            low[p] = min(low[p], low[u])
            if low[u] >= disc[p]:
                if p != root:
                    cut_vertices.add(p)
                blk = set()
                while True:
                    a, b = edge_stack.pop()
                    blk.add((min(a, b), max(a, b)))
                    if (a, b) == (p, u):
                        break
                blocks.append(frozenset(blk))
        if root_children > 1:
            cut_vertices.add(root)
    bridges = frozenset(next(iter(b)) for b in blocks if len(b) == 1)
    blocks.sort(key=lambda b: min(b))
    return BlockDecomposition(tuple(blocks), bridges, frozenset(cut_vertices))


def block_graphs(G: LabeledGraph) -> list[LabeledGraph]:
    """Every block with at least two edges, relabeled onto ``1..k``."""
    out = []
    for blk in block_decomposition(G).blocks:
        if len(blk) < 2:
            continue
        vs = sorted({v for e in blk for v in e})
        pos = {v: i + 1 for i, v in enumerate(vs)}
        out.append(LabeledGraph(len(vs), tuple(sorted((pos[u], pos[v]) for u, v in blk))))
    return out


# ---------------------------------------------------------------------------
# Pattern copies


def _pattern_order(H: LabeledGraph) -> list[int]:
    """Vertex order for matching: grow from a max-degree vertex by connectivity."""
    order: list[int] = []
    left = set(H.vertices())
    while left:
        start = max(left, key=lambda v: (H.degree(v), -v))
        order.append(start)
        left.discard(start)
        while True:
            frontier = [v for v in left if any(u in H.adj[v] for u in order)]
            if not frontier:
                break
            nxt = max(frontier, key=lambda v: (sum(u in H.adj[v] for u in order), H.degree(v), -v))
            order.append(nxt)
            left.discard(nxt)
    return order


def monomorphisms(H: LabeledGraph, G: LabeledGraph, induced: bool = False) -> Iterator[dict[int, int]]:
    """Injective maps ``V(H) -> V(G)`` carrying edges to edges.

    With ``induced`` non-edges must also map to non-edges.
    """
    order = _pattern_order(H)
    hdeg = H.degrees
    gdeg = G.degrees
    gadj = G.adj
    earlier = [[(j, order[j] in H.adj[v]) for j in range(i)] for i, v in enumerate(order)]
    image = [0] * len(order)
    used: set[int] = set()

    def rec(i: int):
        if i == len(order):
            yield {order[j]: image[j] for j in range(len(order))}
            return
        need = hdeg[order[i]]
        for w in G.vertices():
            if w in used or gdeg[w] < need:
                continue
            ok = True
            for j, is_edge in earlier[i]:
                adj = image[j] in gadj[w]
                if is_edge and not adj or induced and adj and not is_edge:
                    ok = False
                    break
            if not ok:
                continue
            image[i] = w
            used.add(w)
            yield from rec(i + 1)
            used.discard(w)

    yield from rec(0)


def find_copies(H: LabeledGraph, G: LabeledGraph, induced: bool = False,
                limit: int = PATTERN_LIMIT) -> list[tuple[frozenset[int], frozenset[Edge]]]:
    """Distinct copies of ``H`` in ``G`` as ``(vertex set, edge set)`` witnesses."""
    if H.n > limit:
        raise CapabilityError(f"pattern has {H.n} vertices; limit is {limit}")
    if H.n > G.n:
        return []
    seen = {}
    for phi in monomorphisms(H, G, induced):
        vs = frozenset(phi.values())
        es = frozenset((min(phi[u], phi[v]), max(phi[u], phi[v])) for u, v in H.edges)
        seen.setdefault((vs, es), None)
    return sorted(seen, key=lambda c: (sorted(c[0]), sorted(c[1])))


def copies_of(H: LabeledGraph, G: LabeledGraph, induced: bool = False,
              limit: int = PATTERN_LIMIT) -> int:
    """Number of subgraphs of ``G`` isomorphic to ``H`` (induced ones with ``induced``)."""
    return len(find_copies(H, G, induced, limit))


def has_copy(H: LabeledGraph, G: LabeledGraph, induced: bool = False) -> bool:
    if H.n > G.n or H.m > G.m:
        return False
    return next(monomorphisms(H, G, induced), None) is not None


def components_isomorphic_to(H: LabeledGraph, G: LabeledGraph, limit: int = PATTERN_LIMIT) -> int:
    """Count the components of ``G`` isomorphic to ``H``."""
    if H.n > limit:
        raise CapabilityError(f"pattern has {H.n} vertices; limit is {limit}")
    count = 0
    for comp in component_sets(G):
        if len(comp) != H.n:
            continue
        sub = G.induced(comp)
        if sub.m == H.m and is_isomorphic(sub, H):
            count += 1
    return count


# ---------------------------------------------------------------------------
# Canonical form and automorphisms


def refine_colors(G: LabeledGraph, initial: Sequence[int] | None = None) -> list[int]:
    """Stable color refinement; returns colors indexed by vertex (index 0 unused).

    Colors are ranks of isomorphism-invariant signatures, so isomorphic
    inputs with matching initial colors get matching outputs.
    """
    n = G.n
    adj = G.adj
    if initial is None:
        colors = [0] + [len(adj[v]) for v in range(1, n + 1)]
    else:
        colors = list(initial)
    ncls = -1
    while True:
        sig = [None] + [
            (colors[v], tuple(sorted(colors[w] for w in adj[v]))) for v in range(1, n + 1)
        ]
        ranks = {s: i for i, s in enumerate(sorted(set(sig[1:])))}
        new = [0] + [ranks[sig[v]] for v in range(1, n + 1)]
        if len(ranks) == ncls:
            return new
        ncls = len(ranks)
        colors = new


def canonical_code(G: LabeledGraph, limit: int = CANONICAL_LIMIT) -> bytes:
    """Isomorphism-invariant code: equal iff the graphs are isomorphic.

    The code is the lexicographically least upper-triangle adjacency
    bitstring (column order) over all vertex orderings that list refined
    color classes in color order. Automorphisms found on the way prune
    symmetric branches.
    """
    n = G.n
    if n > limit:
        raise CapabilityError(f"canonical form capped at n={limit}, got n={n}")
    if n <= 1:
        return bytes([n])
    adj = G.adj
    colors = refine_colors(G)
    by_color: dict[int, list[int]] = {}
    for v in range(1, n + 1):
        by_color.setdefault(colors[v], []).append(v)
    cell_of_pos = []
    for c in sorted(by_color):
        cell_of_pos.extend([c] * len(by_color[c]))

    order: list[int] = []
    best: list[int] | None = None
    best_order: list[int] | None = None
    autos: list[dict[int, int]] = []
    used = set()

    def column(c: int) -> int:
        bits = 0
        for u in order:
            bits = bits << 1 | (u in adj[c])
        return bits

    def rec(k: int, status: int) -> bool:
        nonlocal best, best_order
        if k == n:
            if best is None or status < 0:
                best = cols[:]
                best_order = order[:]
                return True
            autos.append({best_order[i]: order[i] for i in range(n)})
            return False
        updated = False
        cands = [v for v in by_color[cell_of_pos[k]] if v not in used]
        done: list[int] = []
        for c in cands:
            if done and _same_orbit(c, done, order, autos):
                continue
            done.append(c)
            col = column(c)
            if best is not None and status == 0:
                if col > best[k]:
                    continue
                child = -1 if col < best[k] else 0
            else:
                child = status if best is not None else 0
            order.append(c)
            cols.append(col)
            used.add(c)
            if rec(k + 1, child):
                updated = True
                status = 0
            used.discard(c)
            cols.pop()
            order.pop()
        return updated

    cols: list[int] = []
    rec(0, 0)
    bits = 0
    nbits = 0
    for k in range(1, n):
        bits = bits << k | best[k]
        nbits += k
    nbytes = (nbits + 7) // 8
    return bytes([n]) + (bits << (nbytes * 8 - nbits)).to_bytes(nbytes, "big")


def from_canonical_code(code: bytes) -> LabeledGraph:
    """The representative graph whose canonical code is ``code``."""
    n = code[0]
    bits = int.from_bytes(code[1:], "big") if len(code) > 1 else 0
    total = (len(code) - 1) * 8
    pos = 0
    edges = []
    for k in range(1, n):
        for j in range(k):
            if bits >> (total - 1 - pos) & 1:
                edges.append((j + 1, k + 1))
            pos += 1
    return LabeledGraph(n, tuple(sorted(edges)))


def _same_orbit(c: int, done: list[int], fixed: list[int], autos: list[dict[int, int]]) -> bool:
    """Whether ``c`` lies in the orbit of some vertex in ``done`` under the
    group generated by known automorphisms fixing ``fixed`` pointwise."""
    gens = [a for a in autos if all(a[v] == v for v in fixed)]
    if not gens:
        return False
    orbit = set(done)
    stack = list(done)
    while stack:
        x = stack.pop()
        for a in gens:
            y = a[x]
            if y == c:
                return True
            if y not in orbit:
                orbit.add(y)
                stack.append(y)
    return False


def is_isomorphic(A: LabeledGraph, B: LabeledGraph) -> bool:
    if A.n != B.n or A.m != B.m or sorted(A.degrees) != sorted(B.degrees):
        return False
    if A.n <= CANONICAL_LIMIT:
        return canonical_code(A) == canonical_code(B)
    return _find_isomorphism(A, B, refine_colors(A), refine_colors(B)) is not None


def _find_isomorphism(A: LabeledGraph, B: LabeledGraph, ca: Sequence[int], cb: Sequence[int],
                      fixed: dict[int, int] | None = None) -> dict[int, int] | None:
    """Color-respecting isomorphism ``A -> B`` extending ``fixed``, or ``None``."""
    n = A.n
    if sorted(ca[1:]) != sorted(cb[1:]):
        return None
    phi = dict(fixed or {})
    used = set(phi.values())
    order = [v for v in _bfs_order(A) if v not in phi]
    aadj, badj = A.adj, B.adj
    mapped = list(phi.items())

    def rec(i: int) -> bool:
        if i == len(order):
            return True
        x = order[i]
        for y in range(1, n + 1):
            if y in used or cb[y] != ca[x]:
                continue
            if any((u in aadj[x]) != (w in badj[y]) for u, w in mapped):
                continue
            phi[x] = y
            used.add(y)
            mapped.append((x, y))
            if rec(i + 1):
                return True
            mapped.pop()
            used.discard(y)
            del phi[x]
        return False

    return phi if rec(0) else None


def _bfs_order(G: LabeledGraph) -> list[int]:
    order: list[int] = []
    seen: set[int] = set()
    for s in sorted(G.vertices(), key=lambda v: -G.degree(v)):
        if s in seen:
            continue
        seen.add(s)
        queue = [s]
        for u in queue:
            order.append(u)
            for w in sorted(G.adj[u]):
                if w not in seen:
                    seen.add(w)
                    queue.append(w)
    return order


def automorphism_count(G: LabeledGraph) -> int:
    """Order of the automorphism group, by orbit-stabilizer along a base."""
    n = G.n
    base: list[int] = []
    total = 1
    gens: list[dict[int, int]] = []
    for v in range(1, n + 1):
        init = [0] * (n + 1)
        for i, b in enumerate(base):
            init[b] = i + 1
        colors = refine_colors(G, [0] + [init[u] * (n + 1) + G.degree(u) for u in range(1, n + 1)])
        same = [w for w in range(1, n + 1) if colors[w] == colors[v]]
        if len(same) == 1:
            base.append(v)
            continue
        orbit = {v}
        stab_gens = [a for a in gens if all(a[b] == b for b in base)]
        for w in same:
            if w in orbit:
                continue
            fixed = {b: b for b in base}
            fixed[v] = w
            init2 = list(init)
            init_a = [0] + [init2[u] * (n + 1) + G.degree(u) for u in range(1, n + 1)]
            ia = list(init_a)
            ib = list(init_a)
            ia[v] = ib[w] = (len(base) + 1) * (n + 1) + n + 1
            phi = _find_isomorphism(G, G, refine_colors(G, ia), refine_colors(G, ib), fixed)
            if phi is None:
                continue
            gens.append(phi)
            stab_gens.append(phi)
            # close the orbit under all known stabilizer generators
            stack = [w]
            orbit.add(w)
            while stack:
                x = stack.pop()
                for a in stab_gens:
                    y = a[x]
                    if y not in orbit:
                        orbit.add(y)
                        stack.append(y)
        total *= len(orbit)
        base.append(v)
    return total


# ---------------------------------------------------------------------------
# graph6


def to_graph6(G: LabeledGraph) -> str:
    """Short-form graph6 line (no header, no newline); ``n <= 62``."""
    n = G.n
    if n > GRAPH6_LIMIT:
        raise CapabilityError(f"graph6 short form supports n <= {GRAPH6_LIMIT}")
    bits = []
    adj = G.adj
    for j in range(2, n + 1):
        for i in range(1, j):
            bits.append(1 if i in adj[j] else 0)
    while len(bits) % 6:
        bits.append(0)
    out = [chr(63 + n)]
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k:k + 6]:
            val = val << 1 | b
        out.append(chr(63 + val))
    return "".join(out)


def from_graph6(text: str) -> LabeledGraph:
    """Decode one short-form graph6 line; ``"?"`` decodes to the 0-vertex graph."""
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise DecodeError("empty graph6 line", 0)
    for i, ch in enumerate(s):
        if not 63 <= ord(ch) <= 126:
            raise DecodeError(f"character {ch!r} outside graph6 range", i)
    if s[0] == "~":
        raise DecodeError("long-form graph6 (n > 62) is not supported", 0)
    n = ord(s[0]) - 63
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    if len(s) - 1 != need:
        raise DecodeError(f"expected {need} data bytes for n={n}, got {len(s) - 1}",
                          min(len(s), need + 1))
    vals = [ord(ch) - 63 for ch in s[1:]]
    pad = need * 6 - nbits
    if pad and vals[-1] & ((1 << pad) - 1):
        raise DecodeError("nonzero padding bits", len(s) - 1)
    edges = []
    k = 0
    for j in range(2, n + 1):
        for i in range(1, j):
            byte, off = divmod(k, 6)
            if vals[byte] >> (5 - off) & 1:
                edges.append((i, j))
            k += 1
    return LabeledGraph(n, tuple(sorted(edges)))


def read_graph6(lines: Iterable[str]) -> list[LabeledGraph]:
    return [from_graph6(line) for line in lines if line.strip()]


def write_graph6(graphs: Iterable[LabeledGraph]) -> str:
    return "".join(to_graph6(g) + "\n" for g in graphs)
