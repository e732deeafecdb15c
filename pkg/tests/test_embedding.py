from __future__ import annotations

import random

import pytest

from oracles import brute_max_face, brute_min_genus, faces
from sgnm.census import isomorphism_classes
from sgnm.embedding import (
    RotationSystem,
    euler_lower_bound,
    genus_lower_bound,
    is_genus_at_most,
    is_planar,
    max_face_size,
    min_genus,
    min_genus_whole,
    planar_rotation,
    trace_faces,
)
from sgnm.errors import BudgetError, PreconditionError
from sgnm.graph import (
    LabeledGraph,
    complete_bipartite,
    complete_graph,
    cycle_graph,
    disjoint_union,
    edge_slots,
    from_canonical_code,
    make_graph,
    path_graph,
    star_graph,
)

TRIANGLE = cycle_graph(3)
PETERSEN = make_graph(10, [(1, 2), (2, 3), (3, 4), (4, 5), (1, 5), (1, 6), (2, 7), (3, 8),
                           (4, 9), (5, 10), (6, 8), (8, 10), (7, 10), (7, 9), (6, 9)])


def random_connected(rng: random.Random, n: int, max_m: int | None = None) -> LabeledGraph:
    slots = edge_slots(n)
    top = len(slots) if max_m is None else min(max_m, len(slots))
    while True:
        G = LabeledGraph(n, tuple(sorted(rng.sample(slots, rng.randint(n - 1, top)))))
        if G.is_connected():
            return G


def random_rotation(G: LabeledGraph, rng: random.Random) -> RotationSystem:
    rot = {}
    for v in G.vertices():
        nb = sorted(G.adj[v])
        rng.shuffle(nb)
        rot[v] = tuple(nb)
    return RotationSystem(rot)


def random_tree(rng: random.Random, n: int) -> LabeledGraph:
    return make_graph(n, [(rng.randint(1, v - 1), v) for v in range(2, n + 1)])


class TestTraceFaces:
    def test_triangle(self):
        s = trace_faces(TRIANGLE, planar_rotation(TRIANGLE))
        assert s.face_sizes == (3, 3) and s.genus == 0

    def test_tree_single_face(self):
        rng = random.Random(3)
        for n in range(2, 9):
            T = random_tree(rng, n)
            s = trace_faces(T, random_rotation(T, rng))
            assert s.face_sizes == (2 * (n - 1),) and s.genus == 0

    def test_k4_with_two_faces(self):
        K4 = complete_graph(4)
        R = RotationSystem({1: (2, 3, 4), 2: (1, 3, 4), 3: (1, 2, 4), 4: (1, 2, 3)})
        s = trace_faces(K4, R)
        assert s.face_count == 2 and s.genus == 1 and sum(s.face_sizes) == 12

    def test_matches_independent_tracer(self):
        rng = random.Random(5)
        for _ in range(200):
            G = random_connected(rng, rng.randint(2, 7))
            R = random_rotation(G, rng)
            assert sorted(trace_faces(G, R).face_sizes) == sorted(len(f) for f in faces(dict(R.rotation)))

    def test_disconnected_rejected(self):
        with pytest.raises(PreconditionError):
            trace_faces(make_graph(4, [(1, 2), (3, 4)]), RotationSystem({1: (2,), 2: (1,), 3: (4,), 4: (3,)}))

    def test_invalid_rotation_rejected(self):
        with pytest.raises(PreconditionError):
            trace_faces(TRIANGLE, RotationSystem({1: (2,), 2: (1, 3), 3: (1, 2)}))

    def test_dump_header(self):
        text = trace_faces(TRIANGLE, planar_rotation(TRIANGLE)).dump()
        assert text.splitlines()[0] == "genus 0 faces 2"


class TestMinGenus:
    @pytest.mark.parametrize("G,genus", [
        (complete_graph(5), 1),
        (complete_bipartite(3, 3), 1),
        (complete_graph(6), 1),
        (complete_graph(7), 1),
        (PETERSEN, 1),
        (complete_bipartite(4, 4), 1),
        (path_graph(6), 0),
    ])
    def test_known(self, G, genus):
        res = min_genus(G)
        assert res.genus == genus
        for comp_rot in res.witness:
            vs = sorted(comp_rot.rotation)
            sub = G.induced(vs)
            pos = {v: i + 1 for i, v in enumerate(vs)}
            R = RotationSystem({pos[v]: tuple(pos[w] for w in comp_rot.rotation[v]) for v in vs})
            assert trace_faces(sub, R).genus == genus

    def test_k5_and_k33_against_exhaustive(self):
        for G in (complete_graph(5), complete_bipartite(3, 3)):
            assert brute_min_genus(G.n, G.edges) == min_genus(G).genus == min_genus_whole(G).genus

    def test_block_additivity(self):
        two = disjoint_union(complete_graph(5), complete_graph(5))
        assert min_genus(two).genus == 2
        glued = make_graph(9, list(complete_graph(5).edges) + [(u + 4, v + 4) for u, v in complete_graph(5).edges])
        assert min_genus(glued).genus == 2 == min_genus_whole(glued).genus

    def test_random_small_against_exhaustive(self):
        rng = random.Random(8)
        for _ in range(60):
            G = random_connected(rng, rng.randint(3, 6), max_m=9)
            assert min_genus(G).genus == brute_min_genus(G.n, G.edges)

    def test_lower_bound(self):
        for G in (complete_graph(6), complete_graph(7), complete_graph(8)):
            assert min_genus(G).genus >= euler_lower_bound(G.n, G.m)
        assert genus_lower_bound(complete_graph(8)) == 2

    def test_budget_error_carries_bounds(self):
        with pytest.raises(BudgetError) as err:
            min_genus(complete_graph(8), budget=50)
        assert err.value.lower == 2

    def test_deterministic(self):
        a = min_genus_whole(complete_graph(6))
        b = min_genus_whole(complete_graph(6))
        assert a.witness[0].rotation == b.witness[0].rotation and a.nodes_explored == b.nodes_explored


class TestGenusAtMost:
    def test_k5(self):
        assert not is_genus_at_most(complete_graph(5), 0)
        assert is_genus_at_most(complete_graph(5), 1)

    def test_forest(self):
        rng = random.Random(1)
        forest = disjoint_union(random_tree(rng, 6), random_tree(rng, 5))
        assert is_genus_at_most(forest, 0)

    def test_planarity_agrees_with_search(self):
        rng = random.Random(4)
        for _ in range(300):
            n = rng.randint(5, 7)
            G = LabeledGraph(n, tuple(sorted(rng.sample(edge_slots(n), rng.randint(8, 3 * n - 6)))))
            assert is_planar(G) == (min_genus_whole(G).genus == 0)

    def test_planarity_exhaustive_up_to_seven(self):
        # one representative per isomorphism class covers every labeled graph
        for n in range(1, 8):
            for m in range(n * (n - 1) // 2 + 1):
                for code in isomorphism_classes(n, m):
                    G = from_canonical_code(code)
                    assert is_planar(G) == (min_genus_whole(G).genus == 0)


class TestMaxFace:
    def test_examples(self):
        assert max_face_size(path_graph(5), 0) == 8
        assert max_face_size(TRIANGLE, 0) == 3
        assert max_face_size(disjoint_union(TRIANGLE, TRIANGLE), 0) == 6

    def test_trees(self):
        rng = random.Random(2)
        for n in range(1, 9):
            assert max_face_size(random_tree(rng, n), 0) == 2 * (n - 1)

    def test_star_plus_isolated(self):
        assert max_face_size(disjoint_union(star_graph(3), make_graph(1, [])), 0) == 6

    def test_k4_genus_one_has_big_face(self):
        assert max_face_size(complete_graph(4), 0) == 3
        assert max_face_size(complete_graph(4), 1) == brute_max_face(4, complete_graph(4).edges, 1)

    def test_against_exhaustive(self):
        rng = random.Random(6)
        for _ in range(40):
            G = random_connected(rng, rng.randint(3, 6), max_m=9)
            g0 = min_genus(G).genus
            for h in (g0, g0 + 1):
                assert max_face_size(G, h) == brute_max_face(G.n, G.edges, h)

    def test_monotone_in_g(self):
        rng = random.Random(9)
        for _ in range(30):
            G = random_connected(rng, 6)
            g0 = min_genus(G).genus
            assert max_face_size(G, g0 + 1) >= max_face_size(G, g0)

    def test_genus_too_small(self):
        with pytest.raises(PreconditionError):
            max_face_size(complete_graph(5), 0)
