from __future__ import annotations

import pytest

from oracles import all_rotations, faces
from sgnm.embedding import RotationSystem, min_genus, min_genus_whole, planar_rotation, trace_faces
from sgnm.errors import GraphError, PreconditionError
from sgnm.graph import complete_graph, cycle_graph, empty_graph, make_graph, path_graph
from sgnm.statistics import (
    appearances,
    max_totally_edge_disjoint_tri_appearances,
    triangulated_appearances,
)
from sgnm.surgery import attach_appearance, attach_triangulated, join_triangulations, rotation_genus

K1 = empty_graph(1)
TRIANGLE = cycle_graph(3)
K4 = complete_graph(4)
OCTAHEDRON = make_graph(6, [(1, 2), (1, 3), (1, 4), (1, 5), (2, 3), (3, 4), (4, 5), (2, 5),
                            (6, 2), (6, 3), (6, 4), (6, 5)])


def triangular_faces(G, R):
    return [f for f in trace_faces(G, R).faces if len(f) == 3 and len(set(f)) == 3]


class TestAttachAppearance:
    def test_triangle_plus_vertex(self):
        res = attach_appearance(TRIANGLE, K1, 1)
        assert res.graph == make_graph(4, [(1, 2), (1, 3), (2, 3), (1, 4)])
        assert res.edge_delta == 1 and res.genus_bound_after == 0
        assert res.verify()

    def test_k5_plus_triangle(self):
        res = attach_appearance(complete_graph(5), TRIANGLE, 2)
        assert res.edge_delta == 4
        assert res.genus_bound_after == 1 == min_genus_whole(res.graph).genus

    def test_vertex_plus_edge(self):
        res = attach_appearance(K1, path_graph(2), 1)
        assert res.graph == path_graph(3)
        assert min_genus(res.graph).genus == 0

    def test_new_block_is_an_appearance(self):
        H = cycle_graph(4)
        res = attach_appearance(K4, H, 3)
        assert any(a.W == frozenset(range(5, 9)) for a in appearances(H, res.graph))

    def test_nonplanar_pattern_rejected(self):
        with pytest.raises(PreconditionError):
            attach_appearance(TRIANGLE, complete_graph(5), 1)

    def test_disconnected_pattern_rejected(self):
        with pytest.raises(PreconditionError):
            attach_appearance(TRIANGLE, empty_graph(2), 1)


class TestAttachTriangulated:
    def test_k4_in_k4(self):
        res = attach_triangulated(K4, planar_rotation(K4), (1, 2, 3), K4)
        assert res.graph.n == 8 and res.graph.m == 18
        assert res.genus_bound_after == 0 == rotation_genus(res.graph, res.witness)
        assert res.verify()

    def test_every_face_and_pattern(self):
        for G in (K4, OCTAHEDRON):
            R = planar_rotation(G)
            for f in triangular_faces(G, R):
                for T in (TRIANGLE, K4, OCTAHEDRON):
                    res = attach_triangulated(G, R, f, T)
                    assert res.graph.m == G.m + T.m + 6
                    assert rotation_genus(res.graph, res.witness) == 0
                    W = frozenset(res.new_vertices)
                    assert any(a.W == W and a.rooted for a in triangulated_appearances(T, res.graph))

    def test_on_the_torus(self):
        k7 = complete_graph(7)
        R = min_genus_whole(k7).witness[0]
        f = triangular_faces(k7, R)[0]
        res = attach_triangulated(k7, R, f, K4)
        assert rotation_genus(res.graph, res.witness) == 1 == res.genus_bound_after

    def test_twice_gives_two_disjoint(self):
        once = attach_triangulated(K4, planar_rotation(K4), (1, 2, 3), K4)
        twice = attach_triangulated(once.graph, once.witness, (1, 2, 4), K4)
        assert max_totally_edge_disjoint_tri_appearances(K4, twice.graph) == 2
        rooted = triangulated_appearances(K4, twice.graph, rooted_only=True)
        assert {frozenset(range(5, 9)), frozenset(range(9, 13))} <= {a.W for a in rooted}

    def test_torus_k4_without_triangular_faces(self):
        # found by enumerating every rotation of K4
        bad = None
        for rot in all_rotations(4, K4.edges):
            fs = faces(rot)
            if len(fs) == 2 and not any(len(f) == 3 and len(set(f)) == 3 for f in fs):
                bad = RotationSystem(rot)
                break
        assert bad is not None and trace_faces(K4, bad).genus == 1
        for f in ((1, 2, 3), (1, 2, 4), (1, 3, 4), (2, 3, 4)):
            with pytest.raises(PreconditionError):
                attach_triangulated(K4, bad, f, K4)

    def test_repeated_vertices_rejected(self):
        with pytest.raises(PreconditionError):
            attach_triangulated(K4, planar_rotation(K4), (1, 1, 2), K4)

    def test_pattern_must_be_triangulation(self):
        with pytest.raises(PreconditionError):
            attach_triangulated(K4, planar_rotation(K4), (1, 2, 3), cycle_graph(4))


def k4_join(extra):
    R = planar_rotation(K4)
    return join_triangulations(K4, R, (1, 2, 3), (1, 2, 4), K4, R, (1, 2, 3), (1, 2, 4), extra)


class TestJoin:
    def test_no_extra_edges(self):
        res = k4_join(0)
        assert res.graph.n == 8 and res.graph.m == 18
        assert res.genus_bound_after == 0 and min_genus_whole(res.graph).genus == 0

    def test_one_extra_edge(self):
        res = k4_join(1)
        assert res.edge_delta == 7 and res.genus_bound_after == 1
        assert res.verify()

    @pytest.mark.parametrize("k", range(7))
    def test_edge_counts_and_witness(self, k):
        res = k4_join(k)
        assert res.edge_delta == 6 + k
        assert res.graph.m == 18 + k
        assert rotation_genus(res.graph, res.witness) <= res.genus_bound_after

    def test_six_extra_edges_reach_the_torus_bound(self):
        res = k4_join(6)
        assert res.graph.m == 24 == 3 * 8 - 6 + 6
        assert res.genus_bound_after == 1 == min_genus_whole(res.graph).genus

    def test_maximal_count_identity(self):
        k7 = complete_graph(7)
        R7 = min_genus_whole(k7).witness[0]
        fs = triangular_faces(k7, R7)
        out7 = fs[0]
        in7 = next(f for f in fs if len(set(f) & set(out7)) <= 1)
        o8 = triangular_faces(OCTAHEDRON, planar_rotation(OCTAHEDRON))
        res = join_triangulations(k7, R7, out7, in7, OCTAHEDRON, planar_rotation(OCTAHEDRON),
                                  o8[0], next(f for f in o8 if not set(f) & set(o8[0])), 6)
        n, g = 13, 0 + 1 + 1
        assert res.graph.m == (3 * 7 - 6 + 6) + (3 * 6 - 6) + 12 == 3 * n - 6 + 6 * g
        assert rotation_genus(res.graph, res.witness) == g == res.genus_bound_after

    def test_explicit_edges(self):
        R = planar_rotation(K4)
        res = join_triangulations(K4, R, (1, 2, 3), (1, 2, 4), K4, R, (1, 2, 3), (1, 2, 4),
                                  [(4, 4), (1, 4)])
        assert res.graph.has_edge(4, 8) and res.graph.has_edge(1, 8)
        assert rotation_genus(res.graph, res.witness) <= 1

    def test_strict_face_sharing(self):
        R = planar_rotation(K4)
        with pytest.raises(PreconditionError):
            join_triangulations(K4, R, (1, 2, 3), (1, 2, 4), K4, R, (1, 2, 3), (1, 2, 4), 0, strict=True)

    def test_same_face_rejected(self):
        R = planar_rotation(K4)
        with pytest.raises(PreconditionError):
            join_triangulations(K4, R, (1, 2, 3), (1, 2, 3), K4, R, (1, 2, 3), (1, 2, 4))

    def test_parallel_edge_rejected(self):
        R = planar_rotation(K4)
        with pytest.raises(GraphError):
            join_triangulations(K4, R, (1, 2, 3), (1, 2, 4), K4, R, (1, 2, 3), (1, 2, 4),
                                [(4, 4), (4, 4)])

    def test_non_triangulation_rejected(self):
        C = cycle_graph(4)
        with pytest.raises(PreconditionError):
            join_triangulations(C, planar_rotation(C), (1, 2, 3), (1, 2, 4),
                                K4, planar_rotation(K4), (1, 2, 3), (1, 2, 4))
