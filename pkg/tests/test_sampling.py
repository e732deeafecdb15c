from __future__ import annotations

from collections import Counter
from fractions import Fraction

import pytest

from sgnm.census import GenusFilter, expectation, iter_graphs, probability
from sgnm.embedding import is_genus_at_most
from sgnm.errors import SamplerError
from sgnm.graph import complete_graph, copies_of, cycle_graph, make_graph
from sgnm.sampling import (
    SamplerConfig,
    estimate,
    greedy_start,
    make_rng,
    mcmc_sample,
    mcmc_step,
    rejection_sample,
    sample,
)


class ScriptedRng:
    """Stands in for the generator and returns preset indices."""

    def __init__(self, picks):
        self.picks = list(picks)

    def integers(self, high):
        v = self.picks.pop(0)
        assert 0 <= v < high
        return v


class TestConfig:
    def test_rejects_bad_values(self):
        with pytest.raises(ValueError):
            SamplerConfig(method="gibbs")
        with pytest.raises(ValueError):
            SamplerConfig(method="mcmc", burn_in=0)
        with pytest.raises(ValueError):
            SamplerConfig(max_rejections=0)
        with pytest.raises(ValueError):
            SamplerConfig(seed=-1)


class TestRejection:
    def test_all_planar(self):
        batch = rejection_sample(4, 3, 0, 50, SamplerConfig(seed=1))
        assert batch.acceptance == 1.0 and len(batch.graphs) == 50

    def test_k5_always_rejected(self):
        with pytest.raises(SamplerError) as err:
            rejection_sample(5, 10, 0, 1, SamplerConfig(seed=1, max_rejections=20))
        assert err.value.acceptance == 0.0

    def test_k5_on_torus(self):
        batch = rejection_sample(5, 10, 1, 3, SamplerConfig(seed=1))
        assert batch.acceptance == 1.0
        assert all(G == complete_graph(5) for G in batch.graphs)

    def test_members_valid(self):
        batch = rejection_sample(7, 15, 0, 40, SamplerConfig(seed=3))
        assert all(G.m == 15 and is_genus_at_most(G, 0) for G in batch.graphs)

    def test_m_too_large(self):
        with pytest.raises(SamplerError):
            rejection_sample(3, 4, 0, 1, SamplerConfig())


class TestStep:
    def test_triangle_plus_vertex_swap(self):
        state = make_graph(4, [(1, 2), (1, 3), (2, 3)])
        # edge index 0 is (1, 2); non-edge index 0 is (1, 4)
        nxt = mcmc_step(state, 0, ScriptedRng([0, 0]))
        assert nxt == make_graph(4, [(1, 3), (2, 3), (1, 4)])

    def test_k5_swaps_stay_on_torus(self):
        k5 = complete_graph(5)
        nxt = mcmc_step(k5, 1, make_rng(0))
        assert nxt is k5

    def test_rejection_leaves_state_unchanged(self):
        # a 6-vertex planar graph with 12 edges; some swaps leave the plane
        planar = make_graph(6, [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4), (1, 5), (2, 5),
                                (3, 5), (1, 6), (2, 6), (4, 6)])
        non = planar.non_edges()
        rejected = 0
        for e in range(planar.m):
            for f in range(len(non)):
                out = mcmc_step(planar, 0, ScriptedRng([e, f]))
                if not is_genus_at_most(planar.swap_edge(planar.edges[e], non[f]), 0):
                    assert out is planar
                    rejected += 1
        assert rejected > 0

    def test_proposal_symmetry(self):
        states = list(iter_graphs(4, 3, 0))
        prob: Counter = Counter()
        for X in states:
            E, N = X.edges, X.non_edges()
            for i in range(len(E)):
                for j in range(len(N)):
                    prob[(X, X.swap_edge(E[i], N[j]))] += Fraction(1, len(E) * len(N))
        pairs = [(X, Y) for (X, Y) in prob if X != Y]
        assert pairs
        assert all(prob[(X, Y)] == prob[(Y, X)] for X, Y in pairs)


class TestMcmc:
    def config(self, **kw):
        base = dict(method="mcmc", seed=5, burn_in=50, thinning=3)
        base.update(kw)
        return SamplerConfig(**base)

    def test_members_valid(self):
        batch = mcmc_sample(7, 14, 0, 60, self.config())
        assert batch.irreducibility == "unproven"
        assert all(G.m == 14 and is_genus_at_most(G, 0) for G in batch.graphs)

    def test_deterministic(self):
        a = mcmc_sample(6, 9, 0, 40, self.config())
        b = mcmc_sample(6, 9, 0, 40, self.config())
        assert a.graphs == b.graphs and a.diagnostics() == b.diagnostics()

    def test_seed_matters(self):
        a = mcmc_sample(6, 9, 0, 40, self.config())
        b = mcmc_sample(6, 9, 0, 40, self.config(seed=6))
        assert a.graphs != b.graphs

    def test_thinning_one_moves_at_most_one_swap(self):
        batch = mcmc_sample(6, 8, 0, 200, self.config(thinning=1))
        for X, Y in zip(batch.graphs, batch.graphs[1:]):
            assert len(X.edge_set ^ Y.edge_set) in (0, 2)

    def test_chains_split_and_seeded(self):
        batch = mcmc_sample(6, 9, 0, 41, self.config(chains=3))
        assert len(batch.graphs) == 41

    def test_greedy_start(self):
        G = greedy_start(6, 12, 0, GenusFilter())
        assert G.m == 12 and is_genus_at_most(G, 0)
        assert greedy_start(5, 10, 0, GenusFilter()) is None

    def test_empty_class_rejected(self):
        with pytest.raises(SamplerError):
            mcmc_sample(5, 10, 0, 5, self.config())

    def test_save_sidecar(self, tmp_path):
        batch = sample(5, 6, 0, 5, self.config())
        g6, side = batch.save(tmp_path / "out.g6")
        assert len(g6.read_text().splitlines()) == 5
        assert '"proposal_acceptance_rate"' in side.read_text()


class TestEstimate:
    def test_pendant_edges_vs_census(self):
        est = estimate(4, 3, 0, "pendantEdges", 3000, SamplerConfig(seed=11), exact=True)
        assert est.exact == expectation(4, 3, 0, "pendantEdges")
        assert est.covers_exact()

    def test_max_degree_vs_census(self):
        est = estimate(5, 6, 0, "maxDegree", 3000, SamplerConfig(seed=12), exact=True)
        assert est.covers_exact()

    def test_triangle_copy_vs_census(self):
        def has_k3(G, g):
            return int(copies_of(cycle_graph(3), G) > 0)
        est = estimate(6, 9, 0, has_k3, 3000, SamplerConfig(seed=13), exact=True)
        assert est.exact == probability(6, 9, 0, lambda G: has_k3(G, 0))
        assert est.covers_exact()

    def test_mcmc_estimate_vs_census(self):
        cfg = SamplerConfig(method="mcmc", seed=14, burn_in=200, thinning=10)
        est = estimate(5, 6, 0, "maxDegree", 3000, cfg, exact=True)
        assert est.covers_exact()
