"""Samplers for ``S_g(n, m)``: exact rejection sampling and an edge-swap
Markov chain.

Randomness comes from numpy's PCG64 generator seeded with a 64-bit integer;
chain ``i`` of a multi-chain run is seeded with ``seed ^ i``.

The swap chain picks a uniform edge and a uniform non-edge and swaps them
when the result still has genus at most ``g``. The proposal is symmetric, so
the uniform distribution on the chain's reachable class is stationary.
Whether that class is all of ``S^g(n, m)`` is not known in general, so every
MCMC batch is marked as unproven on that point.
"""

from __future__ import annotations

import json
import math
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Sequence

import numpy as np

from .census import GenusFilter, census_cap, expectation
from .embedding import default_budget
from .errors import SamplerError
from .graph import LabeledGraph, edge_slots, to_graph6, write_graph6
from .statistics import Statistic, resolve_statistic

SEED_MASK = (1 << 64) - 1


@dataclass(frozen=True)
class SamplerConfig:
    method: str = "rejection"
    seed: int = 0
    burn_in: int = 1000
    thinning: int = 10
    max_rejections: int = 1_000_000
    chains: int = 1
    budget: int = field(default_factory=default_budget)

    def __post_init__(self):
        if self.method not in ("rejection", "mcmc"):
            raise ValueError(f"unknown sampling method {self.method!r}")
        if not 0 <= self.seed <= SEED_MASK:
            raise ValueError("seed must be a 64-bit unsigned integer")
        if self.method == "mcmc" and (self.burn_in < 1 or self.thinning < 1):
            raise ValueError("burn-in and thinning must be at least 1")
        if self.max_rejections < 1:
            raise ValueError("max_rejections must be at least 1")
        if self.chains < 1:
            raise ValueError("chains must be at least 1")


@dataclass
class SampleBatch:
    n: int
    m: int
    g: int
    graphs: list[LabeledGraph]
    config: SamplerConfig
    acceptance: float
    proposals: int
    accepted: int
    irreducibility: str = "not applicable"
    start: str = ""

    def diagnostics(self) -> dict:
        key = "acceptance_rate" if self.config.method == "rejection" else "proposal_acceptance_rate"
        return {key: self.acceptance, "proposals": self.proposals, "accepted": self.accepted,
                "irreducibility": self.irreducibility, "start": self.start}

    def sidecar(self) -> dict:
        return {"n": self.n, "m": self.m, "g": self.g, "count": len(self.graphs),
                "config": asdict(self.config), "diagnostics": self.diagnostics()}

    def save(self, path: str | Path) -> tuple[Path, Path]:
        """Write graph6 lines to ``path`` and the JSON sidecar next to it."""
        path = Path(path)
        path.write_text(write_graph6(self.graphs))
        side = path.with_suffix(path.suffix + ".json")
        side.write_text(json.dumps(self.sidecar(), indent=2, sort_keys=True) + "\n")
        return path, side


def make_rng(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(seed & SEED_MASK))


def _empty_class(n: int, m: int, g: int) -> bool:
    return m > n * (n - 1) // 2 or (n >= 3 and m > 3 * n - 6 + 6 * g)


def rejection_sample(n: int, m: int, g: int, count: int, config: SamplerConfig,
                     member: GenusFilter | None = None) -> SampleBatch:
    """Exactly uniform draws: a uniform ``m``-subset of the edge slots,
    accepted when its genus is at most ``g``."""
    slots = edge_slots(n)
    if m > len(slots) or m < 0:
        raise SamplerError(f"m={m} exceeds C({n},2)={len(slots)}", acceptance=0.0)
    member = member or GenusFilter(config.budget)
    rng = make_rng(config.seed)
    graphs: list[LabeledGraph] = []
    attempts = rejected = 0
    while len(graphs) < count:
        attempts += 1
        pick = np.sort(rng.choice(len(slots), size=m, replace=False)) if m else ()
        G = LabeledGraph(n, tuple(slots[i] for i in pick))
        if member(G, g):
            graphs.append(G)
            continue
        rejected += 1
        if rejected >= config.max_rejections:
            raise SamplerError(
                f"gave up after {rejected} rejections for S^{g}({n},{m})",
                acceptance=len(graphs) / attempts,
            )
    rate = len(graphs) / attempts if attempts else 1.0
    return SampleBatch(n, m, g, graphs, config, rate, attempts, len(graphs))


def mcmc_step(state: LabeledGraph, g: int, rng: np.random.Generator,
              member: GenusFilter | None = None) -> LabeledGraph:
    """One swap proposal; returns the new state or ``state`` itself."""
    state, _ = _step(state, g, rng, member or GenusFilter())
    return state


def _step(state: LabeledGraph, g: int, rng: np.random.Generator,
          member: GenusFilter) -> tuple[LabeledGraph, bool]:
    edges = state.edges
    non = state.non_edges()
    if not edges or not non:
        return state, False
    e = edges[int(rng.integers(len(edges)))]
    f = non[int(rng.integers(len(non)))]
    proposal = state.swap_edge(e, f)
    if member(proposal, g):
        return proposal, True
    return state, False


def greedy_start(n: int, m: int, g: int, member: GenusFilter) -> LabeledGraph | None:
    """Add edges in lexicographic order, skipping any that break the genus
    bound, until ``m`` are placed."""
    chosen: list[tuple[int, int]] = []
    for e in edge_slots(n):
        if len(chosen) == m:
            break
        trial = LabeledGraph(n, tuple(sorted(chosen + [e])))
        if member(trial, g):
            chosen.append(e)
    if len(chosen) < m:
        return None
    return LabeledGraph(n, tuple(sorted(chosen)))


def mcmc_sample(n: int, m: int, g: int, count: int, config: SamplerConfig,
                member: GenusFilter | None = None) -> SampleBatch:
    """Burn in, then emit every ``thinning``-th state; ``count`` states are
    split over ``config.chains`` chains and merged in chain order."""
    if _empty_class(n, m, g):
        raise SamplerError(f"S^{g}({n},{m}) is empty by the edge bound", acceptance=0.0)
    member = member or GenusFilter(config.budget)
    start = greedy_start(n, m, g, member)
    how = "greedy lexicographic"
    if start is None:
        fallback = SamplerConfig("rejection", config.seed, max_rejections=config.max_rejections,
                                 budget=config.budget)
        try:
            start = rejection_sample(n, m, g, 1, fallback, member).graphs[0]
        except SamplerError as exc:
            raise SamplerError(f"no start state for S^{g}({n},{m}): {exc}", acceptance=0.0) from None
        how = "rejection fallback"
    graphs: list[LabeledGraph] = []
    proposals = accepted = 0
    per_chain = [count // config.chains + (i < count % config.chains) for i in range(config.chains)]
    for i, k in enumerate(per_chain):
        rng = make_rng(config.seed ^ i)
        state = start
        for _ in range(config.burn_in):
            state, ok = _step(state, g, rng, member)
            proposals += 1
            accepted += ok
        for _ in range(k):
            for _ in range(config.thinning):
                state, ok = _step(state, g, rng, member)
                proposals += 1
                accepted += ok
            graphs.append(state)
    rate = accepted / proposals if proposals else 0.0
    return SampleBatch(n, m, g, graphs, config, rate, proposals, accepted,
                       irreducibility="unproven", start=how)


def sample(n: int, m: int, g: int, count: int, config: SamplerConfig,
           member: GenusFilter | None = None) -> SampleBatch:
    if config.method == "rejection":
        return rejection_sample(n, m, g, count, config, member)
    return mcmc_sample(n, m, g, count, config, member)


@dataclass(frozen=True)
class Estimate:
    mean: float
    low: float
    high: float
    samples: int
    exact: Fraction | None = None

    @property
    def half_width(self) -> float:
        return (self.high - self.low) / 2

    def covers_exact(self) -> bool | None:
        if self.exact is None:
            return None
        return self.low <= float(self.exact) <= self.high


def mean_interval(values: Sequence[float], z: float = 1.96) -> tuple[float, float, float]:
    """Mean with a normal-approximation interval."""
    arr = np.asarray(values, dtype=float)
    mean = float(arr.mean())
    half = z * float(arr.std(ddof=1)) / math.sqrt(len(arr)) if len(arr) > 1 else 0.0
    return mean, mean - half, mean + half


def estimate(n: int, m: int, g: int, statistic: str | Statistic, samples: int,
             config: SamplerConfig, exact: bool = False, z: float = 1.96) -> Estimate:
    """Monte Carlo mean of a statistic; with ``exact`` the census value is
    attached for comparison when ``n`` is within the census cap."""
    stat = resolve_statistic(statistic) if isinstance(statistic, str) else statistic
    batch = sample(n, m, g, samples, config)
    values = [stat(G, g) for G in batch.graphs]
    mean, lo, hi = mean_interval(values, z)
    ref = None
    if exact and n <= census_cap(g):
        ref = expectation(n, m, g, stat)
    return Estimate(mean, lo, hi, len(values), ref)


def batch_lines(batch: SampleBatch) -> list[str]:
    return [to_graph6(G) for G in batch.graphs]
