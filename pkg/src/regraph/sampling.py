"""Seeded random instances for the experiment harness.

All samplers take an explicit random.Random and are rejection-based:
configuration-model cubic graphs conditioned on looplessness, one-factor
unions on top of them for higher degrees, and sparse multigraphs for
verifier cross-checks.  Distributions are documented, not uniform over
isomorphism classes; uniformity is a non-goal.
"""

from __future__ import annotations

import random

from .core import Multigraph, is_connected
from .cuts import is_r_graph


def child_rng(seed: int, index: int) -> random.Random:
    """Independent stream for instance number index of a seeded run."""
    return random.Random(seed * 1_000_003 + index)


def random_matching(n: int, rng: random.Random) -> list[tuple[int, int]]:
    """A uniformly random one-factor of the complete graph on n vertices."""
    if n % 2:
        raise ValueError("even order required")
    verts = list(range(n))
    rng.shuffle(verts)
    return [
        tuple(sorted((verts[2 * i], verts[2 * i + 1]))) for i in range(n // 2)
    ]


def random_cubic(n: int, rng: random.Random, tries: int = 10000) -> Multigraph:
    """Configuration-model cubic multigraph conditioned on looplessness."""
    if n % 2 or n < 4:
        raise ValueError("cubic graphs need even order at least 4")
    for _ in range(tries):
        stubs = [v for v in range(n) for _ in range(3)]
        rng.shuffle(stubs)
        pairs = [
            (stubs[2 * i], stubs[2 * i + 1]) for i in range(3 * n // 2)
        ]
        if any(u == v for u, v in pairs):
            continue
        return Multigraph(n, pairs)
    raise RuntimeError("loopless configuration not found")


def random_rgraph(
    r: int,
    n: int,
    rng: random.Random,
    connected: bool = True,
    tries: int = 2000,
) -> Multigraph:
    """Random r-graph: cubic base plus r-3 one-factors, with rejection.

    Candidates failing connectivity or the odd-cut condition are redrawn.
    """
    if r < 3:
        raise ValueError("degree at least 3 required")
    for _ in range(tries):
        g = random_cubic(n, rng)
        edges = list(g.edges)
        for _ in range(r - 3):
            edges += random_matching(n, rng)
        cand = Multigraph(n, edges)
        if connected and not is_connected(cand):
            continue
        if not is_r_graph(cand, r):
            continue
        return cand
    raise RuntimeError("no r-graph found within the retry budget")


def random_class1(
    r: int,
    n: int,
    rng: random.Random,
    connected: bool = True,
    tries: int = 2000,
) -> Multigraph:
    """Union of r random one-factors; class 1 by construction."""
    for _ in range(tries):
        edges: list[tuple[int, int]] = []
        for _ in range(r):
            edges += random_matching(n, rng)
        cand = Multigraph(n, edges)
        if connected and not is_connected(cand):
            continue
        return cand
    raise RuntimeError("no connected one-factor union found")


def random_multigraph(
    n: int, rng: random.Random, density: float = 0.4, max_mult: int = 3
) -> Multigraph:
    """Sparse random multigraph; may be disconnected or irregular."""
    edges: list[tuple[int, int]] = []
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < density:
                mult = 1
                while mult < max_mult and rng.random() < 0.3:
                    mult += 1
                edges += [(u, v)] * mult
    return Multigraph(n, edges)
