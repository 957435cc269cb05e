"""Exhaustive generation of small regular multigraphs.

Families are grown by local augmentation from minimal seeds: subdivision
for degree 2; edge pair subdivision with a join, double-bonded path
insertion, and disjoint triple edges for degree 3; vertex insertion across
two edges, triple-bonded pair insertion, and disjoint quadruple edges for
degree 4.  Every loopless regular multigraph of the given degree reduces
to a smaller one by inverting one of its ops, so level-by-level closure
with certificate deduplication is exhaustive.  A direct multiplicity
search over tiny orders is kept alongside as an independent check.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass
from typing import Iterator, Optional

from .core import Multigraph, disjoint_union, is_connected
from .cuts import is_r_graph
from .factors import is_class1
from .iso import canonical_form


@dataclass(frozen=True)
class GenSpec:
    """Family selector: degree, max order, and optional filters."""

    r: int
    n_max: int
    connected: Optional[bool] = None
    r_graph: Optional[bool] = None
    simple: Optional[bool] = None
    edge_class: Optional[int] = None  # 1 or 2


def _bond(mult: int) -> Multigraph:
    return Multigraph(2, [(0, 1)] * mult)


def _subdivide(g: Multigraph, e: int) -> Multigraph:
    u, v = g.edges[e]
    w = g.n
    edges = [g.edges[i] for i in range(g.m) if i != e]
    edges += [(u, w), (v, w)]
    return Multigraph(g.n + 1, edges)


def _aug_degree2(g: Multigraph) -> Iterator[tuple[int, Multigraph]]:
    for e in range(g.m):
        yield 1, _subdivide(g, e)
    yield 2, disjoint_union(g, _bond(2))


def _aug_degree3(g: Multigraph) -> Iterator[tuple[int, Multigraph]]:
    n = g.n
    for e, f in itertools.combinations(range(g.m), 2):
        u1, v1 = g.edges[e]
        u2, v2 = g.edges[f]
        edges = [g.edges[i] for i in range(g.m) if i not in (e, f)]
        edges += [(u1, n), (v1, n), (u2, n + 1), (v2, n + 1), (n, n + 1)]
        yield 2, Multigraph(n + 2, edges)
    for e in range(g.m):
        u, v = g.edges[e]
        edges = [g.edges[i] for i in range(g.m) if i != e]
        edges += [(u, n), (n, n + 1), (n, n + 1), (n + 1, v)]
        yield 2, Multigraph(n + 2, edges)
    yield 2, disjoint_union(g, _bond(3))


def _aug_degree4(g: Multigraph) -> Iterator[tuple[int, Multigraph]]:
    n = g.n
    for e, f in itertools.combinations(range(g.m), 2):
        u1, v1 = g.edges[e]
        u2, v2 = g.edges[f]
        edges = [g.edges[i] for i in range(g.m) if i not in (e, f)]
        edges += [(u1, n), (v1, n), (u2, n), (v2, n)]
        yield 1, Multigraph(n + 1, edges)
    for e in range(g.m):
        u, v = g.edges[e]
        edges = [g.edges[i] for i in range(g.m) if i != e]
        edges += [(u, n), (n, n + 1), (n, n + 1), (n, n + 1), (n + 1, v)]
        yield 2, Multigraph(n + 2, edges)
    yield 2, disjoint_union(g, _bond(4))


_AUGMENTERS = {2: _aug_degree2, 3: _aug_degree3, 4: _aug_degree4}
_SEED_MULT = {2: 2, 3: 3, 4: 4}
_N_MAX_BOUND = {2: 14, 3: 12, 4: 10}


def _passes(g: Multigraph, spec: GenSpec) -> bool:
    if spec.connected is not None and is_connected(g) != spec.connected:
        return False
    if spec.simple is not None and g.is_simple() != spec.simple:
        return False
    if spec.r_graph is not None and is_r_graph(g, spec.r) != spec.r_graph:
        return False
    if spec.edge_class is not None:
        if g.n % 2:
            cls = 2
        else:
            cls = 1 if is_class1(g)[0] else 2
        if cls != spec.edge_class:
            return False
    return True


def generate(spec: GenSpec) -> list[Multigraph]:
    """All loopless spec.r-regular multigraphs up to spec.n_max, filtered.

    Output is sorted by order then canonical certificate.
    """
    if spec.r not in _AUGMENTERS:
        raise ValueError("generation is implemented for degrees 2, 3 and 4")
    if spec.n_max % 2:
        raise ValueError("n_max must be even")
    if spec.n_max > _N_MAX_BOUND[spec.r]:
        raise ValueError(
            f"n_max {spec.n_max} exceeds the bound {_N_MAX_BOUND[spec.r]} for r={spec.r}"
        )
    if spec.n_max < 2:
        return []
    aug = _AUGMENTERS[spec.r]
    pools: dict[int, dict[bytes, Multigraph]] = {n: {} for n in range(2, spec.n_max + 1)}
    seed = _bond(_SEED_MULT[spec.r])
    pools[2][canonical_form(seed).certificate] = seed
    for n in range(2, spec.n_max + 1):
        for src_n in (n - 1, n - 2):
            if src_n < 2:
                continue
            for g in pools[src_n].values():
                for delta, h in aug(g):
                    if src_n + delta != n:
                        continue
                    cert = canonical_form(h).certificate
                    if cert not in pools[n]:
                        pools[n][cert] = h
    out: list[Multigraph] = []
    for n in range(2, spec.n_max + 1):
        for cert in sorted(pools[n]):
            g = pools[n][cert]
            if _passes(g, spec):
                out.append(g)
    return out


def brute_regular_multigraphs(r: int, n: int) -> list[Multigraph]:
    """Direct search over edge multiplicity assignments, deduplicated.

    Independent of the augmentation route; intended for cross-checks at
    tiny orders.
    """
    pairs = list(itertools.combinations(range(n), 2))
    deg = [0] * n
    found: dict[bytes, Multigraph] = {}

    def rec(i: int, acc: list[int]) -> None:
        if i == len(pairs):
            if all(d == r for d in deg):
                edges = []
                for (u, v), mult in zip(pairs, acc):
                    edges += [(u, v)] * mult
                g = Multigraph(n, edges)
                cert = canonical_form(g).certificate
                if cert not in found:
                    found[cert] = g
            return
        u, v = pairs[i]
        cap = min(r - deg[u], r - deg[v])
        for mult in range(cap + 1):
            deg[u] += mult
            deg[v] += mult
            rec(i + 1, acc + [mult])
            deg[u] -= mult
            deg[v] -= mult

    rec(0, [])
    return [found[c] for c in sorted(found)]


@functools.cache
def all_simple_graphs(n_max: int) -> dict[int, list[Multigraph]]:
    """Every simple graph up to n_max vertices, one per isomorphism class.

    Grown by attaching a new vertex with every possible neighborhood.  The
    result is cached and must be treated as read-only.
    """
    pools: dict[int, dict[bytes, Multigraph]] = {}
    k1 = Multigraph(1, [])
    pools[1] = {canonical_form(k1).certificate: k1}
    for n in range(2, n_max + 1):
        level: dict[bytes, Multigraph] = {}
        for g in pools[n - 1].values():
            for nb in range(1 << (n - 1)):
                edges = list(g.edges) + [
                    (u, n - 1) for u in range(n - 1) if (nb >> u) & 1
                ]
                h = Multigraph(n, edges)
                cert = canonical_form(h).certificate
                if cert not in level:
                    level[cert] = h
        pools[n] = level
    return {n: [pools[n][c] for c in sorted(pools[n])] for n in pools}
