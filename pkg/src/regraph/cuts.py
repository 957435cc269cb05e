"""Odd edge cuts, r-graph verification and tight cuts.

Two independent routes compute minimum odd cuts: an exhaustive subset sweep
(small orders) and a Gomory-Hu tree built with Gusfield's algorithm, where
some tree edge splitting the vertices into odd parts achieves the minimum.
The test suite cross-checks the two on random inputs.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import maximum_flow

from . import kernels
from .core import Multigraph, VertexSet, boundary, popcount

BRUTE_MAX_N = 22


class CapacityError(ValueError):
    """Input exceeds a documented size bound of the chosen algorithm."""


@dataclass(frozen=True)
class OddCutCertificate:
    """A minimum odd cut: its value, one achieving side, and its edges."""

    value: int
    side: VertexSet
    edge_ids: tuple[int, ...]


@dataclass(frozen=True)
class TightCut:
    """An odd vertex set whose boundary has exactly r edges."""

    side: VertexSet
    edge_ids: tuple[int, ...]
    trivial: bool


def _check_even_order(g: Multigraph) -> None:
    if g.n < 2:
        raise ValueError("graph must have at least 2 vertices")
    if g.n % 2:
        raise ValueError("odd-order graphs have no odd cut structure of interest")


def min_odd_cut_bruteforce(g: Multigraph) -> OddCutCertificate:
    """Sweep all odd vertex subsets; even order, n <= 22 only."""
    _check_even_order(g)
    if g.n > BRUTE_MAX_N:
        raise CapacityError(f"brute-force sweep limited to n <= {BRUTE_MAX_N}")
    value, mask = kernels.min_odd_cut_sweep(g.weight_matrix())
    return OddCutCertificate(
        value=int(value), side=mask, edge_ids=boundary(g, mask).edge_ids
    )


def gomory_hu_tree(g: Multigraph) -> tuple[list[int], list[int]]:
    """A Gomory-Hu cut tree as (parent, weight) arrays, parent[0] = -1.

    The classical contraction algorithm: while some supernode holds two
    vertices, contract every other branch of the current tree, split the
    supernode along a minimum cut between two of its vertices, and reattach
    the branches to the side their contraction landed on.  Each tree edge's
    fundamental cut is then a genuine minimum cut between its endpoints,
    which the odd-cut routine relies on (a flow-equivalent tree in the style
    of Gusfield gets the values right but not the partitions).
    """
    n = g.n
    if n == 0:
        return [], []
    W0 = g.weight_matrix().astype(np.int64)
    supernodes: list[list[int]] = [list(range(n))]
    edges: list[list[int]] = []  # [a, b, w] over supernode indices

    while True:
        si = next((i for i, s in enumerate(supernodes) if len(s) > 1), -1)
        if si < 0:
            break
        s_vertices = supernodes[si]
        adj: dict[int, list[int]] = {}
        for ei, (a, b, _) in enumerate(edges):
            adj.setdefault(a, []).append(ei)
            adj.setdefault(b, []).append(ei)
        comp_of: dict[int, int] = {}
        comps: list[list[int]] = []
        for ei in adj.get(si, []):
            a, b, _ = edges[ei]
            start = b if a == si else a
            if start in comp_of:
                continue
            comp = [start]
            comp_of[start] = len(comps)
            queue = [start]
            while queue:
                x = queue.pop()
                for ej in adj.get(x, []):
                    a2, b2, _ = edges[ej]
                    y = b2 if a2 == x else a2
                    if y != si and y not in comp_of:
                        comp_of[y] = len(comps)
                        comp.append(y)
                        queue.append(y)
            comps.append(comp)
        k = len(s_vertices) + len(comps)
        node = np.empty(n, dtype=np.int64)
        for pos, v in enumerate(s_vertices):
            node[v] = pos
        for ci, comp in enumerate(comps):
            for idx in comp:
                for v in supernodes[idx]:
                    node[v] = len(s_vertices) + ci
        Z = np.zeros((k, n), dtype=np.int64)
        Z[node, np.arange(n)] = 1
        M = Z @ W0 @ Z.T
        np.fill_diagonal(M, 0)
        M32 = M.astype(np.int32)
        value, side = _min_cut(csr_matrix(M32), M32, 0, 1)
        sa = [v for v in s_vertices if (side >> int(node[v])) & 1]
        sb = [v for v in s_vertices if not (side >> int(node[v])) & 1]
        sj = len(supernodes)
        supernodes[si] = sa
        supernodes.append(sb)
        for ei in adj.get(si, []):
            a, b, _ = edges[ei]
            other = b if a == si else a
            blob = len(s_vertices) + comp_of[other]
            if not (side >> blob) & 1:
                edges[ei] = [sj if a == si else a, sj if b == si else b, edges[ei][2]]
        edges.append([si, sj, value])

    vertex_of = [s[0] for s in supernodes]
    index_of = {v: i for i, v in enumerate(vertex_of)}
    adj2: dict[int, list[tuple[int, int]]] = {}
    for a, b, w in edges:
        adj2.setdefault(a, []).append((b, w))
        adj2.setdefault(b, []).append((a, w))
    parent = [0] * n
    weight = [0] * n
    root = index_of[0]
    parent[0] = -1
    seen = {root}
    queue = [root]
    while queue:
        x = queue.pop()
        for y, w in adj2.get(x, []):
            if y not in seen:
                seen.add(y)
                parent[vertex_of[y]] = vertex_of[x]
                weight[vertex_of[y]] = w
                queue.append(y)
    return parent, weight


def _min_cut(cap: csr_matrix, W: np.ndarray, s: int, t: int) -> tuple[int, int]:
    """Min s-t cut value and the side containing s, as a bitmask."""
    res = maximum_flow(cap, s, t)
    residual = W - res.flow.toarray()
    n = W.shape[0]
    side = 1 << s
    stack = [s]
    while stack:
        v = stack.pop()
        for u in range(n):
            if residual[v, u] > 0 and not (side >> u) & 1:
                side |= 1 << u
                stack.append(u)
    return int(res.flow_value), side


def min_odd_cut_flow(g: Multigraph) -> OddCutCertificate:
    """Minimum odd cut from the fundamental cuts of a Gomory-Hu tree."""
    _check_even_order(g)
    parent, weight = gomory_hu_tree(g)
    children: list[list[int]] = [[] for _ in range(g.n)]
    for v in range(1, g.n):
        children[parent[v]].append(v)
    subtree = [0] * g.n
    order = []
    stack = [0]
    while stack:
        v = stack.pop()
        order.append(v)
        stack.extend(children[v])
    for v in reversed(order):
        m = 1 << v
        for c in children[v]:
            m |= subtree[c]
        subtree[v] = m
    best: OddCutCertificate | None = None
    for v in range(1, g.n):
        side = subtree[v]
        if popcount(side) % 2 == 0:
            continue
        cut = boundary(g, side)
        if (
            best is None
            or len(cut.edge_ids) < best.value
            or (len(cut.edge_ids) == best.value and side < best.side)
        ):
            best = OddCutCertificate(
                value=len(cut.edge_ids), side=side, edge_ids=cut.edge_ids
            )
    assert best is not None  # odd sides always exist for even order
    return best


def min_odd_cut(g: Multigraph) -> OddCutCertificate:
    """Route to the sweep on small graphs, the flow verifier otherwise."""
    if g.n <= 18:
        return min_odd_cut_bruteforce(g)
    return min_odd_cut_flow(g)


def is_r_graph(g: Multigraph, r: int) -> bool:
    """True iff g is r-regular and every odd vertex set has boundary >= r."""
    if g.regular_degree() != r:
        return False
    if g.n == 0:
        return True
    if g.n % 2:
        return False
    return min_odd_cut(g).value >= r


def tight_cuts(
    g: Multigraph, r: int, nontrivial_only: bool = False
) -> tuple[TightCut, ...]:
    """All tight cuts up to complementation; the reported side contains vertex 0."""
    _check_even_order(g)
    if g.n > BRUTE_MAX_N:
        raise CapacityError(f"tight cut enumeration limited to n <= {BRUTE_MAX_N}")
    masks = kernels.collect_odd_cuts(g.weight_matrix(), r)
    full = (1 << g.n) - 1
    out = []
    seen = set()
    for mask in masks:
        mask = int(mask)
        rep = mask if mask & 1 else (full & ~mask)
        if rep in seen:
            continue
        seen.add(rep)
        size = popcount(rep)
        trivial = size == 1 or size == g.n - 1
        if nontrivial_only and trivial:
            continue
        out.append(
            TightCut(side=rep, edge_ids=boundary(g, rep).edge_ids, trivial=trivial)
        )
    out.sort(key=lambda c: c.side)
    return tuple(out)
