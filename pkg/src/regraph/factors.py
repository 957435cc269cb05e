"""Perfect matchings, edge-chromatic class, matching packings, 2-matchings.

Matchings are tuples of edge ids, sorted ascending.  The streaming order of
perfect_matchings is fixed: repeatedly match the lowest uncovered vertex,
trying its incident edges in ascending id, which the batch kernels mirror.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Optional, Sequence

import numpy as np
from scipy.optimize import linprog
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import maximum_bipartite_matching

from . import kernels
from .core import Multigraph, VertexSet, delete_vertices

PerfectMatching = tuple[int, ...]


class DomainError(ValueError):
    """A precondition of the requested predicate does not hold."""


class SearchCapExceeded(RuntimeError):
    """A bounded decomposition search ran out of its node budget."""


def _edge_arrays(g: Multigraph) -> tuple[np.ndarray, np.ndarray]:
    eu = np.fromiter((e[0] for e in g.edges), dtype=np.int64, count=g.m)
    ev = np.fromiter((e[1] for e in g.edges), dtype=np.int64, count=g.m)
    return eu, ev


def perfect_matchings(g: Multigraph) -> Iterator[PerfectMatching]:
    """Stream all perfect matchings in the deterministic search order."""
    from .kernels import _numpy as _ref

    eu, ev = _edge_arrays(g)
    avail = [True] * g.m
    yield from _ref._pm_iter(g.n, list(eu), list(ev), avail, -1, False)


def pm_batch(
    g: Multigraph,
    avail: Optional[Sequence[bool]] = None,
    must_edge: int = -1,
    collapse: bool = False,
    cap: int = 1 << 20,
) -> tuple[list[PerfectMatching], bool]:
    """All perfect matchings within the available edges, kernel-backed."""
    eu, ev = _edge_arrays(g)
    if avail is None:
        avail_arr = np.ones(g.m, dtype=np.bool_)
    else:
        avail_arr = np.asarray(avail, dtype=np.bool_)
    if g.n > 62:
        backend = kernels._numpy  # int64 coverage masks cap the jit path
    else:
        backend = kernels
    pms, overflow = backend.enumerate_pms(
        g.n, eu, ev, avail_arr, must_edge, collapse, cap
    )
    return [tuple(int(x) for x in row) for row in pms], overflow


def has_pm_avoiding(
    g: Multigraph, forbidden: Sequence[int]
) -> Optional[PerfectMatching]:
    """A perfect matching avoiding the given edge ids, or None."""
    avail = np.ones(g.m, dtype=np.bool_)
    for e in forbidden:
        avail[e] = False
    found, _ = pm_batch(g, avail, collapse=True, cap=1)
    return found[0] if found else None


def _two_regular_split(
    g: Multigraph, avail: list[bool]
) -> Optional[list[PerfectMatching]]:
    """Split an available 2-regular subgraph into two perfect matchings.

    Components are circuits; a split exists iff all circuit lengths are even
    (parallel pairs count as 2-circuits).  Returns None otherwise.
    """
    inc = [[e for e in g.incident(v) if avail[e]] for v in range(g.n)]
    if any(len(x) != 2 for x in inc):
        return None
    color = {}
    for start in range(g.n):
        e0 = inc[start][0]
        if e0 in color:
            continue
        v = start
        e = e0
        c = 0
        while True:
            color[e] = c
            u = g.other_end(e, v)
            nxt = inc[u][0] if inc[u][1] == e else inc[u][1]
            if nxt == e0:
                if c == 0:  # odd circuit closes on the same color
                    return None
                break
            v = u
            e = nxt
            c ^= 1
    m0 = tuple(sorted(e for e, c in color.items() if c == 0))
    m1 = tuple(sorted(e for e, c in color.items() if c == 1))
    return [m0, m1]


def _decompose(g: Multigraph, avail: list[bool], left: int, budget: list[int]):
    if budget[0] <= 0:
        raise SearchCapExceeded
    budget[0] -= 1
    if left == 0:
        return [] if not any(avail) else None
    if left == 1:
        pm = tuple(sorted(e for e in range(g.m) if avail[e]))
        cover = [0] * g.n
        for e in pm:
            u, v = g.edges[e]
            cover[u] += 1
            cover[v] += 1
        return [pm] if all(c == 1 for c in cover) else None
    if left == 2:
        return _two_regular_split(g, avail)
    e0 = next((e for e in range(g.m) if avail[e]), -1)
    if e0 < 0:
        return None
    candidates, overflow = pm_batch(g, avail, must_edge=e0, collapse=True)
    if overflow:
        raise SearchCapExceeded
    budget[0] -= len(candidates)
    for pm in candidates:
        for e in pm:
            avail[e] = False
        rest = _decompose(g, avail, left - 1, budget)
        for e in pm:
            avail[e] = True
        if rest is not None:
            return [pm] + rest
    return None


def is_class1(
    g: Multigraph, node_cap: Optional[int] = None
) -> tuple[bool, Optional[list[PerfectMatching]]]:
    """Decide whether a regular graph decomposes into r perfect matchings.

    The search always extends the lowest available edge, so any decomposition
    is found in a canonical order; parallel copies are collapsed by an
    exchange argument.  Returns (True, classes) or (False, None).  A node
    cap turns an unfinished search into SearchCapExceeded.
    """
    r = g.regular_degree()
    if r is None:
        raise DomainError("edge-chromatic class is defined for regular graphs")
    if g.n == 0:
        return True, []
    if g.n % 2:
        return False, None
    budget = [node_cap if node_cap is not None else (1 << 62)]
    witness = _decompose(g, [True] * g.m, r, budget)
    if witness is None:
        return False, None
    return True, witness


def is_class2(g: Multigraph) -> bool:
    return not is_class1(g)[0]


def pi(g: Multigraph) -> tuple[int, list[PerfectMatching]]:
    """Maximum number of pairwise disjoint perfect matchings, with witness.

    Branch and bound: successive matchings are forced to use an increasing
    edge id at vertex 0, which enumerates each packing once; the remaining
    minimum available degree bounds the achievable packing size.
    """
    if g.n == 0 or g.n % 2:
        return 0, []
    avail = [True] * g.m
    best: list[PerfectMatching] = []
    star0 = g.incident(0)

    def min_avail_degree() -> int:
        worst = g.m
        for v in range(g.n):
            d = sum(1 for e in g.incident(v) if avail[e])
            if d < worst:
                worst = d
        return worst

    def extend(cur: list[PerfectMatching], min_eid: int) -> None:
        nonlocal best
        if len(cur) > len(best):
            best = list(cur)
        if len(cur) + min_avail_degree() <= len(best):
            return
        seen_pairs = set()
        for e in star0:
            if e < min_eid or not avail[e]:
                continue
            if g.edges[e] in seen_pairs:  # parallel copies are interchangeable
                continue
            seen_pairs.add(g.edges[e])
            candidates, _ = pm_batch(g, avail, must_edge=e, collapse=True)
            for pm in candidates:
                for x in pm:
                    avail[x] = False
                extend(cur + [pm], e + 1)
                for x in pm:
                    avail[x] = True

    extend([], 0)
    return len(best), best


@dataclass(frozen=True)
class TwoMatchingFactor:
    """A spanning collection of single edges and circuits of length >= 3.

    Single edges cover their two endpoints on their own; every other vertex
    lies on exactly one circuit.  Components are ('edge', (eid,)) or
    ('cycle', (eids in circuit order)).
    """

    components: tuple[tuple[str, tuple[int, ...]], ...]


def perfect_2_matching(g: Multigraph) -> Optional[TwoMatchingFactor]:
    """Find a {K_2, circuit} spanning factor via the bipartite double cover.

    A perfect matching of the double cover gives every vertex weight 2 over
    its parallel classes; weight-2 classes become single-edge components and
    weight-1 classes close into circuits (2-circuits collapse to an edge).
    """
    if g.n == 0:
        return TwoMatchingFactor(components=())
    classes = g.parallel_classes()
    pairs = list(classes)
    rows = [p[0] for p in pairs] + [p[1] for p in pairs]
    cols = [p[1] for p in pairs] + [p[0] for p in pairs]
    data = np.ones(len(rows), dtype=np.int8)
    bi = csr_matrix((data, (rows, cols)), shape=(g.n, g.n))
    match = maximum_bipartite_matching(bi, perm_type="column")
    if (match < 0).any():
        return None
    x = {}
    for u, v in pairs:
        x[(u, v)] = int(match[u] == v) + int(match[v] == u)
    comps = []
    used = set()
    for (u, v), val in sorted(x.items()):
        if val == 2:
            comps.append(("edge", (classes[(u, v)][0],)))
            used.add((u, v))
    deg1 = {}
    for (u, v), val in x.items():
        if val == 1:
            deg1.setdefault(u, []).append((u, v))
            deg1.setdefault(v, []).append((u, v))
    visited = set()
    for start in sorted(deg1):
        if start in visited:
            continue
        cyc = []
        v = start
        prev = None
        while True:
            visited.add(v)
            a, b = deg1[v]
            step = b if a == prev else a
            cyc.append(classes[step][0])
            v = step[0] + step[1] - v
            prev = step
            if v == start:
                break
        if len(cyc) == 2:  # parallel pair walked as a 2-circuit
            comps.append(("edge", (cyc[0],)))
        else:
            comps.append(("cycle", tuple(cyc)))
    return TwoMatchingFactor(components=tuple(comps))


REGULARIZABLE_MAX_N = 16


def is_regularizable(g: Multigraph) -> bool:
    """True iff every nonempty vertex set S isolates fewer than |S| vertices.

    This is the deficiency form of the condition; the classical equivalences
    (multiplying edges to reach a regular graph, spanning {K_2, circuit}
    factors of g and all its vertex-deleted subgraphs) are exercised against
    it in the tests.
    """
    if not g.is_simple():
        raise DomainError("regularizability predicate expects a simple graph")
    from .core import is_connected

    if not is_connected(g) or g.n < 2:
        raise DomainError("regularizability predicate expects a connected graph")
    if g.n > REGULARIZABLE_MAX_N:
        raise DomainError(f"regularizability sweep limited to n <= {REGULARIZABLE_MAX_N}")
    nbr = [0] * g.n
    for u, v in g.edges:
        nbr[u] |= 1 << v
        nbr[v] |= 1 << u
    full = (1 << g.n) - 1
    for s in range(1, full + 1):
        isolated = 0
        rest = full & ~s
        m = rest
        while m:
            low = m & -m
            v = low.bit_length() - 1
            if nbr[v] & ~s == 0:
                isolated += 1
            m ^= low
        if isolated >= s.bit_count():
            return False
    return True


def regularizable_lp(g: Multigraph) -> bool:
    """True iff some edge multiplication of g is regular, by LP feasibility.

    Feasibility of {x_e >= 1, sum of x_e at every vertex = t} over the
    rationals is equivalent to the integer version after clearing
    denominators, so a plain linear program decides regularizability.
    """
    if g.m == 0:
        return g.n <= 1
    rows = []
    cols = []
    for i, (u, v) in enumerate(g.edges):
        rows.extend([u, v])
        cols.extend([i, i])
    a_eq = np.zeros((g.n, g.m + 1))
    a_eq[rows, cols] = 1.0
    a_eq[:, g.m] = -1.0
    res = linprog(
        c=np.zeros(g.m + 1),
        A_eq=a_eq,
        b_eq=np.zeros(g.n),
        bounds=[(1, None)] * g.m + [(1, None)],
        method="highs",
    )
    return res.status == 0


def two_matching_deleted_everywhere(g: Multigraph) -> bool:
    """g and every vertex-deleted subgraph admit a perfect 2-matching."""
    if perfect_2_matching(g) is None:
        return False
    for v in range(g.n):
        if perfect_2_matching(delete_vertices(g, 1 << v)) is None:
            return False
    return True
