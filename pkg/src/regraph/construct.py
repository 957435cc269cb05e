"""Constructions on regular multigraphs.

Fixed Petersen labeling, matching powers, vertex lifts with the cut
preservation certificate, vertex expansions by complete bipartite gadgets
together with their natural colorings, edge replacement products, and the
simple class-2 family built from the matching power by local substitution.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass
from typing import Optional, Sequence

from . import kernels
from .core import (
    Multigraph,
    VertexSet,
    bits,
    boundary,
    contract,
    delete_vertices,
    is_connected,
    popcount,
)
from .cuts import CapacityError, is_r_graph
from .factors import perfect_matchings
from .hcoloring import HColoring, verify_hcoloring

LIFT_MAX_N = 22


def petersen() -> Multigraph:
    """Petersen graph: outer 5-cycle 0..4, spokes, inner 5-cycle 5..9 at step 2.

    Edge ids: outer 0..4, spokes 5..9, inner 10..14.
    """
    edges = [(i, (i + 1) % 5) for i in range(5)]
    edges += [(i, i + 5) for i in range(5)]
    edges += [(5 + i, 5 + ((i + 2) % 5)) for i in range(5)]
    return Multigraph(10, edges)


@functools.lru_cache(maxsize=1)
def petersen_pms() -> tuple[tuple[int, ...], ...]:
    """The six perfect matchings, sorted lexicographically by edge id tuple."""
    pms = sorted(perfect_matchings(petersen()))
    assert len(pms) == 6
    return tuple(pms)


def p_power(counts: Sequence[int]) -> Multigraph:
    """Petersen plus counts[i] extra copies of its i-th perfect matching."""
    if len(counts) != 6 or any(c < 0 for c in counts):
        raise ValueError("need six nonnegative matching counts")
    p = petersen()
    edges = list(p.edges)
    for c, pm in zip(counts, petersen_pms()):
        for _ in range(c):
            edges.extend(p.edges[e] for e in pm)
    return Multigraph(p.n, edges)


def add_one_factor(g: Multigraph, pairs: Sequence[tuple[int, int]]) -> Multigraph:
    """Append a perfect matching given as vertex pairs."""
    seen = 0
    for u, v in pairs:
        if u == v:
            raise ValueError("matching pair repeats a vertex")
        m = (1 << u) | (1 << v)
        if seen & m:
            raise ValueError("matching pairs overlap")
        seen |= m
    if seen != (1 << g.n) - 1:
        raise ValueError("pairs do not cover every vertex")
    return Multigraph(g.n, list(g.edges) + [tuple(sorted(p)) for p in pairs])


@functools.lru_cache(maxsize=None)
def partitions_count(n: int, k: int) -> int:
    """Partitions of n into at most k parts."""
    if n == 0:
        return 1
    if k == 0 or n < 0:
        return 0
    return partitions_count(n, k - 1) + partitions_count(n - k, k)


def partitions_list(n: int, k: int) -> list[tuple[int, ...]]:
    """Non-increasing k-tuples (zero padded) summing to n."""
    out: list[tuple[int, ...]] = []

    def rec(remaining: int, max_part: int, acc: list[int]) -> None:
        if len(acc) == k:
            if remaining == 0:
                out.append(tuple(acc))
            return
        slots = k - len(acc)
        for part in range(min(max_part, remaining), -1, -1):
            if part * slots < remaining:
                break
            rec(remaining - part, part, acc + [part])

    rec(n, n, [])
    return out


def compositions(n: int, k: int):
    """Ordered k-tuples of nonnegative integers summing to n."""
    if k == 0:
        if n == 0:
            yield ()
        return
    for first in range(n + 1):
        for rest in compositions(n - first, k - 1):
            yield (first,) + rest


def lift(g: Multigraph, e1: int, e2: int) -> Multigraph:
    """Replace edges xy, xz sharing exactly one endpoint by the edge yz.

    The shared vertex is removed if the lift leaves it isolated; remaining
    vertices keep their relative order.
    """
    if e1 == e2:
        raise ValueError("need two distinct edges")
    s1, s2 = set(g.edges[e1]), set(g.edges[e2])
    common = s1 & s2
    if len(common) != 1:
        raise ValueError("edges must share exactly one endpoint")
    x = common.pop()
    y = (s1 - {x}).pop()
    z = (s2 - {x}).pop()
    edges = [g.edges[e] for e in range(g.m) if e not in (e1, e2)]
    edges.append(tuple(sorted((y, z))))
    res = Multigraph(g.n, edges)
    if res.degree(x) == 0:
        res = delete_vertices(res, 1 << x)
    return res


@dataclass(frozen=True)
class LiftingStep:
    """One accepted lift at the contracted vertex."""

    vertex: int
    pair: tuple[int, int]  # edge ids in the graph before this step
    created: int  # id of the new edge in the graph after this step
    position: int  # rank of the pair in the scan order


def lift_to_rgraph(
    g: Multigraph, x: VertexSet, r: int
) -> tuple[Multigraph, list[LiftingStep]]:
    """Contract the side x and lift the new vertex down to degree r (or away).

    Each step scans pairs of the contracted vertex's incident edges and takes
    the first lift that keeps the graph connected with all odd cuts avoiding
    that vertex still of size >= r.  For even |x| the vertex disappears
    entirely.
    """
    if g.regular_degree() != r:
        raise ValueError("graph must be r-regular")
    if not is_connected(g):
        raise ValueError("graph must be connected")
    k = popcount(x)
    if k == 0 or x >> g.n or k == g.n:
        raise ValueError("x must be a nonempty proper vertex set of g")
    cur, w = contract(g, x)
    if cur.n > LIFT_MAX_N:
        raise CapacityError(
            f"contracted order {cur.n} exceeds the sweep bound {LIFT_MAX_N}"
        )
    d = cur.degree(w)
    if k % 2 == 0:
        if d % 2:
            raise ValueError("even side with odd boundary, input is not r-regular")
        target_steps = d // 2
    else:
        if (d - r) % 2 or d < r:
            raise ValueError("odd side boundary incompatible with degree r")
        target_steps = (d - r) // 2

    steps: list[LiftingStep] = []
    for _ in range(target_steps):
        inc = cur.incident(w)
        chosen = None
        for i, (e1, e2) in enumerate(itertools.combinations(inc, 2)):
            y = cur.other_end(e1, w)
            z = cur.other_end(e2, w)
            if y == z:  # lifting parallel edges would create a loop
                continue
            cand = lift(cur, e1, e2)
            if not is_connected(cand):
                continue
            forbid = w if cand.n == cur.n else -1
            value, _ = kernels.min_odd_cut_sweep(cand.weight_matrix(), forbid)
            if value != -1 and value < r:
                continue
            chosen = (i, e1, e2, cand)
            break
        if chosen is None:
            raise RuntimeError("no admissible lift at this step; input is not an r-graph")
        i, e1, e2, cand = chosen
        steps.append(
            LiftingStep(vertex=w, pair=(e1, e2), created=cand.m - 1, position=i)
        )
        cur = cand

    if k % 2 == 0:
        assert cur.n == g.n - k, "contracted vertex should have vanished"
    else:
        assert cur.degree(w) == r
    if not is_r_graph(cur, r):
        raise RuntimeError("lift sequence left a graph violating the cut condition")
    return cur, steps


def _substitute(
    g: Multigraph, v: int, gadget: Multigraph, ports: Sequence[int]
) -> Multigraph:
    """Replace vertex v by a gadget, re-attaching star edge k at ports[k].

    Surviving vertices are densified in order; the gadget block follows.
    """
    star = g.incident(v)
    if len(ports) != len(star):
        raise ValueError("one port per star edge required")
    remap = {}
    nxt = 0
    for u in range(g.n):
        if u != v:
            remap[u] = nxt
            nxt += 1
    base = nxt
    edges = []
    for e in range(g.m):
        a, b = g.edges[e]
        if v in (a, b):
            continue
        edges.append((remap[a], remap[b]))
    for k, e in enumerate(star):
        u = g.other_end(e, v)
        edges.append(tuple(sorted((remap[u], base + ports[k]))))
    for a, b in gadget.edges:
        edges.append((base + a, base + b))
    return Multigraph(base + gadget.n, edges)


def meredith_extension(
    g: Multigraph, v: int, pairing: Optional[Sequence[int]] = None
) -> Multigraph:
    """Expand one degree-r vertex into a complete bipartite r by r-1 gadget.

    pairing[k] names the gadget vertex on the r side receiving star edge k;
    the default is the identity.
    """
    r = g.degree(v)
    if r < 2:
        raise ValueError("vertex degree must be at least 2")
    if pairing is None:
        pairing = list(range(r))
    if sorted(pairing) != list(range(r)):
        raise ValueError("pairing must be a permutation of the r side")
    gadget = Multigraph(
        2 * r - 1, [(i, r + j) for i in range(r) for j in range(r - 1)]
    )
    return _substitute(g, v, gadget, list(pairing))


@dataclass(frozen=True)
class MeredithExpansion:
    """Every vertex expanded at once, with the bookkeeping for its coloring."""

    graph: Multigraph
    blocks: tuple[VertexSet, ...]  # new-vertex mask per original vertex
    natural_f: tuple[int, ...]  # new edge id -> original edge id
    natural_f_V: tuple[int, ...]  # new vertex -> original vertex

    def block_sides(self) -> tuple[VertexSet, ...]:
        return self.blocks


def meredith_expand_all(g: Multigraph) -> MeredithExpansion:
    """Expand every vertex of an r-regular graph; the result is simple r-regular.

    New vertex block for original v starts at v*(2r-1): first the r outer
    vertices (one per star slot), then the r-1 inner ones.  Edges: one
    carrier per original edge joining the matching outer vertices, then all
    gadget edges.  The gadget edge between outer slot i and inner slot j is
    colored by star edge (i+1+j) mod r, which completes each star bijection.
    """
    r = g.regular_degree()
    if r is None or r < 2:
        raise ValueError("graph must be r-regular with r >= 2")
    block = 2 * r - 1

    def outer(v: int, i: int) -> int:
        return v * block + i

    def inner(v: int, j: int) -> int:
        return v * block + r + j

    slot = {}
    for v in range(g.n):
        for k, e in enumerate(g.incident(v)):
            slot[(v, e)] = k

    edges = []
    f = []
    for e in range(g.m):
        u, v = g.edges[e]
        edges.append(tuple(sorted((outer(u, slot[(u, e)]), outer(v, slot[(v, e)])))))
        f.append(e)
    for v in range(g.n):
        star = g.incident(v)
        for i in range(r):
            for j in range(r - 1):
                edges.append((outer(v, i), inner(v, j)))
                f.append(star[(i + 1 + j) % r])
    graph = Multigraph(g.n * block, edges)
    blocks = tuple(((1 << block) - 1) << (v * block) for v in range(g.n))
    f_V = tuple(v for v in range(g.n) for _ in range(block))
    return MeredithExpansion(
        graph=graph, blocks=blocks, natural_f=tuple(f), natural_f_V=f_V
    )


def meredith_natural_coloring(g: Multigraph, exp: MeredithExpansion) -> HColoring:
    """The coloring of the expansion by the original graph, verified."""
    col = HColoring(f=exp.natural_f, f_V=exp.natural_f_V)
    res = verify_hcoloring(exp.graph, g, col)
    assert res.ok, res
    return col


def class1_coloring(g: Multigraph, host: Multigraph, u: int) -> HColoring:
    """Color a class-1 r-regular graph by any host star, constantly at u."""
    from .factors import DomainError, is_class1

    r = g.regular_degree()
    if r is None or host.degree(u) != r:
        raise DomainError("host vertex degree must match the regular degree")
    ok, classes = is_class1(g)
    if not ok:
        raise DomainError("graph is not class 1")
    star = host.incident(u)
    f = [-1] * g.m
    for i, cls in enumerate(classes):
        for e in cls:
            f[e] = star[i]
    col = HColoring(f=tuple(f), f_V=(u,) * g.n)
    res = verify_hcoloring(g, host, col)
    assert res.ok, res
    return col


def replace_edge(
    g: Multigraph,
    e: int,
    g2: Multigraph,
    e2: int,
    swap: bool = False,
) -> Multigraph:
    """Delete e and e2, then join the freed endpoint pairs across the two graphs.

    Default pairing joins smaller endpoint to smaller endpoint; swap crosses.
    """
    x, y = g.edges[e]
    x2, y2 = g2.edges[e2]
    n = g.n
    edges = [g.edges[i] for i in range(g.m) if i != e]
    edges += [(a + n, b + n) for i, (a, b) in enumerate(g2.edges) if i != e2]
    if swap:
        edges += [(x, y2 + n), (y, x2 + n)]
    else:
        edges += [(x, x2 + n), (y, y2 + n)]
    return Multigraph(n + g2.n, edges)


def replace_all(
    g: Multigraph,
    g2: Multigraph,
    e2: int,
    swaps: Optional[Sequence[bool]] = None,
) -> Multigraph:
    """Replace every edge of g by a fresh copy of g2 minus e2.

    The copy for edge i occupies vertices n + i*|g2| onward; its freed
    endpoints attach to the original endpoints, smaller to smaller unless
    swaps[i] crosses that pair.
    """
    x2, y2 = g2.edges[e2]
    n = g.n
    block = g2.n
    if swaps is None:
        swaps = [False] * g.m
    if len(swaps) != g.m:
        raise ValueError("one wiring flag per edge of g required")
    edges: list[tuple[int, int]] = []
    for i, (x, y) in enumerate(g.edges):
        base = n + i * block
        edges += [
            (base + a, base + b) for j, (a, b) in enumerate(g2.edges) if j != e2
        ]
        if swaps[i]:
            edges += [(x, base + y2), (y, base + x2)]
        else:
            edges += [(x, base + x2), (y, base + y2)]
    return Multigraph(n + g.m * block, edges)


def _complete(k: int) -> Multigraph:
    return Multigraph(k, [(i, j) for i in range(k) for j in range(i + 1, k)])


def _complete_minus_pm(k: int) -> Multigraph:
    if k % 2:
        raise ValueError("even order required")
    removed = {(2 * i, 2 * i + 1) for i in range(k // 2)}
    edges = [
        (i, j)
        for i in range(k)
        for j in range(i + 1, k)
        if (i, j) not in removed
    ]
    return Multigraph(k, edges)


def simple_class2(r: int) -> Multigraph:
    """Simple r-regular class-2 graph from the matching power of the Petersen graph.

    Start from Petersen plus r-3 copies of one perfect matching, then
    substitute the smaller endpoint of each matching edge by a complete
    graph minus a vertex (r odd) or a complete graph minus a perfect
    matching minus a vertex (r even).  Order 5(r+1) resp. 5(r+2).
    """
    if r < 4:
        raise ValueError("r must be at least 4")
    base = p_power((r - 3, 0, 0, 0, 0, 0))
    pm = petersen_pms()[0]
    p = petersen()
    targets = sorted(min(p.edges[e]) for e in pm)
    if r % 2:
        huge = _complete(r + 1)
    else:
        huge = _complete_minus_pm(r + 2)
    gadget = delete_vertices(huge, 1 << 0)
    ports = [v for v in range(gadget.n) if gadget.degree(v) == r - 1]
    assert len(ports) == r
    cur = base
    remap = list(range(base.n))
    for v in targets:
        cv = remap[v]
        cur = _substitute(cur, cv, gadget, ports)
        for u in range(len(remap)):
            if remap[u] > cv:
                remap[u] -= 1
            elif remap[u] == cv:
                remap[u] = -1
    assert cur.regular_degree() == r and cur.is_simple()
    return cur
