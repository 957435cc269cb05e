"""Immutable loopless multigraphs with stable edge ids, plus text I/O.

Edges are numbered 0..m-1 in creation order and every edge is stored as an
ordered pair (u, v) with u < v.  Parallel edges are distinct objects that
happen to share endpoints; multiplicity is always derived, never stored.
Vertex subsets are plain Python ints used as bitmasks, so there is no hard
cap on the order of a graph.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

import numpy as np

VertexSet = int


def mask_of(vertices: Iterable[int]) -> VertexSet:
    """Bitmask of a collection of vertex ids."""
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def bits(mask: VertexSet) -> Iterator[int]:
    """Vertex ids present in a bitmask, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def popcount(mask: VertexSet) -> int:
    return mask.bit_count()


class Multigraph:
    """A loopless multigraph on vertices 0..n-1.  Treat instances as immutable."""

    __slots__ = ("n", "edges", "_inc", "_deg", "_W")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]]):
        norm = []
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at vertex {u} not allowed")
            if u > v:
                u, v = v, u
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            norm.append((u, v))
        self.n = n
        self.edges = tuple(norm)
        inc: list[list[int]] = [[] for _ in range(n)]
        for i, (u, v) in enumerate(self.edges):
            inc[u].append(i)
            inc[v].append(i)
        self._inc = tuple(tuple(x) for x in inc)
        self._deg = tuple(len(x) for x in inc)
        self._W = None

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return self._deg[v]

    def degrees(self) -> tuple[int, ...]:
        return self._deg

    def incident(self, v: int) -> tuple[int, ...]:
        """Edge ids incident to v, ascending."""
        return self._inc[v]

    def other_end(self, eid: int, v: int) -> int:
        u, w = self.edges[eid]
        return w if v == u else u

    def multiplicity(self, u: int, v: int) -> int:
        if u > v:
            u, v = v, u
        return sum(1 for e in self._inc[u] if self.edges[e] == (u, v))

    def parallel_classes(self) -> dict[tuple[int, int], tuple[int, ...]]:
        """Edge ids grouped by endpoint pair, pairs sorted, ids ascending."""
        cls: dict[tuple[int, int], list[int]] = {}
        for i, e in enumerate(self.edges):
            cls.setdefault(e, []).append(i)
        return {k: tuple(v) for k, v in sorted(cls.items())}

    def weight_matrix(self) -> np.ndarray:
        """Symmetric n x n multiplicity matrix (int64), cached."""
        if self._W is None:
            W = np.zeros((self.n, self.n), dtype=np.int64)
            for u, v in self.edges:
                W[u, v] += 1
                W[v, u] += 1
            self._W = W
        return self._W

    def regular_degree(self) -> int | None:
        """The common degree if the graph is regular, else None."""
        if self.n == 0:
            return 0
        d = self._deg[0]
        return d if all(x == d for x in self._deg) else None

    def is_simple(self) -> bool:
        return len(set(self.edges)) == len(self.edges)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Multigraph)
            and self.n == other.n
            and self.edges == other.edges
        )

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"Multigraph(n={self.n}, m={self.m})"


@dataclass(frozen=True)
class EdgeCut:
    """Boundary of a vertex set: the defining side and the crossing edge ids."""

    side: VertexSet
    edge_ids: tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.edge_ids)


def boundary(g: Multigraph, x: VertexSet) -> EdgeCut:
    """Edges with exactly one endpoint in x."""
    ids = tuple(
        i
        for i, (u, v) in enumerate(g.edges)
        if ((x >> u) & 1) != ((x >> v) & 1)
    )
    return EdgeCut(side=x, edge_ids=ids)


def edges_between(g: Multigraph, x: VertexSet, y: VertexSet) -> tuple[int, ...]:
    """Edge ids with one endpoint in x and the other in y (x, y disjoint)."""
    if x & y:
        raise ValueError("vertex sets must be disjoint")
    out = []
    for i, (u, v) in enumerate(g.edges):
        bu, bv = (x >> u) & 1, (x >> v) & 1
        cu, cv = (y >> u) & 1, (y >> v) & 1
        if (bu and cv) or (bv and cu):
            out.append(i)
    return tuple(out)


def contract(g: Multigraph, x: VertexSet) -> tuple[Multigraph, int]:
    """Identify the vertex set x to a single new vertex w.

    Edges inside x become loops and are dropped silently.  Vertices outside x
    keep their relative order and are renumbered densely; w gets the last id.
    Surviving edges keep their relative order.  Returns (graph, w_id).
    """
    outside = [v for v in range(g.n) if not (x >> v) & 1]
    remap = {v: i for i, v in enumerate(outside)}
    w = len(outside)
    new_edges = []
    for u, v in g.edges:
        iu, iv = (x >> u) & 1, (x >> v) & 1
        if iu and iv:
            continue
        a = w if iu else remap[u]
        b = w if iv else remap[v]
        new_edges.append((a, b))
    return Multigraph(w + 1, new_edges), w


def delete_vertices(g: Multigraph, x: VertexSet) -> Multigraph:
    """Remove the vertices in x and all incident edges; densify the rest."""
    outside = [v for v in range(g.n) if not (x >> v) & 1]
    remap = {v: i for i, v in enumerate(outside)}
    new_edges = [
        (remap[u], remap[v])
        for u, v in g.edges
        if not ((x >> u) & 1 or (x >> v) & 1)
    ]
    return Multigraph(len(outside), new_edges)


def induced(g: Multigraph, x: VertexSet) -> Multigraph:
    """Subgraph induced by the vertex set x, densified in vertex order."""
    full = (1 << g.n) - 1
    return delete_vertices(g, full & ~x)


def delete_edges(g: Multigraph, eids: Iterable[int]) -> Multigraph:
    """Remove edges by id; survivors keep their relative order."""
    kill = set(eids)
    for e in kill:
        if not (0 <= e < g.m):
            raise ValueError(f"edge id {e} out of range")
    return Multigraph(g.n, [e for i, e in enumerate(g.edges) if i not in kill])


def add_edges(g: Multigraph, pairs: Iterable[tuple[int, int]]) -> Multigraph:
    """Append new edges; their ids follow the existing ones in given order."""
    return Multigraph(g.n, list(g.edges) + list(pairs))


def edge_id_map_after_delete(g: Multigraph, eids: Iterable[int]) -> dict[int, int]:
    """Old id -> new id for the edges surviving delete_edges(g, eids)."""
    kill = set(eids)
    out = {}
    nxt = 0
    for i in range(g.m):
        if i not in kill:
            out[i] = nxt
            nxt += 1
    return out


def components(g: Multigraph) -> tuple[VertexSet, ...]:
    """Connected components as bitmasks, ordered by smallest member."""
    seen = 0
    comps = []
    for s in range(g.n):
        if (seen >> s) & 1:
            continue
        comp = 1 << s
        stack = [s]
        while stack:
            v = stack.pop()
            for e in g.incident(v):
                u = g.other_end(e, v)
                if not (comp >> u) & 1:
                    comp |= 1 << u
                    stack.append(u)
        seen |= comp
        comps.append(comp)
    return tuple(comps)


def is_connected(g: Multigraph) -> bool:
    """True for the empty graph and any graph with one component."""
    return g.n == 0 or len(components(g)) == 1


def disjoint_union(g: Multigraph, h: Multigraph) -> Multigraph:
    """g followed by h with h's vertices and edges shifted after g's."""
    edges = list(g.edges) + [(u + g.n, v + g.n) for u, v in h.edges]
    return Multigraph(g.n + h.n, edges)


# ---------------------------------------------------------------------------
# text formats


def parse_mgf(text: str) -> Multigraph:
    """Parse the mgf format: header "mgf <n>", one "e <u> <v>" line per edge.

    Repeated endpoint pairs mean parallel edges; edge ids follow file order.
    Lines starting with '#' and blank lines are ignored.
    """
    n = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if parts[0] == "mgf":
            if n is not None:
                raise ValueError(f"line {lineno}: duplicate header")
            if len(parts) != 2:
                raise ValueError(f"line {lineno}: malformed header")
            n = int(parts[1])
        elif parts[0] == "e":
            if n is None:
                raise ValueError(f"line {lineno}: edge before header")
            if len(parts) != 3:
                raise ValueError(f"line {lineno}: malformed edge line")
            u, v = int(parts[1]), int(parts[2])
            if not u < v:
                raise ValueError(f"line {lineno}: expected u < v, got {u} {v}")
            edges.append((u, v))
        else:
            raise ValueError(f"line {lineno}: unknown record {parts[0]!r}")
    if n is None:
        raise ValueError("missing mgf header")
    return Multigraph(n, edges)


def write_mgf(g: Multigraph, comment: str | None = None) -> str:
    """Serialize in mgf format, edges in id order (bit-exact round trip)."""
    lines = []
    if comment:
        for part in comment.splitlines():
            lines.append(f"# {part}")
    lines.append(f"mgf {g.n}")
    for u, v in g.edges:
        lines.append(f"e {u} {v}")
    return "\n".join(lines) + "\n"


def load_mgf(path) -> Multigraph:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_mgf(fh.read())


def save_mgf(g: Multigraph, path, comment: str | None = None) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(write_mgf(g, comment))


def parse_graph6(line: str) -> Multigraph:
    """Read one simple graph in graph6 format (n <= 62, ingestion only)."""
    s = line.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    data = [ord(c) - 63 for c in s]
    if any(b < 0 or b > 63 for b in data):
        raise ValueError("invalid graph6 characters")
    if not data:
        raise ValueError("empty graph6 line")
    n = data[0]
    if n > 62:
        raise ValueError("graph6 input with n > 62 not supported")
    body = data[1:]
    need = (n * (n - 1) // 2 + 5) // 6
    if len(body) != need:
        raise ValueError(f"graph6 length mismatch: got {len(body)}, want {need}")
    bitstream = []
    for b in body:
        for k in range(5, -1, -1):
            bitstream.append((b >> k) & 1)
    edges = []
    idx = 0
    for v in range(1, n):
        for u in range(v):
            if bitstream[idx]:
                edges.append((u, v))
            idx += 1
    return Multigraph(n, edges)
