"""Colorings of one r-regular graph by another.

A coloring maps guest edges to host edges so that the star of every guest
vertex lands bijectively on the star of some host vertex; that host vertex
assignment is carried along explicitly.  The searcher walks guest vertices
in BFS order, intersecting endpoint constraints from already-mapped star
edges, and branches over the bijections between the remaining star slots.
"""

from __future__ import annotations

import itertools
import os
import random
from dataclasses import dataclass, field
from typing import Optional, Sequence

from . import cuts as cuts_mod
from . import factors
from .core import Multigraph, VertexSet, boundary, is_connected, mask_of, popcount
from .iso import vertex_orbits

DEFAULT_NODE_CAP = 10**8


class DomainError(ValueError):
    pass


@dataclass(frozen=True)
class HColoring:
    """Edge map f (guest eid -> host eid) with its vertex map f_V."""

    f: tuple[int, ...]
    f_V: tuple[int, ...]


@dataclass
class SearchResult:
    status: str  # found | none | undecided | counted | enumerated
    coloring: Optional[HColoring] = None
    colorings: Optional[list[HColoring]] = None
    count: Optional[int] = None
    nodes: int = 0


@dataclass(frozen=True)
class VerifyResult:
    ok: bool
    code: Optional[str] = None  # adjacent-collision | vertex-mismatch | malformed
    where: Optional[int] = None


class _CapHit(Exception):
    pass


def _node_cap(explicit: Optional[int]) -> int:
    if explicit is not None:
        return explicit
    env = os.environ.get("REGRAPH_NODE_CAP")
    return int(env) if env else DEFAULT_NODE_CAP


def _bfs_order(g: Multigraph) -> list[int]:
    def constraint(v: int) -> tuple:
        mults = [g.multiplicity(*g.edges[e]) for e in g.incident(v)]
        return (max(mults, default=0), g.degree(v), -v)

    seen = [False] * g.n
    order: list[int] = []
    while len(order) < g.n:
        root = max(
            (v for v in range(g.n) if not seen[v]), key=constraint
        )
        queue = [root]
        seen[root] = True
        while queue:
            v = queue.pop(0)
            order.append(v)
            for e in g.incident(v):
                u = g.other_end(e, v)
                if not seen[u]:
                    seen[u] = True
                    queue.append(u)
    return order


def find_hcoloring(
    guest: Multigraph,
    host: Multigraph,
    mode: str = "first",
    node_cap: Optional[int] = None,
) -> SearchResult:
    """Search for colorings of guest by host.

    Modes: 'first' stops at one coloring; 'count' counts all edge maps
    exactly (no symmetry breaking); 'all_mod_aut' returns representatives
    modulo the host automorphism action.  Exceeding the node cap yields
    status 'undecided'.
    """
    if mode not in ("first", "count", "all_mod_aut"):
        raise ValueError(f"unknown mode {mode!r}")
    r = guest.regular_degree()
    if r is None or host.regular_degree() != r:
        raise DomainError("both graphs must be regular of the same degree")
    if not is_connected(host):
        raise DomainError("host must be connected")
    cap = _node_cap(node_cap)
    if guest.n == 0:
        empty = HColoring(f=(), f_V=())
        if mode == "first":
            return SearchResult(status="found", coloring=empty, nodes=0)
        if mode == "count":
            return SearchResult(status="counted", count=1, nodes=0)
        return SearchResult(status="enumerated", colorings=[empty], nodes=0)

    order = _bfs_order(guest)
    hstar = [host.incident(u) for u in range(host.n)]
    hend = host.edges
    sym_break = mode in ("first", "all_mod_aut")
    if sym_break:
        root_candidates = [orbit[0] for orbit in vertex_orbits(host)]
    else:
        root_candidates = list(range(host.n))

    fe = [-1] * guest.m
    fv = [-1] * guest.n
    nodes = 0
    snapshots: list[HColoring] = []
    twin_stars = host.n == 2
    seen_maps: set[tuple[int, ...]] = set()
    count = 0

    def rec(k: int) -> bool:
        nonlocal nodes, count
        if k == len(order):
            col = HColoring(f=tuple(fe), f_V=tuple(fv))
            if mode == "first":
                snapshots.append(col)
                return True
            if mode == "count":
                if twin_stars:
                    seen_maps.add(col.f)
                else:
                    count += 1
                return False
            snapshots.append(col)
            return False
        v = order[k]
        star = guest.incident(v)
        mapped_imgs = [fe[e] for e in star if fe[e] >= 0]
        if len(set(mapped_imgs)) != len(mapped_imgs):
            return False
        if mapped_imgs:
            cands: set[int] | None = None
            for img in mapped_imgs:
                s = set(hend[img])
                cands = s if cands is None else cands & s
            cand_list = sorted(cands)
        else:
            cand_list = root_candidates if k == 0 else list(range(host.n))
        unmapped = [e for e in star if fe[e] < 0]
        for u in cand_list:
            used = set(mapped_imgs)
            free = [e for e in hstar[u] if e not in used]
            if len(free) != len(unmapped):
                continue
            for perm in itertools.permutations(free):
                nodes += 1
                if nodes > cap:
                    raise _CapHit
                for e, img in zip(unmapped, perm):
                    fe[e] = img
                fv[v] = u
                stop = rec(k + 1)
                for e in unmapped:
                    fe[e] = -1
                fv[v] = -1
                if stop:
                    return True
        return False

    try:
        rec(0)
    except _CapHit:
        return SearchResult(status="undecided", nodes=nodes)

    if mode == "first":
        if snapshots:
            return SearchResult(status="found", coloring=snapshots[0], nodes=nodes)
        return SearchResult(status="none", nodes=nodes)
    if mode == "count":
        total = len(seen_maps) if twin_stars else count
        return SearchResult(status="counted", count=total, nodes=nodes)

    # representatives modulo the host automorphism action on edges
    from .iso import automorphisms, edge_permutation

    eperms = [edge_permutation(host, a) for a in automorphisms(host)]
    reps: list[HColoring] = []
    seen_keys: set[tuple[int, ...]] = set()
    for col in snapshots:
        key = min(tuple(p[x] for x in col.f) for p in eperms)
        if key not in seen_keys:
            seen_keys.add(key)
            reps.append(col)
    return SearchResult(status="enumerated", colorings=reps, nodes=nodes)


def verify_hcoloring(
    guest: Multigraph, host: Multigraph, col: HColoring
) -> VerifyResult:
    """Check star bijectivity against the recorded vertex assignment."""
    if len(col.f) != guest.m or len(col.f_V) != guest.n:
        return VerifyResult(ok=False, code="malformed")
    if any(not 0 <= x < host.m for x in col.f):
        return VerifyResult(ok=False, code="malformed")
    if any(not 0 <= x < host.n for x in col.f_V):
        return VerifyResult(ok=False, code="malformed")
    for v in range(guest.n):
        imgs = [col.f[e] for e in guest.incident(v)]
        if len(set(imgs)) != len(imgs):
            return VerifyResult(ok=False, code="adjacent-collision", where=v)
        if set(imgs) != set(host.incident(col.f_V[v])):
            return VerifyResult(ok=False, code="vertex-mismatch", where=v)
    return VerifyResult(ok=True)


def _require_verified(guest, host, col) -> None:
    res = verify_hcoloring(guest, host, col)
    if not res.ok:
        raise ValueError(f"coloring fails verification: {res.code} at {res.where}")


def image_subgraph(guest: Multigraph, host: Multigraph, col: HColoring) -> Multigraph:
    """Subgraph of the host induced by the image edge set, densified."""
    _require_verified(guest, host, col)
    eids = sorted(set(col.f))
    verts = sorted({x for e in eids for x in host.edges[e]})
    remap = {v: i for i, v in enumerate(verts)}
    return Multigraph(
        len(verts), [(remap[host.edges[e][0]], remap[host.edges[e][1]]) for e in eids]
    )


def unused_vertices(guest: Multigraph, host: Multigraph, col: HColoring) -> VertexSet:
    """Host vertices missed by the vertex map."""
    _require_verified(guest, host, col)
    used = mask_of(col.f_V)
    return ((1 << host.n) - 1) & ~used


def _components_excluding(g: Multigraph, banned: set[int]) -> list[VertexSet]:
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
                if e in banned:
                    continue
                u = g.other_end(e, v)
                if not (comp >> u) & 1:
                    comp |= 1 << u
                    stack.append(u)
        seen |= comp
        comps.append(comp)
    return comps


def circuits_upto(g: Multigraph, max_len: int) -> list[tuple[int, ...]]:
    """All circuits with at most max_len edges, as sorted edge id tuples.

    Parallel pairs count as 2-circuits.  Each circuit is reported once.
    """
    found: set[frozenset[int]] = set()
    out: list[tuple[int, ...]] = []
    for s in range(g.n):
        path: list[int] = []

        def dfs(v: int, visited: int) -> None:
            for e in g.incident(v):
                u = g.other_end(e, v)
                if u == s and path and e != path[0]:
                    if len(path) + 1 <= max_len:
                        key = frozenset(path) | {e}
                        if len(key) == len(path) + 1 and key not in found:
                            found.add(key)
                            out.append(tuple(sorted(key)))
                elif u > s and not (visited >> u) & 1:
                    if len(path) + 2 <= max_len:
                        path.append(e)
                        dfs(u, visited | (1 << u))
                        path.pop()

        dfs(s, 1 << s)
    out.sort(key=lambda c: (len(c), c))
    return out


def two_edge_cuts(g: Multigraph) -> list[tuple[int, int]]:
    """Unordered edge pairs forming the boundary of some vertex set (g connected)."""
    out = []
    for e1 in range(g.m):
        for e2 in range(e1 + 1, g.m):
            comps = _components_excluding(g, {e1, e2})
            if len(comps) == 1:
                continue
            for comp in comps:
                if boundary(g, comp).edge_ids == (e1, e2):
                    out.append((e1, e2))
                    break
    return out


def _is_cut_image(host: Multigraph, imgs: set[int], want_odd: bool) -> bool:
    """Does some vertex set (odd if requested) have boundary exactly imgs?"""
    target = tuple(sorted(imgs))
    comps = _components_excluding(host, imgs)
    if len(comps) == 1:
        return False
    for k in range(1, len(comps)):
        for combo in itertools.combinations(comps, k):
            side = 0
            for c in combo:
                side |= c
            if want_odd and popcount(side) % 2 == 0:
                continue
            if boundary(host, side).edge_ids == target:
                return True
    return False


@dataclass
class TransportReport:
    """Structure transported through a verified coloring, with any violations."""

    pm_checked: int = 0
    pm_failures: list = field(default_factory=list)
    two_regular_checked: int = 0
    two_regular_failures: list = field(default_factory=list)
    factor_checked: int = 0
    factor_failures: list = field(default_factory=list)
    two_cut_checked: int = 0
    two_cut_failures: list = field(default_factory=list)
    tight_cut_checked: int = 0
    tight_cut_failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not (
            self.pm_failures
            or self.two_regular_failures
            or self.factor_failures
            or self.two_cut_failures
            or self.tight_cut_failures
        )


def check_structure_transport(
    guest: Multigraph,
    host: Multigraph,
    col: HColoring,
    cycle_len_bound: int = 12,
    samples: int = 20,
    seed: int = 0,
    known_tight_cuts: Optional[Sequence[VertexSet]] = None,
) -> TransportReport:
    """Check that matchings, circuits, 2-cuts and tight cuts transport.

    Host perfect matchings must pull back to guest perfect matchings;
    host circuits (and sampled disjoint unions) must pull back to 2-regular
    edge sets; guest 2-edge-cuts must map to a single edge or a host
    2-edge-cut; guest tight cuts must map onto host tight cuts.  Tight cuts
    are enumerated exhaustively up to n <= 22, otherwise the caller supplies
    the sides to check.
    """
    _require_verified(guest, host, col)
    r = guest.regular_degree()
    report = TransportReport()

    for pm in factors.perfect_matchings(host):
        pmset = set(pm)
        pre = [e for e in range(guest.m) if col.f[e] in pmset]
        cover = [0] * guest.n
        for e in pre:
            u, v = guest.edges[e]
            cover[u] += 1
            cover[v] += 1
        report.pm_checked += 1
        if any(c != 1 for c in cover):
            report.pm_failures.append({"host_pm": pm})

    circuits = circuits_upto(host, cycle_len_bound)
    vsets = [mask_of(x for e in c for x in host.edges[e]) for c in circuits]
    unions: list[tuple[int, ...]] = [c for c in circuits]
    rng = random.Random(seed)
    for _ in range(samples):
        if not circuits:
            break
        picked: list[int] = []
        cover_mask = 0
        idx = list(range(len(circuits)))
        rng.shuffle(idx)
        for i in idx:
            if vsets[i] & cover_mask or rng.random() < 0.5:
                continue
            picked.append(i)
            cover_mask |= vsets[i]
        if len(picked) >= 2:
            merged: list[int] = []
            for i in picked:
                merged.extend(circuits[i])
            unions.append(tuple(sorted(merged)))
    for cyc in unions:
        cset = set(cyc)
        pre = [e for e in range(guest.m) if col.f[e] in cset]
        deg = [0] * guest.n
        for e in pre:
            u, v = guest.edges[e]
            deg[u] += 1
            deg[v] += 1
        report.two_regular_checked += 1
        if any(d not in (0, 2) for d in deg):
            report.two_regular_failures.append({"host_circuit": cyc})

    factor = factors.perfect_2_matching(host)
    if factor is not None:
        fset: set[int] = set()
        for kind, eids in factor.components:
            fset.update(eids)
        pre = [e for e in range(guest.m) if col.f[e] in fset]
        deg = [0] * guest.n
        for e in pre:
            u, v = guest.edges[e]
            deg[u] += 1
            deg[v] += 1
        report.factor_checked += 1
        # components of the pullback must be single edges or circuits: every
        # vertex covered once or twice, degree-1 ends paired with each other
        bad = any(d not in (1, 2) for d in deg) or any(
            deg[guest.edges[e][0]] != deg[guest.edges[e][1]] for e in pre
        )
        if bad:
            report.factor_failures.append({"host_factor": sorted(fset)})

    for e1, e2 in two_edge_cuts(guest):
        imgs = {col.f[e1], col.f[e2]}
        report.two_cut_checked += 1
        if len(imgs) == 1:
            continue
        if not _is_cut_image(host, imgs, want_odd=False):
            report.two_cut_failures.append({"guest_cut": (e1, e2)})

    sides: list[VertexSet]
    if known_tight_cuts is not None:
        sides = list(known_tight_cuts)
    elif guest.n <= cuts_mod.BRUTE_MAX_N and r is not None:
        sides = [tc.side for tc in cuts_mod.tight_cuts(guest, r)]
    else:
        sides = []
    for side in sides:
        cut = boundary(guest, side)
        imgs = {col.f[e] for e in cut.edge_ids}
        report.tight_cut_checked += 1
        if len(imgs) != r or not _is_cut_image(host, imgs, want_odd=True):
            report.tight_cut_failures.append({"guest_side": side})

    return report
