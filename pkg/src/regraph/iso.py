"""Canonical forms, isomorphism testing and automorphisms of multigraphs.

The canonical form is individualization-refinement: vertices start colored
by their incident multiplicity multiset, colors are refined by neighbor
color/multiplicity profiles, and remaining ties are broken by branching
with certificate minimization.  Discovered automorphisms prune branches
that fix the individualized prefix.  Intended for n <= 64.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import Multigraph

CANON_MAX_N = 64
AUT_CAP = 100_000


class CapacityError(ValueError):
    pass


class AutomorphismCapExceeded(RuntimeError):
    pass


def _densify(keys) -> list[int]:
    order = sorted(set(keys))
    index = {k: i for i, k in enumerate(order)}
    return [index[k] for k in keys]


def _initial_colors(g: Multigraph) -> list[int]:
    keys = []
    W = g.weight_matrix()
    for v in range(g.n):
        mults = sorted(int(W[v, u]) for u in range(g.n) if W[v, u])
        keys.append((g.degree(v), tuple(mults)))
    return _densify(keys)


def _refine(W, colors: list[int]) -> list[int]:
    n = len(colors)
    while True:
        sigs = []
        for v in range(n):
            row = W[v]
            nb = sorted((colors[u], int(row[u])) for u in range(n) if row[u])
            sigs.append((colors[v], tuple(nb)))
        new = _densify(sigs)
        if new == colors:
            return colors
        colors = new


def _individualize(colors: list[int], v: int) -> list[int]:
    keys = [(c, 1) for c in colors]
    keys[v] = (colors[v], 0)
    return _densify(keys)


def _cert_bytes(W, labeling: list[int]) -> bytes:
    n = len(labeling)
    pos_to_v = [0] * n
    for v, p in enumerate(labeling):
        pos_to_v[p] = v
    out = bytearray([n])
    for i in range(n):
        vi = pos_to_v[i]
        for j in range(i + 1, n):
            w = int(W[vi, pos_to_v[j]])
            if w > 255:
                raise CapacityError("multiplicity beyond 255 unsupported")
            out.append(w)
    return bytes(out)


@dataclass(frozen=True)
class CanonicalForm:
    certificate: bytes
    labeling: tuple[int, ...]  # vertex -> canonical position


def canonical_form(g: Multigraph) -> CanonicalForm:
    if g.n > CANON_MAX_N:
        raise CapacityError(f"canonical form limited to n <= {CANON_MAX_N}")
    if g.n == 0:
        return CanonicalForm(certificate=b"\x00", labeling=())
    W = g.weight_matrix()
    best_cert: bytes | None = None
    best_lab: tuple[int, ...] | None = None
    auts: list[tuple[int, ...]] = []
    aut_seen: set[tuple[int, ...]] = set()
    n = g.n

    def in_closure(v: int, tried: list[int], prefix: tuple[int, ...]) -> bool:
        gens = [a for a in auts if all(a[p] == p for p in prefix)]
        if not gens:
            return False
        orbit = set(tried)
        frontier = list(tried)
        while frontier:
            u = frontier.pop()
            for a in gens:
                w = a[u]
                if w not in orbit:
                    orbit.add(w)
                    frontier.append(w)
        return v in orbit

    def rec(colors: list[int], prefix: tuple[int, ...]) -> None:
        nonlocal best_cert, best_lab
        colors = _refine(W, colors)
        cells: dict[int, list[int]] = {}
        for v, c in enumerate(colors):
            cells.setdefault(c, []).append(v)
        target = None
        for c in sorted(cells):
            if len(cells[c]) > 1:
                if target is None or len(cells[c]) < len(cells[target]):
                    target = c
        if target is None:
            lab = tuple(colors)
            cert = _cert_bytes(W, colors)
            if best_cert is None or cert < best_cert:
                best_cert, best_lab = cert, lab
            elif cert == best_cert:
                inv = [0] * n
                for v in range(n):
                    inv[lab[v]] = v
                phi = tuple(inv[best_lab[u]] for u in range(n))
                if phi not in aut_seen:
                    aut_seen.add(phi)
                    auts.append(phi)
            return
        tried: list[int] = []
        for v in cells[target]:
            if in_closure(v, tried, prefix):
                continue
            tried.append(v)
            rec(_individualize(colors, v), prefix + (v,))

    rec(_initial_colors(g), ())
    assert best_cert is not None and best_lab is not None
    return CanonicalForm(certificate=best_cert, labeling=best_lab)


def are_isomorphic(g: Multigraph, h: Multigraph) -> bool:
    if g.n != h.n or g.m != h.m:
        return False
    if sorted(g.degrees()) != sorted(h.degrees()):
        return False
    return canonical_form(g).certificate == canonical_form(h).certificate


def automorphisms(g: Multigraph, cap: int = AUT_CAP) -> list[tuple[int, ...]]:
    """All vertex permutations preserving multiplicities, ascending order."""
    if g.n == 0:
        return [()]
    W = g.weight_matrix()
    colors = _refine(W, _initial_colors(g))
    by_color: dict[int, list[int]] = {}
    for v, c in enumerate(colors):
        by_color.setdefault(c, []).append(v)
    order = sorted(range(g.n), key=lambda v: (len(by_color[colors[v]]), colors[v], v))
    out: list[tuple[int, ...]] = []
    sigma = [-1] * g.n
    used = [False] * g.n

    def rec(i: int) -> None:
        if i == g.n:
            out.append(tuple(sigma))
            if len(out) > cap:
                raise AutomorphismCapExceeded(f"more than {cap} automorphisms")
            return
        v = order[i]
        for w in by_color[colors[v]]:
            if used[w]:
                continue
            ok = True
            for j in range(i):
                u = order[j]
                if W[v, u] != W[w, sigma[u]]:
                    ok = False
                    break
            if ok:
                sigma[v] = w
                used[w] = True
                rec(i + 1)
                used[w] = False
                sigma[v] = -1

    rec(0)
    out.sort()
    return out


def vertex_orbits(g: Multigraph) -> list[list[int]]:
    """Orbits of the automorphism group on vertices, each ascending."""
    try:
        auts = automorphisms(g)
    except AutomorphismCapExceeded:
        return [[v] for v in range(g.n)]
    parent = list(range(g.n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a in auts:
        for v in range(g.n):
            ra, rb = find(v), find(a[v])
            if ra != rb:
                parent[ra] = rb
    groups: dict[int, list[int]] = {}
    for v in range(g.n):
        groups.setdefault(find(v), []).append(v)
    return sorted(groups.values())


def edge_permutation(g: Multigraph, sigma: tuple[int, ...]) -> tuple[int, ...]:
    """Edge-id action of a vertex automorphism; parallels pair up in id order."""
    classes = g.parallel_classes()
    out = [-1] * g.m
    for (u, v), ids in classes.items():
        a, b = sigma[u], sigma[v]
        if a > b:
            a, b = b, a
        image = classes.get((a, b))
        if image is None or len(image) != len(ids):
            raise ValueError("permutation is not an automorphism")
        for src, dst in zip(ids, image):
            out[src] = dst
    return tuple(out)


def pm_action(
    g: Multigraph, pms: list[tuple[int, ...]]
) -> list[tuple[int, ...]]:
    """Distinct permutations induced on the given matchings by Aut(g)."""
    index = {frozenset(pm): i for i, pm in enumerate(pms)}
    perms = set()
    for a in automorphisms(g):
        emap = edge_permutation(g, a)
        images = []
        for pm in pms:
            key = frozenset(emap[e] for e in pm)
            if key not in index:
                raise ValueError("matching family is not closed under Aut")
            images.append(index[key])
        perms.add(tuple(images))
    return sorted(perms)
