"""Pure numpy/python backend for the hot kernels.

Contracts shared with the numba backend:

min_odd_cut_sweep(W, forbid) -> (value, mask)
    Minimum of |boundary(S)| over nonempty odd-cardinality S contained in
    V minus {forbid} (all of V when forbid < 0).  Boundary edges leaving S
    towards the forbidden vertex do count.  Ties broken by smallest mask.
    Returns (-1, 0) when there is no candidate subset.

collect_odd_cuts(W, target, forbid) -> int64 array
    All masks of nonempty odd S (same universe) with |boundary(S)| == target,
    ascending.

enumerate_pms(n, eu, ev, avail, must_edge, collapse, cap) -> (pms, overflow)
    Perfect matchings of the subgraph given by the available edges, as an
    (count, n//2) int32 array of sorted edge ids.  Deterministic search
    order: repeatedly match the lowest uncovered vertex, trying its incident
    edges in ascending id.  must_edge >= 0 forces one edge into every
    matching.  collapse restricts each parallel class to its lowest
    available copy (an exchange argument makes this complete for existence,
    packing and decomposition searches).  At most cap matchings are
    collected; overflow reports that more exist.
"""

from __future__ import annotations

import numpy as np

_CHUNK = 1 << 16


def _sweep_chunks(W: np.ndarray, forbid: int):
    """Yield (masks, cuts) for all odd nonempty subsets, chunked."""
    n = W.shape[0]
    allowed = np.array([v for v in range(n) if v != forbid], dtype=np.int64)
    k = len(allowed)
    if k == 0:
        return
    deg = W.sum(axis=1).astype(np.int64)
    dsub = deg[allowed]
    Wsub = W[np.ix_(allowed, allowed)].astype(np.int64)
    shifts = np.arange(k, dtype=np.int64)
    total = 1 << k
    for lo in range(1, total, _CHUNK):
        hi = min(lo + _CHUNK, total)
        masks = np.arange(lo, hi, dtype=np.int64)
        M = (masks[:, None] >> shifts[None, :]) & 1
        odd = (M.sum(axis=1) & 1) == 1
        if not odd.any():
            continue
        Mo = M[odd]
        cuts = Mo @ dsub - np.einsum("ij,ij->i", Mo @ Wsub, Mo)
        yield masks[odd], cuts, allowed


def _expand(mask: int, allowed: np.ndarray) -> int:
    full = 0
    for j in range(len(allowed)):
        if (mask >> j) & 1:
            full |= 1 << int(allowed[j])
    return full


def min_odd_cut_sweep(W: np.ndarray, forbid: int = -1) -> tuple[int, int]:
    best = -1
    best_mask = 0
    best_allowed = None
    for masks, cuts, allowed in _sweep_chunks(W, forbid):
        order = np.lexsort((masks, cuts))
        i = order[0]
        val, msk = int(cuts[i]), int(masks[i])
        if best < 0 or val < best or (val == best and msk < best_mask):
            best, best_mask, best_allowed = val, msk, allowed
    if best < 0:
        return -1, 0
    return best, _expand(best_mask, best_allowed)


def collect_odd_cuts(W: np.ndarray, target: int, forbid: int = -1) -> np.ndarray:
    out = []
    for masks, cuts, allowed in _sweep_chunks(W, forbid):
        for msk in masks[cuts == target]:
            out.append(_expand(int(msk), allowed))
    return np.array(sorted(out), dtype=np.int64)


def _pm_iter(n, eu, ev, avail, must_edge, collapse):
    m = len(eu)
    inc: list[list[int]] = [[] for _ in range(n)]
    for e in range(m):
        inc[eu[e]].append(e)
        inc[ev[e]].append(e)
    skip = [False] * m
    if collapse:
        last: dict[tuple[int, int], int] = {}
        for e in range(m):
            if not avail[e]:
                continue
            key = (eu[e], ev[e])
            if key in last:
                skip[e] = True
            else:
                last[key] = e
    covered = [False] * n
    chosen: list[int] = []
    if must_edge >= 0:
        if not avail[must_edge]:
            return
        covered[eu[must_edge]] = covered[ev[must_edge]] = True
        chosen.append(must_edge)

    def rec():
        v = -1
        for i in range(n):
            if not covered[i]:
                v = i
                break
        if v < 0:
            yield tuple(sorted(chosen))
            return
        for e in inc[v]:
            if not avail[e] or skip[e]:
                continue
            u = eu[e] + ev[e] - v
            if covered[u]:
                continue
            covered[v] = covered[u] = True
            chosen.append(e)
            yield from rec()
            chosen.pop()
            covered[v] = covered[u] = False

    yield from rec()


def enumerate_pms(
    n: int,
    eu: np.ndarray,
    ev: np.ndarray,
    avail: np.ndarray,
    must_edge: int = -1,
    collapse: bool = False,
    cap: int = 1 << 20,
) -> tuple[np.ndarray, bool]:
    half = n // 2
    rows = []
    overflow = False
    for pm in _pm_iter(n, list(eu), list(ev), list(avail), must_edge, collapse):
        if len(rows) == cap:
            overflow = True
            break
        rows.append(pm)
    out = np.array(rows, dtype=np.int32).reshape(len(rows), half)
    return out, overflow
