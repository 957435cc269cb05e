"""Numba backend for the hot kernels; see _numpy for the shared contracts.

The sweep walks subsets in Gray-code order with O(n) incremental cut
updates.  The matching enumerator is an iterative depth-first search over
int64 coverage masks, so this backend requires n <= 62; facades route larger
inputs to the fallback.
"""

from __future__ import annotations

import numpy as np
from numba import njit


@njit(cache=True)
def _sweep(W, forbid, mode, target):
    """mode 0: (min value, argmin mask).  mode 1: (count of cut==target, 0)."""
    n = W.shape[0]
    allowed = np.empty(n, np.int64)
    k = 0
    for v in range(n):
        if v != forbid:
            allowed[k] = v
            k += 1
    if k == 0:
        return np.int64(-1), np.int64(0)
    deg = np.zeros(k, np.int64)
    for i in range(k):
        s = 0
        for u in range(n):
            s += W[allowed[i], u]
        deg[i] = s
    Wsub = np.empty((k, k), np.int64)
    for i in range(k):
        for j in range(k):
            Wsub[i, j] = W[allowed[i], allowed[j]]
    inside = np.zeros(k, np.int64)
    cur = np.int64(0)
    size = 0
    cut = np.int64(0)
    best = np.int64(-1)
    best_mask = np.int64(0)
    count = np.int64(0)
    total = np.int64(1) << k
    i = np.int64(1)
    while i < total:
        t = 0
        ii = i
        while ii & 1 == 0:
            t += 1
            ii >>= 1
        bit = np.int64(1) << t
        if cur & bit:
            cur ^= bit
            size -= 1
            cut = cut - deg[t] + 2 * inside[t]
            for j in range(k):
                inside[j] -= Wsub[t, j]
        else:
            cur |= bit
            size += 1
            cut = cut + deg[t] - 2 * inside[t]
            for j in range(k):
                inside[j] += Wsub[t, j]
        if size & 1:
            if mode == 0:
                if best < 0 or cut < best or (cut == best and cur < best_mask):
                    best = cut
                    best_mask = cur
            else:
                if cut == target:
                    count += 1
        i += 1
    if mode == 0:
        full = np.int64(0)
        for j in range(k):
            if best_mask & (np.int64(1) << j):
                full |= np.int64(1) << allowed[j]
        return best, full
    return count, np.int64(0)


@njit(cache=True)
def _sweep_collect(W, forbid, target, out):
    """Fill out with full-vertex masks of odd subsets whose cut == target."""
    n = W.shape[0]
    allowed = np.empty(n, np.int64)
    k = 0
    for v in range(n):
        if v != forbid:
            allowed[k] = v
            k += 1
    pos = 0
    if k == 0:
        return pos
    deg = np.zeros(k, np.int64)
    for i in range(k):
        s = 0
        for u in range(n):
            s += W[allowed[i], u]
        deg[i] = s
    Wsub = np.empty((k, k), np.int64)
    for i in range(k):
        for j in range(k):
            Wsub[i, j] = W[allowed[i], allowed[j]]
    inside = np.zeros(k, np.int64)
    cur = np.int64(0)
    size = 0
    cut = np.int64(0)
    total = np.int64(1) << k
    i = np.int64(1)
    while i < total:
        t = 0
        ii = i
        while ii & 1 == 0:
            t += 1
            ii >>= 1
        bit = np.int64(1) << t
        if cur & bit:
            cur ^= bit
            size -= 1
            cut = cut - deg[t] + 2 * inside[t]
            for j in range(k):
                inside[j] -= Wsub[t, j]
        else:
            cur |= bit
            size += 1
            cut = cut + deg[t] - 2 * inside[t]
            for j in range(k):
                inside[j] += Wsub[t, j]
        if (size & 1) and cut == target:
            full = np.int64(0)
            for j in range(k):
                if cur & (np.int64(1) << j):
                    full |= np.int64(1) << allowed[j]
            out[pos] = full
            pos += 1
        i += 1
    return pos


def min_odd_cut_sweep(W: np.ndarray, forbid: int = -1) -> tuple[int, int]:
    W = np.ascontiguousarray(W, dtype=np.int64)
    val, mask = _sweep(W, forbid, 0, 0)
    return int(val), int(mask)


def collect_odd_cuts(W: np.ndarray, target: int, forbid: int = -1) -> np.ndarray:
    W = np.ascontiguousarray(W, dtype=np.int64)
    count, _ = _sweep(W, forbid, 1, target)
    out = np.zeros(int(count), dtype=np.int64)
    if count:
        _sweep_collect(W, forbid, target, out)
    out.sort()
    return out


@njit(cache=True)
def _pm_search(n, eu, ev, avail, must_edge, collapse, cap, out):
    m = eu.shape[0]
    half = n // 2
    skip = np.zeros(m, np.bool_)
    if collapse:
        for e in range(m):
            if not avail[e]:
                continue
            for e2 in range(e):
                if avail[e2] and eu[e2] == eu[e] and ev[e2] == ev[e]:
                    skip[e] = True
                    break
    deg = np.zeros(n, np.int64)
    for e in range(m):
        deg[eu[e]] += 1
        deg[ev[e]] += 1
    ptr = np.zeros(n + 1, np.int64)
    for v in range(n):
        ptr[v + 1] = ptr[v] + deg[v]
    fill = ptr[:n].copy()
    incid = np.zeros(ptr[n], np.int64)
    for e in range(m):
        incid[fill[eu[e]]] = e
        fill[eu[e]] += 1
        incid[fill[ev[e]]] = e
        fill[ev[e]] += 1

    covered = np.int64(0)
    chosen = np.zeros(half + 1, np.int64)
    base = 0
    count = 0
    overflow = 0
    if must_edge >= 0:
        if not avail[must_edge]:
            return count, overflow
        covered |= np.int64(1) << eu[must_edge]
        covered |= np.int64(1) << ev[must_edge]
        chosen[0] = must_edge
        base = 1

    vert = np.zeros(half + 2, np.int64)
    pos = np.zeros(half + 2, np.int64)
    L = base
    v0 = -1
    for i in range(n):
        if not (covered >> i) & 1:
            v0 = i
            break
    if v0 < 0:
        if cap > 0:
            row = np.sort(chosen[:L])
            for j in range(L):
                out[0, j] = row[j]
            count = 1
        else:
            overflow = 1
        return count, overflow
    vert[L] = v0
    pos[L] = ptr[v0]

    while L >= base:
        v = vert[L]
        p = pos[L]
        advanced = False
        while p < ptr[v + 1]:
            e = incid[p]
            p += 1
            if not avail[e] or skip[e]:
                continue
            u = eu[e] + ev[e] - v
            if (covered >> u) & 1:
                continue
            pos[L] = p
            chosen[L] = e
            covered |= (np.int64(1) << v) | (np.int64(1) << u)
            nv = -1
            for i in range(v + 1, n):
                if not (covered >> i) & 1:
                    nv = i
                    break
            if nv < 0:
                if count < cap:
                    row = np.sort(chosen[: L + 1])
                    for j in range(L + 1):
                        out[count, j] = row[j]
                    count += 1
                    covered &= ~((np.int64(1) << v) | (np.int64(1) << u))
                    p = pos[L]
                    continue
                overflow = 1
                return count, overflow
            L += 1
            vert[L] = nv
            pos[L] = ptr[nv]
            advanced = True
            break
        if advanced:
            continue
        L -= 1
        if L >= base:
            v2 = vert[L]
            e2 = chosen[L]
            u2 = eu[e2] + ev[e2] - v2
            covered &= ~((np.int64(1) << v2) | (np.int64(1) << u2))
    return count, overflow


def enumerate_pms(
    n: int,
    eu: np.ndarray,
    ev: np.ndarray,
    avail: np.ndarray,
    must_edge: int = -1,
    collapse: bool = False,
    cap: int = 1 << 20,
) -> tuple[np.ndarray, bool]:
    if n > 62:
        raise ValueError("jit matching kernel requires n <= 62")
    eu = np.ascontiguousarray(eu, dtype=np.int64)
    ev = np.ascontiguousarray(ev, dtype=np.int64)
    avail = np.ascontiguousarray(avail, dtype=np.bool_)
    half = n // 2
    out = np.zeros((max(cap, 1), max(half, 1)), dtype=np.int64)
    count, overflow = _pm_search(n, eu, ev, avail, must_edge, collapse, cap, out)
    return out[:count, :half].astype(np.int32), bool(overflow)
