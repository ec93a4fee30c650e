# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled window-start search for one anchor branch.

Line-for-line twin of ``_kernel_py.py`` (same branching order, same node and
prune counts). Colour sets are 64-bit masks, so ``t <= 62``; at most 64 vertices.
The search itself runs without the GIL.
"""

from libc.stdlib cimport malloc, calloc, free
from libc.string cimport memcpy

FOUND = 0
INFEASIBLE = 1
LIMIT = 2

MAX_VERTICES = MAXN
MAX_COLOUR = 62


cdef inline int _nth_low(u64 mask, int k) noexcept nogil:
    # k-th smallest set bit, k >= 1
    cdef int i
    for i in range(k - 1):
        mask &= mask - 1
    return __builtin_ctzll(mask)


cdef inline int _nth_high(u64 mask, int k) noexcept nogil:
    # k-th largest set bit, k >= 1
    cdef int skip = __builtin_popcountll(mask) - k
    return _nth_low(mask, skip + 1)


cdef int propagate(Ctx *c, int k) noexcept nogil:
    cdef int changed = 1
    cdef int j, w, dw, a, b, u, mu, p, q, col, count, only, v, end, top, nfree
    cdef u64 free_, rest
    c.nodes += 1
    if c.nodes > c.max_nodes:
        c.budget_hit = 1
        return 0
    while changed:
        changed = 0
        for j in range(k, c.n):
            w = c.order[j]
            dw = c.deg[w]
            a = c.lo[w]
            b = c.hi[w]
            for p in range(c.nb_off[w], c.nb_off[w + 1]):
                u = c.nb_w[p]
                mu = c.nb_k[p]
                if c.pos[u] < k:
                    free_ = c.win[u] & ~c.used[u]
                    nfree = __builtin_popcountll(free_)
                    if nfree < mu:
                        return 0
                    q = _nth_low(free_, mu) - dw + 1
                    if q > a:
                        a = q
                    q = _nth_high(free_, mu)
                    if q < b:
                        b = q
                else:
                    q = c.lo[u] - dw + mu
                    if q > a:
                        a = q
                    q = c.hi[u] + c.deg[u] - mu
                    if q < b:
                        b = q
            if a > b:
                return 0
            if a != c.lo[w] or b != c.hi[w]:
                c.lo[w] = a
                c.hi[w] = b
                changed = 1
        if changed:
            continue
        for j in range(k):
            u = c.order[j]
            free_ = c.win[u] & ~c.used[u]
            rest = free_
            while rest:
                col = __builtin_ctzll(rest)
                rest &= rest - 1
                only = -1
                count = 0
                for p in range(c.nb_off[u], c.nb_off[u + 1]):
                    w = c.nb_w[p]
                    if c.pos[w] >= k and c.lo[w] <= col and col <= c.hi[w] + c.deg[w] - 1:
                        count += 1
                        only = w
                if count == 0:
                    return 0
                if count == 1:
                    a = c.lo[only]
                    q = col - c.deg[only] + 1
                    if q > a:
                        a = q
                    b = c.hi[only]
                    if col < b:
                        b = col
                    if a > b:
                        return 0
                    if a != c.lo[only] or b != c.hi[only]:
                        c.lo[only] = a
                        c.hi[only] = b
                        changed = 1
    top = 0
    for v in range(c.n):
        end = c.hi[v] + c.deg[v] - 1
        if end > top:
            top = end
    return top >= c.t


cdef int assign(Ctx *c, int v, int k, int s, int idx, int prev_u, int prev_c) noexcept nogil:
    cdef int saved_lo[MAXN]
    cdef int saved_hi[MAXN]
    cdef int u, e, col, floor_, ok
    cdef u64 avail, bit
    if idx == c.back_off[v + 1] - c.back_off[v]:
        memcpy(saved_lo, c.lo, c.n * sizeof(int))
        memcpy(saved_hi, c.hi, c.n * sizeof(int))
        c.lo[v] = s
        c.hi[v] = s
        ok = propagate(c, k + 1)
        if c.budget_hit:
            return 0
        if ok:
            if place(c, k + 1):
                return 1
            if c.budget_hit:
                return 0
        else:
            c.prunes += 1
        memcpy(c.lo, saved_lo, c.n * sizeof(int))
        memcpy(c.hi, saved_hi, c.n * sizeof(int))
        return 0
    u = c.back_u[c.back_off[v] + idx]
    e = c.back_e[c.back_off[v] + idx]
    avail = c.win[v] & ~c.used[v] & c.win[u] & ~c.used[u]
    floor_ = prev_c + 1 if u == prev_u else 0
    while avail:
        col = __builtin_ctzll(avail)
        avail &= avail - 1
        if col < floor_:
            continue
        bit = (<u64>1) << col
        c.used[v] |= bit
        c.used[u] |= bit
        c.colour[e] = col
        if assign(c, v, k, s, idx + 1, u, col):
            return 1
        if c.budget_hit:
            return 0
        c.used[v] ^= bit
        c.used[u] ^= bit
        c.colour[e] = 0
    return 0


cdef int place(Ctx *c, int k) noexcept nogil:
    cdef int v, d, s, lo, hi
    if k == c.n:
        return 1
    v = c.order[k]
    d = c.deg[v]
    lo = c.lo[v]
    hi = c.hi[v]
    for s in range(lo, hi + 1):
        c.win[v] = (((<u64>1) << d) - 1) << s
        if assign(c, v, k, s, 0, -1, 0):
            return 1
        if c.budget_hit:
            return 0
    c.win[v] = 0
    return 0


def search_anchor(int n, eu, ev, int t, int anchor, long long max_nodes):
    """Same contract as ``_kernel_py.search_anchor``."""
    cdef int m = len(eu)
    cdef int i, e, a, b, v, best, w, p, found = 0, root_ok
    cdef Ctx *c
    if n > MAXN:
        raise ValueError(f"compiled kernel supports at most {MAXN} vertices")
    if t > MAX_COLOUR:
        raise ValueError(f"compiled kernel supports t <= {MAX_COLOUR}")

    c = <Ctx *> calloc(1, sizeof(Ctx))
    if c == NULL:
        raise MemoryError()
    c.nb_w = <int *> malloc((2 * m + 1) * sizeof(int))
    c.nb_k = <int *> malloc((2 * m + 1) * sizeof(int))
    c.back_u = <int *> malloc((m + 1) * sizeof(int))
    c.back_e = <int *> malloc((m + 1) * sizeof(int))
    c.colour = <int *> calloc(m + 1, sizeof(int))
    try:
        if not (c.nb_w and c.nb_k and c.back_u and c.back_e and c.colour):
            raise MemoryError()
        c.n = n
        c.m = m
        c.t = t
        c.max_nodes = max_nodes
        for e in range(m):
            c.deg[<int>eu[e]] += 1
            c.deg[<int>ev[e]] += 1

        mult = {}
        for e in range(m):
            a, b = eu[e], ev[e]
            mult[(a, b)] = mult.get((a, b), 0) + 1
            mult[(b, a)] = mult.get((b, a), 0) + 1
        nbrs = [[] for _ in range(n)]
        for (a, b), k in sorted(mult.items()):
            nbrs[a].append((b, k))
        p = 0
        for v in range(n):
            c.nb_off[v] = p
            for w, k in nbrs[v]:
                c.nb_w[p] = w
                c.nb_k[p] = k
                p += 1
        c.nb_off[n] = p

        for v in range(n):
            c.pos[v] = -1
        links = [0] * n
        c.order[0] = anchor
        c.pos[anchor] = 0
        for w, k in nbrs[anchor]:
            links[w] += k
        for i in range(1, n):
            best = -1
            for v in range(n):
                if c.pos[v] < 0 and (best < 0 or links[v] > links[best]):
                    best = v
            c.pos[best] = i
            c.order[i] = best
            for w, k in nbrs[best]:
                links[w] += k

        back = [[] for _ in range(n)]
        for e in range(m):
            a, b = eu[e], ev[e]
            if c.pos[a] < c.pos[b]:
                back[b].append((c.pos[a], e, a))
            else:
                back[a].append((c.pos[b], e, b))
        p = 0
        for v in range(n):
            c.back_off[v] = p
            for _, e, a in sorted(back[v]):
                c.back_u[p] = a
                c.back_e[p] = e
                p += 1
        c.back_off[n] = p

        for v in range(n):
            c.lo[v] = 2 if v < anchor else 1
            c.hi[v] = t - c.deg[v] + 1
        if c.hi[anchor] > 1:
            c.hi[anchor] = 1
        for v in range(n):
            if c.hi[v] < 1:
                return INFEASIBLE, None, 0, 0
        if t < 1:
            return INFEASIBLE, None, 0, 0

        with nogil:
            root_ok = propagate(c, 0)
            if root_ok and not c.budget_hit:
                found = place(c, 0)
        if c.budget_hit:
            return LIMIT, None, c.nodes, c.prunes
        if found:
            return FOUND, [c.colour[e] for e in range(m)], c.nodes, c.prunes
        return INFEASIBLE, None, c.nodes, c.prunes
    finally:
        free(c.nb_w)
        free(c.nb_k)
        free(c.back_u)
        free(c.back_e)
        free(c.colour)
        free(c)
