"""Pure-Python window-start search for one anchor branch.

Mirrors ``_kernel.pyx``; both expose ``search_anchor`` with the same signature
and must return identical results (same colouring, same node counts).

Search: vertices are windowed in a max-cardinality order rooted at the anchor,
whose window is pinned to start at colour 1. Choosing a window start ``s(v)``
fixes the colours ``s..s+d(v)-1`` that ``v`` must use; edges back to already
windowed vertices are coloured from the free colours of both ends. Start
domains ``[lo, hi]`` of the remaining vertices are narrowed to a fixpoint.
Colours are bits of a Python int (bit ``c`` is colour ``c``).
"""

FOUND = 0
INFEASIBLE = 1
LIMIT = 2


class _Budget(Exception):
    pass


def _bits(mask):
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def search_anchor(n, eu, ev, t, anchor, max_nodes):
    """Look for an interval ``t``-colouring in which ``anchor`` has window start 1
    and every vertex below ``anchor`` has window start at least 2.

    Returns ``(status, colours, nodes, prunes)``; ``colours`` is a list indexed by
    edge when ``status == FOUND`` and ``None`` otherwise.
    """
    m = len(eu)
    deg = [0] * n
    for e in range(m):
        deg[eu[e]] += 1
        deg[ev[e]] += 1

    mult = {}
    for e in range(m):
        a, b = eu[e], ev[e]
        mult[(a, b)] = mult.get((a, b), 0) + 1
        mult[(b, a)] = mult.get((b, a), 0) + 1
    nbrs = [[] for _ in range(n)]
    for (a, b), k in sorted(mult.items()):
        nbrs[a].append((b, k))

    # max-cardinality order from the anchor, ties to the smaller label
    order = [anchor]
    pos = [-1] * n
    pos[anchor] = 0
    links = [0] * n
    for w, k in nbrs[anchor]:
        links[w] += k
    for i in range(1, n):
        best = -1
        for v in range(n):
            if pos[v] < 0 and (best < 0 or links[v] > links[best]):
                best = v
        pos[best] = i
        order.append(best)
        for w, k in nbrs[best]:
            links[w] += k

    # back edges of each vertex, grouped by earlier endpoint, edge index ascending
    back = [[] for _ in range(n)]
    for e in range(m):
        a, b = eu[e], ev[e]
        if pos[a] < pos[b]:
            back[b].append((a, e))
        else:
            back[a].append((b, e))
    for v in range(n):
        back[v].sort(key=lambda x: (pos[x[0]], x[1]))

    lo = [1] * n
    hi = [t - deg[v] + 1 for v in range(n)]
    for v in range(anchor):
        lo[v] = 2
    hi[anchor] = min(hi[anchor], 1)
    win = [0] * n
    used = [0] * n
    colour = [0] * m
    stats = [0, 0]

    def propagate(k):
        """Narrow start domains of ``order[k:]``; False on a wipe-out."""
        stats[0] += 1
        if stats[0] > max_nodes:
            raise _Budget
        changed = True
        while changed:
            changed = False
            for j in range(k, n):
                w = order[j]
                dw = deg[w]
                a, b = lo[w], hi[w]
                for u, mu in nbrs[w]:
                    if pos[u] < k:
                        free = _bits(win[u] & ~used[u])
                        if len(free) < mu:
                            return False
                        a = max(a, free[mu - 1] - dw + 1)
                        b = min(b, free[len(free) - mu])
                    else:
                        a = max(a, lo[u] - dw + mu)
                        b = min(b, hi[u] + deg[u] - mu)
                if a > b:
                    return False
                if a != lo[w] or b != hi[w]:
                    lo[w], hi[w] = a, b
                    changed = True
            if changed:
                continue
            # every free colour of a windowed vertex needs a later neighbour to take it
            for j in range(k):
                u = order[j]
                free = win[u] & ~used[u]
                if not free:
                    continue
                for c in _bits(free):
                    only = -1
                    count = 0
                    for w, mu in nbrs[u]:
                        if pos[w] >= k and lo[w] <= c <= hi[w] + deg[w] - 1:
                            count += 1
                            only = w
                    if count == 0:
                        return False
                    if count == 1:
                        a = max(lo[only], c - deg[only] + 1)
                        b = min(hi[only], c)
                        if a > b:
                            return False
                        if a != lo[only] or b != hi[only]:
                            lo[only], hi[only] = a, b
                            changed = True
        top = 0
        for v in range(n):
            end = hi[v] + deg[v] - 1
            if end > top:
                top = end
        return top >= t

    def assign(v, k, s, idx, prev_u, prev_c):
        """Colour back edge ``idx`` of ``v`` and onwards, then descend."""
        edges = back[v]
        if idx == len(edges):
            saved = (lo[:], hi[:])
            lo[v] = hi[v] = s
            if propagate(k + 1):
                if place(k + 1):
                    return True
            else:
                stats[1] += 1
            lo[:], hi[:] = saved
            return False
        u, e = edges[idx]
        avail = win[v] & ~used[v] & win[u] & ~used[u]
        floor = prev_c + 1 if u == prev_u else 0
        for c in _bits(avail):
            if c < floor:
                continue
            bit = 1 << c
            used[v] |= bit
            used[u] |= bit
            colour[e] = c
            if assign(v, k, s, idx + 1, u, c):
                return True
            used[v] ^= bit
            used[u] ^= bit
            colour[e] = 0
        return False

    def place(k):
        if k == n:
            return True
        v = order[k]
        d = deg[v]
        for s in range(lo[v], hi[v] + 1):
            win[v] = ((1 << d) - 1) << s
            if assign(v, k, s, 0, -1, 0):
                return True
        win[v] = 0
        return False

    if any(h < 1 for h in hi) or t < 1:
        return INFEASIBLE, None, 0, 0
    try:
        if propagate(0) and place(0):
            return FOUND, list(colour), stats[0], stats[1]
    except _Budget:
        return LIMIT, None, stats[0], stats[1]
    return INFEASIBLE, None, stats[0], stats[1]
