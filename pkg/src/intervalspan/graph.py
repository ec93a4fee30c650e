"""Loopless multigraphs, structural predicates and small cubic enumeration."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Optional, Sequence

__all__ = [
    "Multigraph",
    "GraphClassTags",
    "GraphError",
    "degree",
    "is_connected",
    "components",
    "is_bipartite",
    "is_triangle_free",
    "is_cubic",
    "is_subcubic",
    "is_regular",
    "is_bridgeless",
    "are_isomorphic",
    "enumerate_connected_cubic",
    "classify",
]

ISO_HARD_CAP = 12


class GraphError(ValueError):
    """Raised for malformed graphs or out-of-range graph queries."""


@dataclass(frozen=True)
class Multigraph:
    """Undirected loopless multigraph on vertices ``0..n-1``.

    ``edges`` is an ordered tuple of vertex pairs; position in the tuple is the
    edge index. Parallel edges are separate slots with separate indices.
    """

    n: int
    edges: tuple[tuple[int, int], ...] = ()

    def __post_init__(self) -> None:
        if self.n < 1:
            raise GraphError(f"vertex count must be positive, got {self.n}")
        norm = []
        for i, (u, v) in enumerate(self.edges):
            u, v = int(u), int(v)
            if u == v:
                raise GraphError(f"edge {i} is a loop at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise GraphError(f"edge {i} = ({u}, {v}) has an endpoint outside 0..{self.n - 1}")
            norm.append((u, v) if u < v else (v, u))
        object.__setattr__(self, "edges", tuple(norm))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> "Multigraph":
        return cls(n, tuple((int(u), int(v)) for u, v in edges))

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        deg = [0] * self.n
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        return tuple(deg)

    @cached_property
    def incidence(self) -> tuple[tuple[int, ...], ...]:
        """Edge indices incident to each vertex, ascending."""
        inc: list[list[int]] = [[] for _ in range(self.n)]
        for i, (u, v) in enumerate(self.edges):
            inc[u].append(i)
            inc[v].append(i)
        return tuple(tuple(x) for x in inc)

    @cached_property
    def neighbors(self) -> tuple[tuple[int, ...], ...]:
        """Distinct neighbours of each vertex, ascending."""
        nb: list[set[int]] = [set() for _ in range(self.n)]
        for u, v in self.edges:
            nb[u].add(v)
            nb[v].add(u)
        return tuple(tuple(sorted(s)) for s in nb)

    @cached_property
    def multiplicity(self) -> Counter:
        return Counter(self.edges)

    def mult(self, u: int, v: int) -> int:
        return self.multiplicity.get((u, v) if u < v else (v, u), 0)

    @property
    def max_degree(self) -> int:
        return max(self.degrees)

    @property
    def is_simple(self) -> bool:
        return all(k == 1 for k in self.multiplicity.values())

    def other(self, e: int, v: int) -> int:
        a, b = self.edges[e]
        return b if a == v else a

    def relabel(self, perm: Sequence[int]) -> "Multigraph":
        """Return the graph with vertex ``v`` renamed ``perm[v]``; edge order kept."""
        if sorted(perm) != list(range(self.n)):
            raise GraphError("relabelling must be a permutation of the vertices")
        return Multigraph(self.n, tuple((perm[u], perm[v]) for u, v in self.edges))

    def edge_multiset(self) -> Counter:
        return Counter(self.edges)

    def __repr__(self) -> str:
        return f"Multigraph(n={self.n}, m={self.m})"


@dataclass(frozen=True)
class GraphClassTags:
    simple: bool
    connected: bool
    bipartite: bool
    parts: Optional[tuple[tuple[int, ...], tuple[int, ...]]]
    triangle_free: bool
    cubic: bool
    subcubic: bool
    regular_degree: Optional[int]
    bridgeless: Optional[bool]
    planar_by_construction: bool = False
    extra: dict = field(default_factory=dict, compare=False)


def _check_vertex(G: Multigraph, v: int) -> None:
    if not 0 <= v < G.n:
        raise GraphError(f"vertex {v} out of range 0..{G.n - 1}")


def degree(G: Multigraph, v: int) -> int:
    _check_vertex(G, v)
    return G.degrees[v]


def components(G: Multigraph) -> list[list[int]]:
    """Vertex sets of the connected components, each sorted, ordered by least vertex."""
    seen = [False] * G.n
    out = []
    for s in range(G.n):
        if seen[s]:
            continue
        seen[s] = True
        comp, stack = [], [s]
        while stack:
            x = stack.pop()
            comp.append(x)
            for y in G.neighbors[x]:
                if not seen[y]:
                    seen[y] = True
                    stack.append(y)
        out.append(sorted(comp))
    return out


def is_connected(G: Multigraph) -> bool:
    return len(components(G)) == 1


def induced_component(G: Multigraph, verts: Sequence[int]) -> tuple[Multigraph, list[int], list[int]]:
    """Subgraph on ``verts`` renumbered ``0..k-1``.

    Returns the subgraph, the original vertex of each new vertex, and the original
    edge index of each new edge.
    """
    index = {v: i for i, v in enumerate(verts)}
    edges, emap = [], []
    for e, (u, v) in enumerate(G.edges):
        if u in index and v in index:
            edges.append((index[u], index[v]))
            emap.append(e)
    return Multigraph(len(verts), tuple(edges)), list(verts), emap


def is_bipartite(G: Multigraph) -> Optional[tuple[tuple[int, ...], tuple[int, ...]]]:
    side = [-1] * G.n
    for s in range(G.n):
        if side[s] >= 0:
            continue
        side[s] = 0
        stack = [s]
        while stack:
            x = stack.pop()
            for y in G.neighbors[x]:
                if side[y] < 0:
                    side[y] = 1 - side[x]
                    stack.append(y)
                elif side[y] == side[x]:
                    return None
    return (
        tuple(v for v in range(G.n) if side[v] == 0),
        tuple(v for v in range(G.n) if side[v] == 1),
    )


def is_triangle_free(G: Multigraph) -> bool:
    nb = [set(x) for x in G.neighbors]
    for u, v in G.multiplicity:
        if nb[u] & nb[v]:
            return False
    return True


def is_regular(G: Multigraph) -> Optional[int]:
    d = G.degrees
    return d[0] if all(x == d[0] for x in d) else None


def is_cubic(G: Multigraph) -> bool:
    return is_regular(G) == 3


def is_subcubic(G: Multigraph) -> bool:
    return G.max_degree <= 3


def is_bridgeless(G: Multigraph) -> bool:
    """True iff no single edge slot disconnects ``G`` (Tarjan low-link)."""
    if not is_connected(G):
        raise GraphError("is_bridgeless requires a connected graph")
    disc = [-1] * G.n
    low = [0] * G.n
    timer = 0
    # iterative DFS; the tree edge is skipped by index so parallel slots count as back edges
    for root in range(G.n):
        if disc[root] >= 0:
            continue
        disc[root] = low[root] = timer
        timer += 1
        stack = [(root, -1, iter(G.incidence[root]))]
        while stack:
            v, via, it = stack[-1]
            advanced = False
            for e in it:
                if e == via:
                    continue
                w = G.other(e, v)
                if disc[w] < 0:
                    disc[w] = low[w] = timer
                    timer += 1
                    stack.append((w, e, iter(G.incidence[w])))
                    advanced = True
                    break
                low[v] = min(low[v], disc[w])
            if advanced:
                continue
            stack.pop()
            if stack:
                p = stack[-1][0]
                low[p] = min(low[p], low[v])
                if low[v] > disc[p]:
                    return False
    return True


def _vertex_invariants(G: Multigraph) -> list[tuple]:
    nb = [set(x) for x in G.neighbors]
    inv = []
    for v in range(G.n):
        tri = sum(1 for a in nb[v] for b in nb[v] if a < b and b in nb[a])
        mults = tuple(sorted(G.mult(v, w) for w in nb[v]))
        nbdeg = tuple(sorted(G.degrees[w] for w in nb[v]))
        inv.append((G.degrees[v], mults, tri, nbdeg))
    return inv


def graph_invariant(G: Multigraph) -> tuple:
    return (G.n, G.m, tuple(sorted(_vertex_invariants(G))))


def are_isomorphic(G: Multigraph, H: Multigraph, max_n: int = 10) -> Optional[dict[int, int]]:
    """Vertex bijection ``G -> H`` preserving edge multiplicities, or None.

    Plain backtracking over vertex images, pruned by per-vertex invariants and by
    multiplicity agreement with the already-mapped vertices.
    """
    if max(G.n, H.n) > min(max_n, ISO_HARD_CAP):
        raise GraphError(f"isomorphism test limited to n <= {min(max_n, ISO_HARD_CAP)}")
    if G.n != H.n or G.m != H.m:
        return None
    ig, ih = _vertex_invariants(G), _vertex_invariants(H)
    if sorted(ig) != sorted(ih):
        return None

    # map G's vertices in a connectivity-first order so partial checks bite early
    order: list[int] = []
    placed = [False] * G.n
    while len(order) < G.n:
        best, score = -1, -1
        for v in range(G.n):
            if placed[v]:
                continue
            s = sum(1 for w in G.neighbors[v] if placed[w])
            if s > score:
                best, score = v, s
        placed[best] = True
        order.append(best)

    gm = [[G.mult(a, b) for b in range(G.n)] for a in range(G.n)]
    hm = [[H.mult(a, b) for b in range(H.n)] for a in range(H.n)]
    image = [-1] * G.n
    used = [False] * H.n

    def extend(i: int) -> bool:
        if i == G.n:
            return True
        v = order[i]
        for x in range(H.n):
            if used[x] or ih[x] != ig[v]:
                continue
            if any(gm[v][order[j]] != hm[x][image[order[j]]] for j in range(i)):
                continue
            image[v] = x
            used[x] = True
            if extend(i + 1):
                return True
            used[x] = False
        image[v] = -1
        return False

    if not extend(0):
        return None
    return {v: image[v] for v in range(G.n)}


def enumerate_connected_cubic(n: int, allow_multi: bool = False, max_n: Optional[int] = None) -> list[Multigraph]:
    """One representative per isomorphism class of connected loopless cubic (multi)graphs.

    Labelled graphs are generated by stub pairing (smallest open vertex first,
    partners non-decreasing, fresh vertices opened in label order) and then
    deduplicated with :func:`are_isomorphic`.
    """
    if n % 2:
        raise GraphError(f"no cubic graph has an odd number of vertices (n={n})")
    if n < 2:
        raise GraphError("n must be at least 2")
    limit = max_n if max_n is not None else (6 if allow_multi else 10)
    if n > limit:
        raise GraphError(f"enumeration guard: n={n} exceeds {limit}")
    if not allow_multi and n < 4:
        return []

    need = [3] * n
    touched = [False] * n
    edges: list[tuple[int, int]] = []
    last_partner = [-1] * n
    found: list[Multigraph] = []

    def rec() -> None:
        i = next((v for v in range(n) if need[v]), -1)
        if i < 0:
            found.append(Multigraph(n, tuple(edges)))
            return
        if not touched[i] and i > 0:
            return  # earlier vertices form a closed component
        fresh_taken = False
        for j in range(max(i + 1, last_partner[i]), n):
            if not need[j]:
                continue
            if not touched[j]:
                if fresh_taken:
                    continue
                fresh_taken = True
            if not allow_multi and j == last_partner[i]:
                continue
            prev = (last_partner[i], touched[i], touched[j])
            need[i] -= 1
            need[j] -= 1
            touched[i] = touched[j] = True
            last_partner[i] = j
            edges.append((i, j))
            rec()
            edges.pop()
            need[i] += 1
            need[j] += 1
            last_partner[i], touched[i], touched[j] = prev

    rec()

    classes: dict[tuple, list[Multigraph]] = {}
    reps: list[Multigraph] = []
    for G in found:
        key = graph_invariant(G)
        bucket = classes.setdefault(key, [])
        if any(are_isomorphic(G, H, max_n=ISO_HARD_CAP) for H in bucket):
            continue
        bucket.append(G)
        reps.append(G)
    reps = [G for G in reps if is_connected(G)]
    reps.sort(key=lambda G: (sorted(G.multiplicity.values(), reverse=True), G.edges))
    return reps


def classify(G: Multigraph, planar_by_construction: bool = False) -> GraphClassTags:
    connected = is_connected(G)
    parts = is_bipartite(G)
    return GraphClassTags(
        simple=G.is_simple,
        connected=connected,
        bipartite=parts is not None,
        parts=parts,
        triangle_free=is_triangle_free(G),
        cubic=is_cubic(G),
        subcubic=is_subcubic(G),
        regular_degree=is_regular(G),
        bridgeless=is_bridgeless(G) if connected else None,
        planar_by_construction=planar_by_construction,
    )
