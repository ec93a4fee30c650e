"""Deterministic generators for the named graph families and seeded random corpora."""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Optional, Sequence

from .graph import GraphError, Multigraph, is_connected

__all__ = [
    "FamilySpec",
    "FAMILIES",
    "PLANAR_FAMILIES",
    "moebius_ladder",
    "prism",
    "ring_of_diamonds",
    "diamond_ladder",
    "complete_bipartite",
    "k4",
    "petersen",
    "digon_necklace",
    "halin_from_tree",
    "random_cubic_tree",
    "random_cubic_halin",
    "random_bipartite_subcubic",
    "build",
]


@dataclass(frozen=True)
class FamilySpec:
    family: str
    params: tuple[int, ...] = ()
    seed: Optional[int] = None

    def __str__(self) -> str:
        p = ",".join(str(x) for x in self.params)
        s = f"{self.family}({p})"
        return s if self.seed is None else f"{s}@{self.seed}"


def moebius_ladder(n: int) -> Multigraph:
    if n < 2:
        raise GraphError("Moebius ladder needs n >= 2")
    N = 2 * n
    edges = [(i, (i + 1) % N) for i in range(N)]
    edges += [(i, i + n) for i in range(n)]
    return Multigraph(N, tuple(edges))


def prism(n: int) -> Multigraph:
    if n < 3:
        raise GraphError("prism C_n x K_2 needs n >= 3")
    edges = [(i, (i + 1) % n) for i in range(n)]
    edges += [(n + i, n + (i + 1) % n) for i in range(n)]
    edges += [(i, i + n) for i in range(n)]
    return Multigraph(2 * n, tuple(edges))


def ring_of_diamonds(k: int) -> Multigraph:
    """``k`` copies of K_4 - e joined in a cycle.

    Diamond ``i`` occupies vertices ``4i..4i+3``; ``4i`` and ``4i+3`` are its
    degree-2 ends. The connector joins ``4i+3`` to ``4(i+1 mod k)``.
    """
    if k < 2:
        raise GraphError("ring of diamonds needs k >= 2")
    edges = []
    for i in range(k):
        a, b, c, d = 4 * i, 4 * i + 1, 4 * i + 2, 4 * i + 3
        edges += [(a, b), (a, c), (b, c), (b, d), (c, d)]
    for i in range(k):
        edges.append((4 * i + 3, 4 * ((i + 1) % k)))
    return Multigraph(4 * k, tuple(edges))


def diamond_ladder(r: int) -> Multigraph:
    """Two diamonds whose degree-2 ends are joined through a ladder of ``r`` rungs.

    ``r = 0`` is the ring of two diamonds. Planar, cubic, 2-connected, ``8 + 2r``
    vertices.
    """
    if r < 0:
        raise GraphError("diamond ladder needs r >= 0")
    edges = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]
    a, b, nxt = 2, 3, 4
    for _ in range(r):
        edges += [(a, nxt), (b, nxt + 1), (nxt, nxt + 1)]
        a, b, nxt = nxt, nxt + 1, nxt + 2
    p, q, x, y = nxt, nxt + 1, nxt + 2, nxt + 3
    edges += [(a, p), (b, q), (p, x), (p, y), (q, x), (q, y), (x, y)]
    return Multigraph(nxt + 4, tuple(edges))


def complete_bipartite(m: int, n: int) -> Multigraph:
    if m < 1 or n < 1:
        raise GraphError("complete bipartite graph needs both parts non-empty")
    return Multigraph(m + n, tuple((i, m + j) for i in range(m) for j in range(n)))


def k4() -> Multigraph:
    return Multigraph(4, ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)))


def petersen() -> Multigraph:
    edges = [(i, (i + 1) % 5) for i in range(5)]
    edges += [(i, i + 5) for i in range(5)]
    edges += [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Multigraph(10, tuple(edges))


def digon_necklace(n: int) -> Multigraph:
    """Cycle on ``2n`` vertices whose edges alternate between doubled and single."""
    if n < 2:
        raise GraphError("digon necklace needs n >= 2")
    N = 2 * n
    edges = []
    for i in range(n):
        a, b = 2 * i, 2 * i + 1
        edges += [(a, b), (a, b), (b, (b + 1) % N)]
    return Multigraph(N, tuple(edges))


def _leaves(tree: Multigraph) -> list[int]:
    return [v for v in range(tree.n) if tree.degrees[v] == 1]


def halin_from_tree(tree: Multigraph, leaf_cycle: Sequence[int]) -> Multigraph:
    """Close ``tree`` into a cubic Halin graph with a cycle through ``leaf_cycle``.

    The leaf order is trusted to come from some plane embedding of the tree
    (a DFS order always does).
    """
    if tree.n < 4:
        raise GraphError("Halin construction needs a tree with at least 4 vertices")
    if tree.m != tree.n - 1 or not is_connected(tree) or not tree.is_simple:
        raise GraphError("input is not a tree")
    for v, d in enumerate(tree.degrees):
        if d == 2:
            raise GraphError(f"tree vertex {v} has degree 2")
        if d not in (1, 3):
            raise GraphError(f"tree vertex {v} has degree {d}; a cubic Halin graph needs internal degree 3")
    leaves = _leaves(tree)
    if sorted(leaf_cycle) != leaves:
        raise GraphError("leaf_cycle is not a permutation of the tree's leaves")
    L = len(leaf_cycle)
    cycle = [(leaf_cycle[i], leaf_cycle[(i + 1) % L]) for i in range(L)]
    G = Multigraph(tree.n, tree.edges + tuple(cycle))
    if any(d != 3 for d in G.degrees) or not G.is_simple:
        raise GraphError("Halin closure is not a simple cubic graph")
    return G


def random_cubic_tree(n_internal: int, seed: int) -> tuple[Multigraph, list[int]]:
    """Seeded cubic tree by leaf splitting, plus its DFS leaf order from vertex 0."""
    if n_internal < 1:
        raise GraphError("need at least one internal vertex")
    rng = random.Random(seed)
    edges = [(0, 1), (0, 2), (0, 3)]
    leaves = [1, 2, 3]
    n = 4
    for _ in range(n_internal - 1):
        leaf = leaves.pop(rng.randrange(len(leaves)))
        edges += [(leaf, n), (leaf, n + 1)]
        leaves += [n, n + 1]
        n += 2
    tree = Multigraph(n, tuple(edges))
    # children in insertion order give a fixed rotation system, hence a plane embedding
    children: list[list[int]] = [[] for _ in range(n)]
    for u, v in edges:
        children[u].append(v)
    order, stack = [], [0]
    while stack:
        v = stack.pop()
        if not children[v]:
            order.append(v)
        stack.extend(reversed(children[v]))
    return tree, order


def random_cubic_halin(n_internal: int, seed: int) -> Multigraph:
    tree, order = random_cubic_tree(n_internal, seed)
    return halin_from_tree(tree, order)


def random_bipartite_subcubic(
    n1: int, n2: int, target_m: int, allow_multi: bool, seed: int, max_restarts: int = 1000
) -> Multigraph:
    """Random bipartite multigraph with ``target_m`` edge slots and max degree 3.

    Parts are ``0..n1-1`` and ``n1..n1+n2-1``. Slots are drawn one at a time among
    vertex pairs with spare capacity; a dead end restarts from the same RNG stream.
    """
    if n1 < 1 or n2 < 1:
        raise GraphError("both parts must be non-empty")
    cap = 3 * min(n1, n2)
    if not allow_multi:
        cap = min(cap, n1 * n2)
    if not 0 <= target_m <= cap:
        raise GraphError(f"target_m={target_m} infeasible for parts ({n1}, {n2}); max is {cap}")
    rng = random.Random(seed)
    for _ in range(max_restarts):
        spare = [3] * (n1 + n2)
        present: set[tuple[int, int]] = set()
        edges: list[tuple[int, int]] = []
        while len(edges) < target_m:
            options = [
                (a, n1 + b)
                for a in range(n1)
                for b in range(n2)
                if spare[a] and spare[n1 + b] and (allow_multi or (a, n1 + b) not in present)
            ]
            if not options:
                break
            u, v = options[rng.randrange(len(options))]
            spare[u] -= 1
            spare[v] -= 1
            present.add((u, v))
            edges.append((u, v))
        if len(edges) == target_m:
            return Multigraph(n1 + n2, tuple(edges))
    raise GraphError(f"sampler gave up after {max_restarts} restarts")


FAMILIES = {
    "moebius_ladder": moebius_ladder,
    "prism": prism,
    "ring_of_diamonds": ring_of_diamonds,
    "diamond_ladder": diamond_ladder,
    "complete_bipartite": complete_bipartite,
    "k4": k4,
    "petersen": petersen,
    "digon_necklace": digon_necklace,
    "halin": random_cubic_halin,
    "random_bipartite_subcubic": random_bipartite_subcubic,
}

PLANAR_FAMILIES = frozenset({"prism", "ring_of_diamonds", "diamond_ladder", "k4", "halin"})


def build(spec: FamilySpec) -> Multigraph:
    try:
        fn = FAMILIES[spec.family]
    except KeyError:
        raise GraphError(f"unknown family {spec.family!r}") from None
    args = list(spec.params)
    if spec.family == "halin":
        return fn(*args, spec.seed or 0)
    if spec.family == "random_bipartite_subcubic":
        n1, n2, m, multi = args
        return fn(n1, n2, m, bool(multi), spec.seed or 0)
    return fn(*args)
