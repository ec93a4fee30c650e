import random

import pytest

from intervalspan.graph import Multigraph, is_connected

# K_4 edge order from families.k4(): ab, ac, ad, bc, bd, cd
K4_FOUR = [1, 2, 3, 3, 2, 4]
K4_THREE = [1, 2, 3, 3, 2, 1]


def random_connected_multigraph(rng: random.Random, n: int, m: int, max_deg: int = 3, allow_multi: bool = True):
    """Random connected multigraph: a random spanning tree, then extra slots up to ``m``.

    Returns None when the degree cap makes ``m`` unreachable.
    """
    deg = [0] * n
    edges = []
    order = list(range(n))
    rng.shuffle(order)
    for i in range(1, n):
        cands = [u for u in order[:i] if deg[u] < max_deg]
        if not cands:
            return None
        u, v = rng.choice(cands), order[i]
        edges.append((u, v))
        deg[u] += 1
        deg[v] += 1
    tries = 0
    while len(edges) < m and tries < 200:
        tries += 1
        u, v = rng.sample(range(n), 2)
        if deg[u] >= max_deg or deg[v] >= max_deg:
            continue
        if not allow_multi and (min(u, v), max(u, v)) in {(min(a, b), max(a, b)) for a, b in edges}:
            continue
        edges.append((u, v))
        deg[u] += 1
        deg[v] += 1
    if len(edges) != m:
        return None
    G = Multigraph(n, tuple(edges))
    assert is_connected(G)
    return G


@pytest.fixture
def rng():
    return random.Random(12345)
