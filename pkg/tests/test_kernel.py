import os
import random
import subprocess
import sys

import pytest

from conftest import random_connected_multigraph
from intervalspan import families as fam
from intervalspan import kernel
from intervalspan.graph import enumerate_connected_cubic

compiled_only = pytest.mark.skipif("compiled" not in kernel.BACKENDS, reason="extension not built")


def _corpus():
    graphs = enumerate_connected_cubic(6, allow_multi=True) + enumerate_connected_cubic(8)
    graphs += [fam.petersen(), fam.ring_of_diamonds(2), fam.complete_bipartite(2, 3)]
    rng = random.Random(9)
    while len(graphs) < 60:
        G = random_connected_multigraph(rng, rng.randint(3, 8), rng.randint(4, 11), max_deg=4)
        if G is not None:
            graphs.append(G)
    return graphs


def _call(name, G, t, a, budget=10**7):
    eu = [u for u, _ in G.edges]
    ev = [v for _, v in G.edges]
    status, colours, nodes, prunes = kernel.get(name)(G.n, eu, ev, t, a, budget)
    return status, None if colours is None else list(colours), nodes, prunes


@compiled_only
def test_backends_agree_exactly():
    for G in _corpus():
        for t in range(G.max_degree, min(G.m, 2 * G.n) + 1):
            for a in range(G.n):
                assert _call("python", G, t, a) == _call("compiled", G, t, a), (G.edges, t, a)


@compiled_only
def test_backends_agree_on_budget_cutoff():
    G = fam.petersen()
    for budget in (1, 7, 50, 400):
        assert _call("python", G, 6, 0, budget) == _call("compiled", G, 6, 0, budget)
        assert _call("python", G, 6, 0, budget)[0] == kernel.LIMIT


def test_python_backend_statuses():
    assert _call("python", fam.k4(), 4, 0)[0] == kernel.FOUND
    assert _call("python", fam.k4(), 5, 0)[0] == kernel.INFEASIBLE
    assert _call("python", fam.k4(), 2, 0)[0] == kernel.INFEASIBLE


def test_env_forces_python_backend():
    env = dict(os.environ, INTERVALSPAN_BACKEND="python")
    out = subprocess.run(
        [sys.executable, "-c", "import intervalspan; print(intervalspan.BACKEND)"],
        env=env, capture_output=True, text=True, check=True,
    )
    assert out.stdout.strip() == "python"


def test_env_rejects_unknown_backend():
    env = dict(os.environ, INTERVALSPAN_BACKEND="fortran")
    out = subprocess.run([sys.executable, "-c", "import intervalspan"], env=env, capture_output=True, text=True)
    assert out.returncode != 0 and "not available" in out.stderr
