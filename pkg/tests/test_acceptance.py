"""Acceptance criteria, one test each, with exact-integer checks and runtime targets.

Run ``python tests/test_acceptance.py`` for a plain pass/fail listing, or
``pytest tests/test_acceptance.py -s`` to see the same lines under pytest.
"""

import os
import random
import sys
import tempfile
import time
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).resolve().parent))

from conftest import random_connected_multigraph  # noqa: E402
from intervalspan import families as fam  # noqa: E402
from intervalspan.coloring import is_interval, normalize, reverse  # noqa: E402
from intervalspan.formats import read_certificate, write_certificate  # noqa: E402
from intervalspan.graph import are_isomorphic, enumerate_connected_cubic, is_connected  # noqa: E402
from intervalspan.solver import (  # noqa: E402
    brute_force_oracle,
    chromatic_index,
    feasible,
    min_span_by_components,
    solve,
)
from intervalspan.suite import t20_instance  # noqa: E402


def _W_free(G):
    """W with only |E| as the search ceiling, so no theorem bound prunes the answer."""
    return solve(G, ceiling=G.m)


def crit_moebius():
    bad = []
    for n in (2, 3, 4, 5):
        r = solve(fam.moebius_ladder(n), ceiling=3 * n)
        if (r.w, r.W, r.spectrum) != (3, n + 2, tuple(range(3, n + 3))):
            bad.append(f"n={n}: w={r.w} W={r.W} spectrum={r.spectrum}")
    return not bad, "; ".join(bad) or "n=2..5: w=3, W=n+2, spectrum 3..n+2"


def crit_prism():
    bad = []
    for n in (3, 4, 5):
        r = solve(fam.prism(n), ceiling=3 * n)
        if (r.w, r.W, r.spectrum) != (3, n + 2, tuple(range(3, n + 3))):
            bad.append(f"n={n}: w={r.w} W={r.W} spectrum={r.spectrum}")
    return not bad, "; ".join(bad) or "n=3..5: w=3, W=n+2, spectrum contiguous"


def crit_diamonds():
    r2 = _W_free(fam.ring_of_diamonds(2))
    ok2 = r2.w == 3 and r2.W >= 7 and set(range(3, 8)) <= set(r2.spectrum)
    d3 = fam.ring_of_diamonds(3)
    r3 = solve(d3, mode="w")
    missing = [t for t in range(3, 9) if feasible(d3, t) is None]
    ok3 = r3.w == 3 and not missing
    return ok2 and ok3, f"D2 w={r2.w} W={r2.W} spectrum={r2.spectrum}; D3 w={r3.w} infeasible_in_3..8={missing}"


def crit_cubic_multigraph_bound():
    worst, bad, count = 0, [], 0
    for n in (4, 6):
        for G in enumerate_connected_cubic(n, allow_multi=True):
            count += 1
            r = _W_free(G)
            if r.colorable:
                worst = max(worst, r.W - n)
                if r.W > n + 1:
                    bad.append(G.edges)
    return not bad, f"{count} classes, max W-|V|={worst}, violations={len(bad)}"


def crit_multigraph_tight():
    hits = []
    for G in enumerate_connected_cubic(4, allow_multi=True):
        r = _W_free(G)
        if r.W == 5 and r.certificates[5].t == 5:
            hits.append(G)
    necklace = any(are_isomorphic(G, fam.digon_necklace(2)) for G in hits)
    return bool(hits), f"{len(hits)} graph(s) on 4 vertices with W=5; digon necklace among them: {necklace}"


def crit_cubic_graph_bound():
    k4 = _W_free(fam.k4()).W
    six = [_W_free(G).W for G in enumerate_connected_cubic(6)]
    eight = enumerate_connected_cubic(8)
    eight_W = [_W_free(G).W for G in eight]
    ok = k4 == 4 and len(six) == 2 and all(w <= 5 for w in six)
    ok = ok and len(eight) == 5 and all(w is None or w <= 7 for w in eight_W)
    return ok, f"W(K4)={k4}; W on 6 vertices={six}; W on 8 vertices={eight_W}"


def crit_graph_tight():
    p3 = _W_free(fam.prism(3)).W
    hits = [G for G in enumerate_connected_cubic(8) if _W_free(G).W == 7]
    d2 = any(are_isomorphic(G, fam.ring_of_diamonds(2)) for G in hits)
    return p3 == 5 and len(hits) >= 1, f"W(prism3)={p3}; 8-vertex graphs with W=7: {len(hits)}; D2 among them: {d2}"


def crit_petersen():
    P = fam.petersen()
    chi = chromatic_index(P)
    r = solve(P)
    r_search = solve(P, use_regular_shortcut=False)
    ok = chi == 4 and r.colorable is False and r_search.colorable is False
    return ok, f"chromatic_index={chi}; colorable={r.colorable}; exhaustive search without shortcut: {r_search.colorable}"


def _t20_data():
    worst_w, uncolourable = 0, []
    simple, simple_bad, multi, multi_bad = 0, [], 0, []
    for seed in range(200):
        G = t20_instance(seed)
        w, _ = min_span_by_components(G)
        if w is None:
            uncolourable.append(seed)
            continue
        worst_w = max(worst_w, w)
        if not is_connected(G):
            continue
        W = _W_free(G).W
        if G.is_simple:
            simple += 1
            if W > G.n - 1:
                simple_bad.append(seed)
        else:
            multi += 1
            if W > G.n - 1:
                multi_bad.append((seed, G.n, W))
    return worst_w, uncolourable, simple, simple_bad, multi, multi_bad


_T20 = {}


def _t20():
    if not _T20:
        _T20["d"] = _t20_data()
    return _T20["d"]


def crit_bipartite_subcubic():
    worst_w, uncol, simple, simple_bad, multi, _ = _t20()
    ok = not uncol and worst_w <= 4 and not simple_bad
    return ok, (
        f"200 instances: uncolourable={len(uncol)}, max w={worst_w}; "
        f"W<=|V|-1 on {simple} connected simple instances, violations={len(simple_bad)}"
    )


def crit_bipartite_subcubic_literal():
    """The |V|-1 bound applied to every connected instance, parallel edges included."""
    *_, multi, multi_bad = _t20()
    shown = ", ".join(f"seed {s}: |V|={n} W={W}" for s, n, W in multi_bad[:3])
    return not multi_bad, f"{len(multi_bad)} of {multi} connected multigraph instances exceed |V|-1 ({shown})"


def crit_complete_bipartite():
    got = {(a, b): _W_free(fam.complete_bipartite(a, b)).W for a, b in ((1, 1), (2, 2), (2, 3), (3, 3))}
    return all(W == a + b - 1 for (a, b), W in got.items()), ", ".join(f"W(K{a},{b})={W}" for (a, b), W in got.items())


def crit_halin():
    ws = []
    for k in range(1, 5):
        for seed in range(8):
            ws.append(solve(fam.random_cubic_halin(k, seed), mode="w").w)
    k4 = _W_free(fam.k4()).W
    h6 = fam.random_cubic_halin(2, 0)
    five = feasible(h6, 5) is not None
    ok = all(w == 3 for w in ws) and k4 == 4 and five
    return ok, f"{len(ws)} Halin graphs on <=10 vertices, w values={sorted(set(ws))}; W(K4)={k4}; 6-vertex Halin 5-colourable: {five}"


def crit_properties():
    rng = random.Random(2024)
    corpus = [G for n in (2, 4) for G in enumerate_connected_cubic(n, allow_multi=True)]
    while len(corpus) < 102:
        n = rng.randint(2, 6)
        G = random_connected_multigraph(rng, n, rng.randint(n - 1, 7))
        if G is not None and G.m <= 7:
            corpus.append(G)
    disagree = [(G.edges, t) for G in corpus for t in range(1, 7) if (feasible(G, t) is not None) != brute_force_oracle(G, t)]

    sym_bad, trip_bad = 0, 0
    with tempfile.TemporaryDirectory() as tmp:
        for G in (fam.prism(4), fam.moebius_ladder(4), fam.digon_necklace(3), fam.ring_of_diamonds(2)):
            for t, cert in solve(G).certificates.items():
                c = list(cert.coloring)
                for k in (1, 5):
                    shifted = [x + k for x in c]
                    if is_interval(G, shifted).kind != "not_starting_at_1" or normalize(G, shifted) != c:
                        sym_bad += 1
                r = reverse(G, c, t)
                if is_interval(G, r).t != t or reverse(G, r, t) != c:
                    sym_bad += 1
                path = os.path.join(tmp, f"c{t}.cert")
                write_certificate(path, cert)
                if read_certificate(path, G) != cert:
                    trip_bad += 1

    iso_bad = 0
    bases = [fam.prism(4), fam.ring_of_diamonds(2), fam.digon_necklace(3), fam.complete_bipartite(2, 3), fam.k4()]
    refs = [solve(G) for G in bases]
    for i in range(50):
        G, ref = bases[i % 5], refs[i % 5]
        perm = list(range(G.n))
        rng.shuffle(perm)
        r = solve(G.relabel(perm))
        iso_bad += (r.colorable, r.w, r.W, r.spectrum) != (ref.colorable, ref.w, ref.W, ref.spectrum)

    ok = not disagree and not sym_bad and not trip_bad and not iso_bad
    return ok, (
        f"oracle: {len(corpus)} graphs x t=1..6, disagreements={len(disagree)}; "
        f"symmetry failures={sym_bad}; round-trip failures={trip_bad}; relabelling mismatches={iso_bad}/50"
    )


CRITERIA = [
    ("01", "moebius ladders", crit_moebius, 10),
    ("02", "prisms", crit_prism, 10),
    ("03", "rings of diamonds", crit_diamonds, 300),
    ("04", "cubic multigraph bound", crit_cubic_multigraph_bound, 300),
    ("05", "cubic multigraph tightness", crit_multigraph_tight, 60),
    ("06", "cubic graph bound", crit_cubic_graph_bound, 600),
    ("07", "cubic graph tightness", crit_graph_tight, 600),
    ("08", "petersen negative control", crit_petersen, 60),
    ("09", "bipartite subcubic multigraphs", crit_bipartite_subcubic, 300),
    ("09-literal", "|V|-1 on connected multigraph instances", crit_bipartite_subcubic_literal, 300),
    ("10", "complete bipartite", crit_complete_bipartite, 60),
    ("11", "halin graphs", crit_halin, 120),
    ("12", "property suite", crit_properties, 300),
]

# The |V|-1 bound is a statement about bipartite graphs. Parallel edges break it
# (a 3-vertex instance with a doubled edge has W = 3), so the literal reading is
# expected to fail and is kept visible rather than dropped.
KNOWN_FALSE = {"09-literal"}


def evaluate(cid, name, fn, limit):
    t0 = time.perf_counter()
    ok, detail = fn()
    dt = time.perf_counter() - t0
    passed = ok and dt < limit
    status = "pass" if passed else "FAIL"
    line = f"criterion {cid} {name}: {status} ({dt:.2f}s, limit {limit}s) {detail}"
    return passed, line


def _param(c):
    marks = []
    if c[0] in KNOWN_FALSE:
        marks.append(pytest.mark.xfail(strict=True, reason="bound does not hold once parallel edges are allowed"))
    return pytest.param(*c, id=c[0], marks=marks)


@pytest.mark.parametrize("cid,name,fn,limit", [_param(c) for c in CRITERIA])
def test_criterion(cid, name, fn, limit, capsys):
    passed, line = evaluate(cid, name, fn, limit)
    with capsys.disabled():
        print("\n" + line)
    assert passed, line


if __name__ == "__main__":
    failures = 0
    for c in CRITERIA:
        passed, line = evaluate(*c)
        print(line, flush=True)
        failures += not passed and c[0] not in KNOWN_FALSE
    sys.exit(1 if failures else 0)
