"""Executable checks of the span theorems on small instances.

Each check solves concrete graphs and compares against the stated value or
bound. Maximum spans used to test an *upper bound* are computed with the
trivial ceiling ``|E|`` so the bound under test never prunes its own search.

Outputs, under the chosen directory:

* ``summary.txt``: one ``key=value`` line per check, stable order, no timings
* ``suite.log``: timings
* ``evidence/<ID>/``: graph files and certificates backing each check
"""

from __future__ import annotations

import logging
import random
import re
import time
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable, Iterable, Optional

from . import families as fam
from .coloring import is_interval, make_certificate
from .formats import write_certificate, write_graph
from .graph import Multigraph, are_isomorphic, enumerate_connected_cubic, is_bipartite, is_bridgeless, is_connected
from .solver import DEFAULT_LIMITS, Limits, SolveReport, feasible, min_span_by_components, solve

log = logging.getLogger(__name__)

THEOREM_IDS = ("T9", "T10", "T11", "T12", "T13", "T14", "T15", "T16", "T17", "T18", "T20", "C2", "C3", "Kmn")
ENUM_MULTI_MAX = 6
ENUM_SIMPLE_MAX = 10


@dataclass
class TheoremCheck:
    id: str
    instance: str
    expected: str
    observed: str
    passed: bool
    evidence: list[str] = field(default_factory=list)
    seconds: float = 0.0

    def line(self) -> str:
        status = "pass" if self.passed else "fail"
        return f"id={self.id} instance={self.instance} expected={self.expected} observed={self.observed} status={status}"


def _span(ts: Iterable[int]) -> str:
    ts = sorted(ts)
    if not ts:
        return "-"
    if ts == list(range(ts[0], ts[-1] + 1)):
        return f"{ts[0]}..{ts[-1]}"
    return ",".join(map(str, ts))


def _slug(s: str) -> str:
    return re.sub(r"[^A-Za-z0-9_.-]+", "_", s).strip("_")


class _Run:
    def __init__(self, out: Path, max_n: int, limits: Limits):
        self.out = out
        self.max_n = max_n
        self.limits = limits
        self.checks: list[TheoremCheck] = []

    def evidence(self, tid: str, name: str, G: Multigraph, report: Optional[SolveReport] = None, ts=None) -> list[str]:
        d = self.out / "evidence" / tid
        d.mkdir(parents=True, exist_ok=True)
        base = _slug(name)
        gpath = d / f"{base}.g"
        write_graph(gpath, G)
        paths = [str(gpath.relative_to(self.out))]
        if report is not None:
            for t, cert in report.certificates.items():
                if ts is None or t in ts:
                    cpath = d / f"{base}.t{t}.cert"
                    write_certificate(cpath, cert)
                    paths.append(str(cpath.relative_to(self.out)))
        return paths

    def add(self, tid, instance, expected, observed, passed, evidence=(), seconds=0.0) -> None:
        self.checks.append(TheoremCheck(tid, instance, expected, observed, bool(passed), list(evidence), seconds))

    def solve(self, G: Multigraph, **kw) -> SolveReport:
        kw.setdefault("ceiling", G.m)
        return solve(G, limits=self.limits, **kw)


def _key_ts(r: SolveReport) -> set:
    return {t for t in (r.w, r.W) if t is not None}


def _check_upper_bound(run: _Run, tid: str, name: str, G: Multigraph, bound: int, label: str) -> None:
    t0 = time.perf_counter()
    r = run.solve(G)
    ok = (not r.colorable) or r.W <= bound
    obs = f"colorable={r.colorable};W={r.W}"
    ev = run.evidence(tid, name, G, r, _key_ts(r))
    run.add(tid, name, f"W<={label}={bound}", obs, ok, ev, time.perf_counter() - t0)


def check_T9(run: _Run) -> None:
    for n in range(2, min(run.max_n, ENUM_MULTI_MAX) + 1, 2):
        for i, G in enumerate(enumerate_connected_cubic(n, allow_multi=True)):
            _check_upper_bound(run, "T9", f"cubic_multigraph(n={n})#{i}", G, n + 1, "|V|+1")


def _best_W(run: _Run, graphs: list[Multigraph]) -> tuple[int, Optional[int], Optional[SolveReport]]:
    best, best_i, best_r = -1, None, None
    for i, G in enumerate(graphs):
        r = run.solve(G, mode="W")
        if r.colorable and r.W > best:
            best, best_i, best_r = r.W, i, r
    return best, best_i, best_r


def check_T10(run: _Run) -> None:
    for n in range(4, min(run.max_n, ENUM_MULTI_MAX) + 1, 2):
        t0 = time.perf_counter()
        graphs = enumerate_connected_cubic(n, allow_multi=True)
        best, i, r = _best_W(run, graphs)
        ev = run.evidence("T10", f"cubic_multigraph(n={n})#{i}", graphs[i], r) if i is not None else []
        run.add("T10", f"cubic_multigraph(n={n})[max]", f"maxW=|V|+1={n + 1}", f"maxW={best};witness=#{i}",
                best == n + 1, ev, time.perf_counter() - t0)
    G = fam.digon_necklace(2)
    r = run.solve(G)
    run.add("T10", "digon_necklace(2)", "W=5", f"W={r.W}", r.W == 5, run.evidence("T10", "digon_necklace(2)", G, r, {r.W}))


def check_T11(run: _Run) -> None:
    G = fam.k4()
    r = run.solve(G)
    run.add("T11", "k4", "W=|V|=4", f"W={r.W}", r.W == 4, run.evidence("T11", "k4", G, r, _key_ts(r)))
    for n in range(6, min(run.max_n, ENUM_SIMPLE_MAX) + 1, 2):
        for i, G in enumerate(enumerate_connected_cubic(n)):
            _check_upper_bound(run, "T11", f"cubic_graph(n={n})#{i}", G, n - 1, "|V|-1")


def check_T12(run: _Run) -> None:
    for n in range(6, min(run.max_n, ENUM_SIMPLE_MAX) + 1, 2):
        t0 = time.perf_counter()
        graphs = enumerate_connected_cubic(n)
        best, i, r = _best_W(run, graphs)
        ev = run.evidence("T12", f"cubic_graph(n={n})#{i}", graphs[i], r) if i is not None else []
        run.add("T12", f"cubic_graph(n={n})[max]", f"maxW=|V|-1={n - 1}", f"maxW={best};witness=#{i}",
                best == n - 1, ev, time.perf_counter() - t0)
    for name, G, want in (("prism(3)", fam.prism(3), 5), ("ring_of_diamonds(2)", fam.ring_of_diamonds(2), 7)):
        if G.n > run.max_n:
            continue
        r = run.solve(G, mode="W")
        run.add("T12", name, f"W=|V|-1={want}", f"W={r.W}", r.W == want, run.evidence("T12", name, G, r))


def _planar_cubic(max_n: int) -> list[tuple[str, Multigraph]]:
    out = []
    for n in range(3, max_n // 2 + 1):
        out.append((f"prism({n})", fam.prism(n)))
    for k in range(2, max_n // 4 + 1):
        out.append((f"ring_of_diamonds({k})", fam.ring_of_diamonds(k)))
    for r in range(1, (max_n - 8) // 2 + 1):
        out.append((f"diamond_ladder({r})", fam.diamond_ladder(r)))
    for name, G in _halin_graphs(max_n):
        out.append((name, G))
    return out


def _halin_graphs(max_n: int, seeds: int = 8) -> list[tuple[str, Multigraph]]:
    """Non-isomorphic cubic Halin graphs from seeds ``0..seeds-1`` with at most ``max_n`` vertices."""
    out: list[tuple[str, Multigraph]] = []
    for ni in range(1, (max_n - 2) // 2 + 1):
        kept: list[Multigraph] = []
        for s in range(seeds):
            G = fam.random_cubic_halin(ni, s)
            if any(are_isomorphic(G, H, max_n=12) for H in kept):
                continue
            kept.append(G)
            out.append((f"halin(n_internal={ni},seed={s})", G))
    return out


def check_T13(run: _Run) -> None:
    for name, G in _planar_cubic(run.max_n):
        t0 = time.perf_counter()
        if not is_bridgeless(G):
            continue
        r = run.solve(G, mode="w", planar=True)
        run.add("T13", name, "w=3", f"w={r.w}", r.colorable and r.w == 3,
                run.evidence("T13", name, G, r), time.perf_counter() - t0)


def check_T14(run: _Run) -> None:
    pool = _planar_cubic(run.max_n)
    for size in range(6, run.max_n + 1, 2):
        t0 = time.perf_counter()
        found = None
        for name, G in pool:
            if G.n != size:
                continue
            cert = feasible(G, size - 1, run.limits)
            if cert is not None:
                found = (name, G, cert)
                break
        ev = []
        if found:
            d = run.out / "evidence" / "T14"
            d.mkdir(parents=True, exist_ok=True)
            ev = run.evidence("T14", found[0], found[1])
            cpath = d / f"{_slug(found[0])}.t{size - 1}.cert"
            write_certificate(cpath, found[2])
            ev.append(str(cpath.relative_to(run.out)))
        run.add("T14", f"planar_cubic(n={size})[search]", f"exists:W=|V|-1={size - 1}",
                f"witness={found[0] if found else '-'}", found is not None, ev, time.perf_counter() - t0)


def check_T15(run: _Run) -> None:
    by_size: dict[int, list[tuple[str, Multigraph]]] = {}
    for name, G in _halin_graphs(run.max_n):
        by_size.setdefault(G.n, []).append((name, G))
        r = run.solve(G, mode="w", planar=True)
        run.add("T15", name, "w=3", f"w={r.w}", r.colorable and r.w == 3, run.evidence("T15", name, G, r))
    for size, graphs in sorted(by_size.items()):
        target = size // 2 + 2
        hit = None
        for name, G in graphs:
            cert = feasible(G, target, run.limits)
            if cert is not None:
                hit = (name, G, cert)
                break
        ev = []
        if hit:
            ev = run.evidence("T15", hit[0], hit[1])
            cpath = run.out / "evidence" / "T15" / f"{_slug(hit[0])}.t{target}.cert"
            write_certificate(cpath, hit[2])
            ev.append(str(cpath.relative_to(run.out)))
        run.add("T15", f"halin(n={size})[search]", f"exists:W>=|V|/2+2={target}",
                f"witness={hit[0] if hit else '-'}", hit is not None, ev)


def _family_span_check(run: _Run, tid: str, name: str, G: Multigraph, W_expected: int) -> None:
    t0 = time.perf_counter()
    r = run.solve(G)
    want = list(range(3, W_expected + 1))
    ok = r.colorable and r.w == 3 and r.W == W_expected and list(r.spectrum) == want
    run.add(tid, name, f"w=3;W={W_expected};spectrum={_span(want)}",
            f"w={r.w};W={r.W};spectrum={_span(r.spectrum)}", ok, run.evidence(tid, name, G, r), time.perf_counter() - t0)


def check_T16(run: _Run) -> None:
    for n in range(2, max(2, min(5, run.max_n // 2)) + 1):
        _family_span_check(run, "T16", f"moebius_ladder({n})", fam.moebius_ladder(n), n + 2)


def check_T17(run: _Run) -> None:
    for n in range(3, max(3, min(5, run.max_n // 2)) + 1):
        _family_span_check(run, "T17", f"prism({n})", fam.prism(n), n + 2)


def check_T18(run: _Run) -> None:
    for k in (2, 3):
        t0 = time.perf_counter()
        G = fam.ring_of_diamonds(k)
        name = f"ring_of_diamonds({k})"
        lower = 3 * k // 2 + 4 if k % 2 == 0 else 3 * ((k + 1) // 2) + 2
        rw = run.solve(G, mode="w", planar=True)
        certs = {}
        for t in range(3, lower + 1):
            cert = feasible(G, t, run.limits)
            if cert is not None:
                certs[t] = cert
        ok = rw.w == 3 and sorted(certs) == list(range(3, lower + 1))
        ev = run.evidence("T18", name, G)
        for t, cert in certs.items():
            p = run.out / "evidence" / "T18" / f"{_slug(name)}.t{t}.cert"
            write_certificate(p, cert)
            ev.append(str(p.relative_to(run.out)))
        run.add("T18", name, f"w=3;W>={lower};spectrum>={_span(range(3, lower + 1))}",
                f"w={rw.w};feasible={_span(certs)}", ok, ev, time.perf_counter() - t0)


def t20_instance(seed: int) -> Multigraph:
    """Seeded bipartite subcubic multigraph with parts of size at most 6."""
    rng = random.Random(seed)
    n1, n2 = rng.randint(1, 6), rng.randint(1, 6)
    target = rng.randint(1, 3 * min(n1, n2))
    return fam.random_bipartite_subcubic(n1, n2, target, True, seed)


def check_T20(run: _Run, count: int = 200) -> None:
    t0 = time.perf_counter()
    bad, max_w, simple_conn, cor1_bad = [], 0, 0, []
    for seed in range(count):
        G = t20_instance(seed)
        w, colours = min_span_by_components(G, run.limits)
        name = f"random_bipartite_subcubic(seed={seed})"
        d = run.out / "evidence" / "T20"
        d.mkdir(parents=True, exist_ok=True)
        write_graph(d / f"{_slug(name)}.g", G)
        if w is None or w > 4 or is_interval(G, colours).t != w:
            bad.append(seed)
            continue
        write_certificate(d / f"{_slug(name)}.t{w}.cert", make_certificate(G, colours))
        max_w = max(max_w, w)
        if G.is_simple and is_connected(G):
            simple_conn += 1
            r = run.solve(G, mode="W")
            if r.W > G.n - 1:
                cor1_bad.append(seed)
    run.add("T20", f"random_bipartite_subcubic[seeds=0..{count - 1}]", "colorable;w<=4",
            f"colorable={count - len(bad)}/{count};max_w={max_w};failing={','.join(map(str, bad)) or '-'}",
            not bad, ["evidence/T20"], time.perf_counter() - t0)
    run.add("T20", f"random_bipartite_subcubic[connected_simple={simple_conn}]", "W<=|V|-1",
            f"violations={','.join(map(str, cor1_bad)) or '-'}", not cor1_bad)


def check_C2(run: _Run) -> None:
    for n in range(4, min(run.max_n, ENUM_MULTI_MAX) + 1, 2):
        t0 = time.perf_counter()
        graphs = [G for G in enumerate_connected_cubic(n, allow_multi=True) if is_bipartite(G)]
        worst, all_ok, best_i, best_r = 0, True, None, None
        for i, G in enumerate(graphs):
            r = run.solve(G, mode="W")
            all_ok &= bool(r.colorable) and r.W <= n + 1
            if r.colorable and r.W > worst:
                worst, best_i, best_r = r.W, i, r
        ev = run.evidence("C2", f"bipartite_cubic_multigraph(n={n})#{best_i}", graphs[best_i], best_r) if best_i is not None else []
        run.add("C2", f"bipartite_cubic_multigraph(n={n})[all={len(graphs)}]",
                f"colorable;maxW=|V|+1={n + 1}", f"all_colorable={all_ok};maxW={worst}",
                all_ok and worst == n + 1, ev, time.perf_counter() - t0)


def check_C3(run: _Run) -> None:
    cands = [(f"prism({n})", fam.prism(n)) for n in range(6, run.max_n // 2 + 1, 2)]
    cands += [(f"moebius_ladder({n})", fam.moebius_ladder(n)) for n in range(7, run.max_n // 2 + 1, 2)]
    for name, G in cands:
        if G.n < 12 or not is_bipartite(G):
            continue
        t0 = time.perf_counter()
        # search from |E| so the |V|-3 bound under test cannot prune its own check
        r = run.solve(G, mode="W", ceiling=G.m)
        ok = bool(r.colorable) and r.W <= G.n - 3
        run.add("C3", name, f"colorable;W<=|V|-3={G.n - 3}", f"colorable={r.colorable};W={r.W}", ok,
                run.evidence("C3", name, G, r), time.perf_counter() - t0)


def check_Kmn(run: _Run) -> None:
    for a, b in ((1, 1), (2, 2), (2, 3), (3, 3)):
        G = fam.complete_bipartite(a, b)
        name = f"complete_bipartite({a},{b})"
        r = run.solve(G)
        run.add("Kmn", name, f"W=m+n-1={a + b - 1}", f"W={r.W}", r.W == a + b - 1, run.evidence("Kmn", name, G, r, {r.W}))


CHECKS: dict[str, Callable[[_Run], None]] = {
    "T9": check_T9,
    "T10": check_T10,
    "T11": check_T11,
    "T12": check_T12,
    "T13": check_T13,
    "T14": check_T14,
    "T15": check_T15,
    "T16": check_T16,
    "T17": check_T17,
    "T18": check_T18,
    "T20": check_T20,
    "C2": check_C2,
    "C3": check_C3,
    "Kmn": check_Kmn,
}


def run_theorem_suite(
    ids: Iterable[str] = THEOREM_IDS,
    out_dir: Path | str = "suite-out",
    max_n: int = 12,
    limits: Limits = DEFAULT_LIMITS,
) -> list[TheoremCheck]:
    """Run the selected checks; a failing check never aborts the others."""
    ids = list(ids)
    unknown = [i for i in ids if i not in CHECKS]
    if unknown:
        raise ValueError(f"unknown theorem ids: {unknown}")
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    run = _Run(out, max_n, limits)
    timings = []
    for tid in THEOREM_IDS:
        if tid not in ids:
            continue
        t0 = time.perf_counter()
        before = len(run.checks)
        try:
            CHECKS[tid](run)
        except Exception as exc:  # noqa: BLE001 - recorded as a failed check
            log.exception("check %s crashed", tid)
            run.add(tid, "-", "no-error", f"error:{type(exc).__name__}", False)
        timings.append((tid, len(run.checks) - before, time.perf_counter() - t0))

    order = {tid: i for i, tid in enumerate(THEOREM_IDS)}
    checks = sorted(enumerate(run.checks), key=lambda p: (order[p[1].id], p[0]))
    checks = [c for _, c in checks]
    (out / "summary.txt").write_text("".join(c.line() + "\n" for c in checks))
    with open(out / "suite.log", "w") as fh:
        fh.write(f"started {time.strftime('%Y-%m-%dT%H:%M:%S')}\n")
        for tid, count, secs in timings:
            fh.write(f"{tid} checks={count} seconds={secs:.3f}\n")
    return checks


__all__ = ["THEOREM_IDS", "TheoremCheck", "run_theorem_suite", "t20_instance"]
