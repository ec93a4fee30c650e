"""Exact interval-colorability, minimum/maximum span and spectrum.

Feasibility of a given span ``t`` is decided by the window-start search in
:mod:`intervalspan.kernel`, one top-level branch per *anchor* vertex (the
lowest-labelled vertex whose window starts at colour 1). Every positive answer
is returned as a verified :class:`IntervalCertificate`; negative answers are the
result of an exhausted search and carry no certificate.
"""

from __future__ import annotations

import logging
import time
import warnings
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from . import kernel
from .coloring import IntervalCertificate, make_certificate, verify_certificate
from .graph import GraphClassTags, Multigraph, classify, is_connected

__all__ = [
    "Limits",
    "SolverError",
    "HypothesisError",
    "SearchBudgetExceeded",
    "Bound",
    "BoundSet",
    "SearchStats",
    "SolveReport",
    "bound_set",
    "chromatic_index",
    "proper_edge_coloring",
    "feasible",
    "solve",
    "brute_force_oracle",
]

log = logging.getLogger(__name__)


class SolverError(ValueError):
    pass


class HypothesisError(SolverError):
    """The input violates a hypothesis the operation relies on (e.g. connectivity)."""


class SearchBudgetExceeded(SolverError):
    """The node budget ran out; the question is left undecided."""


@dataclass(frozen=True)
class Limits:
    max_n: int = 14
    max_m: int = 24
    max_nodes: int = 50_000_000
    threads: int = 1

    def check(self, G: Multigraph) -> None:
        if G.n > self.max_n or G.m > self.max_m:
            raise SolverError(
                f"size guard: n={G.n}, m={G.m} exceeds n<={self.max_n}, m<={self.max_m} "
                "(raise Limits.max_n / max_m to override)"
            )

    def __post_init__(self) -> None:
        if self.max_n > 14 or self.max_m > 24:
            warnings.warn(
                f"size guards raised to n<={self.max_n}, m<={self.max_m}; runtimes may be long",
                stacklevel=3,
            )


DEFAULT_LIMITS = Limits()


def t_cap(G: Multigraph) -> int:
    """Largest span the solver will try: 2n-3 for graphs, |E| for multigraphs."""
    return min(2 * G.n - 3, G.m) if G.is_simple else G.m


# ---------------------------------------------------------------- bounds


@dataclass(frozen=True)
class Bound:
    key: str
    value: int
    source: str


@dataclass(frozen=True)
class BoundSet:
    bounds: tuple[Bound, ...]

    @property
    def effective(self) -> int:
        return min(b.value for b in self.bounds)

    @property
    def effective_bound(self) -> int:
        return self.effective

    def get(self, key: str) -> Optional[Bound]:
        return next((b for b in self.bounds if b.key == key), None)

    def without(self, *keys: str) -> "BoundSet":
        return BoundSet(tuple(b for b in self.bounds if b.key not in keys))

    def __str__(self) -> str:
        lines = [f"{b.key}={b.value} ({b.source})" for b in self.bounds]
        lines.append(f"effective={self.effective}")
        return "\n".join(lines)


def _biregular(G: Multigraph, tags: GraphClassTags) -> Optional[tuple[int, int]]:
    if not tags.bipartite or tags.parts is None:
        return None
    a_side, b_side = tags.parts
    if not a_side or not b_side:
        return None
    da = {G.degrees[v] for v in a_side}
    db = {G.degrees[v] for v in b_side}
    if len(da) == 1 and len(db) == 1:
        return da.pop(), db.pop()
    return None


def bound_set(G: Multigraph, tags: Optional[GraphClassTags] = None, planar: bool = False) -> BoundSet:
    """Upper bounds on the maximum span whose hypotheses hold for ``G``.

    Structural tags are always recomputed; only ``planar_by_construction`` is
    taken from the caller (from ``tags`` or ``planar``).
    """
    if tags is not None:
        planar = planar or tags.planar_by_construction
    tags = classify(G, planar_by_construction=planar)
    n = G.n
    out = [Bound("edge_count", G.m, "every colour is used by at least one edge")]
    if not tags.connected:
        return BoundSet(tuple(out))
    if tags.simple:
        out.append(Bound("general", 2 * n - 3, "connected graph: W <= 2|V|-3"))
        if n >= 3:
            out.append(Bound("general_n3", 2 * n - 4, "connected graph, |V|>=3: W <= 2|V|-4"))
        r = tags.regular_degree
        if r is not None and n >= 2 * r + 2:
            out.append(Bound("regular", 2 * n - 5, f"connected {r}-regular graph, |V|>={2 * r + 2}: W <= 2|V|-5"))
        if tags.triangle_free:
            out.append(Bound("triangle_free", n - 1, "connected triangle-free graph: W <= |V|-1"))
        if tags.planar_by_construction:
            out.append(Bound("planar", (11 * n) // 6, "connected planar graph: W <= 11|V|/6"))
        if tags.cubic:
            out.append(Bound("cubic_graph", n, "connected cubic graph: W <= |V|"))
            if n != 4:  # the only cubic graph on 4 vertices is K_4
                out.append(Bound("cubic_graph_not_k4", n - 1, "connected cubic graph other than K_4: W <= |V|-1"))
        ab = _biregular(G, tags)
        if ab is not None and n >= 2 * (ab[0] + ab[1]):
            out.append(
                Bound("biregular", n - 3, f"connected ({ab[0]},{ab[1]})-biregular bipartite graph, |V|>={2 * sum(ab)}: W <= |V|-3")
            )
    if tags.cubic:
        out.append(Bound("cubic_multigraph", n + 1, "connected cubic multigraph: W <= |V|+1"))
    return BoundSet(tuple(out))


# ---------------------------------------------------------------- chromatic index


def proper_edge_coloring(G: Multigraph, k: int, max_nodes: int = 10_000_000) -> Optional[list[int]]:
    """A proper edge colouring with colours ``1..k`` or None (backtracking)."""
    if G.m == 0:
        return []
    if k < G.max_degree:
        return None
    # edges in BFS order of their endpoints so constraints bite early
    order_v, seen = [], [False] * G.n
    for s in range(G.n):
        if seen[s]:
            continue
        seen[s] = True
        queue = [s]
        while queue:
            x = queue.pop(0)
            order_v.append(x)
            for y in G.neighbors[x]:
                if not seen[y]:
                    seen[y] = True
                    queue.append(y)
    rank = {v: i for i, v in enumerate(order_v)}
    edges = sorted(range(G.m), key=lambda e: (min(rank[x] for x in G.edges[e]), max(rank[x] for x in G.edges[e]), e))
    used = [0] * G.n
    colour = [0] * G.m
    nodes = [0]

    def rec(i: int, top: int) -> bool:
        if i == len(edges):
            return True
        nodes[0] += 1
        if nodes[0] > max_nodes:
            raise SearchBudgetExceeded(f"edge colouring search exceeded {max_nodes} nodes")
        e = edges[i]
        u, v = G.edges[e]
        blocked = used[u] | used[v]
        # colours above top+1 are interchangeable with top+1
        for c in range(1, min(k, top + 1) + 1):
            bit = 1 << c
            if blocked & bit:
                continue
            used[u] |= bit
            used[v] |= bit
            colour[e] = c
            if rec(i + 1, max(top, c)):
                return True
            used[u] ^= bit
            used[v] ^= bit
        colour[e] = 0
        return False

    return list(colour) if rec(0, 0) else None


def chromatic_index(G: Multigraph, max_m: int = 30) -> int:
    if G.m < 1:
        raise SolverError("chromatic index needs at least one edge")
    if G.m > max_m:
        raise SolverError(f"size guard: m={G.m} > {max_m}")
    k = G.max_degree
    while proper_edge_coloring(G, k) is None:
        k += 1
    return k


# ---------------------------------------------------------------- feasibility


@dataclass
class SearchStats:
    nodes: int = 0
    prunes: int = 0
    wall_time: float = 0.0
    calls: int = 0

    def add(self, other: "SearchStats") -> None:
        self.nodes += other.nodes
        self.prunes += other.prunes
        self.wall_time += other.wall_time
        self.calls += other.calls


def _run_anchor(search, G: Multigraph, t: int, anchor: int, max_nodes: int):
    eu = [u for u, _ in G.edges]
    ev = [v for _, v in G.edges]
    return search(G.n, eu, ev, t, anchor, max_nodes)


def _search_fn(G: Multigraph, t: int):
    if kernel.BACKEND == "compiled" and (G.n > 64 or t > 62):
        return kernel.get("python")
    return kernel.search_anchor


def feasible(
    G: Multigraph,
    t: int,
    limits: Limits = DEFAULT_LIMITS,
    stats: Optional[SearchStats] = None,
) -> Optional[IntervalCertificate]:
    """A certificate for an interval ``t``-colouring of connected ``G``, or None.

    ``limits.max_nodes`` is the node budget of each anchor branch. With
    ``limits.threads > 1`` branches run concurrently; the reported certificate is
    always the one from the least successful anchor.
    """
    if not is_connected(G):
        raise HypothesisError("feasible() requires a connected graph (colour range of components is not tied)")
    limits.check(G)
    st = SearchStats(calls=1)
    t0 = time.perf_counter()
    try:
        if G.m == 0 or t < 1 or t > G.m or t < G.max_degree:
            return None
        search = _search_fn(G, t)
        results = []
        if limits.threads > 1 and G.n > 1:
            with ThreadPoolExecutor(max_workers=limits.threads) as pool:
                futures = [pool.submit(_run_anchor, search, G, t, a, limits.max_nodes) for a in range(G.n)]
                for fut in futures:
                    results.append(fut.result())
                    if results[-1][0] != kernel.INFEASIBLE:
                        for f in futures:
                            f.cancel()
                        break
        else:
            for a in range(G.n):
                results.append(_run_anchor(search, G, t, a, limits.max_nodes))
                if results[-1][0] != kernel.INFEASIBLE:
                    break
        for status, _, nodes, prunes in results:
            st.nodes += nodes
            st.prunes += prunes
        status, colours = results[-1][0], results[-1][1]
        if status == kernel.LIMIT:
            raise SearchBudgetExceeded(
                f"t={t}: anchor {len(results) - 1} exceeded {limits.max_nodes} nodes; raise max_nodes"
            )
        if status != kernel.FOUND:
            return None
        cert = make_certificate(G, colours)
        ok, why = verify_certificate(cert)
        if not ok or cert.t != t:
            raise SolverError(f"internal error: search produced an invalid certificate: {why}")
        return cert
    finally:
        st.wall_time = time.perf_counter() - t0
        if stats is not None:
            stats.add(st)


# ---------------------------------------------------------------- solve


@dataclass
class SolveReport:
    colorable: Optional[bool]
    w: Optional[int] = None
    W: Optional[int] = None
    spectrum: tuple[int, ...] = ()
    certificates: dict[int, IntervalCertificate] = field(default_factory=dict)
    infeasible: tuple[int, ...] = ()
    upper: int = 0
    bounds: Optional[BoundSet] = None
    chromatic_index: Optional[int] = None
    mode: str = "all"
    stats: SearchStats = field(default_factory=SearchStats)

    def summary_lines(self) -> list[str]:
        def fmt(x):
            return "-" if x is None else str(x)

        return [
            f"colorable={fmt(self.colorable)}",
            f"w={fmt(self.w)}",
            f"W={fmt(self.W)}",
            "spectrum=" + (",".join(map(str, self.spectrum)) or "-"),
            "infeasible=" + (",".join(map(str, self.infeasible)) or "-"),
            f"upper={self.upper}",
            f"chromatic_index={fmt(self.chromatic_index)}",
            f"nodes={self.stats.nodes}",
            f"prunes={self.stats.prunes}",
        ]


def solve(
    G: Multigraph,
    mode: str = "all",
    limits: Limits = DEFAULT_LIMITS,
    ceiling: Optional[int] = None,
    planar: bool = False,
    use_regular_shortcut: bool = True,
) -> SolveReport:
    """Compute colourability, ``w``, ``W`` and the spectrum of connected ``G``.

    ``mode`` is ``"all"`` (default), ``"w"`` or ``"W"``. The top-down search for
    ``W`` starts at ``ceiling`` if given, else at the effective theorem bound.
    """
    if mode not in ("all", "w", "W"):
        raise ValueError(f"unknown mode {mode!r}")
    if not is_connected(G):
        raise HypothesisError("solve() requires a connected graph; the span bounds assume connectivity")
    if G.m == 0:
        raise HypothesisError("solve() requires at least one edge")
    limits.check(G)
    bounds = bound_set(G, planar=planar)
    upper = min(ceiling if ceiling is not None else bounds.effective, t_cap(G))
    report = SolveReport(colorable=None, upper=upper, bounds=bounds, mode=mode)
    t0 = time.perf_counter()
    tried: dict[int, Optional[IntervalCertificate]] = {}

    def check(t: int) -> bool:
        if t not in tried:
            tried[t] = feasible(G, t, limits, report.stats)
        return tried[t] is not None

    delta = G.max_degree
    shortcut_says_no = False
    if use_regular_shortcut and all(d == delta for d in G.degrees):
        # a regular graph is interval-colourable iff it is class 1
        report.chromatic_index = chromatic_index(G)
        shortcut_says_no = report.chromatic_index != delta

    if shortcut_says_no:
        report.colorable = False
    elif mode in ("all", "w"):
        report.w = next((t for t in range(delta, upper + 1) if check(t)), None)
        report.colorable = report.w is not None
    if report.colorable is not False and mode in ("all", "W"):
        floor_t = report.w if report.w is not None else delta
        report.W = next((t for t in range(upper, floor_t - 1, -1) if check(t)), None)
        if report.colorable is None:
            report.colorable = report.W is not None
    if report.colorable and mode == "all":
        for t in range(report.w, report.W + 1):
            check(t)

    report.spectrum = tuple(sorted(t for t, c in tried.items() if c is not None))
    report.infeasible = tuple(sorted(t for t, c in tried.items() if c is None))
    report.certificates = {t: c for t, c in sorted(tried.items()) if c is not None}
    report.stats.wall_time = time.perf_counter() - t0
    return report


# ---------------------------------------------------------------- oracle


def brute_force_oracle(G: Multigraph, t: int, chunk: int = 1 << 20) -> bool:
    """Enumerate all ``t**m`` colourings and test the interval definition directly.

    Hard caps ``m <= 8`` and ``t <= 8``. Vectorised with numpy, independent of the
    search code path.
    """
    m = G.m
    if m > 8 or t > 8:
        raise SolverError("brute-force oracle is capped at m <= 8 and t <= 8")
    if m == 0 or t < 1:
        return False
    total = t**m
    place = t ** np.arange(m, dtype=np.int64)
    full = (1 << (t + 1)) - 2  # bits 1..t
    incident = [np.array(G.incidence[v], dtype=np.int64) for v in range(G.n)]
    for start in range(0, total, chunk):
        idx = np.arange(start, min(total, start + chunk), dtype=np.int64)
        cols = (idx[:, None] // place[None, :]) % t + 1
        ok = np.ones(len(idx), dtype=bool)
        for inc in incident:
            if len(inc) < 2:
                continue
            s = np.sort(cols[:, inc], axis=1)
            ok &= np.all(np.diff(s, axis=1) == 1, axis=1)
        if not ok.any():
            continue
        used = np.bitwise_or.reduce(np.left_shift(np.int64(1), cols[ok]), axis=1)
        if np.any(used == full):
            return True
    return False


def min_span_by_components(G: Multigraph, limits: Limits = DEFAULT_LIMITS) -> tuple[Optional[int], Optional[list[int]]]:
    """Minimum span of a possibly disconnected multigraph, with a witness colouring.

    Each component is coloured independently from colour 1, so the minimum span
    of ``G`` is the largest minimum span of its components (edgeless components
    impose nothing). Returns ``(None, None)`` if some component is not
    interval-colourable.
    """
    from .graph import components, induced_component

    colours = [0] * G.m
    span = 0
    for verts in components(G):
        H, _, emap = induced_component(G, verts)
        if H.m == 0:
            continue
        rep = solve(H, mode="w", limits=limits)
        if not rep.colorable:
            return None, None
        span = max(span, rep.w)
        for e_sub, c in enumerate(rep.certificates[rep.w].coloring):
            colours[emap[e_sub]] = c
    if G.m == 0:
        return None, None
    return span, colours
