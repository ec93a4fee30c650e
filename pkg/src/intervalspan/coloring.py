"""Edge colorings, the interval property, certificates and symmetry transforms.

A coloring is a sequence of positive integers indexed by edge index.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .graph import Multigraph

__all__ = [
    "ColoringError",
    "Verdict",
    "IntervalCertificate",
    "vertex_spectrum",
    "is_interval",
    "normalize",
    "reverse",
    "windows_of",
    "make_certificate",
    "verify_certificate",
]

NOT_PROPER = "not_proper"
NOT_CONSECUTIVE = "not_consecutive"
GAP_IN_COLORS = "gap_in_colors"
NOT_STARTING_AT_1 = "not_starting_at_1"

# window stored for an isolated vertex: an empty run
EMPTY_WINDOW = (1, 0)


class ColoringError(ValueError):
    pass


@dataclass(frozen=True)
class Verdict:
    ok: bool
    t: Optional[int] = None
    kind: Optional[str] = None
    witness: Optional[int] = None

    def __bool__(self) -> bool:
        return self.ok

    def __str__(self) -> str:
        if self.ok:
            return f"ok({self.t})"
        return f"violation({self.kind}, {self.witness})"


def _check_total(G: Multigraph, c: Sequence[int]) -> None:
    if len(c) != G.m:
        raise ColoringError(f"coloring has {len(c)} entries for {G.m} edges")
    for e, x in enumerate(c):
        if x is None:
            raise ColoringError(f"edge {e} is uncolored")
        if int(x) != x or x < 1:
            raise ColoringError(f"edge {e} has invalid color {x!r}")


def vertex_spectrum(G: Multigraph, c: Sequence[int], v: int) -> list[int]:
    """Colors on the edge slots at ``v``, sorted (parallel slots counted separately)."""
    _check_total(G, c)
    return sorted(c[e] for e in G.incidence[v])


def is_interval(G: Multigraph, c: Sequence[int]) -> Verdict:
    """Decide whether ``c`` is an interval t-coloring; report the first violation.

    Vertices are scanned in ascending order, then the color range.
    """
    _check_total(G, c)
    for v in range(G.n):
        cols = sorted(c[e] for e in G.incidence[v])
        for a, b in zip(cols, cols[1:]):
            if a == b:
                return Verdict(False, kind=NOT_PROPER, witness=v)
        if cols and cols[-1] - cols[0] != len(cols) - 1:
            return Verdict(False, kind=NOT_CONSECUTIVE, witness=v)
    if not c:
        return Verdict(False, kind=GAP_IN_COLORS, witness=1)
    used = set(c)
    lo, hi = min(used), max(used)
    if lo != 1:
        return Verdict(False, kind=NOT_STARTING_AT_1, witness=lo)
    for x in range(1, hi + 1):
        if x not in used:
            return Verdict(False, kind=GAP_IN_COLORS, witness=x)
    return Verdict(True, t=hi)


def normalize(G: Multigraph, c: Sequence[int]) -> list[int]:
    _check_total(G, c)
    if not c:
        return []
    shift = min(c) - 1
    return [x - shift for x in c]


def reverse(G: Multigraph, c: Sequence[int], t: int) -> list[int]:
    """Mirror an interval t-coloring: color ``x`` becomes ``t + 1 - x``."""
    verdict = is_interval(G, c)
    if not verdict or verdict.t != t:
        raise ColoringError(f"input is not an interval {t}-coloring ({verdict})")
    return [t + 1 - x for x in c]


def windows_of(G: Multigraph, c: Sequence[int]) -> list[tuple[int, int]]:
    out = []
    for v in range(G.n):
        cols = [c[e] for e in G.incidence[v]]
        out.append((min(cols), max(cols)) if cols else EMPTY_WINDOW)
    return out


@dataclass(frozen=True)
class IntervalCertificate:
    graph: Multigraph
    coloring: tuple[int, ...]
    t: int
    windows: tuple[tuple[int, int], ...]


def make_certificate(G: Multigraph, c: Sequence[int]) -> IntervalCertificate:
    verdict = is_interval(G, c)
    if not verdict:
        raise ColoringError(f"cannot certify a non-interval coloring: {verdict}")
    return IntervalCertificate(G, tuple(int(x) for x in c), verdict.t, tuple(windows_of(G, c)))


def verify_certificate(cert: IntervalCertificate) -> tuple[bool, list[str]]:
    """Recheck a certificate from scratch. Returns (accepted, diagnostics)."""
    G, c, t = cert.graph, cert.coloring, cert.t
    problems: list[str] = []
    try:
        verdict = is_interval(G, c)
    except ColoringError as exc:
        return False, [str(exc)]
    if not verdict:
        problems.append(f"coloring rejected: {verdict}")
    elif verdict.t != t:
        problems.append(f"declared t={t} but colors used are 1..{verdict.t}")
    if len(cert.windows) != G.n:
        problems.append(f"{len(cert.windows)} windows for {G.n} vertices")
        return False, problems
    actual = windows_of(G, c)
    for v, ((lo, hi), want) in enumerate(zip(cert.windows, actual)):
        if (lo, hi) != want:
            problems.append(f"vertex {v}: stored window ({lo}, {hi}) but coloring gives {want}")
        elif hi - lo + 1 != G.degrees[v]:
            problems.append(f"vertex {v}: window ({lo}, {hi}) has length {hi - lo + 1}, degree {G.degrees[v]}")
    return not problems, problems
