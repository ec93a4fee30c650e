"""Line-oriented text formats for graphs and certificates, plus DOT export.

Graph file::

    p igraph <n> <m>
    e <u> <v>          (m lines, edge index order, 0-based)

Certificate file::

    p icert <n> <m> <t>
    k <edge-index> <color>   (m lines)
    w <vertex> <lo> <hi>     (n lines)

Lines starting with ``c`` are comments. Files end with a newline.
"""

from __future__ import annotations

from pathlib import Path
from typing import Optional, Sequence, Union

from .coloring import IntervalCertificate
from .graph import GraphError, Multigraph

PathLike = Union[str, Path]


class FormatError(ValueError):
    pass


def _records(text: str, what: str) -> list[list[str]]:
    if not text.endswith("\n"):
        raise FormatError(f"{what}: missing trailing newline")
    out = []
    for lineno, line in enumerate(text.split("\n")[:-1], 1):
        tok = line.split()
        if not tok or tok[0] == "c":
            continue
        out.append([str(lineno)] + tok)
    return out


def _ints(rec: list[str], count: int, what: str) -> list[int]:
    if len(rec) != count + 2:
        raise FormatError(f"{what} line {rec[0]}: expected {count} fields after {rec[1]!r}")
    try:
        return [int(x) for x in rec[2:]]
    except ValueError:
        raise FormatError(f"{what} line {rec[0]}: non-integer field") from None


def dumps_graph(G: Multigraph) -> str:
    lines = [f"p igraph {G.n} {G.m}"]
    lines += [f"e {u} {v}" for u, v in G.edges]
    return "\n".join(lines) + "\n"


def loads_graph(text: str) -> Multigraph:
    recs = _records(text, "graph")
    if not recs or recs[0][1:3] != ["p", "igraph"]:
        raise FormatError("graph: first record must be 'p igraph <n> <m>'")
    head = recs[0]
    if len(head) != 5:
        raise FormatError("graph: header must be 'p igraph <n> <m>'")
    try:
        n, m = int(head[3]), int(head[4])
    except ValueError:
        raise FormatError("graph: non-integer header field") from None
    edges = []
    for rec in recs[1:]:
        if rec[1] != "e":
            raise FormatError(f"graph line {rec[0]}: unexpected record {rec[1]!r}")
        edges.append(tuple(_ints(rec, 2, "graph")))
    if len(edges) != m:
        raise FormatError(f"graph: header says {m} edges, found {len(edges)}")
    try:
        return Multigraph(n, tuple(edges))
    except GraphError as exc:
        raise FormatError(f"graph: {exc}") from None


def dumps_certificate(cert: IntervalCertificate) -> str:
    G = cert.graph
    lines = [f"p icert {G.n} {G.m} {cert.t}"]
    lines += [f"k {e} {x}" for e, x in enumerate(cert.coloring)]
    lines += [f"w {v} {lo} {hi}" for v, (lo, hi) in enumerate(cert.windows)]
    return "\n".join(lines) + "\n"


def loads_certificate(text: str, G: Multigraph) -> IntervalCertificate:
    """Parse a certificate against its graph; structural checks only, no verification."""
    recs = _records(text, "certificate")
    if not recs or recs[0][1:3] != ["p", "icert"]:
        raise FormatError("certificate: first record must be 'p icert <n> <m> <t>'")
    if len(recs[0]) != 6:
        raise FormatError("certificate: header must be 'p icert <n> <m> <t>'")
    try:
        n, m, t = (int(x) for x in recs[0][3:])
    except ValueError:
        raise FormatError("certificate: non-integer header field") from None
    if (n, m) != (G.n, G.m):
        raise FormatError(f"certificate is for n={n}, m={m} but graph has n={G.n}, m={G.m}")
    colors: list[Optional[int]] = [None] * m
    windows: list[Optional[tuple[int, int]]] = [None] * n
    for rec in recs[1:]:
        if rec[1] == "k":
            e, x = _ints(rec, 2, "certificate")
            if not 0 <= e < m or colors[e] is not None:
                raise FormatError(f"certificate line {rec[0]}: bad or repeated edge index {e}")
            colors[e] = x
        elif rec[1] == "w":
            v, lo, hi = _ints(rec, 3, "certificate")
            if not 0 <= v < n or windows[v] is not None:
                raise FormatError(f"certificate line {rec[0]}: bad or repeated vertex {v}")
            windows[v] = (lo, hi)
        else:
            raise FormatError(f"certificate line {rec[0]}: unexpected record {rec[1]!r}")
    if any(x is None for x in colors):
        raise FormatError("certificate: some edges have no color")
    if any(w is None for w in windows):
        raise FormatError("certificate: some vertices have no window")
    return IntervalCertificate(G, tuple(colors), t, tuple(windows))  # type: ignore[arg-type]


def to_dot(G: Multigraph, coloring: Optional[Sequence[int]] = None) -> str:
    lines = ["graph G {"]
    lines += [f"  {v};" for v in range(G.n) if not G.degrees[v]]
    for e, (u, v) in enumerate(G.edges):
        if coloring is None:
            lines.append(f"  {u} -- {v};")
        else:
            lines.append(f'  {u} -- {v} [label="{coloring[e]}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def read_graph(path: PathLike) -> Multigraph:
    return loads_graph(Path(path).read_text())


def write_graph(path: PathLike, G: Multigraph) -> None:
    Path(path).write_text(dumps_graph(G))


def read_certificate(path: PathLike, G: Multigraph) -> IntervalCertificate:
    return loads_certificate(Path(path).read_text(), G)


def write_certificate(path: PathLike, cert: IntervalCertificate) -> None:
    Path(path).write_text(dumps_certificate(cert))
