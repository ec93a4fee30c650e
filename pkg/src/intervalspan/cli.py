"""Command-line front end: ``intervalspan <subcommand> ...``.

Exit codes: 0 success, 1 verification or solve failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path
from typing import Optional, Sequence

from . import families as fam
from .coloring import ColoringError, verify_certificate
from .formats import FormatError, read_certificate, read_graph, to_dot, write_certificate, write_graph
from .graph import GraphError
from .solver import Limits, SolverError, bound_set, solve
from .suite import THEOREM_IDS, run_theorem_suite

log = logging.getLogger("intervalspan")


class UsageError(Exception):
    pass


def _need(args, *names):
    missing = [n for n in names if getattr(args, n) is None]
    if missing:
        raise UsageError(f"family {args.family!r} needs " + ", ".join("--" + m for m in missing))


def _generate(args) -> "fam.Multigraph":
    f = args.family
    if f in ("moebius_ladder", "prism", "digon_necklace"):
        _need(args, "n")
        return fam.FAMILIES[f](args.n)
    if f in ("ring_of_diamonds", "diamond_ladder"):
        _need(args, "k")
        return fam.FAMILIES[f](args.k)
    if f == "complete_bipartite":
        _need(args, "m", "n")
        return fam.complete_bipartite(args.m, args.n)
    if f in ("k4", "petersen"):
        return fam.FAMILIES[f]()
    if f == "halin":
        # 2n vertices: a cubic tree with n-1 internal vertices
        _need(args, "n")
        return fam.random_cubic_halin(args.n - 1, args.seed or 0)
    if f == "random_bipartite_subcubic":
        # parts of size m and n, k edge slots, parallel edges allowed
        _need(args, "m", "n", "k")
        return fam.random_bipartite_subcubic(args.m, args.n, args.k, True, args.seed or 0)
    raise UsageError(f"unknown family {f!r}")


def cmd_gen(args) -> int:
    G = _generate(args)
    write_graph(args.output, G)
    print(f"wrote {args.output}: n={G.n} m={G.m}")
    return 0


def cmd_verify(args) -> int:
    G = read_graph(args.graph)
    cert = read_certificate(args.cert, G)
    ok, problems = verify_certificate(cert)
    if not ok:
        for p in problems:
            print(f"verify: {p}", file=sys.stderr)
        return 1
    print(f"ok t={cert.t}")
    return 0


def cmd_solve(args) -> int:
    G = read_graph(args.graph)
    mode = "w" if args.w_only else "W" if args.W_only else "all"
    limits = Limits(max_nodes=args.max_nodes, threads=args.threads)
    report = solve(G, mode=mode, limits=limits)
    lines = [f"graph={args.graph}", f"mode={mode}"] + report.summary_lines()
    if args.output:
        out = Path(args.output)
        for t, cert in report.certificates.items():
            cpath = out.with_name(f"{out.name}.t{t}.cert")
            write_certificate(cpath, cert)
            lines.append(f"certificate_t{t}={cpath}")
        out.write_text("\n".join(lines) + "\n")
    print("\n".join(lines))
    return 0


def cmd_bounds(args) -> int:
    G = read_graph(args.graph)
    print(bound_set(G))
    return 0


def cmd_suite(args) -> int:
    ids = list(THEOREM_IDS) if args.theorem == "all" else [args.theorem]
    if args.theorem != "all" and args.theorem not in THEOREM_IDS:
        raise UsageError(f"unknown theorem id {args.theorem!r}; choose from {', '.join(THEOREM_IDS)} or all")
    checks = run_theorem_suite(ids, args.output, max_n=args.max_n)
    for c in checks:
        print(c.line())
    failed = [c for c in checks if not c.passed]
    if failed:
        print(f"{len(failed)} of {len(checks)} checks failed", file=sys.stderr)
        return 1
    return 0


def cmd_export_dot(args) -> int:
    G = read_graph(args.graph)
    colours = None
    if args.cert:
        colours = read_certificate(args.cert, G).coloring
    Path(args.output).write_text(to_dot(G, colours))
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="intervalspan", description=__doc__.splitlines()[0])
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", help="generate a named graph family")
    g.add_argument("--family", required=True, choices=sorted(fam.FAMILIES))
    g.add_argument("--n", type=int)
    g.add_argument("--k", type=int)
    g.add_argument("--m", type=int)
    g.add_argument("--seed", type=int)
    g.add_argument("-o", dest="output", required=True)
    g.set_defaults(func=cmd_gen)

    v = sub.add_parser("verify", help="check a certificate against its graph")
    v.add_argument("--graph", required=True)
    v.add_argument("--cert", required=True)
    v.set_defaults(func=cmd_verify)

    s = sub.add_parser("solve", help="compute w, W and the spectrum")
    s.add_argument("--graph", required=True)
    mx = s.add_mutually_exclusive_group()
    mx.add_argument("--w-only", dest="w_only", action="store_true")
    mx.add_argument("--W-only", dest="W_only", action="store_true")
    mx.add_argument("--spectrum", action="store_true")
    s.add_argument("--max-nodes", type=int, default=Limits.max_nodes)
    s.add_argument("--threads", type=int, default=1)
    s.add_argument("-o", dest="output")
    s.set_defaults(func=cmd_solve)

    b = sub.add_parser("bounds", help="print the applicable upper bounds on W")
    b.add_argument("--graph", required=True)
    b.set_defaults(func=cmd_bounds)

    t = sub.add_parser("suite", help="run theorem checks and write evidence")
    t.add_argument("--theorem", required=True)
    t.add_argument("--max-n", type=int, default=12)
    t.add_argument("-o", dest="output", required=True)
    t.set_defaults(func=cmd_suite)

    d = sub.add_parser("export-dot", help="write Graphviz DOT with colours as edge labels")
    d.add_argument("--graph", required=True)
    d.add_argument("--cert")
    d.add_argument("-o", dest="output", required=True)
    d.set_defaults(func=cmd_export_dot)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    try:
        return args.func(args)
    except UsageError as exc:
        parser.error(str(exc))  # exits 2
    except (FormatError, GraphError, ColoringError, SolverError, OSError) as exc:
        print(f"{args.command}: {exc}", file=sys.stderr)
        return 1
    return 0  # pragma: no cover


if __name__ == "__main__":
    sys.exit(main())
