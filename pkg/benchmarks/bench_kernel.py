"""Time the compiled and pure-Python search kernels on the same workloads.

    python benchmarks/bench_kernel.py [--repeat 3] [--quick]

Each workload runs every anchor branch of one feasibility question, so both
backends expand exactly the same nodes; only the per-node cost differs.
"""

import argparse
import statistics
import time

from intervalspan import families as fam
from intervalspan import kernel
from intervalspan.graph import enumerate_connected_cubic

WORKLOADS = [
    ("K4 t=4", fam.k4(), 4),
    ("prism(5) t=7", fam.prism(5), 7),
    ("moebius(5) t=7", fam.moebius_ladder(5), 7),
    ("D3 t=8", fam.ring_of_diamonds(3), 8),
    ("petersen t=5", fam.petersen(), 5),
    ("petersen t=6", fam.petersen(), 6),
    ("prism(6) t=9", fam.prism(6), 9),
]


def run_all_anchors(search, G, t):
    eu = [u for u, _ in G.edges]
    ev = [v for _, v in G.edges]
    nodes = 0
    for a in range(G.n):
        _, _, k, _ = search(G.n, eu, ev, t, a, 10**9)
        nodes += k
    return nodes


def bench(search, G, t, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        nodes = run_all_anchors(search, G, t)
        times.append(time.perf_counter() - t0)
    return statistics.median(times), nodes


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--quick", action="store_true", help="skip the slowest workloads")
    args = ap.parse_args()

    work = list(WORKLOADS)
    if not args.quick:
        for i, G in enumerate(enumerate_connected_cubic(10)[:4]):
            work.append((f"cubic10#{i} t=9", G, 9))
    if args.quick:
        work = work[:5]

    names = sorted(kernel.BACKENDS)
    print(f"backends: {', '.join(names)} (selected: {kernel.BACKEND})")
    header = f"{'workload':<18} {'nodes':>9}" + "".join(f" {n + ' ms':>12}" for n in names)
    if len(names) == 2:
        header += f" {'speedup':>8}"
    print(header)
    for label, G, t in work:
        row, nodes, ms = [], None, {}
        for n in names:
            sec, k = bench(kernel.get(n), G, t, args.repeat)
            if nodes is not None and k != nodes:
                raise SystemExit(f"{label}: backends disagree on node count ({nodes} vs {k})")
            nodes, ms[n] = k, sec * 1000
            row.append(f" {ms[n]:>12.2f}")
        line = f"{label:<18} {nodes:>9}" + "".join(row)
        if len(names) == 2:
            line += f" {ms['python'] / max(ms['compiled'], 1e-9):>7.1f}x"
        print(line)


if __name__ == "__main__":
    main()
