"""Benchmark the compiled elimination kernels against the pure-Python twin.

Runs the two hot kernels (sparse_rank, bareiss_det) on workloads shaped
like the ones the library actually produces: boundary matrices of chain
complexes and graph Laplacian minors.

Usage: python benchmarks/bench_kernels.py
"""

from __future__ import annotations

import random
import time

from chipalg.kernels import _impl

try:
    from chipalg.kernels import _speedups
except ImportError:
    _speedups = None

from chipalg.multigraph import Multigraph, laplacian
from chipalg.resolutions import bary_complex, sub_below


def _boundary_workload():
    """Boundary matrices of divisibility subcomplexes of a dense 5-node graph."""
    rng = random.Random(7)
    g = Multigraph.from_edges(
        6, {(i, j): rng.randint(1, 2) for i in range(1, 7) for j in range(i + 1, 7)}
    )
    lc = bary_complex(g)
    mats = []
    for c in sorted({lc.face_label(f) for f in lc.faces}):
        sub = sub_below(lc, c)
        faces = sorted(sub.faces, key=lambda f: (len(f), f))
        index = {f: i for i, f in enumerate(faces)}
        by_dim = {}
        for f in faces:
            by_dim.setdefault(len(f), []).append(f)
        for k in sorted(by_dim):
            if k < 2:
                continue
            cols = []
            for f in by_dim[k]:
                col = {}
                for drop in range(k):
                    sub_f = f[:drop] + f[drop + 1:]
                    col[index[sub_f]] = -1 if drop % 2 else 1
                cols.append(col)
            mats.append(cols)
    return mats


def _laplacian_workload():
    """Reduced Laplacians of random multigraphs, for determinants."""
    rng = random.Random(11)
    out = []
    for n in (20, 30, 40):
        for _ in range(10):
            edges = {}
            for i in range(1, n + 1):
                for j in range(i + 1, n + 1):
                    if rng.random() < 0.6:
                        edges[(i, j)] = rng.randint(1, 4)
            for i in range(2, n + 1):  # keep it connected
                edges.setdefault((1, i), 1)
            lam = laplacian(Multigraph.from_edges(n, edges))
            out.append([list(lam.row(i)[: n - 1]) for i in range(n - 1)])
    return out


def _time(fn, reps=3):
    best = None
    result = None
    for _ in range(reps):
        t0 = time.perf_counter()
        result = fn()
        dt = time.perf_counter() - t0
        best = dt if best is None else min(best, dt)
    return best, result


def main():
    boundary = _boundary_workload()
    laplacians = _laplacian_workload()
    backends = [("pure-python", _impl)]
    if _speedups is not None:
        backends.append(("compiled", _speedups))
    else:
        print("compiled backend unavailable; benchmarking pure Python only")

    print(f"{'kernel':<14}{'backend':<14}{'best (s)':>10}")
    results = {}
    for name, mod in backends:
        t, ranks = _time(lambda: [mod.sparse_rank(m, 0) for m in boundary]
                         + [mod.sparse_rank(m, 2) for m in boundary])
        results[("rank", name)] = (t, ranks)
        print(f"{'sparse_rank':<14}{name:<14}{t:>10.4f}")
    for name, mod in backends:
        t, dets = _time(lambda: [mod.bareiss_det(m) for m in laplacians])
        results[("det", name)] = (t, dets)
        print(f"{'bareiss_det':<14}{name:<14}{t:>10.4f}")

    if _speedups is not None:
        for kernel in ("rank", "det"):
            tp, rp = results[(kernel, "pure-python")]
            tc, rc = results[(kernel, "compiled")]
            assert rp == rc, f"{kernel}: backends disagree"
            print(f"{kernel}: backends agree; speedup x{tp / tc:.2f}")


if __name__ == "__main__":
    main()
