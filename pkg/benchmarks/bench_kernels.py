"""Compare the compiled and pure-Python search kernels.

Runs both backends on identical inputs, checks that they return the same
status, answer and node count, and prints median wall times::

    python3 benchmarks/bench_kernels.py [--repeat 5] [--json]
"""

from __future__ import annotations

import argparse
import json
import statistics
import sys
import time
from typing import Any, Callable

from oddcolour import kernels
from oddcolour.catalog import catalog_graph
from oddcolour.colouring import search_order
from oddcolour.generate import gen_random_planar
from oddcolour.graph import Graph, build_graph


def _forest_case(g: Graph, budget: int = 10_000_000) -> Callable[[Any], tuple]:
    indptr, indices, _ = g.csr()
    return lambda b: b.odd_forest_search(indptr, indices, 4, budget)


def _colouring_case(g: Graph, k: int, budget: int = 10_000_000) -> Callable[[Any], tuple]:
    indptr, indices, ids = g.csr()
    index = {v: i for i, v in enumerate(ids)}
    order = [index[v] for v in search_order(g)]
    return lambda b: b.odd_colouring_search(indptr, indices, order, k, budget)


def _grid(n: int) -> Graph:
    return build_graph(n * n, [(r * n + c, r * n + c + 1) for r in range(n) for c in range(n - 1)]
                       + [(r * n + c, (r + 1) * n + c) for r in range(n - 1) for c in range(n)])


def cases() -> list[tuple[str, Callable[[Any], tuple]]]:
    out = []
    for n in (20, 60, 120, 200):
        out.append((f"forest/triangulation-{n}", _forest_case(gen_random_planar(n, n)[0])))
    out.append(("forest/icosahedron", _forest_case(catalog_graph("icosahedron"))))
    out.append(("colouring/icosahedron k=4", _colouring_case(catalog_graph("icosahedron"), 4)))
    out.append(("colouring/triangulation-30 k=5", _colouring_case(gen_random_planar(30, 1)[0], 5)))
    # refutations explore the whole tree
    for n in (6, 7):
        out.append((f"colouring/grid-{n}x{n} k=3 (refute)", _colouring_case(_grid(n), 3)))
    return out


def _time(fn: Callable[[Any], tuple], backend: Any, repeat: int) -> tuple[float, tuple]:
    times = []
    result: tuple = ()
    for _ in range(repeat):
        start = time.perf_counter()
        result = fn(backend)
        times.append(time.perf_counter() - start)
    return statistics.median(times), result


def main(argv: list[str] | None = None) -> int:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--repeat", type=int, default=5)
    p.add_argument("--json", action="store_true")
    args = p.parse_args(argv)

    if kernels.compiled_backend is None:
        print("compiled extension not built; run `pip install -e . --no-build-isolation`", file=sys.stderr)
        return 1
    rows = []
    for name, fn in cases():
        t_py, r_py = _time(fn, kernels.python_backend, args.repeat)
        t_c, r_c = _time(fn, kernels.compiled_backend, args.repeat)
        if r_py != r_c:
            print(f"{name}: backends disagree", file=sys.stderr)
            return 2
        rows.append({"case": name, "nodes": r_py[2], "python_s": t_py, "compiled_s": t_c,
                     "speedup": t_py / t_c if t_c else float("inf")})

    if args.json:
        print(json.dumps(rows, indent=2))
        return 0
    width = max(len(r["case"]) for r in rows)
    print(f"{'case':<{width}}  {'nodes':>9}  {'python':>10}  {'compiled':>10}  {'speedup':>8}")
    for r in rows:
        print(f"{r['case']:<{width}}  {r['nodes']:>9}  {r['python_s'] * 1e3:>8.2f}ms"
              f"  {r['compiled_s'] * 1e3:>8.2f}ms  {r['speedup']:>7.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
