"""Longest induced path on grids and interval graphs.

Run with ``python3 demos/longest_induced_path.py``.
"""

import random

from mimpaths import (
    Graph,
    interval_caterpillar_decomposition,
    linear_order_decomposition,
    lip_bruteforce,
    lip_solve,
)


def grid(rows, cols):
    edges = []
    for r in range(rows):
        for c in range(cols):
            v = r * cols + c
            if c + 1 < cols:
                edges.append((v, v + 1))
            if r + 1 < rows:
                edges.append((v, v + cols))
    return Graph(rows * cols, edges)


def main():
    print("grids, row-major caterpillar decomposition")
    for rows, cols in [(2, 4), (3, 3), (3, 4)]:
        g = grid(rows, cols)
        d = linear_order_decomposition(g, list(range(g.n)))
        res = lip_solve(g, d, witness=True, stats=True)
        cells = [divmod(v, cols) for v in res.path]
        print(f"  {rows}x{cols}: width {res.width}, longest induced path {res.length}"
              f" (oracle {lip_bruteforce(g)}), cells {cells}")

    print("random interval graphs, width-1 caterpillars")
    rng = random.Random(3)
    for n in (20, 40, 60):
        intervals = []
        for _ in range(n):
            left = rng.uniform(0, n / 4)
            intervals.append((left, left + rng.uniform(0.3, 2.0)))
        g, d = interval_caterpillar_decomposition(intervals)
        res = lip_solve(g, d, witness=True, stats=True)
        print(f"  n={n} m={g.m}: width {res.width}, path of {res.length} vertices"
              f" in {res.seconds:.2f}s, largest table {max(res.table_sizes.values())}")


if __name__ == "__main__":
    main()
