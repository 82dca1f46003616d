"""Mim-width of a few decompositions, exact and heuristic.

Run with ``python3 demos/decomposition_width.py``.
"""

import random

from mimpaths import (
    Graph,
    linear_order_decomposition,
    mim_width,
    optimal_decomposition_bruteforce,
)


def main():
    rng = random.Random(11)
    cycle = Graph(8, [(i, (i + 1) % 8) for i in range(8)])
    cases = {"C8": cycle}
    for k in range(3):
        n = 8
        cases[f"random {k}"] = Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.4])
    for name, g in cases.items():
        best = mim_width(g, optimal_decomposition_bruteforce(g)).width
        identity = mim_width(g, linear_order_decomposition(g, list(range(g.n)))).width
        shuffled = mim_width(g, linear_order_decomposition(g, rng.sample(range(g.n), g.n))).width
        print(f"{name}: optimal {best}, caterpillar in vertex order {identity}, shuffled caterpillar {shuffled}")


if __name__ == "__main__":
    main()
