"""Induced disjoint paths: when routing succeeds and why it can fail.

Run with ``python3 demos/disjoint_paths.py``.
"""

from mimpaths import Graph, idp_solve, linear_order_decomposition


def show(name, g, pairs):
    d = linear_order_decomposition(g, list(range(g.n)))
    res = idp_solve(g, d, pairs, witness=True)
    print(f"{name}: pairs {pairs} -> {'yes' if res.feasible else 'no'}")
    for (x, y), p in zip(pairs, res.paths or []):
        print(f"  {x}-{y}: {p}")


def main():
    c8 = Graph(8, [(i, (i + 1) % 8) for i in range(8)])
    show("8-cycle, opposite arcs", c8, [(0, 2), (4, 6)])
    # The two arcs 0..2 and 3..5 end at adjacent vertices 2 and 3.
    show("8-cycle, touching arcs", c8, [(0, 2), (3, 5)])
    rails = [(0, 1), (1, 2), (2, 3), (4, 5), (5, 6), (6, 7)]
    show("two separate rails", Graph(8, rails), [(0, 3), (4, 7)])
    # A rung makes the rails adjacent; a detour would need a second route.
    show("rails with one rung", Graph(8, rails + [(1, 5)]), [(0, 3), (4, 7)])
    detour = rails + [(1, 5), (0, 8), (8, 9), (9, 3)]
    show("rung plus a detour for the first pair", Graph(10, detour), [(0, 3), (4, 7)])


if __name__ == "__main__":
    main()
