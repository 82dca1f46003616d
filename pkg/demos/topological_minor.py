"""Which small patterns occur as induced topological minors of a few graphs.

Run with ``python3 demos/topological_minor.py``.
"""

from itertools import combinations

from mimpaths import Graph, hitm_bruteforce, hitm_solve, linear_order_decomposition

PATTERNS = {
    "K3": Graph(3, [(0, 1), (0, 2), (1, 2)]),
    "claw": Graph(4, [(0, 1), (0, 2), (0, 3)]),
    "C4": Graph(4, [(0, 1), (1, 2), (2, 3), (0, 3)]),
    "paw": Graph(4, [(0, 1), (0, 2), (1, 2), (2, 3)]),
}

HOSTS = {
    "C7": Graph(7, [(i, (i + 1) % 7) for i in range(7)]),
    "K4": Graph(4, list(combinations(range(4), 2))),
    "spider": Graph(7, [(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)]),
    "house": Graph(5, [(0, 1), (1, 2), (2, 3), (3, 0), (2, 4), (3, 4)]),
}


def main():
    print("host    " + "  ".join(f"{p:>5}" for p in PATTERNS))
    for name, g in HOSTS.items():
        d = linear_order_decomposition(g, list(range(g.n)))
        row = []
        for h in PATTERNS.values():
            res = hitm_solve(g, d, h, witness=True)
            assert res.found == hitm_bruteforce(g, h)
            row.append("yes" if res.found else "no")
        print(f"{name:<8}" + "  ".join(f"{c:>5}" for c in row))
    res = hitm_solve(HOSTS["house"], None, PATTERNS["C4"], witness=True)
    print(f"C4 inside the house: branch vertices {res.assignment.branch_map}, vertex set {res.vertices}")


if __name__ == "__main__":
    main()
