import random
from itertools import combinations

import pytest

from mimpaths import Graph


def gnp(n, p, rng):
    return Graph(n, [(u, v) for u, v in combinations(range(n), 2) if rng.random() < p])


def path_graph(n):
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n):
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n):
    return Graph(n, list(combinations(range(n), 2)))


def complete_bipartite(a, b):
    return Graph(a + b, [(u, a + v) for u in range(a) for v in range(b)])


def grid_graph(rows, cols):
    edges = []
    for r in range(rows):
        for c in range(cols):
            v = r * cols + c
            if c + 1 < cols:
                edges.append((v, v + 1))
            if r + 1 < rows:
                edges.append((v, v + cols))
    return Graph(rows * cols, edges)


def named_families():
    out = []
    for n in range(2, 11):
        out.append((f"P{n}", path_graph(n)))
    for n in range(3, 11):
        out.append((f"C{n}", cycle_graph(n)))
    for n in range(2, 8):
        out.append((f"K{n}", complete_graph(n)))
    for a in range(1, 5):
        for b in range(a, 5):
            out.append((f"K{a},{b}", complete_bipartite(a, b)))
    for r in range(1, 4):
        for c in range(2, 5):
            out.append((f"grid{r}x{c}", grid_graph(r, c)))
    return out


PATTERNS = {
    "K2": Graph(2, [(0, 1)]),
    "P3": Graph(3, [(0, 1), (1, 2)]),
    "K3": complete_graph(3),
    "K13": Graph(4, [(0, 1), (0, 2), (0, 3)]),
    "C4": cycle_graph(4),
    "paw": Graph(4, [(0, 1), (1, 2), (0, 2), (2, 3)]),
}


@pytest.fixture
def rng():
    return random.Random(20261016)
