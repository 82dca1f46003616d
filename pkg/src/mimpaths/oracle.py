"""Brute-force reference solvers written straight from the problem definitions.

Nothing here touches the decomposition or table code; only ``Graph`` is shared.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from itertools import combinations, permutations

from .covers import MinimalVertexCover
from .graph import BipartiteGraph, Graph


class BudgetExceeded(RuntimeError):
    """Instance too large for exhaustive search."""


@dataclass(frozen=True)
class OracleBudget:
    max_vertices: int = 14
    max_pairs: int = 4
    timeout: float = 120.0

    def __post_init__(self):
        if self.max_vertices <= 0 or self.max_pairs <= 0 or self.timeout <= 0:
            raise ValueError("budget fields must be positive")

    def check(self, n: int, pairs: int = 0) -> float:
        if n > self.max_vertices:
            raise BudgetExceeded(f"n={n} exceeds the oracle budget of {self.max_vertices}")
        if pairs > self.max_pairs:
            raise BudgetExceeded(f"{pairs} pairs exceed the oracle budget of {self.max_pairs}")
        return time.monotonic() + self.timeout


DEFAULT_BUDGET = OracleBudget()


def _tick(deadline: float) -> None:
    if time.monotonic() > deadline:
        raise BudgetExceeded("oracle timed out")


def lip_bruteforce(g: Graph, budget: OracleBudget = DEFAULT_BUDGET) -> int:
    """Largest vertex count of an induced path, by growing paths from one end."""
    deadline = budget.check(g.n)
    adj = [set(g.neighbors(v)) for v in range(g.n)]
    best = min(g.n, 1)

    def grow(path: list[int], blocked: set[int]):
        nonlocal best
        _tick(deadline)
        best = max(best, len(path))
        if best == g.n:
            return
        last = path[-1]
        for u in adj[last]:
            if u in blocked:
                continue
            # u may touch only the current end of the path
            if any(u in adj[x] for x in path[:-1]):
                continue
            path.append(u)
            blocked.add(u)
            grow(path, blocked)
            blocked.discard(u)
            path.pop()

    for v in range(g.n):
        grow([v], {v})
    return best


def _validate_pairs(g: Graph, pairs) -> list[tuple[int, int]]:
    pairs = [tuple(p) for p in pairs]
    flat = [v for p in pairs for v in p]
    if any(not 0 <= v < g.n for v in flat):
        raise ValueError("terminal out of range")
    if len(set(flat)) != len(flat):
        raise ValueError("terminals must be distinct")
    return pairs


def idp_bruteforce(g: Graph, pairs, budget: OracleBudget = DEFAULT_BUDGET,
                   witness: bool = False):
    """Are there pairwise non-adjacent, vertex-disjoint induced ``x_i``-``y_i``
    paths?  Paths are built one after another; each completed path removes its
    closed neighbourhood from the graph available to the later ones."""
    pairs = _validate_pairs(g, pairs)
    deadline = budget.check(g.n, len(pairs))
    adj = [set(g.neighbors(v)) for v in range(g.n)]
    terminals = {v for p in pairs for v in p}

    def route(k: int, alive: set[int], found: list[list[int]]):
        if k == len(pairs):
            return list(found)
        x, y = pairs[k]
        if x not in alive or y not in alive:
            return None
        later = terminals - {v for p in pairs[:k + 1] for v in p}

        def extend(path: list[int], on_path: set[int]):
            _tick(deadline)
            last = path[-1]
            if last == y:
                closed = on_path.union(*(adj[v] for v in path))
                if closed & later:
                    return None
                return route(k + 1, alive - closed, found + [list(path)])
            for u in adj[last]:
                if u not in alive or u in on_path:
                    continue
                if u != y and u in terminals:
                    continue
                if any(u in adj[p] for p in path[:-1]):
                    continue
                path.append(u)
                on_path.add(u)
                got = extend(path, on_path)
                on_path.discard(u)
                path.pop()
                if got is not None:
                    return got
            return None

        return extend([x], {x})

    got = route(0, set(range(g.n)), [])
    if witness:
        return got
    return got is not None


def _is_subdivision(g: Graph, chosen: tuple[int, ...], h: Graph) -> bool:
    """Is ``G[chosen]`` isomorphic to a subdivision of ``h``?"""
    sub = set(chosen)
    nb = {v: g.neighbors(v) & sub for v in chosen}
    high = [v for v in chosen if len(nb[v]) != 2]
    h_deg = [h.degree(x) for x in range(h.n)]
    # branch vertices: every vertex of degree != 2 plus some degree-2 ones
    twos = [v for v in chosen if len(nb[v]) == 2]
    need_two = h.n - len(high)
    if need_two < 0 or sum(1 for x in range(h.n) if h_deg[x] == 2) < need_two:
        return False
    h_edges = {frozenset(e) for e in h.edges}
    for extra in combinations(twos, need_two):
        branch = high + list(extra)
        for image in permutations(branch):
            phi = dict(zip(range(h.n), image))
            if any(len(nb[phi[x]]) != h_deg[x] for x in range(h.n)):
                continue
            inverse = {v: x for x, v in phi.items()}
            # follow every thread leaving a branch vertex
            found = []
            visited = set(branch)
            ok = True
            for x in range(h.n):
                for start in nb[phi[x]]:
                    prev, cur = phi[x], start
                    while cur not in inverse:
                        nxt = [u for u in nb[cur] if u != prev]
                        visited.add(cur)
                        prev, cur = cur, nxt[0]
                    found.append(frozenset((x, inverse[cur])))
                    if inverse[cur] == x:
                        ok = False
            if not ok or len(visited) != len(sub):
                continue
            # each H edge is traversed once from each side
            counts: dict = {}
            for e in found:
                counts[e] = counts.get(e, 0) + 1
            if set(counts) == h_edges and all(c == 2 for c in counts.values()):
                return True
    return False


def hitm_bruteforce(g: Graph, h: Graph, budget: OracleBudget = DEFAULT_BUDGET) -> bool:
    """Does some vertex subset of ``g`` induce a subdivision of ``h``?"""
    deadline = budget.check(g.n)
    if h.n == 0:
        return True
    # a subdivision keeps |E| - |V|
    excess = h.m - h.n
    h_high = sorted((h.degree(x) for x in range(h.n) if h.degree(x) != 2), reverse=True)
    for size in range(h.n, g.n + 1):
        for chosen in combinations(range(g.n), size):
            _tick(deadline)
            sub = set(chosen)
            degs = [len(g.neighbors(v) & sub) for v in chosen]
            if sum(degs) // 2 - size != excess:
                continue
            if sorted((k for k in degs if k != 2), reverse=True) != h_high:
                continue
            if _is_subdivision(g, chosen, h):
                return True
    return False


def mvc_bruteforce(h: BipartiteGraph, budget: OracleBudget = DEFAULT_BUDGET) -> set[MinimalVertexCover]:
    """All minimal vertex covers by subset enumeration."""
    verts = sorted(h.vertices)
    budget.check(len(verts))
    edges = list(h.edges)
    covers = []
    for r in range(len(verts) + 1):
        for subset in combinations(verts, r):
            s = set(subset)
            if all(a in s or b in s for a, b in edges):
                covers.append(frozenset(s))
    cover_set = set(covers)
    out = set()
    for c in covers:
        if any(c - {v} in cover_set for v in c):
            continue
        out.add(MinimalVertexCover(c, c & h.side_a, c & h.side_b))
    return out
