"""Boundary fragments: induced unions of nontrivial paths in a crossing graph,
plus the pairings and component labelings attached to them."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterable, Mapping

from .graph import BipartiteGraph


def fragment_cap(w: int) -> int:
    """Largest fragment size a crossing graph of induced matching number ``w``
    can carry: a linear forest on ``4(w+1)`` vertices already has an induced
    matching of size ``w+1``."""
    return 4 * w + 3


@dataclass(frozen=True)
class PathFragment:
    vertices: frozenset[int]
    edges: frozenset[tuple[int, int]]

    def key(self) -> tuple:
        return (tuple(sorted(self.vertices)), tuple(sorted(self.edges)))

    def components(self) -> list[frozenset[int]]:
        """Vertex sets of the components, ordered by smallest vertex."""
        adj: dict[int, set[int]] = {v: set() for v in self.vertices}
        for a, b in self.edges:
            adj[a].add(b)
            adj[b].add(a)
        seen: set[int] = set()
        comps = []
        for v in sorted(self.vertices):
            if v in seen:
                continue
            comp = {v}
            stack = [v]
            while stack:
                for u in adj[stack.pop()]:
                    if u not in comp:
                        comp.add(u)
                        stack.append(u)
            seen |= comp
            comps.append(frozenset(comp))
        return comps

    def degree(self, v: int) -> int:
        return sum(v in e for e in self.edges)


EMPTY_FRAGMENT = PathFragment(frozenset(), frozenset())


@dataclass(frozen=True)
class Pairing:
    pairs: frozenset[tuple[int, int]]
    unpaired: frozenset[int]

    @property
    def ground(self) -> frozenset[int]:
        return self.unpaired | {v for p in self.pairs for v in p}


def enumerate_fragments(h: BipartiteGraph, w: int, cap: int | None = None) -> list[PathFragment]:
    """Every induced linear forest of ``h`` without isolated vertices on at
    most ``cap`` vertices (default ``4w + 3``), including the empty one."""
    if w < 0:
        raise ValueError("w must be nonnegative")
    limit = fragment_cap(w) if cap is None else cap
    verts = sorted(h.vertices)
    adj: dict[int, set[int]] = {v: set() for v in verts}
    for a, b in h.edges:
        adj[a].add(b)
        adj[b].add(a)
    out = [EMPTY_FRAGMENT]

    # grow vertex sets in increasing id order; G[U] stays a linear forest
    def extend(chosen: list[int], degree: dict[int, int], comp: dict[int, int], start: int):
        if len(chosen) >= 2 and all(degree[v] for v in chosen):
            sub = set(chosen)
            edges = frozenset((a, b) for a, b in h.edges if a in sub and b in sub)
            out.append(PathFragment(frozenset(chosen), edges))
        if len(chosen) == limit:
            return
        for k in range(start, len(verts)):
            v = verts[k]
            touch = [u for u in adj[v] if u in degree]
            if len(touch) > 2 or any(degree[u] >= 2 for u in touch):
                continue
            roots = [comp[u] for u in touch]
            if len(set(roots)) != len(roots):
                continue
            new_degree = dict(degree)
            new_degree[v] = len(touch)
            for u in touch:
                new_degree[u] += 1
            new_comp = dict(comp)
            new_comp[v] = v
            for u, c in new_comp.items():
                if c in roots:
                    new_comp[u] = v
            extend(chosen + [v], new_degree, new_comp, k + 1)

    extend([], {}, {}, 0)
    return out


def degree_one_vertices(s: PathFragment, side: Iterable[int]) -> frozenset[int]:
    side = frozenset(side)
    return frozenset(v for v in s.vertices if v in side and s.degree(v) == 1)


def contract_fragment(s: PathFragment, q: Pairing | Iterable[tuple[int, int]],
                      ground: Iterable[int] | None = None) -> dict[int, set[int]]:
    """Adjacency of ``S`` with one extra edge per pair of ``q``.

    Pair endpoints outside ``ground`` (default: all fragment vertices) are
    rejected.  Pair endpoints that are not fragment vertices become new
    vertices, which happens for terminals.
    """
    pairs = q.pairs if isinstance(q, Pairing) else frozenset(q)
    allowed = s.vertices if ground is None else frozenset(ground)
    adj: dict[int, set[int]] = {v: set() for v in s.vertices}
    for a, b in s.edges:
        adj[a].add(b)
        adj[b].add(a)
    for a, b in pairs:
        if a not in allowed or b not in allowed:
            raise ValueError(f"pair ({a}, {b}) is not inside the pairing ground set")
        adj.setdefault(a, set()).add(b)
        adj.setdefault(b, set()).add(a)
    return adj


def is_path_union(adj: Mapping[int, set[int]]) -> bool:
    """True iff the graph given by ``adj`` is a disjoint union of paths."""
    if any(len(ns) > 2 for ns in adj.values()):
        return False
    seen: set[int] = set()
    for v in adj:
        if v in seen:
            continue
        comp = {v}
        stack = [v]
        n_edges2 = 0
        while stack:
            x = stack.pop()
            n_edges2 += len(adj[x])
            for u in adj[x]:
                if u not in comp:
                    comp.add(u)
                    stack.append(u)
        seen |= comp
        if n_edges2 // 2 != len(comp) - 1:
            return False
    return True


def enumerate_pairings(ground: Iterable[int], unpaired_budget: int = 0,
                       groups: Mapping[int, int] | None = None) -> list[Pairing]:
    """All ways to pair up ``ground`` leaving exactly ``unpaired_budget``
    vertices single.  With ``groups`` only vertices of equal group may pair."""
    ground = sorted(ground)
    if unpaired_budget < 0 or (len(ground) - unpaired_budget) % 2 or unpaired_budget > len(ground):
        return []
    out = []

    def rec(rest: list[int], pairs: list[tuple[int, int]], single: list[int]):
        if len(single) > unpaired_budget:
            return
        if not rest:
            if len(single) == unpaired_budget:
                out.append(Pairing(frozenset(pairs), frozenset(single)))
            return
        v, tail = rest[0], rest[1:]
        rec(tail, pairs, single + [v])
        for k, u in enumerate(tail):
            if groups is not None and groups[u] != groups[v]:
                continue
            rec(tail[:k] + tail[k + 1:], pairs + [(v, u)], single)

    rec(ground, [], [])
    return out


def enumerate_labelings(s: PathFragment, k: int) -> list[tuple[int, ...]]:
    """Every map from the components of ``s`` (ordered by smallest vertex)
    to ``1..k``."""
    if k < 1:
        raise ValueError("k must be positive")
    return list(product(range(1, k + 1), repeat=len(s.components())))
