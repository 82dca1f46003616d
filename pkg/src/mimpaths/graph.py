"""Simple undirected graphs, cuts, crossing graphs and induced matchings.

Vertices are dense integer ids ``0..n-1``.  Vertex sets are exposed as
frozensets; the solvers work on the integer bitmasks in ``Graph.adj``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable


def bits(mask: int):
    """Yield the indices of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def to_mask(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def from_mask(mask: int) -> frozenset[int]:
    return frozenset(bits(mask))


class Graph:
    """An immutable simple undirected graph on vertices ``0..n-1``.

    >>> g = Graph(3, [(0, 1), (1, 2)])
    >>> sorted(g.neighbors(1))
    [0, 2]
    """

    __slots__ = ("n", "adj", "edges", "edge_index", "labels")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = (), labels=None):
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        adj = [0] * n
        seen = set()
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            e = (u, v) if u < v else (v, u)
            if e in seen:
                raise ValueError(f"parallel edge {e}")
            seen.add(e)
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        self.n = n
        self.adj = tuple(adj)
        self.edges = tuple(sorted(seen))
        self.edge_index = {e: k for k, e in enumerate(self.edges)}
        self.labels = tuple(labels) if labels is not None else None

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def vertex_mask(self) -> int:
        return (1 << self.n) - 1

    def neighbors(self, v: int) -> frozenset[int]:
        return from_mask(self.adj[v])

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighborhood_mask(self, mask: int) -> int:
        """Union of the open neighbourhoods of the vertices in ``mask``."""
        out = 0
        for v in bits(mask):
            out |= self.adj[v]
        return out

    def induced_subgraph(self, vertices: Iterable[int]) -> tuple["Graph", list[int]]:
        """Return ``G[vertices]`` relabelled to ``0..k-1`` and the list of old ids."""
        keep = sorted(set(vertices))
        index = {v: k for k, v in enumerate(keep)}
        sub_edges = [(index[u], index[v]) for u, v in self.edges if u in index and v in index]
        return Graph(len(keep), sub_edges), keep

    def __eq__(self, other):
        return isinstance(other, Graph) and self.n == other.n and self.edges == other.edges

    def __hash__(self):
        return hash((self.n, self.edges))

    def __repr__(self):
        return f"Graph(n={self.n}, edges={list(self.edges)})"


@dataclass(frozen=True)
class BipartiteGraph:
    """Bipartite graph with explicit sides; every edge is stored as ``(a, b)``
    with ``a`` in ``side_a`` and ``b`` in ``side_b``."""

    side_a: frozenset[int]
    side_b: frozenset[int]
    edges: frozenset[tuple[int, int]] = field(default_factory=frozenset)

    def __post_init__(self):
        if self.side_a & self.side_b:
            raise ValueError("sides of a bipartite graph must be disjoint")
        for a, b in self.edges:
            if a not in self.side_a or b not in self.side_b:
                raise ValueError(f"edge ({a}, {b}) does not go from side_a to side_b")

    @property
    def vertices(self) -> frozenset[int]:
        return self.side_a | self.side_b

    def neighbors(self, v: int) -> frozenset[int]:
        return frozenset(b for a, b in self.edges if a == v) | frozenset(a for a, b in self.edges if b == v)

    def without(self, removed: Iterable[int]) -> "BipartiteGraph":
        """Delete ``removed`` and drop vertices left without edges."""
        removed = frozenset(removed)
        edges = frozenset((a, b) for a, b in self.edges if a not in removed and b not in removed)
        return BipartiteGraph(
            frozenset(a for a, _ in edges), frozenset(b for _, b in edges), edges
        )


def _check_disjoint(a: int, b: int) -> None:
    if a & b:
        raise ValueError("vertex sets must be disjoint")


def boundary(g: Graph, a: Iterable[int], b: Iterable[int]) -> frozenset[int]:
    """Vertices of ``a`` with at least one neighbour in ``b``."""
    am, bm = to_mask(a), to_mask(b)
    _check_disjoint(am, bm)
    return from_mask(boundary_mask(g, am, bm))


def boundary_mask(g: Graph, a: int, b: int) -> int:
    out = 0
    for v in bits(a):
        if g.adj[v] & b:
            out |= 1 << v
    return out


def crossing_graph(g: Graph, a: Iterable[int], b: Iterable[int]) -> BipartiteGraph:
    """The bipartite graph of all ``a``-``b`` edges, on the two boundaries."""
    am, bm = to_mask(a), to_mask(b)
    _check_disjoint(am, bm)
    edges = frozenset((u, v) for u in bits(am) for v in bits(g.adj[u] & bm))
    return BipartiteGraph(
        from_mask(boundary_mask(g, am, bm)), from_mask(boundary_mask(g, bm, am)), edges
    )


def _conflict_masks(edges: list[tuple[int, int]], adjacent) -> list[int]:
    """Bitmask per edge of the edges it cannot share an induced matching with."""
    incident: dict[int, int] = {}
    for k, (a, b) in enumerate(edges):
        incident[a] = incident.get(a, 0) | 1 << k
        incident[b] = incident.get(b, 0) | 1 << k
    side_a = {a for a, _ in edges}
    side_b = {b for _, b in edges}
    conflict = []
    for k, (a, b) in enumerate(edges):
        mask = incident[a] | incident[b]
        for x in side_a:
            if adjacent(x, b):
                mask |= incident[x]
        for y in side_b:
            if adjacent(a, y):
                mask |= incident[y]
        conflict.append(mask & ~(1 << k))
    return conflict


def _has_independent(conflict: list[int], cand: int, need: int) -> bool:
    if need == 0:
        return True
    while cand:
        if cand.bit_count() < need:
            return False
        low = cand & -cand
        cand ^= low
        v = low.bit_length() - 1
        if _has_independent(conflict, cand & ~conflict[v], need - 1):
            return True
    return False


def _max_independent(conflict: list[int]) -> int:
    # iterative deepening; cheap when the answer is small, which is the regime of interest
    alive = (1 << len(conflict)) - 1
    size = 0
    while _has_independent(conflict, alive, size + 1):
        size += 1
    return size


def max_induced_matching_size(h: BipartiteGraph) -> int:
    """Exact size of a maximum induced matching of ``h``.

    Exhaustive search over edge subsets with counting bounds, phrased as
    maximum independent set in the edge conflict graph.
    """
    edges = sorted(h.edges)
    eset = set(h.edges)
    return _max_independent(_conflict_masks(edges, lambda a, b: (a, b) in eset))


def mim_of_cut(g: Graph, a: int) -> int:
    """``mim(A)`` for a vertex bitmask ``a``: max induced matching across the cut."""
    b = g.vertex_mask & ~a
    edges = [(u, v) for u in bits(a) for v in bits(g.adj[u] & b)]
    if not edges:
        return 0
    adj = g.adj
    return _max_independent(_conflict_masks(edges, lambda x, y: bool(adj[x] >> y & 1)))


def _is_linear_forest(vertices: set[int], edges: list[tuple[int, int]]) -> bool:
    parent = {v: v for v in vertices}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    degree = dict.fromkeys(vertices, 0)
    for u, v in edges:
        degree[u] += 1
        degree[v] += 1
        if degree[u] > 2 or degree[v] > 2:
            return False
        ru, rv = find(u), find(v)
        if ru == rv:
            return False
        parent[ru] = rv
    return True


def is_induced_disjoint_path_union(h: BipartiteGraph, s_edges: Iterable[tuple[int, int]]) -> bool:
    """True iff ``s_edges`` is an induced subgraph of ``h`` whose components are
    paths with at least one edge each."""
    s = set(s_edges)
    if not s <= h.edges:
        raise ValueError("s_edges must be edges of h")
    verts = {a for a, _ in s} | {b for _, b in s}
    induced = {(a, b) for a, b in h.edges if a in verts and b in verts}
    if induced != s:
        return False
    return _is_linear_forest(verts, list(s))
