"""Rooted branch decompositions, mim-width certificates and builders."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Mapping, Sequence

from .graph import Graph, bits, mim_of_cut


class DecompositionError(ValueError):
    """The tree is not a valid branch decomposition of the graph."""


class BranchDecomposition:
    """A rooted branch decomposition with nodes ``0..N-1``.

    Internal nodes have exactly two children, leaves carry one graph vertex
    each, and ``vmask[t]`` is the bitmask of vertices below ``t``.
    """

    def __init__(self, n_vertices: int, root: int, children: Sequence[tuple[int, ...]],
                 leaf_vertex: Mapping[int, int]):
        if n_vertices < 2:
            raise DecompositionError("a graph with at most one vertex has no branch decomposition")
        size = len(children)
        if not 0 <= root < size:
            raise DecompositionError("root id out of range")
        parent = [-1] * size
        for t, kids in enumerate(children):
            if t in leaf_vertex:
                if kids:
                    raise DecompositionError(f"leaf node {t} has children")
                continue
            if len(kids) != 2:
                raise DecompositionError(f"internal node {t} must have exactly two children, has {len(kids)}")
            for c in kids:
                if not 0 <= c < size or c == t:
                    raise DecompositionError(f"bad child {c} of node {t}")
                if parent[c] != -1:
                    raise DecompositionError(f"node {c} has two parents")
                parent[c] = t
        if parent[root] != -1:
            raise DecompositionError("root has a parent")

        order = []
        stack = [root]
        seen = set()
        while stack:
            t = stack.pop()
            if t in seen:
                raise DecompositionError("decomposition is not a tree")
            seen.add(t)
            order.append(t)
            stack.extend(children[t])
        if len(seen) != size:
            raise DecompositionError("decomposition tree is disconnected")

        vertices = sorted(leaf_vertex.values())
        if vertices != list(range(n_vertices)):
            raise DecompositionError(
                f"leaves must map bijectively onto the {n_vertices} vertices")

        vmask = [0] * size
        for t in reversed(order):
            if t in leaf_vertex:
                vmask[t] = 1 << leaf_vertex[t]
            else:
                a, b = children[t]
                vmask[t] = vmask[a] | vmask[b]

        self.n_vertices = n_vertices
        self.root = root
        self.children = tuple(tuple(k) for k in children)
        self.leaf_vertex = dict(leaf_vertex)
        self.parent = tuple(parent)
        self.vmask = tuple(vmask)
        self.postorder = tuple(reversed(order))
        self.leaf_of = {v: t for t, v in self.leaf_vertex.items()}

    @property
    def size(self) -> int:
        return len(self.children)

    def is_leaf(self, t: int) -> bool:
        return t in self.leaf_vertex

    def tree_edges(self) -> list[tuple[int, int]]:
        """(parent, child) pairs; the two root edges both appear."""
        return [(self.parent[t], t) for t in range(self.size) if t != self.root]

    def swapped(self, t: int) -> "BranchDecomposition":
        """Copy with the children of ``t`` in the other order."""
        kids = list(self.children)
        kids[t] = kids[t][::-1]
        return BranchDecomposition(self.n_vertices, self.root, kids, self.leaf_vertex)

    def leaf_order(self) -> list[int]:
        """Vertices in left-to-right leaf order."""
        out = []
        stack = [self.root]
        while stack:
            t = stack.pop()
            if self.is_leaf(t):
                out.append(self.leaf_vertex[t])
            else:
                stack.extend(reversed(self.children[t]))
        return out

    def restrict(self, keep: Sequence[int]) -> "BranchDecomposition":
        """Decomposition of ``G[keep]`` (vertices renumbered by position in
        ``keep``) obtained by deleting the other leaves and smoothing."""
        index = {v: k for k, v in enumerate(keep)}
        if len(index) < 2:
            raise DecompositionError("restriction leaves fewer than two vertices")

        def build(t):
            if self.is_leaf(t):
                v = self.leaf_vertex[t]
                return ("l", index[v]) if v in index else None
            parts = [p for p in (build(c) for c in self.children[t]) if p is not None]
            if not parts:
                return None
            if len(parts) == 1:
                return parts[0]
            return ("i", parts[0], parts[1])

        return _from_nested(len(index), build(self.root))

    def __repr__(self):
        return f"BranchDecomposition(n={self.n_vertices}, nodes={self.size}, root={self.root})"


def _from_nested(n: int, tree) -> BranchDecomposition:
    children: list[tuple[int, ...]] = []
    leaves: dict[int, int] = {}

    def emit(node):
        t = len(children)
        children.append(())
        if node[0] == "l":
            leaves[t] = node[1]
        else:
            a = emit(node[1])
            b = emit(node[2])
            children[t] = (a, b)
        return t

    root = emit(tree)
    return BranchDecomposition(n, root, children, leaves)


@dataclass(frozen=True)
class WidthCertificate:
    width: int
    per_edge_mim: dict[tuple[int, int], int]


def root_decomposition(adjacency: Mapping[int, Iterable[int]], leaf_map: Mapping[int, int],
                       n_vertices: int) -> BranchDecomposition:
    """Root an unrooted subcubic tree by subdividing its smallest edge.

    ``adjacency`` maps node ids to neighbour ids, ``leaf_map`` maps the
    degree-one nodes to graph vertices.  Degree-two nodes are smoothed before
    rooting; they do not change the set of cuts.
    """
    if n_vertices < 2:
        raise DecompositionError("a graph with at most one vertex has no branch decomposition")
    nbrs = {t: set(ns) for t, ns in adjacency.items()}
    for t, ns in list(nbrs.items()):
        for u in ns:
            if u == t:
                raise DecompositionError(f"self-loop at tree node {t}")
            nbrs.setdefault(u, set()).add(t)
    for t, ns in nbrs.items():
        if len(ns) > 3:
            raise DecompositionError(f"tree node {t} has degree {len(ns)}; tree must be subcubic")
    n_edges = sum(len(ns) for ns in nbrs.values()) // 2
    if n_edges != len(nbrs) - 1:
        raise DecompositionError("input is not a tree")
    leaves = {t for t, ns in nbrs.items() if len(ns) <= 1}
    if leaves != set(leaf_map):
        raise DecompositionError("leaf map must cover exactly the degree-one tree nodes")
    if len(leaf_map) != n_vertices or sorted(leaf_map.values()) != list(range(n_vertices)):
        raise DecompositionError(f"leaves must map bijectively onto the {n_vertices} vertices")

    # smooth degree-two nodes
    for t in [t for t, ns in nbrs.items() if len(ns) == 2]:
        u, v = nbrs.pop(t)
        nbrs[u].discard(t)
        nbrs[v].discard(t)
        nbrs[u].add(v)
        nbrs[v].add(u)

    # connectivity check after smoothing
    start = next(iter(nbrs))
    seen = {start}
    stack = [start]
    while stack:
        for u in nbrs[stack.pop()]:
            if u not in seen:
                seen.add(u)
                stack.append(u)
    if len(seen) != len(nbrs):
        raise DecompositionError("input is not a tree")

    u, v = min((min(a, b), max(a, b)) for a in nbrs for b in nbrs[a])

    def build(t, came_from):
        if t in leaf_map:
            return ("l", leaf_map[t])
        kids = sorted(nbrs[t] - {came_from})
        return ("i", build(kids[0], t), build(kids[1], t))

    return _from_nested(n_vertices, ("i", build(u, v), build(v, u)))


def mim_width(g: Graph, d: BranchDecomposition) -> WidthCertificate:
    """Exact mim value of every tree edge and their maximum."""
    if g.n != d.n_vertices:
        raise DecompositionError("decomposition and graph have different vertex counts")
    cache: dict[int, int] = {}
    per_edge = {}
    full = g.vertex_mask
    for p, t in d.tree_edges():
        a = d.vmask[t]
        key = min(a, full & ~a)
        if key not in cache:
            cache[key] = mim_of_cut(g, a)
        per_edge[(p, t)] = cache[key]
    return WidthCertificate(max(per_edge.values(), default=0), per_edge)


def linear_order_decomposition(g: Graph, order: Sequence[int]) -> BranchDecomposition:
    """Caterpillar whose leaves follow ``order``."""
    if sorted(order) != list(range(g.n)):
        raise DecompositionError("order must be a permutation of the vertices")
    if g.n < 2:
        raise DecompositionError("a graph with at most one vertex has no branch decomposition")
    tree = ("l", order[0])
    for v in order[1:]:
        tree = ("i", tree, ("l", v))
    return _from_nested(g.n, tree)


def interval_graph(intervals: Sequence[tuple[float, float]]) -> Graph:
    """Intersection graph of closed intervals."""
    for k, iv in enumerate(intervals):
        if len(iv) != 2 or not iv[0] < iv[1]:
            raise ValueError(f"malformed interval #{k}: {iv!r}")
    edges = [
        (i, j)
        for i, j in combinations(range(len(intervals)), 2)
        if max(intervals[i][0], intervals[j][0]) <= min(intervals[i][1], intervals[j][1])
    ]
    return Graph(len(intervals), edges)


def interval_caterpillar_decomposition(intervals: Sequence[tuple[float, float]]
                                       ) -> tuple[Graph, BranchDecomposition]:
    """Interval graph plus the caterpillar over ascending left endpoints.

    Every prefix cut of that order has mim value at most one.
    """
    g = interval_graph(intervals)
    order = sorted(range(len(intervals)), key=lambda v: (intervals[v][0], intervals[v][1], v))
    return g, linear_order_decomposition(g, order)


def optimal_decomposition_bruteforce(g: Graph, max_vertices: int = 8) -> BranchDecomposition:
    """A decomposition of minimum mim-width.

    Exact search over all rooted binary trees, organised as a dynamic
    program over leaf sets: the best subtree on vertex set ``U`` costs
    ``max(mim(U), min over splits max(best(U1), best(U2)))``.  Runs in
    ``O(3^n)`` cut comparisons plus ``2^n`` exact mim evaluations.
    """
    n = g.n
    if not 2 <= n <= max_vertices:
        raise ValueError(f"exhaustive search needs 2 <= n <= {max_vertices}, got n={n}")
    full = (1 << n) - 1
    mim = [0] * (1 << n)
    for a in range(1, full):
        comp = full & ~a
        if comp < a:
            mim[a] = mim[comp]
        else:
            mim[a] = mim_of_cut(g, a)

    best = [0] * (1 << n)
    split = [0] * (1 << n)
    for u in sorted(range(1, full + 1), key=int.bit_count):
        if u & (u - 1) == 0:
            best[u] = mim[u]
            continue
        low = u & -u
        rest = u ^ low
        own = mim[u]
        choice, value = 0, n + 1
        sub = rest
        # every split with the lowest vertex in the first part
        while True:
            part = sub | low
            if part != u:
                cost = best[part]
                other = best[u ^ part]
                if other > cost:
                    cost = other
                if cost < value:
                    value, choice = cost, part
                    if value <= own:
                        break
            if sub == 0:
                break
            sub = (sub - 1) & rest
        best[u] = max(own, value)
        split[u] = choice

    def build(u):
        if u & (u - 1) == 0:
            return ("l", u.bit_length() - 1)
        return ("i", build(split[u]), build(u ^ split[u]))

    return _from_nested(n, build(full))


def enumerate_decompositions(n: int):
    """Every rooted branch decomposition on ``n`` labelled leaves, generated by
    inserting leaves into edges of unrooted binary trees and rooting at a
    fixed edge.  Intended for cross-checks on very small ``n``."""
    if n < 2:
        return

    def insert(tree, v):
        # tree is nested tuples; yield trees with leaf v inserted on every edge
        yield ("i", tree, ("l", v))
        if tree[0] == "i":
            for left in insert(tree[1], v):
                yield ("i", left, tree[2])
            for right in insert(tree[2], v):
                yield ("i", tree[1], right)

    def grow(tree, v):
        if v == n:
            yield tree
            return
        # the root sits on the edge incident to leaf 0; never insert above it
        for child in insert(tree[2], v):
            yield from grow(("i", tree[1], child), v + 1)

    for tree in grow(("i", ("l", 0), ("l", 1)), 2):
        yield _from_nested(n, tree)
