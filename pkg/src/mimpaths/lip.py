"""Longest Induced Path by dynamic programming over a branch decomposition.

A table index at node ``t`` is ``(S, M, Q, i, j)``: ``S`` is the part of the
partial path crossing the cut (an edge mask), ``M`` a minimal vertex cover of
the crossing graph minus ``V(S)`` separating used from unused vertices, ``Q``
pairs the degree-one vertices of ``S`` below ``t`` that are joined by a path
below ``t``, ``i`` counts the partial solution's vertices and ``j`` the path
ends already placed below ``t``.  Only 1-entries are stored.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import NamedTuple

from ._dp import CutContext, UnionFind, compatible_covers, need_masks
from .decomposition import BranchDecomposition
from .fragments import PathFragment
from .graph import Graph, bits

# shape = (S edge mask, Q pairs, j); table = {shape: {M: {i: backpointer}}}
CLOSED = (0, (), 2)
EMPTY = (0, (), 0)


class LipIndex(NamedTuple):
    fragment: int
    cover: int
    pairing: tuple[tuple[int, int], ...]
    size: int
    endpoints: int

    def fragment_of(self, g: Graph) -> PathFragment:
        edges = frozenset(g.edges[e] for e in bits(self.fragment))
        return PathFragment(frozenset(v for e in edges for v in e), edges)


@dataclass
class LipTable:
    node: int
    entries: dict = field(default_factory=dict)

    def indices(self):
        for (s, q, j), by_cover in self.entries.items():
            for m, sizes in by_cover.items():
                for i in sizes:
                    yield LipIndex(s, m, q, i, j)

    def __len__(self):
        return sum(len(sizes) for by_cover in self.entries.values() for sizes in by_cover.values())

    def __contains__(self, idx: LipIndex) -> bool:
        sizes = self.entries.get((idx.fragment, idx.pairing, idx.endpoints), {}).get(idx.cover)
        return sizes is not None and idx.size in sizes


@dataclass
class LipResult:
    length: int
    path: list[int] | None = None
    table_sizes: dict[int, int] = field(default_factory=dict)
    width: int = 0
    seconds: float = 0.0


def _add(table: dict, shape, m: int, i: int, pointer) -> None:
    sizes = table.setdefault(shape, {}).setdefault(m, {})
    if i not in sizes:
        sizes[i] = pointer


def lip_leaf_table(g: Graph, d: BranchDecomposition, t: int, ctx: CutContext | None = None) -> LipTable:
    """Leaf entries: one fragment edge at ``v`` (path end), two fragment
    edges (``v`` interior), or ``v`` unused with cover ``{v}`` or ``N(v)``."""
    if not d.is_leaf(t):
        raise ValueError(f"node {t} is not a leaf")
    ctx = ctx or CutContext(g, d)
    v = d.leaf_vertex[t]
    incident = list(bits(ctx.cross[t]))
    table: dict = {}
    for e in incident:
        _add(table, (1 << e, (), 1), 0, 2, None)
    for x in range(len(incident)):
        for y in range(x + 1, len(incident)):
            _add(table, ((1 << incident[x]) | (1 << incident[y]), (), 0), 0, 3, None)
    for m in ctx.covers(t, 0):
        _add(table, EMPTY, m, 0, None)
    return LipTable(t, table)


def lip_validate_index(idx: LipIndex, g: Graph, inside: int) -> str:
    """Classify an index at a node whose vertex mask is ``inside``.

    Returns ``"reject"``, ``"valid"`` or ``"special_case_1"`` (closed path,
    ``S`` empty, ``j = 2``), ``"special_case_2"`` (both ends below the node
    and ``S`` one component) or ``"special_case_3"`` (nothing used yet)."""
    s_edges = [g.edges[e] for e in bits(idx.fragment)]
    if idx.endpoints not in (0, 1, 2) or idx.size < 0:
        return "reject"
    if idx.fragment == 0:
        if idx.pairing:
            return "reject"
        if idx.endpoints == 2:
            return "special_case_1"
        if idx.endpoints == 0:
            return "special_case_3" if idx.size == 0 else "reject"
        return "reject"
    degree: dict[int, int] = {}
    for u, v in s_edges:
        if (inside >> u & 1) == (inside >> v & 1):
            return "reject"
        degree[u] = degree.get(u, 0) + 1
        degree[v] = degree.get(v, 0) + 1
    if idx.cover & sum(1 << v for v in degree):
        return "reject"
    if idx.size < len(degree):
        return "reject"
    ends = {v for v, k in degree.items() if k == 1 and inside >> v & 1}
    uf = UnionFind()
    for u, v in s_edges:
        if not uf.union(u, v):
            return "reject"
    paired = set()
    for u, v in idx.pairing:
        if u not in ends or v not in ends or u in paired or v in paired:
            return "reject"
        paired |= {u, v}
        if not uf.union(u, v):
            return "reject"
    if any(k > 2 for k in degree.values()):
        return "reject"
    if len(ends - paired) != idx.endpoints:
        return "reject"
    free = ends - paired
    if idx.endpoints == 2 and len({uf.find(v) for v in free}) == 1:
        # both path ends in one component: nothing else may exist
        if len({uf.find(v) for v in degree}) != 1:
            return "reject"
        return "special_case_2"
    return "valid"


def _combine(ctx: CutContext, t: int, a: int, b: int, shape_a, shape_b):
    """Structural part of the join for one pair of child shapes.

    Returns ``(parent shape, shared vertex count, need_a, need_b, vs_a, vs_b)``
    or ``None``."""
    s_a, q_a, _ = shape_a
    s_b, q_b, _ = shape_b
    if shape_a == CLOSED or shape_b == CLOSED:
        if {shape_a, shape_b} == {CLOSED, EMPTY}:
            return CLOSED, 0, 0, 0, 0, 0
        return None
    if shape_a == EMPTY and shape_b == EMPTY:
        return EMPTY, 0, 0, 0, 0, 0
    vs_a = ctx.verts(s_a)
    vs_b = ctx.verts(s_b)
    needs = need_masks(ctx, a, b, vs_a, vs_b)
    if needs is None:
        return None
    d = ctx.d
    va, vb, vt = d.vmask[a], d.vmask[b], d.vmask[t]
    cross_t = ctx.cross[t]
    s_t = (s_a | s_b) & cross_t
    if s_a & ctx.cross[b] & ~s_b or s_b & ctx.cross[a] & ~s_a:
        # the edges between the children must agree
        return None

    deg_a = ctx.degree(s_a)
    deg_b = ctx.degree(s_b)
    tails = {}
    for deg, q, mask in ((deg_a, q_a, va), (deg_b, q_b, vb)):
        paired = {x for p in q for x in p}
        for v, k in deg.items():
            if k == 1 and mask >> v & 1 and v not in paired:
                tails[v] = tails.get(v, 0) + 1
    if sum(tails.values()) > 2:
        return None

    uf = UnionFind()
    degree: dict[int, int] = {}
    inner: dict[int, list[int]] = {}
    for e in bits(s_a | s_b):
        u, v = ctx.endpoints[e]
        degree[u] = degree.get(u, 0) + 1
        degree[v] = degree.get(v, 0) + 1
        if not uf.union(u, v):
            return None
        if not cross_t >> e & 1:
            inner.setdefault(u, []).append(v)
            inner.setdefault(v, []).append(u)
    for u, v in q_a + q_b:
        degree[u] += 1
        degree[v] += 1
        if not uf.union(u, v):
            return None
        inner.setdefault(u, []).append(v)
        inner.setdefault(v, []).append(u)
    for v, k in degree.items():
        k += tails.get(v, 0)
        if k > 2:
            return None
        if vt >> v & 1 and k != 2:
            return None

    with_s = {uf.find(ctx.endpoints[e][0]) for e in bits(s_t)}
    roots = {uf.find(v) for v in degree}
    n_tails = sum(tails.values())
    if with_s != roots:
        # a component finished below t: it must be the whole path
        if len(roots) == 1 and s_t == 0 and n_tails == 2:
            return CLOSED, (vs_a & vs_b).bit_count(), needs[0], needs[1], vs_a, vs_b
        return None
    if n_tails == 2 and len(roots) > 1:
        tailed = {uf.find(v) for v in tails}
        if len(tailed) == 1:
            return None

    # pair the ends of each path below t that joins two parent fragment ends
    pairs = []
    seen = set()
    for v in inner:
        if v in seen or len(inner[v]) != 1:
            continue
        prev, cur = v, inner[v][0]
        seen.add(v)
        while len(inner[cur]) == 2:
            nxt = inner[cur][0] if inner[cur][0] != prev else inner[cur][1]
            prev, cur = cur, nxt
        seen.add(cur)
        if v in tails or cur in tails:
            continue
        pairs.append((min(v, cur), max(v, cur)))
    shape = (s_t, tuple(sorted(pairs)), n_tails)
    return shape, (vs_a & vs_b).bit_count(), needs[0], needs[1], vs_a, vs_b


def lip_join(g: Graph, d: BranchDecomposition, t: int, table_a: LipTable, table_b: LipTable,
             ctx: CutContext | None = None) -> LipTable:
    """Parent table from the two child tables by checking every pair of
    child 1-entries for compatibility."""
    ctx = ctx or CutContext(g, d)
    a, b = table_a.node, table_b.node
    if {a, b} != set(d.children[t]):
        raise ValueError(f"tables are not for the children of node {t}")
    table: dict = {}
    # child fragments must agree on the edges between the children
    between = ctx.cross[a] & ctx.cross[b]
    buckets: dict[int, list] = {}
    for shape_b, covers_b in table_b.entries.items():
        buckets.setdefault(shape_b[0] & between, []).append((shape_b, covers_b))
    for shape_a, covers_a in table_a.entries.items():
        for shape_b, covers_b in buckets.get(shape_a[0] & between, ()):
            res = _combine(ctx, t, a, b, shape_a, shape_b)
            if res is None:
                continue
            shape, shared, need_a, need_b, vs_a, vs_b = res
            vs_t = ctx.verts(shape[0])
            for ma, sizes_a, mb, sizes_b, mt in compatible_covers(
                    ctx, t, a, b, vs_a, vs_b, vs_t, need_a, need_b, covers_a, covers_b):
                for ia in sizes_a:
                    for ib in sizes_b:
                        _add(table, shape, mt, ia + ib - shared,
                             ((shape_a, ma, ia), (shape_b, mb, ib)))
    return LipTable(t, table)


def _used_vertices(d: BranchDecomposition, tables: dict[int, LipTable], t: int, key) -> int:
    shape, m, i = key
    if d.is_leaf(t):
        return (1 << d.leaf_vertex[t]) if shape[0] else 0
    left, right = tables[t].entries[shape][m][i]
    a, b = d.children[t]
    return _used_vertices(d, tables, a, left) | _used_vertices(d, tables, b, right)


def order_path(g: Graph, vertices: int) -> list[int]:
    """The vertices of an induced path in path order."""
    vs = list(bits(vertices))
    if len(vs) <= 1:
        return vs
    start = min(v for v in vs if (g.adj[v] & vertices).bit_count() == 1)
    path = [start]
    prev = -1
    while len(path) < len(vs):
        nxt = [u for u in bits(g.adj[path[-1]] & vertices) if u != prev]
        prev = path[-1]
        path.append(nxt[0])
    return path


def is_induced_path(g: Graph, path: list[int]) -> bool:
    if len(set(path)) != len(path):
        return False
    mask = sum(1 << v for v in path)
    for k, v in enumerate(path):
        expected = 0
        if k > 0:
            expected |= 1 << path[k - 1]
        if k + 1 < len(path):
            expected |= 1 << path[k + 1]
        if g.adj[v] & mask != expected:
            return False
    return True


def lip_tables(g: Graph, d: BranchDecomposition, ctx: CutContext | None = None) -> dict[int, LipTable]:
    ctx = ctx or CutContext(g, d)
    tables: dict[int, LipTable] = {}
    for t in d.postorder:
        if d.is_leaf(t):
            tables[t] = lip_leaf_table(g, d, t, ctx)
        else:
            a, b = d.children[t]
            tables[t] = lip_join(g, d, t, tables[a], tables[b], ctx)
    return tables


def lip_solve(g: Graph, d: BranchDecomposition | None = None, witness: bool = False,
              stats: bool = False):
    """Number of vertices of a longest induced path of ``g``.

    With ``witness`` or ``stats`` a ``LipResult`` is returned instead of an
    integer; its path is re-verified before returning.
    """
    start = time.perf_counter()
    if g.n <= 1:
        res = LipResult(g.n, list(range(g.n)))
    else:
        if d is None:
            raise ValueError("a branch decomposition is required for n >= 2")
        ctx = CutContext(g, d)
        tables = lip_tables(g, d, ctx)
        root = tables[d.root].entries.get(CLOSED, {}).get(0, {})
        best = max(root, default=0)
        res = LipResult(max(best, 1))
        res.table_sizes = {t: len(tab) for t, tab in tables.items()}
        res.width = max((ctx.node_mim(t) for t in range(d.size) if t != d.root), default=0)
        if witness:
            if best:
                used = _used_vertices(d, tables, d.root, (CLOSED, 0, best))
                res.path = order_path(g, used)
            else:
                res.path = [0]
    if res.path is not None and (len(res.path) != res.length or not is_induced_path(g, res.path)):
        raise AssertionError(f"reconstructed path {res.path} is not an induced path of size {res.length}")
    res.seconds = time.perf_counter() - start
    if witness or stats:
        return res
    return res.length
