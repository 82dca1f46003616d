"""Induced Disjoint Paths by dynamic programming over a branch decomposition.

Indices are ``(S, M, lambda, Q)``: the crossing part ``S`` of the partial
solution, a minimal cover ``M`` of the crossing graph minus ``V(S)``, one label
in ``1..k`` per component of ``S`` (components ordered by smallest vertex) and
a pairing ``Q`` of the ground set ``D ^ X_t``.  ``D`` holds the fragment
vertices below ``t`` of fragment degree one and ``X_t`` the terminals below
``t``; a terminal that is already a path end in ``S`` leaves the ground set.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Iterable, NamedTuple

from ._dp import CutContext, UnionFind, compatible_covers, need_masks
from .decomposition import BranchDecomposition
from .graph import Graph, bits


class TerminalPairs:
    """``k`` pairs ``(x_i, y_i)`` of pairwise distinct terminals, ``i`` from 1."""

    def __init__(self, pairs: Iterable[tuple[int, int]], n: int | None = None):
        pairs = [tuple(p) for p in pairs]
        flat = [v for p in pairs for v in p]
        if any(len(p) != 2 for p in pairs):
            raise ValueError("each terminal pair needs exactly two vertices")
        if len(set(flat)) != len(flat):
            raise ValueError("terminals must be 2k distinct vertices")
        if n is not None and any(not 0 <= v < n for v in flat):
            raise ValueError("terminal out of range")
        self.pairs = pairs
        self.label = {}
        self.partner = {}
        for i, (x, y) in enumerate(pairs, start=1):
            self.label[x] = self.label[y] = i
            self.partner[x], self.partner[y] = y, x
        self.mask = sum(1 << v for v in flat)

    @property
    def k(self) -> int:
        return len(self.pairs)

    def __repr__(self):
        return f"TerminalPairs({self.pairs})"


class IdpIndex(NamedTuple):
    fragment: int
    cover: int
    labeling: tuple[int, ...]
    pairing: tuple[tuple[int, int], ...]


@dataclass
class IdpTable:
    node: int
    entries: dict = field(default_factory=dict)

    def indices(self):
        for (s, lab, q), by_cover in self.entries.items():
            for m in by_cover:
                yield IdpIndex(s, m, lab, q)

    def __len__(self):
        return sum(len(by_cover) for by_cover in self.entries.values())

    def __contains__(self, idx: IdpIndex) -> bool:
        return idx.cover in self.entries.get((idx.fragment, idx.labeling, idx.pairing), {})


@dataclass
class IdpResult:
    feasible: bool
    paths: list[list[int]] | None = None
    table_sizes: dict[int, int] = field(default_factory=dict)
    width: int = 0
    seconds: float = 0.0


EMPTY = (0, (), ())


def _add(table: dict, shape, m: int, pointer) -> None:
    by_cover = table.setdefault(shape, {})
    if m not in by_cover:
        by_cover[m] = pointer


def idp_leaf_table(g: Graph, d: BranchDecomposition, t: int, terms: TerminalPairs,
                   ctx: CutContext | None = None) -> IdpTable:
    if not d.is_leaf(t):
        raise ValueError(f"node {t} is not a leaf")
    ctx = ctx or CutContext(g, d)
    v = d.leaf_vertex[t]
    incident = list(bits(ctx.cross[t]))
    other = [ctx.endpoints[e][0] ^ ctx.endpoints[e][1] ^ v for e in incident]
    label = terms.label
    table: dict = {}
    if v in label:
        # a terminal is a path end: one fragment edge, labelled by its pair
        i = label[v]
        for e, w in zip(incident, other):
            if label.get(w, i) == i:
                _add(table, (1 << e, (i,), ()), 0, None)
        return IdpTable(t, table)
    for x in range(len(incident)):
        for y in range(x + 1, len(incident)):
            forced = {label[w] for w in (other[x], other[y]) if w in label}
            if len(forced) > 1:
                continue
            choices = forced or range(1, terms.k + 1)
            s = (1 << incident[x]) | (1 << incident[y])
            for i in choices:
                _add(table, (s, (i,), ()), 0, None)
    for m in ctx.covers(t, 0):
        _add(table, EMPTY, m, None)
    return IdpTable(t, table)


def _combine(ctx: CutContext, t: int, a: int, b: int, terms: TerminalPairs, shape_a, shape_b):
    s_a, lab_a, q_a = shape_a
    s_b, lab_b, q_b = shape_b
    if shape_a == EMPTY and shape_b == EMPTY:
        return EMPTY, 0, 0, 0, 0
    vs_a = ctx.verts(s_a)
    vs_b = ctx.verts(s_b)
    needs = need_masks(ctx, a, b, vs_a, vs_b)
    if needs is None:
        return None
    d = ctx.d
    vt = d.vmask[t]
    cross_t = ctx.cross[t]
    s_t = (s_a | s_b) & cross_t
    label = terms.label

    uf = UnionFind()
    comp_label: dict[int, int] = {}

    def tag(v: int, i: int) -> bool:
        r = uf.find(v)
        old = comp_label.setdefault(r, i)
        return old == i

    def join(u: int, v: int) -> bool:
        ru, rv = uf.find(u), uf.find(v)
        if ru == rv:
            return False
        lu, lv = comp_label.get(ru), comp_label.get(rv)
        if lu is not None and lv is not None and lu != lv:
            return False
        uf.union(ru, rv)
        r = uf.find(ru)
        comp_label.pop(ru, None)
        comp_label.pop(rv, None)
        if lu is not None or lv is not None:
            comp_label[r] = lu if lu is not None else lv
        return True

    degree: dict[int, int] = {}
    inner: dict[int, list[int]] = {}
    for s, lab in ((s_a, lab_a), (s_b, lab_b)):
        for comp, i in zip(ctx.components(s), lab):
            if not tag(comp.bit_length() - 1, i):
                return None
    for e in bits(s_a | s_b):
        u, v = ctx.endpoints[e]
        degree[u] = degree.get(u, 0) + 1
        degree[v] = degree.get(v, 0) + 1
        if not join(u, v):
            return None
        if not cross_t >> e & 1:
            inner.setdefault(u, []).append(v)
            inner.setdefault(v, []).append(u)
    for u, v in q_a + q_b:
        degree[u] = degree.get(u, 0) + 1
        degree[v] = degree.get(v, 0) + 1
        if not join(u, v):
            return None
        inner.setdefault(u, []).append(v)
        inner.setdefault(v, []).append(u)
    for v, k in degree.items():
        term = v in label
        if term and not tag(v, label[v]):
            return None
        if vt >> v & 1:
            if k != (1 if term else 2):
                return None
        elif k > (1 if term else 2):
            return None

    roots = {uf.find(v) for v in degree}
    with_s = {uf.find(ctx.endpoints[e][0]) for e in bits(s_t)}
    # a component with both terminals of its pair is a finished path; no other
    # component may carry that label
    finished = {}
    for r in roots - with_s:
        finished[comp_label[r]] = r
    for r in roots:
        i = comp_label.get(r)
        if i in finished and finished[i] != r:
            return None

    lab_t = []
    for comp in ctx.components(s_t):
        lab_t.append(comp_label[uf.find(comp.bit_length() - 1)])

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
        pairs.append((min(v, cur), max(v, cur)))
    shape = (s_t, tuple(lab_t), tuple(sorted(pairs)))
    return shape, needs[0], needs[1], vs_a, vs_b


def idp_join(g: Graph, d: BranchDecomposition, t: int, table_a: IdpTable, table_b: IdpTable,
             terms: TerminalPairs, ctx: CutContext | None = None) -> IdpTable:
    ctx = ctx or CutContext(g, d)
    a, b = table_a.node, table_b.node
    if {a, b} != set(d.children[t]):
        raise ValueError(f"tables are not for the children of node {t}")
    between = ctx.cross[a] & ctx.cross[b]
    buckets: dict[int, list] = {}
    for shape_b, covers_b in table_b.entries.items():
        buckets.setdefault(shape_b[0] & between, []).append((shape_b, covers_b))
    table: dict = {}
    for shape_a, covers_a in table_a.entries.items():
        for shape_b, covers_b in buckets.get(shape_a[0] & between, ()):
            res = _combine(ctx, t, a, b, terms, shape_a, shape_b)
            if res is None:
                continue
            shape, need_a, need_b, vs_a, vs_b = res
            vs_t = ctx.verts(shape[0])
            for ma, _, mb, _, mt in compatible_covers(
                    ctx, t, a, b, vs_a, vs_b, vs_t, need_a, need_b, covers_a, covers_b):
                _add(table, shape, mt, ((shape_a, ma), (shape_b, mb)))
    return IdpTable(t, table)


def _leaf_labels(d: BranchDecomposition, tables: dict[int, IdpTable], t: int, key,
                 terms: TerminalPairs, out: dict[int, int]) -> None:
    shape, m = key
    if d.is_leaf(t):
        if shape[0]:
            out[d.leaf_vertex[t]] = shape[1][0]
        return
    left, right = tables[t].entries[shape][m]
    a, b = d.children[t]
    _leaf_labels(d, tables, a, left, terms, out)
    _leaf_labels(d, tables, b, right, terms, out)


def _trace(g: Graph, x: int, y: int, members: set[int]) -> list[int]:
    path = [x]
    prev = -1
    while path[-1] != y:
        nxt = [u for u in bits(g.adj[path[-1]]) if u in members and u != prev]
        if len(nxt) != 1:
            raise AssertionError("labelled vertices do not form a path")
        prev = path[-1]
        path.append(nxt[0])
    if len(path) != len(members):
        raise AssertionError("labelled vertices do not form a path")
    return path


def verify_paths(g: Graph, pairs: list[tuple[int, int]], paths: list[list[int]]) -> bool:
    """Vertex-disjoint, pairwise non-adjacent, induced ``x_i``-``y_i`` paths."""
    if len(paths) != len(pairs):
        return False
    used = 0
    for (x, y), path in zip(pairs, paths):
        if not path or path[0] != x or path[-1] != y or len(set(path)) != len(path):
            return False
        mask = sum(1 << v for v in path)
        if mask & used:
            return False
        used |= mask
        for k, v in enumerate(path):
            expected = 0
            if k:
                expected |= 1 << path[k - 1]
            if k + 1 < len(path):
                expected |= 1 << path[k + 1]
            if g.adj[v] & mask != expected:
                return False
    for i, p in enumerate(paths):
        for q in paths[i + 1:]:
            if any(g.adj[u] >> v & 1 for u in p for v in q):
                return False
    return True


def idp_tables(g: Graph, d: BranchDecomposition, terms: TerminalPairs,
               ctx: CutContext | None = None) -> dict[int, IdpTable]:
    ctx = ctx or CutContext(g, d)
    tables: dict[int, IdpTable] = {}
    for t in d.postorder:
        if d.is_leaf(t):
            tables[t] = idp_leaf_table(g, d, t, terms, ctx)
        else:
            a, b = d.children[t]
            tables[t] = idp_join(g, d, t, tables[a], tables[b], terms, ctx)
    return tables


def idp_solve(g: Graph, d: BranchDecomposition | None, terms, witness: bool = False,
              stats: bool = False):
    """Decide whether ``g`` has pairwise non-adjacent, vertex-disjoint induced
    paths joining every terminal pair.

    Returns a bool, or an ``IdpResult`` with ``witness`` or ``stats``; witness
    paths are re-verified before returning.
    """
    start = time.perf_counter()
    if not isinstance(terms, TerminalPairs):
        terms = TerminalPairs(terms, g.n)
    elif any(not 0 <= v < g.n for p in terms.pairs for v in p):
        raise ValueError("terminal out of range")
    if terms.k == 0:
        res = IdpResult(True, [])
    else:
        if d is None:
            raise ValueError("a branch decomposition is required")
        ctx = CutContext(g, d)
        tables = idp_tables(g, d, terms, ctx)
        goal = (0, (), tuple(sorted((min(p), max(p)) for p in terms.pairs)))
        ok = 0 in tables[d.root].entries.get(goal, {})
        res = IdpResult(ok)
        res.table_sizes = {t: len(tab) for t, tab in tables.items()}
        res.width = max((ctx.node_mim(t) for t in range(d.size) if t != d.root), default=0)
        if ok and witness:
            labels: dict[int, int] = {}
            _leaf_labels(d, tables, d.root, (goal, 0), terms, labels)
            res.paths = []
            for i, (x, y) in enumerate(terms.pairs, start=1):
                members = {v for v, lab in labels.items() if lab == i}
                res.paths.append(_trace(g, x, y, members))
    if res.paths is not None and res.feasible and not verify_paths(g, terms.pairs, res.paths):
        raise AssertionError(f"reconstructed paths {res.paths} fail verification")
    res.seconds = time.perf_counter() - start
    if witness or stats:
        return res
    return res.feasible
