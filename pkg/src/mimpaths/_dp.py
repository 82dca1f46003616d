"""Shared machinery for the table-based solvers.

Everything is bitmask based: vertex sets are masks over ``0..n-1`` and edge
sets are masks over the indices of ``Graph.edges``.  ``CutContext`` holds the
per-run caches that the LIP and IDP joins both use.
"""

from __future__ import annotations

from .covers import covers_from_neighborhoods
from .decomposition import BranchDecomposition, DecompositionError
from .graph import Graph, bits, mim_of_cut


class CutContext:
    """Per-node cut data plus memoised set operations for one solver run."""

    def __init__(self, g: Graph, d: BranchDecomposition):
        if g.n != d.n_vertices:
            raise DecompositionError("decomposition and graph have different vertex counts")
        self.g = g
        self.d = d
        self.adj = g.adj
        self.endpoints = g.edges
        self.edge_vmask = [(1 << u) | (1 << v) for u, v in g.edges]
        full = g.vertex_mask
        self.full = full
        incident = [0] * g.n
        for k, (u, v) in enumerate(g.edges):
            incident[u] |= 1 << k
            incident[v] |= 1 << k
        self.incident = incident
        # edges with exactly one endpoint below t
        self.cross = []
        for t in range(d.size):
            inside = d.vmask[t]
            mask = 0
            for v in bits(inside):
                mask ^= incident[v]
            # an edge inside V_t was toggled twice
            self.cross.append(mask)
        self._mim: dict[int, int] = {}
        self._verts: dict[int, int] = {0: 0}
        self._nbr: dict[int, int] = {0: 0}
        self._covers: dict[tuple[int, int], tuple[int, ...]] = {}
        self._degree: dict[int, dict[int, int]] = {}
        self._components: dict[int, tuple[int, ...]] = {}
        self._outside: dict[tuple[int, int, int], int] = {}

    def node_mim(self, t: int) -> int:
        if t not in self._mim:
            a = self.d.vmask[t]
            if a == self.full:
                self._mim[t] = 0
            else:
                self._mim[t] = mim_of_cut(self.g, a)
        return self._mim[t]

    def verts(self, s: int) -> int:
        """Vertex mask of an edge mask."""
        out = self._verts.get(s)
        if out is None:
            out = 0
            ev = self.edge_vmask
            for e in bits(s):
                out |= ev[e]
            self._verts[s] = out
        return out

    def nbr(self, mask: int) -> int:
        """Open neighbourhood of a vertex mask."""
        out = self._nbr.get(mask)
        if out is None:
            out = 0
            adj = self.adj
            for v in bits(mask):
                out |= adj[v]
            self._nbr[mask] = out
        return out

    def degree(self, s: int) -> dict[int, int]:
        out = self._degree.get(s)
        if out is None:
            out = {}
            for e in bits(s):
                u, v = self.endpoints[e]
                out[u] = out.get(u, 0) + 1
                out[v] = out.get(v, 0) + 1
            self._degree[s] = out
        return out

    def components(self, s: int) -> tuple[int, ...]:
        """Vertex masks of the components of an edge set, by smallest vertex."""
        out = self._components.get(s)
        if out is None:
            comp: dict[int, int] = {}
            for e in bits(s):
                u, v = self.endpoints[e]
                cu = comp.get(u, 1 << u)
                cv = comp.get(v, 1 << v)
                merged = cu | cv
                for x in bits(merged):
                    comp[x] = merged
            out = tuple(sorted(set(comp.values()), key=lambda m: m & -m))
            self._components[s] = out
        return out

    def covers(self, t: int, vs: int) -> tuple[int, ...]:
        """Minimal vertex covers of the crossing graph at ``t`` minus ``vs``."""
        key = (t, vs)
        out = self._covers.get(key)
        if out is None:
            inside = self.d.vmask[t] & ~vs
            outside = self.full & ~self.d.vmask[t] & ~vs
            adj = self.adj
            nbr = {a: adj[a] & outside for a in bits(inside)}
            out = tuple(sorted(covers_from_neighborhoods(sorted(nbr), nbr, self.node_mim(t))))
            self._covers[key] = out
        return out

    def outside_free(self, child: int, parent: int, vs: int, m: int) -> int:
        """Vertices outside ``parent`` adjacent to a vertex below ``child``
        that is neither in the fragment nor in the cover."""
        key = (child, vs, m)
        out = self._outside.get(key)
        if out is None:
            free = self.d.vmask[child] & ~vs & ~m
            out = self.nbr(free) & self.full & ~self.d.vmask[parent]
            self._outside[key] = out
        return out


class UnionFind:
    __slots__ = ("parent",)

    def __init__(self):
        self.parent: dict[int, int] = {}

    def find(self, x: int) -> int:
        parent = self.parent
        root = parent.setdefault(x, x)
        while root != parent[root]:
            root = parent[root]
        while parent[x] != root:
            parent[x], x = root, parent[x]
        return root

    def union(self, x: int, y: int) -> bool:
        """Merge; False when already joined (the new edge would close a cycle)."""
        rx, ry = self.find(x), self.find(y)
        if rx == ry:
            return False
        self.parent[rx] = ry
        return True


def need_masks(ctx: CutContext, a: int, b: int, vs_a: int, vs_b: int):
    """Vertices each side must have in its cover so that fragment vertices
    contributed by the other side stay non-adjacent to unused vertices.

    Returns ``None`` when a required vertex is a fragment vertex itself."""
    va = ctx.d.vmask[a]
    vb = ctx.d.vmask[b]
    need_a = ctx.nbr(vs_b & ~vs_a) & va
    if need_a & vs_a:
        return None
    need_b = ctx.nbr(vs_a & ~vs_b) & vb
    if need_b & vs_b:
        return None
    return need_a, need_b


def compatible_covers(ctx: CutContext, t: int, a: int, b: int, vs_a: int, vs_b: int,
                      vs_t: int, need_a: int, need_b: int, covers_a, covers_b):
    """Yield ``(m_a, payload_a, m_b, payload_b, m_t)`` for every cover
    combination that passes the compatibility checks of the join.

    ``covers_a`` and ``covers_b`` map child cover masks to arbitrary payloads.
    """
    d = ctx.d
    va, vb, vt = d.vmask[a], d.vmask[b], d.vmask[t]
    parent_covers = ctx.covers(t, vs_t)
    b_items = [(mb, pb, ctx.outside_free(b, t, vs_b, mb))
               for mb, pb in covers_b.items() if not need_b & ~mb]
    if not b_items:
        return
    for ma, pa in covers_a.items():
        if need_a & ~ma:
            continue
        out_a = ctx.outside_free(a, t, vs_a, ma)
        for mb, pb, out_b in b_items:
            # intermediate vertices seen from both children
            if ma & vb & ~mb or mb & va & ~ma:
                continue
            inner = (ma | mb) & vt
            for mt in parent_covers:
                if mt & vt & ~inner:
                    continue
                if mt & out_a & ~ma or mt & out_b & ~mb:
                    continue
                yield ma, pa, mb, pb, mt
