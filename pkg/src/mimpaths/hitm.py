"""H-Induced Topological Minor via branching on branch vertices and their
first path neighbours, followed by Induced Disjoint Paths on what is left."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import permutations

from .decomposition import BranchDecomposition, DecompositionError, linear_order_decomposition
from .graph import Graph, bits
from .idp import TerminalPairs, idp_solve

DEFAULT_MAX_PATTERN_EDGES = 6


class PatternTooLarge(ValueError):
    """Pattern has more edges than the configured cap."""


class PatternGraph:
    """A small pattern graph ``H`` with an edge cap."""

    def __init__(self, h: Graph, max_edges: int = DEFAULT_MAX_PATTERN_EDGES):
        if h.m > max_edges:
            raise PatternTooLarge(f"pattern has {h.m} edges, cap is {max_edges}")
        self.graph = h

    @property
    def n(self) -> int:
        return self.graph.n

    @property
    def edges(self):
        return self.graph.edges


@dataclass(frozen=True)
class BranchAssignment:
    """``branch_map[x]`` is the image of pattern vertex ``x``; ``neighbor_map``
    sends an ordered pattern edge ``(x, y)`` to the vertex following
    ``branch_map[x]`` on the path towards ``branch_map[y]``."""

    branch_map: tuple[int, ...]
    neighbor_map: tuple[tuple[tuple[int, int], int], ...]

    def neighbor(self, x: int, y: int) -> int:
        return dict(self.neighbor_map)[(x, y)]

    @property
    def branch_set(self) -> frozenset[int]:
        return frozenset(self.branch_map)

    @property
    def neighbor_set(self) -> frozenset[int]:
        return frozenset(v for _, v in self.neighbor_map)


@dataclass(frozen=True)
class Reduction:
    """Outcome of preprocessing an assignment that was not rejected."""

    removed: frozenset[int]
    pairs: tuple[tuple[int, int], ...]
    pair_edges: tuple[tuple[int, int], ...]
    fixed: frozenset[int]


@dataclass
class HitmResult:
    found: bool
    assignment: BranchAssignment | None = None
    vertices: list[int] | None = None
    assignments_tried: int = 0
    idp_calls: int = 0
    extra: dict = field(default_factory=dict)


def _as_graph(h) -> Graph:
    return h.graph if isinstance(h, PatternGraph) else h


def _pattern_neighbors(h: Graph) -> list[list[int]]:
    return [sorted(h.neighbors(x)) for x in range(h.n)]


def hitm_enumerate_assignments(g: Graph, h):
    """Every injective branch map with ``deg_G >= deg_H`` together with every
    choice of pairwise distinct first neighbours at each branch vertex."""
    h = _as_graph(h)
    hn = _pattern_neighbors(h)

    def neighbor_choices(phi, x):
        return permutations(sorted(g.neighbors(phi[x])), len(hn[x]))

    def rec(x, phi):
        if x == h.n:
            per_vertex = [list(neighbor_choices(phi, y)) for y in range(h.n)]

            def pick(y, acc):
                if y == h.n:
                    yield BranchAssignment(tuple(phi), tuple(sorted(acc)))
                    return
                for choice in per_vertex[y]:
                    yield from pick(y + 1, acc + [((y, z), v) for z, v in zip(hn[y], choice)])

            yield from pick(0, [])
            return
        for v in range(g.n):
            if v in phi or g.degree(v) < len(hn[x]):
                continue
            yield from rec(x + 1, phi + [v])

    yield from rec(0, [])


def hitm_preprocess(g: Graph, h, asg: BranchAssignment) -> Reduction | None:
    """Apply the preprocessing rules; ``None`` means the assignment is discarded.

    Direct edges ``v_x v_y`` realise ``xy`` and are dropped; a vertex chosen
    from both sides of one edge is the single subdivision vertex of that edge
    and its other neighbours leave the graph; every other edge yields the
    terminal pair ``(v_{x,y}, v_{y,x})``.  Neighbours of branch vertices that
    are not chosen first neighbours are deleted too, since a path vertex
    adjacent to a branch vertex it does not start at breaks inducedness.
    """
    h = _as_graph(h)
    phi = asg.branch_map
    nmap = dict(asg.neighbor_map)
    x_mask = 0
    for v in phi:
        x_mask |= 1 << v
    if len(set(phi)) != len(phi):
        return None
    h_edges = {frozenset(e) for e in h.edges}
    for x in range(h.n):
        for y in range(x + 1, h.n):
            if frozenset((x, y)) not in h_edges and g.has_edge(phi[x], phi[y]):
                return None
    for x in range(h.n):
        chosen = [nmap[(x, y)] for y in h.neighbors(x)]
        if len(set(chosen)) != len(chosen) or any(not g.has_edge(phi[x], v) for v in chosen):
            return None

    allowed: set[frozenset[int]] = set()
    middles = 0
    pairs = []
    pair_edges = []
    uses: dict[int, int] = {}
    for x, y in h.edges:
        a, b = nmap[(x, y)], nmap[(y, x)]
        allowed.add(frozenset((phi[x], a)))
        allowed.add(frozenset((phi[y], b)))
        if g.has_edge(phi[x], phi[y]):
            if a != phi[y] or b != phi[x]:
                return None
            continue
        if x_mask >> a & 1 or x_mask >> b & 1:
            return None
        if a == b:
            middles |= 1 << a
            uses[a] = uses.get(a, 0) + 2
            continue
        uses[a] = uses.get(a, 0) + 1
        uses[b] = uses.get(b, 0) + 1
        allowed.add(frozenset((a, b)))
        pairs.append((a, b))
        pair_edges.append((x, y))
    if any(c > 1 and not middles >> w & 1 for w, c in uses.items()) or any(
            uses[w] != 2 for w in bits(middles)):
        return None

    core = x_mask
    for w in uses:
        core |= 1 << w
    for u in bits(core):
        for v in bits(g.adj[u] & core):
            if u < v and frozenset((u, v)) not in allowed:
                return None

    removed = x_mask | middles
    for w in bits(middles):
        removed |= g.adj[w] & ~x_mask
    for v in phi:
        removed |= g.adj[v] & ~core
    fixed = x_mask | middles
    if any(removed >> v & 1 for p in pairs for v in p):
        return None
    return Reduction(frozenset(bits(removed)), tuple(pairs), tuple(pair_edges),
                     frozenset(bits(fixed)))


def _pruned_assignments(g: Graph, h: Graph):
    """Assignments that can pass preprocessing, generated with early cuts.

    Produces a subset of ``hitm_enumerate_assignments`` containing every
    assignment that ``hitm_preprocess`` accepts."""
    hn = _pattern_neighbors(h)
    order = sorted(range(h.n), key=lambda x: -len(hn[x]))
    adj = g.adj

    def place(k, phi):
        if k == len(order):
            yield from neighbors(phi)
            return
        x = order[k]
        for v in range(g.n):
            if v in phi.values() or g.degree(v) < len(hn[x]):
                continue
            if any(adj[v] >> phi[y] & 1 and y not in hn[x] for y in phi):
                continue
            phi[x] = v
            yield from place(k + 1, phi)
            del phi[x]

    def neighbors(phi):
        x_mask = sum(1 << v for v in phi.values())
        slots = []
        options = []
        for x in range(h.n):
            for y in hn[x]:
                slots.append((x, y))
                if adj[phi[x]] >> phi[y] & 1:
                    options.append([phi[y]])
                else:
                    ok = x_mask & ~((1 << phi[x]) | (1 << phi[y]))
                    options.append([u for u in bits(adj[phi[x]] & ~x_mask) if not adj[u] & ok])
        phi_t = tuple(phi[x] for x in range(h.n))

        def fill(k, acc, used):
            if k == len(slots):
                yield BranchAssignment(phi_t, tuple(sorted(zip(slots, acc))))
                return
            x = slots[k][0]
            for u in options[k]:
                if (x, u) in used:
                    continue
                used.add((x, u))
                acc.append(u)
                yield from fill(k + 1, acc, used)
                acc.pop()
                used.discard((x, u))

        yield from fill(0, [], set())

    yield from place(0, {})


def _same_components(g: Graph, alive: int, pairs) -> bool:
    for a, b in pairs:
        seen = 1 << a
        frontier = seen
        while frontier and not seen >> b & 1:
            nxt = 0
            for v in bits(frontier):
                nxt |= g.adj[v]
            frontier = nxt & alive & ~seen
            seen |= frontier
        if not seen >> b & 1:
            return False
    return True


def is_induced_subdivision(g: Graph, vertices, h: Graph, branch_map) -> bool:
    """Does ``G[vertices]`` equal a subdivision of ``h`` whose branch vertex for
    ``x`` is ``branch_map[x]``?"""
    sub = set(vertices)
    if not set(branch_map) <= sub or len(set(branch_map)) != len(branch_map):
        return False
    inverse = {v: x for x, v in enumerate(branch_map)}
    nb = {v: [u for u in g.neighbors(v) if u in sub] for v in sub}
    for v in sub:
        want = h.degree(inverse[v]) if v in inverse else 2
        if len(nb[v]) != want:
            return False
    seen_edges = []
    covered = set(branch_map)
    for x, v in enumerate(branch_map):
        for start in nb[v]:
            prev, cur = v, start
            while cur not in inverse:
                covered.add(cur)
                prev, cur = cur, next(u for u in nb[cur] if u != prev)
            seen_edges.append(tuple(sorted((x, inverse[cur]))))
    if covered != sub:
        return False
    return sorted(seen_edges) == sorted(e for e in h.edges for _ in range(2))


def hitm_solve(g: Graph, d: BranchDecomposition | None, h, witness: bool = False,
               max_edges: int = DEFAULT_MAX_PATTERN_EDGES):
    """Decide whether ``g`` contains an induced subdivision of ``h``."""
    pattern = h if isinstance(h, PatternGraph) else PatternGraph(h, max_edges)
    hg = pattern.graph
    if d is not None and d.n_vertices != g.n:
        raise DecompositionError("decomposition and graph have different vertex counts")
    res = HitmResult(False)
    if hg.n == 0:
        res.found = True
        res.vertices = []
    elif hg.n <= g.n:
        cache: dict = {}
        full = g.vertex_mask
        for asg in _pruned_assignments(g, hg):
            res.assignments_tried += 1
            red = hitm_preprocess(g, hg, asg)
            if red is None:
                continue
            alive = full & ~sum(1 << v for v in red.removed)
            key = (alive, red.pairs)
            if key not in cache:
                cache[key] = _route(g, d, alive, red.pairs, res)
            paths = cache[key]
            if paths is None:
                continue
            used = set(asg.branch_map) | {v for v in bits(_middle_mask(asg, hg))}
            for p in paths:
                used |= set(p)
            if not is_induced_subdivision(g, used, hg, asg.branch_map):
                raise AssertionError(f"assembled vertex set {sorted(used)} is not an induced subdivision")
            res.found = True
            res.assignment = asg
            res.vertices = sorted(used)
            break
    if witness:
        return res
    return res.found


def _middle_mask(asg: BranchAssignment, h: Graph) -> int:
    nmap = dict(asg.neighbor_map)
    out = 0
    for x, y in h.edges:
        if nmap[(x, y)] == nmap[(y, x)]:
            out |= 1 << nmap[(x, y)]
    return out


def _route(g: Graph, d: BranchDecomposition | None, alive: int, pairs, res: HitmResult):
    """Disjoint induced paths for ``pairs`` inside ``G[alive]``, or ``None``."""
    if not pairs:
        return []
    if not _same_components(g, alive, pairs):
        return None
    keep = list(bits(alive))
    sub, _ = g.induced_subgraph(keep)
    index = {v: k for k, v in enumerate(keep)}
    sub_pairs = [(index[a], index[b]) for a, b in pairs]
    if d is None:
        sub_d = linear_order_decomposition(sub, list(range(sub.n)))
    else:
        sub_d = d.restrict(keep)
    res.idp_calls += 1
    out = idp_solve(sub, sub_d, TerminalPairs(sub_pairs, sub.n), witness=True)
    if not out.feasible:
        return None
    return [[keep[v] for v in p] for p in out.paths]
