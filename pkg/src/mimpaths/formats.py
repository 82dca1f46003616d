"""Text formats for graphs, decompositions, terminal pairs and intervals.

All vertex ids in files are 1-based.  Lines starting with ``c`` and blank
lines are ignored.  Writers emit a canonical form, so writing what was read
from a canonical file reproduces it byte for byte.
"""

from __future__ import annotations

from .decomposition import BranchDecomposition, DecompositionError, root_decomposition
from .graph import Graph


class FormatError(ValueError):
    """Malformed input file."""


def _lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        yield lineno, line.split()


def _int(token: str, lineno: int) -> int:
    try:
        return int(token)
    except ValueError:
        raise FormatError(f"line {lineno}: expected an integer, got {token!r}") from None


def parse_graph(text: str) -> Graph:
    n = None
    m = None
    edges = []
    for lineno, parts in _lines(text):
        if parts[0] == "p":
            if n is not None:
                raise FormatError(f"line {lineno}: duplicate problem line")
            nums = [p for p in parts[1:] if not p.isalpha()]
            if len(nums) != 2:
                raise FormatError(f"line {lineno}: problem line must be 'p <n> <m>'")
            n, m = _int(nums[0], lineno), _int(nums[1], lineno)
            if n < 0 or m < 0:
                raise FormatError(f"line {lineno}: negative size")
        elif parts[0] == "e":
            if n is None:
                raise FormatError(f"line {lineno}: edge before problem line")
            if len(parts) != 3:
                raise FormatError(f"line {lineno}: edge line must be 'e <u> <v>'")
            u, v = _int(parts[1], lineno), _int(parts[2], lineno)
            if not (1 <= u <= n and 1 <= v <= n):
                raise FormatError(f"line {lineno}: vertex id out of range 1..{n}")
            edges.append((u - 1, v - 1))
        else:
            raise FormatError(f"line {lineno}: unknown line type {parts[0]!r}")
    if n is None:
        raise FormatError("missing problem line 'p <n> <m>'")
    if len(edges) != m:
        raise FormatError(f"problem line announces {m} edges, found {len(edges)}")
    try:
        return Graph(n, edges)
    except ValueError as exc:
        raise FormatError(str(exc)) from None


def format_graph(g: Graph) -> str:
    out = [f"p {g.n} {g.m}"]
    out.extend(f"e {u + 1} {v + 1}" for u, v in g.edges)
    return "\n".join(out) + "\n"


def parse_decomposition(text: str, n_vertices: int) -> BranchDecomposition:
    """Rooted form (``root``/``i``/``l`` lines) or unrooted form (``u``/``l``)."""
    root = None
    internal: dict[int, tuple[int, int]] = {}
    unrooted: dict[int, list[int]] = {}
    leaves: dict[int, int] = {}
    for lineno, parts in _lines(text):
        kind, nums = parts[0], [_int(p, lineno) for p in parts[1:]]
        if kind == "root":
            if len(nums) != 1 or root is not None:
                raise FormatError(f"line {lineno}: expected a single 'root <id>' line")
            root = nums[0]
        elif kind == "i":
            if len(nums) < 2:
                raise FormatError(f"line {lineno}: internal node line must be 'i <id> <child> <child>'")
            if len(nums) != 3:
                raise DecompositionError(
                    f"line {lineno}: node {nums[0]} has {len(nums) - 1} children; exactly two are required")
            if nums[0] in internal or nums[0] in leaves:
                raise FormatError(f"line {lineno}: node {nums[0]} defined twice")
            internal[nums[0]] = (nums[1], nums[2])
        elif kind == "u":
            if len(nums) < 2:
                raise FormatError(f"line {lineno}: 'u <id> <neighbor>...' needs a neighbor")
            unrooted.setdefault(nums[0], []).extend(nums[1:])
        elif kind == "l":
            if len(nums) != 2:
                raise FormatError(f"line {lineno}: leaf line must be 'l <id> <vertex>'")
            if nums[0] in leaves or nums[0] in internal:
                raise FormatError(f"line {lineno}: node {nums[0]} defined twice")
            if not 1 <= nums[1] <= n_vertices:
                raise DecompositionError(f"line {lineno}: leaf vertex {nums[1]} out of range 1..{n_vertices}")
            leaves[nums[0]] = nums[1] - 1
        else:
            raise FormatError(f"line {lineno}: unknown line type {kind!r}")
    if unrooted:
        if root is not None or internal:
            raise FormatError("cannot mix rooted and unrooted decomposition lines")
        return root_decomposition(unrooted, leaves, n_vertices)
    if root is None:
        raise FormatError("missing 'root <id>' line")
    ids = sorted(set(internal) | set(leaves))
    index = {t: k for k, t in enumerate(ids)}
    children: list[tuple[int, ...]] = [()] * len(ids)
    for t, kids in internal.items():
        for c in kids:
            if c not in index:
                raise DecompositionError(f"node {t} has undefined child {c}")
        children[index[t]] = (index[kids[0]], index[kids[1]])
    if root not in index:
        raise DecompositionError(f"root {root} is not a defined node")
    return BranchDecomposition(n_vertices, index[root], children,
                               {index[t]: v for t, v in leaves.items()})


def format_decomposition(d: BranchDecomposition) -> str:
    """Rooted form with nodes renumbered 1.. in preorder."""
    order = []
    stack = [d.root]
    while stack:
        t = stack.pop()
        order.append(t)
        stack.extend(reversed(d.children[t]))
    ident = {t: k + 1 for k, t in enumerate(order)}
    out = [f"root {ident[d.root]}"]
    for t in order:
        if d.is_leaf(t):
            out.append(f"l {ident[t]} {d.leaf_vertex[t] + 1}")
        else:
            a, b = d.children[t]
            out.append(f"i {ident[t]} {ident[a]} {ident[b]}")
    return "\n".join(out) + "\n"


def parse_pairs(text: str, n_vertices: int) -> list[tuple[int, int]]:
    pairs = []
    for lineno, parts in _lines(text):
        if len(parts) != 2:
            raise FormatError(f"line {lineno}: pair line must be '<x> <y>'")
        x, y = _int(parts[0], lineno), _int(parts[1], lineno)
        if not (1 <= x <= n_vertices and 1 <= y <= n_vertices):
            raise FormatError(f"line {lineno}: terminal out of range 1..{n_vertices}")
        pairs.append((x - 1, y - 1))
    flat = [v for p in pairs for v in p]
    if len(set(flat)) != len(flat):
        raise FormatError("terminals must be pairwise distinct")
    return pairs


def format_pairs(pairs) -> str:
    return "".join(f"{x + 1} {y + 1}\n" for x, y in pairs)


def parse_intervals(text: str) -> list[tuple[float, float]]:
    """One ``<left> <right>`` line per vertex, in vertex order."""
    out = []
    for lineno, parts in _lines(text):
        if len(parts) != 2:
            raise FormatError(f"line {lineno}: interval line must be '<left> <right>'")
        try:
            left, right = float(parts[0]), float(parts[1])
        except ValueError:
            raise FormatError(f"line {lineno}: interval endpoints must be numbers") from None
        if not left < right:
            raise FormatError(f"line {lineno}: interval needs left < right")
        out.append((left, right))
    return out
