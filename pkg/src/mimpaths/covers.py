"""Minimal vertex covers of bipartite graphs with few induced-matching edges.

For a bipartite graph with sides ``A`` and ``B``, every minimal vertex cover
has the form ``N(R) | X_R`` where ``R`` is a subset of ``A`` with at most
``mim(A)`` vertices and ``X_R`` holds the vertices of ``A`` that still have a
neighbour in ``B - N(R)``.  Enumerating all small ``R`` therefore lists every
minimal cover, at most ``n ** mim(A)`` of them.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

from .graph import BipartiteGraph, from_mask, max_induced_matching_size


@dataclass(frozen=True)
class MinimalVertexCover:
    cover: frozenset[int]
    m_in: frozenset[int]
    m_out: frozenset[int]


def covers_from_neighborhoods(side_a: list[int], nbr: dict[int, int], w: int) -> set[int]:
    """Bitmask form of the enumeration.

    ``nbr[a]`` is the neighbour bitmask of ``a`` in the other side.  Returns
    the set of cover bitmasks; an edgeless graph yields ``{0}``.
    """
    active = [a for a in side_a if nbr[a]]
    if not active:
        return {0}
    out = set()
    for size in range(min(w, len(active)) + 1):
        for r in combinations(active, size):
            n_r = 0
            for a in r:
                n_r |= nbr[a]
            cover = n_r
            for a in active:
                if nbr[a] & ~n_r:
                    cover |= 1 << a
            out.add(cover)
    return out


def enumerate_minimal_vertex_covers(h: BipartiteGraph, w: int, check: bool = False
                                    ) -> set[MinimalVertexCover]:
    """All minimal vertex covers of ``h``, given ``w >= mim(side_a)``.

    With ``check=True`` the precondition on ``w`` and the minimality of every
    produced set are verified and a ``ValueError`` is raised on violation.
    """
    if w < 0:
        raise ValueError("w must be nonnegative")
    if check:
        actual = max_induced_matching_size(h)
        if w < actual:
            raise ValueError(f"w={w} is below the induced matching number {actual}; enumeration would be incomplete")
    nbr = {a: 0 for a in h.side_a}
    for a, b in h.edges:
        nbr[a] |= 1 << b
    masks = covers_from_neighborhoods(sorted(h.side_a), nbr, w)
    result = set()
    for mask in masks:
        cover = from_mask(mask)
        if check and not is_minimal_vertex_cover(h, cover):
            raise ValueError(f"enumerated set {sorted(cover)} is not a minimal vertex cover")
        result.add(MinimalVertexCover(cover, cover & h.side_a, cover & h.side_b))
    return result


def is_minimal_vertex_cover(h: BipartiteGraph, m: Iterable[int]) -> bool:
    """True iff ``m`` covers every edge and each member covers some edge alone."""
    m = frozenset(m)
    if any(a not in m and b not in m for a, b in h.edges):
        return False
    for v in m:
        if not any((a == v and b not in m) or (b == v and a not in m) for a, b in h.edges):
            return False
    return True

