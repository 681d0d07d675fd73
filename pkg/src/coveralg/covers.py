"""Bipartite graphs coming from posets and their minimal vertex covers.

The graph of a poset on ``n`` elements has vertices ``x_1..x_n`` and
``y_1..y_n`` and an edge ``{x_i, y_j}`` whenever ``p_i <= p_j``.  Covers are
stored as a pair of bit-masks, one per side.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import NotAnIdealError, NotMinimalError, SizeLimitError
from .lattice import is_ideal
from .poset import MAX_N, Poset, bits, check_size, popcount

NAIVE_MAX_VERTICES = 24


@dataclass(frozen=True)
class BipartiteGraph:
    n: int
    edges: tuple[tuple[int, int], ...]  # (i, j) means {x_i, y_j}, 0-based


@dataclass(frozen=True)
class VertexCover:
    xmask: int
    ymask: int

    @property
    def size(self) -> int:
        return popcount(self.xmask) + popcount(self.ymask)

    def label(self) -> str:
        names = [f"x{i + 1}" for i in bits(self.xmask)] + [f"y{j + 1}" for j in bits(self.ymask)]
        return "{" + ", ".join(names) + "}"


def _canonical(covers: Iterable[VertexCover]) -> list[VertexCover]:
    return sorted(covers, key=lambda c: (popcount(c.xmask), c.xmask, c.ymask))


def graph_from_poset(p: Poset) -> BipartiteGraph:
    p.require_natural()
    edges = tuple((i, j) for i in range(p.n) for j in range(p.n) if p.leq[i][j])
    return BipartiteGraph(p.n, edges)


def is_cover(g: BipartiteGraph, c: VertexCover) -> bool:
    return all(c.xmask >> i & 1 or c.ymask >> j & 1 for i, j in g.edges)


def minimal_covers_recursive(p: Poset, max_covers: int = 1 << 20) -> list[VertexCover]:
    """Minimal vertex covers of the poset's graph, grown element by element.

    A cover of the graph on ``p_1..p_k`` is a cover on ``p_1..p_(k-1)`` plus
    ``y_k``, or plus ``x_k`` when it already holds ``x_i`` for every
    ``p_i < p_k``.  The one-element base case is ``{x_1}``, ``{y_1}``.
    """
    p.require_natural()
    check_size(p.n, MAX_N)
    if p.n == 0:
        return [VertexCover(0, 0)]
    covers = [VertexCover(1, 0), VertexCover(0, 1)]
    for k in range(1, p.n):
        need = p.below[k] & ~(1 << k)
        nxt = []
        for c in covers:
            nxt.append(VertexCover(c.xmask, c.ymask | 1 << k))
            if need & ~c.xmask == 0:
                nxt.append(VertexCover(c.xmask | 1 << k, c.ymask))
        if len(nxt) > max_covers:
            raise SizeLimitError(f"more than {max_covers} minimal covers")
        covers = nxt
    return _canonical(covers)


def minimal_covers_naive(g: BipartiteGraph) -> list[VertexCover]:
    """All inclusion-minimal covers, by checking every vertex subset."""
    if 2 * g.n > NAIVE_MAX_VERTICES:
        raise SizeLimitError(f"naive enumeration capped at {NAIVE_MAX_VERTICES} vertices")
    n = g.n
    full = 1 << (2 * n)
    # cover bits: low n bits are x's, high n bits are y's
    edge_masks = [1 << i | 1 << (n + j) for i, j in g.edges]
    covers = [s for s in range(full) if all(s & e for e in edge_masks)]
    cover_set = set(covers)
    minimal = []
    for s in covers:
        if all(s & ~(1 << v) not in cover_set for v in bits(s)):
            minimal.append(VertexCover(s & ((1 << n) - 1), s >> n))
    return _canonical(minimal)


def is_unmixed(g: BipartiteGraph) -> bool:
    sizes = {c.size for c in minimal_covers_naive(g)}
    return len(sizes) <= 1


def cover_to_ideal(p: Poset, c: VertexCover) -> int:
    """The ideal ``{p_i : x_i in C}`` of a minimal cover ``C``."""
    g = graph_from_poset(p)
    if not is_cover(g, c):
        raise NotMinimalError("not a vertex cover")
    if c.xmask & c.ymask or c.xmask | c.ymask != p.full_mask:
        raise NotMinimalError("a minimal cover picks exactly one of x_i, y_i for each i")
    return c.xmask


def ideal_to_cover(p: Poset, alpha: int) -> VertexCover:
    if not is_ideal(p, alpha) or alpha & ~p.full_mask:
        raise NotAnIdealError("not an ideal")
    return VertexCover(alpha, p.full_mask & ~alpha)


def is_k_cover(g: BipartiteGraph, a: Sequence[int], k: int) -> bool:
    """``a`` lists x-exponents then y-exponents; True iff every edge weighs at least ``k``."""
    n = g.n
    return all(a[i] + a[n + j] >= k for i, j in g.edges)


def generator_monomial(p: Poset, alpha: int) -> tuple[int, ...]:
    """Exponent vector of ``prod_{p_i in alpha} x_i * prod_{p_j not in alpha} y_j``."""
    if not is_ideal(p, alpha) or alpha & ~p.full_mask:
        raise NotAnIdealError("not an ideal")
    n = p.n
    return tuple(alpha >> i & 1 for i in range(n)) + tuple(1 - (alpha >> j & 1) for j in range(n))
