"""Finite posets on {0, ..., n-1} stored as a boolean order matrix.

Elements are 0-indexed inside the library.  Relations passed to
:func:`from_cover_relations` and everything read from or written to files
use 1-based indices, matching the usual ``[n] = {1, ..., n}`` notation.
Subsets of elements (ideals, induced-subposet selectors) are int bit-masks
with bit ``i`` standing for element ``i``.
"""

from __future__ import annotations

import heapq
import itertools
import random
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

from .errors import CycleError, NotNaturallyLabeledError, SizeLimitError

MAX_N = 20
ISO_MAX_N = 12


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def bits(mask: int) -> list[int]:
    """Indices of the set bits of ``mask``, ascending."""
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


def check_size(n: int, cap: int, what: str = "poset") -> None:
    if n > cap:
        raise SizeLimitError(f"{what} size {n} exceeds cap {cap}")


@dataclass(frozen=True)
class Poset:
    """Partial order on ``n`` elements; ``leq[i][j]`` iff ``p_i <= p_j``."""

    n: int
    leq: tuple[tuple[bool, ...], ...]
    below: tuple[int, ...] = field(init=False, repr=False, compare=False)
    above: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        n = self.n
        leq = tuple(tuple(bool(v) for v in row) for row in self.leq)
        if n < 0 or len(leq) != n or any(len(row) != n for row in leq):
            raise ValueError("leq must be an n x n matrix")
        for i in range(n):
            if not leq[i][i]:
                raise ValueError(f"relation not reflexive at element {i + 1}")
        for i in range(n):
            for j in range(i + 1, n):
                if leq[i][j] and leq[j][i]:
                    raise ValueError(f"relation not antisymmetric on {i + 1}, {j + 1}")
        for i in range(n):
            for j in range(n):
                if leq[i][j]:
                    for k in range(n):
                        if leq[j][k] and not leq[i][k]:
                            raise ValueError("relation not transitive")
        object.__setattr__(self, "leq", leq)
        object.__setattr__(
            self, "below",
            tuple(sum(1 << i for i in range(n) if leq[i][j]) for j in range(n)),
        )
        object.__setattr__(
            self, "above",
            tuple(sum(1 << j for j in range(n) if leq[i][j]) for i in range(n)),
        )

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    @property
    def is_naturally_labeled(self) -> bool:
        return all(not self.leq[i][j] for i in range(self.n) for j in range(i))

    def strict_pairs(self) -> list[tuple[int, int]]:
        """All ``(i, j)`` with ``p_i < p_j``, 0-based."""
        return [
            (i, j) for i in range(self.n) for j in range(self.n)
            if i != j and self.leq[i][j]
        ]

    def relations_1based(self) -> list[list[int]]:
        return [[i + 1, j + 1] for i, j in self.strict_pairs()]

    def to_json(self) -> dict:
        return {"n": self.n, "relations": self.relations_1based()}

    def require_natural(self) -> None:
        if not self.is_naturally_labeled:
            raise NotNaturallyLabeledError(
                "poset is not naturally labeled; apply natural_relabel first"
            )


def _from_masks(n: int, below: Sequence[int]) -> Poset:
    return Poset(n, tuple(tuple(bool(below[j] >> i & 1) for j in range(n)) for i in range(n)))


def from_cover_relations(n: int, relations: Iterable[Sequence[int]]) -> Poset:
    """Poset generated by 1-based pairs ``(a, b)`` meaning ``p_a < p_b``.

    Any generating set works; the reflexive-transitive closure is taken.
    The result need not be naturally labeled.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    below = [1 << j for j in range(n)]
    for rel in relations:
        a, b = rel
        if not (1 <= a <= n and 1 <= b <= n):
            raise IndexError(f"relation ({a}, {b}) out of range 1..{n}")
        if a == b:
            raise CycleError(f"relation ({a}, {a}) is a loop")
        below[b - 1] |= 1 << (a - 1)
    # Warshall on bit-masks: below[j] gains below[k] whenever k <= j.
    for k in range(n):
        for j in range(n):
            if below[j] >> k & 1:
                below[j] |= below[k]
    for j in range(n):
        for i in bits(below[j]):
            if i != j and below[i] >> j & 1:
                raise CycleError(f"elements {i + 1} and {j + 1} lie on a cycle")
    return _from_masks(n, below)


def chain(n: int) -> Poset:
    if n < 1:
        raise ValueError("chain needs n >= 1")
    return _from_masks(n, [(1 << (j + 1)) - 1 for j in range(n)])


def antichain(n: int) -> Poset:
    if n < 1:
        raise ValueError("antichain needs n >= 1")
    return _from_masks(n, [1 << j for j in range(n)])


def empty_poset() -> Poset:
    """The zero-element poset; only used for the ``F = {}`` convention."""
    return Poset(0, ())


def relabel(p: Poset, perm: Sequence[int]) -> Poset:
    """Copy of ``p`` where old element ``i`` becomes element ``perm[i]``."""
    n = p.n
    if sorted(perm) != list(range(n)):
        raise ValueError("perm must be a permutation of range(n)")
    leq = [[False] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            leq[perm[i]][perm[j]] = p.leq[i][j]
    return Poset(n, tuple(map(tuple, leq)))


def natural_relabel(p: Poset) -> tuple[Poset, tuple[int, ...]]:
    """Relabel ``p`` along a stable topological order.

    Returns the naturally labeled poset and ``perm`` with ``perm[i]`` the new
    0-based position of old element ``i``.  Ties go to the smallest original
    index, so naturally labeled input comes back unchanged.
    """
    n = p.n
    indeg = [popcount(p.below[j]) - 1 for j in range(n)]
    heap = [j for j in range(n) if indeg[j] == 0]
    heapq.heapify(heap)
    perm = [0] * n
    pos = 0
    while heap:
        i = heapq.heappop(heap)
        perm[i] = pos
        pos += 1
        for j in bits(p.above[i]):
            if j != i:
                indeg[j] -= 1
                if indeg[j] == 0:
                    heapq.heappush(heap, j)
    return relabel(p, perm), tuple(perm)


def induced_subposet(p: Poset, mask: int) -> Poset:
    """Subposet on the elements of ``mask``, renumbered in increasing order.

    An empty mask gives the zero-element poset.
    """
    if mask & ~p.full_mask:
        raise IndexError("mask has bits outside the poset")
    idx = bits(mask)
    return Poset(len(idx), tuple(tuple(p.leq[a][b] for b in idx) for a in idx))


def linear_extensions(p: Poset) -> Iterator[tuple[int, ...]]:
    """Yield every linear extension as a tuple of 0-based elements."""
    n = p.n
    strict_below = [p.below[j] & ~(1 << j) for j in range(n)]
    word: list[int] = []

    def grow(placed: int) -> Iterator[tuple[int, ...]]:
        if len(word) == n:
            yield tuple(word)
            return
        for e in range(n):
            if not placed >> e & 1 and strict_below[e] & ~placed == 0:
                word.append(e)
                yield from grow(placed | 1 << e)
                word.pop()

    yield from grow(0)


def descents(word: Sequence[int]) -> int:
    """Number of positions ``i`` with ``word[i] > word[i+1]``."""
    return sum(1 for a, b in zip(word, word[1:]) if a > b)


@dataclass(frozen=True)
class DescentProfile:
    """``counts[i]`` = number of linear extensions with exactly ``i`` descents."""

    counts: tuple[int, ...]

    @property
    def total(self) -> int:
        return sum(self.counts)


def linear_extensions_by_descents(p: Poset, max_n: int = MAX_N) -> DescentProfile:
    """Descent distribution over the linear extensions of ``p``.

    Extensions are read as words of labels, so ``p`` must be naturally
    labeled for the result to mean anything downstream.  Backtracking is
    memoized on (placed ideal, last element), which keeps the cost at
    ``O(|J(P)| * n^2)`` instead of the number of extensions.
    """
    p.require_natural()
    check_size(p.n, max_n)
    n = p.n
    if n == 0:
        return DescentProfile((1,))
    strict_below = [p.below[j] & ~(1 << j) for j in range(n)]
    # layer maps placed-mask -> {last element: descent count vector}
    layer: dict[int, dict[int, list[int]]] = {}
    for e in range(n):
        if strict_below[e] == 0:
            vec = [0] * n
            vec[0] = 1
            layer[1 << e] = {e: vec}
    for _ in range(n - 1):
        nxt: dict[int, dict[int, list[int]]] = {}
        for placed, by_last in layer.items():
            for e in range(n):
                if placed >> e & 1 or strict_below[e] & ~placed:
                    continue
                target = nxt.setdefault(placed | 1 << e, {}).setdefault(e, [0] * n)
                for last, vec in by_last.items():
                    if last > e:
                        for d in range(n - 1):
                            target[d + 1] += vec[d]
                    else:
                        for d in range(n):
                            target[d] += vec[d]
        layer = nxt
    counts = [0] * n
    for by_last in layer.values():
        for vec in by_last.values():
            for d, c in enumerate(vec):
                counts[d] += c
    return DescentProfile(tuple(counts))


def _invariant_signature(p: Poset, i: int) -> tuple[int, int]:
    return popcount(p.below[i]), popcount(p.above[i])


def is_isomorphic(p: Poset, q: Poset, max_n: int = ISO_MAX_N) -> bool:
    """True iff some bijection ``f`` has ``a <= b`` exactly when ``f(a) <= f(b)``."""
    if p.n != q.n:
        return False
    n = p.n
    check_size(n, max_n)
    if sum(map(popcount, p.below)) != sum(map(popcount, q.below)):
        return False
    sig_p = [_invariant_signature(p, i) for i in range(n)]
    sig_q = [_invariant_signature(q, i) for i in range(n)]
    if sorted(sig_p) != sorted(sig_q):
        return False
    image = [-1] * n
    used = [False] * n

    def extend(i: int) -> bool:
        if i == n:
            return True
        for j in range(n):
            if used[j] or sig_q[j] != sig_p[i]:
                continue
            if all(
                p.leq[a][i] == q.leq[image[a]][j] and p.leq[i][a] == q.leq[j][image[a]]
                for a in range(i)
            ):
                image[i] = j
                used[j] = True
                if extend(i + 1):
                    return True
                used[j] = False
        image[i] = -1
        return False

    return extend(0)


def random_poset(n: int, seed: int | None = None, density: float = 0.5) -> Poset:
    """Naturally labeled random poset: each pair ``i < j`` related with prob. ``density``."""
    if not 0.0 <= density <= 1.0:
        raise ValueError("density must lie in [0, 1]")
    rng = random.Random(seed)
    rels = [(i + 1, j + 1) for i in range(n) for j in range(i + 1, n) if rng.random() < density]
    return from_cover_relations(n, rels)


def all_natural_posets(n: int) -> list[Poset]:
    """Every naturally labeled poset on ``n`` elements, deduplicated, in a fixed order."""
    pairs = [(i + 1, j + 1) for i in range(n) for j in range(i + 1, n)]
    seen: dict[Poset, None] = {}
    for chosen in itertools.product((False, True), repeat=len(pairs)):
        rels = [pr for pr, keep in zip(pairs, chosen) if keep]
        seen.setdefault(from_cover_relations(n, rels), None)
    return list(seen)
