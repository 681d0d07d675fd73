"""The distributive lattice J(P) of order ideals, and maps between its pieces.

Ideals are int bit-masks over the ambient poset.  A lattice lists its ideals
sorted by ``(cardinality, mask)``, which is a linear extension of inclusion.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb

from .errors import DomainError, NotAnIdealError, SizeLimitError
from .poset import Poset, bits, popcount

MAX_IDEALS = 1 << 20
MAX_CHAIN_DP = 1 << 13


def _canonical(mask: int) -> tuple[int, int]:
    return popcount(mask), mask


@dataclass(frozen=True)
class IdealLattice:
    n: int
    ideals: tuple[int, ...]
    index: dict[int, int] = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "index", {m: k for k, m in enumerate(self.ideals)})

    def __len__(self) -> int:
        return len(self.ideals)

    def __contains__(self, mask: int) -> bool:
        return mask in self.index

    def __iter__(self):
        return iter(self.ideals)

    def incomparable_pairs(self) -> list[tuple[int, int]]:
        """Pairs ``(a, b)`` of incomparable ideals, ``a`` first in canonical order."""
        out = []
        ids = self.ideals
        for k, a in enumerate(ids):
            for b in ids[k + 1:]:
                if a & b != a and a & b != b:
                    out.append((a, b))
        return out


def is_ideal(p: Poset, mask: int) -> bool:
    """True iff ``mask`` is downward closed in ``p``."""
    return all(p.below[j] & ~mask == 0 for j in bits(mask))


def enumerate_ideals(p: Poset, max_ideals: int = MAX_IDEALS) -> IdealLattice:
    """All order ideals of a naturally labeled poset.

    Built one element at a time: the ideals of ``{p_1..p_k}`` are those of
    ``{p_1..p_(k-1)}`` plus, for each of them containing every element below
    ``p_k``, that ideal with ``p_k`` added.
    """
    p.require_natural()
    ideals = [0]
    for k in range(p.n):
        need = p.below[k] & ~(1 << k)
        grown = [a | 1 << k for a in ideals if need & ~a == 0]
        ideals.extend(grown)
        if len(ideals) > max_ideals:
            raise SizeLimitError(f"more than {max_ideals} ideals")
    ideals.sort(key=_canonical)
    return IdealLattice(p.n, tuple(ideals))


def _check_complement_ideal(p: Poset, F: int, alpha: int) -> None:
    comp = p.full_mask & ~F
    if alpha & ~comp:
        raise NotAnIdealError("alpha must be a subset of the complement of F")
    for j in bits(alpha):
        if p.below[j] & comp & ~alpha:
            raise NotAnIdealError(f"alpha is not an ideal of the subposet off F (element {j + 1})")


def delta(p: Poset, F: int, alpha: int) -> int:
    """Largest ``gamma`` inside ``F`` with ``alpha | gamma`` an ideal of ``p``.

    ``alpha`` is an ideal of the subposet induced on the complement of ``F``,
    given in ambient coordinates.  Closed form: ``j`` in ``F`` belongs iff
    every element below it lies in ``F`` or in ``alpha``.
    """
    _check_complement_ideal(p, F, alpha)
    allowed = F | alpha
    return sum(1 << j for j in bits(F) if p.below[j] & ~allowed == 0)


def delta_bruteforce(p: Poset, F: int, alpha: int) -> int:
    """Union of all ``gamma`` inside ``F`` with ``alpha | gamma`` an ideal."""
    _check_complement_ideal(p, F, alpha)
    acc = 0
    sub = F
    while True:
        if is_ideal(p, alpha | sub):
            acc |= sub
        if sub == 0:
            break
        sub = (sub - 1) & F
    return acc


def in_saturated_set(p: Poset, F: int, beta: int) -> bool:
    """Membership in the set S: ``beta`` is an ideal and cannot grow by any single element of ``F``."""
    if not is_ideal(p, beta):
        return False
    return all(not is_ideal(p, beta | 1 << j) for j in bits(F & ~beta))


def phi(p: Poset, F: int, alpha: int) -> int:
    try:
        return alpha | delta(p, F, alpha)
    except NotAnIdealError as exc:
        raise DomainError(str(exc)) from exc


def psi(p: Poset, F: int, beta: int) -> int:
    if not in_saturated_set(p, F, beta):
        raise DomainError("beta is not in the saturated set for F")
    return beta & ~F


def order_complex_f_vector(L: IdealLattice, max_ideals: int = MAX_CHAIN_DP) -> list[int]:
    """``(f_-1, f_0, ..., f_n)``: chains of ideals counted by number of elements."""
    if len(L) > max_ideals:
        raise SizeLimitError(f"chain DP capped at {max_ideals} ideals")
    ids = L.ideals
    top = L.n + 1
    # ending[k][s] = chains of s elements whose largest ideal is ids[k]
    ending: list[list[int]] = []
    for k, b in enumerate(ids):
        row = [0] * (top + 1)
        row[1] = 1
        for i in range(k):
            a = ids[i]
            if a & b == a and a != b:
                prev = ending[i]
                for s in range(1, top):
                    row[s + 1] += prev[s]
        ending.append(row)
    f = [0] * (top + 1)
    f[0] = 1
    for row in ending:
        for s in range(1, top + 1):
            f[s] += row[s]
    return f


def f_to_h(f: list[int], d: int) -> list[int]:
    """h-vector from ``sum_i f_(i-1) z^i (1-z)^(d-i) = sum_j h_j z^j``."""
    if len(f) > d + 1:
        raise ValueError("f-vector longer than d + 1")
    h = [0] * (d + 1)
    for i, fi in enumerate(f):
        for t in range(d - i + 1):
            h[i + t] += fi * comb(d - i, t) * (-1) ** t
    return h
