"""h-vectors and Hilbert series of vertex cover algebras of poset graphs.

Two algebras are involved for a naturally labeled poset ``P`` on ``n``
elements:

* the basic cover algebra, i.e. the Hibi ring of ``J(P)``.  It has Krull
  dimension ``n + 1`` and its h-vector counts linear extensions of ``P`` by
  number of descents;
* the vertex cover algebra ``A(G)`` of ``G = G(P)``, of dimension
  ``2n + 1``.  Its h-polynomial is the sum over all subsets ``F`` of
  ``h_F(z) * z^(n - |F|)``, where ``h_F`` is the basic h-polynomial of the
  subposet induced on ``F``.

The basic series of an ``m``-element subposet is written over
``(1 - z)^(m + 1)``; with that exponent the subset-sum formula for the
series and the one for the h-polynomial agree term by term.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from math import comb, factorial
from typing import Sequence

from . import _poly
from .poset import MAX_N, Poset, check_size, induced_subposet, linear_extensions_by_descents


@dataclass(frozen=True)
class HVector:
    coeffs: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, i):
        return self.coeffs[i]

    def __iter__(self):
        return iter(self.coeffs)

    def as_list(self) -> list[int]:
        return list(self.coeffs)


@dataclass(frozen=True)
class HilbertSeries:
    """``numerator(z) / (1 - z)^denom_exp`` with no common ``(1 - z)`` factor.

    The constructor normalizes: trailing zero coefficients are dropped and
    ``(1 - z)`` is cancelled while the numerator vanishes at 1.
    """

    numerator: tuple[int, ...]
    denom_exp: int

    def __post_init__(self) -> None:
        num = _poly.trim(self.numerator)
        d = self.denom_exp
        if d < 0:
            num = _poly.mul(num, _poly.one_minus_z_pow(-d))
            d = 0
        while num and d > 0 and _poly.value_at_one(num) == 0:
            num = _poly.divide_one_minus_z(num)
            d -= 1
        if not num:
            d = 0
        object.__setattr__(self, "numerator", tuple(num))
        object.__setattr__(self, "denom_exp", d)

    def __add__(self, other: HilbertSeries) -> HilbertSeries:
        d = max(self.denom_exp, other.denom_exp)
        a = _poly.mul(self.numerator, _poly.one_minus_z_pow(d - self.denom_exp))
        b = _poly.mul(other.numerator, _poly.one_minus_z_pow(d - other.denom_exp))
        return HilbertSeries(tuple(_poly.add(a, b)), d)

    def __mul__(self, other: HilbertSeries) -> HilbertSeries:
        return HilbertSeries(
            tuple(_poly.mul(self.numerator, other.numerator)),
            self.denom_exp + other.denom_exp,
        )

    @property
    def degree(self) -> int:
        """Numerator degree; -1 for the zero series."""
        return len(self.numerator) - 1

    def coefficient(self, k: int) -> int:
        return hilbert_function(self, k)

    def pretty(self) -> str:
        terms = []
        for i, c in enumerate(self.numerator):
            if c == 0:
                continue
            mono = "" if i == 0 else ("z" if i == 1 else f"z^{i}")
            if mono and c == 1:
                terms.append(mono)
            elif mono:
                terms.append(f"{c}*{mono}")
            else:
                terms.append(str(c))
        num = " + ".join(terms) if terms else "0"
        return f"({num}) / (1 - z)^{self.denom_exp}"


def _as_tuple(h: HVector | Sequence[int]) -> tuple[int, ...]:
    return h.coeffs if isinstance(h, HVector) else tuple(h)


@lru_cache(maxsize=4096)
def _basic_poly(p: Poset) -> tuple[int, ...]:
    return linear_extensions_by_descents(p).counts


def basic_h_vector(p: Poset) -> HVector:
    """h-vector of the basic cover algebra, padded to length ``n + 2``.

    Entry ``i`` is the number of linear extensions with ``i`` descents; the
    last two entries are always zero.  The empty poset gives ``(1,)``.
    """
    check_size(p.n, MAX_N)
    counts = _basic_poly(p)
    if p.n == 0:
        return HVector((1,))
    return HVector(tuple(counts) + (0,) * (p.n + 2 - len(counts)))


def basic_hilbert_series(p: Poset) -> HilbertSeries:
    return HilbertSeries(basic_h_vector(p).coeffs, p.n + 1)


def _subset_sum(p: Poset, masks: Sequence[int]) -> list[int]:
    n = p.n
    acc = [0] * (n + 1)
    for F in masks:
        sub = induced_subposet(p, F)
        off = n - sub.n
        for j, c in enumerate(_basic_poly(sub)):
            if c:
                acc[off + j] += c
    return acc


def cover_algebra_h_vector(p: Poset, threads: int = 1) -> HVector:
    """h-vector ``(h_0, ..., h_n)`` of ``A(G(P))`` by summing over all subsets.

    With ``threads > 1`` the subset range is split across worker processes;
    integer addition is exact, so the result does not depend on the split.
    """
    p.require_natural()
    check_size(p.n, MAX_N)
    masks = range(1 << p.n)
    if threads <= 1 or p.n < 8:
        return HVector(tuple(_subset_sum(p, masks)))
    step = -(-len(masks) // threads)
    chunks = [masks[i:i + step] for i in range(0, len(masks), step)]
    acc = [0] * (p.n + 1)
    with ProcessPoolExecutor(max_workers=threads) as pool:
        for part in pool.map(_subset_sum, [p] * len(chunks), chunks):
            acc = [a + b for a, b in zip(acc, part)]
    return HVector(tuple(acc))


def cover_algebra_hilbert_series(p: Poset, threads: int = 1) -> HilbertSeries:
    return HilbertSeries(cover_algebra_h_vector(p, threads).coeffs, 2 * p.n + 1)


def cover_algebra_hilbert_series_rational(p: Poset) -> HilbertSeries:
    """Same series, assembled as a sum of rational functions over all subsets.

    ``H = (1-z)^-n * sum_F H_F(z) * (z / (1-z))^(n - |F|)``, with every
    product and sum carried out in :class:`HilbertSeries` arithmetic.
    """
    p.require_natural()
    check_size(p.n, MAX_N)
    n = p.n
    z_ratio = HilbertSeries((0, 1), 1)
    total = HilbertSeries((), 0)
    for F in range(1 << n):
        sub = induced_subposet(p, F)
        term = basic_hilbert_series(sub)
        for _ in range(n - sub.n):
            term = term * z_ratio
        total = total + term
    return total * HilbertSeries((1,), n)


def corollary_hvect_count(p: Poset, j: int) -> int:
    """``h_j`` as a count of linear extensions of induced subposets.

    Sums, over ``l = 0..j``, the extensions of all ``(n - l)``-element
    subposets having exactly ``j - l`` descents.
    """
    p.require_natural()
    n = p.n
    if j < 0 or j > n:
        raise IndexError(f"j must lie in 0..{n}")
    total = 0
    for F in range(1 << n):
        size = bin(F).count("1")
        l = n - size
        if l > j:
            continue
        counts = linear_extensions_by_descents(induced_subposet(p, F)).counts
        if j - l < len(counts):
            total += counts[j - l]
    return total


def multiplicity(h: HVector | Sequence[int]) -> int:
    return sum(_as_tuple(h))


def a_invariant(s: HilbertSeries) -> int:
    return s.degree - s.denom_exp


def hilbert_function(s: HilbertSeries, k: int) -> int:
    """Coefficient of ``z^k`` in the series expansion."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    d = s.denom_exp
    if d == 0:
        return s.numerator[k] if k < len(s.numerator) else 0
    return sum(c * comb(k - i + d - 1, d - 1) for i, c in enumerate(s.numerator) if i <= k)


@lru_cache(maxsize=None)
def eulerian(n: int, i: int) -> int:
    """Permutations of ``[n]`` with exactly ``i`` descents; ``A(0,0) = 1``, ``A(q,q) = 0`` for ``q >= 1``."""
    if n < 0 or i < 0 or i > n:
        raise IndexError(f"eulerian({n}, {i}) out of range")
    if n == 0:
        return 1
    if i == n:
        return 0
    total = (i + 1) * eulerian(n - 1, i) if i <= n - 1 else 0
    if i >= 1:
        total += (n - i) * eulerian(n - 1, i - 1)
    return total


def chain_series(n: int) -> HilbertSeries:
    if n < 1:
        raise ValueError("n must be >= 1")
    return HilbertSeries(tuple(comb(n, j) for j in range(n + 1)), 2 * n + 1)


def antichain_h_vector(n: int) -> list[int]:
    return [sum(comb(n, l) * eulerian(n - l, j - l) for l in range(j + 1)) for j in range(n + 1)]


def antichain_series(n: int) -> HilbertSeries:
    if n < 1:
        raise ValueError("n must be >= 1")
    return HilbertSeries(tuple(antichain_h_vector(n)), 2 * n + 1)


def antichain_multiplicity(n: int) -> int:
    """``n! * sum_{l<=n} 1/l!``, in integers."""
    return sum(factorial(n) // factorial(l) for l in range(n + 1))


@dataclass(frozen=True)
class ShapeReport:
    symmetric: bool
    unimodal: bool
    lower_bound_ok: bool
    upper_bound_ok: bool
    h1_identity: bool

    @property
    def all_ok(self) -> bool:
        return all(self.as_dict().values())

    def as_dict(self) -> dict[str, bool]:
        return {
            "symmetric": self.symmetric,
            "unimodal": self.unimodal,
            "lower_bound_ok": self.lower_bound_ok,
            "upper_bound_ok": self.upper_bound_ok,
            "h1_identity": self.h1_identity,
        }


def _is_unimodal(h: Sequence[int]) -> bool:
    k = 0
    while k + 1 < len(h) and h[k] <= h[k + 1]:
        k += 1
    while k + 1 < len(h) and h[k] >= h[k + 1]:
        k += 1
    return k >= len(h) - 1


def check_shape(h: HVector | Sequence[int], n: int, n_ideals: int) -> ShapeReport:
    """Symmetry, unimodality, binomial/antichain bounds and ``h_1 = |J(P)| - 1``."""
    hv = _as_tuple(h)
    upper = antichain_h_vector(n)
    sized = len(hv) == n + 1
    return ShapeReport(
        symmetric=sized and all(hv[i] == hv[n - i] for i in range(n + 1)),
        unimodal=_is_unimodal(hv),
        lower_bound_ok=sized and all(comb(n, j) <= hv[j] for j in range(n + 1)),
        upper_bound_ok=sized and all(hv[j] <= upper[j] for j in range(n + 1)),
        h1_identity=len(hv) > 1 and hv[1] == n_ideals - 1,
    )
