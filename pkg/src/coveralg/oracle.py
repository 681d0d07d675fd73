"""Brute-force cross-checks that share no code path with the subset-sum formula.

The Hilbert function of ``A(G)`` in degree ``k`` is
``sum_{j<=k} dim (I_G^j)_{jn + k - j}``.  Two ways of deciding membership in
``I_G^j`` are implemented: the ``j``-cover inequality on exponent vectors,
and divisibility by a product of ``j`` minimal generators.  For bipartite
graphs both describe the same ideal, so they must agree.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from math import comb
from typing import Iterator, Sequence

from .covers import generator_monomial, graph_from_poset, is_k_cover
from .errors import InconsistentInputError, SizeLimitError
from .hilbert import (
    antichain_series,
    basic_hilbert_series,
    chain_series,
    cover_algebra_hilbert_series,
    hilbert_function,
    HVector,
)
from .lattice import (
    delta,
    delta_bruteforce,
    enumerate_ideals,
    in_saturated_set,
    phi,
    psi,
)
from .poset import Poset, bits, induced_subposet

GRADED_MAX_N, GRADED_MAX_K = 4, 5
POWER_MAX_N, POWER_MAX_K = 3, 4
LEMMA_MAX_N = 6


@dataclass
class OracleReport:
    k_max: int
    values: list[tuple[int, int]] = field(default_factory=list)

    @property
    def agree(self) -> bool:
        return all(a == b for a, b in self.values)

    def as_dict(self) -> dict:
        return {"k_max": self.k_max, "values": [list(v) for v in self.values], "agree": self.agree}


def _compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    """Exponent vectors with ``parts`` entries summing to ``total``, lex order."""
    if parts == 0:
        if total == 0:
            yield ()
        return
    for first in range(total, -1, -1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def _count_j_covers(p: Poset, j: int, degree: int) -> int:
    """Exponent vectors of the given degree whose edge sums all reach ``j``."""
    n = p.n
    g = graph_from_poset(p)
    preds = [[i for i, jj in g.edges if jj == t] for t in range(n)]
    count = 0
    for xs in itertools.chain.from_iterable(
        _compositions(dx, n) for dx in range(degree + 1)
    ):
        rem = degree - sum(xs)
        # y_t must make up the weakest edge into it
        lower = [max(0, j - min(xs[i] for i in preds[t])) for t in range(n)]
        if sum(lower) > rem:
            continue
        for ys in _compositions(rem, n):
            if is_k_cover(g, xs + ys, j):
                count += 1
    return count


def hilbert_function_bruteforce(p: Poset, k: int) -> int:
    """Hilbert function of ``A(G)`` by counting ``j``-covers degree by degree."""
    n = p.n
    if n > GRADED_MAX_N or k > GRADED_MAX_K:
        raise SizeLimitError(f"graded oracle limited to n <= {GRADED_MAX_N}, k <= {GRADED_MAX_K}")
    total = comb(k + 2 * n - 1, 2 * n - 1)
    for j in range(1, k + 1):
        total += _count_j_covers(p, j, j * n + k - j)
    return total


def hilbert_function_power_oracle(p: Poset, k: int) -> int:
    """Hilbert function of ``A(G)`` via products of ``j`` generators ``m_alpha``."""
    n = p.n
    if n > POWER_MAX_N or k > POWER_MAX_K:
        raise SizeLimitError(f"power oracle limited to n <= {POWER_MAX_N}, k <= {POWER_MAX_K}")
    gens = [generator_monomial(p, a) for a in enumerate_ideals(p)]
    total = comb(k + 2 * n - 1, 2 * n - 1)
    for j in range(1, k + 1):
        products = {
            tuple(map(sum, zip(*combo)))
            for combo in itertools.combinations_with_replacement(gens, j)
        }
        members = set()
        for q in products:
            for r in _compositions(k - j, 2 * n):
                members.add(tuple(a + b for a, b in zip(q, r)))
        total += len(members)
    return total


def h_vector_from_function(values: Sequence[int], n: int) -> HVector:
    """Invert ``H(z) = h(z) / (1-z)^(2n+1)`` on the values ``H(0..K)``."""
    K = len(values) - 1
    if K < n:
        raise ValueError(f"need Hilbert function values up to degree {n}")
    d = 2 * n + 1
    h = [
        sum((-1) ** i * comb(d, i) * values[j - i] for i in range(min(j, d) + 1))
        for j in range(K + 1)
    ]
    if any(h[n + 1:]):
        raise InconsistentInputError(f"nonzero h-entries beyond degree {n}: {h[n + 1:]}")
    return HVector(tuple(h[: n + 1]))


def basic_hilbert_bruteforce(p: Poset, k: int) -> int:
    """Number of multichains ``a_1 <= ... <= a_k`` in ``J(P)``."""
    if k == 0:
        return 1
    ids = enumerate_ideals(p).ideals
    ending = [1] * len(ids)
    for _ in range(k - 1):
        ending = [
            sum(ending[i] for i in range(t + 1) if ids[i] & b == ids[i])
            for t, b in enumerate(ids)
        ]
    return sum(ending)


@dataclass
class LemmaReport:
    ok: bool
    counterexample: dict | None = None

    def __bool__(self) -> bool:
        return self.ok


def verify_lemma_delta(p: Poset) -> LemmaReport:
    """Exhaustive check that ``alpha -> alpha | delta(alpha)`` is an order isomorphism onto S.

    Runs over every proper nonempty ``F``; also compares the closed-form
    ``delta`` with the brute-force union of admissible subsets.
    """
    n = p.n
    if n > LEMMA_MAX_N:
        raise SizeLimitError(f"lemma verifier limited to n <= {LEMMA_MAX_N}")
    lattice = enumerate_ideals(p).ideals
    full = p.full_mask
    for F in range(1, full):
        comp = full & ~F
        sub = induced_subposet(p, comp)
        positions = bits(comp)
        domain = [
            sum(1 << positions[i] for i in bits(a)) for a in enumerate_ideals(sub).ideals
        ]
        S = [b for b in lattice if in_saturated_set(p, F, b)]
        image = {}
        for a in domain:
            fast, slow = delta(p, F, a), delta_bruteforce(p, F, a)
            if fast != slow:
                return LemmaReport(False, {"F": F, "alpha": a, "delta": fast, "bruteforce": slow})
            image[a] = phi(p, F, a)
            if psi(p, F, image[a]) != a:
                return LemmaReport(False, {"F": F, "alpha": a, "reason": "psi(phi(a)) != a"})
        if sorted(image.values()) != sorted(S) or len(set(image.values())) != len(domain):
            return LemmaReport(False, {"F": F, "reason": "phi is not a bijection onto S"})
        for b in S:
            if phi(p, F, psi(p, F, b)) != b:
                return LemmaReport(False, {"F": F, "beta": b, "reason": "phi(psi(b)) != b"})
        for a1 in domain:
            for a2 in domain:
                src = a1 & a2 == a1 and a1 != a2
                b1, b2 = image[a1], image[a2]
                dst = b1 & b2 == b1 and b1 != b2
                if src != dst:
                    return LemmaReport(
                        False, {"F": F, "alpha1": a1, "alpha2": a2, "reason": "order not preserved"}
                    )
    return LemmaReport(True)


def verify_monotonicity(p: Poset, k_max: int) -> bool:
    """Chain series <= poset series <= antichain series, coefficientwise up to ``k_max``."""
    n = p.n
    lo, mid, hi = chain_series(n), cover_algebra_hilbert_series(p), antichain_series(n)
    return all(
        hilbert_function(lo, k) <= hilbert_function(mid, k) <= hilbert_function(hi, k)
        for k in range(k_max + 1)
    )


def compare_graded(p: Poset, k_max: int) -> OracleReport:
    series = cover_algebra_hilbert_series(p)
    rep = OracleReport(k_max)
    for k in range(k_max + 1):
        rep.values.append((hilbert_function(series, k), hilbert_function_bruteforce(p, k)))
    return rep


def compare_power(p: Poset, k_max: int) -> OracleReport:
    series = cover_algebra_hilbert_series(p)
    rep = OracleReport(k_max)
    for k in range(k_max + 1):
        rep.values.append((hilbert_function(series, k), hilbert_function_power_oracle(p, k)))
    return rep


def compare_basic(p: Poset, k_max: int) -> OracleReport:
    series = basic_hilbert_series(p)
    rep = OracleReport(k_max)
    for k in range(k_max + 1):
        rep.values.append((hilbert_function(series, k), basic_hilbert_bruteforce(p, k)))
    return rep
