"""Reduced Groebner bases of the toric ideals of A(G) and of the Hibi ring.

Both bases are written down from their known closed forms rather than
computed.  Variables are ``("x", i)``, ``("y", j)`` and ``("u", mask)``; a
monomial is a tuple of ``(variable, exponent)`` factors kept in the order
they were built, which is also the order they are printed in.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import IO, Iterable

from .covers import generator_monomial
from .lattice import IdealLattice, enumerate_ideals
from .poset import Poset, bits

Var = tuple[str, int]
Monomial = tuple[tuple[Var, int], ...]


@dataclass(frozen=True)
class Binomial:
    lead: Monomial
    trail: Monomial

    def variables(self, side: str = "lead") -> set[Var]:
        mono = self.lead if side == "lead" else self.trail
        return {v for v, e in mono if e}


def var_name(v: Var) -> str:
    kind, idx = v
    if kind == "u":
        return "u_" + (".".join(str(i + 1) for i in bits(idx)) or "0")
    return f"{kind}{idx + 1}"


def format_monomial(m: Monomial) -> str:
    return "*".join(var_name(v) if e == 1 else f"{var_name(v)}^{e}" for v, e in m)


def format_binomial(b: Binomial) -> str:
    return f"{format_monomial(b.lead)} - {format_monomial(b.trail)}"


def _hibi_relations(L: IdealLattice) -> list[Binomial]:
    return [
        Binomial(((("u", a), 1), (("u", b), 1)), ((("u", a | b), 1), (("u", a & b), 1)))
        for a, b in L.incomparable_pairs()
    ]


def groebner_G0(p: Poset) -> list[Binomial]:
    """``u_a u_b - u_(a|b) u_(a&b)`` for each incomparable pair of ideals."""
    return _hibi_relations(enumerate_ideals(p))


def groebner_G(p: Poset) -> list[Binomial]:
    """Basis of the toric ideal of ``A(G)``: the ``x``/``y`` exchange moves, then the Hibi relations."""
    L = enumerate_ideals(p)
    moves = []
    for j in range(p.n):
        for a in L.ideals:
            if not a >> j & 1 and a | 1 << j in L:
                moves.append(
                    Binomial(((("x", j), 1), (("u", a), 1)), ((("y", j), 1), (("u", a | 1 << j), 1)))
                )
    return moves + _hibi_relations(L)


def is_complete_intersection_initial(binomials: Iterable[Binomial]) -> bool:
    """True iff the lead monomials are pairwise coprime."""
    leads = [b.variables("lead") for b in binomials]
    return all(not (s & t) for s, t in itertools.combinations(leads, 2))


def substitute(p: Poset, m: Monomial) -> tuple[int, ...]:
    """Exponents in ``(x_1..x_n, y_1..y_n, t)`` after ``u_a -> m_a * t``."""
    n = p.n
    out = [0] * (2 * n + 1)
    for (kind, idx), e in m:
        if kind == "x":
            out[idx] += e
        elif kind == "y":
            out[n + idx] += e
        else:
            for pos, c in enumerate(generator_monomial(p, idx)):
                out[pos] += c * e
            out[2 * n] += e
    return tuple(out)


def vanishes_under_substitution(p: Poset, b: Binomial) -> bool:
    return substitute(p, b.lead) == substitute(p, b.trail)


def is_homogeneous(b: Binomial) -> bool:
    return sum(e for _, e in b.lead) == sum(e for _, e in b.trail)


def standard_monomial_count(L: IdealLattice, leads: Iterable[Binomial], k: int) -> int:
    """Degree-``k`` monomials in the ``u`` variables divisible by no lead monomial."""
    forbidden = [
        {v[1]: e for v, e in b.lead} for b in leads
    ]
    count = 0
    for combo in itertools.combinations_with_replacement(L.ideals, k):
        expo: dict[int, int] = {}
        for a in combo:
            expo[a] = expo.get(a, 0) + 1
        if not any(all(expo.get(v, 0) >= e for v, e in f.items()) for f in forbidden):
            count += 1
    return count


def export(p: Poset, binomials: list[Binomial], label: str, sink: IO[str] | None = None) -> str:
    """Plain-text dump: one header line, then one ``LEAD - TRAIL`` line per binomial."""
    L = enumerate_ideals(p)
    lines = [f"# {label} n={p.n} ideals={len(L)} binomials={len(binomials)}"]
    lines.extend(format_binomial(b) for b in binomials)
    text = "\n".join(lines) + "\n"
    if sink is not None:
        sink.write(text)
    return text
