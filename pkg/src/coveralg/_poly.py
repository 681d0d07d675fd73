"""Integer polynomials as coefficient lists, lowest degree first."""

from __future__ import annotations

from math import comb
from typing import Sequence

Poly = list[int]


def trim(a: Sequence[int]) -> Poly:
    out = list(a)
    while out and out[-1] == 0:
        out.pop()
    return out


def add(a: Sequence[int], b: Sequence[int]) -> Poly:
    out = [0] * max(len(a), len(b))
    for i, c in enumerate(a):
        out[i] += c
    for i, c in enumerate(b):
        out[i] += c
    return trim(out)


def mul(a: Sequence[int], b: Sequence[int]) -> Poly:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return trim(out)


def shift(a: Sequence[int], k: int) -> Poly:
    """``a * z^k``."""
    return trim([0] * k + list(a)) if a else []


def one_minus_z_pow(k: int) -> Poly:
    return [(-1) ** t * comb(k, t) for t in range(k + 1)]


def value_at_one(a: Sequence[int]) -> int:
    return sum(a)


def divide_one_minus_z(a: Sequence[int]) -> Poly:
    """Exact quotient ``a / (1 - z)``; requires ``a(1) == 0``."""
    if sum(a) != 0:
        raise ValueError("polynomial is not divisible by 1 - z")
    # a = (1 - z) q  =>  q_i = a_0 + ... + a_i
    q = []
    acc = 0
    for c in a[:-1]:
        acc += c
        q.append(acc)
    return trim(q)
