"""Foundational arithmetic for the partition function.

Everything here is exact integer arithmetic (Python ints are arbitrary
precision, which matters: p(n) outgrows 64-bit words around n = 120).
The module provides the closed form for partitions with exactly two
parts greater than 1, the summation parameters r and s, generalized
pentagonal numbers, and the pentagonal-number recurrence for p(n) that
serves as the reference oracle everywhere else.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

S_MODES = ("floor", "ceil", "nearest")


@dataclass(frozen=True)
class FormulaParams:
    """Summation bounds for the closed formula at a given n.

    r is the top index of the outer sum: (n-2)/2 for even n, (n-3)/2
    for odd n, 0 at n = 1.  s bounds the inner coefficient ranges.
    """

    n: int
    r: int
    s: int


class PentagonalIndex(NamedTuple):
    k: int
    g: int

    @property
    def sign(self) -> int:
        """Sign of this term in the pentagonal recurrence, (-1)**(k+1)."""
        return 1 if self.k % 2 else -1


def a1(m: int) -> int:
    """Count of partitions of m with exactly two parts greater than 1.

    Closed form: r**2 for even m with r = (m-2)/2, r*(r+1) for odd m
    with r = (m-3)/2.  Forced to 0 for m <= 1 (the literal formula
    would give 1 at m = 0); any integer is accepted so that summations
    may run off the low end harmlessly.
    """
    if m <= 1:
        return 0
    if m % 2 == 0:
        r = (m - 2) // 2
        return r * r
    r = (m - 3) // 2
    return r * (r + 1)


def s_param(n: int, s_mode: str = "floor") -> int:
    """Inner-bound parameter s for the closed formula.

    The adopted reading is floor(n/3); "ceil" and "nearest" are the
    alternative roundings of n/3, exposed so sweeps can compare them.
    """
    if s_mode == "floor":
        return n // 3
    if s_mode == "ceil":
        return -(-n // 3)
    if s_mode == "nearest":
        return (n + 1) // 3
    raise ValueError(f"unknown s_mode {s_mode!r}, expected one of {S_MODES}")


def params_for(n: int, s_mode: str = "floor") -> FormulaParams:
    """Summation parameters (n, r, s) for the closed formula; n >= 1."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if n == 1:
        r = 0
    elif n % 2 == 0:
        r = (n - 2) // 2
    else:
        r = (n - 3) // 2
    return FormulaParams(n=n, r=r, s=s_param(n, s_mode))


def pentagonal_numbers_upto(limit: int) -> list[PentagonalIndex]:
    """Generalized pentagonal numbers g_k = k(3k-1)/2 <= limit.

    Enumerates k = 1, -1, 2, -2, ... which yields g strictly
    increasing: 1, 2, 5, 7, 12, 15, ...
    """
    out: list[PentagonalIndex] = []
    k = 1
    while True:
        g_pos = k * (3 * k - 1) // 2
        if g_pos > limit:
            break
        out.append(PentagonalIndex(k, g_pos))
        g_neg = k * (3 * k + 1) // 2
        if g_neg > limit:
            break
        out.append(PentagonalIndex(-k, g_neg))
        k += 1
    return out


def fresh_cache() -> list[int]:
    """New recurrence table holding just p(0) = 1."""
    return [1]


_shared_cache = fresh_cache()


def p_euler(n: int, cache: list[int] | None = None) -> int:
    """p(n) by the pentagonal-number recurrence.

    p(n) = sum over k != 0 of (-1)**(k+1) * p(n - k(3k-1)/2), with
    p(0) = 1 and p(negative) = 0.  The cache is a table of p(0..m)
    that is extended in place through n; computing p(0..n) costs
    O(n**1.5) index operations on top of the bignum additions.
    Without an explicit cache a process-wide shared table is used.
    """
    if n < 0:
        return 0
    if cache is None:
        cache = _shared_cache
    if not cache or cache[0] != 1:
        raise ValueError("cache must hold p(0) = 1 at index 0")
    for m in range(len(cache), n + 1):
        total = 0
        k = 1
        while True:
            g = k * (3 * k - 1) // 2
            if g > m:
                break
            sign = 1 if k % 2 else -1
            total += sign * cache[m - g]
            g = k * (3 * k + 1) // 2
            if g <= m:
                total += sign * cache[m - g]
            k += 1
        cache.append(total)
    return cache[n]
