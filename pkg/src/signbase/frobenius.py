"""Coin-problem machinery: representability, Frobenius numbers, and the
two-cycle walk-length decompositions the extremal arguments rely on."""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .errors import CapacityError

#: Largest DP table the scanner will allocate; generators here are tiny.
DP_LIMIT = 5_000_000


@dataclass(frozen=True)
class FrobeniusBasis:
    """Positive generators with overall gcd 1."""

    generators: tuple[int, ...]

    def __init__(self, generators):
        gens = tuple(sorted(int(g) for g in generators))
        if not gens:
            raise ValueError("at least one generator is required")
        if any(g < 1 for g in gens):
            raise ValueError("generators must be positive integers")
        g = 0
        for value in gens:
            g = gcd(g, value)
        if g != 1:
            raise ValueError(f"generators must have gcd 1, got gcd {g}")
        object.__setattr__(self, "generators", gens)


def _representable_upto(basis: FrobeniusBasis, limit: int) -> list[bool]:
    """DP table: table[m] is True iff m is a nonnegative combination."""
    table = [False] * (limit + 1)
    table[0] = True
    gens = basis.generators
    for m in range(1, limit + 1):
        for g in gens:
            if g <= m and table[m - g]:
                table[m] = True
                break
    return table


def in_frobenius_set(m: int, basis: FrobeniusBasis) -> bool:
    """True iff ``m`` is a nonnegative integer combination of the basis."""
    if m < 0:
        raise ValueError("m must be nonnegative")
    if m > DP_LIMIT:
        raise CapacityError(f"m exceeds the DP limit {DP_LIMIT}")
    return _representable_upto(basis, m)[m]


def frobenius_number(basis: FrobeniusBasis) -> int:
    """Least value from which every integer is representable.

    For two coprime generators a < b this equals (a-1)(b-1).  The general
    case scans a DP table up to min*max, which always dominates the answer:
    each residue class modulo the smallest generator is reached within
    (min-1) summands, every summand at most max.
    """
    gens = basis.generators
    if gens[0] == 1:
        return 0
    bound = gens[0] * gens[-1]
    if bound > DP_LIMIT:
        raise CapacityError(f"DP bound {bound} exceeds the limit {DP_LIMIT}")
    table = _representable_upto(basis, bound)
    for m in range(bound, -1, -1):
        if not table[m]:
            return m + 1
    return 0


def two_cycle_walk_decompose(total: int, m: int, n: int) -> list[tuple[int, int]]:
    """All nonnegative (a, b) with ``total == a*n + b*(n-1) + m``.

    These are the candidate decompositions of a walk of length ``total``
    into a fixed path of length ``m`` plus copies of two cycles of lengths
    n and n-1; the extremal sign-uniqueness arguments inspect the full
    solution list.  Returns an empty list when no solution exists.
    """
    if n < 2:
        raise ValueError("cycle order n must be at least 2")
    if total < 0 or m < 0:
        raise ValueError("total and m must be nonnegative")
    remainder = total - m
    if remainder < 0:
        return []
    solutions = []
    for a in range(remainder // n + 1):
        b, rest = divmod(remainder - a * n, n - 1)
        if rest == 0:
            solutions.append((a, b))
    return solutions
