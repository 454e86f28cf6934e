"""Brute-force ground truth: explicit enumeration of signed walks.

Everything here walks the arc lists directly by depth-first search, with no
memoization and no shared code with the bit-packed matrix path, so the two
routes can check each other.  The caps are deliberate: the oracle exists to
validate tiny instances, never to be fast.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING, Iterable, Iterator

from .errors import CapacityError

if TYPE_CHECKING:  # pragma: no cover
    from .signed import SignedDigraph

ORACLE_MAX_ORDER = 6
ORACLE_MAX_LEN = 12


@dataclass(frozen=True)
class Walk:
    """A concrete walk: signed arcs chained head to tail."""

    arcs: tuple[tuple[int, int, int], ...]

    def __post_init__(self):
        for (_, head, _), (tail, _, _) in zip(self.arcs, self.arcs[1:]):
            if head != tail:
                raise ValueError("consecutive arcs must chain head to tail")
        for _, _, sign in self.arcs:
            if sign not in (1, -1):
                raise ValueError("arc signs must be +1 or -1")

    @property
    def length(self) -> int:
        return len(self.arcs)

    @property
    def sign(self) -> int:
        sign = 1
        for _, _, arc_sign in self.arcs:
            sign *= arc_sign
        return sign


def _out_arcs(s: "SignedDigraph") -> list[list[tuple[int, int]]]:
    out: list[list[tuple[int, int]]] = [[] for _ in range(s.n + 1)]
    for u, v, sign in s.arcs:
        out[u].append((v, sign))
    return out


def _check_caps(s: "SignedDigraph", length: int) -> None:
    if s.n > ORACLE_MAX_ORDER:
        raise CapacityError(f"oracle handles order <= {ORACLE_MAX_ORDER}, got {s.n}")
    if length > ORACLE_MAX_LEN:
        raise CapacityError(f"oracle handles length <= {ORACLE_MAX_LEN}, got {length}")


def enumerate_signs(
    s: "SignedDigraph", u: int, v: int, length: int
) -> tuple[bool, bool]:
    """Which signs occur among walks of exactly ``length`` from u to v.

    Returns ``(pos_exists, neg_exists)``.  The empty walk (length 0 with
    u == v) counts as positive.
    """
    _check_caps(s, length)
    if length < 0:
        raise ValueError("length must be nonnegative")
    if not (1 <= u <= s.n and 1 <= v <= s.n):
        raise ValueError(f"vertices must lie in 1..{s.n}")
    out = _out_arcs(s)
    found = [False, False]

    def walk(w: int, remaining: int, sign: int) -> None:
        if found[0] and found[1]:
            return
        if remaining == 0:
            if w == v:
                found[0 if sign > 0 else 1] = True
            return
        for head, arc_sign in out[w]:
            walk(head, remaining - 1, sign * arc_sign)

    walk(u, length, 1)
    return found[0], found[1]


def iter_walks(
    s: "SignedDigraph", u: int, v: int, length: int
) -> Iterator[Walk]:
    """Yield every walk of exactly ``length`` from u to v, one by one."""
    _check_caps(s, length)
    if not (1 <= u <= s.n and 1 <= v <= s.n):
        raise ValueError(f"vertices must lie in 1..{s.n}")
    out = _out_arcs(s)
    trail: list[tuple[int, int, int]] = []

    def walk(w: int, remaining: int) -> Iterator[Walk]:
        if remaining == 0:
            if w == v:
                yield Walk(tuple(trail))
            return
        for head, arc_sign in out[w]:
            trail.append((w, head, arc_sign))
            yield from walk(head, remaining - 1)
            trail.pop()

    yield from walk(u, length)


def count_signed_walks(
    s: "SignedDigraph", u: int, v: int, length: int, saturation: int = 10**9
) -> tuple[int, int]:
    """Counts of positive and negative walks of exactly ``length`` from u
    to v, each count saturating at ``saturation``."""
    _check_caps(s, length)
    if not (1 <= u <= s.n and 1 <= v <= s.n):
        raise ValueError(f"vertices must lie in 1..{s.n}")
    out = _out_arcs(s)
    counts = [0, 0]

    def walk(w: int, remaining: int, sign: int) -> None:
        if remaining == 0:
            if w == v:
                slot = 0 if sign > 0 else 1
                counts[slot] = min(saturation, counts[slot] + 1)
            return
        for head, arc_sign in out[w]:
            walk(head, remaining - 1, sign * arc_sign)

    walk(u, length, 1)
    return counts[0], counts[1]


def oracle_set_base(s: "SignedDigraph", xs: Iterable[int]) -> int:
    """Least p such that every vertex is hit by walks of both signs and
    length exactly p starting somewhere in ``xs``.

    Scans p upward with :func:`enumerate_signs` only; semantically the same
    quantity the matrix path computes, sharing none of its code.
    """
    x_list = sorted(set(xs))
    if not x_list:
        raise ValueError("vertex set must be nonempty")
    for x in x_list:
        if not (1 <= x <= s.n):
            raise ValueError(f"vertex {x} out of range for order {s.n}")
    for p in range(1, ORACLE_MAX_LEN + 1):
        ok = True
        for v in range(1, s.n + 1):
            if not any(enumerate_signs(s, x, v, p) == (True, True) for x in x_list):
                ok = False
                break
        if ok:
            return p
    raise CapacityError(
        f"no covering length found within the oracle cap {ORACLE_MAX_LEN}"
    )
