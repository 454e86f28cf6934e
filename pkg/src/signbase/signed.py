"""Signed digraphs and their base analysis.

A signed digraph assigns +1 or -1 to every arc; a walk's sign is the
product over its arcs.  Two walks with the same endpoints and length but
different signs (an "SSSD pair") are the central object: the base of a
vertex set X is the least length p at which every vertex receives such a
pair from somewhere in X, and the kth upper base maximizes that over all
k-element X.  This module computes those quantities exactly from the power
sequence of the arc-sign matrix, plus the structural upper bounds that
come from cycle pairs.
"""

from __future__ import annotations

import enum
import threading
from dataclasses import dataclass
from itertools import combinations
from math import lcm
from typing import Iterable

from .digraph import (
    MAX_ORDER,
    Digraph,
    diameter,
    enumerate_cycles,
    is_primitive,
    upper_multiexponent,
)
from .errors import CapacityError, ConsistencyError, StructuralError
from .gsign import GenSign, PowerTrace, SignPattern, mat_mul, power_sequence_base


class SignedDigraph:
    """Digraph on vertices 1..n whose arcs carry signs +1 or -1.

    At most one arc per ordered pair: parallel arcs of opposite sign have
    no sign-matrix counterpart and are rejected.  Instances are immutable;
    derived data (underlying digraph, sign matrix, matrix powers, cycles)
    is cached internally behind a lock, so values are safely shareable
    across threads.
    """

    __slots__ = (
        "n",
        "arcs",
        "_signs",
        "_lock",
        "_underlying",
        "_pattern",
        "_pow_cache",
        "_cycles",
        "_trace",
    )

    def __init__(self, n: int, arcs: Iterable[tuple[int, int, int]]):
        if n < 1:
            raise ValueError("order must be at least 1")
        if n > MAX_ORDER:
            raise CapacityError(f"order {n} exceeds the supported maximum {MAX_ORDER}")
        signs: dict[tuple[int, int], int] = {}
        for u, v, sign in arcs:
            if not (1 <= u <= n and 1 <= v <= n):
                raise ValueError(f"arc ({u}, {v}) out of range for order {n}")
            if sign not in (1, -1):
                raise ValueError(f"arc ({u}, {v}) must carry sign +1 or -1, got {sign!r}")
            if (u, v) in signs:
                extra = (
                    "; parallel arcs of opposite sign cannot be expressed "
                    "as a single sign-matrix entry"
                    if signs[(u, v)] != sign
                    else ""
                )
                raise ValueError(f"duplicate arc ({u}, {v}){extra}")
            signs[(u, v)] = sign
        object.__setattr__(self, "n", n)
        object.__setattr__(
            self, "arcs", tuple(sorted((u, v, s) for (u, v), s in signs.items()))
        )
        object.__setattr__(self, "_signs", signs)
        object.__setattr__(self, "_lock", threading.Lock())
        object.__setattr__(self, "_underlying", None)
        object.__setattr__(self, "_pattern", None)
        object.__setattr__(self, "_pow_cache", [])
        object.__setattr__(self, "_cycles", None)
        object.__setattr__(self, "_trace", None)

    def __setattr__(self, name, value):
        raise AttributeError("SignedDigraph is immutable")

    def _set(self, name, value):
        object.__setattr__(self, name, value)

    @classmethod
    def from_pattern(cls, a: SignPattern) -> "SignedDigraph":
        """Inverse of :meth:`pattern`; requires a pure pattern."""
        arcs = []
        for i in range(1, a.n + 1):
            for j in range(1, a.n + 1):
                entry = a.entry(i, j)
                if entry is GenSign.POS:
                    arcs.append((i, j, 1))
                elif entry is GenSign.NEG:
                    arcs.append((i, j, -1))
                elif entry is GenSign.AMB:
                    raise ValueError("pattern with ambiguous entries has no arc form")
        return cls(a.n, arcs)

    def arc_sign(self, u: int, v: int) -> int:
        """Sign of the arc (u, v); 0 when absent."""
        return self._signs.get((u, v), 0)

    def underlying(self) -> Digraph:
        with self._lock:
            if self._underlying is None:
                self._set("_underlying", Digraph(self.n, [(u, v) for u, v, _ in self.arcs]))
            return self._underlying

    def pattern(self) -> SignPattern:
        """The n x n arc-sign matrix of this signed digraph."""
        with self._lock:
            if self._pattern is None:
                pos = [0] * self.n
                neg = [0] * self.n
                for u, v, sign in self.arcs:
                    if sign > 0:
                        pos[u - 1] |= 1 << (v - 1)
                    else:
                        neg[u - 1] |= 1 << (v - 1)
                self._set("_pattern", SignPattern(self.n, pos, neg))
            return self._pattern

    def power(self, l: int) -> SignPattern:
        """``l``-th matrix power (l >= 1), from a shared growing cache."""
        if l < 1:
            raise ValueError("power index must be at least 1")
        a = self.pattern()
        with self._lock:
            cache = self._pow_cache
            while len(cache) < l:
                cache.append(mat_mul(cache[-1], a) if cache else a)
            return cache[l - 1]

    def amb_row_masks(self, l: int) -> list[int]:
        """Per-row bitmasks of the ambiguous entries of the l-th power."""
        p = self.power(l)
        return [pr & nr for pr, nr in zip(p.pos_rows, p.neg_rows)]

    def power_trace(self) -> PowerTrace:
        with self._lock:
            trace = self._trace
        if trace is None:
            trace = power_sequence_base(self.pattern())
            with self._lock:
                self._set("_trace", trace)
        return trace

    def __eq__(self, other) -> bool:
        if not isinstance(other, SignedDigraph):
            return NotImplemented
        return self.n == other.n and self.arcs == other.arcs

    def __hash__(self) -> int:
        return hash((self.n, self.arcs))

    def __repr__(self) -> str:
        return f"SignedDigraph(n={self.n}, arcs={list(self.arcs)!r})"


@dataclass(frozen=True)
class CycleRecord:
    """A simple cycle with its length and the product of its arc signs."""

    vertices: tuple[int, ...]
    length: int
    sign: int


class PairCondition(enum.Enum):
    """Why a cycle pair certifies non-powerfulness."""

    #: Lengths of opposite parity and the even cycle is negative.
    ODD_EVEN_NEGATIVE = "odd-even-negative"
    #: Both lengths odd and the signs differ.
    ODD_ODD_OPPOSITE = "odd-odd-opposite"


@dataclass(frozen=True)
class DistinguishedPair:
    """Cycle pair meeting one of the two non-powerfulness conditions.

    Walking cycle 1 ``lcm/p1`` times and cycle 2 ``lcm/p2`` times gives
    closed walks of the same length (``lcm_length``) and opposite signs;
    ``p2`` copies of cycle 1 against ``p1`` copies of cycle 2 do the same
    at ``product_length``.
    """

    c1: CycleRecord
    c2: CycleRecord
    condition: PairCondition
    lcm_length: int
    product_length: int


def cycles(s: SignedDigraph) -> tuple[CycleRecord, ...]:
    """All simple cycles of ``s`` with their signs, canonically rotated."""
    with s._lock:
        cached = s._cycles
    if cached is not None:
        return cached
    records = []
    for verts in enumerate_cycles(s.underlying()):
        sign = 1
        for i, u in enumerate(verts):
            sign *= s.arc_sign(u, verts[(i + 1) % len(verts)])
        records.append(CycleRecord(vertices=verts, length=len(verts), sign=sign))
    result = tuple(records)
    with s._lock:
        s._set("_cycles", result)
    return result


def _require_primitive(s: SignedDigraph, what: str) -> None:
    if not is_primitive(s.underlying()):
        raise StructuralError(f"{what} requires a primitive signed digraph")


def is_powerful(s: SignedDigraph) -> bool:
    """True iff no power of the sign matrix ever develops an ambiguous entry.

    Decided through the cycle-pair characterization: a primitive signed
    digraph is non-powerful exactly when it holds an odd cycle together
    with a negative even cycle, or two odd cycles of opposite sign.
    :func:`is_powerful_by_powers` evaluates the defining property directly;
    the two must always agree.
    """
    _require_primitive(s, "the powerfulness test")
    has_odd = has_odd_pos = has_odd_neg = has_even_neg = False
    for c in cycles(s):
        if c.length % 2:
            has_odd = True
            if c.sign > 0:
                has_odd_pos = True
            else:
                has_odd_neg = True
        elif c.sign < 0:
            has_even_neg = True
    return not ((has_odd and has_even_neg) or (has_odd_pos and has_odd_neg))


def is_powerful_by_powers(s: SignedDigraph) -> bool:
    """Powerfulness straight from the definition: scan every distinct power.

    Powers repeat from ``base_l`` with period ``period_p``, so checking
    indices 1 .. base_l + period_p - 1 covers the whole infinite sequence.
    """
    trace = s.power_trace()
    last = trace.base_l + trace.period_p - 1
    return not any(any(m for m in s.amb_row_masks(l)) for l in range(1, last + 1))


def distinguished_pairs(s: SignedDigraph) -> list[DistinguishedPair]:
    """All unordered cycle pairs certifying non-powerfulness.

    For mixed parities the odd cycle is reported first.  Sorted by
    (lcm length, lengths, vertex sequences) so reports are reproducible.
    """
    _require_primitive(s, "the cycle-pair search")
    records = cycles(s)
    pairs = []
    for a, b in combinations(records, 2):
        pa, pb = a.length % 2, b.length % 2
        if pa != pb:
            odd, even = (a, b) if pa else (b, a)
            if even.sign < 0:
                pairs.append(_make_pair(odd, even, PairCondition.ODD_EVEN_NEGATIVE))
        elif pa == 1 and a.sign != b.sign:
            c1, c2 = sorted((a, b), key=lambda c: (c.length, c.vertices))
            pairs.append(_make_pair(c1, c2, PairCondition.ODD_ODD_OPPOSITE))
    pairs.sort(
        key=lambda p: (
            p.lcm_length,
            p.c1.length,
            p.c2.length,
            p.c1.vertices,
            p.c2.vertices,
        )
    )
    return pairs


def _make_pair(c1: CycleRecord, c2: CycleRecord, cond: PairCondition) -> DistinguishedPair:
    return DistinguishedPair(
        c1=c1,
        c2=c2,
        condition=cond,
        lcm_length=lcm(c1.length, c2.length),
        product_length=c1.length * c2.length,
    )


def sssd_matrix(s: SignedDigraph, l: int) -> tuple[tuple[bool, ...], ...]:
    """Boolean matrix: entry (u, v) is True iff a pair of same-length,
    opposite-sign walks of length ``l`` runs from u to v.

    These are exactly the ambiguous entries of the l-th power of the
    arc-sign matrix; walk enumeration must agree with this bit for bit.
    """
    if l < 1:
        raise ValueError("walk length must be positive")
    masks = s.amb_row_masks(l)
    return tuple(
        tuple(bool(masks[u] >> v & 1) for v in range(s.n)) for u in range(s.n)
    )


def _require_base_input(s: SignedDigraph, what: str) -> None:
    _require_primitive(s, what)
    if is_powerful(s):
        raise StructuralError(f"{what} is defined for non-powerful signed digraphs only")


def _scan_cap(s: SignedDigraph, k: int) -> int:
    # For order >= 6 the closed-form ceiling (2n-k)(n-1)+1 bounds every
    # base, so passing it signals a bug.  Below order 6 no such ceiling is
    # asserted; the power sequence stabilizes at the all-ambiguous matrix,
    # so its base plus period always suffices.
    n = s.n
    if n >= 6:
        return (2 * n - k) * (n - 1) + 1
    trace = s.power_trace()
    return trace.base_l + trace.period_p


def _mask_of(n: int, xs: Iterable[int]) -> int:
    mask = 0
    for x in xs:
        if not (1 <= x <= n):
            raise ValueError(f"vertex {x} out of range for order {n}")
        mask |= 1 << (x - 1)
    return mask


def set_base(s: SignedDigraph, xs: Iterable[int]) -> int:
    """Base of the vertex set ``xs``: least p at which every vertex receives
    an opposite-sign walk pair of length exactly p from somewhere in ``xs``.

    For strongly connected inputs the coverage predicate is monotone in p
    (extend both walks of a pair through an in-neighbor), which justifies
    the upward scan; the definition alone does not promise monotonicity
    without strong connectivity, and this function requires primitivity.
    """
    _require_base_input(s, "the set base")
    x_mask = _mask_of(s.n, xs)
    if not x_mask:
        raise ValueError("vertex set must be nonempty")
    k = bin(x_mask).count("1")
    full = (1 << s.n) - 1
    cap = _scan_cap(s, k)
    for p in range(1, cap + 1):
        masks = s.amb_row_masks(p)
        union = 0
        m = x_mask
        while m:
            u = (m & -m).bit_length() - 1
            m &= m - 1
            union |= masks[u]
        if union == full:
            return p
    raise ConsistencyError(
        f"set-base scan passed its ceiling {cap}; this indicates a bug"
    )


@dataclass(frozen=True)
class UpperBaseResult:
    """Value of the kth upper base together with a maximizing vertex set."""

    k: int
    value: int
    witness: tuple[int, ...]


def kth_upper_base(s: SignedDigraph, k: int) -> UpperBaseResult:
    """Largest set base over all k-element vertex sets, with a witness.

    One shared power sequence serves every subset; each subset drops out
    of the scan at its own base, and the last to drop attains the maximum.
    Ties pick the lexicographically smallest vertex set.
    """
    _require_base_input(s, "the upper base")
    if not (1 <= k <= s.n):
        raise ValueError(f"k must be in 1..{s.n}")
    results = _upper_base_scan(s, [k])
    return results[0]


def upper_base_table(s: SignedDigraph) -> tuple[UpperBaseResult, ...]:
    """Upper bases for every k = 1..n from a single power-sequence scan."""
    _require_base_input(s, "the upper base")
    return tuple(_upper_base_scan(s, list(range(1, s.n + 1))))


def _upper_base_scan(s: SignedDigraph, k_values: list[int]) -> list[UpperBaseResult]:
    n = s.n
    full = (1 << n) - 1
    pending: list[tuple[int, tuple[int, ...], int]] = []
    for k in k_values:
        for combo in combinations(range(1, n + 1), k):
            mask = 0
            for x in combo:
                mask |= 1 << (x - 1)
            pending.append((mask, combo, k))
    best_p = {k: 0 for k in k_values}
    best_witness: dict[int, tuple[int, ...]] = {}
    hard_cap = max(_scan_cap(s, k) for k in k_values)
    p = 0
    while pending:
        p += 1
        if p > hard_cap:
            raise ConsistencyError(
                f"upper-base scan passed its ceiling {hard_cap}; this indicates a bug"
            )
        masks = s.amb_row_masks(p)
        still = []
        for mask, combo, k in pending:
            union = 0
            m = mask
            while m:
                u = (m & -m).bit_length() - 1
                m &= m - 1
                union |= masks[u]
            if union == full:
                if p > best_p[k]:
                    best_p[k] = p
                    best_witness[k] = combo
                elif p == best_p[k] and combo < best_witness[k]:
                    best_witness[k] = combo
            else:
                still.append((mask, combo, k))
        pending = still
    results = []
    for k in k_values:
        cap = _scan_cap(s, k)
        if best_p[k] > cap:
            raise ConsistencyError(
                f"upper base {best_p[k]} for k={k} exceeds its ceiling {cap}"
            )
        results.append(UpperBaseResult(k=k, value=best_p[k], witness=best_witness[k]))
    return results


@dataclass(frozen=True)
class WalkPairBound:
    """Upper bound on the kth upper base from one opposite-sign walk pair.

    If some pair of same-length opposite-sign walks of length r exists
    anywhere, every vertex set of size k is served within
    F(k) + diameter + r: route to the pair's source in F(k) + slack steps,
    traverse either walk, then follow a shortest path onward.
    """

    k: int
    value: int
    multiexponent: int
    diameter: int
    pair_length: int
    source: int
    target: int


def bound_sssd_pair(s: SignedDigraph, k: int) -> WalkPairBound:
    """Tightest walk-pair bound: uses the least r carrying any
    opposite-sign pair, found by scanning the power sequence."""
    _require_base_input(s, "the walk-pair bound")
    if not (1 <= k <= s.n):
        raise ValueError(f"k must be in 1..{s.n}")
    d = s.underlying()
    f_k = upper_multiexponent(d, k)
    diam = diameter(d)
    cap = _scan_cap(s, 1)
    for r in range(1, cap + 1):
        masks = s.amb_row_masks(r)
        for u in range(s.n):
            if masks[u]:
                v = (masks[u] & -masks[u]).bit_length() - 1
                return WalkPairBound(
                    k=k,
                    value=f_k + diam + r,
                    multiexponent=f_k,
                    diameter=diam,
                    pair_length=r,
                    source=u + 1,
                    target=v + 1,
                )
    raise ConsistencyError(
        "no opposite-sign walk pair found below the stabilization ceiling"
    )


@dataclass(frozen=True)
class ClosedWalkCandidate:
    """Vertices carrying closed opposite-sign walk pairs of one common length."""

    closed_length: int
    vertices: tuple[int, ...]
    value: int


@dataclass(frozen=True)
class ClosedWalkBound:
    """Upper bound on the kth upper base from closed walk pairs.

    If every vertex in a set V1 carries a closed opposite-sign pair of one
    common length r, every vertex set of size k is served within
    F(k) + r + n - |V1|.  Candidate lengths come from the cycle-pair
    certificates (their lcm closed-walk lengths); the carrying sets are
    read off the diagonal ambiguities of the corresponding power, which
    subsumes the vertices shared by the two cycles.
    """

    k: int
    value: int | None
    multiexponent: int
    candidates: tuple[ClosedWalkCandidate, ...]


def bound_common_vertices(s: SignedDigraph, k: int) -> ClosedWalkBound:
    _require_base_input(s, "the closed-walk bound")
    if not (1 <= k <= s.n):
        raise ValueError(f"k must be in 1..{s.n}")
    f_k = upper_multiexponent(s.underlying(), k)
    lengths = sorted({pair.lcm_length for pair in distinguished_pairs(s)})
    candidates = []
    for r in lengths:
        masks = s.amb_row_masks(r)
        carriers = tuple(u + 1 for u in range(s.n) if masks[u] >> u & 1)
        if carriers:
            candidates.append(
                ClosedWalkCandidate(
                    closed_length=r,
                    vertices=carriers,
                    value=f_k + r + s.n - len(carriers),
                )
            )
    value = min((c.value for c in candidates), default=None)
    return ClosedWalkBound(
        k=k, value=value, multiexponent=f_k, candidates=tuple(candidates)
    )
