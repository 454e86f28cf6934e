"""Shared fixtures and cross-check helpers for the suite."""

from itertools import permutations

import pytest

from signbase import Digraph, SignedDigraph

# Running example: a negative 2-cycle glued to a positive 3-cycle.  Small
# enough for exhaustive walk enumeration, rich enough to be primitive and
# non-powerful.
TINY3_ARCS = [(1, 2, 1), (2, 1, -1), (2, 3, 1), (3, 1, 1)]


@pytest.fixture
def tiny3() -> SignedDigraph:
    return SignedDigraph(3, TINY3_ARCS)


def brute_force_isomorphic(a: Digraph, b: Digraph) -> bool:
    """Permutation-search isomorphism test, used as an oracle for the
    structural matcher.  Fine for n <= 8."""
    if a.n != b.n or len(a.arcs) != len(b.arcs):
        return False
    n = a.n

    def degree_profile(d):
        out = [0] * n
        inc = [0] * n
        for u, v in d.arcs:
            out[u - 1] += 1
            inc[v - 1] += 1
        return sorted(zip(out, inc))

    if degree_profile(a) != degree_profile(b):
        return False
    target = set(b.arcs)
    for perm in permutations(range(1, n + 1)):
        if all((perm[u - 1], perm[v - 1]) in target for u, v in a.arcs):
            return True
    return False
