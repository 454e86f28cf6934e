"""Property-based tests over randomized structures."""

from math import gcd

from hypothesis import given, settings, strategies as st

from signbase import (
    FrobeniusBasis,
    GenSign,
    SignedDigraph,
    SignPattern,
    enumerate_signs,
    frobenius_number,
    in_frobenius_set,
    mat_mul,
    parse_sdg,
    serialize_sdg,
    sssd_matrix,
)

PURE = (GenSign.ZERO, GenSign.POS, GenSign.NEG)


@st.composite
def pure_patterns(draw, n=None):
    if n is None:
        n = draw(st.integers(min_value=1, max_value=4))
    rows = draw(
        st.lists(
            st.lists(st.sampled_from(PURE), min_size=n, max_size=n),
            min_size=n,
            max_size=n,
        )
    )
    return SignPattern.from_rows(rows)


@st.composite
def pattern_triples(draw):
    n = draw(st.integers(min_value=1, max_value=3))
    return tuple(draw(pure_patterns(n=n)) for _ in range(3))


@st.composite
def signed_digraphs(draw, max_order=4, max_arcs=7):
    n = draw(st.integers(min_value=1, max_value=max_order))
    pairs = [(u, v) for u in range(1, n + 1) for v in range(1, n + 1)]
    arcs = draw(
        st.lists(
            st.sampled_from(pairs),
            unique=True,
            min_size=0,
            max_size=min(max_arcs, len(pairs)),
        )
    )
    signs = draw(
        st.lists(st.sampled_from((1, -1)), min_size=len(arcs), max_size=len(arcs))
    )
    return SignedDigraph(n, [(u, v, s) for (u, v), s in zip(arcs, signs)])


@given(pattern_triples())
def test_mat_mul_associative(abc):
    a, b, c = abc
    assert mat_mul(mat_mul(a, b), c) == mat_mul(a, mat_mul(b, c))


@given(pure_patterns())
def test_identity_neutral(a):
    eye = SignPattern.identity(a.n)
    assert mat_mul(eye, a) == a
    assert mat_mul(a, eye) == a


@settings(max_examples=60, deadline=None)
@given(signed_digraphs(), st.integers(min_value=1, max_value=6))
def test_matrix_matches_walk_enumeration(s, l):
    grid = sssd_matrix(s, l)
    power = s.power(l)
    for u in range(1, s.n + 1):
        for v in range(1, s.n + 1):
            pos, neg = enumerate_signs(s, u, v, l)
            entry = power.entry(u, v)
            assert (bool(entry & 1), bool(entry & 2)) == (pos, neg)
            assert grid[u - 1][v - 1] == (pos and neg)


@given(signed_digraphs(max_order=6, max_arcs=12))
def test_sdg_round_trip(s):
    assert parse_sdg(serialize_sdg(s)) == s


@given(st.integers(min_value=2, max_value=14), st.integers(min_value=2, max_value=14))
def test_frobenius_window(a, b):
    if gcd(a, b) != 1:
        return
    basis = FrobeniusBasis([a, b])
    phi = frobenius_number(basis)
    assert phi == (a - 1) * (b - 1)
    assert all(in_frobenius_set(m, basis) for m in range(phi, phi + max(a, b) + 1))
    if phi >= 1:
        assert not in_frobenius_set(phi - 1, basis)
