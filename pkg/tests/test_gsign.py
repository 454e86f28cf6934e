"""Sign algebra and sign-matrix tests.

Expected values marked as oracle-derived were computed by exhaustive walk
enumeration (the DFS oracle) before the matrix path existed and are frozen
here; the live-agreement tests then tie the two paths together.
"""

import itertools
import random

import pytest

from signbase import (
    CapacityError,
    GenSign,
    OrderMismatchError,
    SignPattern,
    build_d1,
    CANONICAL_NONPOWERFUL,
    enumerate_signs,
    gsign_add,
    gsign_mul,
    has_amb,
    mat_mul,
    mat_power,
    power_sequence_base,
)
from signbase.signed import SignedDigraph

from conftest import TINY3_ARCS

Z, P, N, A = GenSign.ZERO, GenSign.POS, GenSign.NEG, GenSign.AMB
ALL = (Z, P, N, A)


def test_addition_table():
    assert gsign_add(N, P) is A
    assert gsign_add(P, N) is A
    assert gsign_add(Z, P) is P
    assert gsign_add(A, N) is A
    assert gsign_add(Z, Z) is Z
    assert gsign_add(P, P) is P
    assert gsign_add(N, N) is N
    for x in ALL:
        assert gsign_add(Z, x) is x
        assert gsign_add(A, x) is A


def test_multiplication_table():
    assert gsign_mul(Z, A) is Z
    assert gsign_mul(A, Z) is Z
    assert gsign_mul(N, N) is P
    assert gsign_mul(A, N) is A
    assert gsign_mul(P, N) is N
    for x in ALL:
        assert gsign_mul(P, x) is x
        assert gsign_mul(Z, x) is Z
    for x in (P, N, A):
        assert gsign_mul(A, x) is A


def test_semiring_axioms_exhaustive():
    for a, b in itertools.product(ALL, repeat=2):
        assert gsign_add(a, b) is gsign_add(b, a)
        assert gsign_mul(a, b) is gsign_mul(b, a)
    for a, b, c in itertools.product(ALL, repeat=3):
        assert gsign_add(gsign_add(a, b), c) is gsign_add(a, gsign_add(b, c))
        assert gsign_mul(gsign_mul(a, b), c) is gsign_mul(a, gsign_mul(b, c))
        assert gsign_mul(a, gsign_add(b, c)) is gsign_add(
            gsign_mul(a, b), gsign_mul(a, c)
        )


def test_exactly_four_values():
    assert len({Z, P, N, A}) == 4
    assert GenSign.from_sign(1) is P
    assert GenSign.from_sign(-1) is N
    assert GenSign.from_sign(0) is Z
    with pytest.raises(ValueError):
        GenSign.from_sign(2)


def test_pattern_construction_and_entry():
    a = SignPattern.from_rows([[Z, P], [N, Z]])
    assert a.entry(1, 2) is P
    assert a.entry(2, 1) is N
    assert a.entry(1, 1) is Z
    assert a.is_pure
    assert a == SignPattern.from_rows([[Z, P], [N, Z]])
    assert hash(a) == hash(SignPattern.from_rows([[Z, P], [N, Z]]))


def test_pattern_order_cap():
    with pytest.raises(CapacityError):
        SignPattern.identity(17)
    SignPattern.identity(16)


def test_mat_mul_identity_neutral():
    rng = random.Random(9)
    for _ in range(20):
        n = rng.randint(1, 5)
        rows = [[rng.choice(ALL) for _ in range(n)] for _ in range(n)]
        a = SignPattern.from_rows(rows)
        eye = SignPattern.identity(n)
        assert mat_mul(eye, a) == a
        assert mat_mul(a, eye) == a


def test_mat_mul_two_by_two():
    a = SignPattern.from_rows([[Z, P], [N, Z]])
    sq = mat_mul(a, a)
    assert sq == SignPattern.from_rows([[N, Z], [Z, N]])


def test_mat_mul_order_mismatch():
    with pytest.raises(OrderMismatchError):
        mat_mul(SignPattern.identity(2), SignPattern.identity(3))


def test_mat_mul_forced_ambiguity():
    # Two routes of opposite sign into the same entry must collide to AMB.
    a = SignPattern.from_rows([[P, P], [Z, Z]])
    b = SignPattern.from_rows([[Z, P], [Z, N]])
    c = mat_mul(a, b)
    assert c.entry(1, 2) is A
    assert has_amb(c)


def test_tiny3_square_matches_walk_enumeration():
    s = SignedDigraph(3, TINY3_ARCS)
    sq = mat_mul(s.pattern(), s.pattern())
    # Frozen from the walk oracle: the only length-2 walks are
    # 1->2->1 (neg), 1->2->3 (pos), 2->1->2 (neg), 2->3->1 (pos), 3->1->2 (pos).
    assert sq == SignPattern.from_rows([[N, Z, P], [P, N, Z], [Z, P, Z]])
    for u in range(1, 4):
        for v in range(1, 4):
            pos, neg = enumerate_signs(s, u, v, 2)
            entry = sq.entry(u, v)
            assert (pos, neg) == (bool(entry & 1), bool(entry & 2))


def test_mat_power_edge_cases():
    a = SignPattern.from_rows([[Z, P], [N, Z]])
    assert mat_power(a, 0) == SignPattern.identity(2)
    assert mat_power(a, 1) == a
    assert mat_power(a, 3) == mat_mul(a, mat_mul(a, a))
    with pytest.raises(ValueError):
        mat_power(a, -1)


def test_has_amb_examples():
    assert not has_amb(SignPattern.identity(4))
    s = SignedDigraph(3, TINY3_ARCS)
    # Oracle-derived: the first ambiguous entry appears at length 5 and the
    # power sequence hits the all-ambiguous matrix at length 11.
    assert not has_amb(mat_power(s.pattern(), 4))
    assert has_amb(mat_power(s.pattern(), 5))
    eleven = mat_power(s.pattern(), 11)
    assert all(eleven.entry(i, j) is A for i in range(1, 4) for j in range(1, 4))


def test_power_sequence_base_identity():
    trace = power_sequence_base(SignPattern.identity(3))
    assert trace.base_l == 1
    assert trace.period_p == 1
    assert trace.stabilized == SignPattern.identity(3)


def test_power_sequence_base_tiny3():
    s = SignedDigraph(3, TINY3_ARCS)
    trace = power_sequence_base(s.pattern())
    # Oracle-derived: 11 is the first all-ambiguous power, and the
    # all-ambiguous matrix is a fixed point.
    assert trace.base_l == 11
    assert trace.period_p == 1
    assert all(
        trace.stabilized.entry(i, j) is A for i in range(1, 4) for j in range(1, 4)
    )
    assert mat_power(s.pattern(), 11) == mat_power(s.pattern(), 12)
    assert mat_power(s.pattern(), 10) != mat_power(s.pattern(), 11)


def test_power_sequence_base_periodic_pattern():
    # A plain 3-cycle is not primitive: its powers rotate with period 3.
    a = SignPattern.from_rows([[Z, P, Z], [Z, Z, P], [P, Z, Z]])
    trace = power_sequence_base(a)
    assert trace.base_l == 1
    assert trace.period_p == 3


def test_power_sequence_base_rejects_ambiguous_input():
    with pytest.raises(ValueError):
        power_sequence_base(SignPattern.from_rows([[A]]))


def test_d1_base_matches_closed_form():
    s = build_d1(6, CANONICAL_NONPOWERFUL)
    # (2n-1)(n-1)+1 at n=6: the first upper base equals the matrix base.
    assert power_sequence_base(s.pattern()).base_l == 56


def test_amb_persistence_under_composition():
    rng = random.Random(21)
    for _ in range(40):
        n = rng.randint(2, 5)
        rows = [[rng.choice(ALL) for _ in range(n)] for _ in range(n)]
        a = SignPattern.from_rows(
            [[rng.choice((Z, P, N)) for _ in range(n)] for _ in range(n)]
        )
        p = SignPattern.from_rows(rows)
        nxt = mat_mul(p, a)
        for i in range(1, n + 1):
            for u in range(1, n + 1):
                if p.entry(i, u) is A:
                    for v in range(1, n + 1):
                        if a.entry(u, v) is not Z:
                            assert nxt.entry(i, v) is A
