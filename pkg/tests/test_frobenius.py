"""Coin-problem tests, including the walk-decomposition sign arguments."""

import random
from math import gcd

import pytest

from signbase import (
    CANONICAL_NONPOWERFUL,
    SAME_SIGN_NM1,
    FrobeniusBasis,
    build_d1,
    build_d2,
    cycles,
    frobenius_number,
    in_frobenius_set,
    sssd_matrix,
    two_cycle_walk_decompose,
)


def brute_force_representable(gens, m):
    """Plain recursion over generator counts; independent of the DP."""
    if m == 0:
        return True
    return any(g <= m and brute_force_representable(gens, m - g) for g in gens)


def test_basis_validation():
    with pytest.raises(ValueError):
        FrobeniusBasis([])
    with pytest.raises(ValueError):
        FrobeniusBasis([0, 3])
    with pytest.raises(ValueError):
        FrobeniusBasis([4, 6])
    assert FrobeniusBasis([6, 5]).generators == (5, 6)


def test_in_frobenius_set_examples():
    basis = FrobeniusBasis([5, 6])
    assert in_frobenius_set(0, basis)
    assert not in_frobenius_set(19, basis)
    assert in_frobenius_set(20, basis)
    assert in_frobenius_set(11, basis)
    assert not in_frobenius_set(13, basis)
    with pytest.raises(ValueError):
        in_frobenius_set(-1, basis)


def test_frobenius_number_examples():
    assert frobenius_number(FrobeniusBasis([1])) == 0
    assert frobenius_number(FrobeniusBasis([1, 7, 9])) == 0
    assert frobenius_number(FrobeniusBasis([5, 6])) == 20
    # Frozen from the brute-force scan below (no coprime pair here).
    assert frobenius_number(FrobeniusBasis([6, 10, 15])) == 30
    assert all(brute_force_representable((6, 10, 15), m) for m in range(30, 45))
    assert not brute_force_representable((6, 10, 15), 29)


def test_two_generator_closed_form_all_coprime_pairs():
    for a in range(2, 13):
        for b in range(a + 1, 13):
            if gcd(a, b) == 1:
                assert frobenius_number(FrobeniusBasis([a, b])) == (a - 1) * (b - 1)


def test_representability_window():
    rng = random.Random(13)
    for _ in range(20):
        while True:
            gens = sorted(rng.sample(range(2, 30), 3))
            if gcd(gcd(gens[0], gens[1]), gens[2]) == 1:
                break
        basis = FrobeniusBasis(gens)
        phi = frobenius_number(basis)
        for m in range(phi, phi + max(gens) + 1):
            assert in_frobenius_set(m, basis)
        if phi >= 1:
            assert not in_frobenius_set(phi - 1, basis)


def test_dp_agrees_with_brute_force_three_generators():
    rng = random.Random(14)
    for _ in range(20):
        while True:
            gens = sorted(rng.sample(range(2, 16), 3))
            if gcd(gcd(gens[0], gens[1]), gens[2]) == 1:
                break
        basis = FrobeniusBasis(gens)
        for m in range(0, 40):
            assert in_frobenius_set(m, basis) == brute_force_representable(gens, m)


def test_two_cycle_walk_decompose_basics():
    assert two_cycle_walk_decompose(9, 9, 6) == [(0, 0)]
    assert two_cycle_walk_decompose(3, 9, 6) == []
    assert two_cycle_walk_decompose(55, 0, 6) == [(0, 11), (5, 5)]
    with pytest.raises(ValueError):
        two_cycle_walk_decompose(10, 0, 1)
    with pytest.raises(ValueError):
        two_cycle_walk_decompose(-1, 0, 4)


def test_two_cycle_walk_decompose_exhaustive_vs_double_loop():
    rng = random.Random(15)
    for _ in range(60):
        n = rng.randint(2, 9)
        m = rng.randint(0, 8)
        total = rng.randint(0, 90)
        got = two_cycle_walk_decompose(total, m, n)
        brute = [
            (a, b)
            for a in range(total + 1)
            for b in range(total + 1)
            if a * n + b * (n - 1) + m == total
        ]
        assert got == brute
        for a, b in got:
            assert a * n + b * (n - 1) + m == total


def _cycle_signs(s):
    by_len = {}
    for c in cycles(s):
        by_len.setdefault(c.length, []).append(c.sign)
    return by_len


def test_sign_uniqueness_at_d1_threshold():
    # At length (2n-k)(n-1), every walk from n-m into n decomposes as the
    # unique path of length m plus cycles; all realizable decompositions
    # must share the n-cycle count, hence the sign, so no opposite-sign
    # pair exists there.  A walk closed at vertex n must traverse the
    # n-cycle at least once since the (n-1)-cycle avoids n.
    for n in (6, 7, 8):
        s = build_d1(n, CANONICAL_NONPOWERFUL)
        signs = _cycle_signs(s)
        sgn_n, sgn_nm1 = signs[n][0], signs[n - 1][0]
        for k in (1, 2, 3):
            total = (2 * n - k) * (n - 1)
            for m in range(k):
                solutions = two_cycle_walk_decompose(total, m, n)
                realizable = [
                    (a, b) for a, b in solutions if m > 0 or a >= 1
                ]
                assert realizable, (n, k, m)
                assert len({a for a, _ in realizable}) == 1, (n, k, m, realizable)
                walk_signs = {sgn_n**a * sgn_nm1**b for a, b in realizable}
                assert len(walk_signs) == 1
                assert sssd_matrix(s, total)[n - m - 1][n - 1] is False


def test_sign_uniqueness_at_d2_threshold():
    # Same argument one step below the same-sign d2 value, for the witness
    # set {1} + {n, ..., n-k+2}; path lengths are n-1 (from vertex 1) or m.
    for n in (6, 7, 8):
        s = build_d2(n, SAME_SIGN_NM1)
        signs = _cycle_signs(s)
        sgn_n = signs[n][0]
        sgn_nm1 = signs[n - 1][0]
        assert signs[n - 1][0] == signs[n - 1][1]
        for k in (1, 2, 3):
            total = (2 * n - k) * (n - 1) - 1
            ms = [n - 1] + list(range(0, k - 1))
            for m in ms:
                solutions = two_cycle_walk_decompose(total, m, n)
                assert solutions, (n, k, m)
                assert len({b for _, b in solutions}) == 1, (n, k, m, solutions)
                walk_signs = {sgn_n**a * sgn_nm1**b for a, b in solutions}
                assert len(walk_signs) == 1
                assert sssd_matrix(s, total)[n - m - 1][n - 1] is False
