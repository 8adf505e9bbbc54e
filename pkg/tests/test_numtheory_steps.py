"""Congruential and pair step maps."""

import pytest

from orbitgen import numtheory as nt
from orbitgen.errors import DomainError


def lcg_orbit_is_full(a, b, k):
    m = 1 << k
    cur, seen = 0, 0
    while True:
        cur = (a * cur + b) % m
        seen += 1
        if cur == 0:
            return seen == m
        if seen > m:
            return False


def test_lcg_is_cyclic_examples():
    for k in range(2, 7):
        assert nt.lcg_is_cyclic(5, 1, k)
    assert not nt.lcg_is_cyclic(3, 1, 3)
    assert not lcg_orbit_is_full(3, 1, 3)
    assert not nt.lcg_is_cyclic(1, 2, 2)
    with pytest.raises(DomainError):
        nt.lcg_is_cyclic(5, 1, 1)


def test_lcg_criterion_matches_orbit_walk():
    for a in range(1, 17):
        for b in range(1, 17):
            for k in range(2, 6):
                assert nt.lcg_is_cyclic(a, b, k) == lcg_orbit_is_full(a, b, k)


def test_block_lcg_examples():
    assert nt.block_lcg_step(1) == 1
    assert nt.block_lcg_step(4) == 5
    orbit = [4]
    while True:
        nxt = nt.block_lcg_step(orbit[-1])
        if nxt == 4:
            break
        orbit.append(nxt)
    assert sorted(orbit) == [4, 5, 6, 7]
    with pytest.raises(DomainError):
        nt.block_lcg_step(0)


def test_block_lcg_preserves_blocks():
    for n in range(1, 1 << 14):
        assert nt.block_lcg_step(n).bit_length() == n.bit_length()


def test_pair_step_examples():
    assert nt.pair_step(3, 0) == (3, 3)
    assert nt.pair_step(0, 5) == (5, 5)
    assert nt.pair_step(0, 0) == (0, 0)
    assert nt.pair_step(5, 3) == (2, 4)


def test_pair_step_descent():
    for a in range(1, 201):
        for b in range(1, 201):
            if a != b:
                assert max(nt.pair_step(a, b)) < max(a, b)


def test_max_shrinks_off_diagonal():
    # the inequality behind the pair map's diagonal attractor
    for a in range(1, 501):
        for b in range(1, 501):
            if a != b:
                assert max(abs(a - b), (a + b) // 2) < max(a, b)


def test_sigma_minus_one_fixed_points_are_primes():
    for n in range(2, 10_001):
        assert (nt.divisor_sum(n) - 1 == n) == nt.is_prime(n)
