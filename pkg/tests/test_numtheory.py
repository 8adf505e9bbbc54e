import random

import pytest

from orbitgen import numtheory as nt
from orbitgen.errors import DepthExceeded, DomainError


def brute_divisors(n):
    return [d for d in range(1, n + 1) if n % d == 0]


# ---------------------------------------------------------------------------
# Divisor functions
# ---------------------------------------------------------------------------

def test_divisor_count_examples():
    assert nt.divisor_count(1) == 1
    assert nt.divisor_count(2) == 2
    assert nt.divisor_count(12) == 6  # 1,2,3,4,6,12


@pytest.mark.parametrize("n", list(range(1, 300)))
def test_divisor_functions_against_enumeration(n):
    divs = brute_divisors(n)
    assert nt.divisor_count(n) == len(divs)
    assert nt.divisor_sum(n) == sum(divs)


def test_divisor_sum_examples():
    assert nt.divisor_sum(1) == 1
    assert nt.divisor_sum(12) == 28  # 1+2+3+4+6+12
    for p in (2, 3, 5, 7, 101, 1907):
        assert nt.divisor_sum(p) - 1 == p  # primes are the fixed points


def test_greatest_proper_divisor():
    for p in (2, 3, 5, 7, 97):
        assert nt.greatest_proper_divisor(p) == 1
    assert nt.greatest_proper_divisor(4) == 2
    assert nt.greatest_proper_divisor(12) == 6
    for n in range(2, 300):
        assert nt.greatest_proper_divisor(n) == max(brute_divisors(n)[:-1])


def test_least_nontrivial_divisor():
    for p in (2, 3, 5, 7, 97):
        assert nt.least_nontrivial_divisor(p) == p
    assert nt.least_nontrivial_divisor(4) == 2
    assert nt.least_nontrivial_divisor(91) == 7
    for n in range(2, 300):
        assert nt.least_nontrivial_divisor(n) == brute_divisors(n)[1]


@pytest.mark.parametrize("fn", [nt.divisor_count, nt.divisor_sum,
                                nt.digit_sum_square, nt.shifted_digit_product])
def test_domain_error_below_one(fn):
    with pytest.raises(DomainError):
        fn(0)


def test_domain_error_below_two():
    with pytest.raises(DomainError):
        nt.greatest_proper_divisor(1)
    with pytest.raises(DomainError):
        nt.least_nontrivial_divisor(1)


# ---------------------------------------------------------------------------
# Primality
# ---------------------------------------------------------------------------

def trial_division_is_prime(n):
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def test_is_prime_small_values():
    assert not nt.is_prime(0)
    assert not nt.is_prime(1)
    assert nt.is_prime(2)
    assert nt.is_prime(1907)
    assert trial_division_is_prime(1907)


def test_is_prime_matches_trial_division():
    for n in range(0, 3000):
        assert nt.is_prime(n) == trial_division_is_prime(n)


def test_is_prime_beyond_word_size():
    assert nt.is_prime(2 ** 61 - 1)  # Mersenne prime
    # 2**67 - 1 is composite; its two prime factors multiply back exactly
    f1, f2 = 193707721, 761838257287
    assert f1 * f2 == 2 ** 67 - 1
    assert trial_division_is_prime(f1)
    assert trial_division_is_prime(f2)
    assert nt.is_prime(f1) and nt.is_prime(f2)
    assert not nt.is_prime(2 ** 67 - 1)


def test_factorize_recomposes():
    rng = random.Random(7)
    for _ in range(50):
        n = rng.randrange(2, 10 ** 12)
        fac = nt.factorize(n)
        prod = 1
        for p, e in fac.items():
            assert nt.is_prime(p)
            prod *= p ** e
        assert prod == n


# ---------------------------------------------------------------------------
# Digits
# ---------------------------------------------------------------------------

def test_digits_examples():
    assert nt.digits(13, 10) == (3, 1)
    assert nt.digits(13, 5) == (3, 2)  # 13 = 3 + 2*5


def test_digits_round_trip():
    for base in (2, 10):
        for n in range(1, 10_001):
            ds = nt.digits(n, base)
            assert ds[-1] != 0
            assert sum(a * base ** j for j, a in enumerate(ds)) == n


def test_digits_domain_errors():
    with pytest.raises(DomainError):
        nt.digits(0, 10)
    with pytest.raises(DomainError):
        nt.digits(5, 1)


def test_digit_map_sum_examples():
    assert nt.digit_map_sum(89, nt.DIGIT_SQUARES) == 145  # 64 + 81
    identity = nt.DigitFunction(10, tuple(range(10)))
    for n in range(1, 10):
        assert nt.digit_map_sum(n, identity) == n
    assert nt.digit_map_sum(2178, nt.DIGIT_FOURTH_POWERS) == 6514


def test_digit_sum_square_examples():
    assert nt.digit_sum_square(169) == 256
    assert nt.digit_sum_square(256) == 169
    assert nt.digit_sum_square(9) == 81
    assert nt.digit_sum_square(81) == 81
    assert nt.digit_sum_square(1) == 1


def test_shifted_digit_product_examples():
    assert nt.shifted_digit_product(18) == 18  # (8+1)*(1+1)
    orbit = [2]
    for _ in range(9):
        orbit.append(nt.shifted_digit_product(orbit[-1]))
    assert orbit == [2, 3, 4, 5, 6, 7, 8, 9, 10, 2]
    assert nt.shifted_digit_product(1) == 2


def test_digit_function_validation():
    with pytest.raises(DomainError):
        nt.DigitFunction(1, (0,))
    with pytest.raises(DomainError):
        nt.DigitFunction(3, (0, 1))
    with pytest.raises(DomainError):
        nt.DigitFunction(2, (0, -1))


# ---------------------------------------------------------------------------
# Descent bound and cycles
# ---------------------------------------------------------------------------

def minimal_descent_exponent(base, peak):
    # least r0 with base**r / (r+1) > peak for all r >= r0; the ratio is
    # nondecreasing, so the first clearing r works
    r = 0
    while base ** r <= peak * (r + 1):
        r += 1
    return r


def test_stewart_bound_squares():
    assert nt.stewart_bound(nt.DIGIT_SQUARES) == 1000
    assert minimal_descent_exponent(10, 81) == 3
    for n in range(1000, 100_001):
        assert nt.digit_map_sum(n, nt.DIGIT_SQUARES) < n


def test_stewart_bound_trivial():
    zero = nt.DigitFunction(2, (0, 0))
    assert nt.stewart_bound(zero) == 1


def test_stewart_bound_fourth_powers():
    r0 = minimal_descent_exponent(10, 6561)
    assert nt.stewart_bound(nt.DIGIT_FOURTH_POWERS) == 10 ** r0 == 100_000
    for n in range(100_000, 200_001):
        assert nt.digit_map_sum(n, nt.DIGIT_FOURTH_POWERS) < n


def canonical(cycle):
    i = cycle.index(min(cycle))
    return tuple(cycle[i:]) + tuple(cycle[:i])


def test_enumerate_cycles_digit_squares():
    cs = nt.enumerate_cycles(lambda n: nt.digit_map_sum(n, nt.DIGIT_SQUARES),
                             nt.stewart_bound(nt.DIGIT_SQUARES))
    assert set(cs.cycles) == {canonical([1]),
                              canonical([4, 16, 37, 58, 89, 145, 42, 20])}
    assert cs.bound == 1000


def test_enumerate_cycles_fourth_powers():
    cs = nt.enumerate_cycles(
        lambda n: nt.digit_map_sum(n, nt.DIGIT_FOURTH_POWERS),
        nt.stewart_bound(nt.DIGIT_FOURTH_POWERS))
    expected = {canonical([1]), canonical([1634]), canonical([8208]),
                canonical([9474]), canonical([2178, 6514]),
                canonical([13139, 6725, 4338, 4514, 1138, 4179, 9219])}
    assert set(cs.cycles) == expected


def test_enumerate_cycles_digit_sum_square():
    cs = nt.enumerate_cycles(nt.digit_sum_square, 10_000)
    assert set(cs.cycles) == {(1,), (81,), (169, 256)}


def test_enumerate_cycles_shifted_digit_product():
    cs = nt.enumerate_cycles(nt.shifted_digit_product, 10_000)
    assert set(cs.cycles) == {canonical([2, 3, 4, 5, 6, 7, 8, 9, 10]), (18,)}


def test_cycles_are_sorted_and_closed():
    cs = nt.enumerate_cycles(
        lambda n: nt.digit_map_sum(n, nt.DIGIT_FOURTH_POWERS), 100_000)
    heads = [c[0] for c in cs.cycles]
    assert heads == sorted(heads)
    for cycle in cs.cycles:
        assert cycle[0] == min(cycle)
        for i, v in enumerate(cycle):
            assert nt.digit_map_sum(v, nt.DIGIT_FOURTH_POWERS) \
                == cycle[(i + 1) % len(cycle)]


def test_enumerate_cycles_orbit_cap():
    with pytest.raises(DepthExceeded):
        nt.enumerate_cycles(lambda n: n + 1, 10, orbit_cap=500)


# ---------------------------------------------------------------------------
# Hyperbinary counting
# ---------------------------------------------------------------------------

def naive_hyperbinary(n):
    if n == 0:
        return 1
    if n % 2:
        return naive_hyperbinary(n // 2)
    return naive_hyperbinary(n // 2) + naive_hyperbinary(n // 2 - 1)


def test_calkin_wilf_reference_values():
    assert nt.calkin_wilf(0) == 1
    assert [nt.calkin_wilf(n) for n in range(5, 12)] == [2, 3, 1, 4, 3, 5, 2]


def test_calkin_wilf_matches_naive_recursion():
    table = nt.calkin_wilf_range(200)
    assert table == [naive_hyperbinary(n) for n in range(200)]


def test_calkin_wilf_descent():
    table = nt.calkin_wilf_range(100_001)
    for n in range(5, 100_001):
        assert 2 * table[n] <= n


def test_calkin_wilf_domain():
    with pytest.raises(DomainError):
        nt.calkin_wilf(-1)
    assert nt.calkin_wilf_range(0) == []


# ---------------------------------------------------------------------------
# Non-descent attractors
# ---------------------------------------------------------------------------

def test_growth_attractor_identity():
    omega = nt.growth_attractor(lambda n: n)
    assert all(omega(n) for n in range(100))


def test_growth_attractor_lower_bound_variant():
    def f(n):
        m = 2 * n + 1
        return (pow(n, n, m) + 1) % m

    omega = nt.growth_attractor(f, lower=lambda n: (2 * n + 2) // 3)
    for n in range(500):
        assert omega(n) == (3 * f(n) >= 2 * n)


def test_growth_attractor_inflate_variant():
    def f(n):
        return n // 3

    omega = nt.growth_attractor(f, inflate=lambda n: 3 * n + 2)
    for n in range(200):
        assert omega(n) == (3 * f(n) + 2 >= n)


def test_growth_attractor_strictly_decreasing_map():
    omega = nt.growth_attractor(lambda n: 0 if n == 0 else n - 1)
    assert omega(0)
    assert not any(omega(n) for n in range(1, 100))


def test_growth_attractor_rejects_both_variants():
    with pytest.raises(ValueError):
        nt.growth_attractor(lambda n: n, lower=lambda n: n,
                            inflate=lambda n: n)


def test_power_mod_orbits_terminate():
    # every orbit of the modular self-power map must reach its attractor
    cache = {}

    def f(n):
        if n not in cache:
            m = 2 * n + 1
            cache[n] = (pow(n, n, m) + 1) % m
        return cache[n]

    omega = nt.growth_attractor(f, lower=lambda n: (2 * n + 2) // 3)
    for start in range(10_001):
        cur, steps = start, 0
        while not omega(cur):
            cur = f(cur)
            steps += 1
            assert steps < 100_000
