"""Number-theoretic step maps, digit machinery, and cycle enumeration.

Everything here is a pure function of its arguments; there is no shared
mutable state, so concurrent use is safe.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from math import gcd
from typing import Callable

from .errors import DepthExceeded, DomainError

__all__ = [
    "DigitFunction",
    "CycleSet",
    "DIGIT_SQUARES",
    "DIGIT_FOURTH_POWERS",
    "divisor_count",
    "divisor_sum",
    "greatest_proper_divisor",
    "least_nontrivial_divisor",
    "is_prime",
    "factorize",
    "digits",
    "digit_map_sum",
    "digit_sum_square",
    "shifted_digit_product",
    "stewart_bound",
    "enumerate_cycles",
    "calkin_wilf",
    "calkin_wilf_range",
    "growth_attractor",
    "lcg_is_cyclic",
    "block_lcg_step",
    "pair_step",
]


# ---------------------------------------------------------------------------
# Primality and factorization
# ---------------------------------------------------------------------------

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47,
                 53, 59, 61, 67, 71, 73, 79, 83, 89, 97)

# Strong-pseudoprime witnesses proven exact for n < 3.317e24 (covers well
# beyond 2**64); above that bound the same bases plus the remaining small
# primes are used, which has no known counterexample.
_MR_PROVEN_BOUND = 3_317_044_064_679_887_385_961_981
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)


def is_prime(n: int) -> bool:
    """Deterministic primality test (exact below 3.3e24)."""
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n == p:
            return True
        if n % p == 0:
            return False
    d, r = n - 1, 0
    while d % 2 == 0:
        d //= 2
        r += 1
    witnesses = _MR_WITNESSES if n < _MR_PROVEN_BOUND else _SMALL_PRIMES
    for a in witnesses:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _brent_rho(n: int, rng: random.Random) -> int:
    """Find a nontrivial factor of composite odd n (Brent's cycle variant)."""
    while True:
        y = rng.randrange(1, n)
        c = rng.randrange(1, n)
        m = 128
        g = r = q = 1
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = gcd(q, n)
                k += m
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = gcd(abs(x - ys), n)
        if g != n:
            return g


def factorize(n: int) -> dict[int, int]:
    """Prime factorization of n >= 1 as {prime: exponent}."""
    if n < 1:
        raise DomainError(f"cannot factorize {n}")
    fac: dict[int, int] = {}
    for p in _SMALL_PRIMES:
        while n % p == 0:
            fac[p] = fac.get(p, 0) + 1
            n //= p
    d = 101
    while d * d <= n and d < 10_000:
        while n % d == 0:
            fac[d] = fac.get(d, 0) + 1
            n //= d
        d += 2
    if n == 1:
        return fac
    # remaining part has no factor < 10^4; split it with Pollard rho
    rng = random.Random(n)  # deterministic per input, no global state
    stack = [n]
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if is_prime(m):
            fac[m] = fac.get(m, 0) + 1
            continue
        d = _brent_rho(m, rng)
        stack.append(d)
        stack.append(m // d)
    return fac


# ---------------------------------------------------------------------------
# Divisor functions
# ---------------------------------------------------------------------------

def divisor_count(n: int) -> int:
    """Number of positive divisors of n >= 1."""
    if n < 1:
        raise DomainError(f"divisor_count undefined for {n}")
    count = 1
    for e in factorize(n).values():
        count *= e + 1
    return count


def divisor_sum(n: int) -> int:
    """Sum of all positive divisors of n >= 1."""
    if n < 1:
        raise DomainError(f"divisor_sum undefined for {n}")
    total = 1
    for p, e in factorize(n).items():
        total *= (p ** (e + 1) - 1) // (p - 1)
    return total


def least_nontrivial_divisor(n: int) -> int:
    """Smallest divisor != 1 of n >= 2, i.e. the least prime factor."""
    if n < 2:
        raise DomainError(f"least_nontrivial_divisor undefined for {n}")
    for p in _SMALL_PRIMES:
        if n % p == 0:
            return p
    d = 101
    while d * d <= n and d < 1_000_000:
        if n % d == 0:
            return d
        d += 2
    if d * d > n:
        return n
    return min(factorize(n))


def greatest_proper_divisor(n: int) -> int:
    """Largest divisor < n of n >= 2; equals n / least prime factor."""
    if n < 2:
        raise DomainError(f"greatest_proper_divisor undefined for {n}")
    return n // least_nontrivial_divisor(n)


# ---------------------------------------------------------------------------
# Digit machinery
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class DigitFunction:
    """A per-digit weight table for base-b digit sums.

    ``table[a]`` is the value assigned to digit ``a``; the induced map on
    positive integers is :func:`digit_map_sum`.
    """

    base: int
    table: tuple[int, ...]

    def __post_init__(self):
        if self.base < 2:
            raise DomainError(f"base must be >= 2, got {self.base}")
        if len(self.table) != self.base:
            raise DomainError(
                f"table length {len(self.table)} != base {self.base}")
        if any(v < 0 for v in self.table):
            raise DomainError("table values must be nonnegative")


DIGIT_SQUARES = DigitFunction(10, tuple(a * a for a in range(10)))
DIGIT_FOURTH_POWERS = DigitFunction(10, tuple(a ** 4 for a in range(10)))


def digits(n: int, base: int = 10) -> tuple[int, ...]:
    """Digits of n >= 1 in the given base, least significant first."""
    if n < 1:
        raise DomainError(f"digits undefined for {n}")
    if base < 2:
        raise DomainError(f"base must be >= 2, got {base}")
    out = []
    while n:
        n, a = divmod(n, base)
        out.append(a)
    return tuple(out)


def digit_map_sum(n: int, weights: DigitFunction) -> int:
    """Sum of weights.table over the base-b digits of n >= 1."""
    if n < 1:
        raise DomainError(f"digit_map_sum undefined for {n}")
    table, base = weights.table, weights.base
    total = 0
    while n:
        total += table[n % base]
        n //= base
    return total


def digit_sum_square(n: int) -> int:
    """Square of the base-10 digit sum of n >= 1."""
    if n < 1:
        raise DomainError(f"digit_sum_square undefined for {n}")
    s = 0
    while n:
        s += n % 10
        n //= 10
    return s * s


def shifted_digit_product(n: int) -> int:
    """Product of (digit + 1) over the base-10 digits of n >= 1."""
    if n < 1:
        raise DomainError(f"shifted_digit_product undefined for {n}")
    prod = 1
    while n:
        prod *= n % 10 + 1
        n //= 10
    return prod


def stewart_bound(weights: DigitFunction) -> int:
    """Bound n0 = b**r0 above which the digit-sum map strictly decreases.

    r0 is minimal with b**r / (r+1) > max(table) for all r >= r0; since
    that ratio is nondecreasing in r, the first r that clears the maximum
    works for all larger r.  Consequently digit_map_sum(n, weights) < n
    for every n >= n0, which confines all cycles below n0.
    """
    peak = max(weights.table)
    r = 0
    while weights.base ** r <= peak * (r + 1):
        r += 1
    return weights.base ** r


# ---------------------------------------------------------------------------
# Cycle enumeration
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CycleSet:
    """All cycles of an integer map, each rotated to start at its least element."""

    cycles: tuple[tuple[int, ...], ...]
    bound: int

    def __iter__(self):
        return iter(self.cycles)


def _rotate_to_min(cycle: list[int]) -> tuple[int, ...]:
    i = cycle.index(min(cycle))
    return tuple(cycle[i:] + cycle[:i])


def enumerate_cycles(step: Callable[[int], int], bound: int,
                     orbit_cap: int = 1_000_000) -> CycleSet:
    """Every cycle of ``step`` reachable from {1, ..., bound-1}.

    The caller guarantees that every cycle meets that range (for digit-sum
    maps, ``bound = stewart_bound(...)`` does).  Orbits may wander above
    the bound; an orbit longer than ``orbit_cap`` raises DepthExceeded,
    which signals a violated guarantee rather than a bug here.
    """
    done: set[int] = set()
    cycles: list[tuple[int, ...]] = []
    for start in range(1, bound):
        if start in done:
            continue
        path: list[int] = []
        pos: dict[int, int] = {}
        cur = start
        while cur not in done and cur not in pos:
            pos[cur] = len(path)
            path.append(cur)
            cur = step(cur)
            if len(path) > orbit_cap:
                raise DepthExceeded(start, orbit_cap, cur)
        if cur not in done:  # closed a fresh cycle on this walk
            cycles.append(_rotate_to_min(path[pos[cur]:]))
        done.update(path)
    cycles.sort(key=lambda c: c[0])
    return CycleSet(tuple(cycles), bound)


# ---------------------------------------------------------------------------
# Assorted step maps
# ---------------------------------------------------------------------------

def calkin_wilf_range(limit: int) -> list[int]:
    """Values of the hyperbinary-counting function at 0..limit-1."""
    if limit <= 0:
        return []
    vals = [1] * limit
    for i in range(2, limit):
        half = i // 2
        vals[i] = vals[half] if i % 2 else vals[half] + vals[half - 1]
    return vals


def calkin_wilf(n: int) -> int:
    """Hyperbinary-counting function: 1, 1, 2, 1, 3, 2, 3, 1, 4, ...

    Defined by f(0) = 1, f(odd n) = f(n // 2), f(even n > 0) =
    f(n/2) + f(n/2 - 1); consecutive quotients f(n)/f(n+1) enumerate the
    positive rationals.  Computed bottom-up (the bare recursion is
    exponential); each call builds its own table, so there is no shared
    state.
    """
    if n < 0:
        raise DomainError(f"calkin_wilf undefined for {n}")
    return calkin_wilf_range(n + 1)[n]


def growth_attractor(f: Callable[[int], int],
                     lower: Callable[[int], int] | None = None,
                     inflate: Callable[[int], int] | None = None,
                     ) -> Callable[[int], bool]:
    """Membership predicate of the non-descent attractor {n | f(n) >= n}.

    Any orbit of f must hit this set: otherwise the orbit would be a
    strictly decreasing sequence of naturals.  Two relaxations widen the
    set while keeping that property: ``lower=U`` (with U(n) <= n) gives
    {n | f(n) >= U(n)}, and ``inflate=V`` (with V(n) >= n) gives
    {n | V(f(n)) >= n}.
    """
    if lower is not None and inflate is not None:
        raise ValueError("pass at most one of lower= and inflate=")
    if lower is not None:
        return lambda n: f(n) >= lower(n)
    if inflate is not None:
        return lambda n: inflate(f(n)) >= n
    return lambda n: f(n) >= n


def lcg_is_cyclic(a: int, b: int, k: int) -> bool:
    """Whether n -> (a*n + b) mod 2**k permutes {0..2**k - 1} in one cycle.

    Holds exactly when a = 1 (mod 4) and b is odd, for k >= 2.
    """
    if k < 2:
        raise DomainError(f"modulus exponent must be >= 2, got {k}")
    return a % 4 == 1 and b % 2 == 1


def block_lcg_step(n: int) -> int:
    """Step of the blockwise congruential map on positive integers.

    Writing n = 2**k + x with 0 <= x < 2**k, the image is
    2**k + ((5x + 1) mod 2**k): each dyadic block [2**k, 2**(k+1)) is
    permuted cyclically and never left.
    """
    if n < 1:
        raise DomainError(f"block_lcg_step undefined for {n}")
    block = 1 << (n.bit_length() - 1)
    x = n - block
    return block + (5 * x + 1) % block


def pair_step(a: int, b: int) -> tuple[int, int]:
    """One step of the difference/midpoint map on pairs of naturals.

    (a, 0) -> (a, a); (0, b) -> (b, b); otherwise (|a - b|, (a + b) // 2).
    Off the diagonal the larger coordinate strictly decreases, so every
    orbit reaches the diagonal.
    """
    if b == 0:
        return (a, a)
    if a == 0:
        return (b, b)
    return (abs(a - b), (a + b) // 2)
