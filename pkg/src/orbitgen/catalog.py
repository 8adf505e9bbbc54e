"""Named registry of generator systems with golden reference tables.

Each entry binds a parameterless system builder to the enumeration order
its reference table uses and to a fixture file holding that table
(``fixtures/<name>.txt``, 40 space-separated integers per line).  The
comparison in :func:`verify` is on parsed integers, so fixtures can be
pasted from their source unmodified.
"""

from __future__ import annotations

import dataclasses
from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import Callable

from . import numtheory as nt
from .core import CoupledSystem, OutputValue, State, evaluate_range
from .errors import UnknownSystem
from .finfield import MobiusMap, PrimeField, mobius_step

__all__ = [
    "SystemSpec",
    "VerifyReport",
    "list_systems",
    "get",
    "build",
    "load_golden",
    "verify",
    "register_system",
    "default_fixtures_dir",
]


@dataclass(frozen=True)
class SystemSpec:
    """Catalog entry: how to build a system and how to check its output.

    ``states(k)`` yields the first k states in the reference table's
    order; ``golden_len`` is the length of the stored table (0 when no
    table is printed for the system).  ``caveat`` flags entries whose
    semantics rest on a conjecture or whose source material needed
    disambiguation.
    """

    name: str
    description: str
    builder: Callable[[], CoupledSystem]
    states: Callable[[int], list[State]]
    golden_len: int
    alphabet: int
    caveat: str | None = None

    @property
    def default_count(self) -> int:
        return self.golden_len or 320


@dataclass(frozen=True)
class VerifyReport:
    """Outcome of one golden-table comparison."""

    name: str
    total: int
    matched: int
    first_mismatch: int | None = None
    computed: OutputValue | None = None
    expected: OutputValue | None = None

    @property
    def ok(self) -> bool:
        return self.first_mismatch is None and self.matched == self.total


_REGISTRY: dict[str, SystemSpec] = {}


def register_system(spec: SystemSpec) -> None:
    """Add a system to the registry (also the hook for user systems)."""
    if spec.name in _REGISTRY:
        raise ValueError(f"system {spec.name!r} already registered")
    _REGISTRY[spec.name] = spec


def list_systems() -> list[SystemSpec]:
    """All registered systems, in registration order."""
    return list(_REGISTRY.values())


def get(name: str) -> SystemSpec:
    try:
        return _REGISTRY[name]
    except KeyError:
        raise UnknownSystem(name) from None


def build(name: str, count: int | None = None,
          max_depth: int | None = None) -> tuple[CoupledSystem, list[State]]:
    """Instantiate a catalog system and its enumeration.

    ``count`` defaults to the golden-table length; ``max_depth``
    overrides the builder's search cap (which can break
    conjecture-dependent systems if set too low).
    """
    spec = get(name)
    system = spec.builder()
    if max_depth is not None:
        system = dataclasses.replace(system, max_depth=max_depth)
    return system, spec.states(count if count is not None else spec.default_count)


def default_fixtures_dir() -> Path:
    return Path(str(resources.files(__package__) / "fixtures"))


def load_golden(name: str, fixtures_dir: str | Path | None = None) -> list[int]:
    """Parsed golden table for a system (whitespace-separated integers)."""
    spec = get(name)
    if spec.golden_len == 0:
        raise ValueError(f"system {name!r} has no golden table")
    directory = Path(fixtures_dir) if fixtures_dir is not None else default_fixtures_dir()
    text = (directory / f"{name}.txt").read_text()
    return [int(tok) for tok in text.split()]


def verify(name: str, fixtures_dir: str | Path | None = None,
           max_depth: int | None = None) -> VerifyReport:
    """Compare a system's generated values against its golden table.

    DepthExceeded from the underlying evaluation propagates to the
    caller with the offending state attached.
    """
    golden = load_golden(name, fixtures_dir)
    system, states = build(name, count=len(golden), max_depth=max_depth)
    computed = evaluate_range(system, states)
    matched = sum(1 for a, b in zip(computed, golden) if a == b)
    for i, (got, want) in enumerate(zip(computed, golden)):
        if got != want:
            return VerifyReport(name, len(golden), matched, i, got, want)
    return VerifyReport(name, len(golden), matched)


# ---------------------------------------------------------------------------
# Builders
# ---------------------------------------------------------------------------

def _flip(y: int) -> int:
    return 1 - y


def _from_zero(count: int) -> list[State]:
    return list(range(count))


def _from_one(count: int) -> list[State]:
    return list(range(1, count + 1))


def _from_two(count: int) -> list[State]:
    return list(range(2, count + 2))


def _build_piecewise_mod3() -> CoupledSystem:
    def step(n: int) -> int:
        r = n % 3
        if r == 0:
            return n // 3
        if r == 1:
            return (n + 1) // 2
        return n - 2

    return CoupledSystem(step=step, in_attractor=lambda n: n <= 3,
                         out_step=_flip, seed=lambda n: n % 2)


def _build_tau() -> CoupledSystem:
    return CoupledSystem(step=nt.divisor_count,
                         in_attractor=lambda n: n == 2,
                         out_step=_flip, seed=lambda n: 0)


def _build_sigma_minus_one() -> CoupledSystem:
    cache: dict[int, int] = {}

    def step(n: int) -> int:
        v = cache.get(n)
        if v is None:
            v = nt.divisor_sum(n) - 1
            cache[n] = v
        return v

    return CoupledSystem(step=step, in_attractor=nt.is_prime,
                         out_step=lambda y: (3 * y + 2) % 5,
                         seed=lambda n: n % 5, max_depth=5000)


def _build_pair_map() -> CoupledSystem:
    return CoupledSystem(step=lambda s: nt.pair_step(*s),
                         in_attractor=lambda s: s[0] == s[1],
                         out_step=lambda y: (3 * y + 1) % 4,
                         seed=lambda s: (3 * s[0] + 2) % 4)


def _pair_states(count: int) -> list[State]:
    return [(i // 40, i % 40) for i in range(count)]


def _build_thue_morse() -> CoupledSystem:
    return CoupledSystem(step=lambda n: n + 1 if n % 2 == 0 else n // 2,
                         in_attractor=lambda n: n == 0,
                         out_step=_flip, seed=lambda n: 0)


def _build_collatz_greatest_divisor() -> CoupledSystem:
    def step(n: int) -> int:
        return 1 if n == 1 else n - nt.greatest_proper_divisor(n)

    return CoupledSystem(step=step, in_attractor=lambda n: n == 1,
                         out_step=_flip, seed=lambda n: 0)


def _build_smallest_divisor() -> CoupledSystem:
    def step(n: int) -> int:
        return n if n <= 1 else n - nt.least_nontrivial_divisor(n)

    return CoupledSystem(step=step, in_attractor=lambda n: n <= 1,
                         out_step=_flip, seed=lambda n: n)


def _build_digit_squares() -> CoupledSystem:
    return CoupledSystem(step=lambda n: nt.digit_map_sum(n, nt.DIGIT_SQUARES),
                         in_attractor=lambda n: n in (1, 37),
                         out_step=_flip, seed=lambda n: n % 2)


_FOURTH_POWER_OMEGA = frozenset({1, 1634, 8208, 9474, 2178, 1138})


def _build_digit_fourth_powers() -> CoupledSystem:
    return CoupledSystem(
        step=lambda n: nt.digit_map_sum(n, nt.DIGIT_FOURTH_POWERS),
        in_attractor=_FOURTH_POWER_OMEGA.__contains__,
        out_step=_flip, seed=lambda n: n % 2)


def _build_digit_sum_square() -> CoupledSystem:
    return CoupledSystem(step=nt.digit_sum_square,
                         in_attractor=lambda n: n in (1, 81, 169),
                         out_step=_flip, seed=lambda n: n % 2)


def _build_shifted_digit_product() -> CoupledSystem:
    return CoupledSystem(step=nt.shifted_digit_product,
                         in_attractor=lambda n: n in (18, 2),
                         out_step=_flip, seed=lambda n: n % 2)


def _build_power_mod() -> CoupledSystem:
    cache: dict[int, int] = {}

    def step(n: int) -> int:
        v = cache.get(n)
        if v is None:
            m = 2 * n + 1
            v = (pow(n, n, m) + 1) % m
            cache[n] = v
        return v

    omega = nt.growth_attractor(step, lower=lambda n: (2 * n + 2) // 3)
    return CoupledSystem(step=step, in_attractor=omega,
                         out_step=_flip, seed=lambda n: n % 2)


def _build_cubic_mod() -> CoupledSystem:
    # stated on n >= 2 but can land below; evaluated over all of N, where
    # the non-descent attractor still absorbs every orbit
    def step(n: int) -> int:
        return (13 * n * (n - 1) * (n - 2) + n * (n - 1) // 2) % (n + 1)

    return CoupledSystem(step=step, in_attractor=nt.growth_attractor(step),
                         out_step=_flip, seed=lambda n: n % 2)


def _build_block_lcg() -> CoupledSystem:
    return CoupledSystem(step=nt.block_lcg_step,
                         in_attractor=lambda n: n >= 1 and n & (n - 1) == 0,
                         out_step=lambda y: (y + 1) % 3,
                         seed=lambda n: n % 3)


def _build_calkin_wilf() -> CoupledSystem:
    cache: dict[int, int] = {}

    def step(n: int) -> int:
        v = cache.get(n)
        if v is None:
            v = nt.calkin_wilf(n)
            cache[n] = v
        return v

    return CoupledSystem(step=step, in_attractor=lambda n: n in (1, 2),
                         out_step=_flip, seed=lambda n: n % 2)


_GF1907_OMEGA = frozenset({1, 100, 900})


def _build_mobius_gf1907() -> CoupledSystem:
    field = PrimeField(1907)
    m = MobiusMap(field(3), field(2), field(5), field(1))
    return CoupledSystem(step=lambda t: mobius_step(m, t),
                         in_attractor=lambda t: t.value in _GF1907_OMEGA,
                         out_step=_flip, seed=lambda t: 0)


def _gf1907_states(count: int) -> list[State]:
    if count > 1907:
        raise ValueError("GF(1907) has only 1907 states")
    field = PrimeField(1907)
    return [field(i) for i in range(count)]


def _register_all() -> None:
    entries = [
        SystemSpec("ex3_3_piecewise_mod3",
                   "bit sequence from a piecewise mod-3 descent map",
                   _build_piecewise_mod3, _from_zero, 320, 2),
        SystemSpec("ex3_5_tau",
                   "divisor-count iteration descending to 2",
                   _build_tau, _from_two, 320, 2),
        SystemSpec("ex3_7_sigma_minus_one",
                   "divisor-sum-minus-one iteration stopping at primes",
                   _build_sigma_minus_one, _from_two, 320, 5,
                   caveat="conjecture-dependent: orbits are believed, not "
                          "proven, to always reach a prime; depth-capped "
                          "at 5000"),
        SystemSpec("ex3_9_pair_map",
                   "symmetric matrix from the difference/midpoint pair map",
                   _build_pair_map, _pair_states, 320, 4),
        SystemSpec("ex3_11_thue_morse",
                   "Thue-Morse sequence via parity-splitting descent",
                   _build_thue_morse, _from_zero, 0, 2),
        SystemSpec("ex3_12_collatz_greatest_divisor",
                   "subtract-greatest-proper-divisor iteration",
                   _build_collatz_greatest_divisor, _from_one, 320, 2),
        SystemSpec("ex3_13_smallest_divisor",
                   "subtract-least-prime-factor iteration absorbed at {0,1}",
                   _build_smallest_divisor, _from_zero, 320, 2,
                   caveat="sources differ on the step below 2 (identity vs "
                          "constant 1); outputs agree either way, identity "
                          "implemented"),
        SystemSpec("ex3_15_digit_squares",
                   "base-10 digit-squares iteration absorbed at {1,37}",
                   _build_digit_squares, _from_one, 240, 2),
        SystemSpec("ex3_18_digit_fourth_powers",
                   "base-10 digit-fourth-powers iteration",
                   _build_digit_fourth_powers, _from_one, 320, 2),
        SystemSpec("ex3_19_digit_sum_square",
                   "squared-digit-sum iteration absorbed at {1,81,169}",
                   _build_digit_sum_square, _from_one, 320, 2,
                   caveat="reference erratum: the printed grid duplicates "
                          "the digit-fourth-powers table; fixture "
                          "regenerated from the definition"),
        SystemSpec("ex3_20_shifted_digit_product",
                   "shifted-digit-product iteration absorbed at {18,2}",
                   _build_shifted_digit_product, _from_one, 320, 2),
        SystemSpec("ex3_24_power_mod",
                   "modular self-power map with 3*f(n) >= 2*n attractor",
                   _build_power_mod, _from_zero, 320, 2),
        SystemSpec("ex3_25_cubic_mod",
                   "cubic congruential map with non-descent attractor",
                   _build_cubic_mod, _from_two, 320, 2,
                   caveat="source formula precedence is ambiguous; the "
                          "whole-expression-mod reading reproduces the "
                          "reference table"),
        SystemSpec("ex3_28_block_lcg",
                   "blockwise congruential map on dyadic intervals",
                   _build_block_lcg, _from_one, 320, 3),
        SystemSpec("ex3_31_calkin_wilf",
                   "hyperbinary-count iteration absorbed at {1,2}",
                   _build_calkin_wilf, _from_zero, 320, 2,
                   caveat="reference header lists attractor {0,1}, which "
                          "the orbit of 2 never reaches (2 is a fixed "
                          "point); {1,2} reproduces the table and is used"),
        SystemSpec("ex4_5_mobius_gf1907",
                   "full-cycle fractional-linear map on GF(1907)",
                   _build_mobius_gf1907, _gf1907_states, 320, 2),
    ]
    for spec in entries:
        register_system(spec)


_register_all()
