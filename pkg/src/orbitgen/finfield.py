"""Arithmetic in GF(p) and GF(p**2) for odd primes p.

Supports the full-cycle criterion for fractional-linear maps on GF(p):
the map t -> (a*t + b) / (c*t + d) (pole sent to a/c) permutes the whole
field in a single cycle exactly when the ratio of the eigenvalues of
[[a, b], [c, d]] has multiplicative order p + 1 in GF(p**2).

Prime moduli only; values are immutable, so everything here is safe for
concurrent use.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .errors import (DegenerateSpectrum, DivisionByZero, NotPrime, ZeroInput)
from .numtheory import is_prime

__all__ = [
    "FieldElement",
    "ExtFieldElement",
    "PrimeField",
    "QuadraticExtension",
    "MobiusMap",
    "ext_sqrt",
    "quadratic_roots",
    "mult_order",
    "mobius_step",
    "is_full_cycle",
]


@dataclass(frozen=True, slots=True)
class FieldElement:
    """An element of GF(p), carrying its modulus.

    Build these through :class:`PrimeField`, which validates the modulus;
    arithmetic assumes 0 <= value < modulus and a prime modulus.
    """

    value: int
    modulus: int

    def _like(self, v: int) -> "FieldElement":
        return FieldElement(v % self.modulus, self.modulus)

    def _coerce(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.modulus != self.modulus:
                raise ValueError("mixed moduli")
            return other.value
        if isinstance(other, int):
            return other % self.modulus
        return NotImplemented

    def __add__(self, other):
        v = self._coerce(other)
        return NotImplemented if v is NotImplemented else self._like(self.value + v)

    __radd__ = __add__

    def __sub__(self, other):
        v = self._coerce(other)
        return NotImplemented if v is NotImplemented else self._like(self.value - v)

    def __rsub__(self, other):
        v = self._coerce(other)
        return NotImplemented if v is NotImplemented else self._like(v - self.value)

    def __mul__(self, other):
        v = self._coerce(other)
        return NotImplemented if v is NotImplemented else self._like(self.value * v)

    __rmul__ = __mul__

    def __neg__(self):
        return self._like(-self.value)

    def inverse(self) -> "FieldElement":
        if self.value == 0:
            raise DivisionByZero(f"inverse of 0 in GF({self.modulus})")
        return self._like(pow(self.value, self.modulus - 2, self.modulus))

    def __truediv__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        return self * FieldElement(v, self.modulus).inverse()

    def __rtruediv__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        return FieldElement(v, self.modulus) / self

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        return self._like(pow(self.value, e, self.modulus))

    def __bool__(self):
        return self.value != 0

    def __int__(self):
        return self.value

    def __repr__(self):
        return f"{self.value} (mod {self.modulus})"


class PrimeField:
    """GF(p) for an odd prime p; call the field to make elements."""

    def __init__(self, p: int):
        if p == 2 or not is_prime(p):
            raise NotPrime(f"modulus must be an odd prime, got {p}")
        self.p = p

    def __call__(self, value: int | FieldElement) -> FieldElement:
        if isinstance(value, FieldElement):
            if value.modulus != self.p:
                raise ValueError("mixed moduli")
            return value
        return FieldElement(value % self.p, self.p)

    def elements(self):
        """All field elements, in residue order 0..p-1."""
        return [FieldElement(v, self.p) for v in range(self.p)]

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("PrimeField", self.p))

    def __repr__(self):
        return f"GF({self.p})"

    def sqrt(self, a: FieldElement) -> FieldElement | None:
        """A square root of a in GF(p), or None if a is a non-residue.

        Uses the exponentiation shortcut for p = 3 (mod 4) and
        Tonelli-Shanks otherwise.
        """
        p, v = self.p, self(a).value
        if v == 0:
            return self(0)
        if pow(v, (p - 1) // 2, p) != 1:
            return None
        if p % 4 == 3:
            return self(pow(v, (p + 1) // 4, p))
        return self(_tonelli_shanks(v, p))


def _tonelli_shanks(n: int, p: int) -> int:
    """Square root of a known residue n mod odd prime p."""
    q, s = p - 1, 0
    while q % 2 == 0:
        q //= 2
        s += 1
    z = 2
    while pow(z, (p - 1) // 2, p) != p - 1:
        z += 1
    m, c = s, pow(z, q, p)
    t, r = pow(n, q, p), pow(n, (q + 1) // 2, p)
    while t != 1:
        t2, i = t * t % p, 1
        while t2 != 1:
            t2 = t2 * t2 % p
            i += 1
        b = pow(c, 1 << (m - i - 1), p)
        m, c = i, b * b % p
        t, r = t * c % p, r * b % p
    return r


@dataclass(frozen=True, slots=True)
class ExtFieldElement:
    """a + b*w in GF(p**2), where w**2 = d for a fixed non-residue d."""

    a: int
    b: int
    modulus: int
    d: int

    def _like(self, a: int, b: int) -> "ExtFieldElement":
        p = self.modulus
        return ExtFieldElement(a % p, b % p, p, self.d)

    def _coerce(self, other) -> "ExtFieldElement":
        if isinstance(other, ExtFieldElement):
            if (other.modulus, other.d) != (self.modulus, self.d):
                raise ValueError("mixed extension fields")
            return other
        if isinstance(other, FieldElement):
            if other.modulus != self.modulus:
                raise ValueError("mixed moduli")
            return self._like(other.value, 0)
        if isinstance(other, int):
            return self._like(other, 0)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else self._like(self.a + o.a, self.b + o.b)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else self._like(self.a - o.a, self.b - o.b)

    def __rsub__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self._like(self.a * o.a + self.b * o.b * self.d,
                          self.a * o.b + self.b * o.a)

    __rmul__ = __mul__

    def __neg__(self):
        return self._like(-self.a, -self.b)

    def inverse(self) -> "ExtFieldElement":
        # 1 / (a + b*w) = (a - b*w) / (a**2 - d*b**2); the norm is nonzero
        # for nonzero elements because d is a non-residue.
        p = self.modulus
        norm = (self.a * self.a - self.d * self.b * self.b) % p
        if norm == 0:
            raise DivisionByZero(f"inverse of 0 in GF({p}^2)")
        ninv = pow(norm, p - 2, p)
        return self._like(self.a * ninv, -self.b * ninv)

    def __truediv__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else o * self.inverse()

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        result = self._like(1, 0)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __bool__(self):
        return self.a != 0 or self.b != 0

    def in_base_field(self) -> bool:
        return self.b == 0

    def __repr__(self):
        return f"{self.a} + {self.b}*w (mod {self.modulus}, w^2={self.d})"


class QuadraticExtension:
    """GF(p**2) modeled as GF(p)[w] with w**2 = the smallest non-residue."""

    def __init__(self, base: PrimeField):
        self.base = base
        p = base.p
        d = 2
        while pow(d, (p - 1) // 2, p) != p - 1:
            d += 1
        self.d = d

    @property
    def p(self) -> int:
        return self.base.p

    def __call__(self, a: int | FieldElement, b: int | FieldElement = 0) -> ExtFieldElement:
        av = a.value if isinstance(a, FieldElement) else a
        bv = b.value if isinstance(b, FieldElement) else b
        return ExtFieldElement(av % self.p, bv % self.p, self.p, self.d)

    def __repr__(self):
        return f"GF({self.p}^2)"


def ext_sqrt(ext: QuadraticExtension,
             alpha: FieldElement) -> tuple[ExtFieldElement, ExtFieldElement]:
    """The two square roots of a nonzero base-field element in GF(p**2).

    Every nonzero alpha has exactly two roots there, negatives of each
    other; they lie in the base field exactly when alpha is a residue.
    """
    alpha = ext.base(alpha)
    if alpha.value == 0:
        raise ZeroInput("square roots of 0 are not two distinct elements")
    r = ext.base.sqrt(alpha)
    if r is not None:
        root = ext(r, 0)
    else:
        # alpha and d are both non-residues, so alpha/d is a residue and
        # alpha = (b*w)**2 with b = sqrt(alpha/d).
        b = ext.base.sqrt(alpha / ext.base(ext.d))
        root = ext(0, b)
    return root, -root


def quadratic_roots(ext: QuadraticExtension, b: FieldElement,
                    c: FieldElement) -> tuple[ExtFieldElement, ExtFieldElement]:
    """Both roots of x**2 + b*x + c over GF(p**2).

    A double root is returned twice.  The roots sum to -b and multiply
    to c.
    """
    b, c = ext.base(b), ext.base(c)
    disc = b * b - 4 * c
    half = ext.base(2).inverse()
    if disc.value == 0:
        r = ext(-b * half, 0)
        return r, r
    s1, s2 = ext_sqrt(ext, disc)
    return (s1 - ext(b)) * ext(half), (s2 - ext(b)) * ext(half)


def _trial_factor(n: int) -> dict[int, int]:
    fac: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            fac[d] = fac.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        fac[n] = fac.get(n, 0) + 1
    return fac


def mult_order(x: ExtFieldElement) -> int:
    """Least e >= 1 with x**e = 1 in GF(p**2).

    Starts from the group order p**2 - 1 (factored by plain trial
    division; moduli here are desk-scale) and strips each prime factor
    while the power stays 1.
    """
    if not x:
        raise ZeroInput("multiplicative order of 0")
    one = ExtFieldElement(1, 0, x.modulus, x.d)
    order = x.modulus ** 2 - 1
    for q in _trial_factor(order):
        while order % q == 0 and x ** (order // q) == one:
            order //= q
    return order


@dataclass(frozen=True)
class MobiusMap:
    """Invertible 2x2 matrix over GF(p) acting as t -> (a*t + b)/(c*t + d)."""

    a: FieldElement
    b: FieldElement
    c: FieldElement
    d: FieldElement

    def __post_init__(self):
        moduli = {x.modulus for x in (self.a, self.b, self.c, self.d)}
        if len(moduli) != 1:
            raise ValueError("entries must share one modulus")
        if not self.det():
            raise ValueError("matrix must be invertible")

    @property
    def modulus(self) -> int:
        return self.a.modulus

    def det(self) -> FieldElement:
        return self.a * self.d - self.b * self.c

    def trace(self) -> FieldElement:
        return self.a + self.d


def mobius_step(m: MobiusMap, t: FieldElement) -> FieldElement:
    """(a*t + b) / (c*t + d), with the pole c*t + d = 0 sent to a/c.

    When c = 0 the denominator d is never zero (the matrix is invertible),
    so the first branch is total and the map is affine.
    """
    den = m.c * t + m.d
    if den:
        return (m.a * t + m.b) / den
    return m.a / m.c


def is_full_cycle(m: MobiusMap) -> bool:
    """Whether the fractional-linear map permutes GF(p) in a single cycle.

    True exactly when the ratio of the two eigenvalues (roots of
    x**2 - trace*x + det, taken in GF(p**2)) has multiplicative order
    p + 1.
    """
    ext = QuadraticExtension(PrimeField(m.modulus))
    r1, r2 = quadratic_roots(ext, -m.trace(), m.det())
    if not r1 or not r2:
        # eigenvalues multiply to det != 0, so this cannot happen
        raise DegenerateSpectrum("zero eigenvalue on an invertible matrix")
    return mult_order(r1 / r2) == m.modulus + 1
