"""Pythagorean triples and Pythagorean rationals.

Every triple is ``a = d(m^2 - n^2)``, ``b = 2dmn``, ``c = d(m^2 + n^2)`` with
``m > n >= 1``, ``gcd(m, n) == 1`` and ``m + n`` odd.  Legs are always kept
in that order (odd leg first for primitive triples).

A Pythagorean rational is a reduced fraction a/b whose numerator and
denominator are the legs of a primitive Pythagorean triangle.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import List

from .exact import Rational, isqrt


class ValidationError(ValueError):
    """Input violates a documented precondition."""


class NotPythagoreanError(ValidationError):
    """a/b is a valid fraction but a^2 + b^2 is not a perfect square."""

    def __init__(self, a: int, b: int):
        self.a = a
        self.b = b
        self.sum_of_squares = a * a + b * b
        super().__init__(
            f"{a}/{b} is not a Pythagorean rational: "
            f"{a}² + {b}² = {self.sum_of_squares} is not a perfect square"
        )


def _check_params(d: int, m: int, n: int) -> None:
    for name, value in (("d", d), ("m", m), ("n", n)):
        if isinstance(value, bool) or not isinstance(value, int):
            raise ValidationError(f"{name} must be an integer, got {value!r}")
    if d < 1:
        raise ValidationError(f"d must be >= 1 (got d={d})")
    if n < 1:
        raise ValidationError(f"n must be >= 1 (got n={n})")
    if m <= n:
        raise ValidationError(f"m must exceed n (got m={m}, n={n})")
    if math.gcd(m, n) != 1:
        raise ValidationError(f"m and n must be coprime (gcd({m}, {n}) = {math.gcd(m, n)})")
    if (m + n) % 2 == 0:
        raise ValidationError(f"m and n must have opposite parity (got m={m}, n={n})")


@dataclass(frozen=True)
class PythTriple:
    a: int
    b: int
    c: int
    d: int
    m: int
    n: int

    @property
    def primitive(self) -> bool:
        return self.d == 1

    @property
    def ratio(self) -> "PythRational":
        """The Pythagorean rational a/b of this triple, reduced."""
        return pyth_rational(self.a, self.b)

    def as_row(self) -> tuple:
        """Columns in table order: d, m, n, a, b, c."""
        return (self.d, self.m, self.n, self.a, self.b, self.c)


@dataclass(frozen=True)
class PythRational:
    """Reduced fraction a/b with a^2 + b^2 = c^2.

    Construct through :func:`pyth_rational`; the constructor only checks the
    invariants and does not reduce.
    """

    a: int
    b: int
    c: int

    def __post_init__(self):
        if self.a < 1 or self.b < 1 or self.c < 1:
            raise ValidationError(f"legs and hypotenuse must be positive: {self.a}, {self.b}, {self.c}")
        if math.gcd(self.a, self.b) != 1:
            raise ValidationError(f"{self.a}/{self.b} is not reduced")
        if self.a * self.a + self.b * self.b != self.c * self.c:
            raise ValidationError(f"{self.a}² + {self.b}² != {self.c}²")

    @property
    def value(self) -> Rational:
        return Fraction(self.a, self.b)

    def reciprocal(self) -> "PythRational":
        return PythRational(self.b, self.a, self.c)

    def __str__(self) -> str:
        return f"{self.a}/{self.b} (c={self.c})"


def triple_from_params(d: int, m: int, n: int) -> PythTriple:
    _check_params(d, m, n)
    mm, nn = m * m, n * n
    triple = PythTriple(a=d * (mm - nn), b=d * 2 * m * n, c=d * (mm + nn), d=d, m=m, n=n)
    assert triple.a**2 + triple.b**2 == triple.c**2
    return triple


def enumerate_primitive(max_m: int) -> List[PythTriple]:
    """All primitive triples with ``m <= max_m``, ordered by (m, n)."""
    if max_m < 1:
        raise ValidationError(f"max_m must be >= 1 (got {max_m})")
    return [
        triple_from_params(1, m, n)
        for m in range(2, max_m + 1)
        for n in range(1, m)
        if (m + n) % 2 == 1 and math.gcd(m, n) == 1
    ]


def pyth_rational(p: int, q: int) -> PythRational:
    """Reduce p/q and accept it if numerator and denominator are Pythagorean legs.

    An integer value (denominator 1) is never accepted since a^2 + 1 is not a
    square for a > 0.
    """
    for value in (p, q):
        if isinstance(value, bool) or not isinstance(value, int):
            raise ValidationError(f"numerator and denominator must be integers, got {value!r}")
    if p <= 0 or q <= 0:
        raise ValidationError(f"numerator and denominator must be positive (got {p}/{q})")
    g = math.gcd(p, q)
    a, b = p // g, q // g
    c, exact = isqrt(a * a + b * b)
    if not exact:
        raise NotPythagoreanError(a, b)
    return PythRational(a, b, c)


def reciprocal(r: PythRational) -> PythRational:
    return r.reciprocal()


def _slope_for(m: int) -> Rational:
    return Fraction(m * m - 1, 2 * m)


def exceeding_slope(bound: Rational) -> PythRational:
    """Smallest member of the family (m^2 - 1)/(2m), m even, that exceeds *bound*.

    These are the a/b ratios of the primitive triples with n = 1, and they
    grow without limit, so the search always terminates.
    """
    bound = Fraction(bound)
    if bound < 0:
        raise ValidationError(f"bound must be nonnegative (got {bound})")
    # (m^2 - 1)/(2m) > p/q  <=>  m > (p + sqrt(p^2 + q^2)) / q; start just below the root
    p, q = bound.numerator, bound.denominator
    root, _ = isqrt(p * p + q * q)
    m = max(2, (p + root) // q - 2)
    m -= m % 2
    while m > 2 and _slope_for(m) > bound:
        m -= 2
    while _slope_for(m) <= bound:
        m += 2
    return pyth_rational(m * m - 1, 2 * m)


def pythagorean_number(d: int, m: int, n: int) -> int:
    """Area d^2 * m * n * (m^2 - n^2) of the triangle with parameters (d, m, n)."""
    _check_params(d, m, n)
    return d * d * m * n * (m * m - n * n)
