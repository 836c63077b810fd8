"""The triangle spanned by two rays from the origin.

Given Pythagorean rationals r1 = a1/b1 and r2 = a2/b2, draw the rays from
O(0, 0) with slopes m1 = r1 and m2 = -r2 and cut them with the line x = 1 at
A1(1, m1) and A2(1, m2).  Triangle O A1 A2 has

    |OA1| = c1/b1,  |OA2| = c2/b2,  |A1A2| = m1 - m2,  area = (m1 - m2)/2

so its sides, area, heights, angle cosines and sines and both radii are all
rational.  Angles are carried as exact (cos, sin) pairs: j1 and j2 are the
angles the rays make with the positive x-axis, j = j1 + j2 is the angle at O,
and w1, w2 are the angles at A1 and A2.

The second half of the module works on arbitrary rational side lengths and
decides rationality of the area with Heron's formula.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, NamedTuple, Optional, Tuple

from .exact import Rational, is_rational_square
from .pythagorean import PythRational, ValidationError


class TriangleInequalityError(ValidationError):
    pass


class InvariantViolation(AssertionError):
    """An exact identity failed; this indicates a bug, not bad input."""


@dataclass(frozen=True)
class RationalTriangle:
    r1: PythRational
    r2: PythRational
    side_a: Rational
    side_b: Rational
    side_g: Rational
    area: Rational

    @property
    def slopes(self) -> Tuple[Rational, Rational]:
        return self.r1.value, -self.r2.value

    @property
    def sides(self) -> Tuple[Rational, Rational, Rational]:
        return self.side_a, self.side_b, self.side_g

    @property
    def perimeter(self) -> Rational:
        return self.side_a + self.side_b + self.side_g


@dataclass(frozen=True)
class AngleSet:
    cos_j1: Rational
    sin_j1: Rational
    cos_j2: Rational
    sin_j2: Rational
    cos_j: Rational
    sin_j: Rational
    cos_w1: Rational
    sin_w1: Rational
    cos_w2: Rational
    sin_w2: Rational

    NAMES = ("j1", "j2", "j", "w1", "w2")

    def pairs(self) -> Iterator[Tuple[str, Rational, Rational]]:
        """Yield ``(name, cos, sin)`` for each of the five angles."""
        for name in self.NAMES:
            yield name, getattr(self, f"cos_{name}"), getattr(self, f"sin_{name}")


@dataclass(frozen=True)
class Classification:
    is_right: bool
    is_isosceles: bool


class RationalityVerdict(NamedTuple):
    is_rational: bool
    area: Optional[Rational]
    heron_product: Rational


def _cross(t: RationalTriangle) -> int:
    # a1*b2 + a2*b1: numerator shared by |A1A2|, area, heights and sin j
    return t.r1.a * t.r2.b + t.r2.a * t.r1.b


def construct(r1: PythRational, r2: PythRational) -> RationalTriangle:
    """Build triangle O A1 A2 for slopes ``+r1`` and ``-r2``.

    The closed-form area is checked against Heron's formula before returning.
    """
    a1, b1, c1 = r1.a, r1.b, r1.c
    a2, b2, c2 = r2.a, r2.b, r2.c
    cross = a1 * b2 + a2 * b1
    side_g = Fraction(cross, b1 * b2)
    t = RationalTriangle(
        r1=r1,
        r2=r2,
        side_a=Fraction(c1, b1),
        side_b=Fraction(c2, b2),
        side_g=side_g,
        area=side_g / 2,
    )
    if heron_area(*t.sides) != t.area:
        raise InvariantViolation(f"Heron area disagrees with closed form for {r1.value}, {r2.value}")
    return t


def heights(t: RationalTriangle) -> Tuple[Rational, Rational, Rational]:
    """Heights onto |OA1|, |OA2| and |A1A2|; the last is always 1."""
    cross = _cross(t)
    return (
        Fraction(cross, t.r1.c * t.r2.b),
        Fraction(cross, t.r2.c * t.r1.b),
        Fraction(1),
    )


def angles(t: RationalTriangle) -> AngleSet:
    a1, b1, c1 = t.r1.a, t.r1.b, t.r1.c
    a2, b2, c2 = t.r2.a, t.r2.b, t.r2.c
    return AngleSet(
        cos_j1=Fraction(b1, c1),
        sin_j1=Fraction(a1, c1),
        cos_j2=Fraction(b2, c2),
        sin_j2=Fraction(a2, c2),
        cos_j=Fraction(b1 * b2 - a1 * a2, c1 * c2),
        sin_j=Fraction(a1 * b2 + a2 * b1, c1 * c2),
        cos_w1=Fraction(a1, c1),
        sin_w1=Fraction(b1, c1),
        cos_w2=Fraction(a2, c2),
        sin_w2=Fraction(b2, c2),
    )


def circumradius(t: RationalTriangle) -> Rational:
    return Fraction(t.r1.c * t.r2.c, 2 * t.r1.b * t.r2.b)


def inradius(t: RationalTriangle) -> Rational:
    """Twice the area over the perimeter.

    In terms of the slopes this is cross / (c1*b2 + b1*c2 + cross), with no
    extra factor of 2.
    """
    return 2 * t.area / t.perimeter


def classify(t: RationalTriangle) -> Classification:
    """Right iff a1*a2 == b1*b2 (reciprocal slopes); isosceles iff r1 == r2."""
    a1, b1 = t.r1.a, t.r1.b
    a2, b2 = t.r2.a, t.r2.b
    return Classification(is_right=a1 * a2 == b1 * b2, is_isosceles=a1 * b2 == a2 * b1)


def _check_sides(a: Rational, b: Rational, g: Rational) -> Tuple[Rational, Rational, Rational]:
    a, b, g = Fraction(a), Fraction(b), Fraction(g)
    for name, value in (("a", a), ("b", b), ("g", g)):
        if value <= 0:
            raise TriangleInequalityError(f"side {name} = {value} must be positive")
    for x, y, z in ((a, b, g), (b, g, a), (a, g, b)):
        if not x + y > z:
            raise TriangleInequalityError(f"{x} + {y} > {z} violated")
    return a, b, g


def cos_from_sides(a: Rational, b: Rational, g: Rational) -> Tuple[Rational, Rational, Rational]:
    """Law of cosines: cosines of the angles opposite a, b and g."""
    a, b, g = _check_sides(a, b, g)
    aa, bb, gg = a * a, b * b, g * g
    return (
        (bb + gg - aa) / (2 * b * g),
        (aa + gg - bb) / (2 * a * g),
        (aa + bb - gg) / (2 * a * b),
    )


def heron_product(a: Rational, b: Rational, g: Rational) -> Rational:
    """(a+b+g)(-a+b+g)(a-b+g)(a+b-g), which equals 16 * area^2."""
    a, b, g = _check_sides(a, b, g)
    return (a + b + g) * (-a + b + g) * (a - b + g) * (a + b - g)


def heron_area(a: Rational, b: Rational, g: Rational) -> Optional[Rational]:
    """Exact area when it is rational, else None."""
    root = is_rational_square(heron_product(a, b, g))
    return None if root is None else root / 4


def is_rational_triangle(a: Rational, b: Rational, g: Rational) -> RationalityVerdict:
    product = heron_product(a, b, g)
    root = is_rational_square(product)
    if root is None:
        return RationalityVerdict(False, None, product)
    return RationalityVerdict(True, root / 4, product)
