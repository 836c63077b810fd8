"""Independent reference computations used to cross-check the library.

Nothing here imports the package under test.  Triangles are rebuilt from
raw vertex coordinates O(0, 0), A1(1, m1), A2(1, m2); side lengths come from
squared distances and integer square roots, area from the shoelace formula.
"""

from fractions import Fraction
from math import gcd, isqrt


def exact_sqrt(q):
    q = Fraction(q)
    if q < 0:
        return None
    rn, rd = isqrt(q.numerator), isqrt(q.denominator)
    if rn * rn != q.numerator or rd * rd != q.denominator:
        return None
    return Fraction(rn, rd)


def coordinate_triangle(m1, m2):
    """Sides (|OA1|, |OA2|, |A1A2|) and area for slopes m1 > 0 > m2."""
    o, a1, a2 = (Fraction(0), Fraction(0)), (Fraction(1), Fraction(m1)), (Fraction(1), Fraction(m2))

    def dist2(p, q):
        return (p[0] - q[0]) ** 2 + (p[1] - q[1]) ** 2

    sides = tuple(exact_sqrt(dist2(p, q)) for p, q in ((o, a1), (o, a2), (a1, a2)))
    shoelace = (o[0] * (a1[1] - a2[1]) + a1[0] * (a2[1] - o[1]) + a2[0] * (o[1] - a1[1])) / 2
    return sides, abs(shoelace)


def law_of_cosines(a, b, g):
    """cos of the angles opposite a, b, g."""
    return (
        (b * b + g * g - a * a) / (2 * b * g),
        (a * a + g * g - b * b) / (2 * a * g),
        (a * a + b * b - g * g) / (2 * a * b),
    )


def primitive_triples_brute(max_c):
    """All primitive (a, b, c), legs in either order, by exhaustive search."""
    out = []
    for a in range(1, max_c):
        for b in range(1, max_c):
            c = isqrt(a * a + b * b)
            if c <= max_c and c * c == a * a + b * b and gcd(a, b) == 1:
                out.append((a, b, c))
    return out


def exceeding_slope_scan(bound):
    m = 2
    while Fraction(m * m - 1, 2 * m) <= bound:
        m += 2
    return Fraction(m * m - 1, 2 * m), m


def congruence_partition(side_triples):
    """Group indices (1-based) by sorted side triple, first-seen order."""
    groups = {}
    for i, sides in enumerate(side_triples, start=1):
        groups.setdefault(tuple(sorted(sides)), []).append(i)
    return sorted(groups.values(), key=min)
