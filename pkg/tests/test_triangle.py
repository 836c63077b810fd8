import re
from collections import Counter
from fractions import Fraction as F

import pytest
from hypothesis import given, settings

from rational_triangles import (
    InvariantViolation,
    RationalTriangle,
    TriangleInequalityError,
    angles,
    circumradius,
    classify,
    construct,
    cos_from_sides,
    heights,
    heron_area,
    heron_product,
    inradius,
    is_rational_triangle,
    pyth_rational,
)
from rational_triangles import triangle as triangle_module

from .conftest import pyth_rationals
from .oracles import coordinate_triangle, exact_sqrt, law_of_cosines

R34 = pyth_rational(3, 4)
R43 = pyth_rational(4, 3)
R512 = pyth_rational(5, 12)


@pytest.fixture
def worked():
    return construct(R34, R512)


def test_construct_worked_example(worked):
    assert worked.sides == (F(5, 4), F(13, 12), F(7, 6))
    assert worked.area == F(7, 12)
    assert worked.slopes == (F(3, 4), F(-5, 12))


def test_construct_reciprocal_pair_is_right():
    t = construct(R34, R43)
    assert t.sides == (F(5, 4), F(5, 3), F(25, 12))
    assert t.area == F(25, 24)
    assert t.side_a**2 + t.side_b**2 == t.side_g**2


def test_construct_equal_pair_is_isosceles():
    t = construct(R34, R34)
    assert t.sides == (F(5, 4), F(5, 4), F(3, 2))


def test_construct_rejects_heron_mismatch(monkeypatch):
    monkeypatch.setattr(triangle_module, "heron_area", lambda a, b, g: None)
    with pytest.raises(InvariantViolation):
        construct(R34, R512)


def test_heights(worked):
    assert heights(worked) == (F(14, 15), F(14, 13), F(1))
    h_a, h_b, _ = heights(construct(R34, R34))
    assert h_a == h_b == F(6, 5)


def test_angles(worked):
    a = angles(worked)
    assert (a.cos_j, a.sin_j) == (F(33, 65), F(56, 65))
    assert (a.cos_j1, a.sin_j1) == (F(4, 5), F(3, 5))
    assert (a.cos_j2, a.sin_j2) == (F(12, 13), F(5, 13))
    assert (a.cos_w1, a.sin_w1) == (F(3, 5), F(4, 5))
    assert (a.cos_w2, a.sin_w2) == (F(5, 13), F(12, 13))
    right = angles(construct(R34, R43))
    assert (right.cos_j, right.sin_j) == (0, 1)


def test_cos_j_agrees_with_law_of_cosines(worked):
    assert law_of_cosines(*worked.sides)[2] == angles(worked).cos_j


@pytest.mark.parametrize(
    "pair,expected",
    [((R34, R512), F(65, 96)), ((R34, R43), F(25, 24)), ((R34, R34), F(25, 32))],
)
def test_circumradius(pair, expected):
    t = construct(*pair)
    assert circumradius(t) == expected
    assert t.side_a * t.side_b * t.side_g / (4 * t.area) == expected


def test_circumradius_right_triangle_is_half_hypotenuse():
    t = construct(R34, R43)
    assert circumradius(t) == t.side_g / 2


@pytest.mark.parametrize(
    "pair,expected",
    [((R34, R512), F(1, 3)), ((R34, R43), F(5, 12)), ((R34, R34), F(3, 8))],
)
def test_inradius(pair, expected):
    assert inradius(construct(*pair)) == expected


def test_inradius_parameter_form(worked):
    a1, b1, c1 = 3, 4, 5
    a2, b2, c2 = 5, 12, 13
    cross = a1 * b2 + a2 * b1
    assert inradius(worked) == F(cross, c1 * b2 + b1 * c2 + cross) == F(56, 168)


def test_inradius_right_triangle_formula():
    t = construct(R34, R43)
    assert inradius(t) == (t.side_a + t.side_b - t.side_g) / 2


@pytest.mark.parametrize(
    "sides,expected",
    [
        ((F(3), F(4), F(5)), (F(4, 5), F(3, 5), F(0))),
        ((F(5, 4), F(13, 12), F(7, 6)), (F(5, 13), F(3, 5), F(33, 65))),
        ((F(1), F(1), F(1)), (F(1, 2),) * 3),
    ],
)
def test_cos_from_sides(sides, expected):
    assert cos_from_sides(*sides) == expected


@pytest.mark.parametrize(
    "sides,message",
    [
        ((F(1), F(1), F(3)), "1 + 1 > 3 violated"),
        ((F(5), F(1), F(1)), "1 + 1 > 5 violated"),
        ((F(1), F(5), F(2)), "1 + 2 > 5 violated"),
        ((F(1), F(2), F(3)), "1 + 2 > 3 violated"),
        ((F(0), F(1), F(1)), "positive"),
    ],
)
def test_triangle_inequality_errors(sides, message):
    for fn in (cos_from_sides, heron_area, is_rational_triangle):
        with pytest.raises(TriangleInequalityError, match=re.escape(message)):
            fn(*sides)


@pytest.mark.parametrize(
    "sides,expected",
    [
        ((F(5, 4), F(13, 12), F(7, 6)), F(7, 12)),
        ((F(3), F(4), F(5)), F(6)),
        ((F(1), F(1), F(1)), None),
        ((F(13), F(14), F(15)), F(84)),
    ],
)
def test_heron_area(sides, expected):
    assert heron_area(*sides) == expected


def test_heron_product_worked():
    assert heron_product(F(5, 4), F(13, 12), F(7, 6)) == F(49, 9)
    assert heron_product(F(2), F(3), F(4)) == 135


@pytest.mark.parametrize(
    "sides,rational,area",
    [
        ((F(5, 4), F(13, 12), F(7, 6)), True, F(7, 12)),
        ((F(1), F(1), F(1)), False, None),
        ((F(2), F(3), F(4)), False, None),
    ],
)
def test_is_rational_triangle(sides, rational, area):
    verdict = is_rational_triangle(*sides)
    assert verdict.is_rational is rational
    assert verdict.area == area


def test_two_three_four_product_not_square():
    assert exact_sqrt(135) is None


@pytest.mark.parametrize(
    "pair,right,isosceles",
    [((R34, R512), False, False), ((R34, R43), True, False), ((R34, R34), False, True)],
)
def test_classify(pair, right, isosceles):
    c = classify(construct(*pair))
    assert (c.is_right, c.is_isosceles) == (right, isosceles)


@settings(max_examples=150)
@given(pyth_rationals(), pyth_rationals())
def test_matches_coordinate_oracle(r1, r2):
    t = construct(r1, r2)
    sides, area = coordinate_triangle(r1.value, -r2.value)
    assert t.sides == sides
    assert t.area == area


@settings(max_examples=150)
@given(pyth_rationals(), pyth_rationals())
def test_identities(r1, r2):
    t = construct(r1, r2)
    a, b, g = t.sides
    E = t.area
    ang = angles(t)
    R = circumradius(t)

    assert exact_sqrt(heron_product(a, b, g) / 16) == E
    assert 2 * E == a * b * ang.sin_j
    assert g / ang.sin_j == a / ang.sin_w2 == b / ang.sin_w1 == 2 * R
    assert Counter(law_of_cosines(a, b, g)) == Counter([ang.cos_w2, ang.cos_w1, ang.cos_j])
    assert R * 4 * E == a * b * g
    assert R == F(r1.c * r2.c, 2 * r1.b * r2.b)
    assert inradius(t) * (a + b + g) == 2 * E
    assert inradius(t) < R
    hs = heights(t)
    assert hs[2] == 1
    assert all(h * side == 2 * E for h, side in zip(hs, t.sides))
    for _, cos, sin in ang.pairs():
        assert cos * cos + sin * sin == 1
    assert ang.cos_w1 * ang.cos_w2 - ang.sin_w1 * ang.sin_w2 == -ang.cos_j
    assert ang.sin_w1 * ang.cos_w2 + ang.sin_w2 * ang.cos_w1 == ang.sin_j
    assert ang.cos_j1 * ang.cos_j2 - ang.sin_j1 * ang.sin_j2 == ang.cos_j
    assert all(isinstance(x, F) for x in (*t.sides, E, R, inradius(t), *hs))


@settings(max_examples=150)
@given(pyth_rationals(), pyth_rationals())
def test_classification_matches_sides(r1, r2):
    t = construct(r1, r2)
    c = classify(t)
    assert c.is_right == (t.side_a**2 + t.side_b**2 == t.side_g**2)
    assert c.is_isosceles == (t.side_a == t.side_b)
    assert c.is_isosceles == (r1 == r2)
    assert c.is_right == (r1 == r2.reciprocal())


@given(pyth_rationals())
def test_reciprocal_pair_always_right(r):
    assert classify(construct(r, r.reciprocal())).is_right


def test_triangle_is_immutable(worked):
    with pytest.raises(AttributeError):
        worked.area = F(1)
    assert isinstance(worked, RationalTriangle)
