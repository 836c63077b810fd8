"""Exact rational triangles built from pairs of Pythagorean rationals."""

from .exact import Rational, format_rational, is_rational_square, isqrt, parse_rational, reduce
from .family import (
    Catalog,
    CongruenceClass,
    TriangleFamily,
    canonical_key,
    congruence_classes,
    eight_triangles,
    enumerate_catalog,
)
from .pythagorean import (
    NotPythagoreanError,
    PythRational,
    PythTriple,
    ValidationError,
    enumerate_primitive,
    exceeding_slope,
    pyth_rational,
    pythagorean_number,
    reciprocal,
    triple_from_params,
)
from .triangle import (
    AngleSet,
    Classification,
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
)

__version__ = "0.1.0"
