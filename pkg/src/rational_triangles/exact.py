"""Exact integer and rational arithmetic.

Rationals are :class:`fractions.Fraction` values.  A Fraction is reduced
eagerly at construction, keeps its sign on the numerator and stores zero as
0/1, so equality and hashing are structural.  Python integers are arbitrary
precision, so no operation here can overflow.
"""

from __future__ import annotations

import math
import operator
import re
from fractions import Fraction
from typing import Optional, Tuple, Union

Rational = Fraction

_ARITH = {
    "add": operator.add,
    "sub": operator.sub,
    "mul": operator.mul,
    "div": operator.truediv,
}

_FRACTION_RE = re.compile(r"\s*([+-]?\d+)\s*(?:/\s*(\d+)\s*)?")


def _require_int(value, name: str) -> int:
    # bool is an int subclass but never a meaningful numerator
    if isinstance(value, bool) or not isinstance(value, int):
        raise TypeError(f"{name} must be an integer, got {type(value).__name__}")
    return value


def reduce(num: int, den: int) -> Rational:
    """Return num/den in lowest terms with a positive denominator.

    Raises ZeroDivisionError when ``den == 0``.
    """
    _require_int(num, "numerator")
    _require_int(den, "denominator")
    if den == 0:
        raise ZeroDivisionError(f"zero denominator in {num}/0")
    return Fraction(num, den)


def rational_arith(x: Rational, y: Rational, op: str) -> Union[Rational, int]:
    """Apply ``op`` (add, sub, mul, div or cmp) to two rationals.

    ``cmp`` returns -1, 0 or 1.  Division by zero raises ZeroDivisionError.
    """
    if op == "cmp":
        return (x > y) - (x < y)
    try:
        fn = _ARITH[op]
    except KeyError:
        raise ValueError(f"unknown operation {op!r}") from None
    return fn(Fraction(x), Fraction(y))


def isqrt(n: int) -> Tuple[int, bool]:
    """Return ``(floor(sqrt(n)), is_perfect_square)`` for ``n >= 0``."""
    _require_int(n, "n")
    if n < 0:
        raise ValueError(f"isqrt of negative number {n}")
    root = math.isqrt(n)
    return root, root * root == n


def is_rational_square(q: Rational) -> Optional[Rational]:
    """Return the nonnegative rational t with t*t == q, or None.

    A reduced fraction is a square exactly when its numerator and
    denominator both are.  Negative input yields None.
    """
    q = Fraction(q)
    if q < 0:
        return None
    num_root, num_exact = isqrt(q.numerator)
    if not num_exact:
        return None
    den_root, den_exact = isqrt(q.denominator)
    if not den_exact:
        return None
    return Fraction(num_root, den_root)


def format_rational(q: Rational) -> str:
    """Canonical ``num/den`` text; the denominator is always present."""
    q = Fraction(q)
    return f"{q.numerator}/{q.denominator}"


def parse_rational(text: str, allow_integer: bool = True) -> Rational:
    """Parse ``p/q`` (or bare ``p`` when *allow_integer*) into a Rational.

    Decimal and exponent forms are rejected; only exact integer ratios are
    accepted.
    """
    match = _FRACTION_RE.fullmatch(text)
    if match is None:
        raise ValueError(f"not a fraction: {text!r}")
    num, den = match.groups()
    if den is None:
        if not allow_integer:
            raise ValueError(f"expected p/q, got {text!r}")
        return Fraction(int(num))
    if int(den) == 0:
        raise ValueError(f"zero denominator in {text!r}")
    return Fraction(int(num), int(den))
