"""The eight triangles of a pair of Pythagorean rationals, and catalogs of them.

For distinct Pythagorean rationals r and s, each of r, s, 1/r, 1/s can serve
as a slope magnitude.  The eight members use these (m1, -m2) magnitude pairs,
in order:

    1: (r, s)      2: (r, 1/s)    3: (s, r)      4: (s, 1/r)
    5: (1/r, s)    6: (1/r, 1/s)  7: (1/s, r)    8: (1/s, 1/r)

Swapping the two magnitudes reflects the triangle in the x-axis, so members
pair up as {1, 3}, {2, 7}, {4, 5}, {6, 8} whenever the four magnitudes are
distinct.  Congruence is decided by comparing sorted side triples (SSS), which
also handles s == 1/r where more members coincide.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from math import comb
from typing import Iterable, Iterator, List, NamedTuple, Optional, Tuple

from .exact import Rational
from .pythagorean import PythRational, PythTriple, ValidationError, enumerate_primitive
from .triangle import RationalTriangle, construct

CongruenceKey = Tuple[Rational, Rational, Rational]


class CongruenceClass(NamedTuple):
    members: Tuple[int, ...]  # 1-based member indices
    key: CongruenceKey


@dataclass(frozen=True)
class TriangleFamily:
    r: PythRational
    s: PythRational
    members: Tuple[RationalTriangle, ...]
    classes: Tuple[CongruenceClass, ...]


@dataclass(frozen=True)
class Catalog:
    max_m: int
    triples: Tuple[PythTriple, ...]
    pair_count: int
    triangle_count: int
    class_count: int
    families: Optional[Tuple[TriangleFamily, ...]] = None


def slope_pairs(r: PythRational, s: PythRational) -> List[Tuple[PythRational, PythRational]]:
    """The eight (m1, |m2|) choices in member order."""
    ri, si = r.reciprocal(), s.reciprocal()
    return [(r, s), (r, si), (s, r), (s, ri), (ri, s), (ri, si), (si, r), (si, ri)]


def canonical_key(t: RationalTriangle) -> CongruenceKey:
    return tuple(sorted(t.sides))


def _partition(members: Iterable[RationalTriangle]) -> Tuple[CongruenceClass, ...]:
    groups = {}
    for index, t in enumerate(members, start=1):
        groups.setdefault(canonical_key(t), []).append(index)
    # dicts keep insertion order, so classes come out ordered by smallest index
    return tuple(CongruenceClass(tuple(ix), key) for key, ix in groups.items())


def eight_triangles(r: PythRational, s: PythRational) -> TriangleFamily:
    if r == s:
        raise ValidationError(f"distinct Pythagorean rationals required (got {r.value} twice)")
    members = tuple(construct(m1, m2) for m1, m2 in slope_pairs(r, s))
    return TriangleFamily(r=r, s=s, members=members, classes=_partition(members))


def congruence_classes(f: TriangleFamily) -> List[CongruenceClass]:
    return list(_partition(f.members))


def catalog_pairs(triples: Iterable[PythTriple]) -> Iterator[Tuple[PythRational, PythRational]]:
    """Unordered pairs of rows in row order, the earlier row supplying r."""
    rationals = [t.ratio for t in triples]
    return itertools.combinations(rationals, 2)


def _evaluate(pair: Tuple[PythRational, PythRational]) -> TriangleFamily:
    return eight_triangles(*pair)


def iter_families(max_m: int, workers: int = 1) -> Iterator[TriangleFamily]:
    """Families of every catalog pair, yielded lazily in pair order.

    With ``workers > 1`` pairs are evaluated in a process pool; the output
    order is unchanged.
    """
    pairs = catalog_pairs(enumerate_primitive(max_m))
    if workers <= 1:
        yield from map(_evaluate, pairs)
        return
    with ProcessPoolExecutor(max_workers=workers) as pool:
        yield from pool.map(_evaluate, pairs, chunksize=16)


def enumerate_catalog(max_m: int, full: bool = False, workers: int = 1) -> Catalog:
    """Count (and with *full*, keep) the families of all primitive triples with m <= max_m."""
    triples = tuple(enumerate_primitive(max_m))
    kept = [] if full else None
    pair_count = class_count = 0
    for family in iter_families(max_m, workers=workers):
        pair_count += 1
        class_count += len(family.classes)
        if kept is not None:
            kept.append(family)
    assert pair_count == comb(len(triples), 2)
    return Catalog(
        max_m=max_m,
        triples=triples,
        pair_count=pair_count,
        triangle_count=8 * pair_count,
        class_count=class_count,
        families=None if kept is None else tuple(kept),
    )
