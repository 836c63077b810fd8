"""Text, JSON and CSV renderings.

Every rational is written as ``num/den`` (integers as ``n/1``).  Pythagorean
rationals are JSON objects ``{"num", "den", "hyp"}``.  CSV output always has a
header row; rationals are quoted strings.
"""

from __future__ import annotations

import csv
import io
import json
import math
from typing import Iterable, List, Sequence

from .exact import format_rational as fr
from .family import Catalog, TriangleFamily, slope_pairs
from .pythagorean import PythRational, PythTriple
from .triangle import (
    RationalTriangle,
    RationalityVerdict,
    angles,
    circumradius,
    classify,
    heights,
    inradius,
)

TRIPLE_COLUMNS = ["d", "m", "n", "a", "b", "c"]
TRIANGLE_COLUMNS = ["r1", "r2", "a", "b", "g", "E", "h_a", "h_b", "h_g", "R", "r", "right", "isosceles"]
MEMBER_COLUMNS = ["r", "s", "member", "class"] + TRIANGLE_COLUMNS
CHECK_COLUMNS = ["a", "b", "g", "rational", "area", "heron_product", "area_squared", "cos_a", "cos_b", "cos_g"]


def dumps_json(obj) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"


def dumps_csv(header: Sequence[str], rows: Iterable[Sequence]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, quoting=csv.QUOTE_NONNUMERIC, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def _flag(value: bool) -> str:
    return "true" if value else "false"


def pyth_rational_json(r: PythRational) -> dict:
    return {"num": r.a, "den": r.b, "hyp": r.c}


def triple_json(t: PythTriple) -> dict:
    return dict(zip(TRIPLE_COLUMNS, t.as_row()))


def triangle_json(t: RationalTriangle) -> dict:
    cls = classify(t)
    angle_set = angles(t)
    named = {}
    for name, cos, sin in angle_set.pairs():
        named[f"cos_{name}"] = fr(cos)
        named[f"sin_{name}"] = fr(sin)
    return {
        "r1": pyth_rational_json(t.r1),
        "r2": pyth_rational_json(t.r2),
        "sides": [fr(x) for x in t.sides],
        "area": fr(t.area),
        "heights": [fr(h) for h in heights(t)],
        "angles": named,
        "circumradius": fr(circumradius(t)),
        "inradius": fr(inradius(t)),
        "right": cls.is_right,
        "isosceles": cls.is_isosceles,
    }


def triangle_row(t: RationalTriangle) -> list:
    cls = classify(t)
    return [
        fr(t.r1.value),
        fr(t.r2.value),
        *(fr(x) for x in t.sides),
        fr(t.area),
        *(fr(h) for h in heights(t)),
        fr(circumradius(t)),
        fr(inradius(t)),
        _flag(cls.is_right),
        _flag(cls.is_isosceles),
    ]


def degree_approximations(t: RationalTriangle) -> dict:
    """Float degree measures of the five angles; display only."""
    return {name: math.degrees(math.atan2(float(sin), float(cos))) for name, cos, sin in angles(t).pairs()}


def triangle_text(t: RationalTriangle, degrees: bool = False) -> str:
    m1, m2 = t.slopes
    cls = classify(t)
    h_a, h_b, h_g = heights(t)
    lines = [
        f"triangle O A1 A2 with slopes m1 = {fr(m1)}, m2 = {fr(m2)}",
        f"r1: {t.r1}",
        f"r2: {t.r2}",
        f"sides: a = {fr(t.side_a)}, b = {fr(t.side_b)}, g = {fr(t.side_g)}",
        f"area: {fr(t.area)}",
        f"heights: h_a = {fr(h_a)}, h_b = {fr(h_b)}, h_g = {fr(h_g)}",
        "angles (cos, sin):",
    ]
    for name, cos, sin in angles(t).pairs():
        lines.append(f"  {name}: cos = {fr(cos)}, sin = {fr(sin)}")
    lines += [
        f"circumradius R: {fr(circumradius(t))}",
        f"inradius r: {fr(inradius(t))}",
        f"right: {_flag(cls.is_right)}",
        f"isosceles: {_flag(cls.is_isosceles)}",
    ]
    if degrees:
        lines.append("degrees (approx, floating point, not exact):")
        for name, value in degree_approximations(t).items():
            lines.append(f"  {name} ~ {value:.9f}")
    return "\n".join(lines) + "\n"


def _class_ids(f: TriangleFamily) -> List[int]:
    ids = [0] * len(f.members)
    for class_id, cls in enumerate(f.classes, start=1):
        for index in cls.members:
            ids[index - 1] = class_id
    return ids


def family_json(f: TriangleFamily) -> dict:
    members = []
    for index, t in enumerate(f.members, start=1):
        m1, m2 = t.slopes
        members.append({"index": index, "slopes": [fr(m1), fr(m2)], **triangle_json(t)})
    return {
        "r": pyth_rational_json(f.r),
        "s": pyth_rational_json(f.s),
        "members": members,
        "classes": [list(cls.members) for cls in f.classes],
    }


def family_rows(f: TriangleFamily) -> List[list]:
    r, s = fr(f.r.value), fr(f.s.value)
    return [
        [r, s, index, class_id] + triangle_row(t)
        for index, (t, class_id) in enumerate(zip(f.members, _class_ids(f)), start=1)
    ]


def family_text(f: TriangleFamily) -> str:
    lines = [f"family of r = {f.r}, s = {f.s}"]
    for index, ((u, v), t) in enumerate(zip(slope_pairs(f.r, f.s), f.members), start=1):
        lines.append(
            f"  triangle {index}: m1 = {fr(u.value)}, m2 = -{fr(v.value)}; "
            f"sides {fr(t.side_a)}, {fr(t.side_b)}, {fr(t.side_g)}; area {fr(t.area)}"
        )
    lines.append(f"congruence classes: {len(f.classes)}")
    for cls in f.classes:
        members = ", ".join(str(i) for i in cls.members)
        key = ", ".join(fr(x) for x in cls.key)
        lines.append(f"  {{{members}}}: sides ({key})")
    return "\n".join(lines) + "\n"


def catalog_summary(c: Catalog) -> str:
    return f"pairs: {c.pair_count}, triangles: {c.triangle_count}, classes: {c.class_count}"


def catalog_json(c: Catalog) -> dict:
    return {
        "max_m": c.max_m,
        "triples": [triple_json(t) for t in c.triples],
        "pair_count": c.pair_count,
        "triangle_count": c.triangle_count,
        "class_count": c.class_count,
        "families": [family_json(f) for f in c.families or ()],
    }


def catalog_text(c: Catalog) -> str:
    out = catalog_summary(c) + "\n"
    if c.families is not None:
        out += triples_text(c.triples)
        for f in c.families:
            out += family_text(f)
    return out


def catalog_csv(c: Catalog) -> str:
    if c.families is None:
        header = ["max_m", "pair_count", "triangle_count", "class_count"]
        return dumps_csv(header, [[c.max_m, c.pair_count, c.triangle_count, c.class_count]])
    return dumps_csv(MEMBER_COLUMNS, (row for f in c.families for row in family_rows(f)))


def triples_text(triples: Sequence[PythTriple]) -> str:
    rows = ["\t".join(TRIPLE_COLUMNS)]
    rows += ["\t".join(str(x) for x in t.as_row()) for t in triples]
    return "\n".join(rows) + "\n"


def check_fields(sides, verdict: RationalityVerdict, cosines) -> dict:
    return {
        "sides": [fr(x) for x in sides],
        "rational": verdict.is_rational,
        "area": None if verdict.area is None else fr(verdict.area),
        "heron_product": fr(verdict.heron_product),
        "area_squared": fr(verdict.heron_product / 16),
        "cosines": [fr(x) for x in cosines],
    }


def check_text(sides, verdict: RationalityVerdict, cosines) -> str:
    shown = ", ".join(fr(x) for x in sides)
    if verdict.is_rational:
        lines = [
            f"sides {shown}: rational triangle",
            f"area: {fr(verdict.area)}",
            "cosines (opposite a, b, g): " + ", ".join(fr(x) for x in cosines),
        ]
    else:
        lines = [
            f"sides {shown}: not a rational triangle",
            f"Heron product P = {fr(verdict.heron_product)}; "
            f"area^2 = P/16 = {fr(verdict.heron_product / 16)} is not the square of a rational",
        ]
    return "\n".join(lines) + "\n"


def check_row(sides, verdict: RationalityVerdict, cosines) -> list:
    fields = check_fields(sides, verdict, cosines)
    return [
        *fields["sides"],
        _flag(verdict.is_rational),
        fields["area"] or "",
        fields["heron_product"],
        fields["area_squared"],
        *fields["cosines"],
    ]
