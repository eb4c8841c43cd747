"""Planar primitives on exact rationals or floats.

A scalar is either a :class:`fractions.Fraction` (exact mode) or a ``float``
(float mode).  Directions are nonzero points; angles are never materialized,
all angular reasoning goes through signs of 2x2 determinants.

Float mode treats a determinant as zero when it is within ``EPS_GEO`` times
the product of the two point norms.
"""
from __future__ import annotations

import enum
import functools
import math
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import NamedTuple, Optional, Tuple, Union

from .errors import ModeMismatch, ZeroPoint

Scalar = Union[Fraction, float]

EPS_GEO = 1e-9


class Mode(enum.Enum):
    EXACT = "exact"
    FLOAT = "float"


def mode_of(value) -> Mode:
    if isinstance(value, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(value, Rational):
        return Mode.EXACT
    if isinstance(value, float):
        return Mode.FLOAT
    raise TypeError(f"unsupported scalar type {type(value).__name__}")


def to_scalar(value, mode: Mode) -> Scalar:
    """Coerce *value* into *mode*; ints become Fractions, floats stay floats.

    Converting a float into exact mode is refused: the binary expansion is
    almost never what the caller meant.
    """
    if mode is Mode.EXACT:
        if isinstance(value, float):
            raise ModeMismatch(f"float {value!r} given in exact mode")
        if isinstance(value, Fraction):
            return value
        return Fraction(value)
    if isinstance(value, bool):
        raise TypeError("booleans are not scalars")
    return float(value)


class Point(NamedTuple):
    x: Scalar
    y: Scalar

    def __str__(self):
        return f"({self.x}, {self.y})"

    def __neg__(self) -> "Point":
        return Point(-self.x, -self.y)

    def __add__(self, other) -> "Point":  # type: ignore[override]
        return Point(self.x + other[0], self.y + other[1])

    def __sub__(self, other) -> "Point":
        return Point(self.x - other[0], self.y - other[1])

    def scale(self, s) -> "Point":
        return Point(self.x * s, self.y * s)

    @property
    def mode(self) -> Mode:
        m = mode_of(self.x)
        if mode_of(self.y) is not m:
            raise ModeMismatch(f"point {self} mixes exact and float coordinates")
        return m

    def is_zero(self) -> bool:
        return self.x == 0 and self.y == 0


ORIGIN = Point(Fraction(0), Fraction(0))


def point(x, y, mode: Mode = Mode.EXACT) -> Point:
    return Point(to_scalar(x, mode), to_scalar(y, mode))


def zero(mode: Mode) -> Scalar:
    return Fraction(0) if mode is Mode.EXACT else 0.0


def _check_same_mode(a: Point, b: Point) -> bool:
    """Return True when both points are float mode."""
    fa = isinstance(a.x, float)
    if fa != isinstance(b.x, float) or fa != isinstance(a.y, float) or fa != isinstance(b.y, float):
        raise ModeMismatch(f"cannot combine {a} and {b}: scalar modes differ")
    return fa


def det2(a: Point, b: Point) -> Scalar:
    _check_same_mode(a, b)
    return a.x * b.y - a.y * b.x


def dot(a: Point, b: Point) -> Scalar:
    return a.x * b.x + a.y * b.y


def norm(a: Point) -> float:
    return math.hypot(float(a.x), float(a.y))


def det_sign(a: Point, b: Point) -> int:
    """Sign of ``det2(a, b)``, with the float-mode zero band applied."""
    is_float = _check_same_mode(a, b)
    d = a.x * b.y - a.y * b.x
    if is_float and abs(d) <= EPS_GEO * norm(a) * norm(b):
        return 0
    return (d > 0) - (d < 0)


class RayRelation(enum.Enum):
    SAME_RAY = "same_ray"
    ANTIPODAL = "antipodal"
    INDEPENDENT = "independent"


def ray_relation(a: Point, b: Point) -> RayRelation:
    if a.is_zero() or b.is_zero():
        raise ZeroPoint("ray_relation needs nonzero points")
    if det_sign(a, b) != 0:
        return RayRelation.INDEPENDENT
    return RayRelation.SAME_RAY if dot(a, b) > 0 else RayRelation.ANTIPODAL


def _half(a: Point) -> int:
    # 0 for arguments in [0, pi), 1 for [pi, 2*pi)
    return 0 if a.y > 0 or (a.y == 0 and a.x > 0) else 1


def angular_compare(a: Point, b: Point) -> int:
    """Compare ``arg a`` with ``arg b`` on ``[0, 2*pi)``; returns -1, 0 or 1."""
    if a.is_zero() or b.is_zero():
        raise ZeroPoint("angular_compare needs nonzero points")
    s = det_sign(a, b)
    if s == 0 and dot(a, b) > 0:
        return 0
    ha, hb = _half(a), _half(b)
    if ha != hb:
        return -1 if ha < hb else 1
    # Same half-plane: b is counterclockwise of a iff det2(a, b) > 0.
    return -s


angular_key = functools.cmp_to_key(angular_compare)


class TripleTag(enum.Enum):
    INTERIOR = "interior_containing"
    BOUNDARY = "boundary_containing"
    NOT_CONTAINING = "not_containing"


@dataclass(frozen=True)
class TripleClass:
    """Origin-containment class of a triple.

    ``order`` is the counterclockwise relabeling, rotated so that the
    lexicographically smallest point comes first.  ``dets[i]`` is
    ``det2(order[i], order[i+1])``.  ``degenerate_edge`` is the index ``i``
    of the edge ``(order[i], order[i+1])`` through the origin.
    """

    tag: TripleTag
    order: Optional[Tuple[Point, Point, Point]] = None
    dets: Optional[Tuple[Scalar, Scalar, Scalar]] = None
    degenerate_edge: Optional[int] = None

    @property
    def contains_origin(self) -> bool:
        return self.tag is not TripleTag.NOT_CONTAINING


def classify_triple(z1: Point, z2: Point, z3: Point) -> TripleClass:
    pts = (z1, z2, z3)
    if any(z.is_zero() for z in pts):
        raise ZeroPoint("triangle vertices must differ from the origin")
    signs = [det_sign(pts[i], pts[(i + 1) % 3]) for i in range(3)]
    area = sum(det2(pts[i], pts[(i + 1) % 3]) for i in range(3))
    area_sign = _area_sign(pts, area)
    if area_sign == 0:
        return TripleClass(TripleTag.NOT_CONTAINING)
    if area_sign < 0:
        pts = (z1, z3, z2)
        signs = [-signs[2], -signs[1], -signs[0]]
    if any(s < 0 for s in signs):
        return TripleClass(TripleTag.NOT_CONTAINING)
    zeros = [i for i, s in enumerate(signs) if s == 0]
    if len(zeros) > 1:
        return TripleClass(TripleTag.NOT_CONTAINING)

    start = min(range(3), key=lambda i: pts[i])
    order = tuple(pts[(start + k) % 3] for k in range(3))
    dets = tuple(det2(order[k], order[(k + 1) % 3]) for k in range(3))
    if not zeros:
        return TripleClass(TripleTag.INTERIOR, order, dets)
    edge = (zeros[0] - start) % 3
    return TripleClass(TripleTag.BOUNDARY, order, dets, edge)


def _area_sign(pts, area) -> int:
    if isinstance(area, float):
        a, b, c = pts
        # twice the triangle area, compared against the edge-length scale
        scale = norm(b - a) * norm(c - a)
        if abs(area) <= EPS_GEO * scale:
            return 0
    return (area > 0) - (area < 0)
