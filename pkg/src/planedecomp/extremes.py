"""Extreme points of the set of mean-zero planar distributions.

There are three kinds: the Dirac mass at the origin, two-point laws on
antipodal rays, and three-point laws whose triangle has the origin strictly
inside.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Tuple

from .errors import NotAntipodal, NotContaining, ZeroPoint
from .geometry import (
    ORIGIN,
    Mode,
    Point,
    RayRelation,
    Scalar,
    TripleTag,
    classify_triple,
    dot,
    ray_relation,
    zero,
)
from .measures import FiniteDistribution, build


class Kind(enum.Enum):
    ORIGIN = "origin"
    TWO_POINT = "two_point"
    THREE_POINT = "three_point"


@dataclass(frozen=True)
class ExtremeComponent:
    kind: Kind
    points: Tuple[Point, ...]
    masses: Tuple[Scalar, ...]

    @property
    def mode(self) -> Mode:
        return Mode.FLOAT if isinstance(self.masses[0], float) else Mode.EXACT

    def mean(self) -> Point:
        z = zero(self.mode)
        return Point(
            sum((m * p.x for p, m in zip(self.points, self.masses)), z),
            sum((m * p.y for p, m in zip(self.points, self.masses)), z),
        )

    def support(self) -> frozenset:
        return frozenset(self.points)

    def to_distribution(self) -> FiniteDistribution:
        return build(zip(self.points, self.masses), self.mode)


def dirac_origin(mode: Mode = Mode.EXACT) -> ExtremeComponent:
    if mode is Mode.EXACT:
        return ExtremeComponent(Kind.ORIGIN, (ORIGIN,), (Fraction(1),))
    return ExtremeComponent(Kind.ORIGIN, (Point(0.0, 0.0),), (1.0,))


def two_point(z1: Point, z2: Point) -> ExtremeComponent:
    """Mean-zero law on ``{z1, z2}``; the points must lie on opposite rays.

    Radii enter only through their ratio, measured as a scale factor of
    ``z2`` against ``z1``, so no square roots are taken.
    """
    if z1.is_zero() or z2.is_zero():
        raise ZeroPoint("two_point needs nonzero points")
    if ray_relation(z1, z2) is not RayRelation.ANTIPODAL:
        raise NotAntipodal(f"{z1} and {z2} are not on opposite rays")
    ratio = -dot(z1, z2) / dot(z1, z1)  # |z2| / |z1|
    return ExtremeComponent(Kind.TWO_POINT, (z1, z2), (ratio / (1 + ratio), 1 / (1 + ratio)))


def three_point(z1: Point, z2: Point, z3: Point) -> ExtremeComponent:
    """Mean-zero law on a triangle around the origin.

    Vertex ``i`` of the counterclockwise order gets the determinant of the
    opposite edge, normalized by the sum of all three.  If the origin lies on
    an edge, the opposite vertex would get mass zero and the two-point law on
    that edge is returned instead.
    """
    cls = classify_triple(z1, z2, z3)
    if cls.tag is TripleTag.NOT_CONTAINING:
        raise NotContaining(f"triangle {z1}, {z2}, {z3} does not contain the origin")
    if cls.tag is TripleTag.BOUNDARY:
        i = cls.degenerate_edge
        return two_point(cls.order[i], cls.order[(i + 1) % 3])
    d = cls.dets
    total = d[0] + d[1] + d[2]
    masses = tuple(d[(i + 1) % 3] / total for i in range(3))
    return ExtremeComponent(Kind.THREE_POINT, cls.order, masses)


def triangle_phi(z1: Point, z2: Point, z3: Point) -> Scalar:
    """Closed-form invariant of the three-point law on a triangle around the
    origin: product of the cyclic determinants over their squared sum.

    Zero when the origin sits on an edge.
    """
    cls = classify_triple(z1, z2, z3)
    if cls.tag is TripleTag.NOT_CONTAINING:
        raise NotContaining(f"triangle {z1}, {z2}, {z3} does not contain the origin")
    d = cls.dets
    if cls.tag is TripleTag.BOUNDARY and z1.mode is Mode.FLOAT:
        return 0.0
    return d[0] * d[1] * d[2] / (d[0] + d[1] + d[2]) ** 2


def phi_of_three_point(c: ExtremeComponent) -> Scalar:
    if c.kind is not Kind.THREE_POINT:
        raise TypeError(f"phi_of_three_point needs a three-point component, got {c.kind.value}")
    return triangle_phi(*c.points)
