"""Small distributions with known invariants and decompositions."""
from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .extremes import three_point
from .geometry import Mode, Point, point
from .measures import FiniteDistribution, build

#: the triangle used throughout the examples; every cyclic determinant is 1
UNIT_TRIANGLE = (point(1, 0), point(0, 1), point(-1, -1))


def triangle(z: Sequence[Point] = UNIT_TRIANGLE) -> FiniteDistribution:
    """The three-point extreme law on *z* as a distribution."""
    return three_point(*z).to_distribution()


def symmetric_pairs(alpha: Sequence, z: Sequence[Point] = UNIT_TRIANGLE) -> FiniteDistribution:
    """Mixture of the symmetric pairs on ``z[i], -z[i]`` with weights *alpha*."""
    half = Fraction(1, 2)
    return build(
        [(zi, a * half) for zi, a in zip(z, alpha)] + [(-zi, a * half) for zi, a in zip(z, alpha)]
    )


def mixed_triangles(beta, z: Sequence[Point] = UNIT_TRIANGLE) -> FiniteDistribution:
    """``beta`` times the triangle law on *z* plus ``1 - beta`` times the one on ``-z``."""
    c = three_point(*z)
    neg = three_point(*(-zi for zi in z))
    return build(
        [(zi, beta * m) for zi, m in zip(c.points, c.masses)]
        + [(zi, (1 - beta) * m) for zi, m in zip(neg.points, neg.masses)]
    )


def cross() -> FiniteDistribution:
    q = Fraction(1, 4)
    return build([(point(1, 0), q), (point(-1, 0), q), (point(0, 1), q), (point(0, -1), q)])


def line(masses: dict, direction: Point = point(1, 0)) -> FiniteDistribution:
    """Distribution on the line through *direction*; keys are multiples of it."""
    return build((direction.scale(Fraction(t)), Fraction(m)) for t, m in masses.items())


def to_float(p: FiniteDistribution) -> FiniteDistribution:
    return build(
        ((Point(float(a.point.x), float(a.point.y)), float(a.mass)) for a in p.atoms), Mode.FLOAT
    )
