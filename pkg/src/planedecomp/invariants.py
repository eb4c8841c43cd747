"""The pair-determinant invariant of a mean-zero distribution.

For a probe direction ``d`` the invariant sums ``det2(z1, z2) * m1 * m2``
over ordered atom pairs ``(z1, z2)`` whose triangle with any point of the
ray through ``d`` contains the origin: pairs that put the origin strictly
inside count fully, pairs that put it on an edge count half.  The value does
not depend on ``d``; :func:`phi_invariant` checks that on a probe set that
visits every angular cell of the support.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import List, NamedTuple, Tuple

from .errors import FactorizationMismatch, InternalInconsistency, ZeroPoint
from .geometry import (
    Mode,
    Point,
    RayRelation,
    Scalar,
    angular_key,
    det2,
    det_sign,
    dot,
    norm,
    ray_relation,
    zero,
)
from .measures import FiniteDistribution, Shape, profile, require_centered

EPS_PHI = 1e-9


class ProbeValue(NamedTuple):
    direction: Point
    interior: Scalar
    boundary: Scalar
    total: Scalar


@dataclass(frozen=True)
class InvariantReport:
    phi: Scalar
    probes: Tuple[ProbeValue, ...]
    consistent: bool


def _half(mode: Mode):
    return Fraction(1, 2) if mode is Mode.EXACT else 0.5


def split_by_direction(p: FiniteDistribution, d: Point):
    """Partition non-origin atoms into the open half-plane left of ``d``,
    the open half-plane right of ``d``, the ray through ``-d`` and the ray
    through ``d``."""
    if d.is_zero():
        raise ZeroPoint("probe direction must be nonzero")
    left, right, back, front = [], [], [], []
    for a in p.atoms:
        z = a.point
        if z.is_zero():
            continue
        s = det_sign(d, z)
        if s > 0:
            left.append(a)
        elif s < 0:
            right.append(a)
        elif dot(d, z) < 0:
            back.append(a)
        else:
            front.append(a)
    return left, right, back, front


def phi_at(p: FiniteDistribution, d: Point) -> ProbeValue:
    """Evaluate the invariant at probe direction *d*."""
    require_centered(p)
    left, right, back, _ = split_by_direction(p, d)
    interior = zero(p.mode)
    for a in left:
        for b in right:
            # arg b lies within half a turn counterclockwise of arg a
            if det_sign(a.point, b.point) > 0:
                interior += det2(a.point, b.point) * a.mass * b.mass
    edge = zero(p.mode)
    for a in left:
        for b in back:
            edge += det2(a.point, b.point) * a.mass * b.mass
    for a in back:
        for b in right:
            edge += det2(a.point, b.point) * a.mass * b.mass
    boundary = edge * _half(p.mode)
    return ProbeValue(d, interior, boundary, interior + boundary)


def _first_moment(p: FiniteDistribution) -> float:
    return sum(float(a.mass) * norm(a.point) for a in p.atoms)


def _second_moment(p: FiniteDistribution) -> float:
    return sum(float(a.mass) * norm(a.point) ** 2 for a in p.atoms)


def half_plane_moments(p: FiniteDistribution, d: Point) -> Tuple[Scalar, Scalar, Scalar]:
    """Return ``(back, left, right)``.

    ``back`` is the first moment of the ray through ``-d`` measured in units
    of ``d``; ``left`` sums ``det2(d, z) * m`` over the left half-plane and
    ``right`` sums ``det2(z, d) * m`` over the right one.  For a mean-zero
    distribution ``left == right``.
    """
    left, right, back, _ = split_by_direction(p, d)
    dd = dot(d, d)
    z0 = zero(p.mode)
    back_moment = sum((-dot(a.point, d) / dd * a.mass for a in back), z0)
    s_left = sum((det2(d, a.point) * a.mass for a in left), z0)
    s_right = sum((det2(a.point, d) * a.mass for a in right), z0)
    return back_moment, s_left, s_right


def boundary_phi(p: FiniteDistribution, d: Point) -> Scalar:
    """Boundary part of the invariant at *d*, via its product form.

    Both products (back-ray moment times the left or the right half-plane
    sum) are computed and must agree; a disagreement means the mean is not
    zero or a predicate misfired.
    """
    require_centered(p)
    back_moment, s_left, s_right = half_plane_moments(p, d)
    if p.mode is Mode.EXACT:
        agree = s_left == s_right
    else:
        agree = abs(s_left - s_right) <= EPS_PHI * norm(d) * max(_first_moment(p), 1e-300)
    if not agree:
        raise FactorizationMismatch(
            f"half-plane sums differ at {d}: left {s_left}, right {s_right}"
        )
    if back_moment == 0:
        return zero(p.mode)
    return back_moment * s_left


def probe_directions(p: FiniteDistribution, prof=None) -> List[Point]:
    """Every support ray, every antipode of one, and the bisector of each
    angular gap between consecutive ones, in angular order."""
    prof = prof or profile(p)
    merged: List[Point] = []
    for r in prof.rays:
        for d in (r.direction, -r.direction):
            if not any(ray_relation(d, e) is RayRelation.SAME_RAY for e in merged):
                merged.append(d)
    merged.sort(key=angular_key)
    if prof.shape is not Shape.PLANAR:
        return merged
    # gaps are below half a turn, so the vector sum falls strictly inside
    mids = [merged[i] + merged[(i + 1) % len(merged)] for i in range(len(merged))]
    return sorted(merged + mids, key=angular_key)


def phi_invariant(p: FiniteDistribution) -> InvariantReport:
    require_centered(p)
    prof = profile(p)
    dirs = probe_directions(p, prof)
    if not dirs:
        return InvariantReport(zero(p.mode), (), True)
    probes = []
    for d in dirs:
        v = phi_at(p, d)
        boundary_phi(p, d)
        probes.append(v)
    phi = probes[0].total
    if p.mode is Mode.EXACT:
        consistent = all(v.total == phi for v in probes)
    else:
        tol = EPS_PHI * _second_moment(p)
        consistent = all(abs(v.total - phi) <= tol for v in probes)
    if prof.shape is Shape.PLANAR and not phi > (0 if p.mode is Mode.EXACT else EPS_PHI * _second_moment(p)):
        raise InternalInconsistency(f"planar support with non-positive invariant {phi}")
    return InvariantReport(phi, tuple(probes), consistent)


def is_close_phi(p: FiniteDistribution, a: Scalar, b: Scalar) -> bool:
    if p.mode is Mode.EXACT:
        return a == b
    return math.isclose(a, b, rel_tol=EPS_PHI, abs_tol=EPS_PHI * _second_moment(p))
