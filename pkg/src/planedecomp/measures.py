"""Finite-support planar distributions."""
from __future__ import annotations

import enum
from collections import defaultdict
from dataclasses import dataclass, field
from typing import Iterable, NamedTuple, Optional, Tuple

from .errors import ModeMismatch, NegativeMass, NonZeroMean, TotalMassNotOne
from .geometry import (
    Mode,
    Point,
    RayRelation,
    Scalar,
    angular_key,
    dot,
    mode_of,
    ray_relation,
    to_scalar,
    zero,
)

EPS_MASS = 1e-12
EPS_MEAN = 1e-9


class Atom(NamedTuple):
    point: Point
    mass: Scalar


@dataclass(frozen=True)
class FiniteDistribution:
    """Immutable distribution; construct it through :func:`build`."""

    atoms: Tuple[Atom, ...]
    mean: Point
    mode: Mode

    def __iter__(self):
        return iter(self.atoms)

    def __len__(self):
        return len(self.atoms)

    def mass_at(self, z) -> Scalar:
        for a in self.atoms:
            if a.point == z:
                return a.mass
        return zero(self.mode)

    def as_dict(self):
        return {a.point: a.mass for a in self.atoms}


def _infer_mode(raw) -> Mode:
    for z, m in raw:
        return mode_of(m)
    return Mode.EXACT


def build(raw: Iterable, mode: Optional[Mode] = None) -> FiniteDistribution:
    """Validate ``(point, mass)`` pairs into a distribution.

    Duplicate points are merged, zero masses dropped, atoms sorted
    lexicographically.  Without an explicit *mode* the first mass decides it,
    and every later value has to agree.
    """
    raw = list(raw)
    if mode is None:
        mode = _infer_mode(raw)
    merged = defaultdict(lambda: zero(mode))
    for z, m in raw:
        for v in (z[0], z[1], m):
            if mode_of(v) is not mode:
                raise ModeMismatch(f"value {v!r} is not in {mode.value} mode")
        p = Point(to_scalar(z[0], mode), to_scalar(z[1], mode))
        m = to_scalar(m, mode)
        if m < 0:
            raise NegativeMass(f"negative mass {m} at {p}")
        merged[p] += m
    atoms = tuple(Atom(p, m) for p, m in sorted(merged.items()) if m != 0)
    total = sum((a.mass for a in atoms), zero(mode))
    deficit = 1 - total
    if (deficit != 0) if mode is Mode.EXACT else abs(deficit) > EPS_MASS:
        raise TotalMassNotOne(total, deficit)
    mx = sum((a.mass * a.point.x for a in atoms), zero(mode))
    my = sum((a.mass * a.point.y for a in atoms), zero(mode))
    return FiniteDistribution(atoms, Point(mx, my), mode)


def mean(p: FiniteDistribution) -> Point:
    return p.mean


def translate(p: FiniteDistribution, offset) -> FiniteDistribution:
    return build(((a.point + offset, a.mass) for a in p.atoms), p.mode)


def recenter(p: FiniteDistribution) -> Tuple[FiniteDistribution, Point]:
    """Shift *p* to mean zero; returns the shifted distribution and the old mean."""
    offset = p.mean
    if offset.is_zero():
        return p, offset
    return translate(p, -offset), offset


def mean_scale(p: FiniteDistribution) -> float:
    """Mean absolute coordinate, the yardstick for float-mode mean tests."""
    return float(sum(a.mass * (abs(a.point.x) + abs(a.point.y)) for a in p.atoms)) / 2


def is_centered(p: FiniteDistribution) -> bool:
    if p.mode is Mode.EXACT:
        return p.mean.is_zero()
    tol = EPS_MEAN * mean_scale(p)
    return abs(p.mean.x) <= tol and abs(p.mean.y) <= tol


def require_centered(p: FiniteDistribution) -> None:
    if not is_centered(p):
        raise NonZeroMean(p.mean)


class Shape(enum.Enum):
    ORIGIN_ONLY = "origin_only"
    ON_LINE = "on_line"
    PLANAR = "planar"


@dataclass(frozen=True)
class Ray:
    """Atoms on one open half-line; ``atoms`` holds ``(scale, mass)`` pairs
    with ``point == direction.scale(scale)``."""

    direction: Point
    atoms: Tuple[Tuple[Scalar, Scalar], ...]
    points: Tuple[Point, ...]

    @property
    def mass(self):
        return sum(m for _, m in self.atoms)

    def first_moment(self):
        return sum(lam * m for lam, m in self.atoms)


@dataclass(frozen=True)
class SupportProfile:
    origin_mass: Scalar
    rays: Tuple[Ray, ...]
    shape: Shape
    antipodal_pairs: Tuple[Tuple[int, int], ...] = field(default=())

    @property
    def line_direction(self) -> Optional[Point]:
        return self.rays[0].direction if self.shape is Shape.ON_LINE else None


def ray_scale(z: Point, direction: Point) -> Scalar:
    """Signed multiple of *direction* closest to *z*; exact when collinear."""
    return dot(z, direction) / dot(direction, direction)


def profile(p: FiniteDistribution) -> SupportProfile:
    origin_mass = zero(p.mode)
    groups = []  # each a list of atoms sharing a ray
    for a in p.atoms:
        if a.point.is_zero():
            origin_mass += a.mass
            continue
        for g in groups:
            if ray_relation(g[0].point, a.point) is RayRelation.SAME_RAY:
                g.append(a)
                break
        else:
            groups.append([a])

    rays = []
    for g in groups:
        rep = min(a.point for a in g)
        members = sorted(g, key=lambda a: ray_scale(a.point, rep))
        rays.append(
            Ray(
                rep,
                tuple((ray_scale(a.point, rep), a.mass) for a in members),
                tuple(a.point for a in members),
            )
        )
    rays.sort(key=lambda r: angular_key(r.direction))

    pairs = []
    for i, r in enumerate(rays):
        for j in range(i + 1, len(rays)):
            if ray_relation(r.direction, rays[j].direction) is RayRelation.ANTIPODAL:
                pairs.append((i, j) if r.direction < rays[j].direction else (j, i))
    pairs.sort(key=lambda ij: rays[ij[0]].direction)

    if not rays:
        shape = Shape.ORIGIN_ONLY
    elif all(
        ray_relation(rays[0].direction, r.direction) is not RayRelation.INDEPENDENT
        for r in rays
    ):
        shape = Shape.ON_LINE
    else:
        shape = Shape.PLANAR
    return SupportProfile(origin_mass, tuple(rays), shape, tuple(pairs))
