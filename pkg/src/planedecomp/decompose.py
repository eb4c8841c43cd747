"""Symmetric decomposition of a finite mean-zero distribution into extreme
components.

Planar supports are split into

* the origin Dirac, weighted by the origin mass;
* one three-point law per unordered triple of atoms whose triangle holds
  the origin strictly inside, weighted by the sum of its cyclic determinants
  times the three atom masses, over the invariant;
* one two-point law per atom pair on opposite rays, weighted by the sum of
  the two radii times both masses times the half-plane determinant sum of
  the pair's direction, over the invariant.

Radii on a ray are measured in units of the ray's direction vector, so the
weights are exact rationals whenever the input is.

Supports inside a single line fall back to the one-dimensional rule: pair
every positive atom with every negative one, weighting by the sum of radii
times both masses over the first moment of either side.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import List, Optional, Tuple

from .errors import InternalInconsistency, NotOnLine
from .extremes import ExtremeComponent, Kind, dirac_origin, three_point, two_point
from .geometry import (
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
from .invariants import half_plane_moments, phi_invariant
from .measures import (
    EPS_MEAN,
    FiniteDistribution,
    Shape,
    SupportProfile,
    build,
    mean_scale,
    profile,
    recenter,
    require_centered,
    translate,
)

EPS_REC = 1e-9


@dataclass(frozen=True)
class Decomposition:
    phi: Scalar
    components: Tuple[Tuple[ExtremeComponent, Scalar], ...]
    offset: Point
    mode: Mode = Mode.EXACT

    @property
    def weights(self) -> List[Scalar]:
        return [w for _, w in self.components]

    def weight_sum(self) -> Scalar:
        return sum(self.weights, zero(self.mode))


@dataclass(frozen=True)
class VerificationReport:
    weight_sum: Scalar
    max_atom_discrepancy: Scalar
    per_component_mean_ok: bool
    exact_match: bool
    passed: bool


def _sort_key(item):
    c, _ = item
    if c.kind is Kind.ORIGIN:
        return (0,)
    if c.kind is Kind.TWO_POINT:
        z1, z2 = c.points
        lo = min(z1, z2)
        return (1, lo, max(z1, z2))
    return (2, tuple(sorted(c.points)))


def _finish(p: FiniteDistribution, phi, items, offset) -> Decomposition:
    items.sort(key=_sort_key)
    d = Decomposition(phi, tuple(items), offset, p.mode)
    total = d.weight_sum()
    ok = total == 1 if p.mode is Mode.EXACT else abs(total - 1) <= EPS_REC
    if not ok:
        raise InternalInconsistency(f"decomposition weights sum to {total}")
    return d


def decompose(p: FiniteDistribution, offset: Optional[Point] = None) -> Decomposition:
    """Decompose a mean-zero distribution into extreme components."""
    require_centered(p)
    if offset is None:
        offset = Point(zero(p.mode), zero(p.mode))
    prof = profile(p)
    if prof.shape is Shape.ORIGIN_ONLY:
        return _finish(p, zero(p.mode), [(dirac_origin(p.mode), prof.origin_mass)], offset)
    if prof.shape is Shape.ON_LINE:
        return decompose_collinear(p, prof, offset)

    report = phi_invariant(p)
    if not report.consistent:
        raise InternalInconsistency("invariant differs between probe directions")
    phi = report.phi
    items = []
    if prof.origin_mass > 0:
        items.append((dirac_origin(p.mode), prof.origin_mass))

    atoms = [a for a in p.atoms if not a.point.is_zero()]
    for a, b, c in combinations(atoms, 3):
        if ray_relation(a.point, b.point) is not RayRelation.INDEPENDENT:
            continue
        if ray_relation(a.point, c.point) is not RayRelation.INDEPENDENT:
            continue
        if ray_relation(b.point, c.point) is not RayRelation.INDEPENDENT:
            continue
        cls = classify_triple(a.point, b.point, c.point)
        if cls.tag is not TripleTag.INTERIOR:
            continue
        w = sum(cls.dets) * a.mass * b.mass * c.mass / phi
        items.append((three_point(a.point, b.point, c.point), w))

    for i, j in prof.antipodal_pairs:
        d = prof.rays[i].direction
        _, s_left, _ = half_plane_moments(p, d)
        dd = dot(d, d)
        for z1, m1 in zip(prof.rays[i].points, (m for _, m in prof.rays[i].atoms)):
            lam1 = dot(z1, d) / dd
            for z2, m2 in zip(prof.rays[j].points, (m for _, m in prof.rays[j].atoms)):
                lam2 = -dot(z2, d) / dd
                w = (lam1 + lam2) * m1 * m2 * s_left / phi
                items.append((two_point(z1, z2), w))
    return _finish(p, phi, items, offset)


def decompose_collinear(
    p: FiniteDistribution, prof: Optional[SupportProfile] = None, offset: Optional[Point] = None
) -> Decomposition:
    require_centered(p)
    prof = prof or profile(p)
    if prof.shape is not Shape.ON_LINE:
        raise NotOnLine(f"support shape is {prof.shape.value}")
    if offset is None:
        offset = Point(zero(p.mode), zero(p.mode))
    d = prof.line_direction
    dd = dot(d, d)
    pos, neg = [], []
    for a in p.atoms:
        if a.point.is_zero():
            continue
        t = dot(a.point, d) / dd
        (pos if t > 0 else neg).append((a.point, abs(t), a.mass))
    norm_const = sum((lam * m for _, lam, m in pos), zero(p.mode))

    items = []
    if prof.origin_mass > 0:
        items.append((dirac_origin(p.mode), prof.origin_mass))
    for z1, lam1, m1 in pos:
        for z2, lam2, m2 in neg:
            items.append((two_point(z1, z2), (lam1 + lam2) * m1 * m2 / norm_const))
    return _finish(p, zero(p.mode), items, offset)


def decompose_general(p: FiniteDistribution) -> Decomposition:
    """Decompose a distribution with any mean by shifting it to mean zero first."""
    q, offset = recenter(p)
    return decompose(q, offset)


def reconstruct(d: Decomposition) -> FiniteDistribution:
    """Mix the components back into one (mean-zero) distribution."""
    return build(
        ((z, w * m) for c, w in d.components for z, m in zip(c.points, c.masses)), d.mode
    )


def verify(p: FiniteDistribution, d: Decomposition) -> VerificationReport:
    """Check that mixing the components of *d* gives back *p*.

    *p* is compared after removing ``d.offset``, so the output of
    :func:`decompose_general` verifies against its own input.
    """
    target = p if d.offset.is_zero() else translate(p, -d.offset)
    total = d.weight_sum()
    if d.mode is Mode.EXACT:
        means_ok = all(c.mean().is_zero() for c, _ in d.components)
    else:
        means_ok = all(
            max(abs(c.mean().x), abs(c.mean().y)) <= EPS_MEAN * mean_scale(c.to_distribution())
            for c, _ in d.components
        )
    try:
        got = reconstruct(d).as_dict()
    except ValueError:
        got = {}
        for c, w in d.components:
            for z, m in zip(c.points, c.masses):
                got[z] = got.get(z, zero(d.mode)) + w * m
    want = target.as_dict()
    z0 = zero(d.mode)
    gap = max(
        (abs(got.get(z, z0) - want.get(z, z0)) for z in set(got) | set(want)), default=z0
    )
    exact = d.mode is Mode.EXACT and gap == 0 and total == 1 and means_ok
    if d.mode is Mode.EXACT:
        passed = exact
    else:
        passed = gap <= EPS_REC and abs(total - 1) <= EPS_REC and means_ok
    return VerificationReport(total, gap, means_ok, exact, passed)
