import itertools
from fractions import Fraction as F

import pytest
from hypothesis import given
from hypothesis import strategies as st

from planedecomp.errors import NotAntipodal, NotContaining, ZeroPoint
from planedecomp.extremes import (
    Kind,
    dirac_origin,
    phi_of_three_point,
    three_point,
    triangle_phi,
    two_point,
)
from planedecomp.geometry import TripleTag, classify_triple
from planedecomp.invariants import phi_at, probe_directions

from _support import P, boundary_triples, containing_triples, interior_triples, rational_points


def test_dirac():
    c = dirac_origin()
    assert c.kind is Kind.ORIGIN
    assert c.points == (P(0, 0),) and c.masses == (1,)
    assert c.mean() == P(0, 0)


@pytest.mark.parametrize(
    "z1, z2, masses",
    [
        ((1, 0), (-1, 0), (F(1, 2), F(1, 2))),
        ((2, 0), (-1, 0), (F(1, 3), F(2, 3))),
        ((1, 1), (-3, -3), (F(3, 4), F(1, 4))),
    ],
)
def test_two_point(z1, z2, masses):
    c = two_point(P(*z1), P(*z2))
    assert c.kind is Kind.TWO_POINT and c.masses == masses
    assert c.mean() == P(0, 0)


def test_two_point_errors():
    with pytest.raises(NotAntipodal):
        two_point(P(1, 0), P(2, 0))
    with pytest.raises(NotAntipodal):
        two_point(P(1, 0), P(0, 1))
    with pytest.raises(ZeroPoint):
        two_point(P(0, 0), P(1, 0))


def test_three_point_examples():
    c = three_point(P(1, 0), P(0, 1), P(-1, -1))
    assert c.kind is Kind.THREE_POINT
    assert dict(zip(c.points, c.masses)) == {P(1, 0): F(1, 3), P(0, 1): F(1, 3), P(-1, -1): F(1, 3)}

    c = three_point(P(2, 0), P(0, 1), P(-1, -1))
    assert dict(zip(c.points, c.masses)) == {P(2, 0): F(1, 5), P(0, 1): F(2, 5), P(-1, -1): F(2, 5)}
    assert c.mean() == P(0, 0)


def test_three_point_degenerates_on_boundary():
    c = three_point(P(1, 0), P(0, 1), P(-1, 0))
    assert c.kind is Kind.TWO_POINT
    assert dict(zip(c.points, c.masses)) == {P(1, 0): F(1, 2), P(-1, 0): F(1, 2)}


def test_three_point_rejects_outside():
    with pytest.raises(NotContaining):
        three_point(P(1, 0), P(2, 0), P(0, 1))


def test_phi_of_three_point_examples():
    assert phi_of_three_point(three_point(P(1, 0), P(0, 1), P(-1, -1))) == F(1, 9)
    assert phi_of_three_point(three_point(P(2, 0), P(0, 1), P(-1, -1))) == F(4, 25)
    assert triangle_phi(P(1, 0), P(0, 1), P(-1, 0)) == 0
    with pytest.raises(TypeError):
        phi_of_three_point(dirac_origin())


@given(interior_triples())
def test_interior_triples_classify(t):
    assert classify_triple(*t).tag is TripleTag.INTERIOR


@given(boundary_triples())
def test_boundary_triples_degenerate(t):
    assert classify_triple(*t).tag is TripleTag.BOUNDARY
    assert three_point(*t).kind is Kind.TWO_POINT
    assert triangle_phi(*t) == 0


@given(containing_triples)
def test_components_are_mean_zero_probabilities(t):
    c = three_point(*t)
    assert sum(c.masses) == 1 and all(m > 0 for m in c.masses)
    assert c.mean() == P(0, 0)


@given(rational_points, st.fractions(min_value=F(1, 20), max_value=20))
def test_two_point_mean_zero(z, s):
    c = two_point(z, -z.scale(s))
    assert sum(c.masses) == 1 and c.mean() == P(0, 0)


@given(containing_triples)
def test_three_point_permutation_invariant(t):
    ref = three_point(*t)
    for perm in itertools.permutations(t):
        got = three_point(*perm)
        assert dict(zip(got.points, got.masses)) == dict(zip(ref.points, ref.masses))


@given(containing_triples, st.fractions(min_value=F(1, 10), max_value=10))
def test_three_point_scale_invariant_masses(t, s):
    c = three_point(*t)
    cs = three_point(*(z.scale(s) for z in t))
    assert cs.masses == c.masses


@given(interior_triples())
def test_closed_form_phi_matches_engine(t):
    c = three_point(*t)
    p = c.to_distribution()
    phi = phi_of_three_point(c)
    for d in probe_directions(p) + [P(1, 0), P(0, -1), P(-2, 7)]:
        assert phi_at(p, d).total == phi
