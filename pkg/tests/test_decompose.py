from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from planedecomp import fixtures
from planedecomp.decompose import (
    Decomposition,
    decompose,
    decompose_collinear,
    decompose_general,
    reconstruct,
    verify,
)
from planedecomp.errors import NonZeroMean, NotOnLine
from planedecomp.extremes import Kind, dirac_origin
from planedecomp.measures import build, translate

from _support import (
    P,
    centered_distributions,
    collinear_distributions,
    example2_oracle,
    example3_oracle,
    formula_one_weights,
    map_points,
    rotate,
    weight_map,
)

Z = fixtures.UNIT_TRIANGLE


def tri(z):
    return ("three_point", frozenset(z))


def pair(z):
    return ("two_point", frozenset((z, -z)))


def test_triangle_is_its_own_decomposition():
    d = decompose(fixtures.triangle())
    assert weight_map(d) == {tri(Z): 1}
    assert d.phi == F(1, 9)


def test_example2_five_components():
    alpha = (F(1, 2), F(1, 4), F(1, 4))
    d = decompose(fixtures.symmetric_pairs(alpha))
    _, t, pairs = example2_oracle(Z, alpha)
    negz = tuple(-z for z in Z)
    expected = {tri(Z): t, tri(negz): t, **{pair(z): w for z, w in zip(Z, pairs)}}
    assert weight_map(d) == expected
    assert weight_map(d) == {
        tri(Z): F(3, 20), tri(negz): F(3, 20),
        pair(Z[0]): F(2, 5), pair(Z[1]): F(3, 20), pair(Z[2]): F(3, 20),
    }


@pytest.mark.parametrize("beta", [F(1, 2), F(1, 3), F(9, 10)])
def test_example3_against_closed_forms(beta):
    d = decompose(fixtures.mixed_triangles(beta))
    phi, tp, tn, pairs = example3_oracle(Z, beta)
    negz = tuple(-z for z in Z)
    assert d.phi == phi
    assert weight_map(d) == {tri(Z): tp, tri(negz): tn, **{pair(z): w for z, w in zip(Z, pairs)}}


def test_example3_frozen_half():
    d = decompose(fixtures.mixed_triangles(F(1, 2)))
    assert sorted(d.weights) == [F(1, 6), F(1, 6), F(2, 9), F(2, 9), F(2, 9)]


def test_cross():
    d = decompose(fixtures.cross())
    assert weight_map(d) == {pair(P(1, 0)): F(1, 2), pair(P(0, 1)): F(1, 2)}


def test_origin_only_and_origin_mass():
    d = decompose(build([(P(0, 0), F(1))]))
    assert [(c.kind, w) for c, w in d.components] == [(Kind.ORIGIN, 1)]
    p = build([(P(0, 0), F(1, 2)), (P(1, 0), F(1, 8)), (P(-1, 0), F(1, 8)), (P(0, 1), F(1, 8)), (P(0, -1), F(1, 8))])
    d = decompose(p)
    assert d.components[0] == (dirac_origin(), F(1, 2))
    assert verify(p, d).exact_match


def test_component_order_is_deterministic():
    d = decompose(fixtures.symmetric_pairs([F(1, 2), F(1, 4), F(1, 4)]))
    kinds = [c.kind for c, _ in d.components]
    assert kinds == sorted(kinds, key=[Kind.ORIGIN, Kind.TWO_POINT, Kind.THREE_POINT].index)


@pytest.mark.parametrize(
    "masses",
    [
        {-1: F(1, 2), 1: F(1, 2)},
        {2: F(1, 3), -1: F(2, 3)},
        {-1: F(1, 2), 0: F(1, 8), 1: F(1, 4), 2: F(1, 8)},
        {-3: F(1, 10), -1: F(2, 5), 0: F(1, 10), 1: F(3, 10), 4: F(1, 10)},
    ],
)
def test_collinear_matches_formula_one(masses):
    p = fixtures.line(masses)
    d = decompose_collinear(p)
    oracle = formula_one_weights(masses)
    got = {}
    for c, w in d.components:
        if c.kind is Kind.ORIGIN:
            got["origin"] = w
        else:
            xs = sorted(int(z.x) for z in c.points)
            got[(xs[1], xs[0])] = w
    assert got == oracle
    assert d.phi == 0


def test_collinear_frozen_values():
    d = decompose(fixtures.line({-1: F(1, 2), 0: F(1, 8), 1: F(1, 4), 2: F(1, 8)}))
    assert [(c.kind.value, w) for c, w in d.components] == [
        ("origin", F(1, 8)), ("two_point", F(1, 2)), ("two_point", F(3, 8))
    ]


def test_collinear_rejects_planar():
    with pytest.raises(NotOnLine):
        decompose_collinear(fixtures.cross())


def test_decompose_requires_zero_mean():
    with pytest.raises(NonZeroMean):
        decompose(build([(P(3, 0), F(1, 2)), (P(1, 0), F(1, 2))]))


def test_decompose_general():
    p = build([(P(3, 0), F(1, 2)), (P(1, 0), F(1, 2))])
    d = decompose_general(p)
    assert d.offset == P(2, 0)
    assert weight_map(d) == {pair(P(1, 0)): 1}
    assert translate(reconstruct(d), d.offset) == p
    assert verify(p, d).exact_match

    d = decompose_general(build([(P(5, 7), F(1))]))
    assert d.offset == P(5, 7) and d.components[0][0].kind is Kind.ORIGIN

    c = fixtures.cross()
    assert decompose_general(c) == decompose(c)


def test_reconstruct_examples():
    assert reconstruct(decompose(build([(P(0, 0), F(1))]))) == build([(P(0, 0), F(1))])
    assert reconstruct(decompose(fixtures.cross())) == fixtures.cross()
    p = fixtures.symmetric_pairs([F(1, 2), F(1, 4), F(1, 4)])
    assert reconstruct(decompose(p)) == p


def test_verify_detects_wrong_distribution():
    r = verify(fixtures.cross(), decompose(fixtures.symmetric_pairs([F(1, 2), F(1, 4), F(1, 4)])))
    assert not r.exact_match and not r.passed
    assert r.max_atom_discrepancy > 0
    assert r.weight_sum == 1


def test_verify_detects_tampered_weights():
    d = decompose(fixtures.cross())
    (c1, w1), (c2, w2) = d.components
    bad = Decomposition(d.phi, ((c1, w1 + F(1, 10)), (c2, w2 - F(1, 10))), d.offset)
    r = verify(fixtures.cross(), bad)
    assert r.weight_sum == 1 and r.max_atom_discrepancy == F(1, 20) and not r.passed


@settings(max_examples=150)
@given(centered_distributions())
def test_reconstruction_identity(p):
    d = decompose(p)
    assert d.weight_sum() == 1
    assert all(w > 0 for w in d.weights)
    assert all(c.mean() == P(0, 0) for c, _ in d.components)
    assert reconstruct(d) == p
    assert verify(p, d).exact_match


@given(collinear_distributions())
def test_collinear_reconstruction(pd):
    p, _ = pd
    d = decompose(p)
    assert reconstruct(d) == p
    assert all(c.kind is not Kind.THREE_POINT for c, _ in d.components)


@given(centered_distributions(), st.sampled_from([F(2), F(1, 3), F(5, 2)]))
def test_scaling_keeps_weights(p, s):
    d = decompose(p)
    ds = decompose(map_points(p, lambda z: z.scale(s)))
    scaled = {(k, frozenset(z.scale(s) for z in pts)): w for (k, pts), w in weight_map(d).items()}
    assert weight_map(ds) == scaled


@given(centered_distributions())
def test_rotation_equivariance(p):
    d = decompose(p)
    dr = decompose(map_points(p, rotate))
    rotated = {(k, frozenset(rotate(z) for z in pts)): w for (k, pts), w in weight_map(d).items()}
    assert weight_map(dr) == rotated
