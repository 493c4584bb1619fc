import itertools
import random
from fractions import Fraction

import pytest
from hypothesis import example, given, settings
from hypothesis import strategies as st

from polyptych import geometry as g
from polyptych.errors import DegenerateInput, NotIntegral

small = st.integers(-6, 6)
pts = st.lists(st.tuples(small, small), min_size=1, max_size=9)


def _in_triangle(p, a, b, c):
    d1, d2, d3 = g.cross(g.sub(b, a), g.sub(p, a)), g.cross(g.sub(c, b), g.sub(p, b)), g.cross(g.sub(a, c), g.sub(p, c))
    neg = d1 < 0 or d2 < 0 or d3 < 0
    pos = d1 > 0 or d2 > 0 or d3 > 0
    return not (neg and pos)


def _brute_extreme(points):
    """A point is extreme iff it lies in no triangle (or segment) of the others."""
    P = sorted(set(points))
    out = set()
    for p in P:
        rest = [r for r in P if r != p]
        inside = any(_in_triangle(p, a, b, c) for a, b, c in itertools.combinations(rest, 3)
                     if g.cross(g.sub(b, a), g.sub(c, a)) != 0)
        inside = inside or any(_in_triangle(p, a, b, b) and g.cross(g.sub(b, a), g.sub(p, a)) == 0
                               and min(a, b) <= p <= max(a, b) for a, b in itertools.combinations(rest, 2))
        if not inside:
            out.add(p)
    return out


@given(pts)
@example([(0, 1), (1, 1), (-1, 1), (2, 1)])
@settings(max_examples=150)
def test_hull_vertices_against_brute_force(points):
    vs = g.hull_vertices(points)
    assert set(vs) == _brute_extreme(points)
    if len(vs) >= 3:
        assert vs[0] == min(vs)
        n = len(vs)
        assert all(g.cross(g.sub(vs[(i + 1) % n], vs[i]), g.sub(vs[(i + 2) % n], vs[i])) > 0 for i in range(n))


def test_hull_is_ccw_from_lex_min():
    P = g.ConvexPolygon.from_points([(1, 1), (0, 0), (1, 0), (0, 1), (Fraction(1, 2), Fraction(1, 2))])
    assert P.vrep == ((0, 0), (1, 0), (1, 1), (0, 1))


half_planes = st.lists(
    st.builds(g.HalfPlane, st.tuples(small, small).filter(lambda n: n != (0, 0)), st.integers(-8, 8)),
    min_size=1, max_size=6)


@given(half_planes)
@settings(max_examples=200)
def test_intersection_membership(hs):
    r = g.intersect(hs)
    rng = random.Random(hash(tuple(hs)))
    for _ in range(40):
        v = (Fraction(rng.randint(-40, 40), 4), Fraction(rng.randint(-40, 40), 4))
        assert r.contains(v) == all(h.contains(v) for h in hs)
    if isinstance(r, g.ConvexPolygon):
        for v in r.vrep:
            assert all(h.contains(v) for h in hs)
            if r.dim == 2:
                assert sum(h.on_boundary(v) for h in hs) >= 2


@given(half_planes)
def test_intersection_kind(hs):
    r = g.intersect(hs)
    if isinstance(r, g.Unbounded):
        # a recession direction keeps every point inside
        base = r.points[0] if r.points else None
        for ray in r.recession.gens:
            assert all(g.dot(h.normal, ray) >= 0 for h in hs)
            if base is not None:
                far = (base[0] + 1000 * ray[0], base[1] + 1000 * ray[1])
                assert r.contains(far)


def test_empty_and_degenerate_intersections():
    assert isinstance(g.intersect([g.HalfPlane((1, 0), 1), g.HalfPlane((-1, 0), 0)]), g.Empty)
    seg = g.intersect([g.HalfPlane((0, 1), 0), g.HalfPlane((0, -1), 0),
                       g.HalfPlane((1, 0), -1), g.HalfPlane((-1, 0), -1)])
    assert isinstance(seg, g.ConvexPolygon) and seg.dim == 1
    assert seg.vrep == ((-1, 0), (1, 0))
    pt = g.intersect([g.HalfPlane((1, 0), 0), g.HalfPlane((0, 1), 0), g.HalfPlane((-1, -1), 0)])
    assert isinstance(pt, g.ConvexPolygon) and pt.vrep == ((0, 0),)
    strip = g.intersect([g.HalfPlane((1, 0), 0), g.HalfPlane((-1, 0), -1)])
    assert isinstance(strip, g.Unbounded) and strip.recession.kind == "line"


def test_integrality():
    tri = g.ConvexPolygon.from_points([(0, 0), (Fraction(1, 2), 0), (0, 1)])
    assert not g.is_integral(tri)
    assert g.non_integral_vertices(tri) == [(Fraction(1, 2), 0)]


@given(pts.filter(lambda p: len(g.hull_vertices(p)) >= 3))
def test_normal_fan_minimizes(points):
    P = g.ConvexPolygon.from_points(points)
    fan = g.normal_fan(P)
    assert len(fan) == len(P.vrep)
    rng = random.Random(len(points))
    for _ in range(30):
        n = (rng.randint(-9, 9), rng.randint(-9, 9))
        if n == (0, 0):
            continue
        best = min(g.dot(n, v) for v in P.vrep)
        owners = [v for cone, v in fan if cone.contains(n)]
        assert owners and all(g.dot(n, v) == best for v in owners)


def test_normal_fan_needs_a_polygon():
    with pytest.raises(DegenerateInput):
        g.normal_fan(g.ConvexPolygon.from_points([(0, 0), (1, 0)]))


def _apply(U, t, v):
    return (U[0][0] * v[0] + U[0][1] * v[1] + t[0], U[1][0] * v[0] + U[1][1] * v[1] + t[1])


UNIMODULAR = [((1, 0), (0, 1)), ((0, 1), (1, 0)), ((1, 1), (0, 1)), ((2, 1), (1, 1)), ((-1, 3), (0, 1)),
              ((1, 0), (-4, -1))]


@given(pts.filter(lambda p: len(g.hull_vertices(p)) >= 1), st.sampled_from(UNIMODULAR), small, small)
def test_lattice_equivalence_of_images(points, U, tx, ty):
    P = g.ConvexPolygon.from_points(points)
    Q = g.ConvexPolygon.from_points([_apply(U, (tx, ty), v) for v in P.vrep])
    ok, V, t = g.lattice_equivalent(P, Q, with_map=True)
    assert ok
    assert {_apply(V, t, v) for v in P.vrep} == set(Q.vrep)


def test_lattice_inequivalence():
    tri = g.ConvexPolygon.from_points([(0, 0), (1, 0), (0, 1)])
    big = g.ConvexPolygon.from_points([(0, 0), (2, 0), (0, 1)])
    assert not g.lattice_equivalent(tri, big)
    assert not g.lattice_equivalent(g.ConvexPolygon.from_points([(0, 0), (1, 0)]),
                                    g.ConvexPolygon.from_points([(0, 0), (2, 0)]))
    with pytest.raises(NotIntegral):
        g.lattice_equivalent(tri, g.ConvexPolygon.from_points([(0, 0), (Fraction(1, 2), 0), (0, 1)]))


def test_dilate_and_clip():
    sq = g.ConvexPolygon.from_points([(0, 0), (1, 0), (1, 1), (0, 1)])
    assert g.dilate(sq, 3).vrep == ((0, 0), (3, 0), (3, 3), (0, 3))
    quadrant = g.intersect([g.HalfPlane((1, 0), 0), g.HalfPlane((0, 1), 0)])
    assert g.clip(quadrant, (-2, -2, 2, 2)).vrep == ((0, 0), (2, 0), (2, 2), (0, 2))


def test_refine_cones_cover_halfplane():
    base = g.Cone2.from_inequalities([(1, 0)])
    cones = g.refine_cones(base, g.Cone2.from_rays((1, 1), (1, -1)))
    assert all(c.kind == "pointed" for c in cones)
    rng = random.Random(3)
    for _ in range(100):
        v = (rng.randint(0, 9), rng.randint(-9, 9))
        assert any(c.contains(v) for c in cones)
