import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from polyptych import geometry as g
from polyptych.algebra import lattice_points
from polyptych.convex import (
    PLHalfSpace,
    drop_redundant,
    dual_polytope,
    halfspace_chart_image,
    is_chart_gorenstein_fano,
    origin_interior,
    pl_polytope,
    pl_vertices,
    point_convex_hull,
    support_function,
)
from polyptych.errors import NotCompact, OriginNotInterior
from polyptych.instances import INSTANCES, get
from polyptych.lattice import Chart, MElement
from polyptych.points import PointTriple, dual_pairing_w, evaluate

GF = ["gf-s1-quad", "gf-s1-hex", "gf-s2", "gf-s3", "gf-s4", "gf-s1-nonintegral-dual"]


def _rand_rat(rng, r=4, d=4):
    return Fraction(rng.randint(-r * d, r * d), rng.randint(1, d))


@pytest.mark.parametrize("name", GF)
def test_chart_images_describe_the_same_set(name):
    inst = get(name)
    P = inst.polytope()
    rng = random.Random(name)
    for _ in range(300):
        m = MElement(_rand_rat(rng), _rand_rat(rng))
        inside = P.contains(m)
        assert P.image(Chart.ONE).contains(m.chart(inst.s, Chart.ONE)) == inside
        assert P.image(Chart.TWO).contains(m.chart(inst.s, Chart.TWO)) == inside


@pytest.mark.parametrize("name", GF)
def test_examples_are_chart_gorenstein_fano(name):
    assert is_chart_gorenstein_fano(get(name).polytope())


@pytest.mark.parametrize("name", GF)
def test_bidual_is_the_polytope(name):
    P = get(name).polytope()
    DD = dual_polytope(dual_polytope(P))
    assert all(DD.image(ch) == P.image(ch) for ch in Chart)


@pytest.mark.parametrize("name", GF)
def test_dual_is_the_support_function_superlevel_set(name):
    P = get(name).polytope()
    D = dual_polytope(P)
    rng = random.Random(name)
    for _ in range(150):
        n = MElement(_rand_rat(rng, 3), _rand_rat(rng, 3))
        assert D.contains(n) == (support_function(P, n) >= -1)


@pytest.mark.parametrize("name", GF)
def test_support_function_is_a_minimum(name):
    # every sampled element of P is an upper bound, and some vertex attains it
    P = get(name).polytope()
    s = P.s
    rng = random.Random(name + "psi")
    img = P.image(Chart.ONE)
    axis = g.intersect(list(img.hrep) + [g.HalfPlane((0, 1), 0), g.HalfPlane((0, -1), 0)])
    cands = list(img.vrep) + list(axis.vrep)
    for _ in range(40):
        n = (rng.randint(-4, 4), rng.randint(-4, 4))
        psi = support_function(P, n)
        vals = [evaluate(dual_pairing_w(s, u), n) for u in cands]
        assert psi == min(vals)
        for _ in range(20):
            u = (_rand_rat(rng, 2), _rand_rat(rng, 2))
            if img.contains(u):
                assert evaluate(dual_pairing_w(s, u), n) >= psi


def test_first_example_dual_is_lattice_equivalent_across_charts():
    D = dual_polytope(get("gf-s1-quad").polytope())
    assert g.lattice_equivalent(D.image(Chart.ONE), D.image(Chart.TWO))


def test_s4_dual_charts_coincide():
    D = dual_polytope(get("gf-s4").polytope())
    assert D.image(Chart.ONE) == D.image(Chart.TWO)
    assert D.image(Chart.ONE).vrep == ((-2, -1), (1, 0), (0, 1))


def test_nonintegral_dual():
    D = dual_polytope(get("gf-s1-nonintegral-dual").polytope())
    img = D.image(Chart.TWO)
    assert (Fraction(1, 2), 0) in img.vrep
    assert not g.is_integral(img)
    assert not is_chart_gorenstein_fano(D)


def test_dual_point_that_the_drawing_omits():
    # (2, 1) pairs with P through one of P's own defining points, so it lies in the dual
    inst = get("gf-s1-nonintegral-dual")
    P = inst.polytope()
    w = dual_pairing_w(1, (2, 1))
    assert w == PointTriple(2, -2, 1) and w in [h.p for h in P.constraints]
    assert support_function(P, (2, 1)) == -1
    assert dual_polytope(P).contains(MElement(2, 1))


def test_halfspace_images_of_first_example():
    s, p = 1, PointTriple(-2, 2, 1)
    img = halfspace_chart_image(s, PLHalfSpace(p, -1), Chart.ONE)
    assert isinstance(img, g.Unbounded)
    assert img.contains((-1, 0)) and img.contains((1, 1)) and not img.contains((0, 1))


def test_noncompact_and_origin_errors():
    P = pl_polytope(1, [((0, 0, 1), -1)])
    assert not P.compact
    with pytest.raises(NotCompact):
        pl_vertices(P)
    Q = pl_polytope(1, [((0, 0, 1), 0), ((0, 0, -1), -1), ((1, -1, 0), -1), ((-1, 1, 0), -1)])
    assert Q.compact and not origin_interior(Q)
    with pytest.raises(OriginNotInterior):
        dual_polytope(Q)


def test_drop_redundant_keeps_the_set():
    inst = get("gf-s1-quad")
    P = pl_polytope(1, list(zip(inst.triples(), [-1, -1, -1])) + [((0, 0, 1), -5)])
    R = drop_redundant(P)
    assert len(R.constraints) == 3
    assert all(R.image(ch) == P.image(ch) for ch in Chart)


def test_dilation():
    P = get("gf-s1-quad").polytope()
    P2 = P.dilate(2)
    assert all(P2.image(ch) == g.dilate(P.image(ch), 2) for ch in Chart)


# --- point-convex hull ---------------------------------------------------

def test_three_point_hull():
    H = point_convex_hull([(0, 0), (0, 1), (0, -1)], 1)
    assert H.image(Chart.ONE).vrep == ((0, -1), (Fraction(1, 2), 0), (0, 1))
    assert H.image(Chart.TWO).vrep == ((-1, -1), (0, 0), (0, 1))


def test_single_point_hull():
    H = point_convex_hull([(2, -1)], 2)
    assert H.image(Chart.ONE).vrep == ((2, -1),)


def test_hull_of_chart_one_polygon_in_upper_half():
    # entirely in y >= 0, where both charts agree up to a linear map
    S = [(0, 0), (2, 0), (0, 2)]
    H = point_convex_hull(S, 1)
    assert H.image(Chart.ONE) == g.ConvexPolygon.from_points(S)


elements = st.lists(st.tuples(st.integers(-3, 3), st.integers(-3, 3)), min_size=1, max_size=5)


@given(elements, st.integers(1, 3))
@settings(max_examples=60, deadline=None)
def test_hull_contains_S_and_sits_in_every_halfspace(S, s):
    H = point_convex_hull(S, s)
    Ms = [MElement(*e) for e in S]
    assert all(H.contains(m) for m in Ms)
    img = H.image(Chart.ONE)
    for a in range(-5, 6):
        for c in range(-5, 6):
            p = PointTriple(a, min(0, s * c) - a, c)
            lam = min(evaluate(p, m) for m in Ms)
            assert all(evaluate(p, v) >= lam for v in img.vrep)


@given(elements, st.integers(1, 3))
@settings(max_examples=40, deadline=None)
def test_hull_absorbs_its_lattice_points(S, s):
    H = point_convex_hull(S, s)
    H2 = point_convex_hull(list(S) + lattice_points(H.image(Chart.ONE)), s)
    assert all(H2.image(ch) == H.image(ch) for ch in Chart)


def test_instances_validate():
    for inst in INSTANCES.values():
        inst.triples()
