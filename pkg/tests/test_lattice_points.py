from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from polyptych.errors import DomainViolation, InvalidTriple
from polyptych.lattice import (
    H_MINUS,
    H_PLUS,
    Chart,
    MElement,
    add_in_chart,
    check_s,
    mutate,
    mutation_matrix,
    pl_fan,
)
from polyptych.points import (
    PointTriple,
    check_symmetry,
    chart_linear_parts,
    dual_pairing_w,
    element_to_mvec,
    evaluate,
    evaluate_chart2,
    f_pairing,
    is_mvec,
    linear_charts,
    mutate4,
    mvec_to_element,
    on_T,
    phi,
    point_axiom_check,
    point_from_triple,
    primitive_triple,
    psi1,
    psi1_inv,
    psi2,
    psi2_inv,
    theta1,
    theta1_inv,
    theta2,
    theta2_inv,
    tilde_w,
    upsilon,
)

ints = st.integers(-30, 30)
svals = st.integers(1, 5)
rats = st.fractions(min_value=-20, max_value=20, max_denominator=6)


@st.composite
def triples(draw, s=None):
    s = draw(svals) if s is None else s
    a, c = draw(ints), draw(ints)
    return s, PointTriple(a, min(0, s * c) - a, c)


# --- lattice ------------------------------------------------------------

@given(svals, rats, rats)
def test_mutation_is_an_involution(s, x, y):
    assert mutate(s, mutate(s, (x, y))) == (x, y)


def test_mutation_examples():
    assert mutate(1, (0, -1)) == (-1, -1)
    assert mutate(2, (3, 1)) == (-3, 1)
    assert mutate(3, (1, -2)) == (-7, -2)


@given(svals, ints, ints)
def test_mutation_matrix_agrees_on_each_cone(s, x, y):
    for cone in pl_fan(s):
        if cone.contains((x, y)):
            (a, b), (c, d) = mutation_matrix(s, cone)
            assert mutate(s, (x, y)) == (a * x + b * y, c * x + d * y)


def test_fan_cones():
    assert pl_fan(2) == (H_PLUS, H_MINUS)
    assert H_PLUS.contains((5, 0)) and H_MINUS.contains((5, 0))
    assert not H_PLUS.contains((0, -1))


@pytest.mark.parametrize("bad", [0, -1, 1.5, "2"])
def test_check_s_rejects(bad):
    with pytest.raises((ValueError, TypeError)):
        check_s(bad)


@given(svals, ints, ints)
def test_element_chart_round_trip(s, x, y):
    m = MElement(x, y)
    for ch in Chart:
        assert MElement.from_chart(s, ch, m.chart(s, ch)) == m


@given(svals, ints, ints, ints, ints)
def test_chart_addition_is_addition_in_that_chart(s, x, y, u, v):
    m, m2 = MElement(x, y), MElement(u, v)
    assert add_in_chart(s, m, m2, Chart.ONE) == MElement(x + u, y + v)
    s2 = add_in_chart(s, m, m2, Chart.TWO).chart(s, Chart.TWO)
    a, b = m.chart(s, Chart.TWO), m2.chart(s, Chart.TWO)
    assert s2 == (a[0] + b[0], a[1] + b[1])


# --- points -------------------------------------------------------------

def test_point_from_triple_validates():
    assert point_from_triple(1, 1, -1, 1) == PointTriple(1, -1, 1)
    assert point_from_triple(2, 0, -2, -1) == PointTriple(0, -2, -1)
    with pytest.raises(InvalidTriple):
        point_from_triple(1, 1, 1, 1)


@given(triples(), ints, ints)
def test_evaluate_matches_a_linear_form_on_a_chart(st_p, x, y):
    # oracle: a + b = 0 means linear on chart 1, a + b = s c linear on chart 2
    s, p = st_p
    a, b, c = p
    m = MElement(x, y)
    if a + b == 0:
        assert evaluate(p, m) == c * x + a * y
    if a + b == s * c:
        u, v = mutate(s, (x, y))
        assert evaluate(p, m) == -c * u + a * v


@given(triples(), ints, ints)
def test_fullness(st_p, x, y):
    s, p = st_p
    assert linear_charts(s, p)


@given(triples(), ints, ints)
def test_chart2_evaluation(st_p, u, v):
    s, p = st_p
    assert evaluate_chart2(s, p, (u, v)) == evaluate(p, MElement.from_chart(s, Chart.TWO, (u, v)))


@given(triples(), rats, rats)
def test_point_is_min_of_its_chart_extensions(st_p, x, y):
    s, p = st_p
    for ch in Chart:
        v = MElement(x, y).chart(s, ch)
        val = min(n[0] * v[0] + n[1] * v[1] for n in chart_linear_parts(s, p, ch))
        assert val == evaluate(p, MElement(x, y))


@given(triples(), ints, ints, ints, ints)
def test_point_axiom_for_valid_triples(st_p, x, y, u, v):
    s, p = st_p
    assert point_axiom_check(s, p, (x, y), (u, v))


def test_point_axiom_fails_off_T():
    p = PointTriple(1, 0, 1)  # a + b = 1, never min(0, s c)
    assert not on_T(1, *p)
    assert any(not point_axiom_check(1, p, (x, y), (u, v))
               for x in range(-2, 3) for y in range(-2, 3) for u in range(-2, 3) for v in range(-2, 3))


@given(svals, ints, ints, ints, ints)
def test_pairing_symmetry_and_sign(s, x, y, u, v):
    assert check_symmetry(s, (x, y), (u, v))
    w = dual_pairing_w(s, (x, y))
    assert on_T(s, *w)
    assert (w.c > 0) - (w.c < 0) == (y > 0) - (y < 0)


def test_primitive_triple():
    assert primitive_triple((Fraction(1, 2), Fraction(-1, 2), 1)) == PointTriple(1, -1, 2)
    assert primitive_triple((-4, 2, 6)) == PointTriple(-2, 1, 3)
    with pytest.raises(ValueError):
        primitive_triple((0, 0, 0))


# --- 4-coordinate models ---------------------------------------------------

@given(svals, ints, ints)
def test_theta_round_trips(s, x, y):
    assert theta1_inv(theta1((x, y))) == (x, y)
    assert theta2_inv(theta2((x, y))) == (x, y)


@given(svals, ints, ints)
def test_element_mvec_round_trip(s, x, y):
    v = element_to_mvec(s, (x, y))
    assert is_mvec(s, v)
    assert mvec_to_element(s, v) == MElement(x, y)
    assert psi1_inv(s, psi1(s, v)) == v
    assert psi2_inv(s, psi2(s, v)) == v


@given(svals, ints, ints)
def test_mutation_in_four_coordinates(s, x, y):
    v = element_to_mvec(s, (x, y))
    assert mutate4(s, psi1(s, v)) == psi2(s, v)
    assert theta2_inv(psi2(s, v)) == mutate(s, (x, y))


def test_domain_violations():
    with pytest.raises(DomainViolation):
        psi1(1, (1, 1, 0, -1))
    with pytest.raises(DomainViolation):
        theta1_inv((1, 1, 0, 0))
    with pytest.raises(DomainViolation):
        phi(1, (1, 1, 1, 1))
    with pytest.raises(DomainViolation):
        upsilon(1, (1, 1, 1))


@given(triples())
def test_phi_inverts_upsilon(st_p):
    s, p = st_p
    assert phi(s, upsilon(s, p)) == p


@given(svals, ints, ints)
def test_tilde_w_is_the_pairing_in_four_coordinates(s, x, y):
    assert phi(s, tilde_w(s, element_to_mvec(s, (x, y)))) == dual_pairing_w(s, (x, y))


@given(triples(), ints, ints)
def test_inner_product_model_of_evaluation(st_p, x, y):
    s, p = st_p
    assert f_pairing(upsilon(s, p), element_to_mvec(s, (x, y))) == evaluate(p, MElement(x, y))
