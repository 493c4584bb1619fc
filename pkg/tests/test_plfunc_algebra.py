import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from polyptych.algebra import (
    AlgebraElement,
    Monomial,
    graded_piece,
    is_unit,
    monomial_valuation,
    multiply,
    section_membership,
    support,
    unit_group,
    valuation,
)
from polyptych.errors import ParseError, UnboundSymbol, ZeroElement
from polyptych.instances import get
from polyptych.lattice import MElement
from polyptych.parse import parse_algebra, parse_polynomial
from polyptych.plfunc import INFINITY, PLFunction, canonicalize, pl_add, pl_eq, pl_eval, pl_geq, pl_min
from polyptych.points import PointTriple, dual_pairing_w, evaluate

coef = st.integers(-5, 5)
pieces = st.lists(st.tuples(coef, coef, coef), min_size=1, max_size=5)
GRID = [MElement(Fraction(x, 2), Fraction(y, 2)) for x in range(-12, 13) for y in range(-12, 13)]


def _brute(pcs, m):
    return min(evaluate(PointTriple(*p), m) for p in pcs)


@given(pieces)
def test_eval_is_min_of_pieces(pcs):
    f = PLFunction(pcs)
    for m in GRID[::7]:
        assert pl_eval(f, m) == _brute(pcs, m)


@given(pieces)
@settings(max_examples=150)
def test_canonicalize_keeps_the_function(pcs):
    f = PLFunction(pcs)
    c = canonicalize(f)
    assert len(c.pieces) <= len(f.pieces)
    for m in GRID[::5]:
        assert pl_eval(c, m) == pl_eval(f, m)
    assert canonicalize(c) == c


@given(pieces, pieces)
@settings(max_examples=80)
def test_order_against_a_grid(p1, p2):
    f, h = PLFunction(p1), PLFunction(p2)
    # pieces are positively homogeneous, so a fine grid around the origin decides the order
    brute = all(_brute(p1, m) >= _brute(p2, m) for m in GRID)
    assert pl_geq(f, h) == brute
    assert pl_eq(f, h) == (brute and all(_brute(p2, m) >= _brute(p1, m) for m in GRID))


@given(pieces, pieces)
def test_min_and_add(p1, p2):
    f, h = PLFunction(p1), PLFunction(p2)
    for m in GRID[::23]:
        assert pl_eval(pl_min(f, h), m) == min(_brute(p1, m), _brute(p2, m))
        assert pl_eval(pl_add(f, h), m) == _brute(p1, m) + _brute(p2, m)


def test_infinity():
    assert INFINITY.is_infinity
    assert pl_eval(INFINITY, (1, 1)) == math.inf
    f = PLFunction([(0, 0, 1)])
    assert pl_eq(pl_min(f, INFINITY), f)
    assert pl_add(f, INFINITY).is_infinity
    assert pl_geq(INFINITY, f) and not pl_geq(f, INFINITY)


@pytest.mark.parametrize("s", [1, 2, 3])
def test_representation_independent_equality(s):
    assert pl_eq(PLFunction([(-s, 0, 0)]), PLFunction([(0, 0, 0), (-s, s, 0)]))
    assert PLFunction([(-s, 0, 0)]) != PLFunction([(0, 0, 0), (-s, s, 0)])


# --- algebra --------------------------------------------------------------

monos = st.builds(lambda w, side, z: Monomial(w, 0, z) if side else Monomial(0, w, z),
                  st.integers(0, 3), st.booleans(), st.integers(-3, 3))


def elements(s):
    return st.dictionaries(monos, st.integers(-3, 3).filter(bool), min_size=1, max_size=4).map(
        lambda d: AlgebraElement(s, d))


@given(st.integers(1, 3).flatmap(lambda s: st.tuples(elements(s), elements(s), elements(s))))
@settings(max_examples=80, deadline=None)
def test_ring_axioms(fgh):
    f, g_, h = fgh
    assert f * g_ == g_ * f
    assert (f * g_) * h == f * (g_ * h)
    assert f * (g_ + h) == f * g_ + f * h


@pytest.mark.parametrize("s", [1, 2, 3])
def test_defining_relation(s):
    x1 = parse_algebra("x1", s)
    x2 = parse_algebra("x2", s)
    assert x1 * x2 == parse_algebra(f"y1^{s} + 1", s)
    assert parse_algebra("y2", s) == 1


@given(st.integers(1, 3).flatmap(lambda s: st.tuples(elements(s), elements(s))))
@settings(max_examples=150, deadline=None)
def test_valuation_is_multiplicative(fh):
    f, h = fh
    if f.is_zero() or h.is_zero():
        return
    assert pl_eq(valuation(multiply(f, h)), pl_add(valuation(f), valuation(h)))


@given(st.integers(1, 3).flatmap(elements))
def test_valuation_of_a_sum_is_the_min(f):
    if f.is_zero():
        return
    want = PLFunction([tuple(monomial_valuation(f.s, m)) for m in f.terms])
    assert pl_eq(valuation(f), want)


def test_valuation_examples():
    assert valuation(parse_algebra("x1", 1)) == PLFunction([(0, 0, 1)])
    assert valuation(parse_algebra("0", 1)).is_infinity
    v = valuation(parse_algebra("x1*x2", 1))
    assert pl_eq(v, PLFunction([(-1, 1, 0), (0, 0, 0)]))


@given(st.integers(1, 4), st.integers(-5, 5), st.integers(-5, 5))
def test_monomial_valuation_is_the_pairing(s, x, y):
    assert monomial_valuation(s, Monomial.from_element(s, (x, y))) == dual_pairing_w(s, (x, y))


def test_units():
    for s in (1, 2, 3):
        u = unit_group(s)
        assert AlgebraElement.monomial(s, u).pretty() == "y1*y2^-1"
        assert is_unit(AlgebraElement.monomial(s, Monomial(0, 0, -3), 5))
        assert not is_unit(AlgebraElement.monomial(s, Monomial(1, 0, 0)))
        assert not is_unit(parse_algebra("y1 + 1", s))
        assert not is_unit(AlgebraElement(s))


def test_support_and_sections():
    f = parse_algebra("x1 + y1^-1", 1)
    H = support(f)
    for m in f.terms:
        assert H.contains(m.element(1))
    with pytest.raises(ZeroElement):
        support(AlgebraElement(1))
    P = get("cox-s1").polytope()
    x1 = parse_algebra("x1", 1)
    assert not section_membership(x1, P, 1)
    assert section_membership(x1, P, 2)


def test_graded_piece_matches_the_polytope():
    P = get("gf-s1-quad").polytope()
    got = graded_piece(P, (1, 1, 1))
    want = sorted(Monomial.from_element(1, (x, y)) for x in range(-3, 4) for y in range(-3, 4)
                  if P.contains(MElement(x, y)))
    assert got == want
    assert Monomial() in got


# --- parsing ----------------------------------------------------------------

def test_parse_terms():
    assert parse_polynomial("x1*x2 - y1^2 - 1") == [
        (Fraction(1), {"x1": 1, "x2": 1}), (Fraction(-1), {"y1": 2}), (Fraction(-1), {})]
    assert parse_polynomial(" 3/2 * t1 ^ -2 ") == [(Fraction(3, 2), {"t1": -2})]


@pytest.mark.parametrize("text,pos", [("x1 +", 4), ("x1 ** 2", 4), ("2x1", 1), ("(x1", 0), ("x1^", 3)])
def test_parse_errors_report_positions(text, pos):
    with pytest.raises(ParseError) as err:
        parse_algebra(text, 1)
    assert err.value.pos == pos
    assert f"position {pos}" in str(err.value)


def test_parse_rejects_bad_symbols_and_exponents():
    with pytest.raises(UnboundSymbol):
        parse_algebra("z1", 1)
    with pytest.raises(ParseError):
        parse_algebra("x1^-1", 1)
    assert parse_algebra("y1^-1*y1", 2) == 1


@given(st.integers(1, 3).flatmap(elements))
def test_pretty_round_trip(f):
    assert parse_algebra(f.pretty(), f.s) == f
