"""The detropicalization A_s = K[x1, x2, y1^+-, y2^+-]/(x1 x2 - y1^s - y2^s, y2 - 1).

Elements are stored over the basis ``x1^w1 x2^w2 y1^z1`` (with
``min(w1, w2) = 0``), optionally times Laurent monomials ``t^r`` in extra
variables.  The y2 exponent is never stored: y2 = 1 in A_s, and the
exponent ``z2 = -z1 - s*w2`` of the matching vector of MM_s is derived.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Dict, List, Tuple

from . import geometry as g
from .convex import PLHalfSpace, PLPolytope, _chart_region, point_convex_hull
from .errors import NotCompact, ZeroElement
from .lattice import Chart, MElement, check_s
from .plfunc import INFINITY, PLFunction, canonicalize
from .points import element_to_mvec, evaluate, mvec_to_element, phi, tilde_w


def _trim(t) -> Tuple[int, ...]:
    t = list(t)
    while t and t[-1] == 0:
        t.pop()
    return tuple(t)


def _tadd(t1, t2) -> Tuple[int, ...]:
    n = max(len(t1), len(t2))
    a = list(t1) + [0] * (n - len(t1))
    b = list(t2) + [0] * (n - len(t2))
    return _trim(x + y for x, y in zip(a, b))


@dataclass(frozen=True, order=True)
class Monomial:
    w1: int = 0
    w2: int = 0
    z1: int = 0
    t: Tuple[int, ...] = ()

    def __post_init__(self):
        if min(self.w1, self.w2) != 0:
            raise ValueError(f"basis monomial needs min(w1, w2) = 0, got ({self.w1}, {self.w2})")
        object.__setattr__(self, "t", _trim(self.t))

    def z2(self, s: int) -> int:
        return -self.z1 - s * self.w2

    def mvec(self, s: int) -> Tuple[int, int, int, int]:
        return (self.w1, self.w2, self.z1, self.z2(s))

    def element(self, s: int) -> MElement:
        return mvec_to_element(s, self.mvec(s))

    @classmethod
    def from_element(cls, s: int, m, t=()) -> "Monomial":
        w1, w2, z1, _ = element_to_mvec(s, m)
        return cls(w1, w2, z1, tuple(t))

    def without_t(self) -> "Monomial":
        return Monomial(self.w1, self.w2, self.z1)

    def pretty(self, s: int) -> str:
        parts = []
        for name, e in (("x1", self.w1), ("x2", self.w2), ("y1", self.z1), ("y2", self.z2(s))):
            if e:
                parts.append(name if e == 1 else f"{name}^{e}")
        for i, e in enumerate(self.t, 1):
            if e:
                parts.append(f"t{i}" if e == 1 else f"t{i}^{e}")
        return "*".join(parts) if parts else "1"


class AlgebraElement:
    """A finite linear combination of basis monomials with rational coefficients."""

    __slots__ = ("s", "terms")

    def __init__(self, s: int, terms=None):
        self.s = check_s(s)
        out: Dict[Monomial, Fraction] = {}
        items = terms.items() if isinstance(terms, dict) else (terms or [])
        for m, c in items:
            c = Fraction(c)
            if c:
                out[m] = out.get(m, 0) + c
                if out[m] == 0:
                    del out[m]
        self.terms = out

    @classmethod
    def monomial(cls, s: int, m: Monomial, c=1) -> "AlgebraElement":
        return cls(s, {m: c})

    @classmethod
    def const(cls, s: int, c) -> "AlgebraElement":
        return cls(s, {Monomial(): c})

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other):
        other = _coerce(self.s, other)
        d = dict(self.terms)
        for m, c in other.terms.items():
            d[m] = d.get(m, 0) + c
        return AlgebraElement(self.s, d)

    __radd__ = __add__

    def __neg__(self):
        return AlgebraElement(self.s, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-_coerce(self.s, other))

    def __rsub__(self, other):
        return _coerce(self.s, other) - self

    def __mul__(self, other):
        return multiply(self, _coerce(self.s, other))

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers are only defined for units")
        out = AlgebraElement.const(self.s, 1)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if not isinstance(other, AlgebraElement):
            try:
                other = _coerce(self.s, other)
            except TypeError:
                return NotImplemented
        return self.s == other.s and self.terms == other.terms

    def __hash__(self):
        return hash((self.s, frozenset(self.terms.items())))

    def sorted_terms(self) -> List[Tuple[Monomial, Fraction]]:
        return sorted(self.terms.items())

    def pretty(self) -> str:
        if not self.terms:
            return "0"
        out = []
        for m, c in self.sorted_terms():
            mono = m.pretty(self.s)
            if mono == "1":
                body = str(abs(c))
            elif abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}*{mono}"
            sign = "-" if c < 0 else "+"
            out.append((sign, body))
        text = ("-" if out[0][0] == "-" else "") + out[0][1]
        for sign, body in out[1:]:
            text += f" {sign} {body}"
        return text

    def __repr__(self):
        return f"AlgebraElement(s={self.s}, {self.pretty()})"


def _coerce(s: int, x) -> AlgebraElement:
    if isinstance(x, AlgebraElement):
        if x.s != s:
            raise ValueError("elements over different s")
        return x
    if isinstance(x, (int, Fraction)) and not isinstance(x, bool):
        return AlgebraElement.const(s, x)
    raise TypeError(f"cannot use {x!r} as an algebra element")


def multiply_monomials(s: int, m1: Monomial, m2: Monomial) -> Dict[Monomial, int]:
    """Product of two basis monomials, rewritten via x1 x2 = y1^s + 1."""
    w1, w2 = m1.w1 + m2.w1, m1.w2 + m2.w2
    z1 = m1.z1 + m2.z1
    t = _tadd(m1.t, m2.t)
    k = min(w1, w2)
    return {Monomial(w1 - k, w2 - k, z1 + s * j, t): comb(k, j) for j in range(k + 1)}


def multiply(f: AlgebraElement, h: AlgebraElement, s: int = None) -> AlgebraElement:
    s = f.s if s is None else s
    if f.s != s or h.s != s:
        raise ValueError("elements over different s")
    out: Dict[Monomial, Fraction] = {}
    for m1, c1 in f.terms.items():
        for m2, c2 in h.terms.items():
            for m, k in multiply_monomials(s, m1, m2).items():
                out[m] = out.get(m, 0) + c1 * c2 * k
    return AlgebraElement(s, out)


# --- valuation -----------------------------------------------------------

def monomial_valuation(s: int, m: Monomial):
    """The point valuing a basis monomial (t-exponents are ignored)."""
    return phi(s, tilde_w(s, m.mvec(s)))


def valuation(f: AlgebraElement) -> PLFunction:
    if f.is_zero():
        return INFINITY
    return canonicalize(PLFunction(tuple(monomial_valuation(f.s, m)) for m in f.terms))


def support(f: AlgebraElement) -> PLPolytope:
    if f.is_zero():
        raise ZeroElement("the zero element has no support")
    elems = sorted({m.element(f.s) for m in f.terms})
    return point_convex_hull(elems, f.s)


def section_membership(f: AlgebraElement, P: PLPolytope, k: int) -> bool:
    """Whether ``f`` lies in the space of sections of ``kP``."""
    if not P.compact:
        raise NotCompact("section spaces need a compact polytope")
    for m in f.terms:
        e = m.element(f.s)
        for h in P.constraints:
            if evaluate(h.p, e) < k * h.a:
                return False
    return True


def lattice_points(region: g.Region) -> List[Tuple[int, int]]:
    """Integer points of a bounded region, sorted."""
    if isinstance(region, g.Empty):
        return []
    if not isinstance(region, g.ConvexPolygon):
        raise NotCompact("cannot enumerate lattice points of an unbounded region")
    xs = [v[0] for v in region.vrep]
    ys = [v[1] for v in region.vrep]
    out = []
    for x in range(math.ceil(min(xs)), math.floor(max(xs)) + 1):
        for y in range(math.ceil(min(ys)), math.floor(max(ys)) + 1):
            if region.contains((x, y)):
                out.append((x, y))
    return out


def graded_piece(P: PLPolytope, rbar) -> List[Monomial]:
    """Basis monomials ``b_m`` with ``p_i(m) + r_i >= 0`` for every constraint point."""
    if not P.compact:
        raise NotCompact("graded pieces need a compact polytope")
    if len(rbar) != len(P.constraints):
        raise ValueError("need one r_i per constraint")
    cs = [PLHalfSpace(h.p, -r) for h, r in zip(P.constraints, rbar)]
    region = _chart_region(P.s, cs, Chart.ONE)
    if isinstance(region, g.Unbounded):
        raise NotCompact("region is unbounded for these degrees")
    return sorted(Monomial.from_element(P.s, m) for m in lattice_points(region))


# --- units ---------------------------------------------------------------

def unit_group(s: int) -> Monomial:
    """Generator of the units of A_s modulo scalars: y1 y2^-1."""
    check_s(s)
    return Monomial(0, 0, 1)


def is_unit(f: AlgebraElement) -> bool:
    """``f = c * (y1 y2^-1)^k`` with ``c != 0`` (elements of A_s, no t-variables)."""
    if len(f.terms) != 1:
        return False
    (m,) = f.terms
    return m.w1 == 0 and m.w2 == 0 and not m.t
