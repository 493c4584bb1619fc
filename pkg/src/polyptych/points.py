"""Points of M_s, the self-dual pairing, and the 4-coordinate embeddings.

A point is stored as the triple ``(a, b, c)`` of its values on the chart-1
vectors ``(0, 1)``, ``(0, -1)`` and ``(1, 0)``; the triple lies on
``T_s = {a + b = min(0, s*c)}``.  In chart 1 the point evaluates to
``c*x + a*y`` on ``y >= 0`` and ``c*x - b*y`` on ``y <= 0``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import FrozenSet, Tuple

from .errors import DomainViolation, InvalidTriple
from .lattice import Chart, MElement, Scalar, Vec, add_in_chart, q

Vec4 = Tuple[int, int, int, int]


@dataclass(frozen=True, order=True)
class PointTriple:
    a: Scalar
    b: Scalar
    c: Scalar

    def __iter__(self):
        yield self.a
        yield self.b
        yield self.c

    def __str__(self) -> str:
        return f"({self.a}, {self.b}, {self.c})"


def on_T(s: int, a, b, c) -> bool:
    return a + b == min(0, s * c)


def point_from_triple(s: int, a, b, c) -> PointTriple:
    a, b, c = q(a), q(b), q(c)
    if not on_T(s, a, b, c):
        raise InvalidTriple(
            f"({a}, {b}, {c}) is not on T_{s}: a+b = {a + b} but min(0, s*c) = {min(0, s * c)}"
        )
    return PointTriple(a, b, c)


def _xy(m) -> Vec:
    return (m.x, m.y) if isinstance(m, MElement) else (m[0], m[1])


def evaluate(p, m) -> Scalar:
    """Value of ``p`` on the element with chart-1 coordinates ``m``."""
    a, b, c = p
    x, y = _xy(m)
    return c * x + a * y if y >= 0 else c * x - b * y


def evaluate_chart2(s: int, p, v) -> Scalar:
    a, b, c = p
    x2, y2 = v
    if y2 >= 0:
        return -c * x2 + a * y2
    return -c * x2 + (s * c - b) * y2


def chart_linear_parts(s: int, p, chart: Chart):
    """The two linear extensions of ``p`` on a chart, as coefficient pairs.

    ``p`` restricted to the chart is the minimum of the two.
    """
    a, b, c = p
    if Chart(chart) is Chart.ONE:
        return ((c, a), (c, -b))
    return ((-c, a), (-c, s * c - b))


def point_axiom_check(s: int, p, m, m2) -> bool:
    m, m2 = MElement(*_xy(m)), MElement(*_xy(m2))
    lhs = evaluate(p, m) + evaluate(p, m2)
    rhs = min(evaluate(p, add_in_chart(s, m, m2, ch)) for ch in Chart)
    return lhs == rhs


def linear_charts(s: int, p) -> FrozenSet[Chart]:
    a, b, c = p
    out = set()
    if a + b == 0:
        out.add(Chart.ONE)
    if a + b == s * c:
        out.add(Chart.TWO)
    return frozenset(out)


def dual_pairing_w(s: int, m) -> PointTriple:
    x, y = _xy(m)
    if y >= 0:
        return PointTriple(x, -x, y)
    return PointTriple(x, s * y - x, y)


def check_symmetry(s: int, m, m2) -> bool:
    return evaluate(dual_pairing_w(s, m), m2) == evaluate(dual_pairing_w(s, m2), m)


def primitive_triple(p) -> PointTriple:
    """Scale a nonzero rational triple by a positive rational to a primitive integer one."""
    vals = [Fraction(v) for v in p]
    lcm = 1
    for v in vals:
        lcm = lcm * v.denominator // math.gcd(lcm, v.denominator)
    ints = [int(v * lcm) for v in vals]
    g = math.gcd(*ints)
    if g == 0:
        raise ValueError("cannot scale the zero triple")
    return PointTriple(*(i // g for i in ints))


# --- 4-coordinate models: M_s(1), M_s(2), the set MM_s and TT_s ---------------

def theta1(v: Vec) -> Vec4:
    x, y = v
    return (y, 0, 0, x)


def theta1_inv(v: Vec4) -> Vec:
    a1, a2, b1, b2 = v
    if a2 != 0 or b1 != 0:
        raise DomainViolation(f"{v} is not in M_s(1)")
    return (b2, a1)


def theta2(v: Vec) -> Vec4:
    u, w = v
    return (w, 0, u, 0)


def theta2_inv(v: Vec4) -> Vec:
    c1, c2, d1, d2 = v
    if c2 != 0 or d2 != 0:
        raise DomainViolation(f"{v} is not in M_s(2)")
    return (d1, c1)


def is_mvec(s: int, v) -> bool:
    w1, w2, z1, z2 = v
    return min(w1, w2) == 0 and z1 + z2 == -s * w2


def is_tvec(s: int, t) -> bool:
    a1, a2, b1, b2 = t
    return b2 == 0 and a1 + a2 == s * min(b1, b2)


def _require_mvec(s: int, v) -> None:
    if not is_mvec(s, v):
        raise DomainViolation(f"{tuple(v)} is not in MM_{s}")


def psi1(s: int, v: Vec4) -> Vec4:
    _require_mvec(s, v)
    w1, w2, z1, z2 = v
    return (w1 - w2, 0, 0, z2)


def psi2(s: int, v: Vec4) -> Vec4:
    _require_mvec(s, v)
    w1, w2, z1, z2 = v
    return (w1 - w2, 0, z1, 0)


def psi1_inv(s: int, v: Vec4) -> Vec4:
    a, zero1, zero2, b = v
    if zero1 != 0 or zero2 != 0:
        raise DomainViolation(f"{v} is not in M_s(1)")
    if a >= 0:
        return (a, 0, -b, b)
    return (0, -a, s * a - b, b)


def psi2_inv(s: int, v: Vec4) -> Vec4:
    c, zero1, d, zero2 = v
    if zero1 != 0 or zero2 != 0:
        raise DomainViolation(f"{v} is not in M_s(2)")
    if c >= 0:
        return (c, 0, d, -d)
    return (0, -c, d, s * c - d)


def mutate4(s: int, v: Vec4) -> Vec4:
    """The mutation M_s(1) -> M_s(2) in 4-coordinates."""
    a, _, _, b = v
    return (a, 0, min(0, s * a) - b, 0)


def mvec_to_element(s: int, v: Vec4) -> MElement:
    """Chart-1 element of a vector of MM_s (via Psi_1 and Theta_1^{-1})."""
    x, y = theta1_inv(psi1(s, v))
    return MElement(x, y)


def element_to_mvec(s: int, m) -> Vec4:
    return psi1_inv(s, theta1(_xy(m)))


def phi(s: int, t) -> PointTriple:
    if not is_tvec(s, t):
        raise DomainViolation(f"{tuple(t)} is not in TT_{s}")
    a1, a2, b1, _ = t
    return PointTriple(a1, a2 - s * b1, -b1)


def upsilon(s: int, p) -> Tuple:
    a, b, c = p
    if not on_T(s, a, b, c):
        raise DomainViolation(f"{tuple(p)} is not on T_{s}")
    return (a, b - s * c, -c, 0)


def f_pairing(t, v) -> Scalar:
    """The inner-product function of a TT_s vector on MM_s."""
    a1, a2, b1, b2 = t
    w1, w2, z1, z2 = v
    return a1 * w1 + a2 * w2 + b1 * z1 + b2 * z2


def tilde_w(s: int, v: Vec4) -> Tuple:
    _require_mvec(s, v)
    w1, w2, z1, z2 = v
    d = w1 - w2
    if d >= 0:
        return (z2, -z2 - s * d, -d, 0)
    return (z2, -z2, -d, 0)


def evaluate_on_mvec(s: int, p, v: Vec4) -> Scalar:
    return evaluate(p, mvec_to_element(s, v))
