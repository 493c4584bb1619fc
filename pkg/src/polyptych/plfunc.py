"""The point semialgebra: minima of finitely many piecewise-linear pieces.

A piece ``(A, B, C)`` takes the value ``C*x + A*y`` for ``y >= 0`` and
``C*x - B*y`` for ``y <= 0`` at chart-1 coordinates ``(x, y)``.  Every point
triple is a piece; sums of points are pieces that need not lie on T_s.
The empty piece set stands for the top element (the valuation of 0).
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import FrozenSet, Iterable, List, Tuple

from .lattice import q

Piece = Tuple  # (A, B, C)


def _piece(p) -> Piece:
    a, b, c = p
    return (q(a), q(b), q(c))


class PLFunction:
    __slots__ = ("pieces",)

    def __init__(self, pieces: Iterable = ()):
        self.pieces: FrozenSet[Piece] = frozenset(_piece(p) for p in pieces)

    @property
    def is_infinity(self) -> bool:
        return not self.pieces

    def sorted_pieces(self) -> List[Piece]:
        return sorted(self.pieces)

    def __eq__(self, other):
        # structural equality; use pl_eq for equality as functions
        return isinstance(other, PLFunction) and self.pieces == other.pieces

    def __hash__(self):
        return hash(self.pieces)

    def __repr__(self):
        if self.is_infinity:
            return "PLFunction(inf)"
        return "PLFunction(" + ", ".join(str(tuple(p)) for p in self.sorted_pieces()) + ")"


INFINITY = PLFunction()


def _restrict(p: Piece, sign: int):
    """(slope, intercept) of the piece along the rays ``(x, sign)``."""
    a, b, c = p
    return (c, a) if sign > 0 else (c, b)


def _envelope(lines) -> List[Tuple]:
    """Lower envelope of ``x -> m*x + k`` over the reals, left to right.

    Returns the distinct lines that are minimal on an interval of positive
    length.
    """
    best = {}
    for m, k in lines:
        if m not in best or k < best[m]:
            best[m] = k
    ls = sorted(best.items(), key=lambda t: -t[0])  # slope descending
    hull: List[Tuple] = []
    for m, k in ls:
        while len(hull) >= 2:
            (m1, k1), (m2, k2) = hull[-2], hull[-1]
            # hull[-1] is useless if the new line undercuts it before it leaves hull[-2]
            # x12 = (k2-k1)/(m1-m2), x13 = (k-k1)/(m1-m)
            if (k - k1) * (m1 - m2) <= (k2 - k1) * (m1 - m):
                hull.pop()
            else:
                break
        hull.append((m, k))
    return hull


def _breakpoints(env) -> List[Fraction]:
    return [Fraction(k2 - k1) / (m1 - m2) for (m1, k1), (m2, k2) in zip(env, env[1:])]


def _line_value(line, x):
    return line[0] * x + line[1]


def canonicalize(f: PLFunction) -> PLFunction:
    """Drop pieces that never attain the minimum on an open set."""
    if f.is_infinity:
        return f
    pieces = f.sorted_pieces()
    ess = {}
    for sign in (1, -1):
        ess[sign] = set(_envelope([_restrict(p, sign) for p in pieces]))
    both = [p for p in pieces if _restrict(p, 1) in ess[1] and _restrict(p, -1) in ess[-1]]
    keep = list(both)
    for sign in (1, -1):
        covered = {_restrict(p, sign) for p in keep}
        for line in sorted(ess[sign]):
            if line in covered:
                continue
            rep = min(p for p in pieces if _restrict(p, sign) == line)
            keep.append(rep)
            covered.add(line)
    return PLFunction(keep)


def pl_eval(f: PLFunction, m):
    """Value at chart-1 coordinates ``m``; ``math.inf`` for the top element."""
    if f.is_infinity:
        return math.inf
    x, y = m
    return min(c * x + a * y if y >= 0 else c * x - b * y for a, b, c in f.pieces)


def pl_min(f: PLFunction, g: PLFunction) -> PLFunction:
    return canonicalize(PLFunction(f.pieces | g.pieces))


def pl_add(f: PLFunction, g: PLFunction) -> PLFunction:
    if f.is_infinity or g.is_infinity:
        return INFINITY
    return canonicalize(PLFunction(
        (a1 + a2, b1 + b2, c1 + c2) for a1, b1, c1 in f.pieces for a2, b2, c2 in g.pieces
    ))


def _test_points(f: PLFunction, g: PLFunction):
    """Chart-1 points at which a pointwise comparison of ``f`` and ``g`` is decisive.

    On each half-plane both functions are minima of linear functions; along
    the rays ``(x, +-1)`` their difference is linear between the envelope
    breakpoints, and the boundary rays ``(+-1, 0)`` control the tails.
    """
    pts = [(1, 0), (-1, 0)]
    for sign in (1, -1):
        xs = {Fraction(0)}
        for h in (f, g):
            xs.update(_breakpoints(_envelope([_restrict(p, sign) for p in h.pieces])))
        pts.extend((q(x), sign) for x in sorted(xs))
    return pts


def pl_geq(f: PLFunction, g: PLFunction) -> bool:
    """``f >= g`` pointwise (the order ``min(f, g) == g``)."""
    if g.is_infinity:
        return f.is_infinity
    if f.is_infinity:
        return True
    return all(pl_eval(f, m) >= pl_eval(g, m) for m in _test_points(f, g))


def pl_eq(f: PLFunction, g: PLFunction) -> bool:
    return pl_geq(f, g) and pl_geq(g, f)


def from_point(p) -> PLFunction:
    return PLFunction([tuple(p)])
