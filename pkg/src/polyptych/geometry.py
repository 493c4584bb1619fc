"""Exact rational convex geometry in the plane.

Regions are intersections of closed half-planes ``{v : n.v >= t}``.  An
intersection is classified as :class:`Empty`, a bounded
:class:`ConvexPolygon` (possibly a point or a segment), or
:class:`Unbounded` with its recession cone.  Everything is done over
``Fraction``/``int``; there is no floating point in this module.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, List, Optional, Sequence, Tuple, Union

from .errors import DegenerateInput, NotIntegral
from .lattice import Scalar, Vec, is_integer, q


# --- small vector helpers ------------------------------------------------

def dot(u, v) -> Scalar:
    return u[0] * v[0] + u[1] * v[1]


def cross(u, v) -> Scalar:
    return u[0] * v[1] - u[1] * v[0]


def sub(u, v) -> Vec:
    return (u[0] - v[0], u[1] - v[1])


def perp(v) -> Vec:
    """Rotate by +90 degrees."""
    return (-v[1], v[0])


def _norm(v) -> Vec:
    return (q(v[0]), q(v[1]))


def primitive(v) -> Tuple[int, int]:
    """Primitive integer vector on the ray through the nonzero rational ``v``."""
    x, y = Fraction(v[0]), Fraction(v[1])
    den = x.denominator * y.denominator // math.gcd(x.denominator, y.denominator)
    a, b = int(x * den), int(y * den)
    g = math.gcd(a, b)
    if g == 0:
        raise ValueError("zero vector has no primitive direction")
    return (a // g, b // g)


def _half(v) -> int:
    # 0 for angles in [0, pi), 1 for [pi, 2pi)
    return 0 if (v[1] > 0 or (v[1] == 0 and v[0] > 0)) else 1


def angle_key(v):
    """Sort key giving the counterclockwise angle order from the positive x-axis."""
    return _AngleKey(v)


class _AngleKey:
    __slots__ = ("v", "h")

    def __init__(self, v):
        self.v = v
        self.h = _half(v)

    def __lt__(self, other):
        if self.h != other.h:
            return self.h < other.h
        return cross(self.v, other.v) > 0

    def __eq__(self, other):
        return self.h == other.h and cross(self.v, other.v) == 0


# --- half-planes and cones -----------------------------------------------

@dataclass(frozen=True)
class HalfPlane:
    """The closed half-plane ``{v : normal . v >= threshold}``."""

    normal: Vec
    threshold: Scalar

    def __post_init__(self):
        n = _norm(self.normal)
        if n == (0, 0):
            raise ValueError("half-plane normal must be nonzero")
        object.__setattr__(self, "normal", n)
        object.__setattr__(self, "threshold", q(self.threshold))

    def contains(self, v) -> bool:
        return dot(self.normal, v) >= self.threshold

    def on_boundary(self, v) -> bool:
        return dot(self.normal, v) == self.threshold

    def normalized(self) -> "HalfPlane":
        """Same half-plane with a primitive integer normal."""
        p = primitive(self.normal)
        scale = Fraction(p[0], 1) / self.normal[0] if self.normal[0] != 0 else Fraction(p[1], 1) / self.normal[1]
        return HalfPlane(p, self.threshold * scale)

    def scaled(self, k) -> "HalfPlane":
        return HalfPlane(self.normal, self.threshold * k)

    def __str__(self):
        return f"{self.normal[0]}*x + {self.normal[1]}*y >= {self.threshold}"


@dataclass(frozen=True)
class Cone2:
    """A cone in the plane, as the set of nonnegative combinations of ``gens``.

    ``gens`` are primitive integer vectors.  A pointed cone has at most two
    of them; half-planes, lines and the whole plane carry extra generators
    (``+-b`` plus an inward normal for a half-plane, ``+-e1, +-e2`` for the
    plane).  The zero cone has no generators.
    """

    gens: Tuple[Tuple[int, int], ...]
    kind: str = "pointed"

    @classmethod
    def from_rays(cls, *rays) -> "Cone2":
        rs = []
        for r in rays:
            p = primitive(r)
            if p not in rs:
                rs.append(p)
        if len(rs) > 2 or (len(rs) == 2 and cross(rs[0], rs[1]) == 0):
            raise ValueError("use from_inequalities for non-pointed cones")
        return cls(tuple(rs), "pointed")

    @classmethod
    def from_inequalities(cls, normals: Iterable) -> "Cone2":
        normals = [primitive(n) for n in normals]
        if not normals:
            return FULL_PLANE
        cands = []
        for n in normals:
            for d in (perp(n), (-perp(n)[0], -perp(n)[1])):
                if d not in cands and all(dot(m, d) >= 0 for m in normals):
                    cands.append(d)
        if not cands:
            return cls((), "zero")
        if len(cands) == 2 and cands[0] == (-cands[1][0], -cands[1][1]):
            if all(m == normals[0] for m in normals):
                return cls((cands[0], cands[1], normals[0]), "halfplane")
            return cls(tuple(cands), "line")
        return cls(tuple(sorted(cands, key=angle_key)), "pointed")

    @property
    def is_pointed(self) -> bool:
        return self.kind in ("pointed", "zero")

    def contains(self, v) -> bool:
        if self.kind == "full":
            return True
        if self.kind == "zero":
            return v[0] == 0 and v[1] == 0
        if self.kind in ("halfplane",):
            return dot(self.gens[2], v) >= 0
        if self.kind == "line":
            return cross(self.gens[0], v) == 0
        if len(self.gens) == 1:
            g = self.gens[0]
            return cross(g, v) == 0 and dot(g, v) >= 0
        a, b = self.gens
        if cross(a, b) < 0:
            a, b = b, a
        return cross(a, v) >= 0 and cross(v, b) >= 0


FULL_PLANE = Cone2(((1, 0), (0, 1), (-1, 0), (0, -1)), "full")


def extreme_rays(c: Cone2) -> List[Tuple[int, int]]:
    """Primitive generators of ``c`` (extreme rays when ``c`` is pointed)."""
    return list(c.gens)


def _boundary_dirs(c: Cone2) -> List[Tuple[int, int]]:
    if c.kind == "halfplane":
        return [c.gens[0], c.gens[1]]
    if c.kind == "full":
        return []
    return list(c.gens)


def refine_cones(base: Cone2, *others: Cone2) -> List[Cone2]:
    """Split ``base`` along every boundary ray of ``others`` lying in it.

    The result consists of pointed two-dimensional cones, listed
    counterclockwise, whose union is ``base``.  Angular gaps of 180 degrees
    or more are split further so every piece is strictly convex.
    """
    if base.kind in ("zero", "line") or (base.kind == "pointed" and len(base.gens) < 2):
        return [base]
    dirs = []
    for d in _boundary_dirs(base):
        if d not in dirs:
            dirs.append(d)
    for c in others:
        for d in _boundary_dirs(c):
            if d not in dirs and base.contains(d):
                dirs.append(d)
    if base.kind == "full" and not dirs:
        dirs = [(1, 0)]
    dirs.sort(key=angle_key)
    # walk ccw; for pointed bases the last ray does not wrap around
    closed = base.kind == "full"
    if base.kind == "halfplane":
        # start at the boundary ray from which the interior is ccw
        inward = base.gens[2]
        start = next(i for i, d in enumerate(dirs) if d in base.gens[:2] and cross(d, inward) > 0)
        dirs = dirs[start:] + dirs[:start]
    elif base.kind == "pointed":
        a, b = base.gens
        first = a if cross(a, b) > 0 else b
        start = dirs.index(first)
        dirs = dirs[start:] + dirs[:start]
    out = []
    pairs = list(zip(dirs, dirs[1:] + ([dirs[0]] if closed else [])))
    for u, v in pairs:
        out.extend(_split_sector(u, v))
    return out


def _split_sector(u, v) -> List[Cone2]:
    c = cross(u, v)
    if c > 0:
        return [Cone2((u, v), "pointed")]
    # gap of at least 180 degrees: insert the direction perpendicular to u
    mid = perp(u)
    return [Cone2((u, mid), "pointed")] + _split_sector(mid, v)


# --- regions -------------------------------------------------------------

@dataclass(frozen=True)
class Empty:
    hrep: Tuple[HalfPlane, ...] = ()

    def contains(self, v) -> bool:
        return False

    @property
    def bounded(self) -> bool:
        return True

    def __repr__(self):
        return "Empty()"


@dataclass(frozen=True)
class Unbounded:
    """A nonempty unbounded intersection of half-planes."""

    hrep: Tuple[HalfPlane, ...]
    recession: Cone2
    points: Tuple[Vec, ...] = ()  # vertices, if any

    def contains(self, v) -> bool:
        return all(h.contains(v) for h in self.hrep)

    @property
    def bounded(self) -> bool:
        return False


class ConvexPolygon:
    """A bounded nonempty convex set: a point, a segment or a polygon.

    ``vrep`` is counterclockwise from the lexicographically least vertex with
    no collinear triples.  Two polygons are equal iff their vertex lists are.
    """

    __slots__ = ("hrep", "vrep")

    def __init__(self, hrep: Sequence[HalfPlane], vrep: Sequence[Vec]):
        self.hrep = tuple(hrep)
        self.vrep = tuple(vrep)

    @classmethod
    def from_points(cls, pts: Iterable) -> "ConvexPolygon":
        vs = hull_vertices(pts)
        if not vs:
            raise ValueError("no points")
        return cls(_hrep_from_vertices(vs), vs)

    @property
    def bounded(self) -> bool:
        return True

    @property
    def dim(self) -> int:
        return min(len(self.vrep) - 1, 2)

    def contains(self, v) -> bool:
        return all(h.contains(v) for h in self.hrep)

    def edges(self) -> List[Tuple[Vec, Vec]]:
        n = len(self.vrep)
        if n < 3:
            return []
        return [(self.vrep[i], self.vrep[(i + 1) % n]) for i in range(n)]

    def __eq__(self, other):
        return isinstance(other, ConvexPolygon) and self.vrep == other.vrep

    def __hash__(self):
        return hash(self.vrep)

    def __repr__(self):
        return "ConvexPolygon(" + ", ".join(f"({x}, {y})" for x, y in self.vrep) + ")"


Region = Union[Empty, ConvexPolygon, Unbounded]


def hull_vertices(pts: Iterable) -> Tuple[Vec, ...]:
    """Classical convex hull, ccw from the lexicographic minimum (monotone chain)."""
    P = sorted(set(_norm(p) for p in pts))
    if len(P) <= 2:
        return tuple(P)

    def half(points):
        h = []
        for p in points:
            while len(h) >= 2 and cross(sub(h[-1], h[-2]), sub(p, h[-2])) <= 0:
                h.pop()
            h.append(p)
        return h

    lower = half(P)
    upper = half(reversed(P))
    hull = lower[:-1] + upper[:-1]
    if len(hull) == 2 and hull[0] == hull[1]:
        hull = hull[:1]
    return tuple(hull)


def _hrep_from_vertices(vs: Sequence[Vec]) -> List[HalfPlane]:
    if len(vs) == 1:
        (x, y), = vs
        return [HalfPlane((1, 0), x), HalfPlane((-1, 0), -x),
                HalfPlane((0, 1), y), HalfPlane((0, -1), -y)]
    if len(vs) == 2:
        a, b = vs
        d = sub(b, a)
        n = perp(d)
        return [HalfPlane(n, dot(n, a)), HalfPlane((-n[0], -n[1]), -dot(n, a)),
                HalfPlane(d, dot(d, a)), HalfPlane((-d[0], -d[1]), -dot(d, b))]
    out = []
    for i, a in enumerate(vs):
        b = vs[(i + 1) % len(vs)]
        n = perp(sub(b, a))  # inward for ccw order
        out.append(HalfPlane(n, dot(n, a)).normalized())
    return out


def _line_meet(h1: HalfPlane, h2: HalfPlane) -> Optional[Vec]:
    (a, b), (c, d) = h1.normal, h2.normal
    det = a * d - b * c
    if det == 0:
        return None
    s, t = h1.threshold, h2.threshold
    x = Fraction(s * d - b * t) / det
    y = Fraction(a * t - s * c) / det
    return (q(x), q(y))


def _dedupe(hs: Iterable[HalfPlane]) -> List[HalfPlane]:
    seen, out = set(), []
    for h in hs:
        n = h.normalized()
        key = (n.normal, n.threshold)
        if key not in seen:
            seen.add(key)
            out.append(n)
    return out


def intersect(hs: Iterable[HalfPlane]) -> Region:
    """Exact intersection of finitely many closed half-planes, classified."""
    hs = _dedupe(hs)
    if not hs:
        return Unbounded((), FULL_PLANE)
    pts = set()
    for h1, h2 in combinations(hs, 2):
        p = _line_meet(h1, h2)
        if p is not None and all(h.contains(p) for h in hs):
            pts.add(p)
    rec = Cone2.from_inequalities(h.normal for h in hs)
    if not pts:
        n0 = hs[0].normal
        if any(cross(n0, h.normal) != 0 for h in hs):
            # normals span the plane, so a nonempty region would have a vertex
            return Empty(tuple(hs))
        lo, hi = None, None  # bounds on n0 . v
        for h in hs:
            # h.normal = lam * n0 with lam != 0
            lam = Fraction(h.normal[0], n0[0]) if n0[0] != 0 else Fraction(h.normal[1], n0[1])
            bound = Fraction(h.threshold) / lam
            if lam > 0:
                lo = bound if lo is None else max(lo, bound)
            else:
                hi = bound if hi is None else min(hi, bound)
        if lo is not None and hi is not None and lo > hi:
            return Empty(tuple(hs))
        return Unbounded(tuple(hs), rec)
    if rec.kind != "zero":
        return Unbounded(tuple(hs), rec, hull_vertices(pts))
    return ConvexPolygon(tuple(hs), hull_vertices(pts))


def vertices(p: ConvexPolygon) -> List[Vec]:
    return list(p.vrep)


def is_integral(p: ConvexPolygon) -> bool:
    return all(is_integer(x) and is_integer(y) for x, y in p.vrep)


def non_integral_vertices(p: ConvexPolygon) -> List[Vec]:
    return [v for v in p.vrep if not (is_integer(v[0]) and is_integer(v[1]))]


def inward_edge_normals(p: ConvexPolygon) -> List[Tuple[int, int]]:
    return [primitive(perp(sub(b, a))) for a, b in p.edges()]


def normal_fan(p: ConvexPolygon) -> List[Tuple[Cone2, Vec]]:
    """MIN-normal fan: the cone at ``v`` holds the functionals minimized at ``v``."""
    if p.dim < 2:
        raise DegenerateInput(f"normal fan needs a full-dimensional polygon, got {p!r}")
    ns = inward_edge_normals(p)
    n = len(ns)
    return [(Cone2((ns[i - 1], ns[i]), "pointed"), p.vrep[i]) for i in range(n)]


def fan_directions(p: ConvexPolygon) -> List[Tuple[int, int]]:
    """Rays of the MIN-normal fan, degenerate polygons included.

    A point has no rays; a segment has the two directions normal to it.
    """
    if p.dim == 0:
        return []
    if p.dim == 1:
        n = primitive(perp(sub(p.vrep[1], p.vrep[0])))
        return [n, (-n[0], -n[1])]
    return inward_edge_normals(p)


def dilate(p: Region, k) -> Region:
    k = q(k)
    if k <= 0:
        raise ValueError("dilation factor must be positive")
    if isinstance(p, ConvexPolygon):
        return ConvexPolygon([h.scaled(k) for h in p.hrep],
                             [(q(x * k), q(y * k)) for x, y in p.vrep])
    return intersect(h.scaled(k) for h in p.hrep)


def clip(region: Region, box) -> Region:
    """Intersect ``region`` with the box ``(xmin, ymin, xmax, ymax)``."""
    x0, y0, x1, y1 = box
    extra = [HalfPlane((1, 0), x0), HalfPlane((0, 1), y0),
             HalfPlane((-1, 0), -x1), HalfPlane((0, -1), -y1)]
    return intersect(list(region.hrep) + extra)


def _mat_solve_2x2(V, W):
    """Return U with U @ V = W for 2x2 matrices given as column pairs."""
    (a, c), (b, d) = V  # columns (a,c) and (b,d)
    det = a * d - b * c
    if det == 0:
        return None
    inv = ((Fraction(d, 1) / det, Fraction(-b, 1) / det), (Fraction(-c, 1) / det, Fraction(a, 1) / det))
    (w11, w21), (w12, w22) = W
    return (
        (w11 * inv[0][0] + w12 * inv[1][0], w11 * inv[0][1] + w12 * inv[1][1]),
        (w21 * inv[0][0] + w22 * inv[1][0], w21 * inv[0][1] + w22 * inv[1][1]),
    )


def _apply(U, t, v):
    return (q(U[0][0] * v[0] + U[0][1] * v[1] + t[0]), q(U[1][0] * v[0] + U[1][1] * v[1] + t[1]))


def lattice_equivalent(p: ConvexPolygon, q_: ConvexPolygon, with_map: bool = False):
    """Decide whether ``U p + t = q`` for some ``U`` in GL(2, Z), ``t`` in Z^2.

    With ``with_map`` the result is ``(bool, U, t)`` (``U`` and ``t`` are
    ``None`` when no map exists).
    """
    if not (is_integral(p) and is_integral(q_)):
        raise NotIntegral("lattice equivalence is only defined for integral polygons")

    def done(ok, U=None, t=None):
        return (ok, U, t) if with_map else ok

    P, Q = p.vrep, q_.vrep
    if len(P) != len(Q):
        return done(False)
    ident = ((1, 0), (0, 1))
    if len(P) == 1:
        return done(True, ident, sub(Q[0], P[0]))
    if len(P) == 2:
        dp, dq = sub(P[1], P[0]), sub(Q[1], Q[0])
        if math.gcd(*dp) != math.gcd(*dq):
            return done(False)
        # complete primitive directions to unimodular bases and map one to the other
        up, uq = primitive(dp), primitive(dq)
        Bp, Bq = _complete_basis(up), _complete_basis(uq)
        U = _mat_solve_2x2(Bp, Bq)
        U = tuple(tuple(q(x) for x in row) for row in U)
        t = sub(Q[0], _apply(U, (0, 0), P[0]))
        return done(True, U, t)
    n = len(P)
    target = set(Q)
    e1, e2 = sub(P[1], P[0]), sub(P[n - 1], P[0])
    for j in range(n):
        for step in (1, -1):
            f1 = sub(Q[(j + step) % n], Q[j])
            f2 = sub(Q[(j - step) % n], Q[j])
            U = _mat_solve_2x2((e1, e2), (f1, f2))
            if U is None or not all(is_integer(x) for row in U for x in row):
                continue
            U = tuple(tuple(q(x) for x in row) for row in U)
            if abs(U[0][0] * U[1][1] - U[0][1] * U[1][0]) != 1:
                continue
            t = sub(Q[j], _apply(U, (0, 0), P[0]))
            if set(_apply(U, t, v) for v in P) == target:
                return done(True, U, t)
    return done(False)


def _complete_basis(u):
    """Columns ``(u, w)`` with determinant 1, for primitive ``u``."""
    a, b = u
    # extended gcd: x*a + y*b = 1, then w = (-y, x) gives a*x - b*(-y) = 1
    g, x, y = _egcd(a, b)
    return (u, (-y, x))


def _egcd(a, b):
    if b == 0:
        return (abs(a), 1 if a >= 0 else -1, 0)
    g, x, y = _egcd(b, a % b)
    return (g, y, x - (a // b) * y)
