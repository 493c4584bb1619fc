"""PL half-spaces, PL polytopes, duality and the point-convex hull."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from . import geometry as g
from .errors import EmptyInput, NotCompact, OriginNotInterior
from .lattice import Chart, MElement, Scalar, check_s, q
from .points import (
    PointTriple,
    chart_linear_parts,
    dual_pairing_w,
    evaluate,
    on_T,
    primitive_triple,
)


@dataclass(frozen=True)
class PLHalfSpace:
    """``{m : p(m) >= a}``."""

    p: PointTriple
    a: Scalar

    def contains(self, m) -> bool:
        return evaluate(self.p, m) >= self.a

    def scaled(self, k) -> "PLHalfSpace":
        return PLHalfSpace(self.p, q(self.a * k))


def halfplanes_of(s: int, h: PLHalfSpace, chart: Chart) -> Optional[List[g.HalfPlane]]:
    """Chart image of ``h`` as a list of half-planes, or ``None`` if it is empty.

    A point is the minimum of its two linear extensions on each chart, so
    ``p >= a`` holds exactly when both extensions are ``>= a``.
    """
    out = []
    for n in chart_linear_parts(s, h.p, chart):
        if n[0] == 0 and n[1] == 0:
            if h.a > 0:
                return None
            continue
        hp = g.HalfPlane(n, h.a)
        if hp not in out:
            out.append(hp)
    return out


def halfspace_chart_image(s: int, h: PLHalfSpace, chart: Chart) -> g.Region:
    hps = halfplanes_of(s, h, chart)
    if hps is None:
        return g.Empty()
    return g.intersect(hps)


def _chart_region(s: int, constraints: Sequence[PLHalfSpace], chart: Chart) -> g.Region:
    hps = []
    for h in constraints:
        part = halfplanes_of(s, h, chart)
        if part is None:
            return g.Empty()
        hps.extend(part)
    return g.intersect(hps)


class PLPolytope:
    """A finite intersection of PL half-spaces with cached chart images."""

    __slots__ = ("s", "constraints", "images")

    def __init__(self, s: int, constraints: Iterable[PLHalfSpace]):
        self.s = check_s(s)
        self.constraints = tuple(constraints)
        self.images: Dict[Chart, g.Region] = {
            ch: _chart_region(s, self.constraints, ch) for ch in Chart
        }

    def image(self, chart: Chart) -> g.Region:
        return self.images[Chart(chart)]

    @property
    def compact(self) -> bool:
        return all(isinstance(r, (g.ConvexPolygon, g.Empty)) for r in self.images.values())

    @property
    def empty(self) -> bool:
        return isinstance(self.images[Chart.ONE], g.Empty)

    def contains(self, m) -> bool:
        return all(h.contains(m) for h in self.constraints)

    def dilate(self, k) -> "PLPolytope":
        return PLPolytope(self.s, [h.scaled(k) for h in self.constraints])

    def __repr__(self):
        cs = ", ".join(f"({h.p}, {h.a})" for h in self.constraints)
        return f"PLPolytope(s={self.s}, [{cs}])"


def pl_polytope(s: int, constraints: Iterable) -> PLPolytope:
    """Build a PL polytope from ``PLHalfSpace`` objects or ``(triple, a)`` pairs."""
    cs = []
    for c in constraints:
        if not isinstance(c, PLHalfSpace):
            p, a = c
            c = PLHalfSpace(PointTriple(*(q(v) for v in p)), q(a))
        cs.append(c)
    return PLPolytope(s, cs)


def _require_compact(P: PLPolytope) -> None:
    if not P.compact:
        raise NotCompact("PL polytope is not compact")


def pl_vertices(P: PLPolytope) -> List[MElement]:
    """Vertices of either chart image, as elements (chart-1 coordinates)."""
    _require_compact(P)
    out: List[MElement] = []
    for ch in Chart:
        img = P.image(ch)
        if isinstance(img, g.Empty):
            continue
        for v in img.vrep:
            m = MElement.from_chart(P.s, ch, v)
            if m not in out:
                out.append(m)
    return out


def is_chart_gorenstein_fano(P: PLPolytope) -> bool:
    if not P.compact or P.empty:
        return False
    if any(h.a != -1 for h in P.constraints):
        return False
    for ch in Chart:
        img = P.image(ch)
        if img.dim < 2 or not g.is_integral(img):
            return False
    return True


def support_function(P: PLPolytope, n) -> Scalar:
    """``min`` over ``u`` in ``P`` of ``w(u)(n)``.

    ``u -> w(u)(n)`` is linear on each half of chart 1, so the minimum is
    attained at a vertex of one of the two halves of the chart-1 image.
    """
    _require_compact(P)
    img = P.image(Chart.ONE)
    if isinstance(img, g.Empty):
        raise NotCompact("support function of the empty polytope")
    best = None
    for half in (g.HalfPlane((0, 1), 0), g.HalfPlane((0, -1), 0)):
        part = g.intersect(list(img.hrep) + [half])
        if isinstance(part, g.Empty):
            continue
        for u in part.vrep:
            val = evaluate(dual_pairing_w(P.s, u), n)
            if best is None or val < best:
                best = val
    return best


def origin_interior(P: PLPolytope) -> bool:
    img = P.image(Chart.ONE)
    if not isinstance(img, g.ConvexPolygon) or img.dim < 2:
        return False
    return all(h.threshold < 0 for h in img.hrep)


def dual_polytope(P: PLPolytope) -> PLPolytope:
    _require_compact(P)
    if not origin_interior(P):
        raise OriginNotInterior("the origin must be interior for the dual to be bounded")
    cs = [PLHalfSpace(dual_pairing_w(P.s, m), -1) for m in pl_vertices(P)]
    return PLPolytope(P.s, cs)


def drop_redundant(P: PLPolytope) -> PLPolytope:
    """Remove constraints whose removal leaves both chart images unchanged."""
    cs = list(P.constraints)
    i = 0
    while i < len(cs):
        trial = cs[:i] + cs[i + 1:]
        if trial and all(_chart_region(P.s, trial, ch) == P.image(ch) for ch in Chart):
            cs = trial
        else:
            i += 1
    return PLPolytope(P.s, cs)


# --- point-convex hull ---------------------------------------------------

def _piece_rays(points2d) -> List[Tuple[int, int]]:
    """Rays of the half-plane ``{lx >= 0}`` refined by the MIN-normal fan."""
    poly = g.ConvexPolygon.from_points(points2d)
    base = g.Cone2.from_inequalities([(1, 0)])
    cuts = [g.Cone2.from_rays(d) for d in g.fan_directions(poly)]
    rays = []
    for cone in g.refine_cones(base, *cuts):
        for r in g.extreme_rays(cone):
            if r not in rays:
                rays.append(r)
    return rays


def hull_candidate_triples(s: int, S: Sequence[MElement]) -> List[PointTriple]:
    """Primitive triples whose half-spaces cut out the point-convex hull of ``S``."""
    # points linear on chart 1: p(m) = c*x + a*y with functional (c, a), c >= 0
    rays1 = _piece_rays([m.chart(s, Chart.ONE) for m in S])
    # points linear on chart 2: p(m) = lx*x' + ly*y' with lx = -c >= 0
    rays2 = _piece_rays([m.chart(s, Chart.TWO) for m in S])
    out: List[PointTriple] = []
    for c, a in rays1:
        p = primitive_triple((a, -a, c))
        if p not in out:
            out.append(p)
    for lx, ly in rays2:
        p = primitive_triple((ly, -s * lx - ly, -lx))
        if p not in out:
            out.append(p)
    for p in out:
        assert on_T(s, *p), p
    return out


def point_convex_hull(S: Iterable, s: int) -> PLPolytope:
    """Intersection of all PL half-spaces with integer thresholds containing ``S``.

    ``S`` holds elements (or chart-1 integer pairs).
    """
    check_s(s)
    S = [m if isinstance(m, MElement) else MElement(q(m[0]), q(m[1])) for m in S]
    if not S:
        raise EmptyInput("point-convex hull of an empty set")
    for m in S:
        if not m.is_integral:
            raise ValueError(f"hull input must be lattice elements, got {m}")
    cs = []
    for p in hull_candidate_triples(s, S):
        lam = min(evaluate(p, m) for m in S)
        cs.append(PLHalfSpace(p, lam))
    return drop_redundant(PLPolytope(s, cs))
