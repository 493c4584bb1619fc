"""JSON encodings of exact geometric data.

Coordinates are written as strings (``"1/2"``, ``"-1"``) so no value ever
passes through a float.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, List

from . import geometry as g
from .lattice import Chart, MElement, q


def num(x) -> str:
    return str(Fraction(x))


def vec(v) -> List[str]:
    return [num(x) for x in v]


def parse_num(text):
    return q(text)


def region_json(region: g.Region) -> Dict:
    if isinstance(region, g.Empty):
        return {"kind": "empty"}
    if isinstance(region, g.ConvexPolygon):
        bad = g.non_integral_vertices(region)
        return {
            "kind": "polygon",
            "dim": region.dim,
            "vertices": [vec(v) for v in region.vrep],
            "integral": not bad,
        }
    return {
        "kind": "unbounded",
        "halfplanes": [{"normal": vec(h.normal), "threshold": num(h.threshold)} for h in region.hrep],
        "vertices": [vec(v) for v in region.points],
        "recession": {"kind": region.recession.kind, "rays": [list(r) for r in region.recession.gens]},
    }


def polygon_from_json(d: Dict) -> g.ConvexPolygon:
    return g.ConvexPolygon.from_points([tuple(parse_num(x) for x in v) for v in d["vertices"]])


def element_json(m: MElement, s: int) -> Dict:
    return {"chart1": vec(m.chart(s, Chart.ONE)), "chart2": vec(m.chart(s, Chart.TWO))}


def triple_json(p) -> List[str]:
    return [num(x) for x in p]
