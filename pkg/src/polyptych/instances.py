"""Named example inputs used by the CLI, the figures and the tests."""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional, Tuple

from .convex import PLPolytope, pl_polytope
from .points import PointTriple, point_from_triple


@dataclass(frozen=True)
class Instance:
    name: str
    s: int
    points: Tuple[Tuple, ...] = ()
    thresholds: Optional[Tuple] = None
    elements: Tuple[Tuple[int, int], ...] = ()
    expr: Optional[str] = None
    note: str = ""

    def triples(self) -> List[PointTriple]:
        return [point_from_triple(self.s, *p) for p in self.points]

    def thresholds_or_default(self) -> List:
        if self.thresholds is None:
            return [-1] * len(self.points)
        return list(self.thresholds)

    def polytope(self) -> PLPolytope:
        ts = self.thresholds_or_default()
        if len(ts) != len(self.points):
            raise ValueError("points and thresholds differ in length")
        return pl_polytope(self.s, zip(self.triples(), ts))


INSTANCES = {
    i.name: i
    for i in [
        Instance("pconv-three", 1, elements=((0, 0), (0, 1), (0, -1)),
                 note="three elements on the y-axis whose hull leaves the classical hull"),
        Instance("gf-s1-quad", 1, points=((-2, 2, 1), (0, -1, -1), (1, -1, 1)),
                 note="quadrilateral and triangle chart images"),
        Instance("gf-s1-hex", 1, points=((-1, 0, -1), (1, -1, 0), (-1, 1, 0), (0, 0, 1), (1, -1, 1)),
                 note="hexagon in chart 1"),
        Instance("gf-s2", 2, points=((-1, -1, -1), (1, -1, 1), (0, 0, 1), (-1, 1, 0))),
        Instance("gf-s3", 3, points=((-2, -1, -1), (1, -1, 1), (0, 0, 1))),
        Instance("gf-s4", 4, points=((-2, -2, -1), (0, 0, 1)),
                 note="bounded with only two half-spaces"),
        Instance("gf-s1-nonintegral-dual", 1, points=((0, 0, 1), (2, -2, 1), (-1, 0, -1)),
                 note="integral polytope with a non-integral dual"),
        Instance("cox-s1", 1, points=((1, -1, 1), (-2, 2, 1), (1, -3, -2)),
                 note="three divisors; Cox ring computation"),
    ]
}


def get(name: str) -> Instance:
    try:
        return INSTANCES[name]
    except KeyError:
        raise KeyError(f"unknown instance {name!r}; known: {', '.join(sorted(INSTANCES))}") from None
