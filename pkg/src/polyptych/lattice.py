"""The rank-2 polyptych lattice M_s: two charts glued by a shear mutation.

Elements are stored by their chart-1 coordinates; chart-2 coordinates are
always derived with :func:`mutate`.  Coordinates may be ``int`` or
``Fraction``; every routine here is generic over the scalar type.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Tuple, Union

Scalar = Union[int, Fraction]
Vec = Tuple[Scalar, Scalar]


def q(value) -> Scalar:
    """Coerce ``value`` to an exact scalar (``int`` when integral).

    Accepts ints, Fractions and strings such as ``"-3/2"``.  Floats are
    refused so that nothing inexact leaks in.
    """
    if isinstance(value, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(value, int):
        return value
    if isinstance(value, str):
        value = Fraction(value.strip())
    if isinstance(value, Rational):
        value = Fraction(value)
        return int(value) if value.denominator == 1 else value
    raise TypeError(f"cannot use {value!r} as an exact scalar")


def is_integer(value: Scalar) -> bool:
    return isinstance(value, int) or value.denominator == 1


def check_s(s: int) -> int:
    if isinstance(s, bool) or not isinstance(s, int):
        raise TypeError(f"shear parameter must be an int, got {s!r}")
    if s < 1:
        raise ValueError(f"shear parameter must be >= 1, got {s}")
    return s


class Chart(enum.IntEnum):
    ONE = 1
    TWO = 2

    def other(self) -> "Chart":
        return Chart.TWO if self is Chart.ONE else Chart.ONE


def mutate(s: int, v: Vec) -> Vec:
    """Shear mutation ``(x, y) -> (min(0, s*y) - x, y)``.

    The map is an involution, so it serves as both mu_12 and mu_21.
    """
    x, y = v
    return (min(0, s * y) - x, y)


@dataclass(frozen=True, order=True)
class MElement:
    """An element of M_s (or its rational extension), by chart-1 coordinates."""

    x: Scalar
    y: Scalar

    @classmethod
    def from_chart(cls, s: int, chart: Chart, v: Vec) -> "MElement":
        if Chart(chart) is Chart.TWO:
            v = mutate(s, v)
        return cls(q(v[0]), q(v[1]))

    def chart(self, s: int, chart: Chart) -> Vec:
        if Chart(chart) is Chart.ONE:
            return (self.x, self.y)
        return mutate(s, (self.x, self.y))

    @property
    def is_integral(self) -> bool:
        return is_integer(self.x) and is_integer(self.y)

    def __iter__(self):
        yield self.x
        yield self.y


def add_in_chart(s: int, m: MElement, m2: MElement, chart: Chart) -> MElement:
    """Addition in chart ``chart``: pull back the sum of the chart images."""
    a = m.chart(s, chart)
    b = m2.chart(s, chart)
    return MElement.from_chart(s, chart, (a[0] + b[0], a[1] + b[1]))


@dataclass(frozen=True)
class PLCone2:
    """A maximal cone of the PL fan, as a chart-1 half-plane ``sign*y >= 0``."""

    sign: int

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")

    def contains(self, m) -> bool:
        return self.sign * m[1] >= 0

    @property
    def name(self) -> str:
        return "H+" if self.sign > 0 else "H-"

    def __str__(self) -> str:
        return "{y >= 0}" if self.sign > 0 else "{y <= 0}"


H_PLUS = PLCone2(1)
H_MINUS = PLCone2(-1)


def pl_fan(s: int) -> Tuple[PLCone2, PLCone2]:
    check_s(s)
    return (H_PLUS, H_MINUS)


def mutation_matrix(s: int, cone: PLCone2):
    """Linear representative of the mutation on ``cone`` (row-major 2x2)."""
    if cone.sign > 0:
        return ((-1, 0), (0, 1))
    return ((-1, s), (0, 1))
