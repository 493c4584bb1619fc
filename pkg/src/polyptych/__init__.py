"""Exact arithmetic for the rank-2 polyptych lattices M_s.

Submodules: ``lattice`` (charts and mutation), ``points`` (point triples and
the self-dual pairing), ``geometry`` (exact 2D polyhedra), ``convex`` (PL
half-spaces, polytopes, duals and point-convex hulls), ``plfunc`` (the point
semialgebra), ``algebra``/``parse`` (the detropicalization and its
valuation), ``hilbert`` and ``cox`` (the Cox-ring pipeline), ``figures`` and
``cli``.
"""

from .errors import (
    DegenerateInput,
    DomainViolation,
    EmptyInput,
    InvalidTriple,
    NotCompact,
    NotIntegral,
    OriginNotInterior,
    ParseError,
    PolyptychError,
    UnboundSymbol,
    ZeroElement,
)
from .lattice import Chart, MElement, mutate
from .points import PointTriple, check_symmetry, dual_pairing_w, evaluate, point_axiom_check, point_from_triple
from .convex import (
    PLHalfSpace,
    PLPolytope,
    dual_polytope,
    is_chart_gorenstein_fano,
    pl_polytope,
    pl_vertices,
    point_convex_hull,
    support_function,
)
from .plfunc import INFINITY, PLFunction, pl_add, pl_eq, pl_geq, pl_min
from .algebra import AlgebraElement, Monomial, graded_piece, is_unit, section_membership, unit_group, valuation
from .parse import parse_algebra

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
