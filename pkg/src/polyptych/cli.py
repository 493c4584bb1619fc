"""Command-line front end.

Every command prints a JSON document on stdout.  Exit codes: 0 success,
1 an internal verification or oracle failure (or a failed ``--check``),
2 bad input.
"""

from __future__ import annotations

import argparse
import itertools
import json
import os
import sys
from typing import Dict, List, Optional

from . import geometry as g
from .convex import (
    dual_polytope,
    is_chart_gorenstein_fano,
    pl_vertices,
    point_convex_hull,
)
from .errors import ParseError, PolyptychError, UnboundSymbol
from .figures import FIGURES, Panel, render_panel, write_figure, write_json
from .instances import INSTANCES, Instance
from .lattice import Chart, MElement, q
from .points import PointTriple, on_T, point_axiom_check
from .serialize import element_json, num, region_json, triple_json

CHECKS = ("compact", "integral", "gorenstein-fano", "dual-integral", "dual-equivalent", "dual-identical")


class InputError(Exception):
    """Malformed command-line input; maps to exit code 2."""


# --- instance files ----------------------------------------------------------

def _int(x, what):
    v = q(x)
    if v.denominator != 1:
        raise InputError(f"{what} must be an integer, got {x!r}")
    return int(v)


def instance_from_json(doc) -> Instance:
    if not isinstance(doc, dict):
        raise InputError("instance must be a JSON object")
    if "s" not in doc:
        raise InputError("instance is missing 's'")
    s = _int(doc["s"], "s")
    if s < 1:
        raise InputError("s must be at least 1")
    try:
        points = tuple(tuple(q(v) for v in p) for p in doc.get("points", []))
        if any(len(p) != 3 for p in points):
            raise InputError("each point must be a triple [a, b, c]")
        thresholds = doc.get("thresholds")
        if thresholds is not None:
            thresholds = tuple(_int(t, "threshold") for t in thresholds)
            if len(thresholds) != len(points):
                raise InputError("points and thresholds differ in length")
        elements = tuple(tuple(_int(v, "element coordinate") for v in e) for e in doc.get("elements", []))
        if any(len(e) != 2 for e in elements):
            raise InputError("each element must be a pair [x, y]")
    except (TypeError, ValueError, ZeroDivisionError) as exc:
        if isinstance(exc, InputError):
            raise
        raise InputError(f"bad number in instance: {exc}") from None
    for p in points:
        if not on_T(s, *p):
            raise InputError(f"triple {[num(v) for v in p]} does not satisfy a + b = min(0, s*c)")
    expr = doc.get("expr")
    return Instance(doc.get("name", "file"), s, points, thresholds, elements, expr)


def load_instance(ref: Optional[str]) -> Instance:
    if ref is None:
        raise InputError("--instance is required")
    if ref in INSTANCES and not os.path.exists(ref):
        return INSTANCES[ref]
    try:
        with open(ref) as fh:
            doc = json.load(fh)
    except FileNotFoundError:
        raise InputError(f"no such instance file or built-in name: {ref}") from None
    except json.JSONDecodeError as exc:
        raise InputError(f"instance file is not valid JSON: {exc}") from None
    return instance_from_json(doc)


# --- output ------------------------------------------------------------------

def emit(args, data: Dict) -> None:
    text = json.dumps(data, indent=2)
    print(text)
    if args.json:
        write_json(data, args.json)


def render(args, name: str, obj) -> None:
    """Write one SVG per chart image of ``obj`` into ``--svg`` (if given)."""
    if not args.svg:
        return
    os.makedirs(args.svg, exist_ok=True)
    for ch in Chart:
        render_panel(Panel(name, ch, obj.image(ch)), os.path.join(args.svg, f"{name}_chart{int(ch)}.svg"))


def _images(P) -> Dict:
    return {f"chart{int(ch)}": region_json(P.image(ch)) for ch in Chart}


# --- commands ----------------------------------------------------------------

def cmd_figures(args) -> int:
    sel = args.selector
    if sel != "all" and sel not in FIGURES:
        raise InputError(f"unknown figure selector {sel!r}; use all or one of {', '.join(FIGURES)}")
    names = list(FIGURES) if sel == "all" else [sel]
    out = args.out or "figures"
    written: List[str] = []
    for name in names:
        written += write_figure(name, out, svg=True)
    print(json.dumps({"written": written}, indent=2))
    return 0


def _polytope_report(inst: Instance, with_dual: bool):
    if not inst.points:
        raise InputError("instance has no points")
    P = inst.polytope()
    if P.empty:
        raise InputError("PL polytope is empty")
    if not P.compact:
        raise InputError("PL polytope is not compact; both chart images must be bounded")
    imgs = [P.image(ch) for ch in Chart]
    data = {
        "s": inst.s,
        "constraints": [{"point": triple_json(h.p), "threshold": num(h.a)} for h in P.constraints],
        "images": _images(P),
        "vertices": [element_json(m, inst.s) for m in pl_vertices(P)],
        "integral": all(g.is_integral(im) for im in imgs),
        "chart_gorenstein_fano": is_chart_gorenstein_fano(P),
    }
    D = None
    if with_dual:
        try:
            D = dual_polytope(P)
        except PolyptychError as exc:
            raise InputError(str(exc)) from None
        dimgs = [D.image(ch) for ch in Chart]
        bad = [v for im in dimgs for v in g.non_integral_vertices(im)]
        data["dual"] = {
            "constraints": [{"point": triple_json(h.p), "threshold": num(h.a)} for h in D.constraints],
            "images": _images(D),
            "integral": not bad,
            "non_integral_vertices": [[num(x) for x in v] for v in bad],
            "lattice_equivalent": None if bad else g.lattice_equivalent(dimgs[0], dimgs[1]),
            "charts_identical": dimgs[0] == dimgs[1],
        }
    return P, D, data


def _run_checks(checks: List[str], data: Dict) -> List[Dict]:
    dual = data.get("dual", {})
    table = {
        "compact": True,
        "integral": data["integral"],
        "gorenstein-fano": data["chart_gorenstein_fano"],
        "dual-integral": dual.get("integral"),
        "dual-equivalent": dual.get("lattice_equivalent"),
        "dual-identical": dual.get("charts_identical"),
    }
    return [{"check": c, "passed": bool(table[c])} for c in checks]


def _cmd_poly(args, with_dual: bool) -> int:
    inst = load_instance(args.instance)
    checks = args.check or []
    if any(c.startswith("dual") for c in checks):
        with_dual = True
    P, D, data = _polytope_report(inst, with_dual)
    if checks:
        data["checks"] = _run_checks(checks, data)
    emit(args, data)
    render(args, "P", P)
    if D is not None:
        render(args, "dual", D)
    return 0 if all(c["passed"] for c in data.get("checks", [])) else 1


def cmd_polytope(args) -> int:
    return _cmd_poly(args, with_dual=False)


def cmd_dual(args) -> int:
    return _cmd_poly(args, with_dual=True)


def cmd_pconv(args) -> int:
    inst = load_instance(args.instance)
    if not inst.elements:
        raise InputError("instance has no 'elements'")
    s = args.s or inst.s
    H = point_convex_hull(inst.elements, s)
    data = {
        "s": s,
        "elements": [element_json(MElement(*e), s) for e in inst.elements],
        "constraints": [{"point": triple_json(h.p), "threshold": num(h.a)} for h in H.constraints],
        "images": _images(H),
    }
    emit(args, data)
    render(args, "hull", H)
    return 0


def cmd_valuation(args) -> int:
    from .algebra import valuation
    from .parse import parse_algebra

    s = args.s or 1
    try:
        f = parse_algebra(args.expr, s)
    except UnboundSymbol as exc:
        raise InputError(f"unknown symbol {exc.args[0]!r}") from None
    except ParseError as exc:
        raise InputError(str(exc)) from None
    v = valuation(f)
    data: Dict = {"s": s, "expr": args.expr, "element": f.pretty()}
    if v.is_infinity:
        data["valuation"] = "Infinity"
    else:
        pieces = v.sorted_pieces()
        data["valuation"] = [triple_json(p) for p in pieces]
        if len(pieces) == 1 and on_T(s, *pieces[0]):
            data["point"] = triple_json(pieces[0])
    emit(args, data)
    return 0


def cmd_cox(args) -> int:
    from .cox import PUBLISHED, CoxInstance, cox_report

    ref = args.instance or "cox-s1"
    inst = load_instance(ref)
    if not inst.points:
        raise InputError("instance has no points")
    if any(t != -1 for t in inst.thresholds_or_default()):
        raise InputError("the Cox pipeline needs all thresholds equal to -1")
    P = inst.polytope()
    if P.empty or not P.compact:
        raise InputError("PL polytope must be nonempty and compact")
    ci = CoxInstance.make(inst.s, inst.points)
    published = PUBLISHED if (inst.s, tuple(ci.points)) == (
        INSTANCES["cox-s1"].s, tuple(INSTANCES["cox-s1"].triples())) else None
    report = cox_report(ci, box=args.box, published=published)
    emit(args, report)
    return 0 if report["oracle_ok"] else 1


def cmd_check_axiom(args) -> int:
    s = args.s or 1
    try:
        a, b, c = (q(x) for x in args.triple)
    except (ValueError, ZeroDivisionError):
        raise InputError("triple entries must be rationals") from None
    r = range(-args.box, args.box + 1)
    elems = [MElement(x, y) for x, y in itertools.product(r, r)]
    p = PointTriple(a, b, c)
    counter = None
    for m, m2 in itertools.product(elems, elems):
        if not point_axiom_check(s, p, m, m2):
            counter = [[m.x, m.y], [m2.x, m2.y]]
            break
    valid = on_T(s, a, b, c)
    data = {"s": s, "triple": triple_json(p), "on_T": valid, "axiom_holds": counter is None,
            "box": args.box}
    if counter is not None:
        data["counterexample"] = counter
    emit(args, data)
    # a triple on T_s that breaks the axiom would contradict the classification
    return 1 if valid and counter is not None else 0


# --- argument parsing ---------------------------------------------------------

def _common(default) -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--s", type=int, default=default, help="lattice parameter s >= 1")
    common.add_argument("--out", default=default, help="output directory for figures")
    common.add_argument("--json", default=default, metavar="PATH", help="also write the JSON result here")
    common.add_argument("--svg", default=default, metavar="DIR", help="render chart images as SVG into DIR")
    common.add_argument("--instance", default=default, help="instance JSON file or built-in name")
    return common


def build_parser() -> argparse.ArgumentParser:
    # global flags are accepted before or after the verb; the subparser copy
    # uses SUPPRESS so it does not clobber a value given before the verb
    top = _common(None)
    common = _common(argparse.SUPPRESS)

    ap = argparse.ArgumentParser(prog="polyptych", parents=[top],
                                 description="Exact computations on the rank-2 polyptych lattices M_s.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("figures", parents=[common], help="write figure JSON and SVG files")
    p.add_argument("selector", nargs="?", default="all")
    p.set_defaults(func=cmd_figures)

    for name, fn, helptext in (("polytope", cmd_polytope, "chart images, vertices and flags of P"),
                               ("dual", cmd_dual, "as polytope, plus the dual polytope")):
        p = sub.add_parser(name, parents=[common], help=helptext)
        p.add_argument("--check", action="append", choices=CHECKS,
                       help="verify a property; exit 1 if it fails (repeatable)")
        p.set_defaults(func=fn)

    p = sub.add_parser("pconv", parents=[common], help="point-convex hull of the instance elements")
    p.set_defaults(func=cmd_pconv)

    p = sub.add_parser("valuation", parents=[common], help="valuation of an algebra element")
    p.add_argument("expr")
    p.set_defaults(func=cmd_valuation)

    p = sub.add_parser("cox", parents=[common], help="Cox ring report (default instance cox-s1)")
    p.add_argument("--box", type=int, default=6, help="box size for the Hilbert basis oracle")
    p.set_defaults(func=cmd_cox)

    p = sub.add_parser("points", parents=[common], help="point utilities")
    psub = p.add_subparsers(dest="points_command", required=True)
    pc = psub.add_parser("check-axiom", parents=[common], help="test the point axiom on a box of pairs")
    pc.add_argument("triple", nargs=3, metavar="N")
    pc.add_argument("--box", type=int, default=3)
    pc.set_defaults(func=cmd_check_axiom)
    return ap


def main(argv: Optional[List[str]] = None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    try:
        if args.s is not None and args.s < 1:
            raise InputError("s must be at least 1")
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (PolyptychError, KeyError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
