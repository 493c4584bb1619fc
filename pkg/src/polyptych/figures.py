"""Figure data (JSON) and renderings (SVG) for the worked examples.

Each figure is a list of panels; a panel is one chart image of one object.
Rendering draws the lattice points of the bounding box padded by one, and
fills the region in 50% gray.  Output is byte-for-byte deterministic.
"""

from __future__ import annotations

import json
import math
import os
import tempfile
from dataclasses import dataclass, field
from typing import Dict, List, Optional

from . import geometry as g
from .convex import (
    PLHalfSpace,
    dual_polytope,
    halfspace_chart_image,
    is_chart_gorenstein_fano,
    pl_vertices,
    point_convex_hull,
)
from .instances import get
from .lattice import Chart, MElement
from .serialize import element_json, region_json, triple_json, vec

VIEW = 3  # half-width of the window used for unbounded regions


@dataclass
class Panel:
    name: str
    chart: Chart
    region: Optional[g.Region] = None
    points: List = field(default_factory=list)


def _charts(name, P) -> List[Panel]:
    return [Panel(name, ch, P.image(ch)) for ch in Chart]


def _polytope_fig(inst_name: str, with_p: bool, with_dual: bool) -> Dict:
    inst = get(inst_name)
    P = inst.polytope()
    panels, meta = [], {}
    if with_p:
        panels += _charts("P", P)
        meta["chart_gorenstein_fano"] = is_chart_gorenstein_fano(P)
        meta["vertices"] = [element_json(m, inst.s) for m in pl_vertices(P)]
    if with_dual:
        D = dual_polytope(P)
        panels += _charts("dual", D)
        imgs = [D.image(ch) for ch in Chart]
        bad = [v for im in imgs for v in g.non_integral_vertices(im)]
        meta["dual_constraints"] = [triple_json(h.p) for h in D.constraints]
        meta["integral"] = not bad
        if bad:
            meta["witness"] = vec(bad[0])
        else:
            meta["lattice_equivalent"] = g.lattice_equivalent(imgs[0], imgs[1])
        meta["charts_identical"] = imgs[0] == imgs[1]
    return {"instance": inst_name, "s": inst.s, "panels": panels, "meta": meta}


def _set_fig() -> Dict:
    inst = get("pconv-three")
    S = [MElement(*e) for e in inst.elements]
    panels = [Panel("S", ch, points=[m.chart(inst.s, ch) for m in S]) for ch in Chart]
    return {"instance": inst.name, "s": inst.s, "panels": panels, "meta": {}}


def _hull_fig() -> Dict:
    inst = get("pconv-three")
    H = point_convex_hull(inst.elements, inst.s)
    S = [MElement(*e) for e in inst.elements]
    panels = [Panel("hull", ch, H.image(ch), [m.chart(inst.s, ch) for m in S]) for ch in Chart]
    classical = g.ConvexPolygon.from_points([m.chart(inst.s, Chart.ONE) for m in S])
    meta = {
        "constraints": [{"point": triple_json(h.p), "threshold": str(h.a)} for h in H.constraints],
        "exceeds_classical_hull_chart1": H.image(Chart.ONE) != classical,
    }
    return {"instance": inst.name, "s": inst.s, "panels": panels, "meta": meta}


def _halfspace_fig(index: int) -> Dict:
    inst = get("gf-s1-quad")
    p = inst.triples()[index]
    h = PLHalfSpace(p, -1)
    panels = [Panel("H", ch, halfspace_chart_image(inst.s, h, ch)) for ch in Chart]
    return {"instance": inst.name, "s": inst.s, "panels": panels,
            "meta": {"point": triple_json(p), "threshold": "-1"}}


FIGURES = {
    "fig3": ("the set S in both charts", _set_fig),
    "fig4": ("PL half-space of the first point", lambda: _halfspace_fig(0)),
    "fig5": ("PL half-space of the second point", lambda: _halfspace_fig(1)),
    "fig6": ("PL half-space of the third point", lambda: _halfspace_fig(2)),
    "fig7": ("chart-Gorenstein-Fano polytope, s=1", lambda: _polytope_fig("gf-s1-quad", True, False)),
    "fig8": ("its dual", lambda: _polytope_fig("gf-s1-quad", False, True)),
    "fig9": ("point-convex hull of S", _hull_fig),
    "fig10": ("hexagon, s=1, and its dual", lambda: _polytope_fig("gf-s1-hex", True, True)),
    "fig11": ("s=2 polytope and its dual", lambda: _polytope_fig("gf-s2", True, True)),
    "fig12": ("s=3 polytope and its dual", lambda: _polytope_fig("gf-s3", True, True)),
    "fig13": ("s=4 polytope", lambda: _polytope_fig("gf-s4", True, False)),
    "fig14": ("s=4 dual", lambda: _polytope_fig("gf-s4", False, True)),
    "fig15": ("polytope with non-integral dual", lambda: _polytope_fig("gf-s1-nonintegral-dual", True, False)),
    "fig16": ("its non-integral dual", lambda: _polytope_fig("gf-s1-nonintegral-dual", False, True)),
}


def figure_data(selector: str) -> Dict:
    if selector not in FIGURES:
        raise KeyError(selector)
    title, build = FIGURES[selector]
    fig = build()
    panels = []
    for pn in fig["panels"]:
        entry = {"name": pn.name, "chart": int(pn.chart)}
        if pn.region is not None:
            entry.update(region_json(pn.region))
        if pn.points:
            entry["points"] = [vec(v) for v in pn.points]
            entry.setdefault("kind", "points")
        panels.append(entry)
    out = {"figure": selector, "title": title, "instance": fig["instance"], "s": fig["s"],
           "panels": panels}
    out.update(fig["meta"])
    return out


# --- rendering -------------------------------------------------------------

def _bbox(pn: Panel):
    xs, ys = [], []
    if isinstance(pn.region, g.ConvexPolygon):
        xs += [v[0] for v in pn.region.vrep]
        ys += [v[1] for v in pn.region.vrep]
    xs += [v[0] for v in pn.points]
    ys += [v[1] for v in pn.points]
    if pn.region is not None and not pn.region.bounded:
        xs += [-VIEW, VIEW]
        ys += [-VIEW, VIEW]
    if not xs:
        xs, ys = [0], [0]
    return (math.floor(min(xs)) - 1, math.floor(min(ys)) - 1,
            math.ceil(max(xs)) + 1, math.ceil(max(ys)) + 1)


def render_panel(pn: Panel, path: str) -> None:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    matplotlib.rcParams["svg.hashsalt"] = "polyptych"
    matplotlib.rcParams["svg.fonttype"] = "none"
    x0, y0, x1, y1 = _bbox(pn)
    scale = 0.5
    fig, ax = plt.subplots(figsize=((x1 - x0) * scale + 0.2, (y1 - y0) * scale + 0.2))
    ax.set_xlim(x0, x1)
    ax.set_ylim(y0, y1)
    ax.set_aspect("equal")
    ax.axis("off")
    ax.annotate("", xy=(x1, 0), xytext=(x0, 0), arrowprops=dict(arrowstyle="<->", color="gray", lw=0.8))
    ax.annotate("", xy=(0, y1), xytext=(0, y0), arrowprops=dict(arrowstyle="<->", color="gray", lw=0.8))
    region = pn.region
    if region is not None and not region.bounded:
        region = g.clip(region, (x0, y0, x1, y1))
    if isinstance(region, g.ConvexPolygon):
        pts = [(float(x), float(y)) for x, y in region.vrep]
        if len(pts) >= 3:
            ax.fill([p[0] for p in pts], [p[1] for p in pts], facecolor="0.5", alpha=0.5,
                    edgecolor="black", lw=1)
        elif len(pts) == 2:
            ax.plot([p[0] for p in pts], [p[1] for p in pts], color="black", lw=1.5)
    gx = [i for i in range(x0, x1 + 1) for _ in range(y0, y1 + 1)]
    gy = [j for _ in range(x0, x1 + 1) for j in range(y0, y1 + 1)]
    ax.scatter(gx, gy, s=2, color="black")
    if pn.points:
        ax.scatter([float(v[0]) for v in pn.points], [float(v[1]) for v in pn.points],
                   s=25, color="black", zorder=3)
    fig.subplots_adjust(0, 0, 1, 1)
    _atomic_save(fig, path)
    plt.close(fig)


def _atomic_save(fig, path: str) -> None:
    d = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=d, suffix=".svg")
    os.close(fd)
    try:
        fig.savefig(tmp, format="svg", metadata={"Date": None})
        os.replace(tmp, path)
    finally:
        if os.path.exists(tmp):
            os.remove(tmp)


def write_json(data, path: str) -> None:
    d = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=d, suffix=".json")
    with os.fdopen(fd, "w") as fh:
        json.dump(data, fh, indent=2, sort_keys=False)
        fh.write("\n")
    os.replace(tmp, path)


def write_figure(selector: str, outdir: str, svg: bool = True) -> List[str]:
    os.makedirs(outdir, exist_ok=True)
    title, build = FIGURES[selector]
    written = []
    data = figure_data(selector)
    jpath = os.path.join(outdir, f"{selector}.json")
    write_json(data, jpath)
    written.append(jpath)
    if svg:
        for pn in build()["panels"]:
            path = os.path.join(outdir, f"{selector}_{pn.name}_chart{int(pn.chart)}.svg")
            render_panel(pn, path)
            written.append(path)
    return written
