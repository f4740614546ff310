"""Best-effort SVG drawings of diagrams.

Layout is a Tutte barycentric embedding: every arc is subdivided twice, the
outer face boundary is pinned to a circle and the remaining points sit at the
average of their neighbours.  Nothing in the analysis depends on it.
"""

from __future__ import annotations

import math

import numpy as np

from .diagram import Diagram
from .errors import RenderError
from .seifert import analyze

__all__ = ["layout", "render_svg"]

MAX_CROSSINGS = 64
SIZE = 400.0
MARGIN = 24.0
GAP = 0.22  # fraction of an end segment removed where a strand passes under

_PALETTE = ["#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#e377c2"]


def _arc_path(diagram: Diagram, arc: int):
    tail = diagram.tail_dart(arc) // 4
    head = diagram.head_dart(arc) // 4
    return [("x", tail), ("a", arc, 0), ("a", arc, 1), ("x", head)]


def layout(diagram: Diagram) -> dict:
    """Node -> (x, y); nodes are ``("x", crossing)`` and ``("a", arc, 0|1)``."""
    if diagram.n_crossings > MAX_CROSSINGS:
        raise RenderError(f"rendering is limited to {MAX_CROSSINGS} crossings")
    nodes = [("x", c) for c in range(diagram.n_crossings)]
    for arc in range(1, diagram.n_arcs + 1):
        nodes += [("a", arc, 0), ("a", arc, 1)]
    index = {v: i for i, v in enumerate(nodes)}
    nbrs: dict[int, list[int]] = {i: [] for i in range(len(nodes))}
    for arc in range(1, diagram.n_arcs + 1):
        path = [index[v] for v in _arc_path(diagram, arc)]
        for u, v in zip(path, path[1:]):
            nbrs[u].append(v)
            nbrs[v].append(u)

    def boundary(face):
        walk = []
        for dart in face.darts:
            path = _arc_path(diagram, diagram.dart_label(dart))
            walk += (path[::-1] if diagram.dart_is_head(dart) else path)[:-1]
        return walk

    # a hub per inner face keeps parallel arcs (bigons, kinks) apart
    for face in diagram.faces:
        if face.id == diagram.outer_face:
            continue
        hub = len(nodes)
        nodes.append(("f", face.id))
        index[nodes[-1]] = hub
        nbrs[hub] = []
        for v in dict.fromkeys(boundary(face)):
            nbrs[hub].append(index[v])
            nbrs[index[v]].append(hub)

    cycle = boundary(diagram.faces[diagram.outer_face])
    fixed = {}
    for j, v in enumerate(cycle):
        i = index[v]
        if i in fixed:
            continue
        angle = 2 * math.pi * j / len(cycle)
        fixed[i] = (math.cos(angle), math.sin(angle))

    free = [i for i in range(len(nodes)) if i not in fixed]
    pos = np.zeros((len(nodes), 2))
    for i, p in fixed.items():
        pos[i] = p
    if free:
        col = {i: k for k, i in enumerate(free)}
        lap = np.zeros((len(free), len(free)))
        rhs = np.zeros((len(free), 2))
        for i in free:
            r = col[i]
            lap[r, r] = len(nbrs[i])
            for j in nbrs[i]:
                if j in col:
                    lap[r, col[j]] -= 1
                else:
                    rhs[r] += pos[j]
        try:
            sol = np.linalg.solve(lap, rhs)
        except np.linalg.LinAlgError as exc:
            raise RenderError(f"barycentric layout failed: {exc}") from None
        for i in free:
            pos[i] = sol[col[i]]
    if not np.all(np.isfinite(pos)):
        raise RenderError("barycentric layout produced non-finite coordinates")
    return {v: (float(pos[index[v]][0]), float(pos[index[v]][1])) for v in nodes if v[0] != "f"}


def _to_canvas(p):
    scale = (SIZE - 2 * MARGIN) / 2
    return (MARGIN + (p[0] + 1) * scale, MARGIN + (1 - p[1]) * scale)


def _polyline(points, **attrs) -> str:
    pts = " ".join(f"{x:.2f},{y:.2f}" for x, y in points)
    extra = " ".join(f'{k.replace("_", "-")}="{v}"' for k, v in attrs.items())
    return f'<polyline points="{pts}" fill="none" {extra}/>'


def _trim(a, b, frac):
    return (a[0] + (b[0] - a[0]) * frac, a[1] + (b[1] - a[1]) * frac)


def render_svg(diagram: Diagram, circles: bool = False) -> str:
    """SVG text; under-strands get a gap at each crossing (one ``under-gap`` marker each)."""
    head = (f'<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE:.0f}" height="{SIZE:.0f}" '
            f'viewBox="0 0 {SIZE:.0f} {SIZE:.0f}" data-crossings="{diagram.n_crossings}">')
    body = []
    if diagram.is_round_unknot:
        c = SIZE / 2
        body.append(f'<circle class="strand" cx="{c}" cy="{c}" r="{c - MARGIN}" '
                    'fill="none" stroke="black" stroke-width="3"/>')
        return "\n".join([head, *body, "</svg>"]) + "\n"

    pos = {v: _to_canvas(p) for v, p in layout(diagram).items()}

    if circles:
        an = analyze(diagram)
        for circ in an.circuits.circuits:
            depth = an.forest.depth[circ.id]
            pts = []
            for arc in circ.arcs:
                pts += [pos[v] for v in _arc_path(diagram, arc)[:-1]]
            pts.append(pts[0])
            body.append(_polyline(pts, stroke=_PALETTE[depth % len(_PALETTE)], stroke_width="7",
                                  stroke_opacity="0.35", **{"class": f"seifert depth-{depth}"}))

    for arc in range(1, diagram.n_arcs + 1):
        pts = [pos[v] for v in _arc_path(diagram, arc)]
        if diagram.tail_dart(arc) % 4 == 2:  # leaves as the under-strand
            pts[0] = _trim(pts[0], pts[1], GAP)
        if diagram.head_dart(arc) % 4 == 0:  # enters as the under-strand
            pts[-1] = _trim(pts[-1], pts[-2], GAP)
        body.append(_polyline(pts, stroke="black", stroke_width="2.5",
                              **{"class": "strand", "data-arc": arc}))
    for c in range(diagram.n_crossings):
        x, y = pos[("x", c)]
        body.append(f'<circle class="under-gap" data-crossing="{c}" cx="{x:.2f}" cy="{y:.2f}" '
                    'r="0" fill="none"/>')
    return "\n".join([head, *body, "</svg>"]) + "\n"
