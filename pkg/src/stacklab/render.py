"""SVG drawings of chord diagrams and shadow-line overlays.

Output is deterministic: element order follows sorted input and coordinates
are printed with fixed precision, so files can be compared byte for byte.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable

from .matchings import PerfectMatching
from .viennot import Direction, ExitLabel, Point, _ne_layers, check_generic, read_edge, skeleta

DEFAULT_PALETTE = ("#c0392b", "#e67e22", "#2e8b3a", "#1f5fbf", "#7d3c98", "#8b5a2b", "#16a085", "#c71585")


@dataclass(frozen=True)
class RenderSpec:
    kind: str = "chord"
    size: tuple[int, int] = (400, 400)
    palette: tuple[str, ...] = field(default=DEFAULT_PALETTE)
    labels: bool = True

    def __post_init__(self) -> None:
        if self.kind not in ("chord", "shadow", "tableau", "matrix"):
            raise ValueError(f"unknown render kind {self.kind!r}")


def _fmt(v: float) -> str:
    text = f"{v:.2f}".rstrip("0").rstrip(".")
    return "0" if text == "-0" else text


def _header(width: int, height: int) -> list[str]:
    return [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        f'<rect x="0" y="0" width="{width}" height="{height}" fill="white"/>',
    ]


# -- chord diagrams -------------------------------------------------------------------


@dataclass(frozen=True)
class ChordGeometry:
    nodes: dict[int, tuple[float, float]]
    chords: tuple[tuple[int, int], ...]

    def segment(self, block: tuple[int, int]) -> tuple[tuple[float, float], tuple[float, float]]:
        return self.nodes[block[0]], self.nodes[block[1]]


def chord_geometry(M: PerfectMatching, spec: RenderSpec | None = None) -> ChordGeometry:
    """Points ``1..2n`` clockwise from the top of a circle, one straight chord per block."""
    spec = spec or RenderSpec("chord")
    width, height = spec.size
    m = M.size
    cx, cy = width / 2, height / 2
    radius = 0.4 * min(width, height)
    nodes = {}
    for i in range(1, m + 1):
        angle = math.radians(90 - 180 / m - (i - 1) * 360 / m)
        nodes[i] = (cx + radius * math.cos(angle), cy - radius * math.sin(angle))
    return ChordGeometry(nodes, tuple(M.sorted_blocks()))


def render_chord_svg(M: PerfectMatching, spec: RenderSpec | None = None) -> str:
    spec = spec or RenderSpec("chord")
    geo = chord_geometry(M, spec)
    width, height = spec.size
    cx, cy = width / 2, height / 2
    out = _header(width, height)
    out.append(f'<g id="chords" stroke="black" stroke-width="1.5">')
    for a, b in geo.chords:
        (x1, y1), (x2, y2) = geo.segment((a, b))
        out.append(f'<line class="chord" data-block="{a}-{b}" x1="{_fmt(x1)}" y1="{_fmt(y1)}" x2="{_fmt(x2)}" y2="{_fmt(y2)}"/>')
    out.append("</g>")
    out.append('<g id="nodes">')
    for i in sorted(geo.nodes):
        x, y = geo.nodes[i]
        out.append(f'<circle class="node" data-point="{i}" cx="{_fmt(x)}" cy="{_fmt(y)}" r="3" fill="black"/>')
        if spec.labels:
            # push labels outward from the centre
            lx, ly = cx + (x - cx) * 1.1, cy + (y - cy) * 1.1
            out.append(
                f'<text x="{_fmt(lx)}" y="{_fmt(ly)}" font-size="11" text-anchor="middle" '
                f'dominant-baseline="middle">{i}</text>'
            )
    out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"


# -- shadow lines -----------------------------------------------------------------------


@dataclass(frozen=True)
class ShadowGeometry:
    """Polylines per skeleton level plus the labels where they leave the grid."""

    polylines: tuple[tuple[int, tuple[Point, ...]], ...]
    labels: tuple[tuple[ExitLabel, Point], ...]
    points: tuple[tuple[int, Point], ...]
    bounds: tuple[int, int, int, int]


def shadow_geometry(points: Iterable[Point], d: Direction | str = Direction.NE) -> ShadowGeometry:
    d = Direction(d)
    pts = check_generic(points)
    levels = skeleta(pts, d)
    xs = [x for x, _ in pts]
    ys = [y for _, y in pts]
    bounds = (min(xs) - 1, min(ys) - 1, max(xs) + 1, max(ys) + 1)
    turned = [d.to_ne(p) for p in pts]
    top = max(y for _, y in turned) + 1
    right = max(x for x, _ in turned) + 1

    polylines = []
    for level, level_pts in enumerate(levels):
        for layer in _ne_layers(d.to_ne(p) for p in level_pts):
            path = [(layer[0][0], top)]
            for k, (x, y) in enumerate(layer):
                if k:
                    path.append((x, layer[k - 1][1]))
                path.append((x, y))
            path.append((right, layer[-1][1]))
            polylines.append((level + 1, tuple(d.from_ne(p) for p in path)))
    label_points = []
    for level, path in polylines:
        for end in (path[0], path[-1]):
            edge = _edge_of(end, bounds)
            position = end[0] if edge in ("top", "bottom") else end[1]
            label_points.append((ExitLabel(edge, position, level), end))
    marks = tuple(sorted((level, p) for level, lp in enumerate(levels) for p in lp))
    return ShadowGeometry(tuple(polylines), tuple(sorted(label_points, key=_label_key)), marks, bounds)


def edge_word(geo: ShadowGeometry, edge: str, ascending: bool) -> tuple[int, ...]:
    """Labels along one edge of the drawing, in reading order."""
    return read_edge((lab for lab, _ in geo.labels), edge, ascending)


def _label_key(item: tuple[ExitLabel, Point]):
    lab, end = item
    return (lab.edge, lab.position, lab.label, end)


def _edge_of(p: Point, bounds: tuple[int, int, int, int]) -> str | None:
    x0, y0, x1, y1 = bounds
    if p[1] == y1:
        return "top"
    if p[1] == y0:
        return "bottom"
    if p[0] == x1:
        return "right"
    if p[0] == x0:
        return "left"
    return None


def render_shadow_svg(points: Iterable[Point], d: Direction | str = Direction.NE, spec: RenderSpec | None = None) -> str:
    spec = spec or RenderSpec("shadow")
    geo = shadow_geometry(points, d)
    n_levels = max((level for level, _ in geo.polylines), default=0)
    if len(spec.palette) < n_levels:
        raise ValueError(f"palette has {len(spec.palette)} colours but {n_levels} levels need drawing")
    width, height = spec.size
    x0, y0, x1, y1 = geo.bounds
    margin = 30
    sx = (width - 2 * margin) / (x1 - x0)
    sy = (height - 2 * margin) / (y1 - y0)

    def px(p: Point) -> tuple[str, str]:
        return _fmt(margin + (p[0] - x0) * sx), _fmt(height - margin - (p[1] - y0) * sy)

    out = _header(width, height)
    out.append('<g id="grid" stroke="#cccccc" stroke-width="0.6">')
    for x in range(x0 + 1, x1):
        (ax, ay), (bx, by) = px((x, y0)), px((x, y1))
        out.append(f'<line x1="{ax}" y1="{ay}" x2="{bx}" y2="{by}"/>')
    for y in range(y0 + 1, y1):
        (ax, ay), (bx, by) = px((x0, y)), px((x1, y))
        out.append(f'<line x1="{ax}" y1="{ay}" x2="{bx}" y2="{by}"/>')
    out.append("</g>")
    out.append('<g id="shadow-lines" fill="none" stroke-width="3">')
    for level, path in geo.polylines:
        coords = " ".join(",".join(px(p)) for p in path)
        out.append(f'<polyline class="level-{level}" stroke="{spec.palette[level - 1]}" points="{coords}"/>')
    out.append("</g>")
    out.append('<g id="points">')
    for level, p in geo.points:
        cx, cy = px(p)
        fill = "black" if level == 0 else "white"
        out.append(f'<circle data-level="{level}" cx="{cx}" cy="{cy}" r="5" fill="{fill}" stroke="black"/>')
    out.append("</g>")
    if spec.labels:
        out.append('<g id="labels" font-size="12" text-anchor="middle">')
        nudge = {"top": (0, -10), "bottom": (0, 14), "left": (-10, 4), "right": (10, 4)}
        for lab, end in geo.labels:
            cx, cy = px(end)
            dx, dy = nudge[lab.edge]
            out.append(
                f'<text data-edge="{lab.edge}" data-position="{lab.position}" '
                f'x="{_fmt(float(cx) + dx)}" y="{_fmt(float(cy) + dy)}">{lab.label}</text>'
            )
        out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"
