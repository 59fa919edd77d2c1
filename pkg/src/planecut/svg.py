"""Plain SVG pictures of a relaxation, its cuts and tilt pivots."""
from __future__ import annotations

from fractions import Fraction
from math import ceil, floor

from .geometry import HalfPlane, Polyhedron

PALETTE = ["#d62728", "#1f77b4", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b",
           "#e377c2", "#17becf", "#bcbd22"]


def view_box(*polys: Polyhedron, margin: int = 2) -> tuple[int, int, int, int]:
    pts = []
    for P in polys:
        if P.is_empty:
            continue
        pts.extend(P.vertices)
        # show a stretch of every unbounded edge
        for v in P.vertices[:1] + P.vertices[-1:]:
            for r in P.rays:
                t = Fraction(4, max(abs(r[0]), abs(r[1])))
                pts.append((v[0] + t * r[0], v[1] + t * r[1]))
    if not pts:
        return -5, -5, 5, 5
    xs = [p[0] for p in pts]
    ys = [p[1] for p in pts]
    x0, x1 = floor(min(xs)) - margin, ceil(max(xs)) + margin
    y0, y1 = floor(min(ys)) - margin, ceil(max(ys)) + margin
    return x0, y0, x1, y1


def _box_rows(box) -> list[HalfPlane]:
    x0, y0, x1, y1 = box
    return [HalfPlane(1, 0, x1), HalfPlane(-1, 0, -x0), HalfPlane(0, 1, y1), HalfPlane(0, -1, -y0)]


class Canvas:
    def __init__(self, box, scale: int = 40):
        self.box = box
        self.scale = scale
        self.items: list[str] = []

    def xy(self, p) -> tuple[float, float]:
        x0, y0, x1, y1 = self.box
        return (float(p[0] - x0) * self.scale, float(y1 - p[1]) * self.scale)

    def polygon(self, P: Polyhedron, fill: str, opacity: float = 0.3, stroke: str = "none") -> None:
        Q = P.intersect(_box_rows(self.box))
        if Q.is_empty or Q.dim < 2:
            return
        pts = " ".join("%.2f,%.2f" % self.xy(v) for v in Q.vertices)
        self.items.append(f'<polygon points="{pts}" fill="{fill}" fill-opacity="{opacity}" stroke="{stroke}"/>')

    def line(self, h: HalfPlane, color: str, width: float = 1.5) -> None:
        seg = Polyhedron.from_rows([h, HalfPlane(-h.a1, -h.a2, -h.b)] + _box_rows(self.box))
        if seg.dim != 1:
            return
        (ax, ay), (bx, by) = self.xy(seg.vertices[0]), self.xy(seg.vertices[-1])
        self.items.append(f'<line x1="{ax:.2f}" y1="{ay:.2f}" x2="{bx:.2f}" y2="{by:.2f}" '
                          f'stroke="{color}" stroke-width="{width}"/>')

    def dot(self, p, color: str, r: float = 3) -> None:
        x, y = self.xy(p)
        self.items.append(f'<circle cx="{x:.2f}" cy="{y:.2f}" r="{r}" fill="{color}"/>')

    def lattice(self) -> None:
        x0, y0, x1, y1 = self.box
        for i in range(x0, x1 + 1):
            for j in range(y0, y1 + 1):
                self.dot((i, j), "#bbbbbb", 1.2)

    def render(self) -> str:
        x0, y0, x1, y1 = self.box
        w, h = (x1 - x0) * self.scale, (y1 - y0) * self.scale
        body = "\n".join(self.items)
        return (f'<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" '
                f'viewBox="0 0 {w} {h}">\n<rect width="{w}" height="{h}" fill="white"/>\n'
                f"{body}\n</svg>\n")


def solve_picture(P: Polyhedron, trace) -> str:
    cv = Canvas(view_box(P))
    cv.lattice()
    cv.polygon(P, "#999999", 0.25)
    for h in P.rows:
        cv.line(h, "#777777")
    for n, rec in enumerate(r for r in trace if r.cut is not None):
        color = PALETTE[n % len(PALETTE)]
        if rec.tilt is not None and not rec.tilt.is_chvatal:
            box = rec.tilt.box
            strip = Polyhedron.from_rows([(box.pi[0], box.pi[1], box.pi0 + 1),
                                          (-box.pi[0], -box.pi[1], -box.pi0)])
            cv.polygon(strip, color, 0.08)
        cv.line(rec.cut, color, 2)
        if rec.pivot is not None:
            cv.dot(rec.pivot, color, 4)
    final = [r for r in trace if r.kind == "stop" and r.vertex is not None]
    if final:
        cv.dot(final[-1].vertex, "black", 5)
    return cv.render()


def region_picture(P: Polyhedron, result: Polyhedron) -> str:
    cv = Canvas(view_box(P, result))
    cv.lattice()
    cv.polygon(P, "#999999", 0.25)
    for h in P.rows:
        cv.line(h, "#777777")
    cv.polygon(result, PALETTE[1], 0.35)
    for n, h in enumerate(r for r in result.rows if r not in set(P.rows)):
        cv.line(h, PALETTE[n % len(PALETTE)], 2)
    return cv.render()
