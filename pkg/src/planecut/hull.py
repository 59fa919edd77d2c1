"""Integer hulls of translated cones and of general planar polyhedra."""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from math import ceil, floor

from .geometry import (HalfPlane, Polyhedron, TranslatedCone, cross,
                       dot, perp, primitive)
from .lattice import lattice_points_on_line
from .tilt import InvariantViolation, TiltOutcome, tilt


@dataclass
class HullResult:
    hull: Polyhedron
    # lattice points spanning each facet (two per bounded facet, one plus a
    # ray direction per unbounded facet), keyed by facet row
    witnesses: dict = field(default_factory=dict)
    tilts: list[TiltOutcome] = field(default_factory=list)


def facet_bound(amax: int, K: int = 8) -> int:
    return math.floor(K * (1 + math.log2(max(amax, 1))))


def cone_hull(C: TranslatedCone, check: bool = True) -> HullResult:
    """Integer hull of ``C`` by sweeping tilts from the late to the early row.

    Chvatal tilts are facets of the hull and become the new row being
    tilted; split tilts only move the sweep forward.  The sweep stops once
    the current row meets the strengthened early row in a lattice point.
    """
    H1 = C.late.strengthen()
    H2 = C.early.strengthen()
    facets = [H1]
    tilts: list[TiltOutcome] = []
    cur = H1
    guard = 0
    while True:
        K = TranslatedCone(cur, H2)
        if K.apex.is_integral():
            break
        out = tilt(K, check=check)
        tilts.append(out)
        if out.is_chvatal:
            facets.append(out.T)
        cur = out.T
        guard += 1
        if guard > 10_000:  # pragma: no cover
            raise InvariantViolation("tilt sweep does not terminate")
    facets.append(H2)
    hull = Polyhedron.from_rows(facets)
    if check:
        amax = C.max_normal()
        if len(hull.rows) > facet_bound(amax):
            raise InvariantViolation(f"{len(hull.rows)} hull facets exceed the bound")
        for h in hull.rows:
            if max(abs(h.a1), abs(h.a2)) > amax:
                raise InvariantViolation(f"hull facet {h} has a normal above {amax}")
        if not all(v.is_integral() for v in hull.vertices):
            raise InvariantViolation("hull has a fractional vertex")
    return HullResult(hull, _witnesses(hull), tilts)


def _witnesses(P: Polyhedron) -> dict:
    out = {}
    if P.dim != 2 or not P.pointed:
        return out
    verts = P.vertices
    for j, h in enumerate(P.rows):
        pts = [v for v in verts if h.on_boundary(v)]
        if len(pts) >= 2:
            out[h] = tuple(pts[:2])
        elif pts:
            ray = P.rays[0] if j == 0 else P.rays[-1]
            out[h] = (pts[0], ray)
    return out


def corner_pairs(P: Polyhedron) -> list[tuple[HalfPlane, HalfPlane]]:
    """Non-parallel row pairs of ``P`` in row order."""
    rows = list(P.rows)
    out = []
    for i in range(len(rows)):
        for j in range(i + 1, len(rows)):
            if cross(rows[i].normal, rows[j].normal) != 0:
                out.append((rows[i], rows[j]))
    return out


def polyhedron_hull(P: Polyhedron, check: bool = True) -> Polyhedron:
    """``P_I``: intersection of the integer hulls of all corner cones."""
    if P.is_empty:
        return P
    if P.dim <= 1:
        return _low_dim_hull(P)
    if not P.pointed:
        return _nonpointed_hull(P)
    rows: list[HalfPlane] = []
    for h, k in corner_pairs(P):
        rows.extend(cone_hull(TranslatedCone.corner(h, k), check=check).hull.rows)
    return Polyhedron.from_rows(rows)


def _nonpointed_hull(P: Polyhedron) -> Polyhedron:
    # all facets are parallel (a half-plane or a strip, possibly the plane)
    rows = [h.strengthen() for h in P.rows]
    return Polyhedron.from_rows(rows)


def _low_dim_hull(P: Polyhedron) -> Polyhedron:
    if P.dim == 0:
        v = P.vertices[0]
        return P if v.is_integral() else Polyhedron.empty()
    p0, p1 = P.window[0], P.window[-1]
    d = primitive((p1[0] - p0[0], p1[1] - p0[1]))
    n = perp(d)
    beta = dot(n, p0)
    if beta.denominator != 1:
        return Polyhedron.empty()
    param = lattice_points_on_line(n, int(beta))
    s = param.step
    ts = [param.param_of(v) for v in P.vertices]
    up = any(dot(r, s) > 0 for r in P.rays)
    down = any(dot(r, s) < 0 for r in P.rays)
    hi = None if up else floor(max(ts))
    lo = None if down else ceil(min(ts))
    if lo is not None and hi is not None and lo > hi:
        return Polyhedron.empty()
    rows = [HalfPlane(n[0], n[1], beta), HalfPlane(-n[0], -n[1], -beta)]
    if hi is not None:
        x = param.at(hi)
        rows.append(HalfPlane(s[0], s[1], dot(s, x)))
    if lo is not None:
        x = param.at(lo)
        rows.append(HalfPlane(-s[0], -s[1], -dot(s, x)))
    return Polyhedron.from_rows(rows)
