"""Exact rational geometry in the plane.

Everything here works on ``int`` and ``fractions.Fraction``; no floats.

Orientation convention (used by every other module): boundaries are
traversed clockwise, so the interior lies to the right of the direction of
travel, and the outer normals of consecutive facets turn clockwise.  A list
of normals "in clockwise order" is sorted by decreasing polar angle.

A polyhedron is built from rows ``a.x <= b`` by clipping a square window
that is large enough to contain every vertex.  Whatever survives of the
window tells us the dimension, the vertices, the facets and, together with
the homogeneous system, the recession cone.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cmp_to_key
from math import floor, ceil, gcd
from typing import Iterable, NamedTuple, Sequence


class GeometryError(Exception):
    pass


class ZeroNormal(GeometryError):
    pass


class EmptyPolyhedron(GeometryError):
    pass


class Point(NamedTuple):
    x1: Fraction
    x2: Fraction

    def __add__(self, other):  # type: ignore[override]
        return Point(self.x1 + other[0], self.x2 + other[1])

    def __sub__(self, other):
        return Point(self.x1 - other[0], self.x2 - other[1])

    def scale(self, t) -> "Point":
        return Point(self.x1 * t, self.x2 * t)

    def is_integral(self) -> bool:
        return self.x1.denominator == 1 and self.x2.denominator == 1

    def as_ints(self) -> tuple[int, int]:
        if not self.is_integral():
            raise ValueError(f"{self} is not integral")
        return int(self.x1), int(self.x2)

    def __repr__(self):
        return f"({_fmt(self.x1)}, {_fmt(self.x2)})"


def _fmt(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def point(x1, x2) -> Point:
    return Point(Fraction(x1), Fraction(x2))


IntVec = tuple  # (int, int); kept as a plain tuple


def dot(a, b):
    return a[0] * b[0] + a[1] * b[1]


def cross(a, b):
    return a[0] * b[1] - a[1] * b[0]


def perp(a):
    """Rotate 90 degrees counterclockwise."""
    return (-a[1], a[0])


def primitive(v) -> tuple[int, int]:
    """Positive multiple of a rational vector with coprime integer entries."""
    f1, f2 = Fraction(v[0]), Fraction(v[1])
    if f1 == 0 and f2 == 0:
        raise ZeroNormal("zero vector has no primitive multiple")
    den = f1.denominator * f2.denominator // gcd(f1.denominator, f2.denominator)
    n1, n2 = int(f1 * den), int(f2 * den)
    g = gcd(n1, n2)
    return (n1 // g, n2 // g)


def _half(v) -> int:
    return 0 if v[1] > 0 or (v[1] == 0 and v[0] > 0) else 1


def _ccw_cmp(u, v) -> int:
    hu, hv = _half(u), _half(v)
    if hu != hv:
        return hu - hv
    c = cross(u, v)
    return -1 if c > 0 else (1 if c < 0 else 0)


ccw_key = cmp_to_key(_ccw_cmp)
"""Sort key: increasing polar angle in [0, 2*pi)."""


def clockwise_sorted(vectors: Iterable, key=lambda v: v) -> list:
    return sorted(vectors, key=lambda item: ccw_key(key(item)), reverse=True)


@dataclass(frozen=True)
class HalfPlane:
    """``a1*x1 + a2*x2 <= b`` with a primitive integer normal.

    Construction divides the normal by its gcd and the rhs by the same
    factor (exactly, so ``b`` may become a fraction); the point set never
    changes.  A half-plane with integral ``b`` is Chvatal strengthened.
    """

    a1: int
    a2: int
    b: Fraction

    def __post_init__(self):
        a1, a2 = int(self.a1), int(self.a2)
        if a1 == 0 and a2 == 0:
            raise ZeroNormal("half-plane with zero normal")
        g = gcd(a1, a2)
        object.__setattr__(self, "a1", a1 // g)
        object.__setattr__(self, "a2", a2 // g)
        object.__setattr__(self, "b", Fraction(self.b) / g)

    @property
    def normal(self) -> tuple[int, int]:
        return (self.a1, self.a2)

    def value(self, x) -> Fraction:
        return self.a1 * x[0] + self.a2 * x[1]

    def slack(self, x) -> Fraction:
        return self.b - self.a1 * x[0] - self.a2 * x[1]

    def contains(self, x) -> bool:
        return self.slack(x) >= 0

    def on_boundary(self, x) -> bool:
        return self.slack(x) == 0

    @property
    def is_strengthened(self) -> bool:
        return self.b.denominator == 1

    def strengthen(self) -> "HalfPlane":
        return HalfPlane(self.a1, self.a2, floor(self.b))

    def integer_row(self) -> tuple[int, int, int]:
        k = self.b.denominator
        return (self.a1 * k, self.a2 * k, self.b.numerator)

    def boundary(self) -> "Line":
        return Line(self.a1, self.a2, self.b)

    def __repr__(self):
        return f"[{self.a1}x1 + {self.a2}x2 <= {_fmt(self.b)}]"


@dataclass(frozen=True)
class Line:
    """``a1*x1 + a2*x2 == b`` with a primitive normal."""

    a1: int
    a2: int
    b: Fraction

    def __post_init__(self):
        a1, a2 = int(self.a1), int(self.a2)
        if a1 == 0 and a2 == 0:
            raise ZeroNormal("line with zero normal")
        g = gcd(a1, a2)
        object.__setattr__(self, "a1", a1 // g)
        object.__setattr__(self, "a2", a2 // g)
        object.__setattr__(self, "b", Fraction(self.b) / g)

    @property
    def normal(self) -> tuple[int, int]:
        return (self.a1, self.a2)

    def value(self, x) -> Fraction:
        return self.a1 * x[0] + self.a2 * x[1]

    def contains(self, x) -> bool:
        return self.value(x) == self.b


def normalize(a1: int, a2: int, b: int) -> tuple[HalfPlane, bool]:
    """Integer-rhs row with primitive normal for ``a.x <= b``.

    Returns ``(row, loose)``.  When the gcd of the normal divides ``b`` the
    row is the same point set and ``loose`` is False.  Otherwise the rhs is
    rounded up (the boundary moves outward) and ``loose`` is True.  Rounding
    down is Chvatal strengthening; see ``lattice.chvatal_strengthen``.
    """
    if a1 == 0 and a2 == 0:
        raise ZeroNormal("cannot normalize a zero normal")
    g = gcd(a1, a2)
    if b % g == 0:
        return HalfPlane(a1 // g, a2 // g, b // g), False
    return HalfPlane(a1 // g, a2 // g, -((-b) // g)), True


def meet(h, k) -> Point:
    """Intersection point of the boundaries of two non-parallel rows/lines."""
    det = h.a1 * k.a2 - h.a2 * k.a1
    if det == 0:
        raise GeometryError(f"parallel boundaries {h} and {k}")
    x1 = (h.b * k.a2 - h.a2 * k.b) / det
    x2 = (h.a1 * k.b - h.b * k.a1) / det
    return Point(Fraction(x1), Fraction(x2))


def line_through(p, q) -> Line:
    """The line through two distinct rational points."""
    d = primitive((q[0] - p[0], q[1] - p[1]))
    n = perp(d)
    return Line(n[0], n[1], dot(n, p))


def halfplane_through(p, q, avoid) -> HalfPlane:
    """Half-plane bounded by the line pq that does not contain ``avoid``."""
    ln = line_through(p, q)
    if ln.value(avoid) > ln.b:
        return HalfPlane(ln.a1, ln.a2, ln.b)
    if ln.value(avoid) < ln.b:
        return HalfPlane(-ln.a1, -ln.a2, -ln.b)
    raise GeometryError(f"{avoid} lies on the line through {p} and {q}")


# ----------------------------------------------------------------------------
# polygon clipping


# Points inside the clipper are homogeneous integer triples (X, Y, W) with
# W > 0 and gcd(X, Y, W) = 1, which keeps the inner loop in int arithmetic.


def _hnorm(X: int, Y: int, W: int) -> tuple[int, int, int]:
    g = gcd(gcd(X, Y), W)
    return (X // g, Y // g, W // g)


def _clip(poly: list, A1: int, A2: int, B: int) -> list:
    """Clip a clockwise polygon by the integer row ``A1 x + A2 y <= B``."""
    n = len(poly)
    if n == 0:
        return poly
    slacks = [B * W - A1 * X - A2 * Y for X, Y, W in poly]
    if min(slacks) >= 0:
        return poly
    if max(slacks) < 0:
        return []
    out = []
    for i in range(n):
        p, fp = poly[i], slacks[i]
        j = (i + 1) % n
        q, fq = poly[j], slacks[j]
        if fp >= 0:
            out.append(p)
        if (fp > 0 > fq) or (fp < 0 < fq):
            if fp < 0:
                p, q, fp, fq = q, p, fq, fp
            out.append(_hnorm(fp * q[0] - fq * p[0], fp * q[1] - fq * p[1],
                              fp * q[2] - fq * p[2]))
    return _cleanup(out)


def _orient(p, q, r) -> int:
    """Sign of the turn p -> q -> r (positive = counterclockwise)."""
    return (p[0] * (q[1] * r[2] - q[2] * r[1])
            - p[1] * (q[0] * r[2] - q[2] * r[0])
            + p[2] * (q[0] * r[1] - q[1] * r[0]))


def _cleanup(pts: list) -> list:
    out: list = []
    for p in pts:
        if not out or out[-1] != p:
            out.append(p)
    while len(out) > 1 and out[0] == out[-1]:
        out.pop()
    if len(out) <= 2:
        return out
    p0 = out[0]
    p1 = next(p for p in out if p != p0)
    if all(_orient(p0, p1, p) == 0 for p in out):
        # degenerate: keep the two extreme points
        to = [_to_point(p) for p in out]
        d = to[out.index(p1)] - to[0]
        k = min(range(len(out)), key=lambda i: dot(d, to[i]))
        m = max(range(len(out)), key=lambda i: dot(d, to[i]))
        return [out[k]] if k == m else [out[k], out[m]]
    changed = True
    while changed and len(out) > 2:
        changed = False
        for i in range(len(out)):
            if _orient(out[i - 1], out[i], out[(i + 1) % len(out)]) == 0:
                del out[i]
                changed = True
                break
    return out


def _to_point(p) -> Point:
    return Point(Fraction(p[0], p[2]), Fraction(p[1], p[2]))


def _window(radius: int) -> list:
    r = int(radius)
    # clockwise
    return [(-r, -r, 1), (-r, r, 1), (r, r, 1), (r, -r, 1)]


# ----------------------------------------------------------------------------
# polyhedra


EMPTY_ROWS = (HalfPlane(1, 0, 0), HalfPlane(-1, 0, -1))


@dataclass(frozen=True, eq=False)
class Polyhedron:
    """Irredundant description of a rational polyhedron in the plane.

    Attributes are computed once by :meth:`from_rows`:

    ``rows``      irredundant rows; clockwise facet order for 2-dimensional
                  sets (starting after the unbounded arc when unbounded),
                  a canonical description for lower dimensions.
    ``vertices``  vertices in clockwise boundary order.
    ``rays``      recession generators (primitive); for a pointed
                  2-dimensional set the incoming ray comes first.
    ``dim``       -1 (empty), 0, 1 or 2.
    ``pointed``   True when the set contains no line.
    ``window``    vertices of the set clipped to the construction window;
                  always includes a point of every minimal face.
    """

    rows: tuple[HalfPlane, ...]
    vertices: tuple[Point, ...]
    rays: tuple[tuple[int, int], ...]
    dim: int
    pointed: bool
    window: tuple[Point, ...]

    @classmethod
    def from_rows(cls, rows: Iterable) -> "Polyhedron":
        return _build(list(_as_rows(rows)))

    @classmethod
    def empty(cls) -> "Polyhedron":
        return cls(EMPTY_ROWS, (), (), -1, True, ())

    @property
    def is_empty(self) -> bool:
        return self.dim < 0

    @property
    def is_bounded(self) -> bool:
        return self.dim >= 0 and not self.rays

    def contains(self, x) -> bool:
        return all(h.contains(x) for h in self.rows)

    def intersect(self, *more) -> "Polyhedron":
        extra: list = []
        for item in more:
            if isinstance(item, Polyhedron):
                if item.is_empty:
                    return Polyhedron.empty()
                extra.extend(item.rows)
            elif isinstance(item, HalfPlane):
                extra.append(item)
            else:
                extra.extend(_as_rows(item))
        if self.is_empty:
            return self
        return Polyhedron.from_rows(list(self.rows) + extra)

    def generators(self) -> tuple[tuple[Point, ...], tuple[tuple[int, int], ...]]:
        """Points and directions whose convex/conic hull sum is the set."""
        if self.is_empty:
            return (), ()
        pts = self.vertices if self.pointed else self.window
        return pts, self.rays

    def satisfies(self, h: HalfPlane) -> bool:
        """True when every point of the set satisfies ``h``."""
        pts, rays = self.generators()
        return all(h.contains(p) for p in pts) and all(dot(h.normal, r) <= 0 for r in rays)

    def issubset(self, other: "Polyhedron") -> bool:
        if self.is_empty:
            return True
        if other.is_empty:
            return False
        return all(self.satisfies(h) for h in other.rows)

    def same_set(self, other: "Polyhedron") -> bool:
        return self.issubset(other) and other.issubset(self)

    def integer_rows(self) -> list[tuple[int, int, int]]:
        return [h.integer_row() for h in self.rows]

    def max_normal(self) -> int:
        return max((max(abs(h.a1), abs(h.a2)) for h in self.rows), default=0)

    def __eq__(self, other):
        if not isinstance(other, Polyhedron):
            return NotImplemented
        return self.dim == other.dim and set(self.rows) == set(other.rows)

    def __hash__(self):
        return hash((self.dim, frozenset(self.rows)))

    def __repr__(self):
        if self.is_empty:
            return "Polyhedron(empty)"
        return f"Polyhedron(dim={self.dim}, rows={list(self.rows)}, vertices={list(self.vertices)})"


def _as_rows(rows) -> Iterable[HalfPlane]:
    for r in rows:
        if isinstance(r, HalfPlane):
            yield r
        else:
            a1, a2, b = r
            yield HalfPlane(a1, a2, b)


def _merge_parallel(rows: list[HalfPlane]) -> list[HalfPlane]:
    best: dict[tuple[int, int], HalfPlane] = {}
    for h in rows:
        cur = best.get(h.normal)
        if cur is None or h.b < cur.b:
            best[h.normal] = h
    return list(best.values())


def window_radius(rows: Sequence[HalfPlane]) -> int:
    """Radius of a square strictly containing every vertex and a point of
    every boundary line.  Cramer's rule with integer normals (|det| >= 1)
    bounds vertex coordinates by 2*max|b|*max|a|."""
    bmax = max((abs(h.b) for h in rows), default=Fraction(0))
    amax = max((max(abs(h.a1), abs(h.a2)) for h in rows), default=1)
    return 2 * ceil(bmax) * amax + 1


def _build(rows: list[HalfPlane]) -> Polyhedron:
    rows = _merge_parallel(rows)
    # opposite rows that cannot both hold: empty without any clipping
    for h in rows:
        o = (-h.a1, -h.a2)
        for k in rows:
            if k.normal == o and h.b + k.b < 0:
                return Polyhedron.empty()
    radius = window_radius(rows)
    hpoly = _window(radius)
    for h in rows:
        hpoly = _clip(hpoly, *h.integer_row())
        if not hpoly:
            return Polyhedron.empty()
    poly = [_to_point(p) for p in hpoly]
    r = Fraction(radius)
    R = int(radius)
    boxed = [abs(X) == R * W or abs(Y) == R * W for X, Y, W in hpoly]
    if any(boxed):
        rays, pointed = _recession(rows)
    else:
        rays, pointed = [], True

    def on_box(p: Point) -> bool:
        return abs(p.x1) == r or abs(p.x2) == r

    if len(poly) == 1:
        v = poly[0]
        canon = (HalfPlane(1, 0, v.x1), HalfPlane(0, 1, v.x2),
                 HalfPlane(-1, 0, -v.x1), HalfPlane(0, -1, -v.x2))
        return Polyhedron(tuple(clockwise_sorted(canon, key=lambda h: h.normal)),
                          (v,), (), 0, True, (v,))

    if len(poly) == 2:
        return _build_segment(poly, on_box, rays, pointed)

    # two-dimensional
    n = len(poly)
    irows = [(h, h.integer_row()) for h in rows]
    facet_of_edge: list[HalfPlane | None] = []
    for i in range(n):
        p, q = hpoly[i], hpoly[(i + 1) % n]
        if boxed[i] and boxed[(i + 1) % n] and (
                (p[0] * q[2] == q[0] * p[2] and abs(p[0]) == R * p[2])
                or (p[1] * q[2] == q[1] * p[2] and abs(p[1]) == R * p[2])):
            facet_of_edge.append(None)
            continue
        h = next((h for h, (A1, A2, B) in irows
                  if B * p[2] == A1 * p[0] + A2 * p[1] and B * q[2] == A1 * q[0] + A2 * q[1]),
                 None)
        if h is None:  # pragma: no cover - clipping produced an edge with no row
            raise GeometryError("edge without a supporting row")
        facet_of_edge.append(h)

    if all(f is not None for f in facet_of_edge):
        # bounded: canonical start = largest polar angle
        order = clockwise_sorted(range(n), key=lambda i: facet_of_edge[i].normal)
        start = order[0]
        facets = [facet_of_edge[(start + k) % n] for k in range(n)]
        verts = [poly[(start + k + 1) % n] for k in range(n)]
        return Polyhedron(tuple(facets), tuple(verts), (), 2, True, tuple(poly))

    if not pointed:
        facets = clockwise_sorted({f for f in facet_of_edge if f is not None},
                                  key=lambda h: h.normal)
        return Polyhedron(tuple(facets), (), tuple(rays), 2, False, tuple(poly))

    # pointed and unbounded: rotate so the box arc comes last
    last_box = max(i for i in range(n) if facet_of_edge[i] is None)
    k = last_box + 1
    while facet_of_edge[k % n] is None:
        k += 1
    seq = [(k + j) % n for j in range(n)]
    facets = []
    for idx in seq:
        if facet_of_edge[idx] is None:
            break
        facets.append(facet_of_edge[idx])
    verts = [poly[(idx + 1) % n] for idx in seq[: len(facets) - 1]]
    first, last = facets[0], facets[-1]
    d_in = perp(first.normal)
    if dot(d_in, poly[seq[0]] - verts[0]) < 0:
        d_in = (-d_in[0], -d_in[1])
    d_out = perp(last.normal)
    end_box = poly[(seq[len(facets) - 1] + 1) % n]
    if dot(d_out, end_box - verts[-1]) < 0:
        d_out = (-d_out[0], -d_out[1])
    return Polyhedron(tuple(facets), tuple(verts), (d_in, d_out), 2, True, tuple(poly))


def _build_segment(poly, on_box, rays, pointed) -> Polyhedron:
    p0, p1 = poly
    d = primitive(p1 - p0)
    n = perp(d)
    c = dot(n, p0)
    rows = [HalfPlane(n[0], n[1], c), HalfPlane(-n[0], -n[1], -c)]
    verts = []
    seg_rays = []
    if on_box(p0):
        seg_rays.append((-d[0], -d[1]))
    else:
        rows.append(HalfPlane(-d[0], -d[1], -dot(d, p0)))
        verts.append(p0)
    if on_box(p1):
        seg_rays.append(d)
    else:
        rows.append(HalfPlane(d[0], d[1], dot(d, p1)))
        verts.append(p1)
    return Polyhedron(tuple(clockwise_sorted(rows, key=lambda h: h.normal)),
                      tuple(verts), tuple(seg_rays), 1, bool(verts), tuple(poly))


def _recession(rows: list[HalfPlane]) -> tuple[list[tuple[int, int]], bool]:
    hpoly = _window(1)
    for h in rows:
        hpoly = _clip(hpoly, h.a1, h.a2, 0)
    poly = [_to_point(p) for p in hpoly]
    origin = Point(Fraction(0), Fraction(0))
    others = [p for p in poly if p != origin]
    if not others:
        return [], True
    if origin in poly:
        i = poly.index(origin)
        if len(poly) == 2:
            return [primitive(poly[1 - i])], True
        prev, nxt = poly[i - 1], poly[(i + 1) % len(poly)]
        return [primitive(prev), primitive(nxt)], True
    gens: list[tuple[int, int]] = []
    for p in others:
        g = primitive(p)
        if g not in gens:
            gens.append(g)
    return gens, False


# ----------------------------------------------------------------------------
# higher-level operations


def remove_redundant(rows) -> Polyhedron:
    return Polyhedron.from_rows(rows)


def vertices(P: Polyhedron) -> tuple[Point, ...]:
    return P.vertices


def dimension(P: Polyhedron) -> int:
    return P.dim


def is_pointed(P: Polyhedron) -> bool:
    return P.pointed


@dataclass(frozen=True)
class LPResult:
    status: str  # "optimal" | "unbounded" | "infeasible"
    point: Point | None = None
    value: Fraction | None = None


def lp_max(P: Polyhedron, c) -> LPResult:
    """Maximize ``c.x`` over a pointed polyhedron.

    When an optimal facet has two optimal vertices the one returned is the
    first vertex met when walking that facet clockwise.
    """
    if P.is_empty:
        return LPResult("infeasible")
    if not P.pointed:
        raise GeometryError("lp_max needs a pointed polyhedron")
    if any(dot(c, r) > 0 for r in P.rays):
        return LPResult("unbounded")
    vals = [dot(c, v) for v in P.vertices]
    best = max(vals)
    n = len(vals)
    idx = [i for i in range(n) if vals[i] == best]
    if len(idx) == 1 or P.dim < 2:
        i = idx[0]
    else:
        # two consecutive optimal vertices; pick the tail of that edge
        a, b = idx
        cyclic = P.is_bounded
        if b == a + 1:
            i = a
        elif cyclic and a == 0 and b == n - 1:
            i = b
        else:  # pragma: no cover
            raise GeometryError("optimal vertices are not adjacent")
    return LPResult("optimal", P.vertices[i], best)


def support(P: Polyhedron, c) -> Fraction | None:
    """``sup {c.x : x in P}``; None when unbounded.  P must be nonempty."""
    if P.is_empty:
        raise EmptyPolyhedron("support of an empty set")
    pts, rays = P.generators()
    if any(dot(c, r) > 0 for r in rays):
        return None
    return max(dot(c, p) for p in pts)


def _monotone_hull(points: Sequence[Point]) -> list[Point]:
    pts = sorted(set(points))
    if len(pts) <= 2:
        return pts

    def half(seq):
        out: list[Point] = []
        for p in seq:
            while len(out) >= 2 and cross(out[-1] - out[-2], p - out[-2]) <= 0:
                out.pop()
            out.append(p)
        return out

    lower, upper = half(pts), half(reversed(pts))
    return lower[:-1] + upper[:-1]


def hull_of(points: Sequence, rays: Sequence = ()) -> Polyhedron:
    """``conv(points) + cone(rays)`` as an irredundant polyhedron."""
    pts = [Point(Fraction(p[0]), Fraction(p[1])) for p in points]
    if not pts:
        return Polyhedron.empty()
    rays = [primitive(r) for r in rays]
    ring = _monotone_hull(pts)
    cands: set[tuple[int, int]] = set()
    if len(ring) >= 3:
        # counterclockwise ring: outward normals of its edges
        for i in range(len(ring)):
            e = primitive(ring[(i + 1) % len(ring)] - ring[i])
            cands.add((e[1], -e[0]))
        dirs = set(rays)
        for d in dirs:
            n = perp(d)
            cands.add(n)
            cands.add((-n[0], -n[1]))
    else:
        dirs = {(1, 0), (0, 1)}
        if len(ring) == 2:
            dirs.add(primitive(ring[1] - ring[0]))
        dirs.update(rays)
        for d in dirs:
            for n in (d, perp(d)):
                cands.add(n)
                cands.add((-n[0], -n[1]))
    out = []
    for n in cands:
        if any(dot(n, r) > 0 for r in rays):
            continue
        out.append(HalfPlane(n[0], n[1], max(dot(n, p) for p in ring)))
    return Polyhedron.from_rows(out)


def conv_union(P1: Polyhedron, P2: Polyhedron) -> Polyhedron:
    """Closed convex hull of the union of two polyhedra."""
    if P1.is_empty:
        return P2
    if P2.is_empty:
        return P1
    pts1, r1 = P1.generators()
    pts2, r2 = P2.generators()
    return hull_of(list(pts1) + list(pts2), list(r1) + list(r2))


def apply_disjunction(P: Polyhedron, pi, pi0: int) -> Polyhedron:
    """``conv((P & {pi.x <= pi0}) | (P & {pi.x >= pi0 + 1}))``."""
    if P.is_empty:
        return P
    left = P.intersect([HalfPlane(pi[0], pi[1], pi0)])
    right = P.intersect([HalfPlane(-pi[0], -pi[1], -pi0 - 1)])
    return conv_union(left, right)


# ----------------------------------------------------------------------------
# translated cones


@dataclass(frozen=True)
class TranslatedCone:
    """Intersection of two non-parallel half-planes, ``(late, early)``."""

    late: HalfPlane
    early: HalfPlane

    def __post_init__(self):
        if cross(self.late.normal, self.early.normal) == 0:
            raise GeometryError("cone rows must not be parallel")

    @classmethod
    def corner(cls, h: HalfPlane, k: HalfPlane) -> "TranslatedCone":
        """Cone of two rows, ordered so ``early`` follows ``late`` clockwise."""
        return cls(h, k) if cross(h.normal, k.normal) < 0 else cls(k, h)

    @property
    def apex(self) -> Point:
        return meet(self.late, self.early)

    def rays(self) -> tuple[tuple[int, int], tuple[int, int]]:
        """(direction along the late facet, direction along the early facet)."""
        r_late = perp(self.late.normal)
        if dot(self.early.normal, r_late) > 0:
            r_late = (-r_late[0], -r_late[1])
        r_early = perp(self.early.normal)
        if dot(self.late.normal, r_early) > 0:
            r_early = (-r_early[0], -r_early[1])
        return r_late, r_early

    def contains(self, x) -> bool:
        return self.late.contains(x) and self.early.contains(x)

    def max_normal(self) -> int:
        return max(abs(self.late.a1), abs(self.late.a2), abs(self.early.a1), abs(self.early.a2))

    def polyhedron(self) -> Polyhedron:
        return Polyhedron.from_rows([self.late, self.early])
