"""Brute-force ground truth.

The brute-force oracles never call the cutting-plane, hull or closure
algorithms.  Integer programs are solved by scanning lattice columns,
closures by enumerating disjunctions up to a norm bound.  The divergence
replay reuses the disjunction of the tilt on purpose.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import ceil, floor, gcd

from .geometry import (HalfPlane, Polyhedron, TranslatedCone,
                       apply_disjunction, dot, hull_of, lp_max, support)
from .lattice import ext_gcd
from .solver import order_facets
from .tilt import best_split_cut, parallelogram_disjunction


@dataclass(frozen=True)
class Box:
    lo: tuple[int, int]
    hi: tuple[int, int]

    def __post_init__(self):
        if self.lo[0] > self.hi[0] or self.lo[1] > self.hi[1]:
            raise ValueError("box corners out of order")

    @classmethod
    def square(cls, r: int, center=(0, 0)) -> "Box":
        return cls((center[0] - r, center[1] - r), (center[0] + r, center[1] + r))

    def rows(self) -> list[tuple[int, int, int]]:
        return [(1, 0, self.hi[0]), (-1, 0, -self.lo[0]),
                (0, 1, self.hi[1]), (0, -1, -self.lo[1])]


@dataclass(frozen=True)
class IPResult:
    status: str  # optimal | infeasible
    point: tuple[int, int] | None = None
    value: int | None = None


def _int_rows(P) -> list[tuple[int, int, int]]:
    if isinstance(P, Polyhedron):
        return P.integer_rows()
    out = []
    for r in P:
        if isinstance(r, HalfPlane):
            out.append(r.integer_row())
        else:
            out.append((int(r[0]), int(r[1]), int(r[2])))
    return out


def _pair_vertices(rows) -> list[tuple[Fraction, Fraction]]:
    """Feasible intersections of pairs of row boundaries (Cramer's rule)."""
    pts = []
    for (a1, a2, b), (c1, c2, d) in combinations(rows, 2):
        det = a1 * c2 - a2 * c1
        if det == 0:
            continue
        x = (Fraction(b * c2 - a2 * d, det), Fraction(a1 * d - b * c1, det))
        if all(r0 * x[0] + r1 * x[1] <= rb for r0, r1, rb in rows):
            pts.append(x)
    return pts


def _subdeterminant(rows) -> int:
    best = max((max(abs(a1), abs(a2)) for a1, a2, _ in rows), default=1)
    for (a1, a2, _), (c1, c2, _) in combinations(rows, 2):
        best = max(best, abs(a1 * c2 - a2 * c1))
    return best


def column_range(rows, x1: int) -> tuple[int, int] | None:
    """Integer ``x2`` range of the rows on the vertical line ``x1``;
    infinite ends are returned as None."""
    lo = hi = None
    for a1, a2, b in rows:
        rest = b - a1 * x1
        if a2 == 0:
            if rest < 0:
                return None
            continue
        if a2 > 0:
            t = rest // a2
            hi = t if hi is None else min(hi, t)
        else:
            t = -(rest // (-a2))  # ceil(rest / a2) with a2 < 0
            lo = t if lo is None else max(lo, t)
    if lo is not None and hi is not None and lo > hi:
        return None
    return lo, hi


def ip_box(P, c=None) -> Box | None:
    """A box that contains an optimal lattice point whenever one exists.

    For a polytope this is the bounding box.  Otherwise the proximity
    theorem gives an optimal lattice point within ``n * Delta`` of any LP
    vertex optimum, ``Delta`` the largest subdeterminant; the radius used is
    twice that.
    """
    rows = _int_rows(P)
    verts = _pair_vertices(rows)
    if not verts:
        return None
    bounded = _is_bounded(rows)
    if bounded:
        xs = [v[0] for v in verts]
        ys = [v[1] for v in verts]
        return Box((floor(min(xs)), floor(min(ys))), (ceil(max(xs)), ceil(max(ys))))
    if c is None:
        raise ValueError("unbounded polyhedron needs an objective for a box")
    best = max(verts, key=lambda v: c[0] * v[0] + c[1] * v[1])
    r = 2 * 2 * _subdeterminant(rows)
    cx, cy = floor(best[0]), floor(best[1])
    return Box((cx - r, cy - r), (cx + r + 1, cy + r + 1))


def _is_bounded(rows) -> bool:
    # bounded iff the homogeneous system only admits 0; test the 8 compass
    # directions and all directions along row boundaries
    dirs = {(1, 0), (0, 1), (-1, 0), (0, -1), (1, 1), (1, -1), (-1, 1), (-1, -1)}
    for a1, a2, _ in rows:
        dirs.add((-a2, a1))
        dirs.add((a2, -a1))
    for d in dirs:
        if all(a1 * d[0] + a2 * d[1] <= 0 for a1, a2, _ in rows):
            return False
    return True


def brute_ip(P, c, box: Box | None = None) -> IPResult:
    """Maximize ``c.x`` over the lattice points of ``P`` inside ``box``."""
    rows = _int_rows(P)
    if box is None:
        box = ip_box(rows, c)
        if box is None:
            return IPResult("infeasible")
    rows = rows + box.rows()
    best = None
    for x1 in range(box.lo[0], box.hi[0] + 1):
        rng = column_range(rows, x1)
        if rng is None:
            continue
        lo, hi = rng
        for x2 in (lo, hi):
            val = c[0] * x1 + c[1] * x2
            if best is None or val > best[0] or (val == best[0] and (x1, x2) < best[1]):
                best = (val, (x1, x2))
    if best is None:
        return IPResult("infeasible")
    return IPResult("optimal", best[1], best[0])


def lattice_points(P, box: Box) -> list[tuple[int, int]]:
    rows = _int_rows(P) + box.rows()
    out = []
    for x1 in range(box.lo[0], box.hi[0] + 1):
        rng = column_range(rows, x1)
        if rng is not None:
            out.extend((x1, x2) for x2 in range(rng[0], rng[1] + 1))
    return out


def boxed_hull(P, box: Box) -> Polyhedron:
    """Convex hull of the lattice points of ``P`` inside ``box``."""
    rows = _int_rows(P) + box.rows()
    pts = []
    for x1 in range(box.lo[0], box.hi[0] + 1):
        rng = column_range(rows, x1)
        if rng is not None:
            pts.append((x1, rng[0]))
            pts.append((x1, rng[1]))
    return hull_of(pts) if pts else Polyhedron.empty()


# ----------------------------------------------------------------------------
# closures by enumeration


def primitive_normals(bound: int, up_to_sign: bool = False):
    """Primitive integer vectors with max-norm at most ``bound``, by norm."""
    for n in range(1, bound + 1):
        ring = []
        for a in range(-n, n + 1):
            for b in range(-n, n + 1):
                if max(abs(a), abs(b)) != n or gcd(a, b) != 1:
                    continue
                if up_to_sign and (a < 0 or (a == 0 and b < 0)):
                    continue
                ring.append((a, b))
        yield from ring


def _probe_points(Q: Polyhedron):
    return Q.vertices if Q.pointed else Q.window


def _line_section(rows, pi, k, base):
    """Interval of ``tau = t.x`` over ``P & {pi.x = k}`` with ``t`` the
    direction of the line; None when empty, open ends as None."""
    t = (-pi[1], pi[0])
    bx, by = base[0] * k, base[1] * k
    lo = hi = None
    for a1, a2, b in rows:
        rate = a1 * t[0] + a2 * t[1]
        rest = b - a1 * bx - a2 * by
        if rate == 0:
            if rest < 0:
                return None
            continue
        s = Fraction(rest, rate)
        if rate > 0:
            hi = s if hi is None else min(hi, s)
        else:
            lo = s if lo is None else max(lo, s)
    if lo is not None and hi is not None and lo > hi:
        return None
    off = t[0] * bx + t[1] * by
    tt = t[0] * t[0] + t[1] * t[1]
    return (None if lo is None else off + lo * tt, None if hi is None else off + hi * tt)


def _inside_split_hull(rows, pi, pi0, points, base) -> bool:
    """Whether every point (each strictly inside the split set) lies in
    ``conv((P & W0) | (P & W1))``.

    Inside the strip that hull is ``conv(S0 | S1)`` with ``S_k`` the section
    of ``P`` on the boundary line ``pi.x = pi0 + k``; a point at height
    ``lam = pi.w - pi0`` is in it iff its coordinate along the strip lies
    between the interpolated ends of ``S0`` and ``S1``.
    """
    s0 = _line_section(rows, pi, pi0, base)
    s1 = _line_section(rows, pi, pi0 + 1, base)
    if s0 is None or s1 is None:
        return False
    t = (-pi[1], pi[0])
    for w in points:
        lam = dot(pi, w) - pi0
        tau = dot(t, w)
        if s0[0] is not None and s1[0] is not None:
            if tau < (1 - lam) * s0[0] + lam * s1[0]:
                return False
        if s0[1] is not None and s1[1] is not None:
            if tau > (1 - lam) * s0[1] + lam * s1[1]:
                return False
    return True


def brute_split_closure(P: Polyhedron, norm_bound: int) -> Polyhedron:
    """Intersection of ``P^{pi,pi0}`` over primitive ``pi`` with
    ``|pi|_inf <= norm_bound`` and every integer ``pi0``.

    The running intersection ``Q`` is contained in ``P^{pi,pi0}`` as soon as
    every vertex of ``Q`` strictly inside the split set lies in
    ``P^{pi,pi0}``; ``Q`` only shrinks, so such disjunctions are skipped for
    good.  The remaining ones are applied with :func:`apply_disjunction`,
    and each normal is revisited until nothing is left to apply.
    """
    if norm_bound < 1:
        raise ValueError("norm bound must be positive")
    rows = _int_rows(P)
    Q = P
    for pi in primitive_normals(norm_bound, up_to_sign=True):
        if not P.pointed and any(dot(pi, r) != 0 for r in P.rays):
            continue
        _, u, v = ext_gcd(pi[0], pi[1])
        base = (u, v)
        while not Q.is_empty:
            strips: dict[int, list] = {}
            for w in _probe_points(Q):
                val = dot(pi, w)
                if val.denominator != 1:
                    strips.setdefault(floor(val), []).append(w)
            todo = [pi0 for pi0, pts in sorted(strips.items())
                    if not _inside_split_hull(rows, pi, pi0, pts, base)]
            if not todo:
                break
            for pi0 in todo:
                Q = Q.intersect(apply_disjunction(P, pi, pi0))
                if Q.is_empty:
                    return Q
    return Q


def brute_chvatal_closure(P: Polyhedron, norm_bound: int) -> Polyhedron:
    """Intersection of ``c.x <= floor(max_P c.x)`` over primitive ``c`` with
    ``|c|_inf <= norm_bound``."""
    if P.is_empty:
        return P
    Q = P
    for c in primitive_normals(norm_bound):
        s = support(P, c)
        if s is None:
            continue
        f = floor(s)
        if Q.is_empty:
            break
        sq = support(Q, c)
        if sq is not None and sq <= f:
            continue
        Q = Q.intersect([HalfPlane(c[0], c[1], f)])
    return Q


# ----------------------------------------------------------------------------
# the non-terminating best-cut family


def remark_p(i: int) -> int:
    p = 3
    for _ in range(i):
        p = 2 * p - 2
    return p


def remark_row(p: int) -> HalfPlane:
    """``(2p - 1) x1 - (4p - 4) x2 >= 0`` as a <=-row."""
    return HalfPlane(-(2 * p - 1), 4 * p - 4, 0)


def remark_instance(i: int) -> tuple[Polyhedron, tuple[int, int]]:
    if i < 0:
        raise ValueError("index must be nonnegative")
    rows = [HalfPlane(1, 0, 4), remark_row(remark_p(i)), HalfPlane(-5, 8, 0)]
    return Polyhedron.from_rows(rows), (0, 1)


@dataclass(frozen=True)
class DivergenceStep:
    index: int
    cut: HalfPlane
    expected: HalfPlane
    matches_row: bool
    matches_next: bool

    @property
    def ok(self) -> bool:
        return self.matches_row and self.matches_next


def verify_divergence(k: int) -> list[DivergenceStep]:
    """Replay ``k`` rounds of the best split cut on the remark family."""
    if k < 1:
        raise ValueError("need at least one step")
    steps = []
    for i in range(k):
        P, c = remark_instance(i)
        v = lp_max(P, c).point
        late, early = order_facets(P, v, c)
        C = TranslatedCone(late, early)
        box = parallelogram_disjunction(C)
        cut = best_split_cut(C, box.pi, box.pi0)
        expected = remark_row(remark_p(i + 1))
        nxt, _ = remark_instance(i + 1)
        steps.append(DivergenceStep(i, cut, expected, cut == expected,
                                    P.intersect([cut]) == nxt))
    return steps
