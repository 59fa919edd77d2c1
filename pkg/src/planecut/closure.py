"""Chvatal and split closures of translated cones and planar polyhedra.

The split closure of a cone ``C`` with apex ``v`` is its Chvatal closure
intersected with two extreme split cuts for every facet of ``C_I`` whose
hat line (the next lattice line beyond the facet) does not leave ``v``
strictly on the near side.  Polyhedra are handled through their corner
cones.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import ceil, floor, gcd, lcm

from .geometry import (HalfPlane, Line, Point, Polyhedron, TranslatedCone,
                       cross, dot, halfplane_through, primitive)
from .hull import cone_hull, corner_pairs, polyhedron_hull
from .lattice import (NoMeet, UnitInterval, line_param, unit_interval,
                      unit_interval_meeting)
from .tilt import InvariantViolation

DEFAULT_DEPTH = 8
# lattice points examined per vertex certificate before giving up
CERTIFY_BUDGET = 2_000_000


class DepthExceeded(Warning):
    pass


# ----------------------------------------------------------------------------
# corners and facet classes


def corner_relaxations(P: Polyhedron) -> list[TranslatedCone]:
    """One cone per non-parallel row pair, in row order."""
    return [TranslatedCone.corner(h, k) for h, k in corner_pairs(P)]


@dataclass(frozen=True)
class FacetClass:
    kind: str  # chvatal-dominated | type-two | degenerate
    facet: HalfPlane
    hat: Line
    Jhat: UnitInterval | None = None
    J0: UnitInterval | None = None
    Jt: UnitInterval | None = None
    intervals: tuple = ()  # all unit intervals J_0..J_t of the facet

    @property
    def t(self) -> int:
        return len(self.intervals) - 1


def classify_facet(C: TranslatedCone, hull: Polyhedron, facet: HalfPlane) -> FacetClass:
    a = facet.normal
    beta = facet.b
    hat = Line(a[0], a[1], beta + 1)
    av = dot(a, C.apex)
    if av <= beta:
        return FacetClass("degenerate", facet, hat)
    if av < beta + 1:
        return FacetClass("chvatal-dominated", facet, hat)
    ends = [u for u in hull.vertices if facet.on_boundary(u)]
    if len(ends) != 2:
        raise InvariantViolation(f"type-two facet {facet} is not bounded")
    try:
        Jhat = unit_interval_meeting(hat, C)
    except NoMeet:
        return FacetClass("degenerate", facet, hat)
    u0, u1 = ends
    s = primitive(u1 - u0)
    t = int((u1.x1 - u0.x1) / s[0]) if s[0] else int((u1.x2 - u0.x2) / s[1])
    param = line_param(facet.boundary())
    if param.step != s:
        # re-anchor so interval k runs from u0 + k*s to u0 + (k+1)*s
        param = type(param)(param.line, u0, s)
    else:
        param = type(param)(param.line, u0, param.step)
    intervals = tuple(unit_interval(param, k) for k in range(t))
    Jhat = _orient(Jhat, s)
    return FacetClass("type-two", facet, hat, Jhat, intervals[0], intervals[-1], intervals)


def _orient(J: UnitInterval, s) -> UnitInterval:
    if (J.hi - J.lo) == Point(Fraction(s[0]), Fraction(s[1])):
        return J
    return UnitInterval(J.hi, J.lo, J.k, J.param)


# ----------------------------------------------------------------------------
# split sets and cuts


def split_set(J: UnitInterval, Jhat: UnitInterval) -> tuple[tuple[int, int], int]:
    """``(pi, pi0)`` of the area-1 parallelogram with sides ``J`` and ``Jhat``."""
    j0, j1 = J.lo, J.hi
    h0, h1 = _orient(Jhat, j1 - j0).points()
    s = j1 - j0
    e = h0 - j0
    if h1 - h0 != s or abs(cross(s, e)) != 1:
        raise InvariantViolation("unit intervals do not span an area-1 parallelogram")
    pi = (-int(e[1]), int(e[0]))
    if dot(pi, s) < 0:
        pi = (-pi[0], -pi[1])
    return pi, int(dot(pi, j0))


def split_cut_for_cone(C: TranslatedCone, pi, pi0: int) -> HalfPlane:
    """Split cut of ``C`` from the effective split set ``pi0 <= pi.x <= pi0+1``.

    Each ray of ``C`` leaves the strip through at most one boundary line.
    Two exit points span the cut; a single exit point gives the cut
    parallel to the strip.
    """
    v = C.apex
    pv = dot(pi, v)
    if not (pi0 < pv < pi0 + 1):
        raise InvariantViolation(f"split set ({pi}, {pi0}) is not effective for {C}")
    exits = []
    for r in C.rays():
        pr = dot(pi, r)
        if pr == 0:
            continue
        target = pi0 + 1 if pr > 0 else pi0
        mu = (target - pv) / pr
        exits.append(Point(v.x1 + mu * r[0], v.x2 + mu * r[1]))
    if len(exits) == 2:
        return halfplane_through(exits[0], exits[1], v)
    (q,) = exits
    val = dot(pi, q)
    if val <= pi0:
        return HalfPlane(pi[0], pi[1], val)
    return HalfPlane(-pi[0], -pi[1], -val)


def extreme_cuts(C: TranslatedCone, fc: FacetClass) -> tuple[HalfPlane, HalfPlane]:
    if fc.kind != "type-two":
        raise ValueError("extreme cuts exist only for type-two facets")
    first = split_cut_for_cone(C, *split_set(fc.J0, fc.Jhat))
    last = split_cut_for_cone(C, *split_set(fc.Jt, fc.Jhat))
    return first, last


def interval_cut(C: TranslatedCone, fc: FacetClass, k: int) -> HalfPlane:
    """``H(J_k, Jhat)`` for any unit interval of a type-two facet."""
    return split_cut_for_cone(C, *split_set(fc.intervals[k], fc.Jhat))


# ----------------------------------------------------------------------------
# Chvatal closure of a cone


@dataclass
class ChvatalResult:
    closure: Polyhedron
    cuts: dict = field(default_factory=dict)  # row -> normal c
    certified: bool = True
    depth: int = DEFAULT_DEPTH


def _scaled(p: Point) -> tuple[int, int, int]:
    L = lcm(p.x1.denominator, p.x2.denominator)
    return int(p.x1 * L), int(p.x2 * L), L


def _scan(cons, xlo: int, xhi: int):
    """Lattice points with ``g1*c1 + g2*c2 <= h`` for all ``(g1, g2, h)``."""
    for c1 in range(xlo, xhi + 1):
        lo, hi = None, None
        ok = True
        for g1, g2, h in cons:
            rest = h - g1 * c1
            if g2 == 0:
                if rest < 0:
                    ok = False
                    break
                continue
            t = Fraction(rest) / g2
            if g2 > 0:
                f = floor(t)
                hi = f if hi is None else min(hi, f)
            else:
                f = ceil(t)
                lo = f if lo is None else max(lo, f)
        if not ok or lo is None or hi is None or lo > hi:
            continue
        for c2 in range(lo, hi + 1):
            yield c1, c2


def _dual_cone_cons(a1, a2) -> list:
    # c in cone(a1, a2)  <=>  sgn*cross(a1, c) >= 0 and sgn*cross(c, a2) >= 0
    sgn = 1 if cross(a1, a2) > 0 else -1
    return [(sgn * a1[1], -sgn * a1[0], 0), (-sgn * a2[1], sgn * a2[0], 0)]


def dual_vectors(C: TranslatedCone, bound: int) -> list[tuple[int, int]]:
    """Primitive ``c`` in the cone of the row normals, ``|c|_inf <= bound``,
    ordered by norm."""
    cons = _dual_cone_cons(C.late.normal, C.early.normal)
    cons += [(0, 1, bound), (0, -1, bound)]
    out = [c for c in _scan(cons, -bound, bound) if c != (0, 0) and gcd(*c) == 1]
    out.sort(key=lambda c: (max(abs(c[0]), abs(c[1])), c))
    return out


def _cut(c, V, L) -> HalfPlane:
    return HalfPlane(c[0], c[1], (c[0] * V[0] + c[1] * V[1]) // L)


def _violates(c, V, L, w) -> bool:
    W1, W2, M = w
    f = (c[0] * V[0] + c[1] * V[1]) // L
    return c[0] * W1 + c[1] * W2 > f * M


def chvatal_closure_cone(C: TranslatedCone, depth: int = DEFAULT_DEPTH,
                         budget: int = CERTIFY_BUDGET) -> ChvatalResult:
    """Chvatal closure of ``C``.

    Cuts from all dual vectors up to ``depth`` form a candidate; every
    fractional vertex ``w`` of the candidate is then certified by scanning
    the bounded set of dual vectors that could still cut it off.  A found
    violation is added and certification restarts.
    """
    v = C.apex
    if v.is_integral():
        return ChvatalResult(C.polyhedron(), {}, True, depth)
    V1, V2, L = _scaled(v)
    V = (V1, V2)
    a1, a2 = C.late.normal, C.early.normal
    rows = [C.late.strengthen(), C.early.strengthen()]
    cuts: dict = {}
    Q = Polyhedron.from_rows(rows)

    def add(c):
        nonlocal Q
        h = _cut(c, V, L)
        cuts.setdefault(h, c)
        rows.append(h)
        Q = Polyhedron.from_rows(rows)

    for c in dual_vectors(C, depth):
        if (c[0] * V1 + c[1] * V2) % L == 0:
            continue
        if any(_violates(c, V, L, _scaled(w)) for w in Q.vertices):
            add(c)

    certified = True
    while True:
        found = None
        for w in Q.vertices:
            if w.is_integral():
                continue
            res = _certify_vertex(C, V, L, w, a1, a2, budget)
            if res is None:
                certified = False
                continue
            if res:
                found = res
                break
        if found is None:
            break
        add(found)
    Q = Polyhedron.from_rows(rows)
    return ChvatalResult(Q, {h: c for h, c in cuts.items() if h in set(Q.rows)},
                         certified, depth)


def _certify_vertex(C, V, L, w: Point, a1, a2, budget):
    """Most violated dual vector for ``w`` or ``False``; ``None`` when the
    search region exceeds the budget."""
    v = C.apex
    ws = _scaled(w)
    if w == v:
        # the apex survives only when c.v is integral for the candidate
        # vectors; a Hilbert basis element of the dual cone fixes that
        bound = max(abs(a1[0]), abs(a1[1])) + max(abs(a2[0]), abs(a2[1]))
        for c in dual_vectors(C, bound):
            if (c[0] * V[0] + c[1] * V[1]) % L:
                return c
        raise InvariantViolation("fractional apex with integral dual values")  # pragma: no cover
    d = v - w
    cons = _dual_cone_cons(a1, a2)
    on1 = C.late.on_boundary(w)
    on2 = C.early.on_boundary(w)
    if on1 or on2:
        # c -> c - a_F keeps the violation (a_F.w = a_F.v is integral), so
        # restrict to the first translate inside the dual cone
        aF, aO = (a1, a2) if on1 else (a2, a1)
        k = dot(aO, d)
        # lambda_F <= 1 for c = lambda_F aF + lambda_O aO, where
        # lambda_F = cross(c, aO) / cross(aF, aO)
        DF = cross(aF, aO)
        sF = 1 if DF > 0 else -1
        cons.append((sF * aO[1], -sF * aO[0], abs(DF)))
        cons.append((d[0], d[1], 1))
        top = Point(Fraction(aO[0]) / k, Fraction(aO[1]) / k)
        corners = [Point(Fraction(0), Fraction(0)), Point(Fraction(aF[0]), Fraction(aF[1])),
                   Point(aF[0] + top.x1, aF[1] + top.x2), top]
        area = abs(cross(aF, top))
    else:
        k1, k2 = dot(a1, d), dot(a2, d)
        cons.append((d[0], d[1], 1))
        corners = [Point(Fraction(0), Fraction(0)),
                   Point(Fraction(a1[0]) / k1, Fraction(a1[1]) / k1),
                   Point(Fraction(a2[0]) / k2, Fraction(a2[1]) / k2)]
        area = abs(cross(corners[1], corners[2])) / 2
    if area > budget:
        return None
    xlo = floor(min(p.x1 for p in corners))
    xhi = ceil(max(p.x1 for p in corners))
    best, best_gap = False, None
    W1, W2, M = ws
    for c in _scan(cons, xlo, xhi):
        f = (c[0] * V[0] + c[1] * V[1]) // L
        gap = c[0] * W1 + c[1] * W2 - f * M
        if gap > 0:
            n = max(abs(c[0]), abs(c[1]))
            # prefer deep cuts with small normals
            key = (Fraction(gap, n), -n, c)
            if best_gap is None or key > best_gap:
                best, best_gap = c, key
    if best:
        g = gcd(*best)
        best = (best[0] // g, best[1] // g)
    return best


def chvatal_closure(P: Polyhedron, depth: int = DEFAULT_DEPTH) -> ChvatalResult:
    """Chvatal closure of any polyhedron.

    For a pointed polyhedron every bounded objective is maximized at a
    vertex whose normal cone is spanned by its two facet normals, so the
    closure is ``P`` cut by the closures of the vertex cones.  Without
    vertices (dimension at most one, or a strip) the closure is ``P_I``.
    """
    if P.is_empty or P.dim <= 1 or not P.pointed:
        return ChvatalResult(polyhedron_hull(P), {}, True, depth)
    rows = list(P.rows)
    cuts: dict = {}
    certified = True
    for j, v in enumerate(P.vertices):
        tight = [h for h in rows if h.on_boundary(v)]
        C = TranslatedCone.corner(tight[0], tight[1])
        res = chvatal_closure_cone(C, depth)
        certified &= res.certified
        cuts.update(res.cuts)
        rows.extend(res.closure.rows)
    Q = Polyhedron.from_rows(rows)
    keep = set(Q.rows)
    return ChvatalResult(Q, {h: c for h, c in cuts.items() if h in keep}, certified, depth)


# ----------------------------------------------------------------------------
# split closures


@dataclass
class ClosureResult:
    closure: Polyhedron
    # row -> ("chvatal", c) | ("extreme", facet index, "first"/"last") | ("original",)
    provenance: dict = field(default_factory=dict)
    certified: bool = True
    hull: Polyhedron | None = None
    chvatal: Polyhedron | None = None
    classes: list[FacetClass] = field(default_factory=list)


def split_closure_cone(C: TranslatedCone, depth: int = DEFAULT_DEPTH,
                       check: bool = True) -> ClosureResult:
    P = C.polyhedron()
    if C.apex.is_integral():
        return ClosureResult(P, {h: ("original",) for h in P.rows}, True, P, P, [])
    hull = cone_hull(C, check=check).hull
    ch = chvatal_closure_cone(C, depth)
    prov: dict = {}
    for h in ch.closure.rows:
        prov[h] = ("chvatal", ch.cuts[h]) if h in ch.cuts else ("original",)
    rows = list(ch.closure.rows)
    classes = []
    for i, facet in enumerate(hull.rows):
        fc = classify_facet(C, hull, facet)
        classes.append(fc)
        if fc.kind != "type-two":
            continue
        first, last = extreme_cuts(C, fc)
        for h, end in ((first, "first"), (last, "last")):
            prov.setdefault(h, ("extreme", i, end))
            rows.append(h)
    Q = Polyhedron.from_rows(rows)
    if check and len(Q.rows) > 2 * len(hull.rows) + len(ch.closure.rows):
        raise InvariantViolation(f"split closure has {len(Q.rows)} rows")
    keep = set(Q.rows)
    return ClosureResult(Q, {h: p for h, p in prov.items() if h in keep},
                         ch.certified, hull, ch.closure, classes)


def split_closure(P: Polyhedron, depth: int = DEFAULT_DEPTH,
                  check: bool = True) -> ClosureResult:
    """Split closure: ``P`` cut by the split closures of all corner cones.

    Sets without vertices have ``P_I`` as split closure.
    """
    if P.is_empty or P.dim <= 1 or not P.pointed:
        H = polyhedron_hull(P)
        return ClosureResult(H, {h: ("original",) for h in H.rows}, True, H)
    rows = list(P.rows)
    prov = {h: ("original",) for h in rows}
    certified = True
    for C in corner_relaxations(P):
        if C.apex.is_integral():
            continue
        res = split_closure_cone(C, depth, check)
        certified &= res.certified
        for h in res.closure.rows:
            prov.setdefault(h, res.provenance.get(h, ("original",)))
        rows.extend(res.closure.rows)
    Q = Polyhedron.from_rows(rows)
    keep = set(Q.rows)
    return ClosureResult(Q, {h: p for h, p in prov.items() if h in keep}, certified)


@dataclass
class RankReport:
    rank: int | None  # 0, 1, 2 or None on failure
    first: Polyhedron
    second: Polyhedron
    hull: Polyhedron
    chvatal_of_first_is_hull: bool | None = None
    certified: bool = True

    @property
    def ok(self) -> bool:
        return self.rank is not None and self.chvatal_of_first_is_hull is not False


def split_rank_check(P, depth: int = DEFAULT_DEPTH) -> RankReport:
    """Split rank of ``P`` (a polyhedron or a cone), at most 2 in the plane."""
    cone = P if isinstance(P, TranslatedCone) else None
    if cone is not None:
        P = cone.polyhedron()
    H = polyhedron_hull(P)
    r1 = split_closure(P, depth)
    r2 = split_closure(r1.closure, depth) if not r1.closure.same_set(H) else r1
    if P.same_set(H):
        rank = 0
    elif r1.closure.same_set(H):
        rank = 1
    elif r2.closure.same_set(H):
        rank = 2
    else:
        rank = None
    chv = None
    certified = r1.certified and r2.certified
    if cone is not None:
        c = chvatal_closure(r1.closure, depth)
        certified &= c.certified
        chv = c.closure.same_set(H)
    return RankReport(rank, r1.closure, r2.closure, H, chv, certified)
