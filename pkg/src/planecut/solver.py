"""The clockwise cutting-plane algorithm for two-variable integer programs.

At every iteration the LP optimum ``v`` of the current relaxation ``Q`` sits
at the apex of the cone formed by the late facet ``F_m`` and the early facet
``F_1`` (clockwise neighbours around ``c``).  If ``F_m`` is not Chvatal
strengthened it is strengthened; otherwise it is replaced by its tilt.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from math import floor

from .geometry import (GeometryError, HalfPlane, Point, Polyhedron,
                       TranslatedCone, cross, dot, lp_max, perp,
                       primitive)
from .lattice import ext_gcd, lattice_points_on_line
from .tilt import InvariantViolation, TiltOutcome, tilt


class SolverError(GeometryError):
    pass


class Unbounded(SolverError):
    pass


class NotPointed(SolverError):
    pass


class CapExceeded(InvariantViolation):
    pass


LATE, EARLY, ORTHOGONAL = "late", "early", "orthogonal"


@dataclass(frozen=True)
class IterationRecord:
    index: int
    rows: int
    vertex: Point | None
    late: HalfPlane | None = None
    early: HalfPlane | None = None
    kind: str = "stop"  # strengthening | chvatal-tilt | split-tilt | low-dim | stop
    cut: HalfPlane | None = None
    pivot: Point | None = None
    family: int | None = None
    E: int | None = None
    L: int | None = None
    tilt: TiltOutcome | None = None
    # (row, class) for every facet of Q_i; class is a frozenset of labels
    classes: tuple = ()


@dataclass
class SolveResult:
    status: str  # optimal | infeasible
    point: Point | None
    value: Fraction | None
    trace: list[IterationRecord] = field(default_factory=list)
    certificate: Polyhedron | None = None

    @property
    def cuts(self) -> list[HalfPlane]:
        return [r.cut for r in self.trace if r.cut is not None]

    @property
    def iterations(self) -> int:
        return len(self.trace)


def iteration_cap(m: int, amax: int, K: int = 64) -> int:
    return math.ceil(K * m * (1 + math.log2(max(amax, 1))) ** 2)


def order_facets(Q: Polyhedron, v: Point, c) -> tuple[HalfPlane, HalfPlane]:
    """Return ``(late, early)`` at the optimal vertex ``v``."""
    tight = [h for h in Q.rows if h.on_boundary(v)]
    if len(tight) != 2:
        raise SolverError(f"{v} is not a vertex of the relaxation")
    h, k = tight
    late, early = (h, k) if cross(h.normal, k.normal) < 0 else (k, h)
    # c must lie in cone(late normal, early normal)
    if cross(late.normal, c) > 0 or cross(c, early.normal) > 0:
        raise SolverError(f"objective {c} is not in the normal cone at {v}")
    return late, early


def classify(a, c, *, is_late: bool = False, is_early: bool = False) -> frozenset:
    """Potential classes of a facet with normal ``a`` relative to ``c``."""
    out = set()
    cr = cross(a, c)
    if is_late or cr < 0:
        out.add(LATE)
    if is_early or cross(c, a) < 0:
        out.add(EARLY)
    if cr == 0 and dot(a, c) < 0:
        out.add(EARLY)
        out.add(ORTHOGONAL)
    return frozenset(out)


def _ordered_from(Q: Polyhedron, late: HalfPlane) -> list[HalfPlane]:
    """Facets of ``Q`` as F_1..F_m (F_m = late)."""
    rows = list(Q.rows)
    j = rows.index(late)
    return rows[j + 1:] + rows[: j + 1]


@dataclass
class _Families:
    member: dict = field(default_factory=dict)   # row -> family id
    last: dict = field(default_factory=dict)     # family id -> last row added

    def assign(self, row: HalfPlane, fam: int) -> None:
        self.member[row] = fam
        self.last[fam] = row


def solve(P: Polyhedron, c, cap_constant: int = 64, check: bool = True) -> SolveResult:
    c = (int(c[0]), int(c[1]))
    if c == (0, 0):
        raise ValueError("objective must be nonzero")
    if P.is_empty:
        return SolveResult("infeasible", None, None, [IterationRecord(0, len(P.rows), None)], P)
    if not P.pointed:
        raise NotPointed("the clockwise algorithm needs a pointed polyhedron")
    if P.dim == 2 and lp_max(P, c).status == "unbounded":
        raise Unbounded("linear relaxation is unbounded")
    amax = P.max_normal()
    cap = iteration_cap(len(P.rows), amax, cap_constant)

    trace: list[IterationRecord] = []
    fams = _Families()
    Q = P
    while True:
        i = len(trace)
        if i > cap:
            raise CapExceeded(f"more than {cap} iterations")
        if Q.dim <= 1:
            return _finish_low_dim(Q, c, trace, i)
        lp = lp_max(Q, c)
        if lp.status == "unbounded":  # pragma: no cover - Q is inside P
            raise Unbounded("linear relaxation is unbounded")
        v = lp.point
        late, early = order_facets(Q, v, c)
        facets = _ordered_from(Q, late)
        if i == 0:
            for idx, h in enumerate(facets, start=1):
                fams.assign(h, idx)
        classes = tuple((h, classify(h.normal, c, is_late=h == late, is_early=h == early))
                        for h in facets)
        E = sum(1 for _, cl in classes if EARLY in cl)
        L = _count_late_families(Q, fams, c, late)
        if v.is_integral():
            trace.append(IterationRecord(i, len(Q.rows), v, late, early, "stop",
                                         E=E, L=L, classes=classes))
            return SolveResult("optimal", v, dot(c, v), trace)
        fam = fams.member.get(late)
        if not late.is_strengthened:
            T = late.strengthen()
            rec = IterationRecord(i, len(Q.rows), v, late, early, "strengthening", T,
                                  None, fam, E, L, None, classes)
        else:
            out = tilt(TranslatedCone(late, early), check=check)
            T = out.T
            kind = "chvatal-tilt" if out.is_chvatal else "split-tilt"
            rec = IterationRecord(i, len(Q.rows), v, late, early, kind, T,
                                  out.pivot, fam, E, L, out, classes)
        if check and max(abs(T.a1), abs(T.a2)) > amax:
            raise InvariantViolation(f"cut {T} has a normal larger than {amax}")
        trace.append(rec)
        if fam is not None:
            fams.assign(T, fam)
        Q = Q.intersect([T])


def _count_late_families(Q: Polyhedron, fams: _Families, c, late: HalfPlane) -> int:
    alive = {fams.member[h] for h in Q.rows if h in fams.member}
    n = 0
    for f in alive:
        last = fams.last[f]
        if LATE in classify(last.normal, c, is_late=last == late):
            n += 1
    return n


def _finish_low_dim(Q: Polyhedron, c, trace: list, i: int) -> SolveResult:
    status, point, cut = low_dim_resolve(Q, c)
    trace.append(IterationRecord(i, len(Q.rows), None, kind="low-dim", cut=cut))
    if status == "optimal":
        return SolveResult("optimal", point, dot(c, point), trace)
    cert = Q.intersect([cut]) if cut is not None else Q
    return SolveResult("infeasible", None, None, trace, cert)


def low_dim_resolve(Q: Polyhedron, c) -> tuple[str, Point | None, HalfPlane | None]:
    """Solve over a set of dimension at most one with at most one Chvatal cut.

    Returns ``(status, point, cut)``.
    """
    if Q.dim < 0:
        return "infeasible", None, None
    if Q.dim == 0:
        v = Q.vertices[0]
        return ("optimal", v, None) if v.is_integral() else ("infeasible", None, None)
    if Q.dim != 1:
        raise SolverError("low_dim_resolve needs dimension at most one")
    p0, p1 = Q.window[0], Q.window[-1]
    d = (p1[0] - p0[0], p1[1] - p0[1])
    d = primitive(d)
    n = perp(d)
    beta = dot(n, p0)
    if beta.denominator != 1:
        # the affine hull carries no lattice point
        return "infeasible", None, HalfPlane(n[0], n[1], floor(beta))
    param = lattice_points_on_line(n, int(beta))
    s = param.step
    # parameter range of Q along s
    ts = [param.param_of(v) for v in Q.vertices]
    dirs = [dot(r, s) for r in Q.rays]
    if dot(c, s) < 0 or (dot(c, s) == 0 and any(x > 0 for x in dirs)):
        s = (-s[0], -s[1])
        ts = [-t for t in ts]
        dirs = [-x for x in dirs]
    up = any(x > 0 for x in dirs)
    if up and dot(c, s) > 0:
        raise Unbounded("objective is unbounded along the line")
    t_hi = max(ts)
    t_lo = None if any(x < 0 for x in dirs) else min(ts)
    base = param.base
    k = floor(t_hi)
    cut = None
    if t_hi.denominator != 1:
        _, u, w = ext_gcd(s[0], s[1])  # u*s0 + w*s1 = 1
        pi = (u, w)
        cut = HalfPlane(pi[0], pi[1], dot(pi, base) + k)
    if t_lo is not None and k < t_lo:
        return "infeasible", None, cut
    x = Point(base.x1 + k * s[0], base.x2 + k * s[1])
    return "optimal", x, cut


# ----------------------------------------------------------------------------
# trace checks


def phases(trace: list[IterationRecord]) -> list[tuple[int, int]]:
    """Maximal runs ``[i, i+j]`` of full-dimensional iterations with the same
    late family and the same early normal."""
    out = []
    full = [r for r in trace if r.late is not None and r.kind != "stop"]
    start = 0
    while start < len(full):
        r0 = full[start]
        j = start
        while (j + 1 < len(full) and full[j + 1].index == full[j].index + 1
               and full[j + 1].family == r0.family
               and full[j + 1].early.normal == r0.early.normal):
            j += 1
        out.append((full[start].index, full[j].index))
        start = j + 1
    return out


def check_potential(trace: list[IterationRecord]) -> list[str]:
    """Replay the potential argument; returns a list of violations."""
    by_index = {r.index: r for r in trace}
    bad = []
    for i, end in phases(trace):
        nxt = by_index.get(end + 1)
        if nxt is None or nxt.late is None or nxt.kind == "stop":
            continue  # dimension drop or termination
        a, b = by_index[i], nxt
        if b.E + 2 * b.L > a.E + 2 * a.L - 1:
            bad.append(f"potential did not drop between iterations {i} and {end + 1}")
    return bad


def check_early_late(trace: list[IterationRecord]) -> list[str]:
    """A facet never switches between potentially early and potentially late."""
    seen: dict = {}
    bad = []
    for r in trace:
        for h, cl in r.classes:
            if ORTHOGONAL in cl:
                continue
            prev = seen.get(h)
            if prev is not None:
                if EARLY in prev and LATE in cl and LATE not in prev:
                    bad.append(f"{h} turned from early to late at {r.index}")
                if LATE in prev and EARLY in cl and EARLY not in prev:
                    bad.append(f"{h} turned from late to early at {r.index}")
            seen[h] = cl
    return bad
