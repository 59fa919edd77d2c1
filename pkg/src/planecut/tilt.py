"""The tilt of the late facet of a translated cone about a lattice pivot.

For a cone ``C = (H1, H2)`` with ``H1`` Chvatal strengthened and a
fractional apex, the two lattice lines ``H1=`` and the next one inside
``H1`` carry consecutive lattice points ``p, q`` and ``x, y`` that span an
area-1 parallelogram.  Its other two sides give a split disjunction
``W0 = {pi.x <= pi0}``, ``W1 = {pi.x >= pi0 + 1}``.  The tilt is either
the Chvatal cut of that disjunction (when ``C`` misses ``W1``) or the cut
through ``p`` and the first lattice point ``y'`` of ``W1=`` outside ``C``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .geometry import (GeometryError, HalfPlane, Point, TranslatedCone,
                       apply_disjunction, cross, dot, halfplane_through,
                       meet)
from .lattice import (NotStrengthened, Side, adjacent_lattice_line,
                      lattice_points_on_line, line_param, straddling_pair)


class IntegralApex(GeometryError):
    pass


class NotEffective(GeometryError):
    pass


class InvariantViolation(AssertionError):
    """A bound that the theory guarantees was violated (a bug)."""


@dataclass(frozen=True)
class Parallelogram:
    p: Point
    q: Point
    x: Point
    y: Point
    pi: tuple[int, int]
    pi0: int

    @property
    def W0(self) -> HalfPlane:
        return HalfPlane(self.pi[0], self.pi[1], self.pi0)

    @property
    def W1(self) -> HalfPlane:
        return HalfPlane(-self.pi[0], -self.pi[1], -self.pi0 - 1)

    def area(self) -> Fraction:
        return abs(cross(self.q - self.p, self.x - self.p))


@dataclass(frozen=True)
class TiltOutcome:
    kind: str  # "chvatal" or "split"
    T: HalfPlane
    box: Parallelogram
    x_prime: Point | None = None
    y_prime: Point | None = None
    q_prime: Point | None = None

    @property
    def pivot(self) -> Point:
        return self.box.p

    @property
    def is_chvatal(self) -> bool:
        return self.kind == "chvatal"


def parallelogram_disjunction(C: TranslatedCone) -> Parallelogram:
    H1, H2 = C.late, C.early
    if not H1.is_strengthened:
        raise NotStrengthened(f"late row {H1} is not Chvatal strengthened")
    if C.apex.is_integral():
        raise IntegralApex(f"apex {C.apex} is integral")
    p, q = straddling_pair(lattice_points_on_line(H1.normal, H1.b), H2)
    hat = adjacent_lattice_line(H1, Side.INWARD)
    x, y = straddling_pair(line_param(hat), H2)
    if y - x != q - p:  # pragma: no cover - both pairs step along the same direction
        raise InvariantViolation("parallelogram sides are not parallel")
    # pi is orthogonal to the sides px and qy, with pi.(q - p) = 1
    e = x - p
    n = (-int(e[1]), int(e[0]))
    s = q - p
    if dot(n, s) < 0:
        n = (-n[0], -n[1])
    if dot(n, s) != 1:
        raise InvariantViolation("parallelogram does not have area 1")
    pi0 = int(dot(n, p))
    return Parallelogram(p, q, x, y, n, pi0)


def misses_w1(C: TranslatedCone, box: Parallelogram) -> bool:
    """True when ``C`` and ``W1`` are disjoint."""
    pi = box.pi
    return all(dot(pi, r) <= 0 for r in C.rays()) and dot(pi, C.apex) < box.pi0 + 1


def tilt(C: TranslatedCone, check: bool = True) -> TiltOutcome:
    box = parallelogram_disjunction(C)
    v = C.apex
    if misses_w1(C, box):
        T = box.W0
        out = TiltOutcome("chvatal", T, box)
    else:
        w1 = box.W1.boundary()
        xp, yp = straddling_pair(line_param(w1), C.early)
        qp = meet(w1, C.early)
        T = halfplane_through(box.p, yp, v)
        out = TiltOutcome("split", T, box, xp, yp, qp)
    if check:
        check_tilt(C, out)
    return out


def check_tilt(C: TranslatedCone, out: TiltOutcome) -> None:
    """Assert the bounds the theory guarantees for a tilt."""
    a, d = C.late.normal, C.early.normal
    delta = C.early.b
    box = out.box
    if box.area() != 1:
        raise InvariantViolation("parallelogram area is not 1")
    gap_q = dot(d, box.q) - delta
    if gap_q > abs(a[0] * d[1] - a[1] * d[0]):
        raise InvariantViolation(f"dq - delta = {gap_q} exceeds |a x d|")
    if out.T.contains(C.apex):
        raise InvariantViolation("tilt does not cut the apex")
    if not out.T.is_strengthened or not out.T.on_boundary(box.p):
        raise InvariantViolation("tilt is not strengthened through the pivot")
    if out.kind == "split":
        gap_y = dot(d, out.y_prime) - delta
        if not (0 < gap_y and 2 * gap_y <= gap_q):
            raise InvariantViolation(f"halving bound failed: {gap_y} vs {gap_q}")


def best_split_cut(C: TranslatedCone, pi, pi0: int) -> HalfPlane:
    """The facet of the disjunctive hull of ``C`` that cuts off the apex."""
    v = C.apex
    val = dot(pi, v)
    if not (pi0 < val < pi0 + 1):
        raise NotEffective(f"apex {v} is not strictly inside the split set")
    hull = apply_disjunction(C.polyhedron(), pi, pi0)
    cuts = [h for h in hull.rows if not h.contains(v)]
    if len(cuts) != 1:
        raise GeometryError(f"expected one facet cutting the apex, got {cuts}")
    return cuts[0]
