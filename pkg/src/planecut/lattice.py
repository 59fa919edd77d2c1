"""Lattice primitives: gcd machinery, lattice points on lines, Chvatal
strengthening, straddling pairs, unit intervals and unimodular maps."""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import ceil, floor

from .geometry import (GeometryError, HalfPlane, Line, Point, TranslatedCone,
                       cross, dot)


class LatticeError(GeometryError):
    pass


class NotStrengthened(LatticeError):
    pass


class Parallel(LatticeError):
    pass


class AllInside(LatticeError):
    pass


class AllOutside(LatticeError):
    pass


class NoMeet(LatticeError):
    pass


class NotUnique(LatticeError):
    pass


class NotAdjacent(LatticeError):
    pass


def ext_gcd(a: int, b: int) -> tuple[int, int, int]:
    """Return ``(g, u, v)`` with ``g = gcd(a, b) >= 0`` and ``u*a + v*b = g``."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    if old_r == 0:
        return 0, 0, 0
    return old_r, old_s, old_t


def chvatal_strengthen(a1: int, a2: int, b) -> HalfPlane:
    """Chvatal strengthening of ``a.x <= b`` (``b`` may be rational)."""
    h = HalfPlane(a1, a2, Fraction(b))
    return h.strengthen()


def as_point(v) -> Point:
    return Point(Fraction(v[0]), Fraction(v[1]))


@dataclass(frozen=True)
class LatticeLineParam:
    """Lattice points ``base + k*step`` of the line ``a.x = b``."""

    line: Line
    base: Point
    step: tuple[int, int]

    def at(self, k) -> Point:
        return Point(self.base.x1 + k * self.step[0], self.base.x2 + k * self.step[1])

    def param_of(self, x) -> Fraction:
        """Parameter ``t`` with ``x = base + t*step`` (x on the line)."""
        s = self.step
        return Fraction(dot(s, (x[0] - self.base.x1, x[1] - self.base.x2)), dot(s, s))


def lattice_points_on_line(a, b) -> LatticeLineParam:
    """Parametrize the lattice points of ``a.x = b`` for primitive ``a``."""
    a1, a2 = a
    b = Fraction(b)
    if b.denominator != 1:
        raise LatticeError(f"{a1}x1 + {a2}x2 = {b} has no lattice points")
    g, u, v = ext_gcd(a1, a2)
    if g != 1:
        raise LatticeError(f"normal {a} is not primitive")
    bb = int(b)
    return LatticeLineParam(Line(a1, a2, bb), as_point((u * bb, v * bb)), (-a2, a1))


def line_param(line: Line) -> LatticeLineParam:
    return lattice_points_on_line(line.normal, line.b)


class Side(Enum):
    INWARD = -1
    OUTWARD = 1


def adjacent_lattice_line(h: HalfPlane, side: Side = Side.INWARD) -> Line:
    """Next lattice line parallel to the boundary of ``h``."""
    if not h.is_strengthened:
        raise NotStrengthened(f"{h} is not Chvatal strengthened")
    return Line(h.a1, h.a2, h.b + side.value)


def straddling_pair(L: LatticeLineParam, inside: HalfPlane) -> tuple[Point, Point]:
    """Consecutive lattice points of ``L``: ``p`` in ``inside``, ``q`` not."""
    rate = dot(inside.normal, L.step)
    if rate == 0:
        if inside.contains(L.base):
            raise AllInside(f"{L.line} lies inside {inside}")
        raise AllOutside(f"{L.line} lies outside {inside}")
    # value along the line: inside.value(base) + k*rate <= b
    t = (inside.b - inside.value(L.base)) / rate
    if rate > 0:
        k = floor(t)
        return L.at(k), L.at(k + 1)
    k = ceil(t)
    return L.at(k), L.at(k - 1)


@dataclass(frozen=True)
class UnitInterval:
    lo: Point
    hi: Point
    k: int
    param: LatticeLineParam

    def points(self) -> tuple[Point, Point]:
        return self.lo, self.hi


def unit_interval(param: LatticeLineParam, k: int) -> UnitInterval:
    return UnitInterval(param.at(k), param.at(k + 1), k, param)


def _cone_parameter_range(param: LatticeLineParam, cone: TranslatedCone):
    """Closed parameter interval of ``line & cone``; None for +-infinity."""
    lo, hi = None, None
    for h in (cone.late, cone.early):
        rate = dot(h.normal, param.step)
        val = h.value(param.base)
        if rate == 0:
            if val > h.b:
                raise NoMeet("line misses the cone")
            continue
        t = (h.b - val) / rate
        if rate > 0:
            hi = t if hi is None else min(hi, t)
        else:
            lo = t if lo is None else max(lo, t)
    if lo is not None and hi is not None and lo > hi:
        raise NoMeet("line misses the cone")
    return lo, hi


def unit_interval_meeting(line: Line, cone: TranslatedCone) -> UnitInterval:
    """The unique unit interval of ``line`` whose closed segment meets ``cone``."""
    param = line_param(line)
    lo, hi = _cone_parameter_range(param, cone)
    if lo is None or hi is None:
        raise NotUnique("line meets the cone in an unbounded set")
    # interval k covers [k, k+1]; it meets [lo, hi] iff k <= hi and k+1 >= lo
    ks = list(range(ceil(lo) - 1, floor(hi) + 1))
    if len(ks) != 1:
        raise NotUnique(f"{len(ks)} unit intervals meet the cone")
    return unit_interval(param, ks[0])


@dataclass(frozen=True)
class Unimodular:
    """Affine map ``x -> U x + t`` with ``|det U| = 1``."""

    U: tuple[tuple[int, int], tuple[int, int]]
    t: tuple[int, int]

    def __post_init__(self):
        if abs(self.det) != 1:
            raise NotAdjacent("matrix is not unimodular")

    @property
    def det(self) -> int:
        (a, b), (c, d) = self.U
        return a * d - b * c

    def __call__(self, x) -> Point:
        (a, b), (c, d) = self.U
        return Point(Fraction(a * x[0] + b * x[1] + self.t[0]),
                     Fraction(c * x[0] + d * x[1] + self.t[1]))

    def inverse(self) -> "Unimodular":
        (a, b), (c, d) = self.U
        D = self.det
        Ui = ((d * D, -b * D), (-c * D, a * D))
        ti = (-(Ui[0][0] * self.t[0] + Ui[0][1] * self.t[1]),
              -(Ui[1][0] * self.t[0] + Ui[1][1] * self.t[1]))
        return Unimodular(Ui, ti)


def unimodular_to_standard(J: UnitInterval, Jhat: UnitInterval) -> Unimodular:
    """Map ``J`` onto ``[0,1] x {0}`` and ``Jhat`` onto ``[0,1] x {1}``."""
    j0, j1 = J.lo, J.hi
    h0, h1 = Jhat.lo, Jhat.hi
    s = (j1.x1 - j0.x1, j1.x2 - j0.x2)
    if (h1.x1 - h0.x1, h1.x2 - h0.x2) != s:
        raise NotAdjacent("unit intervals are not translates of each other")
    e = (h0.x1 - j0.x1, h0.x2 - j0.x2)
    D = cross(s, e)
    if abs(D) != 1 or any(Fraction(c).denominator != 1 for c in (*s, *e, j0.x1, j0.x2)):
        raise NotAdjacent("intervals do not span an area-1 parallelogram")
    s = (int(s[0]), int(s[1]))
    e = (int(e[0]), int(e[1]))
    # columns s, e; inverse of [[s0, e0], [s1, e1]]
    U = ((e[1] * D, -e[0] * D), (-s[1] * D, s[0] * D))
    j = (int(j0.x1), int(j0.x2))
    t = (-(U[0][0] * j[0] + U[0][1] * j[1]), -(U[1][0] * j[0] + U[1][1] * j[1]))
    return Unimodular(U, t)
