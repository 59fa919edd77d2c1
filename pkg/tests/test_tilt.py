import random
from fractions import Fraction as F

import pytest

from planecut.geometry import (HalfPlane, TranslatedCone, apply_disjunction,
                               point)
from planecut.hull import cone_hull
from planecut.lattice import NotStrengthened
from planecut.oracle import Box, boxed_hull, lattice_points
from planecut.tilt import (IntegralApex, NotEffective, best_split_cut,
                           check_tilt, parallelogram_disjunction, tilt)

import gen

REMARK = TranslatedCone(HalfPlane(-5, 8, 0), HalfPlane(1, 0, 4))
AFTER = TranslatedCone(HalfPlane(-3, 5, 0), HalfPlane(1, 0, 4))


def test_parallelogram_remark():
    box = parallelogram_disjunction(REMARK)
    assert (box.p, box.q, box.x, box.y) == (point(0, 0), point(8, 5), point(-3, -2), point(5, 3))
    assert box.pi == (2, -3) and box.pi0 == 0
    assert box.area() == 1


def test_parallelogram_second_cone():
    box = parallelogram_disjunction(AFTER)
    assert (box.p, box.q, box.x, box.y) == (point(0, 0), point(5, 3), point(2, 1), point(7, 4))
    # W0 boundary x1 - 2x2 = 0 through p and x, W1 boundary x1 - 2x2 = -1
    assert box.W0 == HalfPlane(-1, 2, 0)
    assert box.W1.boundary().contains(box.q) and box.W1.boundary().contains(box.y)


def test_parallelogram_guards():
    with pytest.raises(IntegralApex):
        parallelogram_disjunction(TranslatedCone.corner(HalfPlane(-1, 0, 0), HalfPlane(1, 2, 2)))
    with pytest.raises(NotStrengthened):
        parallelogram_disjunction(TranslatedCone(HalfPlane(2, 0, 1), HalfPlane(0, 1, 1)))


def test_split_tilt_remark():
    out = tilt(REMARK)
    assert out.kind == "split"
    assert out.x_prime == point(2, 1) and out.y_prime == point(5, 3)
    assert out.q_prime == point(4, F(7, 3))
    assert out.T == HalfPlane(-3, 5, 0)
    # valid for every lattice point of the cone
    for x in lattice_points(REMARK.polyhedron(), Box.square(30)):
        assert out.T.contains(x)


def test_chvatal_tilt_is_hull_facet():
    out = tilt(AFTER)
    assert out.kind == "chvatal" and out.T == HalfPlane(-1, 2, 0)
    hull = cone_hull(AFTER).hull
    assert out.T in hull.rows
    for x in [(0, 0), (2, 1), (4, 2)]:
        assert out.T.on_boundary(x) and AFTER.contains(x)


def test_best_split_cut_recurrence():
    box = parallelogram_disjunction(REMARK)
    assert best_split_cut(REMARK, box.pi, box.pi0) == HalfPlane(-7, 12, 0)
    C1 = TranslatedCone(HalfPlane(-7, 12, 0), HalfPlane(1, 0, 4))
    box = parallelogram_disjunction(C1)
    assert best_split_cut(C1, box.pi, box.pi0) == HalfPlane(-11, 20, 0)


def test_best_split_cut_not_effective():
    C = TranslatedCone.corner(HalfPlane(-1, 0, 0), HalfPlane(1, 2, 2))
    with pytest.raises(NotEffective):
        best_split_cut(C, (1, 0), 0)


def test_tilt_invariants_random_cones():
    rng = random.Random(11)
    seen = set()
    for _ in range(400):
        C = gen.cone(rng, 30, 40)
        C = TranslatedCone(C.late.strengthen(), C.early)
        if C.apex.is_integral():
            continue
        out = tilt(C, check=False)
        check_tilt(C, out)  # raises on any violated bound
        seen.add(out.kind)
        # the tilt is a valid inequality for the lattice points of C
        box = Box.square(int(max(abs(C.apex.x1), abs(C.apex.x2))) + 40)
        H = boxed_hull(C.polyhedron(), box)
        assert H.is_empty or H.satisfies(out.T)
        # and it is implied by the disjunctive hull of its parallelogram
        D = apply_disjunction(C.polyhedron(), out.box.pi, out.box.pi0)
        assert D.satisfies(out.T)
    assert seen == {"split", "chvatal"}
