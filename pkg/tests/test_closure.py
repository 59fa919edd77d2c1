import random
from fractions import Fraction as F

from planecut.closure import (chvatal_closure, chvatal_closure_cone,
                              classify_facet, corner_relaxations,
                              dual_vectors, extreme_cuts, interval_cut,
                              split_closure, split_closure_cone,
                              split_cut_for_cone, split_rank_check, split_set)
from planecut.geometry import (HalfPlane, Polyhedron, TranslatedCone,
                               apply_disjunction, dot, point)
from planecut.hull import cone_hull, polyhedron_hull
from planecut.oracle import (brute_chvatal_closure, brute_split_closure,
                             primitive_normals)

import gen

HALF = TranslatedCone.corner(HalfPlane(-1, -1, -1), HalfPlane(-1, 1, 0))
REMARK = TranslatedCone(HalfPlane(-5, 8, 0), HalfPlane(1, 0, 4))


def test_corner_relaxations_counts():
    tri = Polyhedron.from_rows([(-3, 0, -1), (0, -3, -1), (3, 3, 5)])
    assert len(corner_relaxations(tri)) == 3
    sq = Polyhedron.from_rows([(1, 0, 1), (-1, 0, 0), (0, 1, 1), (0, -1, 0)])
    assert len(corner_relaxations(sq)) == 4
    cone = REMARK.polyhedron()
    (C,) = corner_relaxations(cone)
    assert C == REMARK


def test_classify_half_apex():
    H = cone_hull(HALF).hull
    assert classify_facet(HALF, H, HalfPlane(-1, 0, -1)).kind == "chvatal-dominated"
    assert classify_facet(HALF, H, HalfPlane(-1, -1, -1)).kind == "degenerate"


def test_classify_remark_type_two():
    H = cone_hull(REMARK).hull
    fc = classify_facet(REMARK, H, HalfPlane(-1, 2, 0))
    assert fc.kind == "type-two"
    assert fc.hat.normal == (-1, 2) and fc.hat.b == 1
    assert set(fc.J0.points()) == {point(0, 0), point(2, 1)}
    assert set(fc.Jt.points()) == {point(2, 1), point(4, 2)}
    assert fc.t == 1
    # Jhat is the unit interval of the hat line around the apex
    assert set(fc.Jhat.points()) == {point(3, 2), point(5, 3)}


def test_extreme_cuts_remark():
    H = cone_hull(REMARK).hull
    fc = classify_facet(REMARK, H, HalfPlane(-1, 2, 0))
    first, last = extreme_cuts(REMARK, fc)
    assert first == HalfPlane(-7, 12, 0) and last == HalfPlane(-1, 4, 4)
    for h in (first, last):
        assert not h.contains(REMARK.apex)
        assert brute_split_closure(REMARK.polyhedron(), 16).satisfies(h)


def test_extreme_cuts_coincide_for_single_interval():
    rng = random.Random(8)
    found = 0
    for _ in range(400):
        C = gen.cone(rng, 12, 30)
        if C.apex.is_integral():
            continue
        H = cone_hull(C).hull
        for h in H.rows:
            fc = classify_facet(C, H, h)
            if fc.kind == "type-two" and fc.t == 0:
                first, last = extreme_cuts(C, fc)
                assert first == last
                found += 1
    assert found > 0


def test_split_cut_single_exit_point():
    # apex (1/2, 1/2); the ray (0, -1) runs inside the strip 0 <= x1 <= 1
    C = TranslatedCone.corner(HalfPlane(-2, 0, -1), HalfPlane(-1, 1, 0))
    assert C.apex == point(F(1, 2), F(1, 2))
    cut = split_cut_for_cone(C, (1, 0), 0)
    assert cut == HalfPlane(-1, 0, -1)
    D = apply_disjunction(C.polyhedron(), (1, 0), 0)
    assert D.same_set(C.polyhedron().intersect([cut]))


def test_split_cut_matches_disjunctive_hull():
    rng = random.Random(9)
    n = 0
    for _ in range(300):
        C = gen.cone(rng, 10, 20)
        v = C.apex
        if v.is_integral():
            continue
        pi = gen.vec(rng, 4)
        t = dot(pi, v)
        if t.denominator == 1:
            continue
        pi0 = t.numerator // t.denominator
        cut = split_cut_for_cone(C, pi, pi0)
        D = apply_disjunction(C.polyhedron(), pi, pi0)
        assert D.same_set(C.polyhedron().intersect([cut]))
        n += 1
    assert n > 100


def test_split_set_area_one():
    H = cone_hull(REMARK).hull
    fc = classify_facet(REMARK, H, HalfPlane(-1, 2, 0))
    pi, pi0 = split_set(fc.J0, fc.Jhat)
    for x in list(fc.J0.points()) + list(fc.Jhat.points()):
        assert pi0 <= dot(pi, x) <= pi0 + 1
    assert pi0 < dot(pi, REMARK.apex) < pi0 + 1


# Chvatal closure -------------------------------------------------------------

def test_dual_vectors_are_primitive_and_in_cone():
    vs = dual_vectors(REMARK, 10)
    assert (1, 0) in vs and (-5, 8) in vs and (-1, 2) in vs
    for c in vs:
        assert max(abs(c[0]), abs(c[1])) <= 10
        # c = s*(-5, 8) + t*(1, 0) with s, t >= 0
        assert c[1] >= 0 and 8 * c[0] + 5 * c[1] >= 0


def test_chvatal_closure_examples():
    ap = TranslatedCone.corner(HalfPlane(2, 3, 5), HalfPlane(-1, 4, 3))
    assert chvatal_closure_cone(ap).closure.same_set(ap.polyhedron())
    Q = chvatal_closure_cone(HALF).closure
    assert Q.same_set(HALF.polyhedron().intersect([HalfPlane(-1, 0, -1)]))
    assert Q.same_set(brute_chvatal_closure(HALF.polyhedron(), 50))
    R = chvatal_closure_cone(REMARK)
    assert R.certified
    assert set(R.closure.rows) == {HalfPlane(-5, 8, 0), HalfPlane(-3, 5, 0),
                                   HalfPlane(0, 1, 2), HalfPlane(1, 0, 4)}
    # -x1 + 2x2 <= 1 is a valid Chvatal cut but not a facet of the closure
    assert HalfPlane(-1, 2, 0) not in R.closure.rows
    assert R.closure.satisfies(HalfPlane(-1, 2, 1))


def test_chvatal_closure_random_cones_match_enumeration():
    rng = random.Random(10)
    for _ in range(60):
        C = gen.cone(rng, 8, 20)
        R = chvatal_closure_cone(C)
        assert R.certified
        assert R.closure.same_set(brute_chvatal_closure(C.polyhedron(), 24))


def test_chvatal_closure_of_polytope():
    rng = random.Random(12)
    for _ in range(25):
        P = gen.polytope(rng, 6, 15)
        R = chvatal_closure(P)
        assert R.closure.same_set(brute_chvatal_closure(P, 18))
    assert chvatal_closure(Polyhedron.from_rows([(2, 0, 1), (-2, 0, 1)])).closure.same_set(
        Polyhedron.from_rows([(1, 0, 0), (-1, 0, 0)]))


def test_depth_does_not_change_result():
    rng = random.Random(13)
    for _ in range(20):
        C = gen.cone(rng, 12, 30)
        a = chvatal_closure_cone(C, depth=1).closure
        b = chvatal_closure_cone(C, depth=24).closure
        assert a.same_set(b)


# split closure ---------------------------------------------------------------

def test_split_closure_cone_examples():
    ap = TranslatedCone.corner(HalfPlane(2, 3, 5), HalfPlane(-1, 4, 3))
    assert split_closure_cone(ap).closure.same_set(ap.polyhedron())
    res = split_closure_cone(HALF)
    assert res.closure.same_set(cone_hull(HALF).hull)
    assert res.closure.same_set(brute_split_closure(HALF.polyhedron(), 20))


def test_split_closure_remark_provenance():
    res = split_closure_cone(REMARK)
    assert set(res.closure.rows) == {HalfPlane(-5, 8, 0), HalfPlane(-7, 12, 0),
                                     HalfPlane(-1, 4, 4), HalfPlane(1, 0, 4)}
    assert res.provenance[HalfPlane(-7, 12, 0)] == ("extreme", 1, "first")
    assert res.provenance[HalfPlane(-1, 4, 4)] == ("extreme", 1, "last")
    assert res.provenance[HalfPlane(1, 0, 4)] == ("original",)


def test_split_closure_examples():
    strip = Polyhedron.from_rows([(2, 0, 1), (-2, 0, 0)])
    Q = split_closure(strip).closure
    assert set(Q.rows) == {HalfPlane(1, 0, 0), HalfPlane(-1, 0, 0)}
    sq = Polyhedron.from_rows([(-1, 0, 0), (0, -1, 0), (1, 0, 2), (0, 1, 2)])
    assert split_closure(sq).closure.same_set(sq)
    thin = Polyhedron.from_rows([(-3, 0, -1), (0, -3, -1), (3, 3, 2)])
    assert split_closure(thin).closure.is_empty
    fat = Polyhedron.from_rows([(-3, 0, -1), (0, -3, -1), (3, 3, 5)])
    assert split_closure(fat).closure.is_empty
    assert brute_split_closure(fat, 6).is_empty


def test_split_rank_examples():
    sq = Polyhedron.from_rows([(-1, 0, 0), (0, -1, 0), (1, 0, 2), (0, 1, 2)])
    assert split_rank_check(sq).rank == 0
    rep = split_rank_check(HALF)
    assert rep.rank == 1 and rep.chvatal_of_first_is_hull
    rep = split_rank_check(REMARK)
    assert rep.rank == 2 and rep.chvatal_of_first_is_hull


def test_random_split_closures_match_enumeration():
    rng = random.Random(14)
    for k in range(40):
        if k % 2:
            C = gen.cone(rng, 8, 20)
            P = C.polyhedron()
            res = split_closure_cone(C)
        else:
            P = gen.polytope(rng, 8, 20)
            res = split_closure(P)
        assert res.certified
        assert res.closure.same_set(brute_split_closure(P, 2 * P.max_normal()))
        H = polyhedron_hull(P)
        assert H.issubset(res.closure) and res.closure.issubset(P)


def test_two_sides_dominate_interior_intervals():
    rng = random.Random(15)
    checked = 0
    for _ in range(300):
        C = gen.cone(rng, 12, 30)
        if C.apex.is_integral():
            continue
        H = cone_hull(C).hull
        for h in H.rows:
            fc = classify_facet(C, H, h)
            if fc.kind != "type-two" or fc.t < 2:
                continue
            first, last = extreme_cuts(C, fc)
            both = C.polyhedron().intersect([first, last])
            for k in range(1, fc.t):
                assert both.satisfies(interval_cut(C, fc, k))
                checked += 1
    assert checked > 0


def test_sampled_split_cuts_are_dominated():
    rng = random.Random(16)
    for _ in range(40):
        C = gen.cone(rng, 8, 20)
        Q = split_closure_cone(C).closure
        for pi in primitive_normals(4, up_to_sign=True):
            t = dot(pi, C.apex)
            if t.denominator == 1:
                continue
            pi0 = t.numerator // t.denominator
            assert Q.issubset(apply_disjunction(C.polyhedron(), pi, pi0))
