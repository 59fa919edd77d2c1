import random
from fractions import Fraction as F

import pytest

from planecut.geometry import HalfPlane, Polyhedron, point
from planecut.oracle import brute_ip
from planecut.solver import (EARLY, LATE, NotPointed, Unbounded,
                             check_early_late, check_potential, classify,
                             iteration_cap, low_dim_resolve, order_facets,
                             phases, solve)

import gen

REMARK0 = Polyhedron.from_rows([(1, 0, 4), (-5, 8, 0)])
SQUARE = Polyhedron.from_rows([(-1, 0, 0), (0, -1, 0), (1, 0, 2), (0, 1, 2)])


def test_order_facets_remark():
    late, early = order_facets(REMARK0, point(4, F(5, 2)), (0, 1))
    assert late.normal == (-5, 8) and early.normal == (1, 0)


def test_order_facets_square():
    late, early = order_facets(SQUARE, point(0, 2), (0, 1))
    assert early == HalfPlane(0, 1, 2) and late == HalfPlane(-1, 0, 0)


def test_optimal_facet_is_early():
    # two optimal vertices: the first one met clockwise is chosen and the
    # optimal facet becomes the early facet there
    T = Polyhedron.from_rows([(0, 1, 2), (-1, 0, 0), (1, -1, 0)])
    res = solve(T, (0, 1))
    assert res.point == point(0, 2)
    late, early = order_facets(T, point(0, 2), (0, 1))
    assert early == HalfPlane(0, 1, 2) and late == HalfPlane(-1, 0, 0)


def test_classify_labels():
    c = (0, 1)
    assert LATE in classify((-1, 0), c)
    assert EARLY in classify((1, 0), c)
    assert classify((0, 1), c) == frozenset()
    assert LATE in classify((0, 1), c, is_late=True)
    assert classify((0, -1), c) >= {EARLY}


def test_remark_golden_trace():
    res = solve(REMARK0, (0, 1))
    assert res.status == "optimal" and res.point == point(4, 2) and res.value == 2
    assert [r.kind for r in res.trace] == ["split-tilt", "chvatal-tilt", "stop"]
    assert res.cuts == [HalfPlane(-3, 5, 0), HalfPlane(-1, 2, 0)]
    # both cuts descend from the row -5x1+8x2 <= 0
    assert res.trace[0].family == res.trace[1].family
    assert res.trace[0].pivot == point(0, 0)
    assert check_potential(res.trace) == [] and check_early_late(res.trace) == []


def test_lattice_free_sets():
    thin = Polyhedron.from_rows([(-3, 0, -1), (0, -3, -1), (3, 3, 2)])
    fat = Polyhedron.from_rows([(-3, 0, -1), (0, -3, -1), (3, 3, 5)])
    for P in (thin, fat):
        for c in [(1, 0), (0, 1), (-1, -1), (2, 3)]:
            assert solve(P, c).status == "infeasible"


def test_integral_vertex_stops_immediately():
    res = solve(SQUARE, (1, 1))
    assert res.point == point(2, 2) and res.cuts == [] and res.iterations == 1


def test_errors():
    with pytest.raises(Unbounded):
        solve(Polyhedron.from_rows([(-1, 0, 0), (0, -1, 0)]), (1, 1))
    with pytest.raises(NotPointed):
        solve(Polyhedron.from_rows([(2, 0, 1), (-2, 0, 0)]), (1, 0))
    with pytest.raises(ValueError):
        solve(SQUARE, (0, 0))


def test_low_dim_resolve_examples():
    seg = Polyhedron.from_rows([(2, -4, 1), (-2, 4, -1), (1, 0, 3), (-1, 0, 0)])
    status, x, cut = low_dim_resolve(seg, (1, 0))
    assert status == "infeasible" and cut is not None
    assert not any(cut.contains(v) for v in seg.vertices)
    seg2 = Polyhedron.from_rows([(0, 1, 0), (0, -1, 0), (-1, 0, 0), (2, 0, 7)])
    status, x, cut = low_dim_resolve(seg2, (1, 0))
    assert status == "optimal" and x == point(3, 0)
    assert cut.contains(x) and not cut.contains(point(F(7, 2), 0))
    pt = Polyhedron.from_rows([(2, 0, 1), (-2, 0, -1), (0, 2, 1), (0, -2, -1)])
    assert low_dim_resolve(pt, (1, 0))[0] == "infeasible"


def test_iteration_cap_formula():
    assert iteration_cap(2, 1) == 128
    assert iteration_cap(3, 8, K=1) == 48


def test_random_against_enumeration():
    rng = random.Random(5)
    for _ in range(150):
        rows, P, c = gen.instance(rng, 5, 15, 60)
        res = solve(P, c)
        ref = brute_ip(rows, c)
        assert res.status == ref.status
        if res.status == "optimal":
            assert res.value == ref.value
            assert P.contains(res.point) and res.point.is_integral()
        assert check_potential(res.trace) == []
        assert check_early_late(res.trace) == []


def test_phases_cover_full_dimensional_iterations():
    res = solve(REMARK0, (0, 1))
    assert phases(res.trace) == [(0, 1)]
