from fractions import Fraction as F

import pytest

from repext.graph import Graph, InvalidInstance, Poset
from repext.oracle import (
    brute_2sat,
    brute_perm_ext,
    brute_rep_ext_fun,
    brute_sat3,
    curve_orientation,
    poset_feasible_brute,
    sampled_region_intersect,
)
from repext.plf import PLF
from repext.regions import make_region


def test_2sat_examples():
    assert brute_2sat(1, [[(0, True)], [(0, False)]]) is None
    assert brute_2sat(2, [[(0, True), (1, True)], [(0, False)]]) == [False, True]


def test_3sat_examples():
    assert brute_sat3(3, [(1, 2, -3)])
    assert not brute_sat3(1, [(1,), (-1,)])


def test_caps_refuse_large_inputs():
    with pytest.raises(InvalidInstance):
        brute_sat3(30, [])
    with pytest.raises(InvalidInstance):
        brute_2sat(30, [])
    with pytest.raises(InvalidInstance):
        brute_rep_ext_fun(Graph(12), {})
    with pytest.raises(InvalidInstance):
        brute_perm_ext(Graph(9), {})


def test_curve_orientation_reads_strict_order():
    g = Graph(3, [(0, 1), (1, 2)])
    o = curve_orientation(g, {0: PLF.constant(1), 1: PLF.constant(0)})
    assert sorted(o.arcs()) == [(1, 0)]


def test_sampled_intersection_of_bands():
    low = make_region(None, [], [PLF.constant(1)])
    high = make_region(None, [PLF.constant(0)], [])
    x, y = sampled_region_intersect(low, high)
    assert 0 < y < 1
    assert sampled_region_intersect(make_region(PLF.constant(2)), low) is None


def test_poset_feasibility_examples():
    p = Poset.from_relations(3, [(0, 1)])
    assert poset_feasible_brute(p, {0: PLF.constant(0), 1: PLF.constant(1)})
    # 2 is incomparable to both yet would have to meet 0 and 1 under 0 < 1: fine
    assert poset_feasible_brute(p, {0: PLF.constant(0), 1: PLF.constant(1), 2: PLF([(0, 0), (1, 1)])})


def test_perm_brute_on_empty_placement():
    assert brute_perm_ext(Graph(3, [(0, 1)]), {})
    assert brute_perm_ext(Graph(2, [(0, 1)]), {0: (F(0), F(1)), 1: (F(1), F(0))})
