import random
from fractions import Fraction as F

from hypothesis import given

from repext.generate import random_region_pair, touching_region_pair
from repext.graph import Poset
from repext.instances import shaded_region_instance
from repext.oracle import sampled_region_intersect
from repext.partialfun_ext import gen_3sat_gadget, orientation_from_valuation
from repext.plf import PLF, PartialPLF, evaluate
from repext.regions import make_region, region_full, region_partial, regions_intersect

from strategies import seeds

DIAG = PLF([(0, 0), (1, 1)])


def test_represented_vertex_region_is_its_curve():
    inst = shaded_region_instance()
    r = region_full(0, inst.poset, inst.rep)
    assert r.pinned == inst.rep[0]
    assert r.contains(F(1, 4), F(19, 5)) and not r.contains(F(1, 4), 4)


def test_free_vertex_region_is_everything():
    p = Poset.from_relations(2, [])
    r = region_full(1, p, {0: PLF.constant(0)})
    assert r.is_everything()


def test_shaded_region_between_two_lower_curves_and_one_upper():
    inst = shaded_region_instance()
    a, b, c, v = 0, 1, 2, 5
    r = region_full(v, inst.poset, inst.rep)
    for k in range(33):
        x = F(k, 32)
        lo = max(evaluate(inst.rep[a], x), evaluate(inst.rep[b], x))
        hi = evaluate(inst.rep[c], x)
        col = r.column_at(x)
        assert col.bounds_at(x) == (lo, hi)
        assert r.contains(x, (lo + hi) / 2) and not r.contains(x, lo) and not r.contains(x, hi)


def test_partial_region_with_all_curves_empty_is_everything():
    p = Poset.from_relations(3, [(0, 1), (1, 2)])
    rep = {v: PartialPLF.empty() for v in range(3)}
    assert all(region_partial(u, p, rep).is_everything() for u in range(3))


def test_partially_pinned_region_has_pinned_and_free_columns():
    p = Poset.from_relations(1, [])
    f = PartialPLF.constant(3, 0, F(1, 2))
    r = region_partial(0, p, {0: f})
    assert r.column_at(F(1, 4)).pinned is not None
    assert r.column_at(F(3, 4)).pinned is None and r.contains(F(3, 4), 100)
    assert r.contains(F(1, 2), 3) and not r.contains(F(1, 2), 4)


def test_gadget_literal_region_is_pinned_on_its_domain():
    gd = gen_3sat_gadget(3, [(1, 2, -3), (1, -2, 3)])
    p = orientation_from_valuation(gd, [True, True, True])
    u = gd.alpha(1, 1, 1)
    r = region_partial(u, p, gd.rep)
    lo, hi = gd.rep[u].domain
    mid = (lo + hi) / 2
    assert r.column_at(mid).pinned is not None
    assert r.contains(mid, evaluate(gd.rep[u], mid))


def test_identical_pins_meet_and_distinct_pins_do_not():
    one = PLF.constant(1)
    assert regions_intersect(make_region(one), make_region(one)) is not None
    assert regions_intersect(make_region(PLF.constant(0)), make_region(one)) is None


def test_open_bands_touching_along_a_line_do_not_meet():
    above, below = make_region(None, [DIAG], []), make_region(None, [], [DIAG])
    assert regions_intersect(above, below) is None
    assert sampled_region_intersect(above, below) is None


@given(seeds)
def test_agrees_with_sampled_oracle(seed):
    r1, r2 = random_region_pair(random.Random(seed))
    w = regions_intersect(r1, r2)
    s = sampled_region_intersect(r1, r2)
    assert (w is None) == (s is None)
    if w is not None:
        assert r1.contains(w.x, w.y) and r2.contains(w.x, w.y)
    if s is not None:
        assert r1.contains(*s) and r2.contains(*s)


@given(seeds)
def test_touching_pairs_are_empty(seed):
    r1, r2 = touching_region_pair(random.Random(seed))
    assert regions_intersect(r1, r2) is None


@given(seeds)
def test_intersection_is_symmetric(seed):
    r1, r2 = random_region_pair(random.Random(seed))
    assert (regions_intersect(r1, r2) is None) == (regions_intersect(r2, r1) is None)
