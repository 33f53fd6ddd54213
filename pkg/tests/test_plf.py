from fractions import Fraction as F

import pytest
from hypothesis import given
from hypothesis import strategies as st

from repext.graph import InvalidInstance
from repext.plf import (
    PLF,
    PartialPLF,
    as_rational,
    common_refinement,
    curves_intersect,
    envelope,
    evaluate,
    extends,
    rep_from_json,
    rep_to_json,
    strictly_below,
)

from strategies import full_plfs, partial_plfs, unit_points

DIAG = PLF([(0, 0), (1, 1)])
ANTI = PLF([(0, 1), (1, 0)])


def test_evaluate_examples():
    assert evaluate(PLF.constant(2), F(1, 3)) == 2
    assert evaluate(DIAG, F(1, 2)) == F(1, 2)
    assert evaluate(PartialPLF.empty(), F(1, 2)) is None
    assert evaluate(PartialPLF.constant(1, F(1, 4), F(1, 2)), F(3, 4)) is None


def test_common_refinement_examples():
    assert common_refinement([DIAG, PLF([(0, 0), (F(1, 2), 3), (1, 0)])]) == [0, F(1, 2), 1]
    assert common_refinement([]) == [0, 1]
    f = PartialPLF.constant(0, 0, F(1, 4))
    g = PartialPLF.constant(0, F(1, 2), 1)
    assert common_refinement([f, g]) == [0, F(1, 4), F(1, 2), 1]


def test_strictly_below_examples():
    assert strictly_below(PLF.constant(0), PLF.constant(1))
    assert strictly_below(PartialPLF.constant(0, 0, F(1, 4)), PartialPLF.constant(-1, F(1, 2), 1))
    assert not strictly_below(DIAG, PLF.constant(F(1, 2)))


def test_curves_intersect_examples():
    assert curves_intersect(PLF.constant(1), PLF.constant(1)) is not None
    assert curves_intersect(PLF.constant(0), PLF.constant(1)) is None
    assert curves_intersect(DIAG, ANTI) == (F(1, 2), F(1, 2))


def test_envelope_examples():
    f = PLF([(0, 3), (F(1, 2), 1), (1, 2)])
    assert envelope([f], "lower", (F(1, 4), F(3, 4))).points == ((F(1, 4), 2), (F(1, 2), 1), (F(3, 4), F(3, 2)))
    assert envelope([DIAG, ANTI], "upper", (0, 1)).points == ((0, 1), (F(1, 2), F(1, 2)), (1, 1))
    assert envelope([PLF.constant(2), PLF.constant(3)], "lower", (0, 1)).points == ((0, 2), (1, 2))


def test_floats_and_bad_breakpoints_are_rejected():
    with pytest.raises(InvalidInstance):
        as_rational(0.5)
    with pytest.raises(InvalidInstance):
        PartialPLF([(F(1, 2), 0), (F(1, 4), 1)])
    with pytest.raises(InvalidInstance):
        PLF([(0, 0), (F(1, 2), 0)])


@given(full_plfs(), full_plfs())
def test_strict_order_and_intersection_are_exclusive(f, g):
    below = strictly_below(f, g) or strictly_below(g, f)
    assert below == (curves_intersect(f, g) is None)


@given(partial_plfs(), partial_plfs())
def test_intersection_witness_lies_on_both(f, g):
    w = curves_intersect(f, g)
    if w is not None:
        x, y = w
        assert evaluate(f, x) == y == evaluate(g, x)


@given(st.lists(full_plfs(), min_size=1, max_size=4), unit_points)
def test_envelope_is_pointwise_extreme(fs, x):
    lo = envelope(fs, "lower", (0, 1))
    hi = envelope(fs, "upper", (0, 1))
    assert evaluate(lo, x) == min(evaluate(f, x) for f in fs)
    assert evaluate(hi, x) == max(evaluate(f, x) for f in fs)


@given(st.lists(full_plfs(), min_size=2, max_size=4), st.integers(0, 64))
def test_envelope_exact_between_grid_points(fs, k):
    x = F(k, 64)
    assert evaluate(envelope(fs, "upper", (0, 1)), x) == max(evaluate(f, x) for f in fs)


@given(partial_plfs())
def test_restriction_is_extended_by_original(f):
    lo, hi = f.domain
    mid = (lo + hi) / 2
    assert extends(f, f.restrict(lo, mid))


@given(st.dictionaries(st.integers(0, 9), partial_plfs(), max_size=4))
def test_rep_json_round_trip(rep):
    back = rep_from_json(rep_to_json(rep))
    assert back == rep
    assert all(back[v].points == f.points for v, f in rep.items())
