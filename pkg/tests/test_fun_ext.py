import random
from fractions import Fraction as F

import pytest
from hypothesis import given, settings

from repext.checker import check_representation
from repext.fun_ext import (
    count_orientations,
    fun_extendable,
    reduce,
    rep_ext_fun,
    rep_ext_fun_explain,
    validate_instance,
)
from repext.generate import valid_fun_instances
from repext.graph import Graph, InvalidInstance
from repext.instances import blocked_vertex_instance
from repext.mdtree import PARALLEL, SERIAL, modular_decomposition
from repext.oracle import brute_rep_ext_fun
from repext.plf import PLF, PartialPLF, strictly_below

from strategies import seeds

ZERO, ONE = PLF.constant(0), PLF.constant(1)
DIAG = PLF([(0, 0), (1, 1)])


def test_validate_accepts_ordered_adjacent_curves():
    assert validate_instance(Graph(2, [(0, 1)]), {0: ZERO, 1: ONE}) == []


def test_validate_rejects_crossing_adjacent_curves():
    assert validate_instance(Graph(2, [(0, 1)]), {0: DIAG, 1: PLF.constant(F(1, 2))})


def test_validate_rejects_disjoint_non_adjacent_curves():
    assert validate_instance(Graph(2), {0: ZERO, 1: ONE})


def test_validate_rejects_partial_curve():
    assert validate_instance(Graph(1), {0: PartialPLF.constant(0, 0, F(1, 2))})


def test_invalid_instance_raises():
    with pytest.raises(InvalidInstance):
        rep_ext_fun(Graph(2), {0: ZERO, 1: ONE})


def test_blocked_vertex_is_not_extendable():
    inst = blocked_vertex_instance()
    res = rep_ext_fun_explain(inst.graph, inst.rep)
    assert not res.extendable and res.representation is None
    assert res.failing_pair is not None and 4 in res.failing_pair
    assert not brute_rep_ext_fun(inst.graph, inst.rep)


def test_nothing_represented_gives_a_representation():
    g = Graph(4, [(0, 1), (1, 2), (2, 3)])
    psi = rep_ext_fun(g, {})
    assert psi is not None and not check_representation(g, psi)


def test_odd_cycle_is_not_a_comparability_graph():
    res = rep_ext_fun_explain(Graph(5, [(i, (i + 1) % 5) for i in range(5)]), {})
    assert not res.extendable and "comparability" in res.reason


def test_fully_represented_keeps_curve_order():
    g = Graph(3, [(0, 1), (1, 2), (0, 2)])
    rep = {0: ZERO, 1: PLF.constant(2), 2: ONE}
    res = rep_ext_fun_explain(g, rep)
    assert res.extendable and res.representation == rep
    assert all(res.poset.less(u, v) == strictly_below(rep[u], rep[v]) for u, v in g.edges)


def test_reduction_collapses_unrepresented_module_to_min_vertex():
    # 0 and 1 are twins not adjacent to each other, both adjacent to 2
    g = Graph(3, [(0, 2), (1, 2)])
    red = reduce(g, {2: ZERO}, modular_decomposition(g))
    assert red.kept == {0, 2}
    assert red.collapsed and red.collapsed[0][1] == 0


def test_reduction_keeps_one_unrepresented_serial_child():
    g = Graph(3, [(0, 1), (1, 2), (0, 2)])
    red = reduce(g, {0: ZERO}, modular_decomposition(g))
    assert red.kept == {0, 1}
    assert list(red.removed.values()) == [((2,), "keep-one")]


def test_reduction_drops_unrepresented_children_between_represented_ones():
    g = Graph(3, [(0, 1), (1, 2), (0, 2)])
    red = reduce(g, {0: ZERO, 2: ONE}, modular_decomposition(g))
    assert red.kept == {0, 2}
    assert list(red.removed.values()) == [((1,), "between")]


def test_count_orientations_of_small_modules():
    k2 = Graph(2, [(0, 1)])
    root = modular_decomposition(k2)
    assert root.kind == SERIAL
    assert len(count_orientations(root, k2, set())) == 2
    assert len(count_orientations(root, k2, {(0, 1)})) == 1
    assert count_orientations(root, k2, {(0, 1), (1, 0)}) == []
    e2 = Graph(2)
    assert modular_decomposition(e2).kind == PARALLEL
    assert len(count_orientations(modular_decomposition(e2), e2, set())) == 1


def test_unrepresented_vertex_between_two_curves():
    g = Graph(3, [(0, 1), (1, 2), (0, 2)])
    psi = rep_ext_fun(g, {0: ZERO, 2: ONE})
    assert psi is not None
    assert strictly_below(psi[0], psi[1]) and strictly_below(psi[1], psi[2])


@settings(max_examples=40)
@given(seeds)
def test_agrees_with_brute_force(seed):
    g, rep = next(valid_fun_instances(random.Random(seed), 1))
    res = rep_ext_fun_explain(g, rep)
    assert res.extendable == brute_rep_ext_fun(g, rep)
    assert res.extendable == fun_extendable(g, rep)
    if res.extendable:
        assert not check_representation(g, res.representation, rep)
