import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from repext.checker import check_poset_representation
from repext.generate import all_sign_formula, all_three_clauses, gadget_corpus, random_poset_instance
from repext.graph import InvalidInstance
from repext.mdtree import PARALLEL, PRIME, SERIAL, modular_decomposition
from repext.oracle import brute_rep_ext_fun, brute_sat3
from repext.partialfun_ext import (
    BudgetExceeded,
    gadget_forward_check,
    gen_3sat_gadget,
    orientation_from_valuation,
    rep_ext_star_graph,
    rep_ext_star_graph_explain,
)
from repext.plf import PLF
from repext.regions import check_poset_rep

from strategies import seeds

SAT2 = [(1, 2, -1), (1, -2, 2)]


def test_gadget_size():
    gd = gen_3sat_gadget(2, SAT2)
    assert gd.graph.n == 6 * 2 + 13 * 2 + 2 == 40
    assert len(gd.rep) == 40
    assert len(set(gd.labels().values())) == 40


def test_gadget_decomposition_shape():
    gd = gen_3sat_gadget(2, SAT2)
    root = modular_decomposition(gd.graph)
    assert root.kind == PRIME and len(root.children) == 4
    kinds = sorted((c.kind, len(c.vertices)) for c in root.children)
    assert kinds == [("leaf", 1), ("leaf", 1), (PARALLEL, 12), (PARALLEL, 26)]
    for c in root.children:
        for s in c.children:
            assert s.kind == SERIAL and all(k.kind == PARALLEL for k in s.children)
    clause = next(c for c in root.children if len(c.vertices) == 26).children[0]
    assert sorted(len(k.vertices) for k in clause.children) == [3, 3, 3, 4]


def test_gadget_rejects_small_or_repeated_input():
    with pytest.raises(InvalidInstance):
        gen_3sat_gadget(2, [(1, 2, -1)])
    with pytest.raises(InvalidInstance):
        gen_3sat_gadget(2, [(1, 1, 2), (1, 2, -2)])
    with pytest.raises(InvalidInstance):
        gen_3sat_gadget(2, [(1, 2, 3), (1, 2, -2)])


def test_gadget_curves_respect_the_graph():
    gd = gen_3sat_gadget(3, [(1, 2, 3), (-1, -2, -3)])
    p = orientation_from_valuation(gd, [True, False, True])
    check_poset_rep(p, gd.rep, full=False)


def test_single_clause_doubled_is_extendable():
    gd = gen_3sat_gadget(3, [(1, 2, -3), (1, 2, -3)])
    res = rep_ext_star_graph_explain(gd.graph, gd.rep, construct=False)
    assert res.extendable


def test_unsatisfiable_formula_is_not_extendable():
    formula = all_sign_formula()
    assert not brute_sat3(3, formula)
    gd = gen_3sat_gadget(3, formula)
    assert not rep_ext_star_graph_explain(gd.graph, gd.rep, construct=False).extendable


@pytest.mark.parametrize("bits", list(itertools.product((False, True), repeat=3)))
def test_valuation_orientation_is_transitive_and_matches_truth(bits):
    formula = [(1, 2, -3), (-1, 2, 3), (1, -2, -3)]
    gd = gen_3sat_gadget(3, formula)
    p = orientation_from_valuation(gd, bits)
    arcs = set(p.arcs())
    assert len(arcs) == gd.graph.m
    assert all((a, d) in arcs for a, b in arcs for c, d in arcs if b == c)
    sat = all(any(bits[abs(l) - 1] == (l > 0) for l in c) for c in formula)
    assert gadget_forward_check(gd, bits) == sat


def test_construction_on_a_satisfiable_gadget():
    gd = gen_3sat_gadget(2, SAT2)
    out = rep_ext_star_graph(gd.graph, gd.rep)
    assert out is not None
    poset, psi = out
    assert not check_poset_representation(poset, psi, gd.rep)


def test_budget_is_enforced():
    gd = gen_3sat_gadget(3, all_sign_formula())
    with pytest.raises(BudgetExceeded):
        rep_ext_star_graph_explain(gd.graph, gd.rep, budget=0, construct=False)


def test_corpus_size():
    assert len(all_three_clauses()) == 20
    assert len(gadget_corpus()) == 190 + 1140 + 1


@settings(max_examples=15)
@given(st.sampled_from(gadget_corpus()))
def test_sampled_corpus_agrees_with_sat(formula):
    gd = gen_3sat_gadget(3, formula)
    res = rep_ext_star_graph_explain(gd.graph, gd.rep, construct=False)
    assert res.extendable == brute_sat3(3, formula)


@given(seeds)
def test_partial_instances_agree_with_brute_force(seed):
    rng = random.Random(seed)
    p, rep = random_poset_instance(rng, rng.randint(1, 5), False)
    try:
        check_poset_rep(p, rep, full=False)
    except InvalidInstance:
        return
    g = p.graph
    try:
        res = rep_ext_star_graph_explain(g, rep)
    except InvalidInstance:
        return
    assert res.extendable == brute_rep_ext_fun(g, rep, partial=True)
    if res.extendable:
        assert not check_poset_representation(res.poset, res.representation, rep)


def test_fully_represented_instance():
    from repext.graph import Graph

    g = Graph(3, [(0, 1)])
    rep = {0: PLF.constant(0), 1: PLF.constant(2), 2: PLF([(0, -1), (1, 3)])}
    res = rep_ext_star_graph_explain(g, rep)
    assert res.extendable and res.poset.less(0, 1)
