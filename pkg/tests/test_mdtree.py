import itertools
import random

import pytest
from hypothesis import given

from repext.generate import random_poset
from repext.graph import Graph, InvalidInstance, complete_graph, cycle_graph, path_graph
from repext.mdtree import (
    LEAF,
    PARALLEL,
    PRIME,
    SERIAL,
    MDNode,
    is_module,
    modular_decomposition,
    prime_orientations,
)
from repext.orient import count_transitive_orientations

from strategies import graphs, seeds


def brute_strong_modules(g: Graph) -> set[frozenset]:
    mods = [frozenset(s) for k in range(1, g.n + 1) for s in itertools.combinations(range(g.n), k) if is_module(g, s)]
    return {m for m in mods if all(m <= o or o <= m or not (m & o) for o in mods)}


def test_empty_graph_is_parallel():
    t = modular_decomposition(Graph(3))
    assert t.kind == PARALLEL and [c.kind for c in t.children] == [LEAF] * 3


def test_triangle_is_serial():
    t = modular_decomposition(complete_graph(3))
    assert t.kind == SERIAL and len(t.children) == 3


def test_path_on_four_is_prime():
    t = modular_decomposition(path_graph(4))
    assert t.kind == PRIME and all(c.is_leaf for c in t.children)
    assert brute_strong_modules(path_graph(4)) == {frozenset(range(4))} | {frozenset([v]) for v in range(4)}


def test_module_examples():
    g = path_graph(4)
    assert all(is_module(g, {v}) for v in range(4))
    assert is_module(g, range(4))
    assert not is_module(g, {0, 1})


def test_prime_orientations_of_p4():
    g = path_graph(4)
    a, b = prime_orientations(modular_decomposition(g), g)
    assert a != b and a.reversed() == b
    assert count_transitive_orientations(g) == 2


def test_prime_orientations_guards():
    g = Graph(2, [(0, 1)])
    with pytest.raises(InvalidInstance):
        prime_orientations(modular_decomposition(g), g)
    c5 = cycle_graph(5)
    with pytest.raises(InvalidInstance):
        prime_orientations(modular_decomposition(c5), c5)


def _check_tree(g: Graph, t: MDNode):
    nodes = list(t.walk())
    assert {n.vertices for n in nodes} == brute_strong_modules(g)
    assert len(nodes) <= max(1, 2 * g.n - 1)
    for n in nodes:
        if n.is_leaf:
            continue
        assert n.vertices == frozenset().union(*(c.vertices for c in n.children))
        reps = [c.min_vertex for c in n.children]
        pairs = [g.has_edge(a, b) for a, b in itertools.combinations(reps, 2)]
        if n.kind == PARALLEL:
            assert not any(pairs)
        elif n.kind == SERIAL:
            assert all(pairs)
        assert [c.min_vertex for c in n.children] == sorted(reps)


@given(graphs(max_n=7))
def test_tree_nodes_are_the_strong_modules(g):
    if g.n:
        _check_tree(g, modular_decomposition(g))


@given(seeds)
def test_comparability_graph_trees(seed):
    g = random_poset(random.Random(seed), 7).graph
    _check_tree(g, modular_decomposition(g))
