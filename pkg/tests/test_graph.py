import itertools

import pytest
from hypothesis import given

from repext.graph import (
    Graph,
    InvalidInstance,
    PartialOrientation,
    Poset,
    complement,
    complete_graph,
    cycle_graph,
    induced_subgraph,
    is_transitive,
    path_graph,
)
from repext.instances import blocked_vertex_instance

from strategies import graphs, posets


def test_complement_of_triangle_is_empty():
    c = complement(complete_graph(3))
    assert c.n == 3 and c.m == 0


def test_complement_of_single_vertex():
    assert complement(Graph(1)) == Graph(1)


def test_complement_of_blocked_instance_is_involution():
    g = blocked_vertex_instance().graph
    co = complement(g)
    assert sorted(co.edges) == [(0, 1), (0, 2), (1, 2), (1, 4), (3, 4)]
    assert complement(co) == g


@given(graphs())
def test_complement_involution(g):
    co = complement(g)
    assert complement(co) == g
    assert g.m + co.m == g.n * (g.n - 1) // 2


def test_transitivity_of_triangle_orientations():
    k3 = complete_graph(3)
    assert is_transitive(PartialOrientation(k3, [(0, 1), (1, 2), (0, 2)]))
    assert not is_transitive(PartialOrientation(k3, [(0, 1), (1, 2), (2, 0)]))
    assert is_transitive(PartialOrientation(Graph(2, [(0, 1)]), [(1, 0)]))


def test_induced_subgraph_examples():
    sub, _ = induced_subgraph(complete_graph(3), {0, 1})
    assert sub == Graph(2, [(0, 1)])
    g = cycle_graph(5)
    empty, _ = induced_subgraph(g, set())
    assert empty.n == 0
    whole, mapping = induced_subgraph(g, range(5))
    assert whole == g and mapping == {v: v for v in range(5)}


@given(graphs())
def test_induced_subgraph_keeps_adjacency(g):
    s = [v for v in range(g.n) if v % 2 == 0]
    sub, mapping = induced_subgraph(g, s)
    for u, v in itertools.combinations(s, 2):
        assert sub.has_edge(mapping[u], mapping[v]) == g.has_edge(u, v)


def test_graph_rejects_bad_edges():
    for edges in ([(0, 0)], [(0, 5)], [(0, 1), (1, 0)]):
        with pytest.raises(InvalidInstance):
            Graph(3, edges)


def test_orientation_rejects_non_edges_and_double_arcs():
    g = path_graph(3)
    with pytest.raises(InvalidInstance):
        PartialOrientation(g, [(0, 2)])
    with pytest.raises(InvalidInstance):
        PartialOrientation(g, [(0, 1), (1, 0)])


@given(posets())
def test_poset_relations_are_consistent(p):
    for u, v in itertools.permutations(range(p.n), 2):
        assert not (p.less(u, v) and p.less(v, u))
        assert p.comparable(u, v) == p.graph.has_edge(u, v)
    order = p.topological_order()
    pos = {v: i for i, v in enumerate(order)}
    assert all(pos[u] < pos[v] for u, v in p.arcs())
    assert p.reversed().reversed() == p


def test_poset_from_cyclic_relations_is_invalid():
    with pytest.raises(InvalidInstance):
        Poset.from_relations(3, [(0, 1), (1, 2), (2, 0)])


@given(graphs())
def test_graph_json_round_trip(g):
    assert Graph.from_json(g.to_json()) == g
