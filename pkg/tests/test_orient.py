import itertools
import json
import os
import random
import subprocess
import sys

from hypothesis import given
from hypothesis import strategies as st

from repext import _kernels
from repext.generate import random_poset, sparse_comparability_graph
from repext.graph import Graph, PartialOrientation, complete_graph, cycle_graph, is_transitive, path_graph
from repext.instances import blocked_vertex_instance
from repext.orient import (
    ForcingState,
    count_transitive_orientations,
    enumerate_transitive_orientations,
    orient_ext,
    orient_ext_explain,
    propagate,
)

from strategies import graphs, seeds


def brute_orientations(g: Graph, partial: PartialOrientation | None = None) -> int:
    count = 0
    for bits in itertools.product((0, 1), repeat=g.m):
        arcs = [(u, v) if b else (v, u) for (u, v), b in zip(g.edges, bits)]
        o = PartialOrientation(g, arcs)
        if partial is not None and not o.extends(partial):
            continue
        count += is_transitive(o)
    return count


def test_path_forcing_points_both_edges_at_the_middle():
    state = ForcingState(path_graph(3), [(0, 1)])
    assert propagate(state) is None
    assert state.direction(2, 1) is True
    assert brute_orientations(path_graph(3)) == 2


def test_single_edge_forces_nothing():
    state = ForcingState(Graph(2, [(0, 1)]), [(0, 1)])
    assert propagate(state) is None
    assert state.arcs() == [(0, 1)]


def test_triangle_with_one_arc_forces_nothing():
    state = ForcingState(complete_graph(3), [(0, 1)])
    assert propagate(state) is None
    assert len(state.arcs()) == 1


def test_blocked_instance_orientation_extends():
    inst = blocked_vertex_instance()
    poset = orient_ext(inst.graph, inst.partial)
    assert poset is not None and poset.extends(inst.partial)


def test_five_cycle_has_no_transitive_orientation():
    assert orient_ext(cycle_graph(5)) is None
    assert brute_orientations(cycle_graph(5)) == 0
    assert count_transitive_orientations(cycle_graph(5)) == 0


def test_path_against_its_own_forcing_is_infeasible():
    g = path_graph(3)
    poset, conflict = orient_ext_explain(g, PartialOrientation(g, [(0, 1), (1, 2)]))
    assert poset is None and conflict is not None
    assert "forced" in conflict.describe()


def test_enumeration_counts():
    assert count_transitive_orientations(complete_graph(3)) == 6
    assert count_transitive_orientations(Graph(2, [(0, 1)])) == 2


@given(graphs(max_n=6))
def test_enumeration_matches_brute_force(g):
    found = list(enumerate_transitive_orientations(g))
    assert len(found) == len(set(found)) == brute_orientations(g)
    assert all(is_transitive(p) for p in found)
    assert (orient_ext(g) is not None) == bool(found)


@given(seeds, st.integers(2, 7), st.floats(0, 1))
def test_extension_respects_partial(seed, n, keep):
    rng = random.Random(seed)
    p = random_poset(rng, n)
    partial = PartialOrientation(p.graph, [a for a in p.arcs() if rng.random() < keep])
    out = orient_ext(p.graph, partial)
    assert out is not None and out.extends(partial) and is_transitive(out)


@given(graphs(max_n=6), seeds)
def test_extension_verdict_matches_brute_force(g, seed):
    rng = random.Random(seed)
    partial = PartialOrientation(g, [(u, v) if rng.random() < 0.5 else (v, u) for u, v in g.edges if rng.random() < 0.4])
    out = orient_ext(g, partial)
    assert (out is not None) == (brute_orientations(g, partial) > 0)


def test_fallback_kernels_give_identical_orientations():
    """The interpreted kernels (REPEXT_NUMBA=0) agree arc for arc with the compiled ones."""
    code = (
        "import json, random\n"
        "from repext.generate import sparse_comparability_graph\n"
        "from repext.orient import orient_ext\n"
        "from repext import _kernels\n"
        "g, o = sparse_comparability_graph(random.Random(7), blocks=20)\n"
        "print(json.dumps([_kernels.USE_NUMBA, orient_ext(g, o).arcs()]))\n"
    )
    env = dict(os.environ, REPEXT_NUMBA="0")
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    flag, arcs = json.loads(out.stdout)
    assert flag is False
    g, o = sparse_comparability_graph(random.Random(7), blocks=20)
    assert [list(a) for a in orient_ext(g, o).arcs()] == arcs
    assert isinstance(_kernels.USE_NUMBA, bool)
