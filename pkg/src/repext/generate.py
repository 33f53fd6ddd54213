"""Seeded random instance generators for tests, benchmarks and the CLI."""

from __future__ import annotations

import itertools
import random
from fractions import Fraction

from repext.checker import segments_cross
from repext.graph import Graph, PartialOrientation, Poset
from repext.perm_ext import drawing_from_permutation, graph_from_permutation
from repext.plf import ONE, ZERO, PLF, PartialPLF
from repext.regions import Region, make_region

F = Fraction


def random_poset(rng: random.Random, n: int, density: float | None = None) -> Poset:
    """Transitive closure of a random DAG on a shuffled labelling."""
    if density is None:
        density = rng.choice([0.3, 0.5, 0.7])
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < density]
    perm = list(range(n))
    rng.shuffle(perm)
    return Poset.from_relations(n, [(perm[u], perm[v]) for u, v in pairs])


def random_plf(rng: random.Random, full: bool = True, denom: int = 8, height: int = 8) -> PartialPLF:
    """A curve with breakpoints on the ``1/denom`` grid; full domain or a random subinterval."""
    if full:
        inner = {F(rng.randint(1, denom - 1), denom) for _ in range(rng.randint(0, 3))}
        xs = [ZERO, *sorted(inner), ONE]
        return PLF([(x, F(rng.randint(-height, height), rng.randint(1, 4))) for x in xs])
    a, b = sorted(rng.sample(range(denom + 1), 2))
    xs = sorted({F(a, denom), F(b, denom)} | {F(rng.randint(a, b), denom) for _ in range(2)})
    return PartialPLF([(x, F(rng.randint(-height, height), rng.randint(1, 4))) for x in xs])


def coarse_plf(rng: random.Random, height: int = 2) -> PLF:
    """A full curve with breakpoints among 0, 1/2, 1 and small integer values."""
    xs = [ZERO] + ([F(1, 2)] if rng.random() < 0.6 else []) + [ONE]
    return PLF([(x, F(rng.randint(-height, height))) for x in xs])


def random_poset_instance(rng: random.Random, n: int, full: bool) -> tuple[Poset, dict[int, PartialPLF]]:
    """A random poset with random curves on about half the vertices (not necessarily valid)."""
    p = random_poset(rng, n, 0.35)
    rep = {v: random_plf(rng, full) for v in range(n) if rng.random() < 0.5}
    return p, rep


def random_fun_instance(rng: random.Random, n_min: int = 3, n_max: int = 7) -> tuple[Graph, dict[int, PartialPLF]]:
    """A comparability graph with 2..4 represented vertices whose curves come from a small pool.

    Reusing pool curves makes non-adjacent represented pairs coincide, which
    keeps random instances valid and produces a healthy share of NO answers.
    The result may still be invalid; callers filter with ``validate_instance``.
    """
    n = rng.randint(n_min, n_max)
    g = random_poset(rng, n).graph
    k = rng.randint(2, min(4, n))
    verts = rng.sample(range(n), k)
    pool = [coarse_plf(rng) for _ in range(3)]
    rep = {v: (rng.choice(pool) if rng.random() < 0.6 else coarse_plf(rng)) for v in verts}
    return g, rep


def valid_fun_instances(rng: random.Random, count: int, n_max: int = 7):
    """Yield ``count`` instances that pass validation."""
    from repext.fun_ext import validate_instance

    made = 0
    while made < count:
        g, rep = random_fun_instance(rng, n_max=n_max)
        if validate_instance(g, rep):
            continue
        made += 1
        yield g, rep


def random_permutation(rng: random.Random, n: int) -> list[int]:
    pi = list(range(1, n + 1))
    rng.shuffle(pi)
    return pi


def valid_placement(rng: random.Random, n: int):
    """Permutation graph with a random subset of its standard drawing pre-placed."""
    pi = random_permutation(rng, n)
    g = graph_from_permutation(pi)
    drawing = drawing_from_permutation(pi)
    keep = [v for v in range(n) if rng.random() < 0.5]
    return pi, g, {v: drawing[v] for v in keep}


def _orders_of(g: Graph, verts: list[int]):
    """All (top, bottom) orderings of ``verts`` whose crossings realise ``g`` on them."""
    for top in itertools.permutations(verts):
        tpos = {v: i for i, v in enumerate(top)}
        for bot in itertools.permutations(verts):
            bpos = {v: i for i, v in enumerate(bot)}
            if all(
                ((tpos[u] - tpos[v]) * (bpos[u] - bpos[v]) < 0) == g.has_edge(u, v)
                for u, v in itertools.combinations(verts, 2)
            ):
                yield tpos, bpos


def adversarial_placement(rng: random.Random, n: int):
    """Permutation graph with a placed subset drawn in a random alternative way.

    The placed segments realise the induced subgraph correctly, so the input
    is valid, but the chosen drawing need not extend to the whole graph.
    """
    pi = random_permutation(rng, n)
    g = graph_from_permutation(pi)
    k = rng.randint(2, min(4, n - 1))
    verts = sorted(rng.sample(range(n), k))
    choice = rng.choice(list(_orders_of(g, verts)))
    tpos, bpos = choice
    placed = {v: (F(2 * tpos[v] + 1), F(2 * bpos[v] + 1)) for v in verts}
    assert all(
        segments_cross(placed[u], placed[v]) == g.has_edge(u, v) for u, v in itertools.combinations(verts, 2)
    )
    return pi, g, placed


def random_region(rng: random.Random, pool: list[PartialPLF]) -> Region:
    pinned = rng.choice(pool) if rng.random() < 0.3 else None
    above = [rng.choice(pool) for _ in range(rng.randint(0, 2))]
    below = [rng.choice(pool) for _ in range(rng.randint(0, 2))]
    return make_region(pinned, above, below)


def random_region_pair(rng: random.Random) -> tuple[Region, Region]:
    full = rng.random() < 0.5
    pool = [random_plf(rng, full, height=4) for _ in range(4)]
    return random_region(rng, pool), random_region(rng, pool)


def touching_region_pair(rng: random.Random) -> tuple[Region, Region]:
    """Two regions that share boundary but no interior or pinned point.

    Either the open regions on both sides of one curve, or a pinned curve
    lying exactly on the open boundary of the other region.
    """
    # full curves only: outside a partial curve's domain both regions are unconstrained
    f = random_plf(rng, True, height=4)
    if rng.random() < 0.5:
        return make_region(None, [f], []), make_region(None, [], [f])
    if rng.random() < 0.5:
        return make_region(f, [], []), make_region(None, [f], [])
    return make_region(None, [], [f]), make_region(f, [], [])


def random_cnf2(rng: random.Random, max_vars: int = 15) -> tuple[int, list[tuple[tuple[int, bool], ...]]]:
    """A random 2-CNF (clauses of one or two literals) near the satisfiability threshold."""
    nv = rng.randint(1, max_vars)
    m = rng.randint(0, 2 * nv + 2)
    clauses = []
    for _ in range(m):
        size = 1 if rng.random() < 0.1 else 2
        clauses.append(tuple((rng.randrange(nv), rng.random() < 0.5) for _ in range(size)))
    return nv, clauses


def sparse_comparability_graph(rng: random.Random, blocks: int = 200, size: int = 10, density: float = 0.45):
    """Disjoint union of random comparability graphs, plus a preset orientation.

    The preset arcs are a random sample of a transitive orientation, so the
    instance is extendable.
    """
    edges, arcs = [], []
    for b in range(blocks):
        p = random_poset(rng, size, density)
        off = b * size
        for u, v in p.arcs():
            edges.append((u + off, v + off))
            if rng.random() < 0.05:
                arcs.append((u + off, v + off))
    g = Graph(blocks * size, edges)
    return g, PartialOrientation(g, arcs)


def all_three_clauses(num_vars: int = 3) -> list[tuple[int, int, int]]:
    """Every clause of three distinct literals, in DIMACS form (``x`` and ``-x`` may share a clause)."""
    lits = [s * v for v in range(1, num_vars + 1) for s in (1, -1)]
    return list(itertools.combinations(lits, 3))


def all_sign_formula(num_vars: int = 3) -> list[tuple[int, ...]]:
    """The unsatisfiable formula holding every sign pattern over the first three variables."""
    return [tuple(s * v for s, v in zip(signs, (1, 2, 3))) for signs in itertools.product((1, -1), repeat=3)]


def gadget_corpus(num_vars: int = 3, max_clauses: int = 3) -> list[list[tuple[int, ...]]]:
    """All formulas of 2..max_clauses distinct clauses, plus the all-sign unsatisfiable one.

    The gadget needs at least two clauses, so single-clause formulas are left out.
    """
    clauses = all_three_clauses(num_vars)
    out = [list(c) for m in range(2, max_clauses + 1) for c in itertools.combinations(clauses, m)]
    out.append(all_sign_formula(num_vars))
    return out
