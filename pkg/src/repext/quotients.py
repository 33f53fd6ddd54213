"""Orientations assembled node by node over a modular decomposition tree.

Every transitive orientation of a graph is obtained by choosing, for each
internal node, a transitive orientation of its quotient (a linear order of the
children for serial nodes, one of two orientations for prime nodes, nothing
for parallel ones); the direction of an edge is read at the deepest node that
contains both endpoints.  Quotient orientations are stored as :class:`Poset`
objects on child indices.
"""

from __future__ import annotations

import itertools
from collections.abc import Iterator, Mapping

from repext.graph import Graph, InvalidInstance, Poset
from repext.mdtree import PARALLEL, PRIME, SERIAL, MDNode, prime_orientations, quotient_graph
from repext.plf import PartialPLF, overlap, strictly_below


class TreeIndex:
    """Root-to-leaf paths of a decomposition tree, for lowest-common-node queries."""

    def __init__(self, root: MDNode):
        self.root = root
        self.nodes: list[MDNode] = list(root.walk())
        self.index = {id(nd): k for k, nd in enumerate(self.nodes)}
        self.parent: dict[int, int] = {}
        # path[v] = [(node index, child index taken), ...] from the root down to v's leaf
        self.path: dict[int, list[tuple[int, int]]] = {}
        stack = [(root, [])]
        while stack:
            node, trail = stack.pop()
            k = self.index[id(node)]
            if node.is_leaf:
                self.path[node.min_vertex] = trail
                continue
            for i, c in enumerate(node.children):
                self.parent[self.index[id(c)]] = k
                stack.append((c, trail + [(k, i)]))

    def lca(self, u: int, v: int) -> tuple[int, int, int]:
        """``(node index, child index of u, child index of v)`` at the deepest common node."""
        pu, pv = self.path[u], self.path[v]
        for (ku, iu), (kv, iv) in zip(pu, pv):
            if iu != iv:
                return ku, iu, iv
        raise ValueError(f"vertices {u} and {v} share a leaf")

    def leaf_parent(self, v: int) -> int:
        return self.path[v][-1][0]

    def node(self, k: int) -> MDNode:
        return self.nodes[k]


def trivial_orientation(node: MDNode, g: Graph) -> Poset:
    """Serial: children in index order; prime: first orientation; parallel: empty."""
    if node.kind == SERIAL:
        return linear_quotient(range(len(node.children)))
    if node.kind == PRIME:
        return prime_orientations(node, g)[0]
    return Poset(Graph(len(node.children)), ())


def linear_quotient(order) -> Poset:
    """Complete quotient oriented along ``order`` (a sequence of child indices)."""
    order = list(order)
    k = len(order)
    arcs = [(order[i], order[j]) for i in range(k) for j in range(i + 1, k)]
    return Poset(Graph(k, arcs), arcs, check=False)


def curve_constraints(
    tree: TreeIndex, g: Graph, rep: Mapping[int, PartialPLF], vertices=None
) -> dict[int, set[tuple[int, int]]]:
    """Child-level order constraints per node from adjacent represented pairs.

    A pair ``a, b`` with ``rep[a]`` strictly under ``rep[b]`` on a non-empty
    common domain demands ``child(a) < child(b)`` at their lowest common
    node; a crossing pair demands both directions (no orientation respects it).
    """
    out: dict[int, set[tuple[int, int]]] = {}
    keep = None if vertices is None else set(vertices)
    for a, b in g.edges:
        if keep is not None and (a not in keep or b not in keep):
            continue
        fa, fb = rep.get(a), rep.get(b)
        if fa is None or fb is None or overlap(fa, fb) is None:
            continue
        k, ia, ib = tree.lca(a, b)
        cons = out.setdefault(k, set())
        if strictly_below(fa, fb):
            cons.add((ia, ib))
        elif strictly_below(fb, fa):
            cons.add((ib, ia))
        else:
            cons.add((ia, ib))
            cons.add((ib, ia))
    return out


def _linear_extensions(k: int, cons: set[tuple[int, int]]) -> Iterator[list[int]]:
    preds = [set() for _ in range(k)]
    for i, j in cons:
        preds[j].add(i)
    order: list[int] = []
    placed = [False] * k

    def rec():
        if len(order) == k:
            yield list(order)
            return
        for c in range(k):
            if not placed[c] and all(placed[p] for p in preds[c]):
                placed[c] = True
                order.append(c)
                yield from rec()
                order.pop()
                placed[c] = False

    yield from rec()


def candidate_orientations(node: MDNode, g: Graph, cons: set[tuple[int, int]]) -> Iterator[Poset]:
    """Quotient orientations of ``node`` satisfying the child-level constraints.

    Serial nodes yield linear orders lexicographically by child index; prime
    nodes yield the orientation found by forcing, then its reverse.
    """
    if node.kind == PARALLEL:
        yield Poset(Graph(len(node.children)), ())
        return
    if node.kind == SERIAL:
        for order in _linear_extensions(len(node.children), cons):
            yield linear_quotient(order)
        return
    if node.kind == PRIME:
        for q in prime_orientations(node, g):
            if all(q.less(i, j) for i, j in cons):
                yield q
        return
    raise InvalidInstance(f"no quotient orientations for a {node.kind} node")


def first_candidates(node: MDNode, g: Graph, cons: set[tuple[int, int]], limit: int) -> list[Poset]:
    return list(itertools.islice(candidate_orientations(node, g, cons), limit))


def compose(g: Graph, tree: TreeIndex, choice: Mapping[int, Poset], vertices=None) -> Poset:
    """Orientation of ``g`` (or of its subgraph on ``vertices``) from per-node choices.

    Nodes missing from ``choice`` use :func:`trivial_orientation`.
    """
    keep = None if vertices is None else set(vertices)
    cache: dict[int, Poset] = dict(choice)
    arcs = []
    edges = []
    for a, b in g.edges:
        if keep is not None and (a not in keep or b not in keep):
            continue
        k, ia, ib = tree.lca(a, b)
        q = cache.get(k)
        if q is None:
            q = cache[k] = trivial_orientation(tree.node(k), g)
        edges.append((a, b))
        arcs.append((a, b) if q.less(ia, ib) else (b, a))
    if keep is None:
        return Poset(g, arcs)
    return Poset(Graph(g.n, edges), arcs)
