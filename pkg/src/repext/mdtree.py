"""Modular decomposition by a direct polynomial method.

A node whose graph is disconnected is parallel (children = components), one
whose complement is disconnected is serial (children = co-components), and
otherwise it is prime; the children of a prime node are its maximal strong
modules, found by growing each vertex's module with distinguishing vertices.
Children are ordered by their smallest vertex.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator
from dataclasses import dataclass, field

import numpy as np

from repext.graph import Graph, InvalidInstance, Poset
from repext.orient import orient_ext

LEAF = "leaf"
PARALLEL = "parallel"
SERIAL = "serial"
PRIME = "prime"


@dataclass(frozen=True, eq=False)
class MDNode:
    vertices: frozenset[int]
    kind: str
    children: tuple[MDNode, ...] = field(default=())

    @property
    def is_leaf(self) -> bool:
        return self.kind == LEAF

    @property
    def min_vertex(self) -> int:
        return min(self.vertices)

    def walk(self) -> Iterator[MDNode]:
        """Pre-order traversal."""
        stack = [self]
        while stack:
            node = stack.pop()
            yield node
            stack.extend(reversed(node.children))

    def size(self) -> int:
        return sum(1 for _ in self.walk())

    def child_of(self, v: int) -> int:
        """Index of the child containing ``v``."""
        for i, c in enumerate(self.children):
            if v in c.vertices:
                return i
        raise KeyError(v)

    def signature(self) -> tuple:
        """Hashable canonical form, for comparing trees."""
        return (self.kind, tuple(sorted(self.vertices)), tuple(c.signature() for c in self.children))

    def to_json(self) -> dict:
        if self.is_leaf:
            return {"kind": LEAF, "vertex": self.min_vertex}
        return {"kind": self.kind, "vertices": sorted(self.vertices), "children": [c.to_json() for c in self.children]}

    def pretty(self, indent: int = 0) -> str:
        pad = "  " * indent
        if self.is_leaf:
            return f"{pad}leaf {self.min_vertex}"
        lines = [f"{pad}{self.kind} {sorted(self.vertices)}"]
        lines.extend(c.pretty(indent + 1) for c in self.children)
        return "\n".join(lines)


def leaf(v: int) -> MDNode:
    return MDNode(frozenset([v]), LEAF)


def is_module(g: Graph, s: Iterable[int]) -> bool:
    s = sorted(set(s))
    if not s:
        return True
    adj = g.adjacency
    inside = np.zeros(g.n, dtype=bool)
    inside[s] = True
    rows = adj[s][:, ~inside]
    return bool(np.all(rows == rows[0]))


def _components(adj: np.ndarray, verts: list[int]) -> list[list[int]]:
    """Connected components of the graph ``adj`` induced on ``verts``."""
    left = set(verts)
    comps = []
    for v in verts:
        if v not in left:
            continue
        left.discard(v)
        comp, stack = [v], [v]
        while stack:
            x = stack.pop()
            for w in np.flatnonzero(adj[x]).tolist():
                if w in left:
                    left.discard(w)
                    comp.append(w)
                    stack.append(w)
        comps.append(sorted(comp))
    return comps


def _module_closure(adj: np.ndarray, verts: np.ndarray, seed: set[int]) -> set[int]:
    """Smallest module of the induced graph on ``verts`` containing ``seed``."""
    mod = set(seed)
    while True:
        inside = np.array([v in mod for v in verts.tolist()])
        members = verts[inside]
        outside = verts[~inside]
        if outside.size == 0:
            return mod
        rows = adj[np.ix_(members, outside)]
        split = np.any(rows != rows[0], axis=0)
        if not split.any():
            return mod
        mod.update(outside[split].tolist())


def _maximal_strong_modules(adj: np.ndarray, verts: list[int]) -> list[list[int]]:
    """Maximal proper modules of a prime-type (connected, co-connected) induced graph.

    For such a graph the maximal proper modules are strong and partition the
    vertex set; each is found by greedily absorbing vertices that keep the
    closure proper.
    """
    full = set(verts)
    arr = np.array(verts, dtype=np.int64)
    assigned: dict[int, int] = {}
    parts: list[list[int]] = []
    for v in verts:
        if v in assigned:
            continue
        mod = {v}
        for w in verts:
            if w in mod:
                continue
            cand = _module_closure(adj, arr, mod | {w})
            if cand != full:
                mod = cand
        for x in mod:
            assigned[x] = len(parts)
        parts.append(sorted(mod))
    return parts


def _decompose(adj: np.ndarray, cadj: np.ndarray, verts: list[int]) -> MDNode:
    if len(verts) == 1:
        return leaf(verts[0])
    comps = _components(adj, verts)
    if len(comps) > 1:
        kind, parts = PARALLEL, comps
    else:
        co = _components(cadj, verts)
        if len(co) > 1:
            kind, parts = SERIAL, co
        else:
            kind, parts = PRIME, _maximal_strong_modules(adj, verts)
    children = sorted((_decompose(adj, cadj, p) for p in parts), key=lambda c: c.min_vertex)
    return MDNode(frozenset(verts), kind, tuple(children))


def modular_decomposition(g: Graph) -> MDNode:
    if g.n < 1:
        raise InvalidInstance("modular decomposition needs at least one vertex")
    adj = np.asarray(g.adjacency)
    cadj = ~adj
    np.fill_diagonal(cadj, False)
    return _decompose(adj, cadj, list(range(g.n)))


def quotient_graph(node: MDNode, g: Graph) -> Graph:
    """Graph on the children of ``node`` (indexed in child order)."""
    reps = [c.min_vertex for c in node.children]
    k = len(reps)
    return Graph(k, [(i, j) for i in range(k) for j in range(i + 1, k) if g.has_edge(reps[i], reps[j])])


def prime_orientations(node: MDNode, g: Graph) -> tuple[Poset, Poset]:
    """The two transitive orientations of a prime node's quotient."""
    if node.kind != PRIME:
        raise InvalidInstance(f"prime_orientations called on a {node.kind} node")
    q = quotient_graph(node, g)
    o = orient_ext(q)
    if o is None:
        raise InvalidInstance("quotient of a prime node is not a comparability graph")
    return o, o.reversed()


def parent_map(root: MDNode) -> dict[int, MDNode]:
    """Map from ``id(node)`` to its parent node."""
    out = {}
    for node in root.walk():
        for c in node.children:
            out[id(c)] = node
    return out


def lowest_common_node(root: MDNode, u: int, v: int) -> MDNode:
    """Deepest node containing both ``u`` and ``v``."""
    node = root
    while True:
        for c in node.children:
            if u in c.vertices and v in c.vertices:
                node = c
                break
        else:
            return node
