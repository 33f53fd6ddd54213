"""Undirected graphs, partial orientations and posets on dense vertex indices."""

from __future__ import annotations

from collections.abc import Iterable, Iterator, Mapping
from heapq import heappop, heappush

import numpy as np


class InvalidInstance(ValueError):
    """Raised when an input violates the structural contract of an operation."""


def edge_key(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


class Graph:
    """Simple undirected graph on vertices ``0..n-1``.

    Edges are kept in input order (normalized so that ``u < v``); the order
    matters to the orientation algorithms, which process edges in that order.
    """

    __slots__ = ("n", "edges", "_adj", "_nbrs", "_index", "_karr")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise InvalidInstance(f"negative vertex count {n}")
        seen: dict[tuple[int, int], int] = {}
        for u, v in edges:
            u, v = int(u), int(v)
            if not (0 <= u < n and 0 <= v < n):
                raise InvalidInstance(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise InvalidInstance(f"self-loop at {u}")
            key = edge_key(u, v)
            if key in seen:
                raise InvalidInstance(f"duplicate edge {key}")
            seen[key] = len(seen)
        self.n = n
        self.edges: tuple[tuple[int, int], ...] = tuple(seen)
        self._index = seen
        adj = np.zeros((n, n), dtype=bool)
        nbrs: list[list[int]] = [[] for _ in range(n)]
        for u, v in self.edges:
            adj[u, v] = adj[v, u] = True
            nbrs[u].append(v)
            nbrs[v].append(u)
        adj.setflags(write=False)
        self._adj = adj
        self._nbrs = tuple(tuple(sorted(a)) for a in nbrs)
        self._karr = None

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def adjacency(self) -> np.ndarray:
        """Read-only boolean adjacency matrix."""
        return self._adj

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self._adj[u, v])

    def neighbors(self, u: int) -> tuple[int, ...]:
        return self._nbrs[u]

    def degree(self, u: int) -> int:
        return len(self._nbrs[u])

    def max_degree(self) -> int:
        return max((len(a) for a in self._nbrs), default=0)

    def edge_index(self, u: int, v: int) -> int:
        return self._index[edge_key(u, v)]

    def kernel_arrays(self) -> tuple[np.ndarray, ...]:
        """``(indptr, indices, eid, eu, ev)`` for the orientation kernels (cached)."""
        if self._karr is None:
            from repext._kernels import edge_arrays

            self._karr = edge_arrays(self.n, self.edges)
        return self._karr

    def non_edges(self) -> Iterator[tuple[int, int]]:
        for u in range(self.n):
            for v in range(u + 1, self.n):
                if not self._adj[u, v]:
                    yield (u, v)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and set(self.edges) == set(other.edges)

    def __hash__(self) -> int:
        return hash((self.n, frozenset(self.edges)))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"

    def to_json(self) -> dict:
        return {"n": self.n, "edges": [list(e) for e in self.edges]}

    @classmethod
    def from_json(cls, data: Mapping) -> Graph:
        try:
            return cls(int(data["n"]), [tuple(e) for e in data.get("edges", [])])
        except (KeyError, TypeError, ValueError) as exc:
            if isinstance(exc, InvalidInstance):
                raise
            raise InvalidInstance(f"malformed graph JSON: {exc}") from exc

    @classmethod
    def from_adjacency(cls, adj: np.ndarray) -> Graph:
        n = adj.shape[0]
        us, vs = np.nonzero(np.triu(adj, 1))
        return cls(n, zip(us.tolist(), vs.tolist()))


def complete_graph(n: int) -> Graph:
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def path_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complement(g: Graph) -> Graph:
    return Graph(g.n, list(g.non_edges()))


def induced_subgraph(g: Graph, s: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """Return ``G[s]`` relabelled to ``0..|s|-1`` (ascending) and the old->new map."""
    verts = sorted(set(s))
    for v in verts:
        if not 0 <= v < g.n:
            raise InvalidInstance(f"vertex {v} out of range for n={g.n}")
    relabel = {v: i for i, v in enumerate(verts)}
    edges = [(relabel[u], relabel[v]) for u, v in g.edges if u in relabel and v in relabel]
    return Graph(len(verts), edges), relabel


class PartialOrientation:
    """Directions for a subset of the edges of a graph.

    ``directed`` maps the normalized edge ``(min, max)`` to the ordered pair
    ``(tail, head)``; insertion order is preserved.
    """

    __slots__ = ("graph", "directed")

    def __init__(self, graph: Graph, arcs: Iterable[tuple[int, int]] = ()):
        self.graph = graph
        directed: dict[tuple[int, int], tuple[int, int]] = {}
        for u, v in arcs:
            u, v = int(u), int(v)
            if not (0 <= u < graph.n and 0 <= v < graph.n) or not graph.has_edge(u, v):
                raise InvalidInstance(f"arc {u}->{v} is not an edge of the graph")
            key = edge_key(u, v)
            if key in directed and directed[key] != (u, v):
                raise InvalidInstance(f"edge {key} oriented both ways")
            directed[key] = (u, v)
        self.directed = directed

    def __len__(self) -> int:
        return len(self.directed)

    def arcs(self) -> list[tuple[int, int]]:
        return list(self.directed.values())

    def direction(self, u: int, v: int) -> bool | None:
        """True if ``u -> v``, False if ``v -> u``, None if unoriented."""
        arc = self.directed.get(edge_key(u, v))
        if arc is None:
            return None
        return arc == (u, v)

    def is_complete(self) -> bool:
        return len(self.directed) == self.graph.m

    def reversed(self) -> PartialOrientation:
        return type(self)(self.graph, [(v, u) for u, v in self.directed.values()])

    def extends(self, other: PartialOrientation) -> bool:
        return all(self.directed.get(k) == arc for k, arc in other.directed.items())

    def to_json(self) -> dict:
        return {"directed": [list(a) for a in self.directed.values()]}

    @classmethod
    def from_json(cls, graph: Graph, data: Mapping) -> PartialOrientation:
        try:
            arcs = [tuple(a) for a in data.get("directed", [])]
        except TypeError as exc:
            raise InvalidInstance(f"malformed orientation JSON: {exc}") from exc
        return cls(graph, arcs)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PartialOrientation):
            return NotImplemented
        return self.graph == other.graph and set(self.directed.values()) == set(other.directed.values())

    def __hash__(self) -> int:
        return hash(frozenset(self.directed.values()))

    def __repr__(self) -> str:
        return f"{type(self).__name__}({len(self.directed)}/{self.graph.m} arcs)"


def _arc_matrix(o: PartialOrientation) -> np.ndarray:
    d = np.zeros((o.graph.n, o.graph.n), dtype=bool)
    for u, v in o.directed.values():
        d[u, v] = True
    return d


def is_transitive(o: PartialOrientation) -> bool:
    """Whether a complete orientation satisfies ``u->v, v->w => u->w``."""
    if not o.is_complete():
        raise InvalidInstance("is_transitive needs every edge oriented")
    from repext._kernels import transitivity_violation

    n = o.graph.n
    heads: list[list[int]] = [[] for _ in range(n)]
    for u, v in o.directed.values():
        heads[u].append(v)
    indptr = np.zeros(n + 1, dtype=np.int64)
    indptr[1:] = np.cumsum([len(h) for h in heads])
    indices = np.fromiter((w for h in heads for w in h), dtype=np.int64, count=int(indptr[-1]))
    return transitivity_violation(indptr, indices, _arc_matrix(o)) < 0


class Poset(PartialOrientation):
    """A transitive orientation of every edge of its graph.

    ``u <_P v`` holds iff the edge ``uv`` is oriented ``u -> v``.
    """

    __slots__ = ("_less",)

    def __init__(self, graph: Graph, arcs: Iterable[tuple[int, int]] = (), check: bool = True):
        super().__init__(graph, arcs)
        if not self.is_complete():
            raise InvalidInstance("a poset must orient every edge")
        if check and not is_transitive(self):
            raise InvalidInstance("orientation is not transitive")
        less = _arc_matrix(self)
        less.setflags(write=False)
        self._less = less

    @classmethod
    def from_relations(cls, n: int, pairs: Iterable[tuple[int, int]]) -> Poset:
        """Build a poset from ``u < v`` pairs, closing them transitively."""
        less = np.zeros((n, n), dtype=bool)
        for u, v in pairs:
            less[u, v] = True
        for k in range(n):
            less |= np.outer(less[:, k], less[k, :])
        if np.any(np.diag(less)):
            raise InvalidInstance("relations contain a cycle")
        us, vs = np.nonzero(less)
        g = Graph(n, [(int(u), int(v)) for u, v in zip(us, vs)])
        return cls(g, [(int(u), int(v)) for u, v in zip(us, vs)], check=False)

    @property
    def n(self) -> int:
        return self.graph.n

    @property
    def less_matrix(self) -> np.ndarray:
        return self._less

    def less(self, u: int, v: int) -> bool:
        return bool(self._less[u, v])

    def comparable(self, u: int, v: int) -> bool:
        return bool(self._less[u, v] or self._less[v, u])

    def below(self, u: int) -> list[int]:
        return np.flatnonzero(self._less[:, u]).tolist()

    def above(self, u: int) -> list[int]:
        return np.flatnonzero(self._less[u, :]).tolist()

    def incomparable_pairs(self) -> Iterator[tuple[int, int]]:
        return self.graph.non_edges()

    def topological_order(self, vertices: Iterable[int] | None = None) -> list[int]:
        """Topological order of the induced subposet, smallest index first among ties."""
        verts = sorted(set(range(self.n) if vertices is None else vertices))
        sub = self._less[np.ix_(verts, verts)]
        indeg = sub.sum(axis=0).tolist()
        heap = [i for i, d in enumerate(indeg) if d == 0]
        order = []
        while heap:
            i = heappop(heap)
            order.append(verts[i])
            for j in np.flatnonzero(sub[i]).tolist():
                indeg[j] -= 1
                if indeg[j] == 0:
                    heappush(heap, j)
        return order

    def reversed(self) -> Poset:
        return Poset(self.graph, [(v, u) for u, v in self.directed.values()], check=False)
