"""Transitive orientation by forcing: propagation, partial-orientation extension
and exhaustive enumeration.

Two forcing rules are closed over every newly oriented arc ``a -> b``:

* transitivity: ``a -> b`` and ``b -> w`` force ``a -> w`` (and symmetrically
  ``w -> a`` forces ``w -> b``);
* Gamma: ``a -> b``, ``bw`` an edge and ``aw`` not an edge force ``w -> b``;
  at the tail, ``aw`` an edge and ``bw`` not an edge force ``a -> w``.
"""

from __future__ import annotations

from collections.abc import Iterator
from dataclasses import dataclass, field

import numpy as np

from repext import _kernels as K
from repext.graph import Graph, InvalidInstance, PartialOrientation, Poset, edge_key

DEFAULT_ENUM_CAP = 12


@dataclass(frozen=True)
class Conflict:
    """An edge that would have to be oriented both ways.

    ``edge`` is the normalized edge, ``wanted`` the arc the forcing demanded,
    ``forced_by`` the arc whose processing demanded it, and ``trace`` the chain
    of arcs from a free choice or preset arc down to ``forced_by``.
    """

    edge: tuple[int, int]
    wanted: tuple[int, int]
    forced_by: tuple[int, int] | None
    trace: tuple[tuple[int, int], ...] = field(default=())
    preset_violated: bool = False

    def describe(self) -> str:
        u, v = self.wanted
        if self.preset_violated:
            chain = " => ".join(f"{a}->{b}" for a, b in self.trace) or "(preset)"
            return f"edge {self.edge} is forced to {v}->{u} against the partial orientation ({chain})"
        chain = " => ".join(f"{a}->{b}" for a, b in self.trace)
        return f"edge {self.edge} forced both ways; wanted {u}->{v} via {chain}"


class ForcingState:
    """Mutable orientation state of a graph plus a work queue of arcs to close."""

    def __init__(self, graph: Graph, arcs=()):
        self.graph = graph
        m = graph.m
        self.orient = np.zeros(m, dtype=np.int8)
        self.cause = np.full(m, K.FREE_CHOICE, dtype=np.int64)
        self.queue = np.zeros(max(m, 1), dtype=np.int64)
        self.head = 0
        self.tail = 0
        for u, v in arcs:
            if not self.orient_arc(u, v):
                raise InvalidInstance(f"edge {edge_key(u, v)} given in both directions")

    def copy(self) -> ForcingState:
        new = object.__new__(ForcingState)
        new.graph = self.graph
        new.orient = self.orient.copy()
        new.cause = self.cause.copy()
        new.queue = self.queue.copy()
        new.head = self.head
        new.tail = self.tail
        return new

    def arc_of(self, e: int, sign: int | None = None) -> tuple[int, int]:
        u, v = self.graph.edges[e]
        sign = self.orient[e] if sign is None else sign
        return (u, v) if sign > 0 else (v, u)

    def direction(self, u: int, v: int) -> bool | None:
        s = self.orient[self.graph.edge_index(u, v)]
        if s == 0:
            return None
        return bool((s > 0) == (u < v))

    def orient_arc(self, u: int, v: int, cause: int = K.PRESET) -> bool:
        """Orient ``u -> v`` and queue it; False if it is already ``v -> u``."""
        if not self.graph.has_edge(u, v):
            raise InvalidInstance(f"{u}->{v} is not an edge")
        e = self.graph.edge_index(u, v)
        s = 1 if u < v else -1
        if self.orient[e] == s:
            return True
        if self.orient[e] == -s:
            return False
        self.orient[e] = s
        self.cause[e] = cause
        self.queue[self.tail] = e
        self.tail += 1
        return True

    def first_unoriented(self) -> int:
        free = np.flatnonzero(self.orient == 0)
        return int(free[0]) if free.size else -1

    def is_complete(self) -> bool:
        return not np.any(self.orient == 0)

    def trace(self, e: int) -> tuple[tuple[int, int], ...]:
        chain = []
        seen = set()
        while e >= 0 and e not in seen:
            seen.add(e)
            chain.append(self.arc_of(e))
            e = int(self.cause[e])
        return tuple(reversed(chain))

    def arcs(self) -> list[tuple[int, int]]:
        return [self.arc_of(e) for e in np.flatnonzero(self.orient).tolist()]

    def to_partial(self) -> PartialOrientation:
        return PartialOrientation(self.graph, self.arcs())

    def to_poset(self) -> Poset:
        return Poset(self.graph, [self.arc_of(e) for e in range(self.graph.m)], check=False)


def propagate(state: ForcingState) -> Conflict | None:
    """Apply both forcing rules until the queue is empty; None means no conflict."""
    indptr, indices, eid, eu, ev = state.graph.kernel_arrays()
    status, x, d, by, tail = K.propagate_queue(
        indptr, indices, eid, eu, ev, state.orient, state.cause, state.queue, state.head, state.tail
    )
    state.head = state.tail = int(tail)
    if status == K.OK:
        return None
    x, by = int(x), int(by)
    return Conflict(
        edge=state.graph.edges[x],
        wanted=state.arc_of(x, int(d)),
        forced_by=state.arc_of(by),
        trace=state.trace(by),
    )


def orient_ext_explain(g: Graph, partial: PartialOrientation | None = None) -> tuple[Poset | None, Conflict | None]:
    """Like :func:`orient_ext` but also returns the conflict that made it fail."""
    if partial is None:
        partial = PartialOrientation(g)
    elif partial.graph is not g and partial.graph != g:
        raise InvalidInstance("partial orientation belongs to a different graph")
    m = g.m
    order = np.empty(m, dtype=np.int64)
    preset = np.zeros(m, dtype=np.int8)
    used = np.zeros(m, dtype=bool)
    i = 0
    for u, v in partial.directed.values():
        e = g.edge_index(u, v)
        order[i] = e
        preset[i] = 1 if u < v else -1
        used[e] = True
        i += 1
    for e in range(m):
        if not used[e]:
            order[i] = e
            i += 1
    state = ForcingState(g)
    indptr, indices, eid, eu, ev = g.kernel_arrays()
    status, x, d, by = K.orient_run(indptr, indices, eid, eu, ev, order, preset, state.orient, state.cause, state.queue)
    if status == K.OK:
        return state.to_poset(), None
    x, by = int(x), int(by)
    if status == K.PRESET_VIOLATED:
        conflict = Conflict(
            edge=g.edges[x],
            wanted=state.arc_of(x, int(d)),
            forced_by=state.arc_of(by) if by >= 0 else None,
            trace=state.trace(x),
            preset_violated=True,
        )
    else:
        conflict = Conflict(edge=g.edges[x], wanted=state.arc_of(x, int(d)), forced_by=state.arc_of(by), trace=state.trace(by))
    return None, conflict


def orient_ext(g: Graph, partial: PartialOrientation | None = None) -> Poset | None:
    """Extend ``partial`` to a transitive orientation of ``g``; None if impossible.

    Pre-oriented edges are processed first (in their given order), then the
    remaining edges in the graph's edge order; a free edge still unoriented
    when reached is oriented from its lower to its higher endpoint.
    """
    poset, _ = orient_ext_explain(g, partial)
    return poset


def is_comparability_graph(g: Graph) -> bool:
    return orient_ext(g) is not None


def enumerate_transitive_orientations(
    g: Graph, respecting: PartialOrientation | None = None, cap: int = DEFAULT_ENUM_CAP
) -> Iterator[Poset]:
    """Yield every transitive orientation of ``g`` extending ``respecting`` once.

    Backtracks over the first unoriented edge (lower->higher branch first),
    closing each branch under the forcing rules; refuses graphs above ``cap``
    vertices.
    """
    if g.n > cap:
        raise InvalidInstance(f"enumeration refused: n={g.n} exceeds cap {cap}")
    root = ForcingState(g)
    if respecting is not None:
        for u, v in respecting.directed.values():
            if not root.orient_arc(u, v):
                return
    if propagate(root) is not None:
        return
    stack = [root]
    while stack:
        state = stack.pop()
        e = state.first_unoriented()
        if e < 0:
            yield state.to_poset()
            continue
        u, v = g.edges[e]
        branches = []
        for a, b in ((u, v), (v, u)):
            child = state.copy()
            child.orient_arc(a, b, cause=K.FREE_CHOICE)
            if propagate(child) is None:
                branches.append(child)
        stack.extend(reversed(branches))


def count_transitive_orientations(g: Graph, respecting: PartialOrientation | None = None, cap: int = DEFAULT_ENUM_CAP) -> int:
    return sum(1 for _ in enumerate_transitive_orientations(g, respecting, cap))
