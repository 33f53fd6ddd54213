"""Extending partial segment drawings of permutation graphs.

Vertices are segments between a top line and a bottom line, given by their
two endpoint abscissae ``(top, bottom)``; two segments cross iff their
endpoints appear in opposite orders on the two lines.  The left-to-right top
order orients the graph and its complement at once; the drawing extends iff
both partial orientations extend transitively.
"""

from __future__ import annotations

from collections.abc import Mapping, Sequence
from fractions import Fraction

from repext.checker import check_segments, segments_cross
from repext.graph import Graph, InvalidInstance, PartialOrientation, complement
from repext.orient import orient_ext
from repext.plf import as_rational

Segment = tuple[Fraction, Fraction]


def graph_from_permutation(pi: Sequence[int]) -> Graph:
    """Inversion graph of a permutation of ``1..n`` (vertex ``i`` is position ``i+1``)."""
    n = len(pi)
    if sorted(pi) != list(range(1, n + 1)):
        raise InvalidInstance(f"{list(pi)} is not a permutation of 1..{n}")
    return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n) if pi[i] > pi[j]])


def drawing_from_permutation(pi: Sequence[int]) -> dict[int, Segment]:
    """The standard drawing: top endpoint at the position, bottom at the value."""
    graph_from_permutation(pi)
    return {i: (Fraction(i + 1), Fraction(v)) for i, v in enumerate(pi)}


def validate_segments(g: Graph, placed: Mapping[int, Segment]) -> list[str]:
    out = []
    for v in placed:
        if not 0 <= v < g.n:
            out.append(f"vertex {v} out of range for n={g.n}")
    if out:
        return out
    tops = [s[0] for s in placed.values()]
    bots = [s[1] for s in placed.values()]
    if len(set(tops)) != len(tops):
        out.append("placed top endpoints are not distinct")
    if len(set(bots)) != len(bots):
        out.append("placed bottom endpoints are not distinct")
    verts = sorted(placed)
    for i, u in enumerate(verts):
        for v in verts[i + 1 :]:
            if segments_cross(placed[u], placed[v]) != g.has_edge(u, v):
                kind = "edge" if g.has_edge(u, v) else "non-edge"
                out.append(f"placed {kind} {u}-{v}: crossing disagrees with adjacency")
    return out


def derive_dual_orientations(g: Graph, placed: Mapping[int, Segment]) -> tuple[PartialOrientation, PartialOrientation, Graph]:
    """Partial orientations of ``g`` and of its complement read off the top order.

    Returns ``(on g, on complement, complement graph)``.
    """
    problems = validate_segments(g, placed)
    if problems:
        raise InvalidInstance(problems[0])
    co = complement(g)
    verts = sorted(placed, key=lambda v: placed[v][0])
    e1, e2 = [], []
    for i, u in enumerate(verts):
        for v in verts[i + 1 :]:
            (e1 if g.has_edge(u, v) else e2).append((u, v))
    return PartialOrientation(g, e1), PartialOrientation(co, e2), co


def _total_order(n: int, less) -> list[int]:
    """Sort ``0..n-1`` by a strict total order given as a predicate; asserts totality."""
    order = sorted(range(n), key=lambda v: sum(1 for u in range(n) if less(u, v)))
    for i in range(n - 1):
        if not less(order[i], order[i + 1]):
            raise AssertionError("combined orientation is not a linear order")
    return order


def _place(order: list[int], fixed: Mapping[int, Fraction]) -> dict[int, Fraction]:
    """Coordinates for ``order`` keeping ``fixed`` ones and filling gaps evenly."""
    pos = dict(fixed)
    anchors = [i for i, v in enumerate(order) if v in fixed]
    if not anchors:
        return {v: Fraction(i + 1) for i, v in enumerate(order)}
    first, last = anchors[0], anchors[-1]
    for i in range(first):
        pos[order[i]] = fixed[order[first]] - (first - i)
    for i in range(last + 1, len(order)):
        pos[order[i]] = fixed[order[last]] + (i - last)
    for a, b in zip(anchors, anchors[1:]):
        lo, hi = fixed[order[a]], fixed[order[b]]
        k = b - a
        for i in range(a + 1, b):
            pos[order[i]] = lo + (hi - lo) * (i - a) / k
    return pos


def rep_ext_perm(g: Graph, placed: Mapping[int, Segment]) -> dict[int, Segment] | None:
    """A full segment drawing of ``g`` extending ``placed``, or None if none exists."""
    placed = {int(v): (as_rational(t), as_rational(b)) for v, (t, b) in placed.items()}
    p1, p2, co = derive_dual_orientations(g, placed)
    o1 = orient_ext(g, p1)
    if o1 is None:
        return None
    o2 = orient_ext(co, p2)
    if o2 is None:
        return None
    n = g.n
    top = _total_order(n, lambda u, v: o1.less(u, v) if g.has_edge(u, v) else o2.less(u, v))
    bottom = _total_order(n, lambda u, v: o1.less(v, u) if g.has_edge(u, v) else o2.less(u, v))
    tpos = _place(top, {v: s[0] for v, s in placed.items()})
    bpos = _place(bottom, {v: s[1] for v, s in placed.items()})
    out = {v: (tpos[v], bpos[v]) for v in range(n)}
    bad = check_segments(g, out, placed)
    if bad:
        raise RuntimeError(f"constructed drawing fails the checker: {bad[0]}")
    return out


def segments_to_json(segs: Mapping[int, Segment]) -> dict[str, list[str]]:
    return {str(v): [str(t), str(b)] for v, (t, b) in sorted(segs.items())}


def segments_from_json(data) -> dict[int, Segment]:
    if not isinstance(data, dict):
        raise InvalidInstance("segment JSON must be an object")
    out = {}
    for key, pair in data.items():
        try:
            t, b = pair
            out[int(key)] = (as_rational(t), as_rational(b))
        except (TypeError, ValueError) as exc:
            if isinstance(exc, InvalidInstance):
                raise
            raise InvalidInstance(f"bad segment for {key!r}: {exc}") from exc
    return out

