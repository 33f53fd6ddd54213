"""Small hand-built instances used by the tests, the CLI and the README."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from repext.graph import Graph, PartialOrientation, Poset
from repext.plf import PLF

F = Fraction


@dataclass(frozen=True)
class NamedInstance:
    graph: Graph
    rep: dict[int, PLF]
    labels: dict[int, str]
    partial: PartialOrientation | None = None
    poset: Poset | None = None


def blocked_vertex_instance() -> NamedInstance:
    """Two crossing bumps a, c over a floor d and a constant b; u cannot be drawn.

    The comparability graph has edges ad, au, bd, cd, cu.  A curve for ``u``
    would have to avoid both bumps yet meet the floor and the constant, which
    no continuous function can do.  The orientation d<a, d<b, d<c alone does
    extend to a transitive orientation, so the obstruction is geometric.
    """
    a, b, c, d, u = range(5)
    g = Graph(5, [(a, d), (a, u), (b, d), (c, d), (c, u)])
    rep = {
        d: PLF.constant(0),
        a: PLF([(0, 10), (F(1, 2), 2), (1, 10)]),
        c: PLF([(0, 2), (F(1, 2), 10), (1, 2)]),
        b: PLF.constant(7),
    }
    partial = PartialOrientation(g, [(d, a), (d, b), (d, c)])
    return NamedInstance(g, rep, dict(zip(range(5), "abcdu")), partial=partial)


def shaded_region_instance() -> NamedInstance:
    """Six-element poset with four curves; v is squeezed between a, b below and c above."""
    a, b, c, d, u, v = range(6)
    p = Poset.from_relations(6, [(a, d), (b, d), (a, c), (b, c), (a, v), (b, v), (v, c), (b, u)])
    rep = {
        a: PLF([(0, F(29, 5)), (F(1, 4), F(19, 5)), (F(4, 5), F(74, 5)), (1, F(59, 5))]),
        b: PLF([(0, F(44, 5)), (F(1, 4), F(59, 5)), (F(4, 5), F(24, 5)), (1, F(34, 5))]),
        d: PLF([(0, F(84, 5)), (F(5, 8), F(123, 5)), (1, F(94, 5))]),
        c: PLF([(0, F(114, 5)), (F(1, 4), F(84, 5)), (1, F(124, 5))]),
    }
    return NamedInstance(p.graph, rep, dict(zip(range(6), "abcduv")), poset=p)
