"""Independent audits of constructed representations.

Each checker returns a list of human-readable violations; an empty list means
the representation is valid.
"""

from __future__ import annotations

from collections.abc import Mapping
from fractions import Fraction

from repext.graph import Graph, Poset
from repext.plf import PartialPLF, curves_intersect, extends, strictly_below


def _extension_violations(psi: Mapping[int, PartialPLF], rep: Mapping[int, PartialPLF] | None) -> list[str]:
    out = []
    for v, f in (rep or {}).items():
        if v not in psi:
            out.append(f"vertex {v}: missing from the representation")
        elif not extends(psi[v], f):
            out.append(f"vertex {v}: does not extend the given curve")
    return out


def _missing(n: int, psi: Mapping[int, PartialPLF]) -> list[str]:
    out = []
    for v in range(n):
        if v not in psi:
            out.append(f"vertex {v}: no curve")
        elif not psi[v].is_full:
            out.append(f"vertex {v}: curve not defined on [0, 1]")
    return out


def check_representation(g: Graph, psi: Mapping[int, PartialPLF], rep: Mapping[int, PartialPLF] | None = None) -> list[str]:
    """Audit ``psi`` as a function representation of the complement of ``g``.

    Adjacent vertices of ``g`` must have strictly ordered curves, non-adjacent
    ones intersecting curves, and ``psi`` must extend ``rep``.
    """
    out = _missing(g.n, psi) + _extension_violations(psi, rep)
    if out:
        return out
    for u in range(g.n):
        for v in range(u + 1, g.n):
            ordered = strictly_below(psi[u], psi[v]) or strictly_below(psi[v], psi[u])
            if g.has_edge(u, v) and not ordered:
                out.append(f"edge {u}-{v}: curves are not strictly ordered")
            elif not g.has_edge(u, v) and curves_intersect(psi[u], psi[v]) is None:
                out.append(f"non-edge {u}-{v}: curves do not intersect")
    return out


def check_poset_representation(p: Poset, psi: Mapping[int, PartialPLF], rep: Mapping[int, PartialPLF] | None = None) -> list[str]:
    """Audit ``psi`` as a representation of ``p`` extending ``rep``.

    Checks extension, ``u <_P v`` iff ``psi[u] < psi[v]``, and that
    incomparable curves intersect.
    """
    out = _missing(p.n, psi) + _extension_violations(psi, rep)
    if out:
        return out
    for u in range(p.n):
        for v in range(p.n):
            if u == v:
                continue
            below = strictly_below(psi[u], psi[v])
            if p.less(u, v) != below:
                rel = "<" if p.less(u, v) else "not <"
                out.append(f"pair {u},{v}: {u} {rel} {v} in the poset but curve order disagrees")
            if u < v and not p.comparable(u, v) and curves_intersect(psi[u], psi[v]) is None:
                out.append(f"incomparable {u},{v}: curves do not intersect")
    return out


def segments_cross(s1: tuple[Fraction, Fraction], s2: tuple[Fraction, Fraction]) -> bool:
    return (s1[0] - s2[0]) * (s1[1] - s2[1]) < 0


def check_segments(g: Graph, segs: Mapping[int, tuple[Fraction, Fraction]], placed: Mapping | None = None) -> list[str]:
    """Audit a two-line segment drawing of the permutation graph ``g``."""
    out = []
    for v in range(g.n):
        if v not in segs:
            out.append(f"vertex {v}: no segment")
    for v, s in (placed or {}).items():
        if v in segs and tuple(segs[v]) != tuple(s):
            out.append(f"vertex {v}: pre-placed segment moved")
    if out:
        return out
    tops = [segs[v][0] for v in range(g.n)]
    bots = [segs[v][1] for v in range(g.n)]
    if len(set(tops)) != g.n:
        out.append("top endpoints are not distinct")
    if len(set(bots)) != g.n:
        out.append("bottom endpoints are not distinct")
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if segments_cross(segs[u], segs[v]) != g.has_edge(u, v):
                kind = "edge" if g.has_edge(u, v) else "non-edge"
                out.append(f"{kind} {u}-{v}: crossing disagrees with adjacency")
    return out
