"""Brute-force oracles for cross-checking the polynomial algorithms.

They deliberately avoid the envelope, column and 2-SAT code: regions are
evaluated pointwise from their raw defining curves, SAT is exhaustive, and
segment drawings are searched over all orderings.
"""

from __future__ import annotations

import itertools
from collections.abc import Mapping, Sequence
from fractions import Fraction

from repext.graph import Graph, InvalidInstance, PartialOrientation, Poset
from repext.orient import enumerate_transitive_orientations
from repext.plf import ONE, ZERO, PartialPLF, evaluate
from repext.regions import Region

DEFAULT_FUN_CAP = 8
DEFAULT_SAT_CAP = 20


def _value(f: PartialPLF, x: Fraction) -> Fraction | None:
    """Pointwise evaluation by scanning the pieces (independent of plf.evaluate's search)."""
    pts = f.points
    for (x0, y0), (x1, y1) in zip(pts, pts[1:]):
        if x0 <= x <= x1:
            return y0 + (y1 - y0) * (x - x0) / (x1 - x0)
    if len(pts) == 1 and pts[0][0] == x:
        return pts[0][1]
    return None


def _slice(region: Region, x: Fraction) -> tuple[str, Fraction | None, Fraction | None]:
    """Vertical section at ``x``: ``("pin", y, y)`` or ``("open", lo, hi)`` (None = unbounded)."""
    if region.pinned is not None:
        y = _value(region.pinned, x)
        if y is not None:
            return "pin", y, y
    lows = [y for y in (_value(f, x) for f in region.above) if y is not None]
    highs = [y for y in (_value(f, x) for f in region.below) if y is not None]
    return "open", (max(lows) if lows else None), (min(highs) if highs else None)


def _meet(s1, s2) -> Fraction | None:
    """A common y of two vertical sections, or None."""
    k1, a1, b1 = s1
    k2, a2, b2 = s2
    if k1 == "pin" and k2 == "pin":
        return a1 if a1 == a2 else None
    if k1 == "pin" or k2 == "pin":
        (_, y, _), (_, lo, hi) = (s1, s2) if k1 == "pin" else (s2, s1)
        return y if (lo is None or lo < y) and (hi is None or y < hi) else None
    lo = max((v for v in (a1, a2) if v is not None), default=None)
    hi = min((v for v in (b1, b2) if v is not None), default=None)
    if lo is not None and hi is not None:
        return (lo + hi) / 2 if lo < hi else None
    if lo is not None:
        return lo + 1
    if hi is not None:
        return hi - 1
    return ZERO


def _curves(region: Region) -> list[PartialPLF]:
    out = list(region.above) + list(region.below)
    if region.pinned is not None:
        out.append(region.pinned)
    return out


def sampled_region_intersect(r1: Region, r2: Region) -> tuple[Fraction, Fraction] | None:
    """Exact intersection test by evaluation at a fine enough sample of abscissae.

    The sample holds every breakpoint, every pairwise crossing of the defining
    curves, and the midpoints between consecutive such points; between two
    consecutive points the vertical order of all curves is constant.
    """
    curves = _curves(r1) + _curves(r2)
    xs = {ZERO, ONE}
    for f in curves:
        xs.update(x for x, _ in f.points)
    base = sorted(xs)
    for a, b in zip(base, base[1:]):
        for i, f in enumerate(curves):
            fa, fb = _value(f, a), _value(f, b)
            if fa is None or fb is None:
                continue
            for g in curves[i + 1 :]:
                ga, gb = _value(g, a), _value(g, b)
                if ga is None or gb is None:
                    continue
                da, db = fa - ga, fb - gb
                if (da < 0 < db) or (db < 0 < da):
                    xs.add(a + da * (b - a) / (da - db))
    grid = sorted(xs)
    sample = [grid[0]]
    for a, b in zip(grid, grid[1:]):
        sample.append((a + b) / 2)
        sample.append(b)
    for x in sample:
        y = _meet(_slice(r1, x), _slice(r2, x))
        if y is not None:
            return x, y
    return None


def _raw_region(u: int, p: Poset, rep: Mapping[int, PartialPLF]) -> Region:
    """Region holding only its defining curves (no columns)."""
    pinned = rep.get(u)
    if pinned is not None and pinned.is_empty:
        pinned = None
    above = tuple(rep[a] for a in range(p.n) if a in rep and p.less(a, u) and not rep[a].is_empty)
    below = tuple(rep[a] for a in range(p.n) if a in rep and p.less(u, a) and not rep[a].is_empty)
    return Region((), pinned, above, below)


def _strictly_under(f: PartialPLF, g: PartialPLF) -> bool:
    xs = sorted({x for x, _ in f.points} | {x for x, _ in g.points})
    vals = [(_value(f, x), _value(g, x)) for x in xs]
    return all(a < b for a, b in vals if a is not None and b is not None)


def curve_orientation(g: Graph, rep: Mapping[int, PartialPLF]) -> PartialOrientation:
    """Arcs ``a -> b`` for adjacent represented ``a, b`` with ``rep[a]`` under ``rep[b]``."""
    arcs = []
    for a, b in g.edges:
        if a in rep and b in rep and not rep[a].is_empty and not rep[b].is_empty:
            if _strictly_under(rep[a], rep[b]):
                arcs.append((a, b))
            elif _strictly_under(rep[b], rep[a]):
                arcs.append((b, a))
    return PartialOrientation(g, arcs)


def poset_feasible_brute(p: Poset, rep: Mapping[int, PartialPLF]) -> bool:
    regions = [_raw_region(u, p, rep) for u in range(p.n)]
    return all(sampled_region_intersect(regions[u], regions[v]) is not None for u, v in p.graph.non_edges())


def brute_rep_ext_fun(g: Graph, rep: Mapping[int, PartialPLF], cap: int = DEFAULT_FUN_CAP, partial: bool = False) -> bool:
    """Whether some transitive orientation of ``g`` respecting the curves admits an extension.

    With ``partial`` the curves may be partial functions and an orientation
    only has to respect pairs whose domains overlap.
    """
    if g.n > cap:
        raise InvalidInstance(f"oracle refused: n={g.n} exceeds cap {cap}")
    respect = curve_orientation(g, rep)
    for p in enumerate_transitive_orientations(g, respect, cap=cap):
        if poset_feasible_brute(p, rep):
            return True
    return False


def brute_2sat(num_vars: int, clauses: Sequence[Sequence[tuple[int, bool]]], cap: int = DEFAULT_SAT_CAP) -> list[bool] | None:
    if num_vars > cap:
        raise InvalidInstance(f"oracle refused: {num_vars} variables exceed cap {cap}")
    for bits in itertools.product((False, True), repeat=num_vars):
        if all(any(bits[v] == pol for v, pol in c) for c in clauses):
            return list(bits)
    return None


def brute_sat3(num_vars: int, clauses: Sequence[Sequence[int]], cap: int = DEFAULT_SAT_CAP) -> bool:
    """Exhaustive SAT for DIMACS-style clauses (literal ``+i`` / ``-i``, 1-indexed)."""
    if num_vars > cap:
        raise InvalidInstance(f"oracle refused: {num_vars} variables exceed cap {cap}")
    for bits in itertools.product((False, True), repeat=num_vars):
        if all(any(bits[abs(l) - 1] == (l > 0) for l in c) for c in clauses):
            return True
    return False


def brute_perm_ext(g: Graph, placed: Mapping[int, tuple[Fraction, Fraction]], cap: int = 6) -> bool:
    """Exhaustive search for a two-line drawing extending ``placed``.

    A drawing is a pair of left-to-right orders (top and bottom); it extends
    ``placed`` iff both orders agree with the placed coordinates, since new
    endpoints can always be slotted into the gaps.
    """
    n = g.n
    if n > cap:
        raise InvalidInstance(f"oracle refused: n={n} exceeds cap {cap}")
    fixed = sorted(placed)

    def agrees(order, side):
        pos = {v: i for i, v in enumerate(order)}
        return all(
            (pos[u] < pos[v]) == (placed[u][side] < placed[v][side]) for u in fixed for v in fixed if u != v
        )

    tops = [o for o in itertools.permutations(range(n)) if agrees(o, 0)]
    bots = [o for o in itertools.permutations(range(n)) if agrees(o, 1)]
    for top in tops:
        tpos = {v: i for i, v in enumerate(top)}
        for bot in bots:
            bpos = {v: i for i, v in enumerate(bot)}
            if all(
                ((tpos[u] - tpos[v]) * (bpos[u] - bpos[v]) < 0) == g.has_edge(u, v)
                for u in range(n)
                for v in range(u + 1, n)
            ):
                return True
    return False
