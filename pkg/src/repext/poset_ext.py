"""Extending partial representations of posets by (partial) functions.

A poset is representable with the given curves iff the regions of every two
incomparable vertices meet.  The constructive side evaluates every function on
a grid (the breakpoints of the given curves plus one fresh abscissa per
incomparable pair) using P-compatible value assignments, then interpolates.
"""

from __future__ import annotations

from collections.abc import Iterable, Mapping
from fractions import Fraction

from repext.graph import InvalidInstance, Poset
from repext.plf import PLF, PartialPLF, _drop_collinear, common_refinement, evaluate
from repext.regions import Region, Witness, check_poset_rep, feasible_cells, point_in_cell, region_full, region_partial


def p_compatible_extend(p: Poset, s: Iterable[int], sigma: Mapping[int, Fraction]) -> dict[int, Fraction]:
    """Extend ``sigma`` (defined on ``s``) to an order-preserving map on all of P.

    Unassigned vertices are processed in topological order (smallest index
    among ties); each gets the midpoint of its open bound interval, ``lower+1``
    or ``upper-1`` when only one side is bounded, and 0 when neither is.
    """
    s = set(s)
    out = {v: Fraction(sigma[v]) for v in s}
    for u in s:
        for w in p.above(u):
            if w in s and not out[u] < out[w]:
                raise InvalidInstance(f"values {out[u]} at {u} and {out[w]} at {w} violate {u} < {w}")
    for v in p.topological_order(set(range(p.n)) - s):
        lows = [out[a] for a in p.below(v) if a in out]
        highs = [out[a] for a in p.above(v) if a in out]
        lo = max(lows) if lows else None
        hi = min(highs) if highs else None
        if lo is not None and hi is not None:
            if not lo < hi:
                raise InvalidInstance(f"no room for vertex {v} between {lo} and {hi}")
            out[v] = (lo + hi) / 2
        elif lo is not None:
            out[v] = lo + 1
        elif hi is not None:
            out[v] = hi - 1
        else:
            out[v] = Fraction(0)
    return out


def _regions(p: Poset, rep: Mapping[int, PartialPLF], partial: bool) -> list[Region]:
    make = region_partial if partial else region_full
    return [make(u, p, rep, check=False) for u in range(p.n)]


def _first_failure(p: Poset, regions: list[Region]) -> tuple[int, int] | None:
    for u, v in p.incomparable_pairs():
        if next(feasible_cells(regions[u], regions[v]), None) is None:
            return (u, v)
    return None


def poset_extendable(p: Poset, rep: Mapping[int, PartialPLF]) -> tuple[bool, tuple[int, int] | None]:
    """``(True, None)`` if ``rep`` extends to a representation of ``p``, else ``(False, pair)``."""
    check_poset_rep(p, rep, full=True)
    bad = _first_failure(p, _regions(p, rep, partial=False))
    return bad is None, bad


def poset_extendable_partial(p: Poset, rep: Mapping[int, PartialPLF]) -> tuple[bool, tuple[int, int] | None]:
    check_poset_rep(p, rep, full=False)
    bad = _first_failure(p, _regions(p, rep, partial=True))
    return bad is None, bad


def _construction_witness(r1: Region, r2: Region) -> Witness | None:
    """First feasible open cell; a single feasible abscissa only if nothing else exists."""
    first = None
    for w in feasible_cells(r1, r2):
        if w.both_pinned or not w.isolated:
            return w
        if first is None:
            first = w
    return first


def _fresh_x(w: Witness, used: set[Fraction]) -> Fraction:
    lo, _ = w.interval
    x = w.x
    while x in used:
        x = (lo + x) / 2
    return x


def _construct(p: Poset, rep: Mapping[int, PartialPLF], partial: bool) -> dict[int, PLF] | None:
    n = p.n
    if not partial and len(rep) == n:
        return {v: PLF.from_partial(f) for v, f in rep.items()}
    regions = _regions(p, rep, partial)
    grid = common_refinement(rep.values())
    used = set(grid)
    seeds: dict[Fraction, dict[int, Fraction]] = {x: {} for x in grid}
    for u, v in p.incomparable_pairs():
        w = _construction_witness(regions[u], regions[v])
        if w is None:
            return None
        if w.both_pinned:
            continue
        if w.isolated:
            # only possible at a one-point domain: the abscissa is forced
            x, y = w.x, w.y
            have = seeds.setdefault(x, {})
            if have.get(u, y) != y or have.get(v, y) != y:
                return None
            have[u] = have[v] = y
            used.add(x)
            continue
        x = _fresh_x(w, used)
        used.add(x)
        y = point_in_cell(regions[u], regions[v], x)
        seeds[x] = {u: y, v: y}
    values: dict[int, list[tuple[Fraction, Fraction]]] = {v: [] for v in range(n)}
    for x in sorted(seeds):
        pinned = {a: evaluate(f, x) for a, f in rep.items() if f.defined_at(x)}
        sigma = dict(pinned)
        for a, y in seeds[x].items():
            if sigma.get(a, y) != y:
                return None
            sigma[a] = y
        try:
            tau = p_compatible_extend(p, sigma.keys(), sigma)
        except InvalidInstance:
            return None
        for v in range(n):
            values[v].append((x, tau[v]))
    out = {}
    for v in range(n):
        if not partial and v in rep:
            out[v] = PLF.from_partial(rep[v])
        else:
            out[v] = PLF(_drop_collinear(values[v]))
    return out


def poset_construct(p: Poset, rep: Mapping[int, PartialPLF]) -> dict[int, PLF] | None:
    """A representation of ``p`` by functions on [0, 1] extending ``rep``, or None."""
    check_poset_rep(p, rep, full=True)
    return _construct(p, rep, partial=False)


def poset_construct_partial(p: Poset, rep: Mapping[int, PartialPLF]) -> dict[int, PLF] | None:
    """Like :func:`poset_construct` for partial functions; ``rep[v]`` is kept on its domain."""
    check_poset_rep(p, rep, full=False)
    return _construct(p, rep, partial=True)
