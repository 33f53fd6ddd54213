"""Feasible regions of vertices and exact region intersection.

A region is described by its defining data (an optional pinned curve and the
curves it must stay strictly above / below) and by a column decomposition of
[0, 1] derived from it.  Inside the domain of the pinned curve the region is
that curve; elsewhere it is the open band between the upper envelope of the
active lower bounds and the lower envelope of the active upper bounds, where a
bound is active at ``x`` when its curve is defined at ``x``.
"""

from __future__ import annotations

from collections.abc import Iterator, Mapping, Sequence
from dataclasses import dataclass, field
from heapq import merge
from fractions import Fraction

from repext.graph import InvalidInstance, Poset
from repext.plf import ONE, ZERO, PartialPLF, envelope, evaluate, linear_root, strictly_below


@dataclass(frozen=True)
class Column:
    lo: Fraction
    hi: Fraction
    lo_closed: bool
    hi_closed: bool
    lower: PartialPLF | None = None
    upper: PartialPLF | None = None
    pinned: PartialPLF | None = None

    def contains_x(self, x: Fraction) -> bool:
        if x == self.lo:
            return self.lo_closed
        if x == self.hi:
            return self.hi_closed
        return self.lo < x < self.hi

    def bounds_at(self, x: Fraction) -> tuple[Fraction | None, Fraction | None]:
        lo = None if self.lower is None else evaluate(self.lower, x)
        hi = None if self.upper is None else evaluate(self.upper, x)
        return lo, hi


@dataclass(frozen=True)
class Region:
    columns: tuple[Column, ...]
    pinned: PartialPLF | None
    above: tuple[PartialPLF, ...]
    below: tuple[PartialPLF, ...]
    # sorted breakpoints of all columns and their curves, filled on first use
    _breaks: list = field(default_factory=list, compare=False, repr=False)

    def breaks(self) -> list[Fraction]:
        if not self._breaks:
            xs = {ZERO, ONE}
            for col in self.columns:
                xs.add(col.lo)
                xs.add(col.hi)
                for f in (col.lower, col.upper, col.pinned):
                    if f is not None:
                        xs.update(f.xs)
            self._breaks.extend(sorted(xs))
        return self._breaks

    def column_at(self, x: Fraction) -> Column:
        for col in self.columns:
            if col.contains_x(x):
                return col
        raise ValueError(f"x={x} outside [0, 1]")

    def contains(self, x, y) -> bool:
        x, y = Fraction(x), Fraction(y)
        col = self.column_at(x)
        if col.pinned is not None:
            return evaluate(col.pinned, x) == y
        lo, hi = col.bounds_at(x)
        return (lo is None or lo < y) and (hi is None or y < hi)

    def is_everything(self) -> bool:
        return all(c.pinned is None and c.lower is None and c.upper is None for c in self.columns)


@dataclass(frozen=True)
class Witness:
    """A common point of two regions.

    ``interval`` is the feasible x-range of the column pair the point came
    from: ``(x, x)`` for a single abscissa, otherwise an open interval.
    """

    x: Fraction
    y: Fraction
    both_pinned: bool
    interval: tuple[Fraction, Fraction]

    @property
    def isolated(self) -> bool:
        return self.interval[0] == self.interval[1]


def make_region(
    pinned: PartialPLF | None = None,
    above: Sequence[PartialPLF] = (),
    below: Sequence[PartialPLF] = (),
) -> Region:
    """Region pinned to ``pinned`` on its domain, strictly above every curve of
    ``above`` and strictly below every curve of ``below`` where those are defined."""
    if pinned is not None and pinned.is_empty:
        pinned = None
    above = tuple(f for f in above if not f.is_empty)
    below = tuple(f for f in below if not f.is_empty)
    cuts = {ZERO, ONE}
    for f in (*above, *below, *([pinned] if pinned is not None else [])):
        cuts.update(f.domain)
    cuts = sorted(cuts)

    def signature(lo: Fraction, hi: Fraction) -> tuple:
        if pinned is not None and pinned.covers(lo, hi):
            return ("pinned",)
        act_a = tuple(i for i, f in enumerate(above) if f.covers(lo, hi))
        act_b = tuple(i for i, f in enumerate(below) if f.covers(lo, hi))
        return ("open", act_a, act_b)

    # cells: [c0], (c0, c1), [c1], ... ; consecutive cells with equal signatures merge
    cells: list[tuple[Fraction, Fraction, tuple]] = []
    for i, c in enumerate(cuts):
        cells.append((c, c, signature(c, c)))
        if i + 1 < len(cuts):
            cells.append((c, cuts[i + 1], signature(c, cuts[i + 1])))
    groups: list[list[tuple[Fraction, Fraction, tuple]]] = []
    for cell in cells:
        if groups and groups[-1][-1][2] == cell[2]:
            groups[-1].append(cell)
        else:
            groups.append([cell])
    columns = []
    for grp in groups:
        first, last = grp[0], grp[-1]
        lo, hi = first[0], last[1]
        lo_closed = first[0] == first[1]
        hi_closed = last[0] == last[1]
        sig = first[2]
        if sig[0] == "pinned":
            columns.append(Column(lo, hi, lo_closed, hi_closed, pinned=pinned.restrict(lo, hi)))
            continue
        _, act_a, act_b = sig
        lower = envelope([above[i] for i in act_a], "upper", (lo, hi)) if act_a else None
        upper = envelope([below[i] for i in act_b], "lower", (lo, hi)) if act_b else None
        columns.append(Column(lo, hi, lo_closed, hi_closed, lower=lower, upper=upper))
    return Region(tuple(columns), pinned, above, below)


def check_poset_rep(p: Poset, rep: Mapping[int, PartialPLF], full: bool) -> None:
    """Raise :class:`InvalidInstance` unless ``rep`` is a partial representation of ``p``.

    With ``full`` the functions must be defined on [0, 1] and incomparable
    represented pairs must intersect; otherwise only ``u <_P v`` implies
    ``rep[u] < rep[v]`` on the common domain.
    """
    for v, f in rep.items():
        if not 0 <= v < p.n:
            raise InvalidInstance(f"represented vertex {v} out of range")
        if full and not f.is_full:
            raise InvalidInstance(f"function of vertex {v} is not defined on [0, 1]")
    verts = sorted(v for v, f in rep.items() if not f.is_empty)
    for i, u in enumerate(verts):
        for v in verts[i + 1 :]:
            fu, fv = rep[u], rep[v]
            if p.less(u, v):
                if not strictly_below(fu, fv):
                    raise InvalidInstance(f"{u} <_P {v} but their curves are not strictly ordered")
            elif p.less(v, u):
                if not strictly_below(fv, fu):
                    raise InvalidInstance(f"{v} <_P {u} but their curves are not strictly ordered")
            elif full and (strictly_below(fu, fv) or strictly_below(fv, fu)):
                raise InvalidInstance(f"{u} and {v} are incomparable but their curves are disjoint")


def region_full(u: int, p: Poset, rep: Mapping[int, PartialPLF], check: bool = True) -> Region:
    """Region of ``u`` for a partial representation by functions on [0, 1]."""
    if check:
        check_poset_rep(p, rep, full=True)
    if u in rep:
        return Region((Column(ZERO, ONE, True, True, pinned=rep[u]),), rep[u], (), ())
    return make_region(
        None,
        above=[rep[a] for a in p.below(u) if a in rep],
        below=[rep[a] for a in p.above(u) if a in rep],
    )


def region_partial(u: int, p: Poset, rep: Mapping[int, PartialPLF], check: bool = True) -> Region:
    """Region of ``u`` for a partial representation by partial functions."""
    if check:
        check_poset_rep(p, rep, full=False)
    empty = PartialPLF.empty()
    return make_region(
        rep.get(u, empty),
        above=[rep[a] for a in p.below(u) if a in rep],
        below=[rep[a] for a in p.above(u) if a in rep],
    )


def _positive_part(a: Fraction, ga: Fraction, b: Fraction, gb: Fraction) -> tuple[Fraction, Fraction] | None:
    """Open sub-interval of (a, b) where the linear function g is positive."""
    if ga > 0 and gb > 0:
        return a, b
    if ga > 0:
        return a, linear_root(a, ga, b, gb)
    if gb > 0:
        return linear_root(a, ga, b, gb), b
    return None


def _pick_y(lows: list[Fraction], highs: list[Fraction]) -> Fraction:
    lo = max(lows) if lows else None
    hi = min(highs) if highs else None
    if lo is not None and hi is not None:
        return (lo + hi) / 2
    if lo is not None:
        return lo + 1
    if hi is not None:
        return hi - 1
    return ZERO


def _column_pairs(r1: Region, r2: Region) -> Iterator[tuple[Fraction, Fraction, Column, Column]]:
    """Cells of the common refinement, left to right, with the columns covering them.

    Yields ``(x, x, c1, c2)`` for point cells and ``(a, b, c1, c2)`` for open cells.
    """
    grid = []
    for x in merge(r1.breaks(), r2.breaks()):
        if not grid or grid[-1] != x:
            grid.append(x)
    i1 = i2 = 0
    cols1, cols2 = r1.columns, r2.columns
    for k, x in enumerate(grid):
        while not cols1[i1].contains_x(x):
            i1 += 1
        while not cols2[i2].contains_x(x):
            i2 += 1
        yield x, x, cols1[i1], cols2[i2]
        if k + 1 < len(grid):
            b = grid[k + 1]
            mid = (x + b) / 2
            while not cols1[i1].contains_x(mid):
                i1 += 1
            while not cols2[i2].contains_x(mid):
                i2 += 1
            yield x, b, cols1[i1], cols2[i2]


def _point_witness(x: Fraction, c1: Column, c2: Column) -> Witness | None:
    if c1.pinned is not None and c2.pinned is not None:
        y = evaluate(c1.pinned, x)
        return Witness(x, y, True, (x, x)) if y == evaluate(c2.pinned, x) else None
    if c1.pinned is not None or c2.pinned is not None:
        pin, other = (c1, c2) if c1.pinned is not None else (c2, c1)
        y = evaluate(pin.pinned, x)
        lo, hi = other.bounds_at(x)
        ok = (lo is None or lo < y) and (hi is None or y < hi)
        return Witness(x, y, False, (x, x)) if ok else None
    lows = [v for v in (*c1.bounds_at(x)[:1], *c2.bounds_at(x)[:1]) if v is not None]
    highs = [v for v in (c1.bounds_at(x)[1], c2.bounds_at(x)[1]) if v is not None]
    if lows and highs and max(lows) >= min(highs):
        return None
    return Witness(x, _pick_y(lows, highs), False, (x, x))


def _open_witness(a: Fraction, b: Fraction, c1: Column, c2: Column) -> Witness | None:
    if c1.pinned is not None and c2.pinned is not None:
        da = evaluate(c1.pinned, a) - evaluate(c2.pinned, a)
        db = evaluate(c1.pinned, b) - evaluate(c2.pinned, b)
        if da == 0 and db == 0:
            x = (a + b) / 2
        elif (da < 0 < db) or (db < 0 < da):
            x = linear_root(a, da, b, db)
        else:
            return None
        return Witness(x, evaluate(c1.pinned, x), True, (x, x))
    # every constraint is a linear function that must be positive
    if c1.pinned is not None or c2.pinned is not None:
        pin, other = (c1, c2) if c1.pinned is not None else (c2, c1)
        pa, pb = evaluate(pin.pinned, a), evaluate(pin.pinned, b)
        (la, ua), (lb, ub) = other.bounds_at(a), other.bounds_at(b)
        cons = []
        if la is not None:
            cons.append((pa - la, pb - lb))
        if ua is not None:
            cons.append((ua - pa, ub - pb))
    else:
        (l1a, u1a), (l1b, u1b) = c1.bounds_at(a), c1.bounds_at(b)
        (l2a, u2a), (l2b, u2b) = c2.bounds_at(a), c2.bounds_at(b)
        lows = [(la, lb) for la, lb in ((l1a, l1b), (l2a, l2b)) if la is not None]
        highs = [(ua, ub) for ua, ub in ((u1a, u1b), (u2a, u2b)) if ua is not None]
        cons = [(ua - la, ub - lb) for la, lb in lows for ua, ub in highs]
    lo, hi = a, b
    for ga, gb in cons:
        part = _positive_part(a, ga, b, gb)
        if part is None:
            return None
        lo, hi = max(lo, part[0]), min(hi, part[1])
        if lo >= hi:
            return None
    x = (lo + hi) / 2
    return Witness(x, _y_at(x, c1, c2), False, (lo, hi))


def _y_at(x: Fraction, c1: Column, c2: Column) -> Fraction:
    for c in (c1, c2):
        if c.pinned is not None:
            return evaluate(c.pinned, x)
    (l1, u1), (l2, u2) = c1.bounds_at(x), c2.bounds_at(x)
    return _pick_y([v for v in (l1, l2) if v is not None], [v for v in (u1, u2) if v is not None])


def feasible_cells(r1: Region, r2: Region) -> Iterator[Witness]:
    """One witness per cell of the common refinement where the regions meet."""
    for a, b, c1, c2 in _column_pairs(r1, r2):
        w = _point_witness(a, c1, c2) if a == b else _open_witness(a, b, c1, c2)
        if w is not None:
            yield w


def regions_intersect(r1: Region, r2: Region) -> Witness | None:
    """Leftmost common point of two regions (open bands never count touching)."""
    return next(feasible_cells(r1, r2), None)


def point_in_cell(r1: Region, r2: Region, x: Fraction) -> Fraction:
    """A y with ``(x, y)`` in both regions, for ``x`` inside a feasible open cell."""
    return _y_at(x, r1.column_at(x), r2.column_at(x))
