"""Exact piecewise-linear functions on [0, 1] and on closed subintervals of it.

All coordinates are :class:`fractions.Fraction`.  A :class:`PartialPLF` is a
list of breakpoints with strictly increasing x; its domain is
``[x_0, x_k]`` (a single point when there is one breakpoint, empty when
there are none).  A :class:`PLF` is a partial one whose domain is [0, 1].

Strictness is decided with the piece rule: a linear function on ``[a, b]``
is positive somewhere iff it is positive at ``a`` or at ``b``.
"""

from __future__ import annotations

from bisect import bisect_left
from collections.abc import Iterable, Sequence
from fractions import Fraction

from repext.graph import InvalidInstance

ZERO = Fraction(0)
ONE = Fraction(1)

Point = tuple[Fraction, Fraction]


def as_rational(value) -> Fraction:
    """Convert ints, Fractions and ``"p/q"`` strings; floats are refused."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool) or isinstance(value, float):
        raise InvalidInstance(f"refusing inexact coordinate {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise InvalidInstance(f"bad rational {value!r}") from exc
    try:
        return Fraction(value)
    except (TypeError, ValueError) as exc:
        raise InvalidInstance(f"bad rational {value!r}") from exc


def format_rational(q: Fraction) -> str:
    return str(q)


class PartialPLF:
    __slots__ = ("points", "_xs", "_hash")

    def __init__(self, points: Iterable[tuple] = ()):
        pts = tuple((as_rational(x), as_rational(y)) for x, y in points)
        for i, (x, _) in enumerate(pts):
            if not ZERO <= x <= ONE:
                raise InvalidInstance(f"breakpoint x={x} outside [0, 1]")
            if i and pts[i - 1][0] >= x:
                raise InvalidInstance("breakpoint x-coordinates must strictly increase")
        self.points: tuple[Point, ...] = pts
        self._xs = tuple(x for x, _ in pts)
        self._hash = None

    @classmethod
    def empty(cls) -> PartialPLF:
        return PartialPLF(())

    @classmethod
    def constant(cls, c, lo=ZERO, hi=ONE) -> PartialPLF:
        lo, hi = as_rational(lo), as_rational(hi)
        if lo == hi:
            return PartialPLF([(lo, c)])
        return PartialPLF([(lo, c), (hi, c)])

    @classmethod
    def segment(cls, x0, y0, x1, y1) -> PartialPLF:
        return PartialPLF([(x0, y0), (x1, y1)])

    @property
    def xs(self) -> tuple[Fraction, ...]:
        return self._xs

    @property
    def is_empty(self) -> bool:
        return not self.points

    @property
    def domain(self) -> tuple[Fraction, Fraction] | None:
        if not self.points:
            return None
        return self._xs[0], self._xs[-1]

    @property
    def is_full(self) -> bool:
        return bool(self.points) and self._xs[0] == ZERO and self._xs[-1] == ONE

    def defined_at(self, x: Fraction) -> bool:
        return bool(self.points) and self._xs[0] <= x <= self._xs[-1]

    def covers(self, lo: Fraction, hi: Fraction) -> bool:
        return bool(self.points) and self._xs[0] <= lo and hi <= self._xs[-1]

    def __call__(self, x) -> Fraction | None:
        return evaluate(self, x)

    def restrict(self, lo, hi) -> PartialPLF:
        """Restriction to ``[lo, hi]``, which must lie inside the domain."""
        lo, hi = as_rational(lo), as_rational(hi)
        if lo > hi or not self.covers(lo, hi):
            raise InvalidInstance(f"window [{lo}, {hi}] not inside domain {self.domain}")
        if lo == hi:
            return PartialPLF([(lo, evaluate(self, lo))])
        inner = [p for p in self.points if lo < p[0] < hi]
        return PartialPLF([(lo, evaluate(self, lo)), *inner, (hi, evaluate(self, hi))])

    def simplified(self) -> PartialPLF:
        return PartialPLF(_drop_collinear(list(self.points)))

    def to_json(self) -> list[list[str]]:
        return [[format_rational(x), format_rational(y)] for x, y in self.points]

    @classmethod
    def from_json(cls, data: Sequence) -> PartialPLF:
        try:
            return cls([(x, y) for x, y in data])
        except (TypeError, ValueError) as exc:
            if isinstance(exc, InvalidInstance):
                raise
            raise InvalidInstance(f"malformed function JSON: {exc}") from exc

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PartialPLF):
            return NotImplemented
        return self.points == other.points

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self.points)
        return self._hash

    def __repr__(self) -> str:
        inner = ", ".join(f"({x}, {y})" for x, y in self.points)
        return f"{type(self).__name__}([{inner}])"


class PLF(PartialPLF):
    """A piecewise-linear function on all of [0, 1]."""

    __slots__ = ()

    def __init__(self, points: Iterable[tuple] = ()):
        super().__init__(points)
        if len(self.points) < 2 or self._xs[0] != ZERO or self._xs[-1] != ONE:
            raise InvalidInstance("a full function needs breakpoints at x=0 and x=1")

    @classmethod
    def constant(cls, c, lo=ZERO, hi=ONE) -> PLF:
        if as_rational(lo) != ZERO or as_rational(hi) != ONE:
            raise InvalidInstance("a full function is defined on [0, 1]")
        return PLF([(ZERO, c), (ONE, c)])

    @classmethod
    def from_partial(cls, f: PartialPLF) -> PLF:
        return f if isinstance(f, PLF) else PLF(f.points)


def evaluate(f: PartialPLF, x) -> Fraction | None:
    """Value of ``f`` at ``x`` by linear interpolation; None outside the domain."""
    pts = f.points
    if not pts:
        return None
    x = as_rational(x)
    xs = f._xs
    if x < xs[0] or x > xs[-1]:
        return None
    i = bisect_left(xs, x)
    if xs[i] == x:
        return pts[i][1]
    (x0, y0), (x1, y1) = pts[i - 1], pts[i]
    return y0 + (y1 - y0) * (x - x0) / (x1 - x0)


def common_refinement(fs: Iterable[PartialPLF]) -> list[Fraction]:
    """Sorted union of all breakpoint x-coordinates, plus 0 and 1."""
    xs = {ZERO, ONE}
    for f in fs:
        xs.update(f.xs)
    return sorted(xs)


def overlap(f: PartialPLF, g: PartialPLF) -> tuple[Fraction, Fraction] | None:
    if f.is_empty or g.is_empty:
        return None
    lo = max(f.xs[0], g.xs[0])
    hi = min(f.xs[-1], g.xs[-1])
    return (lo, hi) if lo <= hi else None


def _overlap_points(f: PartialPLF, g: PartialPLF, lo: Fraction, hi: Fraction) -> list[Fraction]:
    pts = {lo, hi}
    pts.update(x for x in f.xs if lo < x < hi)
    pts.update(x for x in g.xs if lo < x < hi)
    return sorted(pts)


def strictly_below(f: PartialPLF, g: PartialPLF) -> bool:
    """``f(x) < g(x)`` on the whole domain overlap (vacuously true if empty)."""
    ov = overlap(f, g)
    if ov is None:
        return True
    return all(evaluate(f, x) < evaluate(g, x) for x in _overlap_points(f, g, *ov))


def linear_root(a: Fraction, da: Fraction, b: Fraction, db: Fraction) -> Fraction:
    """x in [a, b] where the line through (a, da), (b, db) vanishes (da != db)."""
    return a + da * (b - a) / (da - db)


def curves_intersect(f: PartialPLF, g: PartialPLF) -> tuple[Fraction, Fraction] | None:
    """Leftmost common point of the two graphs, or None."""
    ov = overlap(f, g)
    if ov is None:
        return None
    xs = _overlap_points(f, g, *ov)
    prev_x = prev_d = None
    for x in xs:
        fx = evaluate(f, x)
        d = fx - evaluate(g, x)
        if prev_d is not None and (prev_d < 0 < d or d < 0 < prev_d):
            r = linear_root(prev_x, prev_d, x, d)
            return r, evaluate(f, r)
        if d == 0:
            return x, fx
        prev_x, prev_d = x, d
    return None


def _drop_collinear(pts: list[Point]) -> list[Point]:
    if len(pts) <= 2:
        return pts
    out = [pts[0]]
    for i in range(1, len(pts) - 1):
        x0, y0 = out[-1]
        x1, y1 = pts[i]
        x2, y2 = pts[i + 1]
        if (y1 - y0) * (x2 - x0) != (y2 - y0) * (x1 - x0):
            out.append(pts[i])
    out.append(pts[-1])
    return out


def envelope(fs: Sequence[PartialPLF], side: str, window: tuple) -> PartialPLF:
    """Pointwise ``min`` (``side="lower"``) or ``max`` (``side="upper"``) on ``window``.

    Every function must be defined on the whole closed window.  Crossing
    points are inserted exactly and collinear breakpoints dropped.
    """
    if not fs:
        raise InvalidInstance("envelope of an empty family")
    if side not in ("lower", "upper"):
        raise ValueError(f"side must be 'lower' or 'upper', not {side!r}")
    lo, hi = as_rational(window[0]), as_rational(window[1])
    if lo > hi:
        raise InvalidInstance(f"empty window [{lo}, {hi}]")
    for f in fs:
        if not f.covers(lo, hi):
            raise InvalidInstance(f"function with domain {f.domain} undefined on window [{lo}, {hi}]")
    pick = min if side == "lower" else max
    if len(fs) == 1:
        return fs[0].restrict(lo, hi)
    if lo == hi:
        return PartialPLF([(lo, pick(evaluate(f, lo) for f in fs))])
    grid = {lo, hi}
    for f in fs:
        grid.update(x for x in f.xs if lo < x < hi)
    grid = sorted(grid)
    xs: list[Fraction] = []
    prev = [evaluate(f, grid[0]) for f in fs]
    for a, b in zip(grid, grid[1:]):
        xs.append(a)
        cur = [evaluate(f, b) for f in fs]
        cuts = set()
        for i in range(len(fs)):
            for j in range(i + 1, len(fs)):
                da = prev[i] - prev[j]
                db = cur[i] - cur[j]
                if (da < 0 < db) or (db < 0 < da):
                    cuts.add(linear_root(a, da, b, db))
        xs.extend(sorted(cuts))
        prev = cur
    xs.append(hi)
    pts = [(x, pick(evaluate(f, x) for f in fs)) for x in xs]
    return PartialPLF(_drop_collinear(pts))


def agree_on(f: PartialPLF, g: PartialPLF, lo: Fraction, hi: Fraction) -> bool:
    """Whether ``f`` and ``g`` coincide on ``[lo, hi]`` (both must be defined there)."""
    if not (f.covers(lo, hi) and g.covers(lo, hi)):
        return False
    return all(evaluate(f, x) == evaluate(g, x) for x in _overlap_points(f, g, lo, hi))


def extends(psi: PartialPLF, phi: PartialPLF) -> bool:
    """``psi`` restricted to ``dom phi`` equals ``phi`` (true for the empty phi)."""
    dom = phi.domain
    if dom is None:
        return True
    return agree_on(psi, phi, *dom)


def rep_to_json(rep: dict[int, PartialPLF]) -> dict[str, list]:
    return {str(v): f.to_json() for v, f in sorted(rep.items())}


def rep_from_json(data, full: bool = False) -> dict[int, PartialPLF]:
    """Parse ``{"v": [["x", "y"], ...]}``; ``full`` demands functions on [0, 1]."""
    if not isinstance(data, dict):
        raise InvalidInstance("representation JSON must be an object")
    out: dict[int, PartialPLF] = {}
    for key, pts in data.items():
        try:
            v = int(key)
        except ValueError as exc:
            raise InvalidInstance(f"bad vertex key {key!r}") from exc
        f = PartialPLF.from_json(pts)
        out[v] = PLF.from_partial(f) if full else f
    return out
