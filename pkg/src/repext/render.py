"""SVG drawings of curve representations, regions and two-line segment drawings.

Rationals are converted to floats for display only.  The layout is
deterministic: the same input always yields the same document.
"""

from __future__ import annotations

from collections.abc import Mapping, Sequence
from fractions import Fraction
from xml.sax.saxutils import escape

from repext.plf import PartialPLF, evaluate
from repext.regions import Region

WIDTH, HEIGHT, MARGIN = 640, 400, 40
PALETTE = ["#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#e377c2", "#17becf", "#7f7f7f"]


def _fmt(v: float) -> str:
    return f"{v:.2f}"


class _Canvas:
    def __init__(self, ylo: float, yhi: float, width: int = WIDTH, height: int = HEIGHT):
        if yhi - ylo < 1e-9:
            ylo, yhi = ylo - 1, yhi + 1
        pad = (yhi - ylo) * 0.08
        self.ylo, self.yhi = ylo - pad, yhi + pad
        self.width, self.height = width, height
        self.items: list[str] = []

    def sx(self, x) -> float:
        return MARGIN + float(x) * (self.width - 2 * MARGIN)

    def sy(self, y) -> float:
        frac = (float(y) - self.ylo) / (self.yhi - self.ylo)
        return self.height - MARGIN - frac * (self.height - 2 * MARGIN)

    def axes(self, ticks: Sequence[Fraction] = ()) -> None:
        x0, x1 = self.sx(0), self.sx(1)
        yb, yt = self.height - MARGIN, MARGIN
        self.items.append(f'<rect x="{_fmt(x0)}" y="{yt}" width="{_fmt(x1 - x0)}" height="{yb - yt}" fill="none" stroke="#000"/>')
        for x in ticks:
            sx = _fmt(self.sx(x))
            self.items.append(f'<line x1="{sx}" y1="{yt}" x2="{sx}" y2="{yb}" stroke="#999" stroke-dasharray="4 3"/>')
        self.items.append(f'<text x="{_fmt(x0)}" y="{yb + 16}" font-size="11" text-anchor="middle">0</text>')
        self.items.append(f'<text x="{_fmt(x1)}" y="{yb + 16}" font-size="11" text-anchor="middle">1</text>')

    def polyline(self, pts, color: str, width: float = 2.0, dashed: bool = False) -> None:
        if len(pts) == 1:
            x, y = pts[0]
            self.items.append(f'<circle cx="{_fmt(self.sx(x))}" cy="{_fmt(self.sy(y))}" r="3" fill="{color}"/>')
            return
        coords = " ".join(f"{_fmt(self.sx(x))},{_fmt(self.sy(y))}" for x, y in pts)
        dash = ' stroke-dasharray="6 4"' if dashed else ""
        self.items.append(f'<polyline points="{coords}" fill="none" stroke="{color}" stroke-width="{width}"{dash}/>')

    def polygon(self, pts, color: str, opacity: float = 0.25) -> None:
        coords = " ".join(f"{_fmt(self.sx(x))},{_fmt(self.sy(y))}" for x, y in pts)
        self.items.append(f'<polygon points="{coords}" fill="{color}" fill-opacity="{opacity}" stroke="none"/>')

    def text(self, x, y, label: str, color: str = "#000") -> None:
        self.items.append(
            f'<text x="{_fmt(self.sx(x) + 4)}" y="{_fmt(self.sy(y) - 4)}" font-size="12" fill="{color}">{escape(label)}</text>'
        )

    def document(self) -> str:
        body = "\n".join(self.items)
        return (
            f'<svg xmlns="http://www.w3.org/2000/svg" width="{self.width}" height="{self.height}" '
            f'viewBox="0 0 {self.width} {self.height}">\n<rect width="100%" height="100%" fill="#fff"/>\n{body}\n</svg>\n'
        )


def _y_range(curves: Sequence[PartialPLF]) -> tuple[float, float]:
    ys = [float(y) for f in curves for _, y in f.points]
    return (min(ys), max(ys)) if ys else (0.0, 1.0)


def _shade_region(cv: _Canvas, region: Region, color: str) -> None:
    for col in region.columns:
        if col.pinned is not None:
            cv.polyline(list(col.pinned.points), color, width=5, dashed=False)
            continue
        xs = {col.lo, col.hi}
        for f in (col.lower, col.upper):
            if f is not None:
                xs.update(x for x in f.xs if col.lo <= x <= col.hi)
        xs = sorted(xs)
        if len(xs) < 2:
            continue
        top = [(x, cv.yhi if col.upper is None else evaluate(col.upper, x)) for x in xs]
        bottom = [(x, cv.ylo if col.lower is None else evaluate(col.lower, x)) for x in xs]
        cv.polygon(top + bottom[::-1], color)


def render_curves(
    curves: Mapping[int, PartialPLF],
    labels: Mapping[int, str] | None = None,
    regions: Mapping[int, Region] | None = None,
    ticks: Sequence[Fraction] = (),
) -> str:
    """Curves on [0, 1] with optional shaded regions and dashed vertical grid lines."""
    regions = regions or {}
    extra = [f for r in regions.values() for f in (*r.above, *r.below)]
    cv = _Canvas(*_y_range([*curves.values(), *extra]))
    cv.axes(ticks)
    for k, (v, region) in enumerate(sorted(regions.items())):
        _shade_region(cv, region, PALETTE[(k + 3) % len(PALETTE)])
    for k, (v, f) in enumerate(sorted(curves.items())):
        if f.is_empty:
            continue
        color = PALETTE[k % len(PALETTE)]
        cv.polyline(list(f.points), color)
        x, y = f.points[len(f.points) // 2]
        cv.text(x, y, labels.get(v, str(v)) if labels else str(v), color)
    return cv.document()


def render_segments(segs: Mapping[int, tuple[Fraction, Fraction]], placed: Mapping | None = None) -> str:
    """Two-line drawing: top endpoints on the upper line, bottom ones on the lower line."""
    placed = placed or {}
    coords = [float(c) for s in segs.values() for c in s]
    lo, hi = (min(coords), max(coords)) if coords else (0.0, 1.0)
    span = hi - lo or 1.0
    width = WIDTH - 2 * MARGIN

    def sx(c) -> float:
        return MARGIN + (float(c) - lo) / span * width

    ytop, ybot = MARGIN, HEIGHT - MARGIN
    items = [
        f'<line x1="{MARGIN}" y1="{ytop}" x2="{WIDTH - MARGIN}" y2="{ytop}" stroke="#000"/>',
        f'<line x1="{MARGIN}" y1="{ybot}" x2="{WIDTH - MARGIN}" y2="{ybot}" stroke="#000"/>',
    ]
    for k, (v, (t, b)) in enumerate(sorted(segs.items())):
        color = PALETTE[k % len(PALETTE)]
        dash = "" if v in placed else ' stroke-dasharray="6 4"'
        items.append(
            f'<line x1="{_fmt(sx(t))}" y1="{ytop}" x2="{_fmt(sx(b))}" y2="{ybot}" stroke="{color}" stroke-width="2"{dash}/>'
        )
        items.append(f'<text x="{_fmt(sx(t))}" y="{ytop - 6}" font-size="12" text-anchor="middle">{v}</text>')
    body = "\n".join(items)
    return (
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" '
        f'viewBox="0 0 {WIDTH} {HEIGHT}">\n<rect width="100%" height="100%" fill="#fff"/>\n{body}\n</svg>\n'
    )


def render_gadget(gadget) -> str:
    """Strip diagram of a hardness gadget: every pinned curve piece over the block grid."""
    ticks = sorted({x for f in gadget.rep.values() for x in f.domain} if gadget.rep else set())
    return render_curves(gadget.rep, labels=gadget.labels(), ticks=ticks)
