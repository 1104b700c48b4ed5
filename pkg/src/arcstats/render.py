"""SVG arc diagrams.

Vertices sit on a horizontal baseline; every arc is an upper half-ellipse
whose height grows with its span.  In extended mode each opener gets a
half-arc leaving to the left edge and each closer one leaving to the right
edge.  Left half-arcs from openers further right run higher, right half-arcs
from closers further left run higher, so half-arcs on the same side never
cross each other.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from xml.sax.saxutils import escape

from .core import Arc, PartitionError, PerfectMatching, SetPartition, as_partition

HIGHLIGHTS = ("crossings", "nestings", "alignments")
ARC_COLOR = "black"
HALF_ARC_COLOR = "#c0392b"
HIGHLIGHT_COLOR = "#2471a3"


@dataclass(frozen=True)
class RenderSpec:
    obj: SetPartition | PerfectMatching
    extended: bool = False
    width: int = 640
    height: int = 260
    highlight: str | None = None

    def __post_init__(self):
        if self.highlight is not None:
            if self.highlight not in HIGHLIGHTS:
                raise ValueError(f"highlight must be one of {HIGHLIGHTS}")
            if not isinstance(self.obj, PerfectMatching):
                raise PartitionError("highlighting is only defined for perfect matchings")
        if self.width < 50 or self.height < 50:
            raise ValueError("canvas too small")


def _pair_kind(e: Arc, f: Arc) -> str:
    (i, j), (k, l) = (e, f) if e.lo < f.lo else (f, e)
    if k < j < l:
        return "crossings"
    if l < j:
        return "nestings"
    return "alignments"


def highlighted_pairs(m: PerfectMatching, kind: str) -> list[tuple[Arc, Arc]]:
    return [(e, f) for e, f in combinations(m.arcs, 2) if _pair_kind(e, f) == kind]


def _f(x: float) -> str:
    return f"{x:.2f}"


def render_svg(spec: RenderSpec) -> str:
    part = as_partition(spec.obj)
    size = part.n
    side = 0.16 * spec.width if spec.extended else 0.0
    left, right = 30 + side, spec.width - 30 - side
    base = spec.height - 36
    avail = base - 20
    dx = (right - left) / (size - 1) if size > 1 else 0.0

    def x(v: int) -> float:
        return left + (v - 1) * dx if size > 1 else (left + right) / 2

    marked: set[Arc] = set()
    pairs: list[tuple[Arc, Arc]] = []
    if spec.highlight is not None:
        pairs = highlighted_pairs(spec.obj, spec.highlight)
        marked = {a for pair in pairs for a in pair}

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{spec.width}" height="{spec.height}" viewBox="0 0 {spec.width} {spec.height}">',
        f"<title>{escape(str(spec.obj))}</title>",
        f'<line x1="{_f(left)}" y1="{_f(base)}" x2="{_f(right)}" y2="{_f(base)}" '
        'stroke="#bbbbbb" stroke-width="1"/>',
    ]

    unit = avail / max(size - 1, 1)
    for a in part.arcs:
        x0, x1 = x(a.lo), x(a.hi)
        ry = unit * (a.hi - a.lo)
        hot = a in marked
        color = HIGHLIGHT_COLOR if hot else ARC_COLOR
        cls = "arc highlight" if hot else "arc"
        out.append(
            f'<path data-kind="arc" class="{cls}" data-arc="{a.lo}-{a.hi}" '
            f'd="M {_f(x0)} {_f(base)} A {_f((x1 - x0) / 2)} {_f(ry)} 0 0 1 {_f(x1)} {_f(base)}" '
            f'fill="none" stroke="{color}" stroke-width="{3 if hot else 1.5}"/>'
        )

    if spec.extended:
        corner = 0.4 * dx if size > 1 else 0.1 * spec.width
        openers = sorted(part.openers)
        for t, o in enumerate(openers):
            h = avail * (t + 1) / (len(openers) + 1)
            xo = x(o)
            out.append(
                f'<path data-kind="half-arc" class="half-arc left" data-arc="-inf-{o}" '
                f'd="M {_f(xo)} {_f(base)} A {_f(corner)} {_f(h)} 0 0 0 {_f(xo - corner)} {_f(base - h)} '
                f'H 4" fill="none" stroke="{HALF_ARC_COLOR}" stroke-width="1.5"/>'
            )
        closers = sorted(part.closers, reverse=True)
        for t, c in enumerate(closers):
            h = avail * (t + 1) / (len(closers) + 1)
            xc = x(c)
            out.append(
                f'<path data-kind="half-arc" class="half-arc right" data-arc="{c}-+inf" '
                f'd="M {_f(xc)} {_f(base)} A {_f(corner)} {_f(h)} 0 0 1 {_f(xc + corner)} {_f(base - h)} '
                f'H {spec.width - 4}" fill="none" stroke="{HALF_ARC_COLOR}" stroke-width="1.5"/>'
            )

    for v in range(1, size + 1):
        out.append(f'<circle data-kind="vertex" cx="{_f(x(v))}" cy="{_f(base)}" r="4" fill="black"/>')
        out.append(f'<text x="{_f(x(v))}" y="{_f(base + 20)}" font-family="serif" font-size="14" '
                   f'text-anchor="middle">{v}</text>')

    if pairs:
        listing = "; ".join(f"({e.lo},{e.hi})x({f.lo},{f.hi})" for e, f in pairs)
        out.append(f'<desc data-kind="highlight">{escape(spec.highlight)}: {escape(listing)}</desc>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


def count_elements(svg: str, kind: str) -> int:
    return svg.count(f'data-kind="{kind}"')
