"""SVG rendering of a two-input parameter's hyperplane arrangement.

Draws the n lines ``a_i . x + b_i == 0`` clipped to a rectangular window,
shades each neuron's activation half-plane at low opacity, and overlays the
zero set of the realized function traced by marching squares on a regular
grid.  Geometry is computed in exact rationals and only converted to fixed
decimal places at print time, so the output text is byte-deterministic.

The figure is illustrative: the zero set is a grid-resolution approximation,
not a proof artifact.
"""

from __future__ import annotations

from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from .errors import DimensionError, InputError
from .param import Parameter
from .rational import ZERO
from .realize import evaluate

_SIZE = 600  # square canvas, px
_PALETTE = ("#d62728", "#1f77b4", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#17becf")

Point = Tuple[Fraction, Fraction]
BBox = Tuple[Fraction, Fraction, Fraction, Fraction]


def arrangement_svg(
    p: Parameter,
    bbox: Sequence = (-6, -6, 6, 6),
    grid: int = 200,
    opacity: str = "0.08",
) -> str:
    """Render the arrangement of a parameter with m = 2, k = 1."""
    if p.m != 2 or p.k != 1:
        raise DimensionError(f"arrangement plot requires m=2, k=1, got m={p.m}, k={p.k}")
    if grid < 1:
        raise InputError(f"grid must be >= 1, got {grid}")
    x0, y0, x1, y1 = (Fraction(v) for v in bbox)
    if x0 >= x1 or y0 >= y1:
        raise InputError("bbox must satisfy x0 < x1 and y0 < y1")
    box: BBox = (x0, y0, x1, y1)

    def to_px(pt: Point) -> Tuple[str, str]:
        px = (pt[0] - x0) / (x1 - x0) * _SIZE
        py = (y1 - pt[1]) / (y1 - y0) * _SIZE  # SVG y grows downward
        return f"{float(px):.3f}", f"{float(py):.3f}"

    parts: List[str] = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_SIZE}" height="{_SIZE}" '
        f'viewBox="0 0 {_SIZE} {_SIZE}">',
        f'<rect x="0" y="0" width="{_SIZE}" height="{_SIZE}" fill="white" stroke="black"/>',
    ]

    # activation half-planes a.x + b >= 0, clipped to the window
    for i in range(p.n):
        poly = _clip_halfplane(box, p.A[i], p.b[i])
        if len(poly) < 3:
            continue
        color = _PALETTE[i % len(_PALETTE)]
        pts = " ".join(",".join(to_px(q)) for q in poly)
        parts.append(f'<polygon points="{pts}" fill="{color}" fill-opacity="{opacity}"/>')

    # the lines a.x + b == 0
    for i in range(p.n):
        seg = _clip_line(box, p.A[i], p.b[i])
        if seg is None:
            continue
        (ax, ay), (bx, by) = to_px(seg[0]), to_px(seg[1])
        color = _PALETTE[i % len(_PALETTE)]
        parts.append(
            f'<line x1="{ax}" y1="{ay}" x2="{bx}" y2="{by}" stroke="{color}" stroke-width="1.5"/>'
        )

    # zero set of the realization, marching squares
    segments = _zero_set_segments(p, box, grid)
    if segments:
        cmds = " ".join(
            f"M {to_px(a)[0]} {to_px(a)[1]} L {to_px(b)[0]} {to_px(b)[1]}" for a, b in segments
        )
        parts.append(f'<path d="{cmds}" stroke="black" stroke-width="2" fill="none"/>')

    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def _clip_line(box: BBox, a: Sequence[Fraction], b: Fraction) -> Optional[Tuple[Point, Point]]:
    """Segment of the line a.x + b == 0 inside the window, or None."""
    x0, y0, x1, y1 = box
    a1, a2 = a
    if a1 == 0 and a2 == 0:
        return None
    hits: List[Point] = []
    if a2 != 0:
        for x in (x0, x1):
            y = -(b + a1 * x) / a2
            if y0 <= y <= y1:
                hits.append((x, y))
    if a1 != 0:
        for y in (y0, y1):
            x = -(b + a2 * y) / a1
            if x0 <= x <= x1:
                hits.append((x, y))
    unique = sorted(set(hits))
    if len(unique) < 2:
        return None
    return unique[0], unique[-1]


def _clip_halfplane(box: BBox, a: Sequence[Fraction], b: Fraction) -> List[Point]:
    """Window polygon cut down to a.x + b >= 0 (Sutherland-Hodgman)."""
    x0, y0, x1, y1 = box
    poly: List[Point] = [(x0, y0), (x1, y0), (x1, y1), (x0, y1)]

    def value(q: Point) -> Fraction:
        return a[0] * q[0] + a[1] * q[1] + b

    out: List[Point] = []
    for idx in range(len(poly)):
        s, e = poly[idx - 1], poly[idx]
        fs, fe = value(s), value(e)
        if fe >= 0:
            if fs < 0:
                out.append(_lerp(s, e, fs, fe))
            out.append(e)
        elif fs >= 0:
            out.append(_lerp(s, e, fs, fe))
    return out


def _lerp(s: Point, e: Point, fs: Fraction, fe: Fraction) -> Point:
    t = fs / (fs - fe)
    return (s[0] + t * (e[0] - s[0]), s[1] + t * (e[1] - s[1]))


def _zero_set_segments(p: Parameter, box: BBox, grid: int) -> List[Tuple[Point, Point]]:
    x0, y0, x1, y1 = box
    dx = (x1 - x0) / grid
    dy = (y1 - y0) / grid
    xs = [x0 + i * dx for i in range(grid + 1)]
    ys = [y0 + j * dy for j in range(grid + 1)]
    values = [[evaluate(p, (x, y))[0] for x in xs] for y in ys]

    def edge_point(pa: Point, pb: Point, fa: Fraction, fb: Fraction) -> Point:
        if fa == fb:
            t = Fraction(1, 2)
        else:
            t = fa / (fa - fb)
        return (pa[0] + t * (pb[0] - pa[0]), pa[1] + t * (pb[1] - pa[1]))

    segments: List[Tuple[Point, Point]] = []
    for j in range(grid):
        for i in range(grid):
            corners = (
                (xs[i], ys[j]),
                (xs[i + 1], ys[j]),
                (xs[i + 1], ys[j + 1]),
                (xs[i], ys[j + 1]),
            )
            vals = (
                values[j][i],
                values[j][i + 1],
                values[j + 1][i + 1],
                values[j + 1][i],
            )
            case = sum(1 << t for t in range(4) if vals[t] > 0)
            if case in (0, 15):
                continue
            # interpolated crossing on each square edge, indexed 0..3
            pts = {}
            for t in range(4):
                u = (t + 1) % 4
                if (vals[t] > 0) != (vals[u] > 0):
                    pts[t] = edge_point(corners[t], corners[u], vals[t], vals[u])
            edges = _MS_TABLE[case]
            if case in (5, 10):
                # saddle: orient by the cell-average sign
                center_pos = sum(vals, ZERO) > 0
                edges = _MS_SADDLE[(case, center_pos)]
            for ea, eb in edges:
                segments.append((pts[ea], pts[eb]))
    return segments


# edge pairs joined per marching-squares case (corners 0..3 counterclockwise
# from lower-left; edge t runs from corner t to corner t+1)
_MS_TABLE = {
    1: [(3, 0)],
    2: [(0, 1)],
    3: [(3, 1)],
    4: [(1, 2)],
    5: [(3, 0), (1, 2)],
    6: [(0, 2)],
    7: [(3, 2)],
    8: [(2, 3)],
    9: [(2, 0)],
    10: [(0, 1), (2, 3)],
    11: [(2, 1)],
    12: [(1, 3)],
    13: [(1, 0)],
    14: [(0, 3)],
}

_MS_SADDLE = {
    (5, True): [(0, 1), (2, 3)],
    (5, False): [(3, 0), (1, 2)],
    (10, True): [(1, 2), (3, 0)],
    (10, False): [(0, 1), (2, 3)],
}
