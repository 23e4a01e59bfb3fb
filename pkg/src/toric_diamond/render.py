"""Deterministic SVG 1.1 rendering of lattice polygons: axes, lattice dots,
the polygon path, and vertex coordinate labels.  Byte-identical output for
identical input."""

import math

SCALE = 40  # pixels per lattice unit


def _fmt(x):
    # fixed decimal formatting keeps the output byte-stable
    return f"{x:.2f}".rstrip("0").rstrip(".")


def render_svg(polygon, padding=0.10):
    verts = [(int(v[0]), int(v[1])) for v in polygon.vertices]
    xs = [v[0] for v in verts]
    ys = [v[1] for v in verts]
    pad_x = max(1.0, (max(xs) - min(xs)) * padding)
    pad_y = max(1.0, (max(ys) - min(ys)) * padding)
    x0, x1 = min(xs) - pad_x, max(xs) + pad_x
    y0, y1 = min(ys) - pad_y, max(ys) + pad_y
    width = (x1 - x0) * SCALE
    height = (y1 - y0) * SCALE

    def to_px(p):
        # y axis flips here, once; everything upstream is lattice coords
        return ((p[0] - x0) * SCALE, (y1 - p[1]) * SCALE)

    parts = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{_fmt(width)}" height="{_fmt(height)}" '
        f'viewBox="0 0 {_fmt(width)} {_fmt(height)}">',
        f'<rect width="{_fmt(width)}" height="{_fmt(height)}" fill="white"/>',
    ]
    # axes
    ox, oy = to_px((0, 0))
    if x0 < 0 < x1:
        parts.append(f'<line x1="{_fmt(ox)}" y1="0" x2="{_fmt(ox)}" '
                     f'y2="{_fmt(height)}" stroke="#999" stroke-width="1"/>')
    if y0 < 0 < y1:
        parts.append(f'<line x1="0" y1="{_fmt(oy)}" x2="{_fmt(width)}" '
                     f'y2="{_fmt(oy)}" stroke="#999" stroke-width="1"/>')
    # lattice dots
    for gx in range(math.ceil(x0), math.floor(x1) + 1):
        for gy in range(math.ceil(y0), math.floor(y1) + 1):
            px, py = to_px((gx, gy))
            parts.append(f'<circle cx="{_fmt(px)}" cy="{_fmt(py)}" r="1.5" '
                         f'fill="#bbb"/>')
    # polygon
    path = " ".join(f"{'M' if i == 0 else 'L'} {_fmt(to_px(v)[0])} "
                    f"{_fmt(to_px(v)[1])}" for i, v in enumerate(verts)) + " Z"
    parts.append(f'<path d="{path}" fill="none" stroke="black" '
                 f'stroke-width="2"/>')
    # vertices and labels
    for v in verts:
        px, py = to_px(v)
        parts.append(f'<circle cx="{_fmt(px)}" cy="{_fmt(py)}" r="3" '
                     f'fill="black"/>')
        parts.append(f'<text x="{_fmt(px + 5)}" y="{_fmt(py - 5)}" '
                     f'font-size="12" font-family="monospace">'
                     f'({v[0]},{v[1]})</text>')
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
