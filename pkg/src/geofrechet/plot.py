"""SVG rendering of a free-space diagram.

Each cell is sampled at 64 x 64 pixel centres.  Free pixels are written as
horizontal runs of ``<rect class="free">``; cell grid lines, free-interval
endpoints (``class="tick"``) and reachable boundary intervals
(``class="reach"``) are drawn on top.  Curve A runs left to right, curve B
bottom to top.
"""

from __future__ import annotations

from typing import List

from .freespace import FreeSpace

SAMPLES = 64
TICK = 3.0


def _fmt(x: float) -> str:
    return f"{x:.6g}"


def free_raster(fs: FreeSpace, eps: float, samples: int = SAMPLES) -> List[List[bool]]:
    """``raster[r][c]``: is pixel centre (column c, row r counted from the bottom) free?"""
    width, height = fs.n_a * samples, fs.n_b * samples
    raster = [[False] * width for _ in range(height)]
    ts = [(l + 0.5) / samples for l in range(samples)]
    A, B = fs.A, fs.B
    for i in range(fs.n_a):
        (x0, y0), (x1, y1) = A[i], A[i + 1]
        for k in range(samples):
            u = (k + 0.5) / samples
            p = (x0 + u * (x1 - x0), y0 + u * (y1 - y0))
            col = i * samples + k
            for j in range(fs.n_b):
                # one distance function per sample column gives exact leash lengths
                F = fs.boundary_fn(p, B[j], B[j + 1])
                if F.min_val > eps:
                    continue
                base = j * samples
                for l, t in enumerate(ts):
                    if F.value(t) <= eps:
                        raster[base + l][col] = True
    return raster


def render_svg(fs: FreeSpace, eps: float, samples: int = SAMPLES) -> str:
    n_a, n_b = fs.n_a, fs.n_b
    width, height = n_a * samples, n_b * samples
    raster = free_raster(fs, eps, samples)
    free, reach = fs.reachability(eps)

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}" data-samples="{samples}" data-cells-a="{n_a}" '
        f'data-cells-b="{n_b}" data-epsilon="{eps!r}">',
        "<style>.free{fill:#9ecae1}.grid{stroke:#555;stroke-width:0.5}"
        ".tick{stroke:#d62728;stroke-width:1}.reach{stroke:#2ca02c;stroke-width:2}</style>",
        f'<rect x="0" y="0" width="{width}" height="{height}" fill="white"/>',
        '<g id="free-space">',
    ]
    for r, row in enumerate(raster):
        y = height - 1 - r
        c = 0
        while c < width:
            if row[c]:
                start = c
                while c < width and row[c]:
                    c += 1
                out.append(f'<rect class="free" x="{start}" y="{y}" width="{c - start}" height="1"/>')
            else:
                c += 1
    out.append("</g>")

    out.append('<g id="grid">')
    for i in range(n_a + 1):
        x = i * samples
        out.append(f'<line class="grid" x1="{x}" y1="0" x2="{x}" y2="{height}"/>')
    for j in range(n_b + 1):
        y = height - j * samples
        out.append(f'<line class="grid" x1="0" y1="{y}" x2="{width}" y2="{y}"/>')
    out.append("</g>")

    out.append('<g id="intervals">')
    for i, row in enumerate(free.vertical):
        x = i * samples
        for j, iv in enumerate(row):
            if iv is not None:
                for t in iv:
                    y = _fmt(height - (j + t) * samples)
                    out.append(f'<line class="tick" x1="{_fmt(x - TICK)}" y1="{y}" x2="{_fmt(x + TICK)}" y2="{y}"/>')
    for i, row in enumerate(free.horizontal):
        for j, iv in enumerate(row):
            if iv is not None:
                y = height - j * samples
                for s in iv:
                    x = _fmt((i + s) * samples)
                    out.append(f'<line class="tick" x1="{x}" y1="{_fmt(y - TICK)}" x2="{x}" y2="{_fmt(y + TICK)}"/>')
    for i, row in enumerate(reach.vertical):
        x = i * samples
        for j, iv in enumerate(row):
            if iv is not None:
                y1, y2 = (_fmt(height - (j + t) * samples) for t in iv)
                out.append(f'<line class="reach" x1="{x}" y1="{y1}" x2="{x}" y2="{y2}"/>')
    for i, row in enumerate(reach.horizontal):
        for j, iv in enumerate(row):
            if iv is not None:
                y = height - j * samples
                x1, x2 = (_fmt((i + s) * samples) for s in iv)
                out.append(f'<line class="reach" x1="{x1}" y1="{y}" x2="{x2}" y2="{y}"/>')
    out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"
