"""Text and SVG pictures of chips. Layout is approximate: arcs for l- and
r-wires, straight or labelled runs for t-wires, one glyph per circle."""
from __future__ import annotations

from .chips import Chip, pin_label

CIRCLE_GLYPH = "○"


def _arc_columns(arcs: list[tuple[int, int]]) -> list[list[tuple[int, int]]]:
    # inner arcs sit closer to the pins; greedy by span
    cols: list[list[tuple[int, int]]] = []
    for a, b in sorted(arcs, key=lambda ab: ab[1] - ab[0]):
        for col in cols:
            if all(b < c or a > d for c, d in col):
                col.append((a, b))
                break
        else:
            cols.append([(a, b)])
    return cols


def _side(arcs: list[tuple[int, int]], n: int, mirrored: bool) -> list[list[str]]:
    cols = _arc_columns(arcs)
    w = len(cols)
    grid = [[" "] * w for _ in range(n)]
    top, bot = ("┌", "└") if mirrored else ("┐", "┘")
    for c, col in enumerate(cols):
        pos = w - 1 - c if mirrored else c
        for a, b in col:
            grid[a][pos], grid[b][pos] = top, bot
            for r in range(a + 1, b):
                grid[r][pos] = "│" if grid[r][pos] == " " else "┼"
            # run the wire from the pin to this column
            for r in (a, b):
                for cc in range(pos + 1, w) if mirrored else range(pos):
                    grid[r][cc] = "─" if grid[r][cc] == " " else "┼"
    return grid


def render_ascii(xi: Chip) -> str:
    n = xi.degree
    p = xi.matching.partner
    left_arcs = [(k, q) for k, q in enumerate(p[:n]) if q < n and k < q]
    right_arcs = [(k - n, q - n) for k, q in enumerate(p) if k >= n and q >= n and k < q]
    L = _side(left_arcs, n, mirrored=False)
    R = _side(right_arcs, n, mirrored=True)
    for r in range(n):
        # t-wires cross the arc columns on their way to the middle
        if p[r] >= n:
            L[r] = ["┼" if ch == "│" else "─" for ch in L[r]]
        if p[n + r] < n:
            R[r] = ["┼" if ch == "│" else "─" for ch in R[r]]
    width = 9
    rows = []
    for r in range(n):
        lp, rp = p[r], p[n + r]
        if lp == n + r:
            mid = "─" * width
        else:
            left = f"─→{pin_label(lp, n)}" if lp >= n else ""
            right = f"{pin_label(rp, n)}←─" if rp < n else ""
            mid = left.ljust(width - len(right)) + right
        rows.append(f"{r + 1:>2} ─{''.join(L[r])}{mid}{''.join(R[r])}─ {pin_label(n + r, n)}")
    rows.append(f"circles: {xi.circles}" + (" " + " ".join([CIRCLE_GLYPH] * xi.circles) if xi.circles else ""))
    return "\n".join(rows) + "\n"


def render_svg(xi: Chip) -> str:
    n = xi.degree
    step, width = 20, 160
    height = step * (n + 1)
    y = lambda k: step * (k + 1)  # noqa: E731
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width + 40}" height="{height}" '
        f'viewBox="-20 0 {width + 40} {height}">',
        f'<rect x="0" y="{step // 2}" width="{width}" height="{step * n}" fill="none" stroke="black"/>',
    ]
    for k in range(n):
        parts.append(f'<circle cx="0" cy="{y(k)}" r="2"/>')
        parts.append(f'<circle cx="{width}" cy="{y(k)}" r="2"/>')
        parts.append(f'<text x="-16" y="{y(k) + 4}" font-size="10">{k + 1}</text>')
        parts.append(f'<text x="{width + 6}" y="{y(k) + 4}" font-size="10">{k + 1}\'</text>')
    for a, b in xi.matching.blocks():
        xa, ya = (0, y(a)) if a < n else (width, y(a - n))
        xb, yb = (0, y(b)) if b < n else (width, y(b - n))
        if a < n and b < n:
            bulge = width * 0.15 * (1 + abs(b - a) / n)
            c1, c2 = (bulge, ya), (bulge, yb)
        elif a >= n and b >= n:
            bulge = width - width * 0.15 * (1 + abs(b - a) / n)
            c1, c2 = (bulge, ya), (bulge, yb)
        else:
            c1, c2 = (width / 3, ya), (2 * width / 3, yb)
        parts.append(
            f'<path class="wire" d="M {xa} {ya} C {c1[0]:.1f} {c1[1]} {c2[0]:.1f} {c2[1]} {xb} {yb}" '
            f'fill="none" stroke="black"/>'
        )
    for j in range(xi.circles):
        cx = width / 2 + (j - (xi.circles - 1) / 2) * 12
        parts.append(f'<circle class="loop" cx="{cx:.1f}" cy="{height / 2:.1f}" r="5" fill="none" stroke="black"/>')
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def render(xi: Chip, fmt: str = "ascii") -> str:
    if fmt == "ascii":
        return render_ascii(xi)
    if fmt == "svg":
        return render_svg(xi)
    raise ValueError(f"unknown format {fmt!r}")
