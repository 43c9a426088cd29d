"""Deterministic SVG rendering of a configuration and its analysis.

Element classes: "ln" every spanned line (those that are simple carry
"ln simple"), "pt" every point (wedge apexes carry "pt apex"). Lines are
drawn as the chord of the infinite line across the padded bounding box.
Elements appear sorted by line key, then point index, and all coordinates are
formatted from exact rationals, so the output is byte-stable.
"""

from __future__ import annotations

from fractions import Fraction
from typing import List, Tuple

from .incidence import Configuration, spanned_lines
from .report import AnalysisReport

def _style(unit: Fraction) -> str:
    # stroke widths scale with the drawing so any coordinate range renders sanely
    thin, thick = _fmt(unit), _fmt(unit * 2)
    return (
        f".ln{{stroke:#9aa0a6;stroke-width:{thin};fill:none}}"
        f".simple{{stroke:#c62828;stroke-width:{thick}}}"
        ".pt{fill:#202124;stroke:none}"
        f".apex{{fill:#e65100;stroke:#202124;stroke-width:{thin}}}"
    )


_SCALE = 10**6


def _fmt(value: Fraction) -> str:
    # exact decimal with at most 6 places; round() on Fraction is integer banker's rounding
    scaled = round(value * _SCALE)
    sign = "-" if scaled < 0 else ""
    whole, frac = divmod(abs(scaled), _SCALE)
    if frac == 0:
        return f"{sign}{whole}"
    return f"{sign}{whole}.{str(frac).zfill(6).rstrip('0')}"


def _chord(
    key: Tuple[int, int, int],
    x0: Fraction,
    x1: Fraction,
    y0: Fraction,
    y1: Fraction,
) -> Tuple[Tuple[Fraction, Fraction], Tuple[Fraction, Fraction]]:
    """Clip the infinite line a*x + b*y + c = 0 to the rectangle. The line
    passes through at least two interior points, so the clip is a proper
    segment; its endpoints are the extreme boundary hits."""
    a, b, c = key
    hits = set()
    if b != 0:
        for x in (x0, x1):
            y = Fraction(-(c + a * x), b)
            if y0 <= y <= y1:
                hits.add((x, y))
    if a != 0:
        for y in (y0, y1):
            x = Fraction(-(c + b * y), a)
            if x0 <= x <= x1:
                hits.add((x, y))
    ordered = sorted(hits)
    return ordered[0], ordered[-1]


def render_svg(config: Configuration, report: AnalysisReport) -> str:
    """Render the configuration with the report's simple-line and wedge-apex
    annotations. The y axis is flipped so the picture has y growing upward."""
    pts = [(p.x, -p.y) for p in config.points]
    xs = [p[0] for p in pts]
    ys = [p[1] for p in pts]
    min_x, max_x = min(xs), max(xs)
    min_y, max_y = min(ys), max(ys)
    pad_x = (max_x - min_x) * Fraction(5, 100)
    pad_y = (max_y - min_y) * Fraction(5, 100)
    x0, x1 = min_x - pad_x, max_x + pad_x
    y0, y1 = min_y - pad_y, max_y + pad_y
    width, height = x1 - x0, y1 - y0
    radius = max(width, height) * Fraction(1, 80)
    stroke_unit = max(width, height) * Fraction(1, 400)

    simple_keys = {line.key for line in report.simple_lines}
    apexes = {cert.apex for cert in report.wedges}

    parts: List[str] = []
    parts.append(
        '<svg xmlns="http://www.w3.org/2000/svg" '
        f'viewBox="{_fmt(x0)} {_fmt(y0)} {_fmt(width)} {_fmt(height)}">'
    )
    parts.append(f"<style>{_style(stroke_unit)}</style>")

    inc = spanned_lines(config)
    for key in inc.lines:
        # flipping y maps a*x + b*y + c = 0 to a*x - b*Y + c = 0
        (ax, ay), (bx, by) = _chord((key.a, -key.b, key.c), x0, x1, y0, y1)
        cls = "ln simple" if key in simple_keys else "ln"
        parts.append(
            f'<line class="{cls}" x1="{_fmt(ax)}" y1="{_fmt(ay)}" '
            f'x2="{_fmt(bx)}" y2="{_fmt(by)}"/>'
        )
    for index, (px, py) in enumerate(pts):
        cls = "pt apex" if index in apexes else "pt"
        parts.append(
            f'<circle class="{cls}" cx="{_fmt(px)}" cy="{_fmt(py)}" r="{_fmt(radius)}"/>'
        )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
