"""Plain-text point files.

One point per nonblank line: two whitespace-separated rational literals.
'#' starts a comment that runs to the end of the line. write_points emits the
canonical form, so parse(write(points)) is the identity.
"""

from __future__ import annotations

from typing import Iterable, List

from .geometry import Point, format_rational, parse_rational


class PointParseError(ValueError):
    """Malformed point file; the message carries the 1-based line number."""


def parse_points(text: str) -> List[Point]:
    points: List[Point] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        content = raw.split("#", 1)[0].strip()
        if not content:
            continue
        fields = content.split()
        if len(fields) != 2:
            raise PointParseError(
                f"parse error line {lineno}: expected two coordinates, got {len(fields)} field(s)"
            )
        try:
            x = parse_rational(fields[0])
            y = parse_rational(fields[1])
        except ValueError as exc:
            raise PointParseError(f"parse error line {lineno}: {exc}") from exc
        points.append(Point(x, y))
    return points


def write_points(points: Iterable[Point]) -> str:
    return "".join(
        f"{format_rational(p.x)} {format_rational(p.y)}\n" for p in points
    )
