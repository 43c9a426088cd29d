"""Point configurations and the lines they span.

A configuration is an ordered tuple of at least three pairwise-distinct
points, not all on one line. Everything downstream addresses points by index;
coordinates are resolved only here, when the incidence structure (the map
from spanned lines to incident point indices) is built. The structure is
computed once per configuration and cached.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Dict, Iterable, Optional, Sequence, Tuple

from .geometry import LineKey, Point, collinear, line_through


class ConfigurationError(ValueError):
    """The given points do not form a valid configuration."""


class NotThreeBoundedError(ValueError):
    """An operation needed a line with at most 3 incident points but met a larger one."""


class InternalInvariantError(RuntimeError):
    """A mathematically guaranteed property failed to hold; indicates a bug."""


class Configuration:
    """An ordered, validated point set. Input order is preserved so callers
    can rely on stable indices."""

    __slots__ = ("points", "_incidence")

    def __init__(self, points: Sequence[Point]):
        pts = tuple(points)
        if len(pts) < 3:
            raise ConfigurationError(f"too few points: need at least 3, got {len(pts)}")
        seen: Dict[Point, int] = {}
        for i, p in enumerate(pts):
            if p in seen:
                raise ConfigurationError(f"duplicate point at indices ({seen[p]},{i})")
            seen[p] = i
        if all(collinear(pts[0], pts[1], p) for p in pts[2:]):
            raise ConfigurationError("contained in a line")
        self.points = pts
        self._incidence: Optional[IncidenceStructure] = None

    def __len__(self) -> int:
        return len(self.points)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Configuration) and self.points == other.points

    def __hash__(self) -> int:
        return hash(self.points)

    def __repr__(self) -> str:
        return f"Configuration({len(self.points)} points)"


def build_configuration(points: Iterable) -> Configuration:
    """Validate a point sequence into a Configuration.

    Items may be Point instances or (x, y) pairs of ints / Fractions /
    rational strings.
    """
    coerced = [p if isinstance(p, Point) else Point(*p) for p in points]
    return Configuration(coerced)


@dataclass(frozen=True)
class SimpleLine:
    """A spanned line carrying exactly two configuration points."""

    key: LineKey
    endpoints: Tuple[int, int]


class IncidenceStructure:
    """Map from each spanned line to the sorted indices of its incident points.

    Iteration order over `lines` is sorted by LineKey, so every consumer is
    deterministic. A pair-to-key index is kept so the line through two given
    points is a dictionary lookup.
    """

    __slots__ = ("lines", "_pair_key", "max_line_size")

    def __init__(self, lines: Dict[LineKey, Tuple[int, ...]], pair_key: Dict[Tuple[int, int], LineKey]):
        self.lines = lines
        self._pair_key = pair_key
        self.max_line_size = max(len(v) for v in lines.values())

    def line_of(self, i: int, j: int) -> LineKey:
        """The key of the spanned line through points i and j."""
        if i == j:
            raise ValueError("distinct indices required")
        return self._pair_key[(i, j) if i < j else (j, i)]

    def indices_on(self, key: LineKey) -> Tuple[int, ...]:
        return self.lines[key]

    def size_histogram(self) -> Dict[int, int]:
        hist: Dict[int, int] = {}
        for idx in self.lines.values():
            hist[len(idx)] = hist.get(len(idx), 0) + 1
        return dict(sorted(hist.items()))


def spanned_lines(config: Configuration) -> IncidenceStructure:
    """Enumerate every line spanned by the configuration.

    Single O(n^2) pass over index pairs; n is desk-scale throughout, so
    exactness and simplicity beat asymptotic cleverness here.
    """
    if config._incidence is None:
        acc: Dict[LineKey, set] = {}
        pair_key: Dict[Tuple[int, int], LineKey] = {}
        pts = config.points
        for i, j in combinations(range(len(pts)), 2):
            key = line_through(pts[i], pts[j])
            pair_key[(i, j)] = key
            bucket = acc.get(key)
            if bucket is None:
                acc[key] = {i, j}
            else:
                bucket.add(i)
                bucket.add(j)
        lines = {key: tuple(sorted(idx)) for key, idx in sorted(acc.items())}
        config._incidence = IncidenceStructure(lines, pair_key)
    return config._incidence


def simple_lines(config: Configuration) -> Tuple[SimpleLine, ...]:
    """All spanned lines with exactly two incident points, sorted by key.

    Every valid configuration has at least one; an empty result would mean
    the exact predicates are broken, so it raises instead of returning.
    """
    inc = spanned_lines(config)
    found = tuple(
        SimpleLine(key, (idx[0], idx[1]))
        for key, idx in inc.lines.items()
        if len(idx) == 2
    )
    if not found:
        raise InternalInvariantError(
            "no line with exactly two points found; every non-collinear finite "
            "point set spans one, so the incidence computation is broken"
        )
    return found


def is_ell_bounded(config: Configuration, ell: int) -> bool:
    """True iff no spanned line carries more than `ell` configuration points."""
    if ell < 2:
        raise ValueError(f"ell must be at least 2, got {ell}")
    return spanned_lines(config).max_line_size <= ell


def third_point(config: Configuration, i: int, j: int) -> Optional[int]:
    """The unique index besides i and j on their spanned line, if any.

    Returns None when the line is simple. Lines carrying four or more points
    are out of contract: the continuation would be ambiguous.
    """
    inc = spanned_lines(config)
    key = inc.line_of(i, j)
    idx = inc.lines[key]
    if len(idx) == 2:
        return None
    if len(idx) == 3:
        return next(k for k in idx if k != i and k != j)
    raise NotThreeBoundedError(
        f"not 3-bounded on this line: {key} carries {len(idx)} points"
    )
