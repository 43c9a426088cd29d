"""Deterministic generators for the reference configurations.

Two fixed fixtures and two parameterized families:

- six_point: 6 points, 3-bounded, exactly three simple lines, no wedge at all.
- nine_point: the six points plus a mirrored triple; not 3-bounded, odd size,
  and its base simple line belongs to no wedge.
- closed_orbit_config(k): 2k+2 points whose off-base points form one closed
  orbit of length 2k above the base simple line — so that line yields no
  wedge although the set is 3-bounded (its size is even).
- g_extended(m): nine_point grown by further mirrored triples to any odd size
  6+3m, keeping the base line simple and wedge-free.

The parameterized recipes are post-validated against the properties they are
supposed to exhibit, never trusted; parameters advance deterministically when
a draw degenerates, so the same argument always yields the same configuration.
"""

from __future__ import annotations

from fractions import Fraction
from typing import List, Optional, Tuple

from .geometry import LineKey, Point, intersect, line_through
from .incidence import (
    Configuration,
    ConfigurationError,
    build_configuration,
    simple_lines,
    spanned_lines,
)
from .orbits import OrbitKind, base_line, maximal_orbit, orbit_length

_MAX_ATTEMPTS = 32


class ConstructionError(RuntimeError):
    """A generator exhausted its retry budget without passing post-validation."""


def six_point() -> Configuration:
    """The even-size counterexample: 3-bounded, three simple lines, no wedge.

    Point order fixes the indices a=0, b=1, x1=2, x2=3, x3=4, y=5; y is the
    intersection of the lines through (a, x2) and (b, x1).
    """
    return build_configuration(
        [
            Point(-2, 0),
            Point(2, 0),
            Point(-1, 2),
            Point(1, 2),
            Point(0, 4),
            Point(0, Fraction(4, 3)),
        ]
    )


def nine_point() -> Configuration:
    """The odd-size, non-3-bounded counterexample: the base line through
    points 0 and 1 stays simple but belongs to no wedge.

    Extends six_point with g1=6, g2=7 (mirror images on the long lines
    through a and b) and g3=8, the intersection of the lines through (a, g2)
    and (b, g1).
    """
    return build_configuration(
        list(six_point().points)
        + [
            Point(Fraction(-2, 3), Fraction(8, 3)),
            Point(Fraction(2, 3), Fraction(8, 3)),
            Point(0, 2),
        ]
    )


def _slope_line(p: Point, slope: Fraction) -> LineKey:
    # line through p with the given slope: s*x - y + (p.y - s*p.x) = 0
    return LineKey(slope, -1, p.y - slope * p.x)


def _zigzag_points(a: Point, b: Point, alphas: List[Fraction], betas: List[Fraction]) -> Optional[List[Point]]:
    """Intersect the two slope pencils in the zigzag order that chains into a
    single cycle: p_{2m-1} on (A_{m-1}, B_m) with A_0 = A_k, p_{2m} on (A_m, B_m)."""
    k = len(alphas)
    a_lines = [_slope_line(a, s) for s in alphas]
    b_lines = [_slope_line(b, s) for s in betas]
    pts: List[Point] = []
    for m in range(1, k + 1):
        first = intersect(a_lines[(m - 2) % k], b_lines[m - 1])
        second = intersect(a_lines[m - 1], b_lines[m - 1])
        if first is None or second is None:
            return None
        pts.extend((first, second))
    if len(set(pts)) != len(pts):
        return None
    return pts


def _cycle_is_valid(config: Configuration, k: int) -> bool:
    if spanned_lines(config).max_line_size > 3:
        return False
    try:
        base = base_line(config, 0, 1)
    except ValueError:
        return False
    orbit = maximal_orbit(config, base, 2)
    return orbit.kind is OrbitKind.CLOSED and orbit_length(orbit) == 2 * k


def closed_orbit_config(k: int) -> Configuration:
    """A 3-bounded set of 2k+2 points (k >= 2) whose points off the base
    simple line form a single closed orbit of length 2k.

    Points 0 and 1 are the base pair; the rest are pencil intersections
    ordered so that the orbit starting at index 2 walks them in sequence.
    Integer slope pools are retried deterministically until post-validation
    (distinctness, simple base, 3-bounded, closed 2k-orbit) passes.
    """
    if k < 2:
        raise ValueError(f"k must be at least 2, got {k}")
    a, b = Point(-1, 0), Point(1, 0)
    for attempt in range(_MAX_ATTEMPTS):
        alphas = [Fraction(m) for m in range(1, k + 1)]
        betas = [Fraction(-(m + attempt * k)) for m in range(1, k + 1)]
        zigzag = _zigzag_points(a, b, alphas, betas)
        if zigzag is None:
            continue
        try:
            config = build_configuration([a, b] + zigzag)
        except ConfigurationError:
            continue
        if _cycle_is_valid(config, k):
            return config
    raise ConstructionError(f"construction failed for k={k}")


def _mirror_triple(t: Fraction) -> Optional[Tuple[Point, Point, Point]]:
    """One more triple of the nine_point type, parameterized by position t on
    the line through a=(-2,0) and x1=(-1,2): the point there, its mirror image
    across x=0, and the induced intersection point."""
    g1 = Point(t, 2 * t + 4)
    g2 = Point(-t, 2 * t + 4)
    if g1 == g2:
        return None
    arm_a = line_through(Point(-2, 0), g2) if g2 != Point(-2, 0) else None
    arm_b = line_through(Point(2, 0), g1) if g1 != Point(2, 0) else None
    if arm_a is None or arm_b is None or arm_a == arm_b:
        return None
    g3 = intersect(arm_a, arm_b)
    if g3 is None or g3 in (g1, g2):
        return None
    return g1, g2, g3


def _validate_g_extension(config: Configuration, m: int) -> None:
    if len(config.points) != 6 + 3 * m:
        raise ConstructionError(f"construction failed for m={m}: wrong size")
    try:
        base_line(config, 0, 1)
    except ValueError as exc:
        raise ConstructionError(f"construction failed for m={m}: base line not simple") from exc
    for line in simple_lines(config):
        if line.endpoints != (0, 1) and (0 in line.endpoints or 1 in line.endpoints):
            raise ConstructionError(
                f"construction failed for m={m}: extra simple line {line.key} "
                f"through a base point"
            )


def g_extended(m: int) -> Configuration:
    """nine_point grown to size 6+3m by adding m-1 further mirrored triples.

    Only odd m is accepted: the point of the family is odd-size sets whose
    base simple line belongs to no wedge, and 6+3m is odd exactly for odd m.
    Post-validated: the base line through points 0 and 1 is simple and no
    other simple line touches either base point.
    """
    if m < 1:
        raise ValueError(f"m must be at least 1, got {m}")
    if m % 2 == 0:
        raise ValueError(f"m must be odd so that the total size 6+3m is odd, got m={m}")
    points = list(nine_point().points)
    added = 1
    t = Fraction(1)
    attempts = 0
    while added < m:
        attempts += 1
        if attempts > _MAX_ATTEMPTS + 3 * m:
            raise ConstructionError(f"construction failed for m={m}: parameters exhausted")
        triple = _mirror_triple(t)
        t += 1
        if triple is None or any(p in points for p in triple):
            continue
        points.extend(triple)
        added += 1
    config = build_configuration(points)
    _validate_g_extension(config, m)
    return config
