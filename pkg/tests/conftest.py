"""Shared fixtures: the reference configurations and the random corpora."""

from fractions import Fraction

import pytest

from simplewedge import (
    Point,
    base_line,
    build_configuration,
    closed_orbit_config,
    nine_point,
    sample_configuration,
    six_point,
    spanned_lines,
    trial_rng,
)
from simplewedge.constructions import _zigzag_points

CORPUS_SEED = 20240

# n cycles through 5..13 so both parities and a spread of sizes are covered
CORPUS_SIZES = list(range(5, 14))


@pytest.fixture(scope="session")
def six():
    return six_point()


@pytest.fixture(scope="session")
def nine():
    return nine_point()


@pytest.fixture(scope="session")
def five():
    # two base points plus three on the vertical axis; 3-bounded, odd size
    return build_configuration([(-2, 0), (2, 0), (0, 1), (0, 2), (0, 3)])


@pytest.fixture(scope="session")
def triangle():
    return build_configuration([(0, 0), (1, 0), (0, 1)])


def sample_bounded_corpus(count, coord_range, seed=CORPUS_SEED, sizes=CORPUS_SIZES):
    """Deterministic list of `count` 3-bounded random configurations."""
    configs = []
    attempt = 0
    while len(configs) < count:
        n = sizes[attempt % len(sizes)]
        config, _ = sample_configuration(n, coord_range, trial_rng(seed, attempt))
        attempt += 1
        if spanned_lines(config).max_line_size <= 3:
            configs.append(config)
    return configs


@pytest.fixture(scope="session")
def random_bounded_corpus():
    """>= 500 3-bounded configurations, n in 5..13, coordinates in [-50, 50]."""
    return sample_bounded_corpus(500, 50)


@pytest.fixture(scope="session")
def small_range_corpus():
    """Tight-coordinate corpus: 3-point lines are common here, so orbit walks
    actually close; complements the generic wide-range corpus."""
    return sample_bounded_corpus(120, 4, seed=CORPUS_SEED + 1, sizes=list(range(5, 10)))


def multi_cycle_config(ks, extra=()):
    """Merge several zigzag cycles over one base pair, plus free points.

    Each cycle uses its own run of integer slopes through a and a half-shifted
    negated run through b, so the pools never mirror each other and the merged
    set stays 3-bounded. Returns None when a merge degenerates.
    """
    a, b = Point(-1, 0), Point(1, 0)
    points = [a, b]
    slope_base = 0
    for k in ks:
        alphas = [Fraction(slope_base + m) for m in range(1, k + 1)]
        betas = [-(Fraction(slope_base + m) + Fraction(1, 2)) for m in range(1, k + 1)]
        slope_base += k
        zigzag = _zigzag_points(a, b, alphas, betas)
        if zigzag is None:
            return None
        points += zigzag
    points += [Point(*xy) for xy in extra]
    try:
        config = build_configuration(points)
    except Exception:
        return None
    if spanned_lines(config).max_line_size > 3:
        return None
    try:
        base_line(config, 0, 1)
    except ValueError:
        return None
    return config


MULTI_CYCLE_SHAPES = [
    ([2, 2], ()),
    ([2, 3], ()),
    ([3, 3], ()),
    ([2, 2, 2], ()),
    ([2, 4], ()),
    ([2, 2], ((5, 7),)),
    ([3, 2], ((9, 11), (-7, 5))),
    ([4, 3], ((13, 17),)),
]


@pytest.fixture(scope="session")
def multi_cycle_corpus():
    """3-bounded configurations whose base line carries several closed orbits
    (and sometimes free points): the stress cases for disjointness."""
    configs = [multi_cycle_config(ks, extra) for ks, extra in MULTI_CYCLE_SHAPES]
    kept = [c for c in configs if c is not None]
    assert len(kept) == len(MULTI_CYCLE_SHAPES)
    return kept


@pytest.fixture(scope="session")
def bounded_corpus(six, five, triangle, random_bounded_corpus, small_range_corpus, multi_cycle_corpus):
    """Every 3-bounded configuration the suite sweeps: fixtures, the closed
    orbit family, merged cycles, and the random corpora."""
    structured = [six, five, triangle] + [closed_orbit_config(k) for k in range(2, 9)]
    return structured + multi_cycle_corpus + small_range_corpus + random_bounded_corpus
