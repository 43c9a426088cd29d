from fractions import Fraction

import pytest

from simplewedge import (
    Point,
    base_line,
    brute_force_wedges,
    closed_orbit_config,
    decompose,
    find_wedge_from_line,
    g_extended,
    intersect,
    is_ell_bounded,
    line_through,
    nine_point,
    orbit_length,
    simple_lines,
    six_point,
    spanned_lines,
    wedge_coverage,
)


def test_six_point_exact_coordinates():
    assert six_point().points == (
        Point(-2, 0),
        Point(2, 0),
        Point(-1, 2),
        Point(1, 2),
        Point(0, 4),
        Point(0, Fraction(4, 3)),
    )


def test_six_point_headline_numbers(six):
    assert len(six.points) == 6
    assert len(simple_lines(six)) == 3
    assert is_ell_bounded(six, 3)


def test_nine_point_exact_coordinates():
    assert nine_point().points[6:] == (
        Point(Fraction(-2, 3), Fraction(8, 3)),
        Point(Fraction(2, 3), Fraction(8, 3)),
        Point(0, 2),
    )


def test_nine_point_intersection_identity(nine):
    a, b = nine.points[0], nine.points[1]
    g1, g2, g3 = nine.points[6], nine.points[7], nine.points[8]
    assert g3 == Point(0, 2)
    assert intersect(line_through(a, g2), line_through(b, g1)) == g3


def test_nine_point_not_three_bounded(nine):
    assert len(nine.points) == 9
    assert not is_ell_bounded(nine, 3)


@pytest.mark.parametrize("k", range(2, 9))
def test_closed_orbit_config_post_validation(k):
    config = closed_orbit_config(k)
    assert len(config.points) == 2 * k + 2
    assert is_ell_bounded(config, 3)
    base = base_line(config, 0, 1)  # raises if the base line is not simple
    decomposition = decompose(config, base)
    assert decomposition.open_orbit is None
    assert len(decomposition.closed_orbits) == 1
    assert orbit_length(decomposition.closed_orbits[0]) == 2 * k
    assert find_wedge_from_line(config, base) is None


def test_closed_orbit_k2_mirrors_the_six_point_structure():
    config = closed_orbit_config(2)
    inc = spanned_lines(config)
    assert inc.size_histogram() == {2: 3, 3: 4}
    assert brute_force_wedges(config) == ()


@pytest.mark.parametrize("k", range(3, 9))
def test_closed_orbit_larger_k_has_other_wedges(k):
    # the base line yields none, but other wedges exist once n > 6
    config = closed_orbit_config(k)
    certs = brute_force_wedges(config)
    assert certs
    base_key = base_line(config, 0, 1).key
    assert all(base_key not in (c.key1, c.key2) for c in certs)


def test_closed_orbit_config_deterministic():
    assert closed_orbit_config(5).points == closed_orbit_config(5).points


@pytest.mark.parametrize("k", range(9, 17))
def test_closed_orbit_config_succeeds_through_k16(k):
    # the retry budget must never be exhausted for k up to 16
    config = closed_orbit_config(k)
    assert len(config.points) == 2 * k + 2
    assert is_ell_bounded(config, 3)


def test_closed_orbit_config_rejects_small_k():
    with pytest.raises(ValueError):
        closed_orbit_config(1)


def test_g_extended_base_case_is_nine_point():
    assert g_extended(1).points == nine_point().points


@pytest.mark.parametrize("m", (1, 3, 5))
def test_g_extended_post_validation(m):
    config = g_extended(m)
    n = len(config.points)
    assert n == 6 + 3 * m and n % 2 == 1
    base = base_line(config, 0, 1)
    entries = {e.line.endpoints: e for e in wedge_coverage(config).entries}
    assert not entries[(0, 1)].covered
    # the wedge-free witness: from either base point, every other direction
    # hits a line with at least three points
    inc = spanned_lines(config)
    for c in range(2, n):
        assert len(inc.lines[inc.line_of(0, c)]) >= 3
        assert len(inc.lines[inc.line_of(1, c)]) >= 3
    assert base.key == inc.line_of(0, 1)


def test_g_extended_rejects_even_m():
    with pytest.raises(ValueError, match="odd"):
        g_extended(2)
    with pytest.raises(ValueError):
        g_extended(0)


def test_g_extended_deterministic():
    assert g_extended(3).points == g_extended(3).points
