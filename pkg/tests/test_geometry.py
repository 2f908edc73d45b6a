import math

import numpy as np
import pytest
from scipy.stats import chisquare

from aerial_coverage.exceptions import RoadsEmpty
from aerial_coverage.geometry import (Chord, PlpConfig, StudyDisc, chord_point_at, place_vehicles,
                                      sample_plp_disc, sample_ppp_disc)

DRAWS = 10_000


def test_ppp_zero_intensity_is_empty(rng):
    assert sample_ppp_disc(0.0, StudyDisc(3.0), rng) == []


def test_ppp_negative_intensity_rejected(rng):
    with pytest.raises(ValueError):
        sample_ppp_disc(-1.0, StudyDisc(1.0), rng)


def test_ppp_count_is_poisson(rng):
    disc = StudyDisc(1.0)
    counts = np.array([len(sample_ppp_disc(4.0, disc, rng)) for _ in range(DRAWS)])
    mean = 4 * math.pi
    assert abs(counts.mean() - mean) < 3 * math.sqrt(mean / DRAWS)
    assert abs(counts.var(ddof=1) - counts.mean()) < 0.1 * counts.mean()


def test_ppp_points_uniform_on_disc(rng):
    disc = StudyDisc(1.0)
    radii = np.array([math.hypot(p.x, p.y) for _ in range(DRAWS) for p in sample_ppp_disc(4.0, disc, rng)])
    assert np.all(radii <= 1.0 + 1e-9)
    inner = np.mean(radii <= 0.5)
    assert abs(inner - 0.25) < 3 * math.sqrt(0.25 * 0.75 / len(radii))


def test_plp_zero_intensity_is_empty(rng):
    assert sample_plp_disc(PlpConfig(0.0), StudyDisc(1.0), rng) == []


def test_plp_line_count(rng):
    disc = StudyDisc(1.0)
    config = PlpConfig(2.0)
    counts = np.array([len(sample_plp_disc(config, disc, rng)) for _ in range(DRAWS)])
    mean = 2 * math.pi * 1.0 * 2.0
    assert config.mean_line_count(disc) == pytest.approx(mean)
    assert abs(counts.mean() - mean) < 3 * math.sqrt(mean / DRAWS)


def test_plp_angles_uniform(rng):
    disc = StudyDisc(1.0)
    thetas = [c.theta for _ in range(DRAWS) for c in sample_plp_disc(PlpConfig(2.0), disc, rng)]
    assert all(0 <= t < math.pi for t in thetas)
    observed, _ = np.histogram(thetas, bins=10, range=(0, math.pi))
    assert chisquare(observed).pvalue > 0.01


def test_plp_chords_on_boundary(rng):
    disc = StudyDisc(2.0)
    for chord in sample_plp_disc(PlpConfig(5.0), disc, rng):
        assert -2.0 <= chord.rho <= 2.0
        assert chord.length == pytest.approx(2 * math.sqrt(4.0 - chord.rho ** 2), abs=1e-9)
        for end in chord.endpoints:
            assert abs(math.hypot(end.x, end.y) - 2.0) < 1e-9


def test_chord_length_by_hand():
    assert Chord(0.3, 0.6, StudyDisc(1.0)).length == pytest.approx(1.6, abs=1e-9)


def test_chord_outside_disc_rejected():
    with pytest.raises(ValueError):
        Chord(0.0, 1.5, StudyDisc(1.0))


def test_chord_point_at_endpoints():
    chord = Chord(1.1, -0.4, StudyDisc(1.0))
    assert chord_point_at(chord, 0.0) == chord.endpoints[0]
    assert chord_point_at(chord, 1.0) == chord.endpoints[1]


def test_chord_point_at_diameter_midpoint():
    p = chord_point_at(Chord(0.0, 0.0, StudyDisc(1.0)), 0.5)
    assert p.x == pytest.approx(0.0, abs=1e-12)
    assert p.y == pytest.approx(0.0, abs=1e-12)


@pytest.mark.parametrize('t', [-0.1, 1.0001])
def test_chord_point_at_domain(t):
    with pytest.raises(ValueError):
        chord_point_at(Chord(0.0, 0.0, StudyDisc(1.0)), t)


def test_place_zero_vehicles(rng):
    assert place_vehicles([Chord(0.0, 0.0, StudyDisc(1.0))], 0, rng) == []


def test_place_vehicles_without_roads(rng):
    with pytest.raises(RoadsEmpty):
        place_vehicles([], 5, rng)


def test_degenerate_chords_get_no_weight(rng):
    disc = StudyDisc(1.0)
    with pytest.raises(RoadsEmpty):
        place_vehicles([Chord(0.5, 1.0, disc)], 3, rng)
    points = place_vehicles([Chord(0.5, 1.0, disc), Chord(0.0, 0.2, disc)], 100, rng)
    assert all(p.x == pytest.approx(0.2) for p in points)


def test_place_vehicles_on_single_diameter(rng):
    chord = Chord(0.7, 0.0, StudyDisc(1.0))
    a, b = chord.endpoints
    for p in place_vehicles([chord], 200, rng):
        cross = (b.x - a.x) * (p.y - a.y) - (b.y - a.y) * (p.x - a.x)
        assert abs(cross) < 1e-9
        assert math.hypot(p.x, p.y) <= 1.0 + 1e-9


def test_place_vehicles_weighted_by_length(rng):
    disc = StudyDisc(1.0)
    long_chord = Chord(0.0, 0.0, disc)
    short_chord = Chord(0.0, math.sqrt(0.75), disc)
    assert long_chord.length == pytest.approx(2.0)
    assert short_chord.length == pytest.approx(1.0)
    n = 30_000
    points = place_vehicles([long_chord, short_chord], n, rng)
    assert len(points) == n
    share = sum(1 for p in points if p.x < 0.4) / n
    assert abs(share - 2 / 3) < 3 * math.sqrt(2 / 9 / n)


def test_same_seed_same_layout():
    disc = StudyDisc(1.0)

    def draw(seed):
        g = np.random.Generator(np.random.PCG64(seed))
        stations = sample_ppp_disc(4.0, disc, g)
        chords = sample_plp_disc(PlpConfig(2.0), disc, g)
        return stations, [(c.theta, c.rho) for c in chords], place_vehicles(chords, 50, g)

    assert draw(7) == draw(7)
    assert draw(7) != draw(8)


@pytest.mark.parametrize('radius', [0.0, -1.0, math.inf, math.nan])
def test_disc_radius_validated(radius):
    with pytest.raises(ValueError):
        StudyDisc(radius)


def test_disc_area():
    assert StudyDisc(2.0).area() == pytest.approx(4 * math.pi)
