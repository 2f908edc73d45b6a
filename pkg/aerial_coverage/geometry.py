# Aerial Coverage - Monte Carlo connectivity of vehicles served by ground and aerial base stations
# Copyright (C) 2022 Niclas Kühnapfel
#
# This program is free software: you can redistribute it and/or modify
# it under the terms of the GNU General Public License as published by
# the Free Software Foundation, either version 3 of the License, or
# (at your option) any later version.
#
# This program is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU General Public License for more details.
#
# You should have received a copy of the GNU General Public License
# along with this program.  If not, see <https://www.gnu.org/licenses/>.

import math
import logging
from typing import NamedTuple

import numpy as np

from .exceptions import RoadsEmpty

log = logging.getLogger(__name__)


class Point2D(NamedTuple):
    """
    Planar position in km.
    """
    x: float
    y: float


class StudyDisc:
    """
    Circular study area centered at the origin.
    """
    def __init__(self, radius_chi: float) -> None:
        """
        Raises ValueError if the radius is not finite and positive.
        :param radius_chi: Radius in km.
        """
        if not (math.isfinite(radius_chi) and radius_chi > 0):
            raise ValueError('disc radius must be finite and positive, got {}'.format(radius_chi))
        self.radius_chi = float(radius_chi)

    def area(self) -> float:
        """
        :return: Disc area in km².
        """
        return math.pi * self.radius_chi ** 2


class PlpConfig:
    """
    Poisson line process parameters. The line intensity is the density of the
    (theta, rho) parameter process on [0, pi) x [-chi, chi], in lines per rad km.
    """
    def __init__(self, line_intensity: float) -> None:
        """
        Raises ValueError if the intensity is negative.
        :param line_intensity: Lines per rad km.
        """
        if not line_intensity >= 0:
            raise ValueError('line intensity must be >= 0, got {}'.format(line_intensity))
        self.line_intensity = float(line_intensity)

    def mean_line_count(self, disc: StudyDisc) -> float:
        """
        :param disc: Study disc.
        :return: Expected number of lines hitting the disc.
        """
        return self.line_intensity * math.pi * 2 * disc.radius_chi


class Chord:
    """
    Segment of a line inside the study disc.
    """
    def __init__(self, theta: float, rho: float, disc: StudyDisc) -> None:
        """
        Builds the chord of the line {p : p . (cos theta, sin theta) = rho}.
        Raises ValueError if the line misses the disc.
        :param theta: Orientation of the line normal in [0, pi).
        :param rho: Signed offset from the origin in km.
        :param disc: Study disc.
        """
        chi = disc.radius_chi
        if abs(rho) > chi:
            raise ValueError('line offset {} outside [-{}, {}]'.format(rho, chi, chi))
        self.theta = float(theta)
        self.rho = float(rho)
        half = math.sqrt(max(chi * chi - rho * rho, 0.0))
        fx, fy = rho * math.cos(theta), rho * math.sin(theta)
        dx, dy = -math.sin(theta), math.cos(theta)
        self.endpoints = (Point2D(fx - half * dx, fy - half * dy), Point2D(fx + half * dx, fy + half * dy))
        self.length = 2 * half

    def __repr__(self) -> str:
        return 'Chord(theta={:.6f}, rho={:.6f}, length={:.6f})'.format(self.theta, self.rho, self.length)


def sample_ppp_disc(intensity_lambda: float, disc: StudyDisc, rng: np.random.Generator) -> list[Point2D]:
    """
    Samples a homogeneous Poisson point process on the disc.
    :param intensity_lambda: Points per km².
    :param disc: Study disc.
    :param rng: Random stream.
    :return: List of points.
    """
    if not intensity_lambda >= 0:
        raise ValueError('intensity must be >= 0, got {}'.format(intensity_lambda))
    n = int(rng.poisson(intensity_lambda * disc.area()))
    # radial CDF r²/chi² -> r = chi sqrt(u)
    r = disc.radius_chi * np.sqrt(rng.random(n))
    phi = 2 * math.pi * rng.random(n)
    return [Point2D(float(x), float(y)) for x, y in zip(r * np.cos(phi), r * np.sin(phi))]


def sample_plp_disc(config: PlpConfig, disc: StudyDisc, rng: np.random.Generator) -> list[Chord]:
    """
    Samples a motion-invariant Poisson line process and clips it to the disc.
    :param config: Line process parameters.
    :param disc: Study disc.
    :param rng: Random stream.
    :return: List of chords.
    """
    n = int(rng.poisson(config.mean_line_count(disc)))
    thetas = math.pi * rng.random(n)
    rhos = disc.radius_chi * (2 * rng.random(n) - 1)
    return [Chord(float(t), float(r), disc) for t, r in zip(thetas, rhos)]


def chord_point_at(chord: Chord, t: float) -> Point2D:
    """
    Point at fraction t along the chord.
    Raises ValueError if t is outside [0, 1].
    :param chord: Chord.
    :param t: Fraction of chord length.
    :return: Point.
    """
    if not 0 <= t <= 1:
        raise ValueError('chord fraction must be in [0, 1], got {}'.format(t))
    a, b = chord.endpoints
    return Point2D((1 - t) * a.x + t * b.x, (1 - t) * a.y + t * b.y)


def place_vehicles(chords: list[Chord], count: int, rng: np.random.Generator) -> list[Point2D]:
    """
    Places vehicles uniformly with respect to total road length.
    Raises RoadsEmpty if there is no chord of positive length.
    :param chords: Road chords.
    :param count: Number of vehicles.
    :param rng: Random stream.
    :return: Vehicle positions.
    """
    if count < 0:
        raise ValueError('vehicle count must be >= 0, got {}'.format(count))
    if count == 0:
        return []
    lengths = np.array([c.length for c in chords], dtype=float)
    if len(chords) == 0 or lengths.sum() <= 0:
        raise RoadsEmpty('no road to place {:d} vehicles on'.format(count))
    picks = rng.choice(len(chords), size=count, p=lengths / lengths.sum())
    fractions = rng.random(count)
    return [chord_point_at(chords[i], float(t)) for i, t in zip(picks, fractions)]
