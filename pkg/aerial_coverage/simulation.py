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
from typing import NamedTuple, Optional, TYPE_CHECKING

import numpy as np

from .exceptions import NoStations, RoadsEmpty
from .channel import ChannelParams, LinkGeometry, link_budget
from .geometry import Chord, PlpConfig, Point2D, StudyDisc, place_vehicles, sample_plp_disc, sample_ppp_disc

if TYPE_CHECKING:
    from .scenarios import ScenarioConfig

MAX_ROAD_ATTEMPTS = 100

log = logging.getLogger(__name__)


class StationKind:
    """
    Base station tiers.
    """
    GBS = 'GBS'
    ABS = 'ABS'
    ALL = (GBS, ABS)


class BaseStation:
    """
    Ground or aerial base station.
    """
    def __init__(self, position: Point2D, height: float, kind: str) -> None:
        """
        Raises ValueError on non-positive height or unknown kind.
        :param position: Planar position in km.
        :param height: Antenna height in m.
        :param kind: One of StationKind.ALL.
        """
        if not height > 0:
            raise ValueError('station height must be positive, got {}'.format(height))
        if kind not in StationKind.ALL:
            raise ValueError('unknown station kind: {}'.format(kind))
        self.position = position
        self.height = float(height)
        self.kind = kind

    def __repr__(self) -> str:
        return '{}(x={:.4f}, y={:.4f}, h={:g})'.format(self.kind, self.position.x, self.position.y, self.height)


class Deployment:
    """
    One realization of stations, roads and vehicles.
    """
    def __init__(self, stations: list[BaseStation], vehicles: list[Point2D], chords: list[Chord]) -> None:
        self.stations = stations
        self.vehicles = vehicles
        self.chords = chords


class SnrSample(NamedTuple):
    """
    Serving link of one vehicle. Unserved vehicles (no station in the deployment) carry
    serving_station_index None and snr_db -inf.
    """
    vehicle_index: int
    serving_station_index: Optional[int]
    d2d: float
    los: bool
    pathloss_db: float
    snr_db: float

    @property
    def served(self) -> bool:
        return self.serving_station_index is not None


def _positions(points: list[Point2D]) -> np.ndarray:
    return np.array(points, dtype=float).reshape(-1, 2)


def nearest_stations(vehicles: np.ndarray, stations: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """
    Vectorized nearest neighbour search. Ties go to the lowest station index.
    :param vehicles: Vehicle positions, shape (V, 2).
    :param stations: Station positions, shape (S, 2), S >= 1.
    :return: Station index and horizontal distance (km) per vehicle.
    """
    dist = np.hypot(vehicles[:, None, 0] - stations[None, :, 0], vehicles[:, None, 1] - stations[None, :, 1])
    idx = np.argmin(dist, axis=1)
    return idx, dist[np.arange(len(vehicles)), idx]


def associate(vehicle: Point2D, stations: list[BaseStation]) -> int:
    """
    Index of the horizontally closest station, lowest index on ties.
    Raises NoStations if the list is empty.
    :param vehicle: Vehicle position.
    :param stations: Candidate stations.
    :return: Station index.
    """
    if len(stations) == 0:
        raise NoStations('cannot associate a vehicle without stations')
    idx, _ = nearest_stations(_positions([vehicle]), _positions([s.position for s in stations]))
    return int(idx[0])


def sample_roads(plp: PlpConfig, disc: StudyDisc, rng: np.random.Generator,
                 max_attempts: int = MAX_ROAD_ATTEMPTS) -> list[Chord]:
    """
    Samples roads, resampling realizations without any road of positive length.
    Raises RoadsEmpty after max_attempts.
    :param plp: Line process parameters.
    :param disc: Study disc.
    :param rng: Random stream.
    :param max_attempts: Maximum number of attempts.
    :return: Road chords.
    """
    for attempt in range(max_attempts):
        chords = sample_plp_disc(plp, disc, rng)
        if any(c.length > 0 for c in chords):
            return chords
        log.info('Realization without roads, resampling (attempt {:d}).'.format(attempt + 1))
    raise RoadsEmpty('no road after {:d} attempts (line intensity {})'.format(max_attempts, plp.line_intensity))


def build_realization(scenario: 'ScenarioConfig', rng: np.random.Generator) -> Deployment:
    """
    Deploys stations, roads and vehicles of one realization.
    Draw order: stations, roads, vehicles.
    :param scenario: Scenario.
    :param rng: Random stream of this realization.
    :return: Deployment.
    """
    disc = StudyDisc(scenario.chi_km)
    if scenario.placement == 'central':
        positions = [Point2D(0.0, 0.0)]
    else:
        positions = sample_ppp_disc(scenario.intensity_lambda, disc, rng)
    stations = [BaseStation(p, scenario.bs_height, scenario.bs_kind) for p in positions]
    chords = []
    if scenario.vehicles > 0:
        chords = sample_roads(PlpConfig(scenario.line_intensity), disc, rng)
    vehicles = place_vehicles(chords, scenario.vehicles, rng)
    return Deployment(stations, vehicles, chords)


def evaluate_realization(deployment: Deployment, params: ChannelParams, rng: np.random.Generator) -> list[SnrSample]:
    """
    Evaluates the serving link of every vehicle. LoS is drawn for serving links only.
    :param deployment: Deployment.
    :param params: Channel parameters.
    :param rng: Random stream of this realization.
    :return: One sample per vehicle.
    """
    n = len(deployment.vehicles)
    if n == 0:
        return []
    if len(deployment.stations) == 0:
        return [SnrSample(i, None, math.inf, False, math.inf, -math.inf) for i in range(n)]
    idx, dist_km = nearest_stations(_positions(deployment.vehicles),
                                    _positions([s.position for s in deployment.stations]))
    heights = np.array([s.height for s in deployment.stations])[idx]
    geom = LinkGeometry(dist_km * 1000.0, heights, params.vehicle_height)
    budget = link_budget(params, geom, rng)
    los = np.broadcast_to(budget.los, (n,))
    pl = np.broadcast_to(budget.pathloss_db, (n,))
    snr = np.broadcast_to(budget.snr_db, (n,))
    return [SnrSample(i, int(idx[i]), float(geom.d2d[i]), bool(los[i]), float(pl[i]), float(snr[i]))
            for i in range(n)]
