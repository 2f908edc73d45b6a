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
from typing import Optional, Union

import numpy as np

from .exceptions import ModelDomainError

log = logging.getLogger(__name__)

SPEED_OF_LIGHT = 3e8
THERMAL_NOISE_DBM_HZ = -174.0
SHADOWING_STD_LOS = 4.0
SHADOWING_STD_NLOS = 6.0
AERIAL_MIN_HEIGHT = 22.5
AERIAL_MAX_HEIGHT = 100.0
UMA_MAX_UT_HEIGHT = 23.0
MIN_D2D = 1.0

# dense urban constants of the elevation sigmoid
SIGMOID_A = 9.61
SIGMOID_B = 0.16

Number = Union[float, np.ndarray]


class LosModel:
    """
    Line-of-sight probability strategies.
    """
    UMA_STANDARD = 'uma_standard'
    UMA_AERIAL = 'uma_aerial'
    ELEVATION_SIGMOID = 'elevation_sigmoid'
    ALL = (UMA_STANDARD, UMA_AERIAL, ELEVATION_SIGMOID)


class ChannelParams:
    """
    Link budget and propagation settings.
    """
    def __init__(self, carrier_freq: float = 3.5, tx_power: float = 23.0, tx_gain: float = 10.0,
                 rx_gain: float = 2.0, bandwidth: float = 20.0, noise_figure: float = 9.0,
                 vehicle_height: float = 1.5, los_model: str = LosModel.UMA_STANDARD,
                 shadowing_enabled: bool = False, sigmoid_a: float = SIGMOID_A,
                 sigmoid_b: float = SIGMOID_B) -> None:
        """
        Raises ValueError on invalid values.
        :param carrier_freq: Carrier frequency in GHz.
        :param tx_power: Transmit power in dBm.
        :param tx_gain: Transmit antenna gain in dBi.
        :param rx_gain: Receive antenna gain in dBi.
        :param bandwidth: Bandwidth in MHz.
        :param noise_figure: Receiver noise figure in dB.
        :param vehicle_height: Vehicle antenna height in m.
        :param los_model: One of LosModel.ALL.
        :param shadowing_enabled: Add log-normal shadow fading if True.
        :param sigmoid_a: Constant a of the elevation sigmoid.
        :param sigmoid_b: Constant b of the elevation sigmoid.
        """
        if not carrier_freq > 0:
            raise ValueError('carrier frequency must be positive, got {}'.format(carrier_freq))
        if not bandwidth > 0:
            raise ValueError('bandwidth must be positive, got {}'.format(bandwidth))
        if not vehicle_height >= 1.0:
            raise ValueError('vehicle height must be >= 1 m, got {}'.format(vehicle_height))
        if los_model not in LosModel.ALL:
            raise ValueError('unknown LoS model: {}'.format(los_model))
        self.carrier_freq = float(carrier_freq)
        self.tx_power = float(tx_power)
        self.tx_gain = float(tx_gain)
        self.rx_gain = float(rx_gain)
        self.bandwidth = float(bandwidth)
        self.noise_figure = float(noise_figure)
        self.vehicle_height = float(vehicle_height)
        self.los_model = los_model
        self.shadowing_enabled = bool(shadowing_enabled)
        self.sigmoid_a = float(sigmoid_a)
        self.sigmoid_b = float(sigmoid_b)

    def with_los_model(self, los_model: str) -> 'ChannelParams':
        """
        Returns a copy using another LoS strategy.
        :param los_model: One of LosModel.ALL.
        :return: New parameter set.
        """
        params = dict(vars(self))
        params['los_model'] = los_model
        return ChannelParams(**params)

    def __eq__(self, other) -> bool:
        return isinstance(other, ChannelParams) and vars(self) == vars(other)


class LinkGeometry:
    """
    Geometry of one or many (vectorized) vehicle-station links. Distances and heights in m.
    """
    def __init__(self, d2d: Number, bs_height: Number, ut_height: float) -> None:
        """
        Raises ValueError on negative distances or heights.
        :param d2d: Horizontal distance.
        :param bs_height: Base station height.
        :param ut_height: Vehicle antenna height.
        """
        if np.any(np.asarray(d2d) < 0):
            raise ValueError('horizontal distance must be >= 0')
        if np.any(np.asarray(bs_height) <= 0) or ut_height <= 0:
            raise ValueError('heights must be positive')
        self.d2d = d2d
        self.bs_height = bs_height
        self.ut_height = ut_height

    @property
    def d3d(self) -> Number:
        return np.hypot(self.d2d, np.subtract(self.bs_height, self.ut_height))

    @property
    def elevation_angle(self) -> Number:
        """
        Elevation in degrees, in [0, 90].
        """
        return np.degrees(np.arctan2(np.abs(np.subtract(self.bs_height, self.ut_height)), self.d2d))


class LinkBudget:
    """
    Result of a link budget evaluation.
    """
    def __init__(self, los, pathloss_db: Number, snr_db: Number) -> None:
        self.los = los
        self.pathloss_db = pathloss_db
        self.snr_db = snr_db


def _scalar_or_array(x) -> Number:
    x = np.asarray(x)
    if x.ndim == 0:
        return x.item()
    return x


def _uma_standard(geom: LinkGeometry) -> Number:
    h_ut = geom.ut_height
    if h_ut > UMA_MAX_UT_HEIGHT:
        raise ModelDomainError('UMa LoS probability valid for vehicle height <= {} m, got {}'.format(
            UMA_MAX_UT_HEIGHT, h_ut))
    c = 0.0 if h_ut <= 13 else ((h_ut - 13) / 10) ** 1.5
    d = np.maximum(np.asarray(geom.d2d, dtype=float), 18.0)
    p = (18 / d + np.exp(-d / 63) * (1 - 18 / d)) * (1 + c * 5 / 4 * (d / 100) ** 3 * np.exp(-d / 150))
    return np.where(np.asarray(geom.d2d) <= 18, 1.0, p)


def _aerial_height(h: Number, strict: bool) -> Number:
    h = np.asarray(h, dtype=float)
    outside = (h <= AERIAL_MIN_HEIGHT) | (h > AERIAL_MAX_HEIGHT)
    if np.any(outside):
        msg = 'aerial LoS probability valid for heights in ({}, {}] m, got {}'.format(
            AERIAL_MIN_HEIGHT, AERIAL_MAX_HEIGHT, np.unique(np.atleast_1d(h)[np.atleast_1d(outside)]).tolist())
        if strict:
            raise ModelDomainError(msg)
        log.warning(msg + ', clamping')
    return np.clip(h, AERIAL_MIN_HEIGHT, AERIAL_MAX_HEIGHT)


def _uma_aerial(geom: LinkGeometry, strict: bool) -> Number:
    # the station is the aerial terminal (link reciprocity)
    h = _aerial_height(geom.bs_height, strict)
    p1 = 4300 * np.log10(h) - 3800
    d1 = np.maximum(460 * np.log10(h) - 700, 18.0)
    d = np.maximum(np.asarray(geom.d2d, dtype=float), d1)
    p = d1 / d + np.exp(-d / p1) * (1 - d1 / d)
    return np.where(np.asarray(geom.d2d) <= d1, 1.0, p)


def _elevation_sigmoid(geom: LinkGeometry, a: float, b: float) -> Number:
    return 1 / (1 + a * np.exp(-b * (geom.elevation_angle - a)))


def los_probability(model: str, geom: LinkGeometry, sigmoid_a: float = SIGMOID_A, sigmoid_b: float = SIGMOID_B,
                    strict: bool = False) -> Number:
    """
    Line-of-sight probability of a link.
    Raises ModelDomainError if the geometry is outside the model's validity range. Heights outside
    the aerial model's range are clamped with a warning unless strict is set.
    :param model: One of LosModel.ALL.
    :param geom: Link geometry.
    :param sigmoid_a: Constant a of the elevation sigmoid.
    :param sigmoid_b: Constant b of the elevation sigmoid.
    :param strict: Raise instead of clamping.
    :return: Probability in [0, 1].
    """
    if model == LosModel.UMA_STANDARD:
        p = _uma_standard(geom)
    elif model == LosModel.UMA_AERIAL:
        p = _uma_aerial(geom, strict)
    elif model == LosModel.ELEVATION_SIGMOID:
        p = _elevation_sigmoid(geom, sigmoid_a, sigmoid_b)
    else:
        raise ValueError('unknown LoS model: {}'.format(model))
    return _scalar_or_array(np.clip(p, 0.0, 1.0))


def breakpoint_distance(params: ChannelParams, bs_height: Number) -> Number:
    """
    Breakpoint distance of the dual-slope LoS model, using effective heights (physical - 1 m).
    :param params: Channel parameters.
    :param bs_height: Base station height in m.
    :return: Distance in m.
    """
    f_hz = params.carrier_freq * 1e9
    return 4 * (np.asarray(bs_height) - 1.0) * (params.vehicle_height - 1.0) * f_hz / SPEED_OF_LIGHT


def pathloss_uma(params: ChannelParams, geom: LinkGeometry, los, rng: Optional[np.random.Generator] = None) -> Number:
    """
    Urban Macro path loss of a link in the given LoS state.
    Horizontal distances below 1 m are clamped to 1 m with a warning.
    Raises ModelDomainError if the carrier frequency is outside 0.5-100 GHz.
    :param params: Channel parameters.
    :param geom: Link geometry.
    :param los: LoS state (bool or bool array).
    :param rng: Random stream, required when shadowing is enabled.
    :return: Path loss in dB.
    """
    f = params.carrier_freq
    if not 0.5 <= f <= 100:
        raise ModelDomainError('UMa path loss valid for 0.5-100 GHz, got {}'.format(f))
    d2d = np.asarray(geom.d2d, dtype=float)
    if np.any(d2d < MIN_D2D):
        log.warning('Clamping {:d} horizontal distance(s) below {} m.'.format(int(np.sum(d2d < MIN_D2D)), MIN_D2D))
        d2d = np.maximum(d2d, MIN_D2D)
    h_bs = np.asarray(geom.bs_height, dtype=float)
    h_ut = geom.ut_height
    d3d = np.hypot(d2d, h_bs - h_ut)
    d_bp = breakpoint_distance(params, h_bs)
    pl_near = 28.0 + 22 * np.log10(d3d) + 20 * np.log10(f)
    pl_far = 28.0 + 40 * np.log10(d3d) + 20 * np.log10(f) - 9 * np.log10(d_bp ** 2 + (h_bs - h_ut) ** 2)
    pl_los = np.where(d2d <= d_bp, pl_near, pl_far)
    pl_nlos = np.maximum(pl_los, 13.54 + 39.08 * np.log10(d3d) + 20 * np.log10(f) - 0.6 * (h_ut - 1.5))
    los = np.asarray(los, dtype=bool)
    pl = np.where(los, pl_los, pl_nlos)
    if params.shadowing_enabled:
        if rng is None:
            raise ValueError('shadowing requires a random stream')
        sigma = np.where(los, SHADOWING_STD_LOS, SHADOWING_STD_NLOS)
        pl = pl + sigma * rng.standard_normal(np.shape(pl))
    return _scalar_or_array(pl)


def noise_power_dbm(params: ChannelParams) -> float:
    """
    Thermal noise power over the channel bandwidth plus noise figure.
    :param params: Channel parameters.
    :return: Noise power in dBm.
    """
    return THERMAL_NOISE_DBM_HZ + 10 * math.log10(params.bandwidth * 1e6) + params.noise_figure


def link_budget(params: ChannelParams, geom: LinkGeometry, rng: np.random.Generator, los=None) -> LinkBudget:
    """
    Interference-free link budget. The LoS state is drawn from the LoS probability unless forced.
    :param params: Channel parameters.
    :param geom: Link geometry.
    :param rng: Random stream.
    :param los: Forced LoS state, drawn if None.
    :return: Link budget.
    """
    if los is None:
        p = los_probability(params.los_model, geom, params.sigmoid_a, params.sigmoid_b)
        shape = np.shape(p)
        los = (rng.random(shape) < p) if shape else bool(rng.random() < p)
    pl = pathloss_uma(params, geom, los, rng)
    snr = params.tx_power + params.tx_gain + params.rx_gain - np.asarray(pl) - noise_power_dbm(params)
    return LinkBudget(los, pl, _scalar_or_array(snr))
