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
from typing import Any, Callable, Optional

from .exceptions import ConfigError
from .channel import SIGMOID_A, SIGMOID_B, ChannelParams, LosModel
from .simulation import StationKind
from .utils import format_float_list, parse_float_list
from .scenarios import AUTO_LOS_MODEL, DEFAULT_LAMBDAS, PLACEMENT_CENTRAL, PLACEMENT_PPP, ScenarioConfig

SWEEP_DENSITY = 'sweep-density'
SNR_CDF = 'snr-cdf'
SE_TABLE = 'se-table'
EXPERIMENTS = (SWEEP_DENSITY, SNR_CDF, SE_TABLE)

# experiment defaults for keys left unset: chi_km, placement, gbs_height_m, abs_heights_m
EXPERIMENT_DEFAULTS = {
    SWEEP_DENSITY: (1.0, PLACEMENT_PPP, 25.0, (25.0, 50.0, 100.0)),
    SNR_CDF: (2.0, PLACEMENT_PPP, 25.0, (25.0, 50.0, 100.0)),
    SE_TABLE: (0.5, PLACEMENT_CENTRAL, 15.0, (40.0, 60.0, 80.0, 100.0)),
}

RNG_HEADER = '# rng = numpy PCG64, realization seed = splitmix64(seed + (index + 1) * 0x9E3779B97F4A7C15)'


def _bool(text: str) -> bool:
    value = text.strip().lower()
    if value in ('1', 'true', 'yes', 'on'):
        return True
    if value in ('0', 'false', 'no', 'off'):
        return False
    raise ValueError('not a boolean: {}'.format(text))


def _int(text: str) -> int:
    return int(text.strip())


def _float(text: str) -> float:
    return float(text.strip())


def _str(text: str) -> str:
    return text.strip()


def _floats(text: str) -> tuple[float, ...]:
    return tuple(parse_float_list(text))


def _finite(x) -> bool:
    return math.isfinite(x)


def _positive(x) -> bool:
    return math.isfinite(x) and x > 0


def _non_negative(x) -> bool:
    return math.isfinite(x) and x >= 0


# key: (parser, validator, requirement)
KEYS: dict[str, tuple[Callable[[str], Any], Callable[[Any], bool], str]] = {
    'chi_km': (_float, _positive, 'must be finite and > 0'),
    'line_intensity': (_float, _non_negative, 'must be finite and >= 0'),
    'vehicles': (_int, _non_negative, 'must be >= 0'),
    'realizations': (_int, lambda x: x >= 1, 'must be >= 1'),
    'seed': (_int, lambda x: 0 <= x < 2 ** 64, 'must be in [0, 2^64)'),
    'freq_ghz': (_float, lambda x: 0.5 <= x <= 100, 'must be in [0.5, 100] GHz'),
    'tx_power_dbm': (_float, _finite, 'must be a finite number'),
    'tx_gain_dbi': (_float, _finite, 'must be a finite number'),
    'rx_gain_dbi': (_float, _finite, 'must be a finite number'),
    'bandwidth_mhz': (_float, _positive, 'must be finite and > 0'),
    'noise_figure_db': (_float, _non_negative, 'must be finite and >= 0'),
    'snr_threshold_db': (_float, _finite, 'must be a finite number'),
    'los_model': (_str, lambda x: x == AUTO_LOS_MODEL or x in LosModel.ALL,
                  'must be one of {}'.format(', '.join((AUTO_LOS_MODEL,) + LosModel.ALL))),
    'shadowing': (_bool, lambda x: True, ''),
    'gbs_height_m': (_float, _positive, 'must be finite and > 0'),
    'abs_heights_m': (_floats, lambda xs: all(_positive(x) for x in xs), 'heights must be finite and > 0'),
    'lambda_grid': (_floats, lambda xs: all(_non_negative(x) for x in xs), 'densities must be finite and >= 0'),
    'placement': (_str, lambda x: x in (PLACEMENT_PPP, PLACEMENT_CENTRAL), 'must be ppp or central'),
    'vehicle_height_m': (_float, lambda x: 1.0 <= x <= 23.0, 'must be in [1, 23] m'),
    'cdf_lambda_per_km2': (_float, _non_negative, 'must be finite and >= 0'),
    'sigmoid_a': (_float, _positive, 'must be finite and > 0'),
    'sigmoid_b': (_float, _positive, 'must be finite and > 0'),
}


class Config:
    """
    Encapsulates configuration variables. Keys left at None fall back to the
    defaults of the selected experiment.
    """
    chi_km: Optional[float] = None
    line_intensity: float = 2.0
    vehicles: int = 200
    realizations: int = 500
    seed: int = 0
    freq_ghz: float = 3.5
    tx_power_dbm: float = 23.0
    tx_gain_dbi: float = 10.0
    rx_gain_dbi: float = 2.0
    bandwidth_mhz: float = 20.0
    noise_figure_db: float = 9.0
    snr_threshold_db: float = 30.0
    los_model: str = AUTO_LOS_MODEL
    shadowing: bool = False
    gbs_height_m: Optional[float] = None
    abs_heights_m: Optional[tuple[float, ...]] = None
    lambda_grid: tuple[float, ...] = DEFAULT_LAMBDAS
    placement: Optional[str] = None
    vehicle_height_m: float = 1.5
    cdf_lambda_per_km2: float = 4.0
    sigmoid_a: float = SIGMOID_A
    sigmoid_b: float = SIGMOID_B

    def as_dict(self) -> dict[str, Any]:
        """
        :return: All keys with their effective values.
        """
        return {key: getattr(self, key) for key in KEYS}

    def __eq__(self, other) -> bool:
        return isinstance(other, Config) and self.as_dict() == other.as_dict()

    @classmethod
    def from_text(cls, text: str) -> 'Config':
        """
        Parses a flat key=value document. '#' starts a comment.
        Raises ConfigError naming the line and key on the first problem; nothing is accepted partially.
        :param text: Config file content.
        :return: Validated configuration.
        """
        config = cls()
        seen = set()
        for number, raw in enumerate(text.splitlines(), start=1):
            line = raw.split('#', 1)[0].strip()
            if not line:
                continue
            if '=' not in line:
                raise ConfigError('expected key=value', line=number)
            key, value = (part.strip() for part in line.split('=', 1))
            if key not in KEYS:
                raise ConfigError('unknown key', key, number)
            if key in seen:
                raise ConfigError('duplicate key', key, number)
            seen.add(key)
            parser, valid, requirement = KEYS[key]
            try:
                parsed = parser(value)
            except ValueError:
                raise ConfigError('cannot parse {!r}'.format(value), key, number) from None
            if not valid(parsed):
                raise ConfigError('{!r} {}'.format(value, requirement), key, number)
            setattr(config, key, parsed)
        return config

    def to_text(self) -> str:
        """
        Config echo. Parsing it reproduces an equal configuration.
        :return: Config file content.
        """
        lines = [RNG_HEADER]
        for key, value in self.as_dict().items():
            if value is None:
                continue
            if isinstance(value, bool):
                text = 'true' if value else 'false'
            elif isinstance(value, tuple):
                text = format_float_list(value)
            elif isinstance(value, float):
                text = repr(value)
            else:
                text = str(value)
            lines.append('{}={}'.format(key, text))
        return '\n'.join(lines) + '\n'

    def channel_params(self) -> ChannelParams:
        """
        :return: Channel parameters of this configuration.
        """
        return ChannelParams(carrier_freq=self.freq_ghz, tx_power=self.tx_power_dbm, tx_gain=self.tx_gain_dbi,
                             rx_gain=self.rx_gain_dbi, bandwidth=self.bandwidth_mhz,
                             noise_figure=self.noise_figure_db, vehicle_height=self.vehicle_height_m,
                             shadowing_enabled=self.shadowing, sigmoid_a=self.sigmoid_a, sigmoid_b=self.sigmoid_b)

    def base_scenario(self, experiment: str) -> ScenarioConfig:
        """
        Base scenario of an experiment, unset keys filled with the experiment defaults.
        :param experiment: One of EXPERIMENTS.
        :return: Scenario.
        """
        chi, placement, _, _ = EXPERIMENT_DEFAULTS[experiment]
        return ScenarioConfig(chi_km=self.chi_km if self.chi_km is not None else chi,
                              line_intensity=self.line_intensity, vehicles=self.vehicles,
                              placement=self.placement or placement, intensity_lambda=self.cdf_lambda_per_km2,
                              params=self.channel_params(), los_model=self.los_model,
                              threshold_delta=self.snr_threshold_db, realizations=self.realizations,
                              seed=self.seed)

    def gbs_height(self, experiment: str) -> float:
        return self.gbs_height_m if self.gbs_height_m is not None else EXPERIMENT_DEFAULTS[experiment][2]

    def abs_heights(self, experiment: str) -> tuple[float, ...]:
        return self.abs_heights_m if self.abs_heights_m is not None else EXPERIMENT_DEFAULTS[experiment][3]

    def variants(self, experiment: str) -> list[tuple[str, float]]:
        """
        GBS first, then ABS by ascending height.
        :param experiment: One of EXPERIMENTS.
        :return: (kind, height) pairs.
        """
        return [(StationKind.GBS, self.gbs_height(experiment))] + \
               [(StationKind.ABS, h) for h in sorted(self.abs_heights(experiment))]


def parse_config(text: str) -> Config:
    """
    Parses and validates a config document.
    :param text: Config file content.
    :return: Configuration.
    """
    return Config.from_text(text)
