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

import copy
import logging
from typing import Optional

import numpy as np

from .utils import derive_seed
from .worker import RealizationWorker
from .exceptions import SimulationError
from .channel import ChannelParams, LosModel
from .metrics import MetricsSummary, RealizationMetrics, aggregate
from .simulation import StationKind, build_realization, evaluate_realization

AUTO_LOS_MODEL = 'auto'
PLACEMENT_PPP = 'ppp'
PLACEMENT_CENTRAL = 'central'

DEFAULT_VARIANTS = ((StationKind.GBS, 25.0), (StationKind.ABS, 25.0), (StationKind.ABS, 50.0),
                    (StationKind.ABS, 100.0))
DEFAULT_LAMBDAS = (1.0, 2.0, 4.0, 8.0, 12.0)
DEFAULT_TABLE_HEIGHTS = (40.0, 60.0, 80.0, 100.0)

log = logging.getLogger(__name__)


class ScenarioConfig:
    """
    Everything one Monte Carlo run needs.
    """
    def __init__(self, chi_km: float = 1.0, line_intensity: float = 2.0, vehicles: int = 200,
                 bs_kind: str = StationKind.GBS, bs_height: float = 25.0, placement: str = PLACEMENT_PPP,
                 intensity_lambda: float = 4.0, params: Optional[ChannelParams] = None,
                 los_model: str = AUTO_LOS_MODEL, threshold_delta: float = 30.0, realizations: int = 500,
                 seed: int = 0) -> None:
        """
        Raises ValueError on invalid values.
        :param chi_km: Disc radius in km.
        :param line_intensity: Road line intensity (lines per rad km).
        :param vehicles: Vehicles per realization.
        :param bs_kind: Station tier.
        :param bs_height: Station height in m.
        :param placement: 'ppp' or 'central'.
        :param intensity_lambda: Station density in BS/km² (ppp placement).
        :param params: Channel parameters.
        :param los_model: 'auto' or one of LosModel.ALL.
        :param threshold_delta: SNR threshold in dB.
        :param realizations: Number of realizations.
        :param seed: Master seed.
        """
        if not chi_km > 0:
            raise ValueError('disc radius must be positive')
        if not line_intensity >= 0:
            raise ValueError('line intensity must be >= 0')
        if vehicles < 0:
            raise ValueError('vehicle count must be >= 0')
        if bs_kind not in StationKind.ALL:
            raise ValueError('unknown station kind: {}'.format(bs_kind))
        if not bs_height > 0:
            raise ValueError('station height must be positive')
        if placement not in (PLACEMENT_PPP, PLACEMENT_CENTRAL):
            raise ValueError('unknown placement: {}'.format(placement))
        if not intensity_lambda >= 0:
            raise ValueError('station density must be >= 0')
        if los_model != AUTO_LOS_MODEL and los_model not in LosModel.ALL:
            raise ValueError('unknown LoS model: {}'.format(los_model))
        if realizations < 1:
            raise ValueError('at least one realization required')
        if seed < 0:
            raise ValueError('seed must be >= 0')
        self.chi_km = float(chi_km)
        self.line_intensity = float(line_intensity)
        self.vehicles = int(vehicles)
        self.bs_kind = bs_kind
        self.bs_height = float(bs_height)
        self.placement = placement
        self.intensity_lambda = float(intensity_lambda)
        self.params = params if params is not None else ChannelParams()
        self.los_model = los_model
        self.threshold_delta = float(threshold_delta)
        self.realizations = int(realizations)
        self.seed = int(seed)

    def replace(self, **kwargs) -> 'ScenarioConfig':
        """
        Returns a copy with some fields replaced.
        :param kwargs: Fields to replace.
        :return: New scenario.
        """
        fields = dict(vars(self))
        fields.update(kwargs)
        return ScenarioConfig(**fields)

    def channel(self) -> ChannelParams:
        """
        Channel parameters with the LoS strategy resolved for the station tier.
        :return: Channel parameters.
        """
        model = self.los_model
        if model == AUTO_LOS_MODEL:
            model = LosModel.UMA_AERIAL if self.bs_kind == StationKind.ABS else LosModel.UMA_STANDARD
        return self.params.with_los_model(model)

    def variant(self) -> str:
        return '{}{:g}'.format(self.bs_kind, self.bs_height)


class ExperimentResult:
    """
    Summary of one point of an experiment.
    """
    def __init__(self, bs_kind: str, height: float, summary: MetricsSummary,
                 intensity_lambda: Optional[float] = None) -> None:
        self.bs_kind = bs_kind
        self.height = height
        self.intensity_lambda = intensity_lambda
        self.summary = summary

    @property
    def variant(self) -> str:
        return '{}{:g}'.format(self.bs_kind, self.height)


def run_realization(config: ScenarioConfig, index: int, params: Optional[ChannelParams] = None) -> RealizationMetrics:
    """
    Builds and evaluates one realization on its own PCG64 stream.
    Raises SimulationError naming the realization index.
    :param config: Scenario.
    :param index: Realization index.
    :param params: Resolved channel parameters, resolved from the scenario if None.
    :return: Realization metrics.
    """
    params = params or config.channel()
    rng = np.random.Generator(np.random.PCG64(derive_seed(config.seed, index)))
    try:
        deployment = build_realization(config, rng)
        samples = evaluate_realization(deployment, params, rng)
        return RealizationMetrics(samples, config.threshold_delta)
    except SimulationError as e:
        raise SimulationError('realization {:d}: {}'.format(index, e)) from e


def run_scenario(config: ScenarioConfig, workers: int = 1) -> MetricsSummary:
    """
    Runs all realizations of a scenario and aggregates them.
    :param config: Scenario.
    :param workers: Number of worker threads.
    :return: Summary.
    """
    log.info('Running {} ({} realizations, seed {}).'.format(config.variant(), config.realizations, config.seed))
    params = config.channel()
    worker = RealizationWorker(lambda i: run_realization(config, i, params), config.realizations, workers,
                               config.variant())
    return aggregate(worker.run())


def density_sweep(base: ScenarioConfig, lambdas: list[float], variants: list[tuple[str, float]],
                  workers: int = 1) -> list[ExperimentResult]:
    """
    Coverage probability against station density.
    :param base: Base scenario (chi, roads, channel, threshold, seed).
    :param lambdas: Station densities in BS/km².
    :param variants: (kind, height) pairs.
    :param workers: Number of worker threads.
    :return: One result per (variant, lambda), variant first then lambda ascending.
    """
    if len(lambdas) == 0 or any(lam < 0 for lam in lambdas):
        raise ValueError('lambda grid must be non-empty and non-negative')
    results = []
    for kind, height in variants:
        for lam in sorted(lambdas):
            config = base.replace(bs_kind=kind, bs_height=height, intensity_lambda=lam)
            results.append(ExperimentResult(kind, height, run_scenario(config, workers), lam))
    return results


def cdf_experiment(base: ScenarioConfig, variants: list[tuple[str, float]],
                   workers: int = 1) -> list[ExperimentResult]:
    """
    Pooled SNR distribution per variant at the base station density.
    :param base: Base scenario.
    :param variants: (kind, height) pairs.
    :param workers: Number of worker threads.
    :return: One result per variant.
    """
    results = []
    for kind, height in variants:
        config = base.replace(bs_kind=kind, bs_height=height)
        results.append(ExperimentResult(kind, height, run_scenario(config, workers), base.intensity_lambda))
    return results


def se_height_table(base: ScenarioConfig, heights: list[float] = DEFAULT_TABLE_HEIGHTS, gbs_height: float = 15.0,
                    workers: int = 1) -> list[ExperimentResult]:
    """
    Spectral efficiency per station height: GBS row followed by ABS rows. Uses the base placement,
    a single central station for the height table.
    :param base: Base scenario.
    :param heights: ABS heights in m.
    :param gbs_height: GBS height in m.
    :param workers: Number of worker threads.
    :return: One result per (kind, height).
    """
    rows = [(StationKind.GBS, gbs_height)] + [(StationKind.ABS, h) for h in sorted(heights)]
    results = []
    for kind, height in rows:
        config = base.replace(bs_kind=kind, bs_height=height)
        results.append(ExperimentResult(kind, height, run_scenario(config, workers)))
    return results


def density_for_coverage(results: list[ExperimentResult], target_cp: float) -> dict[str, Optional[float]]:
    """
    Smallest density reaching a target coverage, linearly interpolated between sweep points.
    :param results: Density sweep results.
    :param target_cp: Target coverage probability.
    :return: Density in BS/km² per variant, None if the sweep never reaches the target.
    """
    by_variant = {}
    for r in results:
        by_variant.setdefault(r.variant, []).append((r.intensity_lambda, r.summary.coverage_prob))
    required = {}
    for variant, points in by_variant.items():
        points.sort()
        required[variant] = None
        for i, (lam, cp) in enumerate(points):
            if cp >= target_cp:
                if i == 0:
                    required[variant] = lam
                else:
                    lam0, cp0 = points[i - 1]
                    required[variant] = lam0 + (target_cp - cp0) * (lam - lam0) / (cp - cp0)
                break
    return required


def se_gain(results: list[ExperimentResult]) -> dict[str, float]:
    """
    Relative spectral efficiency gain of every ABS row over the GBS row.
    Raises ValueError if there is no GBS row.
    :param results: SE table results.
    :return: Gain per ABS variant (0.635 = 63.5 % more).
    """
    gbs = [r for r in results if r.bs_kind == StationKind.GBS]
    if len(gbs) == 0:
        raise ValueError('no GBS reference row')
    reference = gbs[0].summary.mean_se
    return {r.variant: r.summary.mean_se / reference - 1 for r in results if r.bs_kind == StationKind.ABS}
