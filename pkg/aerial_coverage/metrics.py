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

import numpy as np

from .exceptions import NoSamples
from .simulation import SnrSample


def _served_snr(samples: list[SnrSample]) -> np.ndarray:
    return np.array([s.snr_db for s in samples if s.served], dtype=float)


def coverage_probability(samples: list[SnrSample], threshold_delta: float) -> float:
    """
    Fraction of samples with SNR >= threshold. Unserved samples count as failures.
    Raises NoSamples if the list is empty.
    :param samples: SNR samples.
    :param threshold_delta: SNR threshold in dB.
    :return: Coverage probability.
    """
    if len(samples) == 0:
        raise NoSamples('coverage probability of an empty sample set')
    covered = sum(1 for s in samples if s.served and s.snr_db >= threshold_delta)
    return covered / len(samples)


def _cdf_points(sorted_snr: np.ndarray) -> list[tuple[float, float]]:
    values, counts = np.unique(sorted_snr, return_counts=True)
    fractions = np.cumsum(counts) / len(sorted_snr)
    fractions[-1] = 1.0
    return [(float(v), float(f)) for v, f in zip(values, fractions)]


def empirical_cdf(samples: list[SnrSample]) -> list[tuple[float, float]]:
    """
    Empirical CDF of the SNR over served samples, one point per distinct value.
    Raises NoSamples if no sample is served.
    :param samples: SNR samples.
    :return: Ordered (snr_db, cumulative fraction) points.
    """
    snr = _served_snr(samples)
    if len(snr) == 0:
        raise NoSamples('empirical CDF without served samples')
    return _cdf_points(np.sort(snr))


def cdf_at(cdf_points: list[tuple[float, float]], x: float, left: bool = False) -> float:
    """
    Evaluates a step CDF. The CDF is right-continuous, P(SNR <= x). With left=True the
    limit from the left P(SNR < x) is returned, which is the complement of the coverage
    probability at threshold x even when samples equal x.
    :param cdf_points: Ordered CDF points.
    :param x: SNR in dB.
    :param left: Evaluate just below x.
    :return: Cumulative fraction at x.
    """
    values = [p[0] for p in cdf_points]
    i = int(np.searchsorted(values, x, side='left' if left else 'right'))
    return 0.0 if i == 0 else cdf_points[i - 1][1]


def spectral_efficiency(snr_db):
    """
    Shannon spectral efficiency log2(1 + SNR).
    Raises ValueError for non-finite SNR, unserved links are not mapped to 0.
    :param snr_db: SNR in dB (scalar or array).
    :return: bit/s/Hz
    """
    snr_db = np.asarray(snr_db, dtype=float)
    if not np.all(np.isfinite(snr_db)):
        raise ValueError('spectral efficiency needs a finite SNR')
    se = np.log2(1 + 10 ** (snr_db / 10))
    return se.item() if se.ndim == 0 else se


class RealizationMetrics:
    """
    Metrics of one realization.
    """
    def __init__(self, samples: list[SnrSample], threshold_delta: float) -> None:
        """
        Raises NoSamples if the realization has no vehicle.
        :param samples: SNR samples of the realization.
        :param threshold_delta: SNR threshold in dB.
        """
        self.coverage_prob = coverage_probability(samples, threshold_delta)
        self.n_samples = len(samples)
        self.served_snr_db = _served_snr(samples)
        self.mean_se = None
        self.mean_snr_db = None
        if len(self.served_snr_db) > 0:
            self.mean_se = math.fsum(np.sort(spectral_efficiency(self.served_snr_db))) / len(self.served_snr_db)
            self.mean_snr_db = math.fsum(np.sort(self.served_snr_db)) / len(self.served_snr_db)


def _mean_stderr(values: list[float]) -> tuple[float, float]:
    if len(values) == 0:
        return math.nan, math.nan
    values = sorted(values)
    n = len(values)
    mean = math.fsum(values) / n
    if n == 1:
        return mean, 0.0
    var = math.fsum(sorted((v - mean) ** 2 for v in values)) / (n - 1)
    return mean, math.sqrt(var / n)


class MetricsSummary:
    """
    Aggregate of all realizations of one scenario. SNR and SE statistics only cover served
    vehicles and are NaN (with an empty CDF) when no vehicle was ever served.
    """
    def __init__(self, coverage_prob: float, coverage_stderr: float, mean_snr_db: float, mean_snr_stderr: float,
                 pooled_snr_db: np.ndarray, mean_se: float, se_stderr: float, n_realizations: int,
                 n_samples: int) -> None:
        self.coverage_prob = coverage_prob
        self.coverage_stderr = coverage_stderr
        self.mean_snr_db = mean_snr_db
        self.mean_snr_stderr = mean_snr_stderr
        self.pooled_snr_db = pooled_snr_db
        self.cdf_points = _cdf_points(pooled_snr_db) if len(pooled_snr_db) > 0 else []
        self.mean_se = mean_se
        self.se_stderr = se_stderr
        self.n_realizations = n_realizations
        self.n_samples = n_samples


def aggregate(per_realization: list[RealizationMetrics]) -> MetricsSummary:
    """
    Averages realization metrics. Standard errors are sample stddev / sqrt(n) over realizations,
    the CDF pools all served samples. The result does not depend on the realization order.
    Raises NoSamples if the list is empty.
    :param per_realization: Realization metrics.
    :return: Summary.
    """
    if len(per_realization) == 0:
        raise NoSamples('no realization to aggregate')
    cp, cp_err = _mean_stderr([m.coverage_prob for m in per_realization])
    _, snr_err = _mean_stderr([m.mean_snr_db for m in per_realization if m.mean_snr_db is not None])
    se, se_err = _mean_stderr([m.mean_se for m in per_realization if m.mean_se is not None])
    pooled = np.sort(np.concatenate([m.served_snr_db for m in per_realization]))
    mean_snr = math.fsum(pooled) / len(pooled) if len(pooled) > 0 else math.nan
    return MetricsSummary(cp, cp_err, mean_snr, snr_err, pooled, se, se_err, len(per_realization),
                          sum(m.n_samples for m in per_realization))


def snr_percentile(summary: MetricsSummary, q: float) -> float:
    """
    Percentile of the pooled SNR of served vehicles.
    Raises NoSamples if no vehicle was served.
    :param summary: Metrics summary.
    :param q: Percentile in [0, 100].
    :return: SNR in dB.
    """
    if len(summary.pooled_snr_db) == 0:
        raise NoSamples('percentile without served samples')
    return float(np.percentile(summary.pooled_snr_db, q))
