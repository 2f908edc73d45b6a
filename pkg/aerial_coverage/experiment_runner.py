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

import os
import math
import logging

from .config import Config, SE_TABLE, SNR_CDF, SWEEP_DENSITY
from .metrics import snr_percentile
from .result_writer import DENSITY_SWEEP, SE_TABLE as SE_TABLE_RESULT, SNR_CDF as SNR_CDF_RESULT, emit_results
from .scenarios import ExperimentResult, cdf_experiment, density_for_coverage, density_sweep, se_gain, se_height_table

COVERAGE_TARGET = 0.95

RESULT_KINDS = {SWEEP_DENSITY: DENSITY_SWEEP, SNR_CDF: SNR_CDF_RESULT, SE_TABLE: SE_TABLE_RESULT}


class ExperimentRunner:
    """
    Runs one experiment of a configuration and writes its results.
    """
    def __init__(self, config: Config, out_dir: str, workers: int = 1, plot: bool = False) -> None:
        """
        :param config: Validated configuration.
        :param out_dir: Output directory.
        :param workers: Number of worker threads per scenario.
        :param plot: Render PNG images if True.
        """
        self.log = logging.getLogger(__name__)
        self.config = config
        self.out_dir = out_dir
        self.workers = workers
        self.plot = plot

    def simulate(self, experiment: str) -> list[ExperimentResult]:
        """
        Runs the experiment without writing anything.
        :param experiment: One of the experiment names.
        :return: Experiment results.
        """
        base = self.config.base_scenario(experiment)
        variants = self.config.variants(experiment)
        if experiment == SWEEP_DENSITY:
            results = density_sweep(base, list(self.config.lambda_grid), variants, self.workers)
            for variant, lam in density_for_coverage(results, COVERAGE_TARGET).items():
                if lam is None:
                    self.log.info('{}: {:.0f} % coverage not reached on the grid.'.format(
                        variant, COVERAGE_TARGET * 100))
                else:
                    self.log.info('{}: {:.0f} % coverage at {:.3g} BS/km² ({:.3g} stations).'.format(
                        variant, COVERAGE_TARGET * 100, lam, lam * math.pi * base.chi_km ** 2))
        elif experiment == SNR_CDF:
            results = cdf_experiment(base, variants, self.workers)
            for r in results:
                if r.summary.cdf_points:
                    self.log.info('{}: mean SNR {:.2f} dB (+/- {:.2f}), 99th percentile {:.2f} dB.'.format(
                        r.variant, r.summary.mean_snr_db, r.summary.mean_snr_stderr, snr_percentile(r.summary, 99)))
        elif experiment == SE_TABLE:
            heights = [h for kind, h in variants[1:]]
            results = se_height_table(base, heights, variants[0][1], self.workers)
            for variant, gain in se_gain(results).items():
                self.log.info('{}: {:+.1f} % SE over GBS.'.format(variant, gain * 100))
        else:
            raise ValueError('unknown experiment: {}'.format(experiment))
        return results

    def run(self, experiment: str) -> list[str]:
        """
        Runs the experiment and writes CSV, plot script, config echo and optionally an image.
        :param experiment: One of the experiment names.
        :return: Written file paths.
        """
        results = self.simulate(experiment)
        kind = RESULT_KINDS[experiment]
        written = emit_results(kind, results, self.out_dir, self.config.to_text())
        if self.plot:
            from .plotter import render_plot
            path = os.path.join(self.out_dir, kind + '.png')
            render_plot(kind, results, path)
            written.append(path)
        return written
