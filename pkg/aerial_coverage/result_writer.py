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
import csv
import logging
from typing import Optional

from .utils import format_number
from .scenarios import ExperimentResult

DENSITY_SWEEP = 'density_sweep'
SNR_CDF = 'snr_cdf'
SE_TABLE = 'se_table'

HEADERS = {
    DENSITY_SWEEP: ['bs_kind', 'height_m', 'lambda_per_km2', 'coverage_prob', 'coverage_stderr'],
    SNR_CDF: ['bs_kind', 'height_m', 'snr_db', 'cdf'],
    SE_TABLE: ['bs_kind', 'height_m', 'se_bits_per_hz', 'se_stderr'],
}

PLOT_SCRIPTS = {
    DENSITY_SWEEP: '''
for variant, rows in groups.items():
    plt.plot([float(r['lambda_per_km2']) for r in rows], [float(r['coverage_prob']) for r in rows],
             marker='o', label=variant)
plt.xlabel('BS density (BS/km$^2$)')
plt.ylabel('Coverage probability')
''',
    SNR_CDF: '''
for variant, rows in groups.items():
    plt.step([float(r['snr_db']) for r in rows], [float(r['cdf']) for r in rows], where='post', label=variant)
plt.xlabel('SNR (dB)')
plt.ylabel('CDF')
''',
    SE_TABLE: '''
labels = list(groups)
plt.bar(labels, [float(rows[0]['se_bits_per_hz']) for rows in groups.values()],
        yerr=[float(rows[0]['se_stderr']) for rows in groups.values()])
plt.ylabel('Spectral efficiency (bit/s/Hz)')
''',
}

PLOT_TEMPLATE = '''#!/usr/bin/env python3
# Plots {csv_name}. Usage: python3 {script_name}
import os
import csv
import matplotlib.pyplot as plt

here = os.path.dirname(os.path.abspath(__file__))
with open(os.path.join(here, '{csv_name}')) as f:
    data = list(csv.DictReader(f))
groups = {{}}
for row in data:
    groups.setdefault(row['bs_kind'] + row['height_m'], []).append(row)
{body}plt.grid(True)
plt.legend()
plt.savefig(os.path.join(here, '{stem}_plot.png'))
'''


class ResultWriter:
    """
    Writes experiment results as CSV plus a plot script and the config echo.
    """
    def __init__(self, out_dir: str) -> None:
        """
        :param out_dir: Output directory, created if missing.
        """
        self.log = logging.getLogger(__name__)
        self.dir = out_dir

    def __path(self, name: str) -> str:
        return os.path.join(self.dir, name)

    @staticmethod
    def rows(kind: str, results: list[ExperimentResult]) -> list[list[str]]:
        """
        Table rows in fixed order: variant as given, then independent variable ascending.
        :param kind: One of HEADERS.
        :param results: Experiment results.
        :return: Rows of formatted cells.
        """
        order = []
        for r in results:
            if r.variant not in order:
                order.append(r.variant)
        rows = []
        for r in sorted(results, key=lambda r: (order.index(r.variant), r.intensity_lambda or 0.0)):
            head = [r.bs_kind, format_number(r.height)]
            s = r.summary
            if kind == DENSITY_SWEEP:
                rows.append(head + [format_number(r.intensity_lambda), format_number(s.coverage_prob),
                                    format_number(s.coverage_stderr)])
            elif kind == SNR_CDF:
                rows.extend(head + [format_number(snr), format_number(frac)] for snr, frac in s.cdf_points)
            elif kind == SE_TABLE:
                rows.append(head + [format_number(s.mean_se), format_number(s.se_stderr)])
            else:
                raise ValueError('unknown result kind: {}'.format(kind))
        return rows

    def write(self, kind: str, results: list[ExperimentResult], config_text: Optional[str] = None) -> list[str]:
        """
        Writes <kind>.csv, <kind>_plot.py and, if given, <kind>_config.txt.
        Raises OSError if the directory is not writable.
        :param kind: One of HEADERS.
        :param results: Experiment results, non-empty.
        :param config_text: Config echo.
        :return: Written file paths.
        """
        if len(results) == 0:
            raise ValueError('no results to write')
        rows = self.rows(kind, results)
        os.makedirs(self.dir, exist_ok=True)
        written = []
        csv_path = self.__path(kind + '.csv')
        with open(csv_path, 'w', newline='') as f:
            writer = csv.writer(f, lineterminator='\n')
            writer.writerow(HEADERS[kind])
            writer.writerows(rows)
        written.append(csv_path)
        plot_path = self.__path(kind + '_plot.py')
        with open(plot_path, 'w') as f:
            f.write(PLOT_TEMPLATE.format(csv_name=kind + '.csv', script_name=kind + '_plot.py', stem=kind,
                                         body=PLOT_SCRIPTS[kind].lstrip('\n')))
        written.append(plot_path)
        if config_text is not None:
            config_path = self.__path(kind + '_config.txt')
            with open(config_path, 'w') as f:
                f.write(config_text)
            written.append(config_path)
        for path in written:
            self.log.info('Wrote {}'.format(path))
        return written


def emit_results(kind: str, results: list[ExperimentResult], out_dir: str,
                 config_text: Optional[str] = None) -> list[str]:
    """
    Serializes experiment results.
    :param kind: One of HEADERS.
    :param results: Experiment results.
    :param out_dir: Output directory.
    :param config_text: Config echo.
    :return: Written file paths.
    """
    return ResultWriter(out_dir).write(kind, results, config_text)
