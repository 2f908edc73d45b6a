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

import cv2
import cmapy
import logging
import numpy as np

from .result_writer import DENSITY_SWEEP, SE_TABLE, SNR_CDF
from .scenarios import ExperimentResult

WIDTH = 800
HEIGHT = 600
MARGIN = 70
FONT = cv2.FONT_HERSHEY_SIMPLEX

log = logging.getLogger(__name__)


class Canvas:
    """
    Minimal plot canvas on top of OpenCV drawing primitives.
    """
    def __init__(self, x_range: tuple[float, float], y_range: tuple[float, float], x_label: str,
                 y_label: str) -> None:
        self.image = np.full((HEIGHT, WIDTH, 3), 255, dtype=np.uint8)
        x0, x1 = x_range
        y0, y1 = y_range
        self.x_range = (x0, x1 if x1 > x0 else x0 + 1)
        self.y_range = (y0, y1 if y1 > y0 else y0 + 1)
        self.__draw_axes(x_label, y_label)

    def pixel(self, x: float, y: float) -> tuple[int, int]:
        """
        Maps data coordinates to pixel coordinates.
        :param x: X value.
        :param y: Y value.
        :return: Pixel (column, row).
        """
        x0, x1 = self.x_range
        y0, y1 = self.y_range
        col = MARGIN + (x - x0) / (x1 - x0) * (WIDTH - 2 * MARGIN)
        row = HEIGHT - MARGIN - (y - y0) / (y1 - y0) * (HEIGHT - 2 * MARGIN)
        return int(round(col)), int(round(row))

    def __draw_axes(self, x_label: str, y_label: str) -> None:
        black = (0, 0, 0)
        origin = (MARGIN, HEIGHT - MARGIN)
        cv2.line(self.image, origin, (WIDTH - MARGIN, HEIGHT - MARGIN), black, 1)
        cv2.line(self.image, origin, (MARGIN, MARGIN), black, 1)
        for i in range(5):
            x = self.x_range[0] + i * (self.x_range[1] - self.x_range[0]) / 4
            y = self.y_range[0] + i * (self.y_range[1] - self.y_range[0]) / 4
            col, _ = self.pixel(x, self.y_range[0])
            _, row = self.pixel(self.x_range[0], y)
            cv2.putText(self.image, '{:.3g}'.format(x), (col - 15, HEIGHT - MARGIN + 20), FONT, 0.4, black, 1)
            cv2.putText(self.image, '{:.3g}'.format(y), (10, row + 4), FONT, 0.4, black, 1)
        cv2.putText(self.image, x_label, (WIDTH // 2 - 60, HEIGHT - 20), FONT, 0.5, black, 1)
        cv2.putText(self.image, y_label, (10, MARGIN - 20), FONT, 0.5, black, 1)

    def polyline(self, xs: list[float], ys: list[float], color: list[int]) -> None:
        points = np.array([self.pixel(x, y) for x, y in zip(xs, ys)], dtype=np.int32).reshape(-1, 1, 2)
        cv2.polylines(self.image, [points], False, color, 2)

    def bar(self, x: float, width: float, y: float, color: list[int]) -> None:
        top_left = self.pixel(x - width / 2, y)
        bottom_right = self.pixel(x + width / 2, self.y_range[0])
        cv2.rectangle(self.image, top_left, bottom_right, color, -1)

    def legend(self, index: int, label: str, color: list[int]) -> None:
        row = MARGIN + 20 * index
        cv2.line(self.image, (WIDTH - MARGIN - 120, row), (WIDTH - MARGIN - 95, row), color, 3)
        cv2.putText(self.image, label, (WIDTH - MARGIN - 90, row + 5), FONT, 0.45, (0, 0, 0), 1)


def _variant_colors(variants: list[str]) -> dict[str, list[int]]:
    n = max(len(variants) - 1, 1)
    return {v: [int(c) for c in cmapy.color('viridis', int(230 * i / n))] for i, v in enumerate(variants)}


def _grouped(results: list[ExperimentResult]) -> dict[str, list[ExperimentResult]]:
    groups = {}
    for r in results:
        groups.setdefault(r.variant, []).append(r)
    return groups


def render_plot(kind: str, results: list[ExperimentResult], path: str) -> None:
    """
    Renders experiment results as a PNG image.
    Raises OSError if the image cannot be written.
    :param kind: Result kind (density sweep, SNR CDF or SE table).
    :param results: Experiment results.
    :param path: Image path.
    :return: None
    """
    groups = _grouped(results)
    colors = _variant_colors(list(groups))
    if kind == DENSITY_SWEEP:
        lambdas = [r.intensity_lambda for r in results]
        canvas = Canvas((min(lambdas), max(lambdas)), (0.0, 1.0), 'BS density (BS/km^2)', 'Coverage probability')
        for variant, rows in groups.items():
            rows = sorted(rows, key=lambda r: r.intensity_lambda)
            canvas.polyline([r.intensity_lambda for r in rows], [r.summary.coverage_prob for r in rows],
                            colors[variant])
    elif kind == SNR_CDF:
        served = [r for r in results if r.summary.cdf_points]
        lo = min((r.summary.cdf_points[0][0] for r in served), default=0.0)
        hi = max((r.summary.cdf_points[-1][0] for r in served), default=1.0)
        canvas = Canvas((lo, hi), (0.0, 1.0), 'SNR (dB)', 'CDF')
        for r in served:
            canvas.polyline([p[0] for p in r.summary.cdf_points], [p[1] for p in r.summary.cdf_points],
                            colors[r.variant])
    elif kind == SE_TABLE:
        top = max((r.summary.mean_se for r in results if r.summary.mean_se == r.summary.mean_se), default=1.0)
        canvas = Canvas((-0.5, len(results) - 0.5), (0.0, top * 1.1), 'station', 'SE (bit/s/Hz)')
        for i, r in enumerate(results):
            if r.summary.mean_se == r.summary.mean_se:
                canvas.bar(i, 0.6, r.summary.mean_se, colors[r.variant])
    else:
        raise ValueError('unknown result kind: {}'.format(kind))
    for i, variant in enumerate(groups):
        canvas.legend(i, variant, colors[variant])
    if not cv2.imwrite(path, canvas.image):
        raise OSError('could not write image: {}'.format(path))
    log.info('Rendered {}'.format(path))
