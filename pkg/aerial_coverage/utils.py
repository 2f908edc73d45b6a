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
from decimal import Decimal

MASK64 = 0xFFFFFFFFFFFFFFFF
GOLDEN_GAMMA = 0x9E3779B97F4A7C15
MAX_GRID_POINTS = 100000


def splitmix64(x: int) -> int:
    """
    SplitMix64 finalizer (Steele, Lea, Flood 2014).
    :param x: 64-bit input
    :return: Mixed 64-bit output
    """
    z = x & MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
    return z ^ (z >> 31)


def derive_seed(master_seed: int, index: int) -> int:
    """
    Derives the stream seed of one realization from the master seed.
    seed = splitmix64(master_seed + (index + 1) * 0x9E3779B97F4A7C15 mod 2^64)
    :param master_seed: Master seed of the scenario
    :param index: Realization index
    :return: 64-bit stream seed
    """
    return splitmix64((master_seed + (index + 1) * GOLDEN_GAMMA) & MASK64)


def _decimal_places(values: tuple[float, ...]) -> int:
    return max(max(0, -Decimal(str(v)).as_tuple().exponent) for v in values)


def grid_points(start: float, stop: float, step: float) -> list[float]:
    """
    Inclusive grid from start towards stop, rounded to the decimals of the inputs
    so that 0:1:0.1 gives exact tenths. Stop is always the last point.
    Raises ValueError if a bound is not finite, the step is not positive or the grid is too long.
    :param start: First point
    :param stop: Last point
    :param step: Distance between points
    :return: List of floats
    """
    if not all(math.isfinite(v) for v in (start, stop, step)):
        raise ValueError('grid bounds must be finite')
    if step <= 0:
        raise ValueError('step must be positive')
    count = int(math.floor(abs(stop - start) / step + 1e-9))
    if count >= MAX_GRID_POINTS:
        raise ValueError('grid longer than {:d} points'.format(MAX_GRID_POINTS))
    places = _decimal_places((start, stop, step))
    direction = 1 if stop >= start else -1
    points = [round(start + direction * i * step, places) for i in range(count + 1)]
    if points[-1] != round(stop, places):
        points.append(round(stop, places))
    return points


def parse_float_list(text: str) -> list[float]:
    """
    Parses a comma list ('1,2,4') or an inclusive range ('0:12:0.5').
    Raises ValueError on malformed input.
    :param text: List text
    :return: List of floats
    """
    text = text.strip()
    if ':' in text:
        parts = text.split(':')
        if len(parts) != 3:
            raise ValueError('range must be start:stop:step')
        return grid_points(*[float(p) for p in parts])
    values = [float(v) for v in text.split(',') if v.strip() != '']
    if len(values) == 0:
        raise ValueError('empty list')
    return values


def format_float_list(values: list[float]) -> str:
    """
    Inverse of parse_float_list for comma lists.
    :param values: List of floats
    :return: Comma separated text
    """
    return ','.join(repr(float(v)) for v in values)


def format_number(value: float) -> str:
    """
    Formats a number with 6 significant digits.
    :param value: Number
    :return: Text
    """
    return '{:.6g}'.format(value)
