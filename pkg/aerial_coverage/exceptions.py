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

from typing import Optional


class CoverageError(Exception):
    """
    Base class of all errors raised by the simulator.
    """


class ConfigError(CoverageError):
    """
    Invalid configuration. Raised before any simulation starts.
    """
    def __init__(self, message: str, key: Optional[str] = None, line: Optional[int] = None) -> None:
        """
        :param message: Description of the problem.
        :param key: Offending configuration key.
        :param line: Line number in the config file (1-based).
        """
        self.key = key
        self.line = line
        prefix = ''
        if line is not None:
            prefix += 'line {:d}: '.format(line)
        if key is not None:
            prefix += '{:s}: '.format(key)
        super().__init__(prefix + message)


class SimulationError(CoverageError):
    """
    Raised when a realization cannot be built or evaluated.
    """


class RoadsEmpty(SimulationError):
    """
    No road chord available to place vehicles on.
    """


class ModelDomainError(SimulationError):
    """
    Channel model evaluated outside its validity range.
    """


class NoStations(SimulationError):
    """
    Association requested without any base station.
    """


class NoSamples(SimulationError):
    """
    Metric requested over an empty sample set.
    """
