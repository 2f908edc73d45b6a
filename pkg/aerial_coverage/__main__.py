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

import sys
import logging
import argparse
from typing import Optional

from .config import Config, EXPERIMENTS
from .experiment_runner import ExperimentRunner
from .exceptions import ConfigError, SimulationError

EXIT_OK = 0
EXIT_CONFIG = 1
EXIT_RUNTIME = 2


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(description='Aerial Coverage - Monte Carlo connectivity of vehicles served by '
                                                 'ground and aerial base stations')
    parser.add_argument('-v', '--verbosity', action='store_true', help='enable info log level')
    sub = parser.add_subparsers(dest='experiment', required=True)
    helps = {
        'sweep-density': 'coverage probability against station density',
        'snr-cdf': 'SNR distribution per station height',
        'se-table': 'spectral efficiency against station height',
    }
    for name in EXPERIMENTS:
        p = sub.add_parser(name, help=helps[name])
        p.add_argument('-c', '--config', type=str, help='config file (key=value)')
        p.add_argument('-s', '--seed', type=int, help='master seed, overrides the config file')
        p.add_argument('-o', '--out', type=str, default='results', help='output directory')
        p.add_argument('-w', '--workers', type=int, default=1, help='worker threads per scenario')
        p.add_argument('--plot', action='store_true', help='render PNG images')
        p.add_argument('-v', '--verbosity', action='store_true', default=argparse.SUPPRESS,
                       help='enable info log level')
    return parser


def load_config(path: Optional[str], seed: Optional[int]) -> Config:
    """
    Reads and validates the configuration.
    Raises ConfigError on any problem.
    :param path: Config file path, defaults only if None.
    :param seed: Seed override.
    :return: Configuration.
    """
    text = ''
    if path is not None:
        try:
            with open(path) as f:
                text = f.read()
        except OSError as e:
            raise ConfigError('cannot read {}: {}'.format(path, e.strerror)) from e
    config = Config.from_text(text)
    if seed is not None:
        if not 0 <= seed < 2 ** 64:
            raise ConfigError('must be in [0, 2^64)', 'seed')
        config.seed = seed
    return config


def main(argv: Optional[list[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    if args.verbosity is True:
        level = logging.INFO
    else:
        level = logging.ERROR

    logging.basicConfig(format='%(levelname)s:%(asctime)s:%(filename)s:%(message)s', stream=sys.stdout, level=level)
    log = logging.getLogger(__name__)
    try:
        config = load_config(args.config, args.seed)
        if args.workers < 1:
            raise ConfigError('must be >= 1', 'workers')
    except ConfigError as e:
        log.critical('Configuration error: {}'.format(e))
        return EXIT_CONFIG
    try:
        ExperimentRunner(config, args.out, args.workers, args.plot).run(args.experiment)
    except SimulationError as e:
        log.critical('Simulation failed: {}'.format(e))
        return EXIT_RUNTIME
    except OSError as e:
        log.critical('Cannot write results: {}'.format(e))
        return EXIT_RUNTIME
    return EXIT_OK


if __name__ == '__main__':
    sys.exit(main())
