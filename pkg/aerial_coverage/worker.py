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

import logging
import threading
from typing import Callable, TypeVar
from concurrent.futures import ThreadPoolExecutor

T = TypeVar('T')


class RealizationWorker:
    """
    Runs independent realizations, optionally on a thread pool.
    Results are returned in realization order whatever the number of workers.
    """
    def __init__(self, task: Callable[[int], T], count: int, workers: int = 1, name: str = '') -> None:
        """
        Raises ValueError if workers < 1.
        :param task: Callable evaluating one realization index.
        :param count: Number of realizations.
        :param workers: Number of worker threads.
        :param name: Name used in log messages.
        """
        if workers < 1:
            raise ValueError('at least one worker required')
        self.log = logging.getLogger(__name__)
        self.task = task
        self.count = count
        self.workers = workers
        self.name = name
        self.done = 0
        self.lock = threading.Lock()

    def get_progress(self) -> float:
        """
        Returns progress of the current run.
        :return: Fraction of finished realizations.
        """
        return self.done / self.count if self.count else 1.0

    def __run_one(self, index: int) -> T:
        """
        Runs one realization and updates progress.
        :param index: Realization index.
        :return: Task result.
        """
        result = self.task(index)
        with self.lock:
            self.done += 1
            step = max(self.count // 10, 1)
            if self.done % step == 0 or self.done == self.count:
                self.log.info('{}: {:.0f} % done.'.format(self.name, self.get_progress() * 100))
        return result

    def run(self) -> list[T]:
        """
        Runs all realizations.
        :return: Results ordered by realization index.
        """
        self.done = 0
        if self.workers == 1:
            return [self.__run_one(i) for i in range(self.count)]
        with ThreadPoolExecutor(max_workers=self.workers) as pool:
            return list(pool.map(self.__run_one, range(self.count)))
