import math

import numpy as np
import pytest

from aerial_coverage.simulation import SnrSample


@pytest.fixture
def rng():
    return np.random.Generator(np.random.PCG64(12345))


def make_samples(snrs):
    """SNR list to samples, None marks an unserved vehicle."""
    samples = []
    for i, snr in enumerate(snrs):
        if snr is None:
            samples.append(SnrSample(i, None, math.inf, False, math.inf, -math.inf))
        else:
            samples.append(SnrSample(i, 0, 100.0, True, 90.0, float(snr)))
    return samples


@pytest.fixture
def samples_factory():
    return make_samples
