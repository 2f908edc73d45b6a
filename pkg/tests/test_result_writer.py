import os

import numpy as np
import pytest

from aerial_coverage.metrics import aggregate, RealizationMetrics
from aerial_coverage.scenarios import ExperimentResult
from aerial_coverage.simulation import StationKind
from aerial_coverage.result_writer import DENSITY_SWEEP, SE_TABLE, SNR_CDF, emit_results


def result(samples_factory, kind, height, snrs, lam=None):
    summary = aggregate([RealizationMetrics(samples_factory(snrs), 30.0)])
    return ExperimentResult(kind, height, summary, lam)


def read(path):
    with open(path) as f:
        return f.read().splitlines()


def test_density_sweep_csv(tmp_path, samples_factory):
    results = [result(samples_factory, StationKind.ABS, 100.0, [40.0, 10.0, 35.0], 4.0),
               result(samples_factory, StationKind.ABS, 100.0, [40.0], 1.0),
               result(samples_factory, StationKind.GBS, 25.0, [10.0], 1.0)]
    emit_results(DENSITY_SWEEP, results, str(tmp_path))
    lines = read(tmp_path / 'density_sweep.csv')
    assert lines == ['bs_kind,height_m,lambda_per_km2,coverage_prob,coverage_stderr',
                     'ABS,100,1,1,0',
                     'ABS,100,4,0.666667,0',
                     'GBS,25,1,0,0']
    assert (tmp_path / 'density_sweep_plot.py').exists()


def test_cdf_rows_sorted_per_variant(tmp_path, rng, samples_factory):
    results = [result(samples_factory, StationKind.GBS, 25.0, rng.normal(20, 10, 30)),
               result(samples_factory, StationKind.ABS, 50.0, rng.normal(25, 10, 30))]
    emit_results(SNR_CDF, results, str(tmp_path), 'seed=1\n')
    lines = read(tmp_path / 'snr_cdf.csv')
    assert lines[0] == 'bs_kind,height_m,snr_db,cdf'
    rows = [line.split(',') for line in lines[1:]]
    assert len(rows) == 60
    for variant in (('GBS', '25'), ('ABS', '50')):
        mine = [r for r in rows if (r[0], r[1]) == variant]
        snr = [float(r[2]) for r in mine]
        assert snr == sorted(snr)
        assert mine[-1][3] == '1'
    assert read(tmp_path / 'snr_cdf_config.txt') == ['seed=1']


def test_se_table_rows(tmp_path, samples_factory):
    results = [result(samples_factory, StationKind.GBS, 15.0, [0.0])]
    results += [result(samples_factory, StationKind.ABS, h, [30.0]) for h in (40.0, 60.0, 80.0, 100.0)]
    emit_results(SE_TABLE, results, str(tmp_path))
    lines = read(tmp_path / 'se_table.csv')
    assert lines[0] == 'bs_kind,height_m,se_bits_per_hz,se_stderr'
    assert lines[1] == 'GBS,15,1,0'
    assert lines[2] == 'ABS,40,9.96723,0'
    assert len(lines) == 6


def test_same_results_same_bytes(tmp_path, samples_factory):
    results = [result(samples_factory, StationKind.ABS, 25.0, list(np.linspace(0, 50, 17)), 2.0)]
    emit_results(DENSITY_SWEEP, results, str(tmp_path / 'a'))
    emit_results(DENSITY_SWEEP, results, str(tmp_path / 'b'))
    assert (tmp_path / 'a' / 'density_sweep.csv').read_bytes() == (tmp_path / 'b' / 'density_sweep.csv').read_bytes()


def test_unwritable_path(tmp_path, samples_factory):
    blocker = tmp_path / 'file'
    blocker.write_text('')
    with pytest.raises(OSError):
        emit_results(SE_TABLE, [result(samples_factory, StationKind.GBS, 15.0, [1.0])], str(blocker / 'out'))


def test_empty_results(tmp_path):
    with pytest.raises(ValueError):
        emit_results(SE_TABLE, [], str(tmp_path))
    assert os.listdir(tmp_path) == []
