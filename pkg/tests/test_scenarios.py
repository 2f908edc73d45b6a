import numpy as np
import pytest

from aerial_coverage.exceptions import SimulationError
from aerial_coverage.utils import derive_seed, splitmix64
from aerial_coverage.metrics import MetricsSummary, snr_percentile
from aerial_coverage.simulation import StationKind
from aerial_coverage.channel import LosModel
from aerial_coverage.scenarios import (ExperimentResult, ScenarioConfig, cdf_experiment, density_for_coverage,
                                       density_sweep, run_scenario, se_gain, se_height_table)

GBS25 = (StationKind.GBS, 25.0)
ABS25 = (StationKind.ABS, 25.0)
ABS100 = (StationKind.ABS, 100.0)


def summary(cp=0.0, se=float('nan')):
    return MetricsSummary(cp, 0.0, float('nan'), 0.0, np.array([]), se, 0.0, 1, 1)


def test_seed_derivation_is_splitmix64():
    assert derive_seed(0, 0) == 0xE220A8397B1DCDAF
    assert derive_seed(0, 1) == 0x6E789E6AA1B965F4
    assert splitmix64(0) == 0
    assert derive_seed(1, 0) != derive_seed(0, 0)


def test_run_scenario_is_deterministic():
    config = ScenarioConfig(realizations=3, seed=5)
    a, b = run_scenario(config), run_scenario(config)
    assert a.coverage_prob == b.coverage_prob
    assert a.mean_se == b.mean_se
    assert a.cdf_points == b.cdf_points


def test_parallel_matches_sequential():
    config = ScenarioConfig(bs_kind=StationKind.ABS, bs_height=50.0, realizations=12, seed=8)
    sequential, parallel = run_scenario(config, workers=1), run_scenario(config, workers=4)
    assert sequential.coverage_prob == parallel.coverage_prob
    assert sequential.coverage_stderr == parallel.coverage_stderr
    assert np.array_equal(sequential.pooled_snr_db, parallel.pooled_snr_db)


def test_seed_changes_samples():
    config = ScenarioConfig(realizations=2)
    assert not np.array_equal(run_scenario(config.replace(seed=1)).pooled_snr_db,
                              run_scenario(config.replace(seed=2)).pooled_snr_db)


def test_zero_density_zero_coverage():
    results = density_sweep(ScenarioConfig(realizations=3), [0.0], [GBS25, ABS100])
    assert [r.summary.coverage_prob for r in results] == [0.0, 0.0]


def test_low_threshold_full_coverage():
    result = run_scenario(ScenarioConfig(intensity_lambda=20.0, threshold_delta=-1000.0, realizations=5))
    assert result.coverage_prob == 1.0


def test_density_sweep_rows_and_ordering():
    base = ScenarioConfig(realizations=20, seed=3)
    results = density_sweep(base, [4.0, 1.0], [GBS25, ABS100])
    assert [(r.variant, r.intensity_lambda) for r in results] == [
        ('GBS25', 1.0), ('GBS25', 4.0), ('ABS100', 1.0), ('ABS100', 4.0)]
    cp = {(r.variant, r.intensity_lambda): r.summary.coverage_prob for r in results}
    assert cp[('ABS100', 4.0)] > cp[('GBS25', 4.0)]
    assert cp[('GBS25', 4.0)] > cp[('GBS25', 1.0)]
    assert cp[('ABS100', 4.0)] > cp[('ABS100', 1.0)]


def test_density_sweep_rejects_bad_grid():
    with pytest.raises(ValueError):
        density_sweep(ScenarioConfig(realizations=1), [], [GBS25])
    with pytest.raises(ValueError):
        density_sweep(ScenarioConfig(realizations=1), [-1.0], [GBS25])


def test_cdf_experiment_relations():
    base = ScenarioConfig(chi_km=2.0, intensity_lambda=4.0, realizations=20, seed=11)
    results = {r.variant: r.summary for r in cdf_experiment(base, [GBS25, ABS25, ABS100])}
    assert results['ABS100'].mean_snr_db > results['ABS25'].mean_snr_db
    assert snr_percentile(results['ABS25'], 99) > snr_percentile(results['ABS100'], 99)
    assert snr_percentile(results['GBS25'], 99) > snr_percentile(results['ABS100'], 99)
    for s in results.values():
        assert s.cdf_points[-1][1] == 1.0


def test_se_table_relations():
    base = ScenarioConfig(chi_km=0.5, placement='central', realizations=20, seed=2)
    results = se_height_table(base)
    assert [r.variant for r in results] == ['GBS15', 'ABS40', 'ABS60', 'ABS80', 'ABS100']
    gain = se_gain(results)
    assert gain['ABS40'] >= 0.4


def test_explicit_los_model_overrides_tier():
    config = ScenarioConfig(bs_kind=StationKind.ABS, los_model=LosModel.ELEVATION_SIGMOID)
    assert config.channel().los_model == LosModel.ELEVATION_SIGMOID
    assert ScenarioConfig(bs_kind=StationKind.ABS).channel().los_model == LosModel.UMA_AERIAL
    assert ScenarioConfig(bs_kind=StationKind.GBS).channel().los_model == LosModel.UMA_STANDARD


def test_realization_error_names_index():
    with pytest.raises(SimulationError, match='realization 0'):
        run_scenario(ScenarioConfig(line_intensity=0.0, realizations=2))


def test_zero_vehicles_has_no_samples():
    with pytest.raises(SimulationError, match='realization 0'):
        run_scenario(ScenarioConfig(vehicles=0, realizations=1))


def test_density_for_coverage_interpolates():
    results = [ExperimentResult(StationKind.GBS, 25.0, summary(cp), lam)
               for lam, cp in [(1.0, 0.2), (8.0, 0.8), (12.0, 1.0)]]
    results += [ExperimentResult(StationKind.ABS, 100.0, summary(cp), lam) for lam, cp in [(1.0, 0.97)]]
    results += [ExperimentResult(StationKind.ABS, 25.0, summary(cp), lam) for lam, cp in [(1.0, 0.5)]]
    required = density_for_coverage(results, 0.95)
    assert required['GBS25'] == pytest.approx(11.0)
    assert required['ABS100'] == 1.0
    assert required['ABS25'] is None


def test_se_gain():
    results = [ExperimentResult(StationKind.GBS, 15.0, summary(se=8.0)),
               ExperimentResult(StationKind.ABS, 40.0, summary(se=12.0))]
    assert se_gain(results) == {'ABS40': pytest.approx(0.5)}
    with pytest.raises(ValueError):
        se_gain(results[1:])


def test_scenario_validation():
    with pytest.raises(ValueError):
        ScenarioConfig(realizations=0)
    with pytest.raises(ValueError):
        ScenarioConfig(placement='grid')
    with pytest.raises(ValueError):
        ScenarioConfig(chi_km=-1.0)
