import math

import pytest

from aerial_coverage.utils import format_float_list, format_number, grid_points, parse_float_list


def test_grid_points_inclusive():
    assert grid_points(0, 1, 0.1) == [0.0, 0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 1.0]
    assert grid_points(12, 4, 4) == [12, 8, 4]
    assert grid_points(0, 1, 0.3) == [0.0, 0.3, 0.6, 0.9, 1.0]
    assert grid_points(2.5, 2.5, 1) == [2.5]


@pytest.mark.parametrize('start, stop, step', [
    (0, 1, 0),
    (0, 1, -0.5),
    (0, math.inf, 1),
    (math.nan, 1, 1),
    (0, 1, math.inf),
    (0, 1e9, 1e-3),
])
def test_grid_points_rejects(start, stop, step):
    with pytest.raises(ValueError):
        grid_points(start, stop, step)


def test_parse_float_list():
    assert parse_float_list('1, 2,4') == [1.0, 2.0, 4.0]
    assert parse_float_list('2:4:1') == [2.0, 3.0, 4.0]
    with pytest.raises(ValueError):
        parse_float_list('1:2')
    with pytest.raises(ValueError):
        parse_float_list('a,b')
    with pytest.raises(ValueError):
        parse_float_list('0:inf:1')


def test_float_list_round_trip():
    values = [0.1, 2.0, 1e-7]
    assert parse_float_list(format_float_list(values)) == values


def test_format_number():
    assert format_number(0.123456789) == '0.123457'
    assert format_number(25.0) == '25'
    assert format_number(-101.0) == '-101'
