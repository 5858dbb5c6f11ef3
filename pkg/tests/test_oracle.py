import numpy as np
import pytest

from bck_net.core import ConfigurationError, LatticeBox, Web
from bck_net.field import ArrowField
from bck_net.simulation.oracle import (
    MAX_ORACLE_SIZE,
    check_lattice,
    crossing_audit,
    forward_ages,
    oracle_check,
    stored_lattice,
)


def test_layered_lattices_pass():
    report = oracle_check(12, 12, reps=2)
    assert report.passed
    assert report.lattices == 2 * 3 * 2
    assert report.sites == 12 * 72


def test_joint_lattices_pass():
    report = oracle_check(10, 14, reps=2, b_grid=[0.0, 0.3, 0.8], mode="joint")
    assert report.passed


def test_tall_lattice_passes():
    report = oracle_check(6, 30, reps=1, b_grid=[0.1], k_grid=[0.0])
    assert report.passed


def test_full_branching_ages_equal_time():
    field = ArrowField.create("layered", 1.0, 0.0, seed=0)
    ages = forward_ages(field, LatticeBox(-10, 10, 0, 5))
    for row in range(6):
        xs = np.arange(-4, 5)
        even = (xs + row) % 2 == 0
        assert np.all(ages[row, xs[even] + 10] == row)
        assert np.all(ages[row, xs[~even] + 10] == -1)


def test_honest_webs_never_cross():
    field = ArrowField.create("layered", 0.4, 0.0, seed=3)
    env = stored_lattice(field, 12, 12)
    for web in (Web.LEFT, Web.RIGHT):
        assert crossing_audit(env, 12, 12, web) == []


def test_corrupt_rotation_is_detected():
    field = ArrowField.create("layered", 1.0, 0.0, seed=3)
    env = stored_lattice(field, 10, 10, corrupt_rotation=True)
    assert crossing_audit(env, 10, 10, Web.LEFT)
    checks = {check for check, *_ in check_lattice(env, 10, 10)}
    assert checks == {"membership", "non-crossing"}

    report = oracle_check(10, 10, reps=1, corrupt_rotation=True, max_reported=5)
    assert not report.passed
    assert len(report.discrepancies) >= 5


@pytest.mark.parametrize("width, height", [(0, 5), (5, 0), (MAX_ORACLE_SIZE + 1, 5)])
def test_size_limits(width, height):
    with pytest.raises(ConfigurationError):
        oracle_check(width, height, reps=1)
