import math

import numpy as np
import pytest

from bck_net.analytic import (
    DensityParams,
    expected_aged_kill_count,
    hitting_mass_defects,
    hitting_survival,
    hitting_survival_profile,
    lattice_density,
    normal_cdf,
    wedge_step_probabilities,
    xi_density,
)
from bck_net.core import DomainError


class TestNormalCdf:
    def test_values(self):
        assert normal_cdf(0.0) == 0.5
        assert normal_cdf(1.959963984540054) == pytest.approx(0.975, rel=1e-12)

    def test_lower_tail_keeps_precision(self):
        assert normal_cdf(-10.0) == pytest.approx(7.619853024160527e-24, rel=1e-9)

    def test_array_input(self):
        out = normal_cdf(np.array([-1.0, 0.0, 1.0]))
        assert isinstance(out, np.ndarray)
        assert out[0] + out[2] == pytest.approx(1.0)


class TestXiDensity:
    def test_pure_coalescence(self):
        expected = 1 / math.sqrt(math.pi)
        assert xi_density(DensityParams(0.0, 1.0)) == pytest.approx(expected)
        assert xi_density(DensityParams(0.0, 1.0)) == pytest.approx(0.564190, abs=1e-6)

    def test_unit_branching(self):
        assert xi_density(DensityParams(1.0, 1.0)) == pytest.approx(2.050254, abs=1e-6)

    def test_long_time_limit(self):
        assert xi_density(DensityParams(1.5, 200.0)) == pytest.approx(3.0, rel=1e-9)

    def test_short_time_behaviour(self):
        tau = 1e-6
        assert xi_density(DensityParams(1.0, tau)) == pytest.approx(
            1 / math.sqrt(math.pi * tau), rel=1e-2
        )

    def test_increasing_in_b(self):
        values = [xi_density(DensityParams(b, 0.5)) for b in (0.0, 0.5, 1.0, 2.0)]
        assert values == sorted(values)

    @pytest.mark.parametrize("b, tau", [(-0.1, 1.0), (1.0, 0.0), (1.0, -2.0)])
    def test_domain(self, b, tau):
        with pytest.raises(DomainError):
            DensityParams(b, tau)


def test_expected_aged_kill_count():
    count = expected_aged_kill_count(2.0, 3.0, 1.0, 1.0)
    assert count == pytest.approx(6 * 2.050254, abs=1e-5)
    assert expected_aged_kill_count(0.0, 3.0, 1.0, 1.0) == 0.0
    with pytest.raises(DomainError):
        expected_aged_kill_count(1.0, 1.0, 1.0, 0.0)


class TestHitting:
    def test_step_probabilities_sum_to_one(self):
        for b in (0.0, 0.3, 1.0):
            assert sum(wedge_step_probabilities(b)) == pytest.approx(1.0)

    def test_small_cases(self):
        assert hitting_survival(0.3, 0) == 1.0
        assert hitting_survival(0.0, 1) == pytest.approx(0.75)
        # two steps at b = 0: 1 - 1/4 - (1/2)(1/4)
        assert hitting_survival(0.0, 2) == pytest.approx(0.625)

    def test_full_branching_never_absorbs(self):
        assert hitting_survival(1.0, 50) == 1.0

    def test_profile_is_non_increasing(self):
        profile = hitting_survival_profile(0.05, 400)
        assert profile[0] == 1.0
        assert np.all(np.diff(profile) <= 0)

    def test_mass_is_conserved(self):
        assert np.max(np.abs(hitting_mass_defects(0.02, 500))) <= 1e-12

    def test_domain(self):
        with pytest.raises(DomainError):
            hitting_survival(1.2, 3)
        with pytest.raises(DomainError):
            hitting_survival(0.5, -1)

    def test_lattice_density_converges_to_the_continuum(self):
        target = xi_density(DensityParams(1.0, 1.0))
        deviations = []
        for beta in (3.0, 4.0, 5.0):
            n = math.ceil(math.exp(2 * beta))
            deviations.append(abs(lattice_density(beta, n) / target - 1.0))
        assert deviations == sorted(deviations, reverse=True)
        assert deviations[-1] <= 0.05
