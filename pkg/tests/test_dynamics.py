"""Surprisal transform, SIS/IC-SIS integration, linearized solution."""

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from netgompertz import (
    EpidemicParams,
    IntegrationError,
    ValidationError,
    decompose,
    from_surprisal,
    integrate_icsis,
    integrate_sis,
    linearized_solution,
    load_graph,
    surprisal,
    time_grid,
)

from conftest import complete_text, cycle_text, random_connected_graph, sample_params


class TestSurprisal:
    def test_anchor_values(self):
        assert surprisal(0.0) == 0.0
        assert surprisal(1.0 - 1.0 / math.e) == pytest.approx(1.0, abs=1e-15)

    @pytest.mark.parametrize("x", [0.01, 0.5, 0.99])
    def test_roundtrip(self, x):
        assert from_surprisal(surprisal(x)) == pytest.approx(x, abs=1e-14)

    def test_domain_errors(self):
        with pytest.raises(ValidationError):
            surprisal(1.0)
        with pytest.raises(ValidationError):
            surprisal(-0.1)
        with pytest.raises(ValidationError):
            from_surprisal(-1.0)

    @given(st.floats(min_value=0.0, max_value=0.999999))
    @settings(max_examples=200)
    def test_roundtrip_property(self, x):
        assert from_surprisal(surprisal(x)) == pytest.approx(x, abs=1e-12)
        assert surprisal(x) >= 0.0


class TestIntegrateSis:
    def test_pure_decay(self, k3):
        params = EpidemicParams(beta=0.0, gamma=0.3, p=0.4)
        traj = integrate_sis(k3, params, t_max=20.0, dt=0.01)
        expected = params.p * np.exp(-params.gamma * traj.t)
        assert np.abs(traj.values - expected[:, None]).max() < 1e-8

    def test_k2_logistic_steady_state(self, k2):
        params = EpidemicParams(beta=0.4, gamma=0.1, p=0.2)
        traj = integrate_sis(k2, params, t_max=150.0, dt=0.01)
        assert np.abs(traj.values[:, 0] - traj.values[:, 1]).max() < 1e-12
        assert traj.values[-1, 0] == pytest.approx(1.0 - params.gamma / params.beta, abs=1e-6)

    def test_zero_start_stays_zero(self, k3):
        params = EpidemicParams(beta=0.3, gamma=0.1, p=0.2)
        traj = integrate_sis(k3, params, t_max=5.0, dt=0.01, x0=np.zeros(3))
        assert np.abs(traj.values).max() == 0.0

    def test_initial_condition_and_range(self, rng):
        for _ in range(5):
            g = random_connected_graph(rng, int(rng.integers(3, 15)))
            params = sample_params(rng)
            traj = integrate_sis(g, params, t_max=30.0, dt=0.01)
            assert np.all(traj.values[0] == params.p)
            assert traj.values.min() >= -1e-9 and traj.values.max() <= 1.0 + 1e-9

    def test_vertex_transitive_symmetry(self):
        for text in [cycle_text(6), complete_text(5)]:
            g = load_graph(text)
            traj = integrate_sis(g, EpidemicParams(beta=0.3, gamma=0.1, p=0.15), t_max=20.0, dt=0.01)
            spread = traj.values.max(axis=1) - traj.values.min(axis=1)
            assert spread.max() < 1e-10

    def test_instability_raises(self, k3):
        # dt far beyond the stability limit for these rates
        with pytest.raises(IntegrationError, match="reduce dt"):
            integrate_sis(k3, EpidemicParams(beta=40.0, gamma=0.0, p=0.5), t_max=10.0, dt=1.0)


class TestIntegrateIcsis:
    def test_initial_condition(self, k3):
        params = EpidemicParams(beta=0.2, gamma=0.1, p=0.3)
        traj = integrate_icsis(k3, params, t_max=1.0, dt=0.01)
        assert traj.values[0] == pytest.approx([-math.log(params.q)] * 3, abs=1e-15)
        assert traj.values.min() >= 0.0

    def test_transform_consistency(self, rng):
        for _ in range(3):
            g = random_connected_graph(rng, int(rng.integers(4, 15)))
            lam1 = float(np.linalg.eigvalsh(g.adjacency)[-1])
            beta = float(rng.uniform(0.3, 0.8)) / lam1
            params = EpidemicParams(beta=beta, gamma=beta / 2.0, p=0.1)
            sis = integrate_sis(g, params, t_max=15.0, dt=0.005)
            icsis = integrate_icsis(g, params, t_max=15.0, dt=0.005)
            assert np.abs(surprisal(sis.values) - icsis.values).max() < 1e-6

    def test_pure_recovery_richardson(self, k3):
        """With beta = 0 the surprisal obeys dI/dt = -gamma*(e^I - 1);
        a dt/10 integration of the same ODE is the reference."""
        params = EpidemicParams(beta=0.0, gamma=0.25, p=0.35)
        coarse = integrate_icsis(k3, params, t_max=10.0, dt=0.05)
        fine = integrate_icsis(k3, params, t_max=10.0, dt=0.005)
        assert np.abs(coarse.values - fine.values[::10]).max() < 1e-9


class TestLinearized:
    def test_starts_at_p(self, k3):
        sd = decompose(k3)
        params = EpidemicParams(beta=0.2, gamma=0.1, p=0.17)
        traj = linearized_solution(sd, params, time_grid(5.0, 0.1))
        assert traj.values[0] == pytest.approx([params.p] * 3, abs=1e-12)

    def test_pure_decay(self, k3):
        sd = decompose(k3)
        params = EpidemicParams(beta=0.0, gamma=0.3, p=0.25)
        grid = time_grid(10.0, 0.1)
        traj = linearized_solution(sd, params, grid)
        expected = params.p * np.exp(-params.gamma * grid)
        assert np.abs(traj.values - expected[:, None]).max() < 1e-12

    def test_k2_balanced_rates_constant(self, k2):
        sd = decompose(k2)
        params = EpidemicParams(beta=0.3, gamma=0.3, p=0.12)
        traj = linearized_solution(sd, params, time_grid(20.0, 0.5))
        assert np.abs(traj.values - params.p).max() < 1e-12

    def test_unbounded_growth_allowed(self, k3):
        sd = decompose(k3)
        params = EpidemicParams(beta=1.0, gamma=0.1, p=0.3)
        traj = linearized_solution(sd, params, time_grid(20.0, 0.5))
        assert traj.values.max() > 1.0  # no clipping by design


class TestGrid:
    def test_uniform(self):
        grid = time_grid(10.0, 0.01)
        assert grid[0] == 0.0
        assert len(grid) == 1001
        assert np.abs(np.diff(grid) - 0.01).max() < 1e-12

    def test_bad_arguments(self):
        with pytest.raises(ValidationError):
            time_grid(10.0, 0.0)
        with pytest.raises(ValidationError):
            time_grid(-1.0, 0.1)


def test_rk4_order_sanity(rng):
    """Halving the step should shrink the error roughly 16-fold."""
    g = random_connected_graph(rng, 10, extra_prob=0.3)
    params = EpidemicParams(beta=0.5, gamma=0.1, p=0.1)
    reference = integrate_sis(g, params, t_max=5.0, dt=0.01)
    coarse = integrate_sis(g, params, t_max=5.0, dt=0.2)
    halved = integrate_sis(g, params, t_max=5.0, dt=0.1)
    err_coarse = np.abs(coarse.values - reference.values[::20]).max()
    err_halved = np.abs(halved.values - reference.values[::10]).max()
    assert 12.0 < err_coarse / err_halved < 20.0
