import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy.linalg import expm

from entbath.covariance import is_physical, symplectic_eigenvalues, vacuum
from entbath.dynamics import (
    BathParams,
    DriftConvention,
    diffusion_matrix,
    drift_matrix,
    gibbs_covariance,
    implied_temperature,
    integrate_oracle,
    propagate,
    propagator,
    thermal_coth,
    trajectory,
)
from entbath.states import SqueezedThermalSpec, squeezed_thermal
from testutil import random_physical_sigma

FIGURE_PARAMS = BathParams.symmetric(c_th=2.0)

SOME_PARAMS = [
    BathParams.symmetric(c_th=2.0),
    BathParams(lam=0.5, m=1.3, omega1=2.0, omega2=0.7, c_th1=1.5, c_th2=3.0),
    BathParams(lam=2.0, m=0.6, omega1=1.4, omega2=1.1, c_th1=1.0, c_th2=2.5),
]


class TestBathParams:
    def test_rejects_nonpositive(self):
        with pytest.raises(ValueError):
            BathParams(lam=0.0)
        with pytest.raises(ValueError):
            BathParams(m=-1.0)
        with pytest.raises(ValueError):
            BathParams(c_th1=0.9)

    def test_thermal_coth(self):
        assert thermal_coth(1.0, 0.0) == 1.0
        assert thermal_coth(1.0, 0.5) == pytest.approx(1.0 / np.tanh(1.0), abs=1e-14)
        # inverse round-trip
        assert implied_temperature(1.3, thermal_coth(1.3, 0.7)) == pytest.approx(
            0.7, abs=1e-12
        )
        assert implied_temperature(1.0, 1.0) == 0.0

    def test_from_temperature_is_consistent(self):
        p = BathParams.from_temperature(0.8, omega1=1.0, omega2=2.0)
        assert p.temperature_consistent
        assert p.c_th1 > p.c_th2 > 1.0

    def test_direct_cth_with_unequal_frequencies_flagged(self):
        # same c_th at different frequencies cannot come from one bath T
        p = BathParams(omega1=1.0, omega2=2.0, c_th1=2.0, c_th2=2.0)
        assert not p.temperature_consistent

    def test_zero_temperature_flag(self):
        assert BathParams.symmetric(c_th=1.0).zero_temperature
        assert not BathParams.symmetric(c_th=1.1).zero_temperature


class TestDriftMatrix:
    def test_unit_parameters_both_conventions(self):
        p = BathParams.symmetric(c_th=2.0)
        block = np.array([[-1.0, 1.0], [-1.0, -1.0]])
        want = np.block([[block, np.zeros((2, 2))], [np.zeros((2, 2)), block]])
        for conv in DriftConvention:
            np.testing.assert_array_equal(drift_matrix(p, conv), want)

    def test_restoring_coefficient_conventions(self):
        p = BathParams(lam=0.5, m=1.0, omega1=2.0, omega2=1.0)
        y2 = drift_matrix(p, DriftConvention.OMEGA_SQUARED)
        np.testing.assert_array_equal(y2[0:2, 0:2], [[-0.5, 1.0], [-4.0, -0.5]])
        ylin = drift_matrix(p, DriftConvention.OMEGA_LINEAR)
        np.testing.assert_array_equal(ylin[0:2, 0:2], [[-0.5, 1.0], [-2.0, -0.5]])


class TestGibbsCovariance:
    def test_figure_background_is_identity(self):
        np.testing.assert_allclose(gibbs_covariance(FIGURE_PARAMS), np.eye(4), atol=1e-15)

    def test_zero_temperature_is_vacuum(self):
        np.testing.assert_allclose(
            gibbs_covariance(BathParams.symmetric(c_th=1.0)), vacuum(), atol=1e-15
        )

    def test_frequency_scaling(self):
        p = BathParams(m=1.0, omega1=2.0, omega2=1.0, c_th1=3.0, c_th2=1.0)
        si = gibbs_covariance(p)
        assert si[0, 0] == pytest.approx(0.75)
        assert si[1, 1] == pytest.approx(3.0)


class TestPropagator:
    def test_time_zero_is_identity(self):
        for p in SOME_PARAMS:
            for conv in DriftConvention:
                np.testing.assert_array_equal(propagator(p, 0.0, conv), np.eye(4))

    def test_half_period_at_unit_parameters(self):
        m = propagator(FIGURE_PARAMS, np.pi)
        np.testing.assert_allclose(m, -np.exp(-np.pi) * np.eye(4), atol=1e-12)

    def test_rejects_negative_time(self):
        with pytest.raises(ValueError):
            propagator(FIGURE_PARAMS, -0.1)

    @pytest.mark.parametrize("conv", list(DriftConvention))
    @pytest.mark.parametrize("p", SOME_PARAMS)
    def test_matches_generic_matrix_exponential(self, p, conv):
        y = drift_matrix(p, conv)
        for t in (0.1, 0.7, 2.0, 5.0):
            np.testing.assert_allclose(
                propagator(p, t, conv), expm(y * t), atol=1e-10
            )

    @given(t=st.floats(0.0, 5.0), s=st.floats(0.0, 5.0))
    @settings(max_examples=60, deadline=None)
    def test_semigroup_property(self, t, s):
        p = SOME_PARAMS[1]
        for conv in DriftConvention:
            np.testing.assert_allclose(
                propagator(p, t + s, conv),
                propagator(p, t, conv) @ propagator(p, s, conv),
                atol=1e-10,
            )


class TestPropagate:
    def test_time_zero_returns_initial(self):
        sigma0 = squeezed_thermal(SqueezedThermalSpec(0.5, 1.5, 0.8))
        np.testing.assert_allclose(
            propagate(sigma0, FIGURE_PARAMS, 0.0), sigma0, atol=1e-15
        )

    @pytest.mark.parametrize("conv", list(DriftConvention))
    def test_gibbs_state_is_fixed_point(self, conv):
        for p in SOME_PARAMS:
            si = gibbs_covariance(p)
            for t in (0.3, 2.0, 10.0):
                np.testing.assert_allclose(propagate(si, p, t, conv), si, atol=1e-12)

    def test_known_pt_eigenvalue_along_decay(self):
        # e^{-2t}(e^{-2}/2 - 1) + 1 at t = 0.5 for the squeezed vacuum, c_th = 2
        from entbath.covariance import pt_min_symplectic

        sigma0 = squeezed_thermal(SqueezedThermalSpec(0.0, 0.0, 1.0))
        out = propagate(sigma0, FIGURE_PARAMS, 0.5)
        assert pt_min_symplectic(out) == pytest.approx(0.65701409301248965, abs=1e-12)

    def test_rejects_nonphysical_initial_state(self):
        with pytest.raises(ValueError, match="not physical"):
            propagate(0.25 * np.eye(4), FIGURE_PARAMS, 1.0)

    @given(t1=st.floats(0.0, 5.0), t2=st.floats(0.0, 5.0))
    @settings(max_examples=40, deadline=None)
    def test_two_step_composition(self, t1, t2):
        sigma0 = squeezed_thermal(SqueezedThermalSpec(1.0, 0.0, 1.2))
        p = SOME_PARAMS[1]
        direct = propagate(sigma0, p, t1 + t2)
        stepped = propagate(propagate(sigma0, p, t1), p, t2)
        np.testing.assert_allclose(stepped, direct, atol=1e-10)

    def test_trajectory_matches_pointwise_propagate(self):
        sigma0 = squeezed_thermal(SqueezedThermalSpec(0.0, 0.0, 1.0))
        times = np.linspace(0.0, 3.0, 7)
        stack = trajectory(sigma0, FIGURE_PARAMS, times)
        for k, t in enumerate(times):
            np.testing.assert_allclose(
                stack[k], propagate(sigma0, FIGURE_PARAMS, t), atol=1e-12
            )

    def test_physicality_preserved_along_random_trajectories(self):
        rng = np.random.default_rng(21)
        t_grid = np.linspace(0.0, 20.0, 9)
        for _ in range(200):
            sigma0 = random_physical_sigma(rng)
            p = BathParams.symmetric(
                c_th=rng.uniform(1.0, 4.0),
                omega=rng.uniform(0.5, 2.0),
                lam=rng.uniform(0.5, 2.0),
                m=rng.uniform(0.5, 2.0),
            )
            for sigma_t in trajectory(sigma0, p, t_grid):
                assert symplectic_eigenvalues(sigma_t).nu_minus >= 0.5 - 1e-9
                assert is_physical(sigma_t)

    def test_exponential_convergence_envelope(self):
        rng = np.random.default_rng(22)
        for _ in range(20):
            sigma0 = random_physical_sigma(rng)
            p = BathParams.symmetric(
                c_th=rng.uniform(1.0, 4.0),
                omega=rng.uniform(0.5, 2.0),
                lam=rng.uniform(0.5, 2.0),
                m=rng.uniform(0.5, 2.0),
            )
            si = gibbs_covariance(p)
            dev0 = np.max(np.abs(sigma0 - si))
            # |cos|, |sin/(m w)|, |m w sin| <= q := max(1, m w, 1/(m w)) per
            # entry, so the conjugation inflates max-norms by at most 16 q^2
            q = max(1.0, p.m * p.omega1, 1.0 / (p.m * p.omega1))
            bound = 16.0 * q * q * dev0
            for t in np.linspace(0.0, 10.0, 21):
                dev = np.max(np.abs(propagate(sigma0, p, t) - si))
                assert dev <= bound * np.exp(-2.0 * p.lam * t) + 1e-13


class TestDiffusionMatrix:
    def test_figure_parameters(self):
        np.testing.assert_allclose(
            diffusion_matrix(FIGURE_PARAMS), 2.0 * np.eye(4), atol=1e-14
        )

    def test_zero_temperature(self):
        np.testing.assert_allclose(
            diffusion_matrix(BathParams.symmetric(c_th=1.0)), np.eye(4), atol=1e-14
        )

    @pytest.mark.parametrize("conv", list(DriftConvention))
    def test_stationarity_identity(self, conv):
        for p in SOME_PARAMS:
            y = drift_matrix(p, conv)
            si = gibbs_covariance(p)
            d = diffusion_matrix(p, conv)
            np.testing.assert_allclose(y @ si + si @ y.T + d, 0.0, atol=1e-12)

    def test_positive_semidefinite_for_harmonic_convention(self):
        for p in SOME_PARAMS:
            eigs = np.linalg.eigvalsh(diffusion_matrix(p, DriftConvention.OMEGA_SQUARED))
            assert np.all(eigs >= -1e-12)


class TestIntegrateOracle:
    def test_time_zero(self):
        sigma0 = squeezed_thermal(SqueezedThermalSpec(0.0, 0.0, 1.0))
        np.testing.assert_array_equal(
            integrate_oracle(sigma0, FIGURE_PARAMS, 0.0, 1e-3), sigma0
        )

    def test_rejects_bad_step(self):
        with pytest.raises(ValueError):
            integrate_oracle(vacuum(), FIGURE_PARAMS, 1.0, 0.0)
        with pytest.raises(ValueError):
            integrate_oracle(vacuum(), FIGURE_PARAMS, 1.0, -1e-3)

    def test_agrees_with_closed_form(self):
        sigma0 = squeezed_thermal(SqueezedThermalSpec(0.0, 0.0, 1.0))
        rk4 = integrate_oracle(sigma0, FIGURE_PARAMS, 1.0, 1e-3)
        closed = propagate(sigma0, FIGURE_PARAMS, 1.0)
        assert np.max(np.abs(rk4 - closed)) < 1e-8

    def test_fixed_point_preserved(self):
        si = gibbs_covariance(FIGURE_PARAMS)
        out = integrate_oracle(si, FIGURE_PARAMS, 10.0, 1e-2)
        np.testing.assert_allclose(out, si, atol=1e-10)

    @pytest.mark.parametrize("conv", list(DriftConvention))
    def test_oracle_equivalence_random_states(self, conv):
        rng = np.random.default_rng(23)
        for _ in range(3):
            sigma0 = random_physical_sigma(rng, nu_min=0.55, nu_max=2.0)
            p = BathParams.symmetric(
                c_th=rng.uniform(1.5, 4.0),
                omega=rng.uniform(0.6, 1.8),
                lam=rng.uniform(0.7, 1.5),
                m=rng.uniform(0.7, 1.5),
            )
            prev_t, sigma_rk = 0.0, sigma0
            for t in (0.1, 0.5, 1.0, 2.0, 5.0):
                sigma_rk = integrate_oracle(sigma_rk, p, t - prev_t, 1e-3, conv)
                prev_t = t
                closed = propagate(sigma0, p, t, conv)
                assert np.max(np.abs(sigma_rk - closed)) < 1e-8

    def test_fractional_final_step(self):
        # t not an integer multiple of dt still lands on t
        sigma0 = squeezed_thermal(SqueezedThermalSpec(0.0, 0.0, 1.0))
        rk4 = integrate_oracle(sigma0, FIGURE_PARAMS, 0.7503, 1e-3)
        closed = propagate(sigma0, FIGURE_PARAMS, 0.7503)
        assert np.max(np.abs(rk4 - closed)) < 1e-8
