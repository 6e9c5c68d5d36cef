import math

import numpy as np
import pytest

from entprod import (
    MultipartiteOperator,
    NonHermitianInputError,
    SpinModelParams,
    TensorSpace,
    epsilon_quadratic,
    evolution_operator,
    heisenberg_hamiltonian,
    ising_hamiltonian,
    production_measure,
    short_time_data,
)

from util import random_hermitian, rng


def fitted_quadratic_coeff(ham: MultipartiteOperator, log_base: float = 2.0) -> float:
    """Quadratic coefficient of the exact measure, from a small-t fit."""
    ts = np.array([1e-3, 2e-3, 4e-3])
    eps = np.array(
        [
            production_measure(
                MultipartiteOperator(ham.space, evolution_operator(ham.matrix, t)), log_base
            ).epsilon
            for t in ts
        ]
    )
    # eps/t^2 is linear in t^2 up to the quartic term; the intercept is the
    # quadratic coefficient
    _, intercept = np.polyfit(ts**2, eps / ts**2, 1)
    return float(intercept)


class TestShortTimeData:
    def test_ising_mu_is_j_squared(self):
        d = short_time_data(ising_hamiltonian(1.0, 1.0))
        assert d.mu == pytest.approx(1.0, abs=1e-12)
        assert d.coeff == pytest.approx(1.0 / (8 * math.log(2)), abs=1e-12)

    def test_heisenberg_mu(self):
        p = SpinModelParams(h=0.4, J=1.2, J1=0.7)
        d = short_time_data(heisenberg_hamiltonian(p), math.e)
        assert d.mu == pytest.approx(p.J**2 + 2 * p.J1**2, abs=1e-12)
        assert d.coeff == pytest.approx((p.J**2 + 2 * p.J1**2) / 8, abs=1e-12)

    def test_no_interaction_no_growth(self):
        for h in (0.0, 1.0, -2.5):
            d = short_time_data(heisenberg_hamiltonian(SpinModelParams(h=h)))
            assert d.mu == pytest.approx(0.0, abs=1e-12)

    def test_field_independence(self):
        coeffs = {
            short_time_data(heisenberg_hamiltonian(SpinModelParams(h=h, J=1.0, J1=0.5))).coeff
            for h in (0.0, 0.5, 2.0)
        }
        assert max(coeffs) - min(coeffs) <= 1e-12

    def test_deltas_hermitian_with_real_traces(self):
        gen = rng(137)
        space = TensorSpace((2, 3))
        ham = MultipartiteOperator(space, random_hermitian(gen, 6))
        d = short_time_data(ham)
        for delta in (d.delta1, d.delta2):
            m = delta.matrix
            assert np.max(np.abs(m - m.conj().T)) < 1e-12
            assert abs(np.trace(m).imag) < 1e-12
        assert d.delta1.space.dims == (2,)
        assert d.delta2.space.dims == (3,)

    def test_mu_identity(self):
        gen = rng(139)
        space = TensorSpace((2, 3))
        ham = MultipartiteOperator(space, random_hermitian(gen, 6))
        d = short_time_data(ham)
        m1, m2 = 2, 3
        expected = (
            m1 * np.trace(d.delta1.matrix).real
            + m2 * np.trace(d.delta2.matrix).real
            - d.delta12
        ) / (m1 * m2)
        assert d.mu == pytest.approx(expected, abs=1e-12)
        assert d.coeff == pytest.approx(d.mu / (2 * m1 * m2 * math.log(d.log_base)), abs=1e-12)

    def test_matches_exact_measure_fit(self):
        gen = rng(149)
        for dims in [(2, 2), (2, 3)]:
            space = TensorSpace(dims)
            ham = MultipartiteOperator(space, random_hermitian(gen, space.total_dim))
            d = short_time_data(ham)
            fit = fitted_quadratic_coeff(ham)
            assert fit == pytest.approx(d.coeff, rel=5e-3)

    def test_rejects_non_bipartite(self):
        ham = MultipartiteOperator(TensorSpace((2, 2, 2)), np.eye(8))
        with pytest.raises(ValueError):
            short_time_data(ham)

    def test_rejects_non_hermitian(self):
        m = np.zeros((4, 4), dtype=complex)
        m[0, 1] = 1.0
        with pytest.raises(NonHermitianInputError):
            short_time_data(MultipartiteOperator(TensorSpace((2, 2)), m))


class TestEpsilonQuadratic:
    def test_zero_at_zero(self):
        d = short_time_data(ising_hamiltonian(1.0, 1.0))
        assert epsilon_quadratic(d, 0.0) == 0.0

    def test_ising_value_base_two(self):
        d = short_time_data(ising_hamiltonian(1.0, 1.0))
        assert epsilon_quadratic(d, 0.1) == pytest.approx(0.01 / (8 * math.log(2)), abs=1e-12)
        assert epsilon_quadratic(d, 0.1) == pytest.approx(0.001803, abs=5e-7)

    def test_heisenberg_value_natural_log(self):
        p = SpinModelParams(h=0.5, J=1.0, J1=1.0)
        d = short_time_data(heisenberg_hamiltonian(p), math.e)
        assert epsilon_quadratic(d, 0.1) == pytest.approx(0.00375, abs=1e-12)
