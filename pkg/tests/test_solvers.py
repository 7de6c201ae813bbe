"""Solver tests: closed-form cases, naive-product oracles, and the Jacobi
reference for the random ensembles."""

import math

import numpy as np
import pytest

from powit import (
    DegenerateInputError,
    NumericOverflowError,
    EnsembleSpec,
    SolverConfig,
    jacobi_eigen,
    matrix_power_squaring,
    max_norm,
    max_norm_vec,
    normalize_matrix,
    power_iteration,
    power_iteration_squared,
    random_matrix,
    rayleigh_quotient,
)
from powit.solvers import _squared_step


def goe(n, seed, mode="real"):
    return random_matrix(EnsembleSpec(n=n, mode=mode, seed=seed))


class TestSolverConfig:
    def test_defaults(self):
        cfg = SolverConfig()
        assert cfg.tol == 1e-10
        assert cfg.max_iter is None
        assert cfg.seed == 0

    def test_rejects_bad_values(self):
        with pytest.raises(ValueError):
            SolverConfig(tol=0.0)
        with pytest.raises(ValueError):
            SolverConfig(max_iter=0)
        with pytest.raises(ValueError):
            SolverConfig(seed=-3)


class TestRayleighQuotient:
    def test_exact_eigenvector(self):
        assert rayleigh_quotient(np.diag([3.0, 1.0]), [1.0, 0.0]) == 3.0

    def test_row_sum_symmetry(self):
        assert rayleigh_quotient([[2.0, 1.0], [1.0, 2.0]], [1.0, 1.0]) == 3.0

    def test_zero_vector_rejected(self):
        with pytest.raises(DegenerateInputError):
            rayleigh_quotient(np.eye(2), [0.0, 0.0])

    def test_matches_oracle_eigenvalue(self):
        a = goe(10, seed=21)
        spectrum = jacobi_eigen(a)
        value = rayleigh_quotient(a, spectrum.vectors[:, 0])
        assert abs(value - spectrum.values[0]) <= 1e-10

    def test_imaginary_part_small_for_hermitian(self):
        a = goe(12, seed=22, mode="complex")
        x = np.arange(1.0, 13.0) + 1j
        value = rayleigh_quotient(a, x)
        assert abs(value.imag) <= 1e-12 * max_norm(a)


class TestPowerIteration:
    def test_dominant_diagonal(self):
        est = power_iteration(np.diag([3.0, 1.0, 0.5]), SolverConfig(seed=1))
        assert est.converged
        assert abs(est.value - 3.0) <= 1e-9
        np.testing.assert_allclose(est.vector, [1.0, 0.0, 0.0], atol=1e-8)

    def test_symmetric_2x2(self):
        est = power_iteration([[2.0, 1.0], [1.0, 2.0]], SolverConfig(seed=1))
        assert est.converged
        assert abs(est.value - 3.0) <= 1e-9
        np.testing.assert_allclose(est.vector, [1.0, 1.0], atol=1e-8)

    def test_negative_dominant_eigenvalue(self):
        est = power_iteration(np.diag([-3.0, 1.0]), SolverConfig(seed=2))
        assert est.converged
        assert abs(est.value + 3.0) <= 1e-9

    def test_matches_oracle_on_ensemble(self):
        a = goe(100, seed=31)
        est = power_iteration(a, SolverConfig(seed=31))
        top = jacobi_eigen(a).values[0]
        assert est.converged
        assert est.iterations >= 1
        assert abs(est.value - top) / abs(top) <= 1e-8

    @pytest.mark.parametrize("mode", ["real", "complex"])
    def test_reported_vector_convention(self, mode):
        est = power_iteration(goe(30, seed=5, mode=mode), SolverConfig(seed=5))
        if mode == "real":
            assert max_norm_vec(est.vector) == 1.0
        else:
            # componentwise complex division rounds, so unit norm holds to 1 ulp
            assert abs(max_norm_vec(est.vector) - 1.0) <= 2 * np.finfo(float).eps
        pivot = est.vector[int(np.argmax(np.abs(est.vector)))]
        assert pivot.real > 0
        assert pivot.imag == 0

    def test_residual_certificate(self):
        a = goe(50, seed=6)
        est = power_iteration(a, SolverConfig(seed=6))
        assert est.converged
        assert max_norm_vec(a @ est.vector - est.value * est.vector) <= 1e-6 * max_norm(a) * 50

    def test_scale_invariance(self):
        a = goe(30, seed=11)
        base = power_iteration(a, SolverConfig(seed=5))
        scaled = power_iteration(3.0 * a, SolverConfig(seed=5))
        assert np.max(np.abs(base.vector - scaled.vector)) <= 1e-10
        assert abs(scaled.value / (3.0 * base.value) - 1.0) <= 1e-10

    def test_component_suppression_rate(self):
        # on diag(2, 1) from (1, 1) the minor component is exactly 2**-k
        a = np.diag([2.0, 1.0])
        for k in (1, 4, 9):
            est = power_iteration(a, SolverConfig(tol=1e-30, max_iter=k), x0=[1.0, 1.0])
            assert est.iterations == k
            assert abs(est.vector[1] - 2.0**-k) <= 1e-12

    def test_kernel_start_vector_rejected(self):
        with pytest.raises(DegenerateInputError):
            power_iteration(np.diag([1.0, 0.0]), x0=[0.0, 1.0])

    def test_zero_matrix_rejected(self):
        with pytest.raises(DegenerateInputError):
            power_iteration(np.zeros((3, 3)))

    def test_equal_modulus_pair_returns_unconverged(self):
        est = power_iteration(np.diag([1.0, -1.0]), SolverConfig(max_iter=2000, seed=3))
        assert not est.converged
        assert est.iterations == 2000


class TestMatrixPowerSquaring:
    def test_zeroth_power_is_copy(self):
        a = goe(4, seed=1)
        out = matrix_power_squaring(a, 0)
        np.testing.assert_array_equal(out, a)
        assert out is not a

    def test_involution(self):
        swap = np.array([[0.0, 1.0], [1.0, 0.0]])
        np.testing.assert_array_equal(matrix_power_squaring(swap, 1), np.eye(2))

    def test_matches_naive_repeated_product(self):
        a = goe(4, seed=44)
        a = a / (2.0 * max_norm(a))  # max norm 0.5 keeps growth tame
        naive = a.copy()
        for _ in range(7):
            naive = naive @ a
        np.testing.assert_allclose(matrix_power_squaring(a, 3), naive, rtol=0, atol=1e-12)

    def test_negative_power_rejected(self):
        with pytest.raises(ValueError):
            matrix_power_squaring(np.eye(2), -1)

    def test_overflow_reported(self):
        with pytest.raises(NumericOverflowError):
            matrix_power_squaring(np.array([[1e200]]), 2)


class TestPowerIterationSquared:
    def test_dominant_diagonal(self):
        est = power_iteration_squared(np.diag([3.0, 1.0]), SolverConfig(seed=1))
        assert est.converged
        assert abs(est.value - 3.0) <= 1e-9
        np.testing.assert_allclose(est.vector, [1.0, 0.0], atol=1e-8)

    def test_symmetric_2x2(self):
        est = power_iteration_squared([[2.0, 1.0], [1.0, 2.0]], SolverConfig(seed=1))
        assert est.converged
        assert abs(est.value - 3.0) <= 1e-9
        np.testing.assert_allclose(est.vector, [1.0, 1.0], atol=1e-8)

    def test_negative_dominant_eigenvalue(self):
        est = power_iteration_squared(np.diag([-3.0, 1.0]), SolverConfig(seed=2))
        assert est.converged
        assert abs(est.value + 3.0) <= 1e-9

    def test_converges_within_twenty_squarings_on_ensemble(self):
        a = goe(100, seed=31)
        est = power_iteration_squared(a, SolverConfig(seed=31))
        assert est.converged
        assert est.iterations <= 20

    def test_matches_oracle_on_ensemble(self):
        a = goe(100, seed=32)
        est = power_iteration_squared(a, SolverConfig(seed=32))
        top = jacobi_eigen(a).values[0]
        assert abs(est.value - top) / abs(top) <= 1e-8

    def test_squaring_commutes_with_normalization(self):
        # the solver's internal iterate equals the normalized raw power
        a = goe(8, seed=50)
        iterate = a
        for j in range(1, 5):
            iterate = _squared_step(iterate)
            raw = normalize_matrix(matrix_power_squaring(a, j))
            assert max_norm(iterate - raw) <= 1e-10

    def test_equal_modulus_pair_returns_unconverged(self):
        est = power_iteration_squared(np.diag([1.0, -1.0]), SolverConfig(seed=3))
        assert not est.converged
        assert est.iterations >= 1

    def test_collapsing_start_vector_is_redrawn(self):
        # x0 sits in the kernel of the converged power; a derived-seed
        # redraw must rescue the projection
        est = power_iteration_squared(
            np.diag([1.0, 0.0]), SolverConfig(seed=1), x0=[0.0, 1.0]
        )
        assert est.converged
        assert abs(est.value - 1.0) <= 1e-12

    def test_zero_matrix_rejected(self):
        with pytest.raises(DegenerateInputError):
            power_iteration_squared(np.zeros((2, 2)))


class TestAlgorithmsAgree:
    @pytest.mark.parametrize("mode", ["real", "complex"])
    def test_same_eigenvalue_both_routes(self, mode):
        a = goe(60, seed=8, mode=mode)
        cfg = SolverConfig(seed=8)
        plain = power_iteration(a, cfg)
        squared = power_iteration_squared(a, cfg)
        assert plain.converged and squared.converged
        assert abs(np.real(plain.value) - np.real(squared.value)) <= 1e-8 * abs(plain.value)

    def test_iteration_count_law(self):
        # squarings stay within ceil(log2(multiplications)) + 3
        for seed in range(5):
            a = goe(100, seed=200 + seed)
            cfg = SolverConfig(seed=200 + seed)
            plain = power_iteration(a, cfg)
            squared = power_iteration_squared(a, cfg)
            if plain.converged and squared.converged:
                assert squared.iterations <= math.ceil(math.log2(plain.iterations)) + 3
