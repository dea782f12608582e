import math
import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from source.quantum.errors import QuantumError, InvariantError, CommensurabilityError, DimensionError
from source.quantum.linalg import State, HermitianOperator, Projector, expm_antihermitian, random_hermitian, random_state
from source.quantum.qubit import PAULI_X, PAULI_Z, NORTH_PROJECTOR, QubitHamiltonian
from source.quantum.zeno import (
    ZenoSetup, ConvergenceRow, make_projector, random_projector, prepared_state, spectral_norm,
    zeno_product, zeno_hamiltonian, zeno_group, zeno_limit_unitary,
    convergence_scan, fit_convergence_slope, ladder_is_monotone, doubling_ladder, measured_trajectory,
    nearest_divisors,
)

E1 = State.basis(1, 2)
P1 = NORTH_PROJECTOR


def sigma_x_setup():
    return ZenoSetup(PAULI_X, P1, E1)


def random_setup(rng, n, rank, scale=1.0):
    H = random_hermitian(rng, n, scale=scale)
    P = random_projector(rng, n, rank)
    return ZenoSetup(H, P, prepared_state(P))


def test_setup_requires_preparation():
    with pytest.raises(InvariantError):
        ZenoSetup(PAULI_X, P1, State.basis(2, 2))
    with pytest.raises(InvariantError):
        ZenoSetup(PAULI_X, P1, State([2, 0]))
    with pytest.raises(DimensionError):
        ZenoSetup(PAULI_X, Projector.identity(3), E1)


def test_make_projector_from_basis():
    P = make_projector(basis=[[1, 1j, 0], [0, 0, 1]] / np.array([[math.sqrt(2)], [1.0]]))
    assert P.rank == 2
    nearly = np.array([[1.0 + 1e-10, 0, 0]])
    assert np.allclose(make_projector(basis=nearly).entries, np.diag([1, 0, 0]), atol=1e-14)
    with pytest.raises(InvariantError):
        make_projector(basis=[[1.0, 0.1, 0.0]])
    with pytest.raises(QuantumError):
        make_projector()


def test_random_projector_rank(rng):
    P = random_projector(rng, 6, 2)
    assert P.rank == 2
    assert np.linalg.norm(prepared_state(P).amplitudes - P.entries @ prepared_state(P).amplitudes) <= 1e-12


@pytest.mark.parametrize("N", [1, 3, 8, 100])
def test_zeno_product_sigma_x(N):
    t = 1.3
    V = zeno_product(sigma_x_setup(), t, N)
    assert np.allclose(V, math.cos(t / N) ** N * P1.entries, rtol=0, atol=1e-13)


def test_zeno_product_without_measurement(rng):
    H = random_hermitian(rng, 3)
    setup = ZenoSetup(H, Projector.identity(3), random_state(rng, 3))
    for N in (1, 5, 16):
        assert np.allclose(zeno_product(setup, 0.9, N), expm_antihermitian(H, 0.9).entries, atol=1e-12)


def test_zeno_product_commuting_case_is_n_independent():
    setup = ZenoSetup(PAULI_Z, P1, E1)
    expected = P1.entries @ expm_antihermitian(PAULI_Z, 2.0).entries @ P1.entries
    for N in (1, 7, 64):
        assert np.allclose(zeno_product(setup, 2.0, N), expected, atol=1e-13)


def test_zeno_product_rejects_zero_measurements():
    with pytest.raises(QuantumError):
        zeno_product(sigma_x_setup(), 1.0, 0)


@settings(max_examples=30, deadline=None)
@given(seed=st.integers(0, 2**32 - 1), N=st.integers(1, 64), t=st.floats(-3, 3))
def test_contraction(seed, N, t):
    rng = np.random.default_rng(seed)
    n = int(rng.integers(1, 7))
    setup = random_setup(rng, n, int(rng.integers(1, n + 1)), scale=2.0)
    assert spectral_norm(zeno_product(setup, t, N)) <= 1 + 1e-10


def test_zeno_hamiltonian_examples():
    assert np.allclose(zeno_hamiltonian(PAULI_X, P1).entries, 0)
    H = QubitHamiltonian(0.4, (0.3, -0.7, 1.1))
    expected = (0.4 + 1.1) / 2 * (np.eye(2) + PAULI_Z.entries)
    assert np.allclose(zeno_hamiltonian(H.matrix(), P1).entries, expected, atol=1e-15)


def test_zeno_hamiltonian_identity_projector(rng):
    H = random_hermitian(rng, 4)
    assert np.allclose(zeno_hamiltonian(H, Projector.identity(4)).entries, H.entries, atol=1e-15)


def test_zeno_hamiltonian_block_structure(rng):
    H = random_hermitian(rng, 5)
    P = random_projector(rng, 5, 3)
    HZ = zeno_hamiltonian(H, P).entries
    p = P.entries
    assert np.allclose(HZ @ p - p @ HZ, 0, atol=1e-12)
    assert np.allclose(p @ HZ @ p, HZ, atol=1e-12)


def test_zeno_limit_unitary_examples():
    assert np.allclose(zeno_limit_unitary(PAULI_X, P1, 2.5), P1.entries, atol=1e-15)
    H = QubitHamiltonian(0.2, (1.0, 0.5, 0.7)).matrix()
    t = 1.7
    assert np.allclose(zeno_limit_unitary(H, P1, t), np.exp(-1j * 0.9 * t) * P1.entries, atol=1e-13)


def test_zeno_limit_at_zero_and_unitarity_on_range(rng):
    H = random_hermitian(rng, 6)
    P = random_projector(rng, 6, 3)
    assert np.allclose(zeno_limit_unitary(H, P, 0.0), P.entries, atol=1e-14)
    U = zeno_limit_unitary(H, P, 2.3)
    p = P.entries
    assert np.linalg.norm(p @ U.conj().T @ U @ p - p, 'fro') <= 1e-10
    assert np.allclose(zeno_group(H, P, 2.3).entries @ p, U, atol=1e-15)


def test_convergence_sigma_x_closed_form():
    N_values = doubling_ladder(2, 1024)
    scan = convergence_scan(sigma_x_setup(), 1.0, N_values)
    for row in scan:
        assert row.error_spectral == pytest.approx(abs(math.cos(1 / row.N) ** row.N - 1), abs=1e-12)
    ratios = [a.error_spectral / b.error_spectral for a, b in zip(scan, scan[1:])]
    assert ratios[-1] == pytest.approx(2.0, rel=1e-2)
    assert scan[-1].error_spectral == pytest.approx(abs(math.cos(1 / 1024) ** 1024 - 1), abs=1e-12)
    assert -1.2 <= fit_convergence_slope(scan) <= -0.8


def test_convergence_commuting_case_is_exact():
    setup = ZenoSetup(PAULI_Z, P1, E1)
    scan = convergence_scan(setup, 1.0, doubling_ladder(8, 1024))
    assert all(row.error_spectral <= 1e-12 for row in scan)
    assert fit_convergence_slope(scan) is None


def test_convergence_random_draws(rng):
    for _ in range(20):
        n = int(rng.integers(2, 9))
        setup = random_setup(rng, n, int(rng.integers(1, n)))
        scan = convergence_scan(setup, 1.0, doubling_ladder(8, 1024))
        assert ladder_is_monotone(scan, slack=0.2)
        slope = fit_convergence_slope(scan)
        assert slope is None or -1.2 <= slope <= -0.8


def test_convergence_scan_is_independent_of_workers(rng):
    setup = random_setup(rng, 6, 2)
    N_values = doubling_ladder(8, 256)
    assert convergence_scan(setup, 1.0, N_values, workers=1) == convergence_scan(setup, 1.0, N_values, workers=4)


def test_convergence_scan_validates_ladder():
    with pytest.raises(QuantumError):
        convergence_scan(sigma_x_setup(), 1.0, [])
    with pytest.raises(QuantumError):
        convergence_scan(sigma_x_setup(), 1.0, [8, 4])


def test_fit_slope_edge_cases():
    assert math.isnan(fit_convergence_slope([ConvergenceRow(8, 1e-3, 1e-3), ConvergenceRow(16, 0.0, 0.0)]))
    rows = [ConvergenceRow(N, 3.0 / N, 3.0 / N) for N in (8, 16, 32)]
    assert fit_convergence_slope(rows) == pytest.approx(-1.0)


def test_measured_trajectory_sigma_x():
    trajectory = measured_trajectory(sigma_x_setup(), 1.0, 100, 10)
    assert len(trajectory.times) == 11
    assert trajectory.survival_probs[0] == pytest.approx(1.0)
    assert trajectory.survival_probs[-1] == pytest.approx(math.cos(0.01) ** 200, rel=1e-12)
    assert trajectory.survival_probs[-1] == pytest.approx(0.990, abs=1e-3)
    assert all(0 <= p <= 1 + 1e-10 for p in trajectory.survival_probs)


def test_measured_trajectory_frozen_eigenstate():
    trajectory = measured_trajectory(ZenoSetup(PAULI_Z, P1, E1), 3.0, 60, 6)
    assert np.allclose(trajectory.survival_probs, 1.0, atol=1e-12)


def test_measured_trajectory_single_measurement(rng):
    H = random_hermitian(rng, 3)
    psi0 = random_state(rng, 3)
    P = make_projector(basis=psi0.amplitudes)
    trajectory = measured_trajectory(ZenoSetup(H, P, psi0), 1.4, 1, 1)
    amplitude = np.vdot(psi0.amplitudes, expm_antihermitian(H, 1.4).entries @ psi0.amplitudes)
    assert trajectory.survival_probs[-1] == pytest.approx(abs(amplitude) ** 2, rel=1e-12)


def test_measured_trajectory_requires_commensurate_samples():
    with pytest.raises(CommensurabilityError, match=r"does not divide N=100.*nearest: \[5, 10\]"):
        measured_trajectory(sigma_x_setup(), 1.0, 100, 7)


@pytest.mark.parametrize("N,target,expected", [
    (100, 7, [5, 10]),
    (97, 5, [1, 97]),
    (12, 12, [12]),
    (30_000_000, 7, [6, 8]),
    (2 * 3 * 5 * 7, 9, [7, 10]),
])
def test_nearest_divisors(N, target, expected):
    assert nearest_divisors(N, target) == expected


def test_qze_survival_grows_with_measurements(rng):
    H = random_hermitian(rng, 4)
    psi0 = random_state(rng, 4)
    setup = ZenoSetup(H, make_projector(basis=psi0.amplitudes), psi0)
    survivals = [measured_trajectory(setup, 1.0, N, 1).survival_probs[-1] for N in doubling_ladder(8, 512)]
    assert all(b >= a - 1e-9 for a, b in zip(survivals, survivals[1:]))
