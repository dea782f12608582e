"""
Measurement-induced dynamics.

N projective measurements at intervals t/N give V_N(t) = (P U(t/N) P)^N. For
bounded H the N -> infinity limit is U_Z(t) = e^{-i H_Z t} P with the Zeno
Hamiltonian H_Z = P H P. Convergence is measured in the spectral norm.
"""
import logging
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
import numpy as np
from source.settings import HERMITIAN_TOL, PREPARATION_TOL, ORTHONORMAL_REPAIR_TOL, EXACT_ERROR_TOL
from .errors import QuantumError, DimensionError, InvariantError, CommensurabilityError
from .linalg import State, HermitianOperator, Projector, UnitaryMatrix, expm_antihermitian, _check_dims
from .utils import frozen

logger = logging.getLogger(__name__)


class ZenoSetup:
    __slots__ = ['hamiltonian', 'projector', 'initial_state']

    def __init__(self, hamiltonian: HermitianOperator, projector: Projector, initial_state: State):
        _check_dims(hamiltonian.dim, projector.dim, initial_state.dim)
        if not initial_state.is_normalized:
            raise InvariantError("initial state must be normalized")
        residual = np.linalg.norm(projector.entries @ initial_state.amplitudes - initial_state.amplitudes)
        if residual > PREPARATION_TOL:
            raise InvariantError(f"initial state is not prepared in range(P): ||P psi0 - psi0|| = {residual:.3e}")
        self.hamiltonian = hamiltonian
        self.projector = projector
        self.initial_state = initial_state

    @property
    def dim(self) -> int:
        return self.projector.dim


class ZenoTrajectory:
    """Samples of psi_t^(N) = V_N(t) psi0. The states are not normalized."""
    __slots__ = ['times', 'states', 'survival_probs', 'N']

    def __init__(self, times, states, survival_probs, N: int):
        self.times = tuple(times)
        self.states = tuple(states)
        self.survival_probs = tuple(survival_probs)
        self.N = N


@dataclass(frozen=True)
class ConvergenceRow:
    N: int
    error_spectral: float
    error_frobenius: float


def make_projector(matrix=None, basis=None) -> Projector:
    """
    Build a projector from an explicit matrix or from a list of basis vectors
    spanning its range. Bases within ORTHONORMAL_REPAIR_TOL of orthonormal are
    re-orthonormalized; anything further off is rejected.
    """
    if (matrix is None) == (basis is None):
        raise QuantumError("pass exactly one of matrix or basis")
    if matrix is not None:
        return Projector(matrix)

    vectors = np.asarray(basis, dtype=complex)
    if vectors.ndim == 1:
        vectors = vectors[np.newaxis, :]
    if vectors.ndim != 2 or vectors.shape[0] < 1 or vectors.shape[0] > vectors.shape[1]:
        raise DimensionError(f"basis must be r vectors of length n >= r, got shape {vectors.shape}")
    columns = vectors.T
    gram_defect = np.linalg.norm(columns.conj().T @ columns - np.eye(columns.shape[1]), 'fro')
    if gram_defect > ORTHONORMAL_REPAIR_TOL:
        raise InvariantError(f"basis is not orthonormal (||V^dagger V - I||_F = {gram_defect:.3e})")
    if gram_defect > HERMITIAN_TOL:
        logger.warning("re-orthonormalizing projector basis (defect %.3e)", gram_defect)
    columns, _ = np.linalg.qr(columns)
    p = columns @ columns.conj().T
    return Projector((p + p.conj().T) / 2)


def random_projector(rng: np.random.Generator, n: int, rank: int) -> Projector:
    if not 1 <= rank <= n:
        raise DimensionError(f"rank {rank} outside 1..{n}")
    m = rng.normal(size=(n, rank)) + 1j * rng.normal(size=(n, rank))
    q, _ = np.linalg.qr(m)
    return make_projector(basis=q.T)


def prepared_state(P: Projector) -> State:
    """A normalized state in range(P): the normalized column of P with the largest norm."""
    columns = P.entries
    k = int(np.argmax(np.linalg.norm(columns, axis=0)))
    v = columns[:, k]
    return State(v / np.linalg.norm(v))


def spectral_norm(matrix) -> float:
    return float(np.linalg.norm(matrix, 2))


def _check_count(N: int, name: str = "N"):
    if isinstance(N, bool) or not isinstance(N, (int, np.integer)) or N < 1:
        raise QuantumError(f"{name} must be a positive integer, got {N!r}")


def measurement_step(H: HermitianOperator, P: Projector, dt: float) -> np.ndarray:
    """V(dt) = P U(dt) P, one free evolution followed by one measurement."""
    _check_dims(H.dim, P.dim)
    p = P.entries
    return p @ expm_antihermitian(H, dt).entries @ p


def zeno_product(setup: ZenoSetup, t: float, N: int) -> np.ndarray:
    """V_N(t) = (P U(t/N) P)^N by binary powering."""
    _check_count(N)
    step = measurement_step(setup.hamiltonian, setup.projector, t / N)
    return frozen(np.linalg.matrix_power(step, N))


def zeno_hamiltonian(H: HermitianOperator, P: Projector) -> HermitianOperator:
    _check_dims(H.dim, P.dim)
    p = P.entries
    return HermitianOperator.symmetrized(p @ H.entries @ p)


def zeno_group(H: HermitianOperator, P: Projector, t: float) -> UnitaryMatrix:
    """e^{-i H_Z t} without the trailing projection; unitary on the whole space."""
    return expm_antihermitian(zeno_hamiltonian(H, P), t)


def zeno_limit_unitary(H: HermitianOperator, P: Projector, t: float) -> np.ndarray:
    """U_Z(t) = e^{-i H_Z t} P, unitary on range(P)."""
    return frozen(zeno_group(H, P, t).entries @ P.entries)


def convergence_scan(setup: ZenoSetup, t: float, N_values, workers: int = 1) -> list:
    """
    ||V_N(t) - U_Z(t)|| for every N. Different N are evaluated concurrently
    when workers > 1; rows keep the order of N_values.
    """
    N_values = list(N_values)
    if not N_values:
        raise QuantumError("N_values must not be empty")
    for N in N_values:
        _check_count(N)
    if any(b <= a for a, b in zip(N_values, N_values[1:])):
        raise QuantumError("N_values must be strictly ascending")

    limit = zeno_limit_unitary(setup.hamiltonian, setup.projector, t)

    def row(N):
        diff = zeno_product(setup, t, N) - limit
        return ConvergenceRow(N, spectral_norm(diff), float(np.linalg.norm(diff, 'fro')))

    with ThreadPoolExecutor(max_workers=max(1, workers)) as pool:
        rows = list(pool.map(row, N_values))
    for r in rows:
        logger.debug("N=%d spectral=%.3e frobenius=%.3e", r.N, r.error_spectral, r.error_frobenius)
    return rows


def fit_convergence_slope(rows) -> float:
    """
    Least-squares slope of log(error) against log(N). None when every error is
    below EXACT_ERROR_TOL (the commuting case), NaN when fewer than two errors
    are resolvable.
    """
    resolved = [(r.N, r.error_spectral) for r in rows if r.error_spectral > EXACT_ERROR_TOL]
    if not resolved:
        return None
    if len(resolved) < 2:
        return math.nan
    n, err = np.log(np.array(resolved, dtype=float)).T
    slope, _ = np.polyfit(n, err, 1)
    return float(slope)


def ladder_is_monotone(rows, slack: float = 0.2) -> bool:
    """Errors are non-increasing along the scan, allowing each step to grow by `slack`."""
    errors = [r.error_spectral for r in rows]
    return all(b <= (1 + slack) * a + EXACT_ERROR_TOL for a, b in zip(errors, errors[1:]))


def doubling_ladder(n_min: int, n_max: int) -> list:
    values = []
    N = n_min
    while N <= n_max:
        values.append(N)
        N *= 2
    return values


def nearest_divisors(N: int, target: int) -> list:
    """The divisors of N closest to target from below and from above (at most two)."""
    below, above = 1, None
    for d in range(1, math.isqrt(N) + 1):
        if N % d:
            continue
        for divisor in (d, N // d):
            if divisor <= target:
                below = max(below, divisor)
            elif above is None or divisor < above:
                above = divisor
    return [below] if above is None else [below, above]


def measured_trajectory(setup: ZenoSetup, t: float, N: int, samples: int) -> ZenoTrajectory:
    """
    States after each completed group of N/samples measurements, at times
    k t / samples for k = 0..samples. samples must divide N so that every sample
    falls right after a measurement.
    """
    _check_count(N)
    _check_count(samples, "samples")
    if N % samples:
        raise CommensurabilityError(
            f"samples={samples} does not divide N={N}; choose samples among the divisors of N "
            f"(nearest: {nearest_divisors(N, samples)})"
        )
    step = np.linalg.matrix_power(
        measurement_step(setup.hamiltonian, setup.projector, t / N), N // samples
    )
    z = setup.initial_state.amplitudes
    times, states, probs = [], [], []
    for k in range(samples + 1):
        if k:
            z = step @ z
        state = State(z)
        times.append(k * t / samples)
        states.append(state)
        probs.append(state.norm_squared)
    return ZenoTrajectory(times, states, probs, N)
