"""
Finite-dimensional Hilbert-space kernel.

States are plain complex amplitude vectors (no normalization is enforced on
construction); Hermitian operators, projectors and unitaries validate their
invariants when built. Every operation is a pure function of immutable values.
Units: hbar = 1, so t * H is dimensionless.
"""
import logging
import math
import numpy as np
from scipy.linalg import expm, eigh
from source.settings import (
    HERMITIAN_TOL, NORMALIZED_TOL, PROJECTOR_TOL, UNITARY_TOL,
    VARIANCE_FLOOR, NORM_FLOOR, EXPM_NORM_LIMIT,
    RICHARDSON_T0, RICHARDSON_LEVELS, RICHARDSON_RTOL, RICHARDSON_ATOL,
)
from .errors import DimensionError, InvariantError, DegenerateStateError, ExtrapolationError, QuantumError
from .utils import frozen

logger = logging.getLogger(__name__)


class State:
    __slots__ = ['amplitudes']

    def __init__(self, amplitudes):
        z = np.asarray(amplitudes, dtype=complex)
        if z.ndim != 1 or z.size < 1:
            raise DimensionError(f"State needs a non-empty 1-D amplitude vector, got shape {z.shape}")
        if not np.all(np.isfinite(z)):
            raise InvariantError("State amplitudes must be finite")
        self.amplitudes = frozen(z)

    @classmethod
    def basis(cls, k: int, n: int):
        """The basis vector e_k of C^n, with k counted from 1."""
        if not 1 <= k <= n:
            raise DimensionError(f"basis index {k} outside 1..{n}")
        z = np.zeros(n, dtype=complex)
        z[k - 1] = 1.0
        return cls(z)

    @property
    def dim(self) -> int:
        return self.amplitudes.size

    @property
    def norm_squared(self) -> float:
        return float(np.vdot(self.amplitudes, self.amplitudes).real)

    @property
    def is_normalized(self) -> bool:
        return abs(self.norm_squared - 1.0) <= NORMALIZED_TOL

    def scaled(self, factor: complex):
        return State(factor * self.amplitudes)

    def __repr__(self):
        return f"State({self.amplitudes!r})"


class HermitianOperator:
    __slots__ = ['entries']

    def __init__(self, entries):
        a = _square_matrix(entries, "HermitianOperator")
        deviation = np.max(np.abs(a - a.conj().T))
        if deviation > HERMITIAN_TOL:
            raise InvariantError(f"operator is not Hermitian (max |A - A^dagger| = {deviation:.3e})")
        self.entries = frozen(a)

    @classmethod
    def identity(cls, n: int):
        return cls(np.eye(n, dtype=complex))

    @classmethod
    def symmetrized(cls, matrix):
        """Hermitian part (M + M^dagger)/2 of a matrix that is Hermitian up to round-off."""
        m = np.asarray(matrix, dtype=complex)
        return cls((m + m.conj().T) / 2)

    @property
    def dim(self) -> int:
        return self.entries.shape[0]

    def spectral_norm(self) -> float:
        return float(np.linalg.norm(self.entries, 2))

    def __repr__(self):
        return f"HermitianOperator(dim={self.dim})"


class Projector:
    __slots__ = ['entries', 'rank']

    def __init__(self, entries):
        p = _square_matrix(entries, "Projector")
        if np.max(np.abs(p - p.conj().T)) > HERMITIAN_TOL:
            raise InvariantError("projector is not Hermitian")
        idempotency = np.linalg.norm(p @ p - p, 'fro')
        if idempotency > PROJECTOR_TOL:
            raise InvariantError(f"projector is not idempotent (||P^2 - P||_F = {idempotency:.3e})")
        trace = np.trace(p).real
        rank = int(round(trace))
        if abs(trace - rank) > PROJECTOR_TOL or rank < 1:
            raise InvariantError(f"projector trace {trace} is not a positive integer rank")
        self.entries = frozen(p)
        self.rank = rank

    @classmethod
    def identity(cls, n: int):
        return cls(np.eye(n, dtype=complex))

    @property
    def dim(self) -> int:
        return self.entries.shape[0]

    def __repr__(self):
        return f"Projector(dim={self.dim}, rank={self.rank})"


class UnitaryMatrix:
    __slots__ = ['entries']

    def __init__(self, entries):
        u = _square_matrix(entries, "UnitaryMatrix")
        defect = np.linalg.norm(u.conj().T @ u - np.eye(u.shape[0]), 'fro')
        if defect > UNITARY_TOL:
            raise InvariantError(f"matrix is not unitary (||U^dagger U - I||_F = {defect:.3e})")
        self.entries = frozen(u)

    @property
    def dim(self) -> int:
        return self.entries.shape[0]

    def apply(self, psi: State) -> State:
        _check_dims(self.dim, psi.dim)
        return State(self.entries @ psi.amplitudes)


def _square_matrix(entries, name: str) -> np.ndarray:
    a = np.asarray(entries, dtype=complex)
    if a.ndim != 2 or a.shape[0] != a.shape[1] or a.shape[0] < 1:
        raise DimensionError(f"{name} needs a square matrix, got shape {a.shape}")
    if not np.all(np.isfinite(a)):
        raise InvariantError(f"{name} entries must be finite")
    return a


def _check_dims(*dims: int):
    if len(set(dims)) != 1:
        raise DimensionError(f"dimension mismatch: {dims}")


def _require_normalized(psi: State):
    if not psi.is_normalized:
        raise InvariantError(f"state must be normalized (||psi||^2 = {psi.norm_squared!r})")


def _require_ray(psi: State) -> float:
    norm_squared = psi.norm_squared
    if norm_squared <= NORM_FLOOR:
        raise DegenerateStateError(f"state norm^2 {norm_squared:.3e} is below {NORM_FLOOR}")
    return norm_squared


def normalize(psi: State) -> State:
    return psi.scaled(1.0 / math.sqrt(_require_ray(psi)))


def random_hermitian(rng: np.random.Generator, n: int, scale: float = 1.0) -> HermitianOperator:
    """Gaussian Hermitian matrix rescaled to spectral norm `scale`."""
    m = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
    h = (m + m.conj().T) / 2
    norm = np.linalg.norm(h, 2)
    if norm > 0:
        h = h * (scale / norm)
    return HermitianOperator(h)


def random_state(rng: np.random.Generator, n: int, normalized: bool = True) -> State:
    z = rng.normal(size=n) + 1j * rng.normal(size=n)
    psi = State(z)
    return normalize(psi) if normalized else psi


def expm_antihermitian(H: HermitianOperator, t: float) -> UnitaryMatrix:
    """
    e^{-iHt}. Scaling-and-squaring Pade (scipy.linalg.expm) up to
    ||H t|| = EXPM_NORM_LIMIT; beyond that V diag(e^{-i lambda t}) V^dagger from
    the eigendecomposition, which stays unitary to round-off for any t.
    """
    if not isinstance(H, HermitianOperator):
        raise InvariantError("expm_antihermitian needs a HermitianOperator")
    if not math.isfinite(t):
        raise QuantumError(f"time must be finite, got {t!r}")
    if H.spectral_norm() * abs(t) <= EXPM_NORM_LIMIT:
        return UnitaryMatrix(expm(-1j * t * H.entries))
    eigenvalues, vectors = eigh(H.entries)
    return UnitaryMatrix((vectors * np.exp(-1j * t * eigenvalues)) @ vectors.conj().T)


def evolve(psi0: State, H: HermitianOperator, t: float) -> State:
    _check_dims(psi0.dim, H.dim)
    _require_normalized(psi0)
    return expm_antihermitian(H, t).apply(psi0)


def survival_amplitude(psi0: State, H: HermitianOperator, t: float) -> complex:
    psi_t = evolve(psi0, H, t)
    return complex(np.vdot(psi0.amplitudes, psi_t.amplitudes))


def survival_probability(psi0: State, H: HermitianOperator, t: float) -> float:
    return abs(survival_amplitude(psi0, H, t)) ** 2


def leakage_probability(psi0: State, H: HermitianOperator, t: float) -> float:
    """1 - p(t) as ||(I - |psi0><psi0|) U(t) psi0||^2, free of the 1 - p cancellation."""
    psi_t = evolve(psi0, H, t).amplitudes
    z = psi0.amplitudes
    residual = psi_t - np.vdot(z, psi_t) * z
    return float(np.vdot(residual, residual).real)


def expectation(A: HermitianOperator, psi: State) -> float:
    """Homogeneous expectation value <psi|A|psi> / <psi|psi>."""
    _check_dims(A.dim, psi.dim)
    norm_squared = _require_ray(psi)
    z = psi.amplitudes
    return float(np.vdot(z, A.entries @ z).real) / norm_squared


def variance(H: HermitianOperator, psi: State) -> float:
    """(Delta H)^2 = <H^2>/<psi|psi> - (<H>/<psi|psi>)^2, evaluated as ||(H - <H>) psi||^2 / ||psi||^2."""
    mean = expectation(H, psi)
    z = psi.amplitudes
    centered = H.entries @ z - mean * z
    return float(np.vdot(centered, centered).real) / psi.norm_squared


def zeno_time(psi0: State, H: HermitianOperator) -> float:
    var = variance(H, psi0)
    if var <= VARIANCE_FLOOR:
        return math.inf
    return 1.0 / math.sqrt(var)


def short_time_coefficient(psi0: State, H: HermitianOperator) -> float:
    """
    Coefficient c of p(t) = 1 - c t^2 + O(t^4).

    (1 - p(t)) / t^2 is even in t, so the leading error terms are removed by
    Richardson extrapolation in t^2 over t_k = t0 / 2^k.
    """
    _check_dims(psi0.dim, H.dim)
    _require_normalized(psi0)
    mean = expectation(H, psi0)
    scale = float(np.linalg.norm(H.entries - mean * np.eye(H.dim), 2))
    if scale == 0.0:
        return 0.0

    t0 = RICHARDSON_T0 / scale
    table = []
    for k in range(RICHARDSON_LEVELS):
        t = t0 / 2 ** k
        row = [leakage_probability(psi0, H, t) / t ** 2]
        for j in range(1, k + 1):
            factor = 4 ** j
            row.append((factor * row[j - 1] - table[k - 1][j - 1]) / (factor - 1))
        table.append(row)

    estimate = table[-1][-1]
    spread = abs(estimate - table[-2][-2])
    allowed = RICHARDSON_RTOL * abs(estimate) + RICHARDSON_ATOL * scale ** 2
    logger.debug("short-time extrapolation: estimate=%r spread=%r allowed=%r", estimate, spread, allowed)
    if spread > allowed:
        raise ExtrapolationError(
            f"short-time coefficient did not converge: last two estimates differ by {spread:.3e} "
            f"(allowed {allowed:.3e}); leading behaviour is not quadratic"
        )
    return max(estimate, 0.0)
