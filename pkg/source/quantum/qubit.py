"""
The qubit: H = h0 I + h . sigma on C^2.

Pauli matrices are the usual ones, sigma_z = diag(1, -1), so the quadratic
functions u, x, y, z are the expectation values of I, sigma_x, sigma_y,
sigma_z and e_1 sits at the North Pole z = +1. The measurement projector is
P = (I + sigma_z)/2 = |e_1><e_1|.
"""
import logging
import math
import numpy as np
from source.settings import SPHERE_TOL, VARIANCE_FLOOR, NORM_FLOOR, MIN_FLOW_STEPS, FLOW_STEPS_PER_RADIAN
from .errors import QuantumError, DimensionError, InvariantError, DegenerateStateError
from .geometry import QuadraticFunction, poisson_bracket
from .integrate import rk4
from .linalg import State, HermitianOperator, Projector
from .zeno import ZenoSetup, zeno_hamiltonian, zeno_limit_unitary

logger = logging.getLogger(__name__)

PAULI_I = HermitianOperator(np.eye(2, dtype=complex))
PAULI_X = HermitianOperator([[0, 1], [1, 0]])
PAULI_Y = HermitianOperator([[0, -1j], [1j, 0]])
PAULI_Z = HermitianOperator([[1, 0], [0, -1]])
NORTH_PROJECTOR = Projector((PAULI_I.entries + PAULI_Z.entries) / 2)

BLOCH_OPERATORS = (PAULI_I, PAULI_X, PAULI_Y, PAULI_Z)


class QubitHamiltonian:
    __slots__ = ['h0', 'h']

    def __init__(self, h0: float, h):
        h = tuple(float(c) for c in h)
        if len(h) != 3:
            raise DimensionError(f"field vector h needs 3 components, got {len(h)}")
        if not all(math.isfinite(c) for c in (h0, *h)):
            raise InvariantError("qubit Hamiltonian coefficients must be finite")
        self.h0 = float(h0)
        self.h = h

    @classmethod
    def from_operator(cls, H: HermitianOperator):
        """Decompose a 2x2 Hermitian matrix as h0 I + h . sigma."""
        if H.dim != 2:
            raise DimensionError(f"qubit Hamiltonian needs a 2x2 operator, got dim {H.dim}")
        coefficients = [float(np.trace(s.entries @ H.entries).real) / 2 for s in BLOCH_OPERATORS]
        return cls(coefficients[0], coefficients[1:])

    @property
    def hx(self) -> float:
        return self.h[0]

    @property
    def hy(self) -> float:
        return self.h[1]

    @property
    def hz(self) -> float:
        return self.h[2]

    def matrix(self) -> HermitianOperator:
        entries = self.h0 * PAULI_I.entries + sum(c * s.entries for c, s in zip(self.h, (PAULI_X, PAULI_Y, PAULI_Z)))
        return HermitianOperator(entries)

    def __repr__(self):
        return f"QubitHamiltonian(h0={self.h0}, h={self.h})"


class BlochPoint:
    __slots__ = ['u', 'x', 'y', 'z']

    def __init__(self, u: float, x: float, y: float, z: float):
        self.u = float(u)
        self.x = float(x)
        self.y = float(y)
        self.z = float(z)

    @classmethod
    def from_array(cls, values):
        u, x, y, z = np.asarray(values, dtype=float)
        return cls(u, x, y, z)

    @property
    def vector(self) -> np.ndarray:
        return np.array([self.x, self.y, self.z])

    def as_array(self) -> np.ndarray:
        return np.array([self.u, self.x, self.y, self.z])

    def constraint_violation(self) -> float:
        """|u^2 - (x^2 + y^2 + z^2)|."""
        return abs(self.u ** 2 - float(np.dot(self.vector, self.vector)))

    def validate(self, tol: float = SPHERE_TOL):
        if self.u < 0:
            raise InvariantError(f"u must be non-negative, got {self.u}")
        if self.constraint_violation() > tol * max(1.0, self.u ** 2):
            raise InvariantError(
                f"Bloch point violates u^2 = x^2 + y^2 + z^2 (defect {self.constraint_violation():.3e})"
            )
        return self

    def __repr__(self):
        return f"BlochPoint(u={self.u!r}, x={self.x!r}, y={self.y!r}, z={self.z!r})"


NORTH_POLE = BlochPoint(1.0, 0.0, 0.0, 1.0)


def _require_qubit(psi: State):
    if psi.dim != 2:
        raise DimensionError(f"qubit state needs dimension 2, got {psi.dim}")


def bloch_map(psi: State) -> BlochPoint:
    _require_qubit(psi)
    z1, z2 = psi.amplitudes
    a, b = abs(z1) ** 2, abs(z2) ** 2
    c = np.conj(z1) * z2
    return BlochPoint(a + b, 2 * c.real, 2 * c.imag, a - b)


def qubit_expectation(Hq: QubitHamiltonian, psi: State) -> float:
    """f_H = h0 u + h . x."""
    point = bloch_map(psi)
    return Hq.h0 * point.u + float(np.dot(Hq.h, point.vector))


def qubit_zeno_time(Hq: QubitHamiltonian, psi: State) -> float:
    """tau_Z^{-2} = (h ^ x)^2 / x^2; h0 drops out."""
    point = bloch_map(psi)
    x_squared = float(np.dot(point.vector, point.vector))
    if point.u <= NORM_FLOOR:
        raise DegenerateStateError("the zero vector has no Zeno time")
    cross = np.cross(Hq.h, point.vector)
    inverse_square = float(np.dot(cross, cross)) / x_squared
    if inverse_square <= VARIANCE_FLOOR:
        return math.inf
    return 1.0 / math.sqrt(inverse_square)


def zeno_rate(Hq: QubitHamiltonian, rate_factor: float = 1.0) -> float:
    """
    Angular rate omega_Z of (x, y) under the Zeno flow for P = |e_1><e_1|.
    rate_factor=1 is the Schrodinger rate h0 + h_z; rate_factor=2 gives the
    doubled rate 2 (h0 + h_z) of the textbook form of the flow equations.
    """
    return rate_factor * (Hq.h0 + Hq.hz)


def zeno_flow_generator(Hq: QubitHamiltonian, rate_factor: float = 1.0):
    """Right-hand side (t, (u, x, y, z)) -> (0, -omega y, omega x, 0)."""
    omega = zeno_rate(Hq, rate_factor)

    def field(_, values):
        _, x, y, _ = values
        return np.array([0.0, -omega * y, omega * x, 0.0])

    return field


def pushed_zeno_generator(Hq: QubitHamiltonian, psi: State) -> np.ndarray:
    """
    (du, dx, dy, dz)/dt along the Hamiltonian vector field of f_{H_Z},
    obtained as the Poisson brackets {f_{H_Z}, f_s} for s in (I, sigma).
    """
    _require_qubit(psi)
    f_zeno = QuadraticFunction(zeno_hamiltonian(Hq.matrix(), NORTH_PROJECTOR))
    return np.array([poisson_bracket(f_zeno, QuadraticFunction(s), psi) for s in BLOCH_OPERATORS])


def _require_finite_time(t: float):
    if not math.isfinite(t):
        raise QuantumError(f"flow time must be finite, got {t!r}")


def default_flow_steps(Hq: QubitHamiltonian, t: float, rate_factor: float = 1.0) -> int:
    _require_finite_time(t)
    needed = FLOW_STEPS_PER_RADIAN * abs(zeno_rate(Hq, rate_factor)) * abs(t)
    if not math.isfinite(needed):
        raise QuantumError(f"rotation angle omega * t overflows (omega={zeno_rate(Hq, rate_factor)!r}, t={t!r})")
    return max(MIN_FLOW_STEPS, math.ceil(needed))


def integrate_zeno_flow(Hq: QubitHamiltonian, start: BlochPoint, t: float, steps: int = None,
                        rate_factor: float = 1.0) -> list:
    """RK4 trajectory of the Zeno flow; steps + 1 points including the start."""
    _require_finite_time(t)
    start.validate()
    if steps is None:
        steps = default_flow_steps(Hq, t, rate_factor)
    _, ys = rk4(zeno_flow_generator(Hq, rate_factor), start.as_array(), t, steps)
    logger.debug("zeno flow: %d steps, omega=%r", steps, zeno_rate(Hq, rate_factor))
    return [BlochPoint.from_array(row) for row in ys]


def frozen_state_check(Hq: QubitHamiltonian, t: float):
    """
    Survival and phase of e_1 under U_Z(t) = e^{-i H_Z t} P. e_1 satisfies the
    preparation constraint z_2 = 0, so the state stays frozen up to the phase
    e^{-i (h0 + h_z) t}.
    """
    setup = ZenoSetup(Hq.matrix(), NORTH_PROJECTOR, State.basis(1, 2))
    e1 = setup.initial_state.amplitudes
    amplitude = complex(np.vdot(e1, zeno_limit_unitary(setup.hamiltonian, setup.projector, t) @ e1))
    return abs(amplitude) ** 2, amplitude
