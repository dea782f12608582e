"""
Kahler geometry of the state space in the real chart R^{2n}.

Coordinates are z_k = q_k + i p_k (no 1/sqrt(2)), ordered (q_1..q_n, p_1..p_n).
With that choice the contravariant tensors read

    G     = 1/4 sum_k (d/dq_k (x) d/dq_k + d/dp_k (x) d/dp_k)
    Omega = 1/2 sum_k (d/dp_k (x) d/dq_k - d/dq_k (x) d/dp_k)

and on quadratic functions f_A = <psi|A|psi> they reproduce the Lie-Jordan
algebra of the observables:

    Omega(df_A, df_B) = f_{i(AB - BA)},    G(df_A, df_B) = f_{(AB + BA)/2}.

The Omega normalization is fixed by the first identity. The conformal tensors
G~ = ||psi||^2 G and Omega~ = ||psi||^2 Omega act on differentials of the
homogeneous expectation values f~_A = f_A / ||psi||^2.
"""
import numpy as np
from source.settings import NORM_FLOOR
from .errors import DimensionError, InvariantError, DegenerateStateError
from .integrate import rk4
from .linalg import State, HermitianOperator
from .utils import frozen


class RealChartPoint:
    __slots__ = ['coords']

    def __init__(self, coords):
        c = np.asarray(coords, dtype=float)
        if c.ndim != 1 or c.size < 2 or c.size % 2:
            raise DimensionError(f"real chart point needs 2n coordinates, got shape {c.shape}")
        self.coords = frozen(c)

    @classmethod
    def from_state(cls, psi: State):
        z = psi.amplitudes
        return cls(np.concatenate([z.real, z.imag]))

    @property
    def dim(self) -> int:
        return self.coords.size // 2

    @property
    def q(self) -> np.ndarray:
        return self.coords[:self.dim]

    @property
    def p(self) -> np.ndarray:
        return self.coords[self.dim:]

    def to_state(self) -> State:
        z = np.empty(self.dim, dtype=complex)
        z.real = self.q
        z.imag = self.p
        return State(z)


class QuadraticFunction:
    """f_A(psi) = <psi|A|psi> = sum_{k,l} conj(z_k) A_kl z_l."""
    __slots__ = ['operator']

    def __init__(self, operator: HermitianOperator):
        self.operator = operator

    @property
    def dim(self) -> int:
        return self.operator.dim

    def __call__(self, psi: State) -> float:
        _check_dim(self.dim, psi.dim)
        z = psi.amplitudes
        return float(np.vdot(z, self.operator.entries @ z).real)


class _ChartVector:
    __slots__ = ['components', 'base']

    def __init__(self, components, base: State = None):
        c = np.asarray(components, dtype=float)
        if c.ndim != 1 or c.size % 2:
            raise DimensionError(f"chart vector needs 2n components, got shape {c.shape}")
        if base is not None:
            _check_dim(c.size // 2, base.dim)
        self.components = frozen(c)
        self.base = base

    @property
    def dim(self) -> int:
        return self.components.size // 2

    @property
    def q(self) -> np.ndarray:
        return self.components[:self.dim]

    @property
    def p(self) -> np.ndarray:
        return self.components[self.dim:]

    def _combine(self, other, sign: float):
        _check_pair(self, other)
        return type(self)(self.components + sign * other.components, self.base)

    def __add__(self, other):
        return self._combine(other, 1.0)

    def __sub__(self, other):
        return self._combine(other, -1.0)

    def __mul__(self, scalar: float):
        return type(self)(float(scalar) * self.components, self.base)

    __rmul__ = __mul__

    def __truediv__(self, scalar: float):
        return type(self)(self.components / float(scalar), self.base)


class CotangentVector(_ChartVector):
    """Components in the (dq, dp) basis."""
    __slots__ = []

    def __call__(self, vector: "TangentVector") -> float:
        _check_pair(self, vector)
        return float(np.dot(self.components, vector.components))


class TangentVector(_ChartVector):
    """Components in the (d/dq, d/dp) basis."""
    __slots__ = []

    def as_complex(self) -> np.ndarray:
        """Velocity dz_k/dt = dq_k/dt + i dp_k/dt."""
        z = np.empty(self.dim, dtype=complex)
        z.real = self.q
        z.imag = self.p
        return z


def _check_dim(*dims: int):
    if len(set(dims)) != 1:
        raise DimensionError(f"dimension mismatch: {dims}")


def _check_pair(a: _ChartVector, b: _ChartVector):
    _check_dim(a.dim, b.dim)
    if a.base is not None and b.base is not None and a.base is not b.base:
        if not np.array_equal(a.base.amplitudes, b.base.amplitudes):
            raise InvariantError("vectors live at different base points")


def _require_nonzero(psi: State):
    if not np.any(psi.amplitudes):
        raise DegenerateStateError("the zero vector is not a valid base point")


def _require_ray(psi: State) -> float:
    norm_squared = psi.norm_squared
    if norm_squared <= NORM_FLOOR:
        raise DegenerateStateError(f"state norm^2 {norm_squared:.3e} is below {NORM_FLOOR}")
    return norm_squared


def differential(f: QuadraticFunction, psi: State) -> CotangentVector:
    """
    df_A at psi. From df/d(conj z_k) = (Az)_k and d/dq = d/dz + d/dconj(z),
    d/dp = i(d/dz - d/dconj(z)): df/dq_k = 2 Re (Az)_k, df/dp_k = 2 Im (Az)_k.
    """
    _check_dim(f.dim, psi.dim)
    _require_nonzero(psi)
    w = f.operator.entries @ psi.amplitudes
    return CotangentVector(np.concatenate([2 * w.real, 2 * w.imag]), psi)


def metric_G(df: CotangentVector, dg: CotangentVector) -> float:
    _check_pair(df, dg)
    return 0.25 * float(np.dot(df.components, dg.components))


def symplectic_Omega(df: CotangentVector, dg: CotangentVector) -> float:
    _check_pair(df, dg)
    return 0.5 * float(np.sum(df.p * dg.q - df.q * dg.p))


def conformal_metric_G(df: CotangentVector, dg: CotangentVector) -> float:
    """G~ = ||psi||^2 G at the common base point."""
    return _base_norm_squared(df, dg) * metric_G(df, dg)


def conformal_symplectic_Omega(df: CotangentVector, dg: CotangentVector) -> float:
    return _base_norm_squared(df, dg) * symplectic_Omega(df, dg)


def _base_norm_squared(df: CotangentVector, dg: CotangentVector) -> float:
    base = df.base if df.base is not None else dg.base
    if base is None:
        raise InvariantError("conformal tensors need cotangent vectors attached to a base point")
    return base.norm_squared


def metric_g(X: TangentVector, Y: TangentVector) -> float:
    """Covariant g = sum_k (dq_k (x) dq_k + dp_k (x) dp_k)."""
    _check_pair(X, Y)
    return float(np.dot(X.components, Y.components))


def symplectic_omega(X: TangentVector, Y: TangentVector) -> float:
    """Covariant omega = 2 sum_k (dq_k (x) dp_k - dp_k (x) dq_k); omega(X_f, .) = df."""
    _check_pair(X, Y)
    return 2.0 * float(np.sum(X.q * Y.p - X.p * Y.q))


def hermitian_structure(X: TangentVector, Y: TangentVector) -> complex:
    """h = g + (i/2) omega, the inner product of X and Y read as vectors of C^n."""
    return complex(metric_g(X, Y), 0.5 * symplectic_omega(X, Y))


def poisson_bracket(fA: QuadraticFunction, fB: QuadraticFunction, psi: State) -> float:
    _check_dim(fA.dim, fB.dim)
    return symplectic_Omega(differential(fA, psi), differential(fB, psi))


def jordan_bracket(fA: QuadraticFunction, fB: QuadraticFunction, psi: State) -> float:
    _check_dim(fA.dim, fB.dim)
    return metric_G(differential(fA, psi), differential(fB, psi))


def heisenberg_rate(H: HermitianOperator, A: HermitianOperator, psi: State) -> float:
    """d/dt f_A(psi_t) at t = 0, i.e. {f_H, f_A} = f_{i(HA - AH)}."""
    return poisson_bracket(QuadraticFunction(H), QuadraticFunction(A), psi)


def hamiltonian_vector_field(f: QuadraticFunction, psi: State) -> TangentVector:
    """X_f = Omega(df, .) = 1/2 sum_k (df/dp_k d/dq_k - df/dq_k d/dp_k)."""
    df = differential(f, psi)
    return TangentVector(0.5 * np.concatenate([df.p, -df.q]), psi)


def flow_hamiltonian_vector_field(f: QuadraticFunction, psi0: State, t: float, steps: int) -> State:
    """Integrate the flow of X_f in the real chart with fixed-step RK4."""
    _check_dim(f.dim, psi0.dim)

    def field(_, y):
        return hamiltonian_vector_field(f, RealChartPoint(y).to_state()).components

    _, ys = rk4(field, RealChartPoint.from_state(psi0).coords, t, steps)
    return RealChartPoint(ys[-1]).to_state()


def homogeneous_expectation(A: HermitianOperator, psi: State) -> float:
    _check_dim(A.dim, psi.dim)
    norm_squared = _require_ray(psi)
    return QuadraticFunction(A)(psi) / norm_squared


def homogeneous_differential(A: HermitianOperator, psi: State) -> CotangentVector:
    """d f~_A = (df_A - f~_A d||psi||^2) / ||psi||^2."""
    norm_squared = _require_ray(psi)
    df = differential(QuadraticFunction(A), psi)
    dnorm = differential(QuadraticFunction(HermitianOperator.identity(psi.dim)), psi)
    return (df - homogeneous_expectation(A, psi) * dnorm) / norm_squared


def projective_poisson_bracket(A: HermitianOperator, B: HermitianOperator, psi: State) -> float:
    """Omega~(d f~_A, d f~_B) = f~_{i(AB - BA)}."""
    return conformal_symplectic_Omega(homogeneous_differential(A, psi), homogeneous_differential(B, psi))


def projective_jordan_bracket(A: HermitianOperator, B: HermitianOperator, psi: State) -> float:
    """G~(d f~_A, d f~_B) = f~_{(AB + BA)/2} - f~_A f~_B, the symmetrised covariance."""
    return conformal_metric_G(homogeneous_differential(A, psi), homogeneous_differential(B, psi))


def projective_metric_length(H: HermitianOperator, psi: State) -> float:
    """
    G~(d f~_H, d f~_H): the squared length of the Hamiltonian vector field on
    projective space, equal to (Delta H)^2 = tau_Z^{-2}.
    """
    return max(projective_jordan_bracket(H, H, psi), 0.0)
