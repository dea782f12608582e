import numpy as np
from source.quantum.linalg import HermitianOperator, State

LAMBDAS = (2.0, -1.0, 1j, 0.5 + 0.5j)


def f_of(matrix, psi: State) -> float:
    """<psi|M|psi> for a Hermitian matrix given as an array."""
    z = psi.amplitudes
    return float(np.vdot(z, np.asarray(matrix) @ z).real)


def commutator_operator(A: HermitianOperator, B: HermitianOperator) -> np.ndarray:
    a, b = A.entries, B.entries
    return 1j * (a @ b - b @ a)


def anticommutator_operator(A: HermitianOperator, B: HermitianOperator) -> np.ndarray:
    a, b = A.entries, B.entries
    return (a @ b + b @ a) / 2


def power_series_expm(matrix, terms: int = 20) -> np.ndarray:
    result = np.eye(matrix.shape[0], dtype=complex)
    term = np.eye(matrix.shape[0], dtype=complex)
    for k in range(1, terms + 1):
        term = term @ matrix / k
        result = result + term
    return result
