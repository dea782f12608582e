from .errors import (
    QuantumError, DimensionError, InvariantError, DegenerateStateError,
    ExtrapolationError, CommensurabilityError, SpecError,
)
from .linalg import (
    State, HermitianOperator, Projector, UnitaryMatrix,
    expm_antihermitian, evolve, survival_amplitude, survival_probability,
    leakage_probability, expectation, variance, zeno_time, short_time_coefficient,
    normalize, random_hermitian, random_state,
)
from .geometry import (
    RealChartPoint, QuadraticFunction, CotangentVector, TangentVector,
    differential, metric_G, symplectic_Omega, poisson_bracket, jordan_bracket,
    hamiltonian_vector_field, homogeneous_expectation, projective_metric_length,
)
from .zeno import (
    ZenoSetup, ZenoTrajectory, ConvergenceRow, make_projector, random_projector,
    zeno_product, zeno_hamiltonian, zeno_limit_unitary, zeno_group,
    convergence_scan, fit_convergence_slope, measured_trajectory,
)
from .qubit import (
    QubitHamiltonian, BlochPoint, PAULI_I, PAULI_X, PAULI_Y, PAULI_Z, NORTH_PROJECTOR,
    bloch_map, qubit_expectation, qubit_zeno_time, zeno_flow_generator,
    integrate_zeno_flow, frozen_state_check,
)
