import logging
from source.quantum.errors import SpecError
from source.quantum.geometry import QuadraticFunction, differential, symplectic_Omega, metric_G
from source.quantum.linalg import HermitianOperator, random_hermitian, random_state
from source.settings import BRACKET_TOL
from ..components.output import render, emit

logger = logging.getLogger(__name__)

MAX_DIM = 16


def register(subparsers, common):
    parser = subparsers.add_parser("brackets", parents=[common], help="check the Lie-Jordan identities on random observables")
    parser.add_argument("--n", type=int, default=2)
    parser.add_argument("--trials", type=int, default=100)
    parser.set_defaults(handler=run_brackets)


def bracket_deviations(A: HermitianOperator, B: HermitianOperator, psi):
    """|Omega(df_A, df_B) - f_{i[A,B]}| and |G(df_A, df_B) - f_{(AB+BA)/2}| at psi."""
    a, b = A.entries, B.entries
    dA = differential(QuadraticFunction(A), psi)
    dB = differential(QuadraticFunction(B), psi)
    commutator = QuadraticFunction(HermitianOperator.symmetrized(1j * (a @ b - b @ a)))(psi)
    anticommutator = QuadraticFunction(HermitianOperator.symmetrized((a @ b + b @ a) / 2))(psi)
    return abs(symplectic_Omega(dA, dB) - commutator), abs(metric_G(dA, dB) - anticommutator)


def run_brackets(args, rng) -> int:
    if not 1 <= args.n <= MAX_DIM:
        raise SpecError("n", f"dimension must be in 1..{MAX_DIM}, got {args.n}")
    if args.trials < 1:
        raise SpecError("trials", f"must be positive, got {args.trials}")

    worst = {"poisson": (0.0, 0), "jordan": (0.0, 0)}
    for trial in range(args.trials):
        A = random_hermitian(rng, args.n)
        B = random_hermitian(rng, args.n)
        psi = random_state(rng, args.n, normalized=False)
        for name, deviation in zip(("poisson", "jordan"), bracket_deviations(A, B, psi)):
            if deviation > worst[name][0]:
                worst[name] = (deviation, trial)

    rows = [(name, deviation, trial) for name, (deviation, trial) in worst.items()]
    max_deviation = max(d for d, _ in worst.values())
    passed = max_deviation <= BRACKET_TOL
    emit(render(("identity", "max_deviation", "worst_trial"), rows, args.format,
                {"tolerance": BRACKET_TOL, "passed": passed}), args.out)
    if not passed:
        for name, (deviation, trial) in worst.items():
            logger.error("%s bracket identity: deviation %.3e at trial %d exceeds %.1e", name, deviation, trial, BRACKET_TOL)
        return 1
    return 0
