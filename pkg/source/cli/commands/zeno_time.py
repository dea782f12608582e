import math
from source.quantum.geometry import projective_metric_length
from source.quantum.linalg import zeno_time
from source.quantum.qubit import QubitHamiltonian, qubit_zeno_time
from ..components.specs import SpecParser
from ..components.output import render, emit


def register(subparsers, common):
    parser = subparsers.add_parser("zeno-time", parents=[common], help="Zeno time from the variance, the projective metric and the qubit formula")
    parser.add_argument("--hamiltonian", required=True)
    parser.add_argument("--state", required=True)
    parser.set_defaults(handler=run_zeno_time)


def _from_length(length: float) -> float:
    return 1.0 / math.sqrt(length) if length > 0 else math.inf


def run_zeno_time(args, rng) -> int:
    H = SpecParser.hamiltonian(args.hamiltonian, rng)
    psi0 = SpecParser.state(args.state, rng, H.dim)
    rows = [
        ("variance", zeno_time(psi0, H)),
        ("projective_metric", _from_length(projective_metric_length(H, psi0))),
    ]
    if H.dim == 2:
        rows.append(("bloch_cross_product", qubit_zeno_time(QubitHamiltonian.from_operator(H), psi0)))
    emit(render(("method", "tau_z"), rows, args.format), args.out)
    return 0
