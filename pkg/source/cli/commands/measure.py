from source.quantum.zeno import ZenoSetup, measured_trajectory, prepared_state
from ..components.specs import SpecParser
from ..components.output import render, emit


def register(subparsers, common):
    parser = subparsers.add_parser("measure", parents=[common], help="survival after N repeated projective measurements")
    parser.add_argument("--hamiltonian", required=True)
    parser.add_argument("--projector", required=True)
    parser.add_argument("--state", default=None)
    parser.add_argument("--t", type=float, default=1.0)
    parser.add_argument("--n", type=int, default=100)
    parser.add_argument("--samples", type=int, default=10)
    parser.set_defaults(handler=run_measure)


def run_measure(args, rng) -> int:
    H = SpecParser.hamiltonian(args.hamiltonian, rng)
    P = SpecParser.projector(args.projector, rng, H.dim)
    psi0 = SpecParser.state(args.state, rng, H.dim) if args.state else prepared_state(P)
    trajectory = measured_trajectory(ZenoSetup(H, P, psi0), args.t, args.n, args.samples)
    rows = list(zip(trajectory.times, trajectory.survival_probs))
    emit(render(("t", "survival"), rows, args.format, {"N": trajectory.N}), args.out)
    return 0
