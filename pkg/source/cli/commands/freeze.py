import numpy as np
from source.quantum.qubit import QubitHamiltonian, frozen_state_check
from ..components.output import render, emit


def register(subparsers, common):
    parser = subparsers.add_parser("freeze", parents=[common], help="survival and phase of the North-Pole state under U_Z(t)")
    for name in ("--h0", "--hx", "--hy", "--hz"):
        parser.add_argument(name, type=float, default=0.0)
    parser.add_argument("--t-max", type=float, default=np.pi)
    parser.add_argument("--samples", type=int, default=100)
    parser.set_defaults(handler=run_freeze)


def run_freeze(args, rng) -> int:
    Hq = QubitHamiltonian(args.h0, (args.hx, args.hy, args.hz))
    rows = []
    for t in np.linspace(0.0, args.t_max, max(args.samples, 2)):
        survival, phase = frozen_state_check(Hq, float(t))
        rows.append((float(t), survival, phase.real, phase.imag))
    emit(render(("t", "survival", "phase_re", "phase_im"), rows, args.format), args.out)
    return 0
