import math
import numpy as np
from source.quantum.linalg import survival_probability, zeno_time
from ..components.specs import SpecParser
from ..components.output import render, emit


def register(subparsers, common):
    parser = subparsers.add_parser("survival", parents=[common], help="survival probability p(t) and its quadratic law")
    parser.add_argument("--hamiltonian", required=True)
    parser.add_argument("--state", required=True)
    parser.add_argument("--t-max", type=float, default=math.pi)
    parser.add_argument("--samples", type=int, default=100)
    parser.set_defaults(handler=run_survival)


def run_survival(args, rng) -> int:
    H = SpecParser.hamiltonian(args.hamiltonian, rng)
    psi0 = SpecParser.state(args.state, rng, H.dim)
    tau = zeno_time(psi0, H)
    rows = []
    for t in np.linspace(0.0, args.t_max, max(args.samples, 2)):
        t = float(t)
        quadratic = 1.0 - (t / tau) ** 2 if math.isfinite(tau) else 1.0
        rows.append((t, survival_probability(psi0, H, t), quadratic))
    emit(render(("t", "p", "quadratic_approx"), rows, args.format, {"tau_z": tau}), args.out)
    return 0
