import math
import numpy as np
from source.quantum.errors import SpecError
from source.quantum.qubit import QubitHamiltonian, integrate_zeno_flow, default_flow_steps
from ..components.specs import SpecParser
from ..components.output import render, emit


def register(subparsers, common):
    parser = subparsers.add_parser("flow", parents=[common], help="Zeno flow on the Bloch sphere for P = |e1><e1|")
    for name in ("--h0", "--hx", "--hy", "--hz"):
        parser.add_argument(name, type=float, default=0.0)
    parser.add_argument("--start", default="equator", help="north|south|equator|bloch:u,x,y,z or a qubit state spec")
    parser.add_argument("--t", type=float, default=np.pi)
    parser.add_argument("--steps", type=int, default=None)
    parser.add_argument("--rate-factor", type=float, choices=(1.0, 2.0), default=1.0)
    parser.set_defaults(handler=run_flow)


def run_flow(args, rng) -> int:
    if not math.isfinite(args.t):
        raise SpecError("t", f"must be finite, got {args.t}")
    if args.steps is not None and args.steps < 1:
        raise SpecError("steps", f"must be a positive integer, got {args.steps}")
    Hq = QubitHamiltonian(args.h0, (args.hx, args.hy, args.hz))
    start = SpecParser.start(args.start, rng)
    steps = args.steps or default_flow_steps(Hq, args.t, args.rate_factor)
    points = integrate_zeno_flow(Hq, start, args.t, steps, args.rate_factor)
    times = np.linspace(0.0, args.t, steps + 1)
    rows = [(float(t), p.u, p.x, p.y, p.z) for t, p in zip(times, points)]
    summary = {
        "conserved_u_drift": max(abs(p.u - start.u) for p in points),
        "conserved_z_drift": max(abs(p.z - start.z) for p in points),
        "sphere_defect": max(p.constraint_violation() for p in points),
    }
    emit(render(("t", "u", "x", "y", "z"), rows, args.format, summary), args.out)
    return 0
