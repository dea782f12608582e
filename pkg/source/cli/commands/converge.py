import logging
from source.quantum.errors import SpecError
from source.quantum.utils import performance_workers
from source.quantum.zeno import (
    ZenoSetup, convergence_scan, fit_convergence_slope, ladder_is_monotone, doubling_ladder, prepared_state,
)
from ..components.specs import SpecParser
from ..components.output import render, emit

logger = logging.getLogger(__name__)

N_MIN = 8


def register(subparsers, common):
    parser = subparsers.add_parser("converge", parents=[common], help="convergence of V_N(t) to the Zeno limit")
    parser.add_argument("--hamiltonian", required=True)
    parser.add_argument("--projector", required=True)
    parser.add_argument("--state", default=None, help="initial state in range(P); defaults to a column of P")
    parser.add_argument("--t", type=float, default=1.0)
    parser.add_argument("--n-max", type=int, default=1024)
    parser.set_defaults(handler=run_converge)


def run_converge(args, rng) -> int:
    if args.n_max < N_MIN or args.n_max & (args.n_max - 1):
        raise SpecError("n-max", f"must be a power of two >= {N_MIN}, got {args.n_max}")
    H = SpecParser.hamiltonian(args.hamiltonian, rng)
    P = SpecParser.projector(args.projector, rng, H.dim)
    psi0 = SpecParser.state(args.state, rng, H.dim) if args.state else prepared_state(P)
    setup = ZenoSetup(H, P, psi0)

    scan = convergence_scan(setup, args.t, doubling_ladder(N_MIN, args.n_max), performance_workers(args.performance))
    slope = fit_convergence_slope(scan)
    monotone = ladder_is_monotone(scan)
    rows = [(r.N, r.error_spectral, r.error_frobenius) for r in scan]
    summary = {"slope": "exact" if slope is None else slope, "monotone": monotone}
    emit(render(("N", "error_spectral", "error_frobenius"), rows, args.format, summary), args.out)
    if not monotone:
        logger.error("errors are not non-increasing along the doubling ladder (20%% slack)")
        return 1
    return 0
