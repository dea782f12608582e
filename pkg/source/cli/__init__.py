import argparse
import logging
import sys
from source.quantum.errors import QuantumError
from source.quantum.utils import make_rng
from source.settings import DEFAULT_PERFORMANCE
from .commands import survival, zeno_time, converge, flow, brackets, freeze, measure

COMMANDS = (survival, zeno_time, converge, flow, brackets, freeze, measure)

logger = logging.getLogger("source.cli")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("csv", "json"), default="csv")
    common.add_argument("--out", default=None, help="output path (default: stdout)")
    common.add_argument("--seed", type=int, default=0, help="seed for every random preset")
    common.add_argument("--performance", type=int, choices=(1, 2, 3), default=DEFAULT_PERFORMANCE,
                        help="worker threads: 1 all cores, 2 half, 3 one")
    common.add_argument("-v", "--verbose", action="store_true")

    parser = argparse.ArgumentParser(
        prog="zeno",
        description="Quantum Zeno effect experiments: survival, Zeno time, Zeno limit and the qubit Zeno flow.",
    )
    subparsers = parser.add_subparsers(dest="command", required=True)
    for command in COMMANDS:
        command.register(subparsers, common)
    return parser


def run(argv=None) -> int:
    """Exit codes: 0 success, 1 tolerance/acceptance failure, 2 usage or input error."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)

    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s", stream=sys.stderr)
    if args.seed < 0:
        print("Error: seed must be an unsigned integer", file=sys.stderr)
        return 2

    try:
        return args.handler(args, make_rng(args.seed))
    except QuantumError as e:
        print(f"Error in {args.command}: {e}", file=sys.stderr)
        return 2
    except OSError as e:
        print(f"Error in {args.command}: {e}", file=sys.stderr)
        return 2


def main():
    sys.exit(run())
