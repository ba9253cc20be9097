"""CLI entry point — argparse interface for spectra, energies, family sweeps and verification."""

import argparse
import sys

from core.closed_forms import DomainError
from core.commands import METHODS, MethodError, cmd_energy, cmd_spectrum, cmd_sweep, render
from core.config import SpectraConfig
from core.extremal import FamilyKind, LocalizationError
from core.graph import GraphError
from core.hjoin import HJoinError
from core.oracle import ConvergenceError
from core.platform import PlatformError, platform_check
from core.record import emit
from core.verify import CHECKS, run_checks

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2

# errors caused by the input rather than by the computation
_USAGE_ERRORS = (GraphError, DomainError, MethodError, HJoinError, ValueError)


def main(argv: list[str] | None = None) -> int:
    args = parse_args(argv)
    config = build_config(args)

    try:
        if args.command == "spectrum":
            record = cmd_spectrum(args.input, args.method, config)
            emit(render(record, config.output_format, config), args.out)
        elif args.command == "energy":
            record = cmd_energy(args.input, args.method, config)
            emit(render(record, config.output_format, config), args.out)
        elif args.command == "sweep":
            record = cmd_sweep(args.family, args.n, args.b, args.full, config, verbose=args.verbose)
            for note in record.results["notes"]:
                print(f"  warning: {note}", file=sys.stderr)
            emit(render(record, config.output_format, config), args.out)
        elif args.command == "verify":
            return run_verify(args, config)
    except (LocalizationError, ConvergenceError, PlatformError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_FAILED
    except _USAGE_ERRORS as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    return EXIT_OK


def run_verify(args: argparse.Namespace, config: SpectraConfig) -> int:
    """Run the selected suites; exit 1 on any failing check."""
    platform_check(verbose=True)
    names = [name for name in CHECKS if getattr(args, name.replace("-", "_"))]
    if args.all or not names:
        names = list(CHECKS)

    report = run_checks(names, config, verbose=True)
    print()
    report.print_summary()
    if args.out:
        report.to_record().save(args.out)
        print(f"\nReport: {args.out}")
    return EXIT_OK if report.passed else EXIT_FAILED


def parse_args(argv: list[str] | None = None) -> argparse.Namespace:
    p = argparse.ArgumentParser(
        prog="randic",
        description="Randić spectra and energies of caterpillars — H-join reduction, closed forms, extremal families",
    )
    sub = p.add_subparsers(dest="command", required=True)

    # Shared output options
    out = argparse.ArgumentParser(add_help=False)
    out.add_argument("--format", choices=["json", "csv"], default=None, help="Output format (default: json)")
    out.add_argument("--out", default=None, help="Write output to this path (default: stdout)")
    out.add_argument("--decimals", type=int, default=None, help="Energy decimals (default: 9)")

    for name, help_text in (("spectrum", "Randić spectrum of a graph"),
                            ("energy", "Randić energy of a graph")):
        sp = sub.add_parser(name, parents=[out], help=help_text)
        sp.add_argument("input", help='Caterpillar spec such as "T(5,6,5)" or an edge-list file')
        sp.add_argument("--method", choices=METHODS, default=None,
                        help="oracle | reduction | closed-form (default: reduction for specs, oracle for edge lists)")

    sw = sub.add_parser("sweep", parents=[out], help="Energies over an extremal caterpillar family")
    sw.add_argument("family", choices=[k.value for k in FamilyKind])
    sw.add_argument("--n", type=int, nargs="+", required=True, help="Order(s) of the trees")
    sw.add_argument("--b", type=int, nargs="+", default=None, help="Fixed star size(s) (fixed-middle, fixed-end)")
    sw.add_argument("--full", action="store_true", help="Emit every (p, RE) row instead of the extremal row")
    sw.add_argument("-v", "--verbose", action="store_true", help="Print diagnostics while sweeping")

    vf = sub.add_parser("verify", help="Run the invariant suites; exit 1 on any failure")
    for name, fn in CHECKS.items():
        vf.add_argument(f"--{name}", action="store_true", help=(fn.__doc__ or "").strip().splitlines()[0])
    vf.add_argument("--all", action="store_true", help="Run every suite (default when none is selected)")
    vf.add_argument("--quick", action="store_true", help="Small suites for a fast smoke run")
    vf.add_argument("--max-n", type=int, default=None, help="Upper order bound for every suite")
    vf.add_argument("--n", type=int, nargs="+", default=None, help="Orders for the remark suite")
    vf.add_argument("--samples", type=int, default=None, help="Random instances per randomized suite")
    vf.add_argument("--seed", type=int, default=None, help="RNG seed for reproducibility")
    vf.add_argument("--workers", type=int, default=None, help="Thread pool size (default: 4)")
    vf.add_argument("--out", default=None, help="Save the JSON report to this path")

    return p.parse_args(argv)


def build_config(args: argparse.Namespace) -> SpectraConfig:
    """Build SpectraConfig from parsed CLI args."""
    if getattr(args, "quick", False):
        config = SpectraConfig.quick()
    else:
        config = SpectraConfig()

    if getattr(args, "format", None) is not None:
        config.output_format = args.format
    if getattr(args, "decimals", None) is not None:
        config.energy_decimals = args.decimals

    if args.command != "verify":
        return config

    if args.max_n is not None:
        config.max_n = args.max_n
        config.oracle_max_n = args.max_n
        config.path_max_n = args.max_n
        config.theorem4_max_n = args.max_n
        config.theorem5_max_n = args.max_n
        config.symmetric_max_n = args.max_n
        config.fixed_end_max_n = args.max_n
    if args.n is not None:
        config.remark_ns = tuple(args.n)
    if args.samples is not None:
        config.samples = args.samples
    if args.seed is not None:
        config.rng_seed = args.seed
    if args.workers is not None:
        config.max_workers = args.workers

    return config


if __name__ == "__main__":
    sys.exit(main())
