"""
Command-line entry point.

    heaps run   --heap fib --gen runs:4 --n 4096 --trials 8 --validate --csv out.csv
    heaps probe --id pairing-degree --sizes 2^8..2^14 --out results/
    heaps diff  --trace failing.txt --subject pairing

Exit codes: 0 all checks passed, 1 divergence or validator failure, 2 usage,
input or I/O error.
"""
import argparse
import logging
import sys
from pathlib import Path
from typing import List, Optional

from adaptive_heaps.core.config import settings
from adaptive_heaps.core.errors import (
    StructuralError,
    TraceError,
    ValidationFailure,
    WorkloadError,
)
from adaptive_heaps.core.logging_config import configure_logging
from adaptive_heaps.core.types import HeapKind

logger = logging.getLogger("adaptive_heaps.cli")

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="heaps", description="Adaptive heap experiments and differential testing")
    parser.add_argument("--log-level", default=None, help=f"Logging level (default {settings.LOG_LEVEL})")
    sub = parser.add_subparsers(dest="command", required=True)

    run_p = sub.add_parser("run", help="Replay a generated workload and emit metric rows")
    run_p.add_argument("--heap", default=HeapKind.FIB.value, choices=[k.value for k in HeapKind])
    run_p.add_argument("--gen", default="random",
                       help="random | sorted | reverse | runs:R | swaps:S | sawtooth:P | trace:FILE")
    run_p.add_argument("--n", type=int, default=0, help="Number of keys (ignored for trace:FILE)")
    run_p.add_argument("--seed", type=int, default=settings.DEFAULT_SEED)
    run_p.add_argument("--trials", type=int, default=settings.DEFAULT_TRIALS)
    run_p.add_argument("--mode", default=None, choices=["sort", "dijkstra", "replay"],
                       help="Operation pattern (default sort, or replay for trace:FILE)")
    run_p.add_argument("--validate", action="store_true", default=settings.VALIDATE_EVERY_OP,
                       help="Run structure validators after every operation")
    run_p.add_argument("--csv", type=Path, default=None, help="Write rows to this CSV file")
    run_p.add_argument("--workers", type=int, default=None, help="Process pool size for trials")

    probe_p = sub.add_parser("probe", help="Emit a conjecture-probe dataset")
    probe_p.add_argument("--id", dest="probe_id", required=True,
                         help="fib-amortized | pairing-degree | nk")
    probe_p.add_argument("--sizes", default="2^8..2^14", help="2^A..2^B or a comma list")
    probe_p.add_argument("--trials", type=int, default=settings.DEFAULT_TRIALS)
    probe_p.add_argument("--seed", type=int, default=settings.DEFAULT_SEED)
    probe_p.add_argument("--out", type=Path, default=Path(settings.OUTPUT_DIR))

    diff_p = sub.add_parser("diff", help="Replay a trace file against the oracle")
    diff_p.add_argument("--trace", type=Path, required=True)
    diff_p.add_argument("--subject", default=HeapKind.FIB.value, choices=[k.value for k in HeapKind])
    diff_p.add_argument("--no-validate", dest="validate", action="store_false",
                        help="Compare outputs only")
    diff_p.add_argument("--no-shrink", dest="shrink", action="store_false")
    diff_p.add_argument("--shrunk-out", type=Path, default=None, help="Write the shrunk failing trace here")
    return parser


def cmd_run(args: argparse.Namespace) -> int:
    from adaptive_heaps.experiments.runner import run, write_rows_csv
    from adaptive_heaps.experiments.workloads import WorkloadSpec

    options = {"n": args.n, "seed": args.seed, "heap": args.heap}
    if args.mode is not None:
        options["mode"] = args.mode
    spec = WorkloadSpec.from_gen(args.gen, **options)
    rows = run(spec, args.trials, validate=args.validate, max_workers=args.workers)
    if args.csv is not None:
        write_rows_csv(rows, args.csv)
    else:
        for row in rows:
            print(row.model_dump_json())
    return EXIT_OK


def cmd_probe(args: argparse.Namespace) -> int:
    from adaptive_heaps.experiments.probes import parse_sizes, probe

    summary = probe(args.probe_id, parse_sizes(args.sizes), trials=args.trials, out_dir=args.out, seed=args.seed)
    for stat in summary.stats:
        print(
            f"{stat.heap.value:8} {stat.generator:12} {stat.mode:8} n={stat.n:<7} "
            f"cost/(n k)={stat.cost_per_nk:.3f} cost/(n lg n)={stat.cost_per_nlgn:.3f} "
            f"max_degree={stat.max_degree}"
        )
    return EXIT_OK


def cmd_diff(args: argparse.Namespace) -> int:
    from adaptive_heaps.oracle.trace import dump_trace, load_trace, parse_trace
    from adaptive_heaps.validation.differential import differential_run

    if not args.trace.is_file():
        raise WorkloadError(f"Trace file {args.trace} does not exist")
    trace = load_trace(args.trace)
    options = {"cycle_log": True} if args.subject == HeapKind.PAIRING.value else {}
    report = differential_run(trace, args.subject, validate=args.validate, shrink=args.shrink, **options)
    print(report.summary())
    if report.passed:
        return EXIT_OK
    if report.shrunk_trace is not None:
        print(report.shrunk_trace, end="")
        if args.shrunk_out is not None:
            dump_trace(parse_trace(report.shrunk_trace), args.shrunk_out)
    return EXIT_FAILURE


COMMANDS = {"run": cmd_run, "probe": cmd_probe, "diff": cmd_diff}


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    configure_logging(args.log_level)
    try:
        return COMMANDS[args.command](args)
    except (WorkloadError, TraceError) as e:
        print(f"heaps {args.command}: error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except ValidationFailure as e:
        logger.error(f"Validation failed: {e}")
        return EXIT_FAILURE
    except StructuralError as e:
        logger.error(f"Heap structure error: {e}")
        return EXIT_FAILURE
    except OSError as e:
        logger.error(f"I/O error: {e}")
        print(f"heaps {args.command}: error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
