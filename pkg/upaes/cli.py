"""
Command-line entry point: ``upaes run|sweep|fit|verify|oracle``.

Results are printed as JSON on stdout, logs go to stderr. Exit codes: 0 on
success, 1 when a check fails, 2 for usage and configuration errors.
"""
import argparse
import json
import logging
import sys
from dataclasses import replace
from statistics import mean, pstdev
from typing import Dict, List, Optional

from . import module_version
from .archivers import ArchiverKind
from .benchmarks import Benchmark
from .config import format_sweep, load_sweep
from .errors import InvariantViolation, PaesLabError
from .harness import fit_scaling, sweep
from .monitoring import SweepMonitor
from .mutation import MutationKind
from .oracle import GridWalkConfig, WalkMode, cover_time
from .paes import run
from .records import RunConfig, StopRule
from .results import ResultStore
from .rng import RandomStream, derive_seed
from .verify import SUITES, verify

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2


def _int_tuple(text: str):
    try:
        return tuple(int(item) for item in text.split(",") if item.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="upaes", description="PAES-25 laboratory: runs, sweeps, fits and checks.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {module_version}")
    parser.add_argument("-v", "--verbose", action="store_true", help="log at DEBUG level")
    commands = parser.add_subparsers(dest="command", required=True)

    run_parser = commands.add_parser("run", help="a single PAES-25 run")
    run_parser.add_argument("--benchmark", required=True, help="mlotz | lotz | omm | cocz")
    run_parser.add_argument("--m", type=int, default=2, help="objectives (m-LOTZ only)")
    run_parser.add_argument("--n", type=int, required=True, help="problem size")
    run_parser.add_argument("--mutation", default="one-bit", help="one-bit | standard-bit")
    run_parser.add_argument("--archiver", default="aga", help="aga | hva | mga | none")
    run_parser.add_argument("--archive-size", type=int, default=None, help="archive capacity L (default: front size)")
    run_parser.add_argument("--seed", type=int, default=0)
    run_parser.add_argument("--budget", type=int, default=None, help="iteration budget (default depends on the instance)")
    run_parser.add_argument("--stop", default="full-front", help="full-front | coverage | budget")
    run_parser.add_argument("--coverage-threshold", type=float, default=1.0)
    run_parser.add_argument("--grid-range", type=int, default=None, help="AGA interval end")
    run_parser.add_argument("--bisections", type=int, default=None, help="AGA bisections per axis")
    run_parser.add_argument("--reference-point", type=_int_tuple, default=None, help="HVA reference, e.g. -1,-1")
    run_parser.add_argument("--trace", default=None, help="JSON-lines trace path")
    run_parser.add_argument("--trace-every", default="event", choices=("event", "iteration"))
    run_parser.add_argument("--debug", action="store_true", help="check invariants after every step")
    run_parser.add_argument("--show-archive", action="store_true", help="include the final archive fitness")

    sweep_parser = commands.add_parser("sweep", help="runs over problem sizes and replicates")
    sweep_parser.add_argument("--config", required=True, help="sweep file (key = value lines)")
    sweep_parser.add_argument("--output", default=None, help="CSV path, overrides the file")
    sweep_parser.add_argument("--workers", type=int, default=None, help="overrides the file")

    fit_parser = commands.add_parser("fit", help="log-log fit of a run table")
    fit_parser.add_argument("--input", required=True, help="run table CSV")
    fit_parser.add_argument("--model", required=True, help="n2 | n3 | n4 | n3log2 | grid(m)")
    fit_parser.add_argument("--column", default="iterations_to_full_front")
    fit_parser.add_argument("--min-slope", type=float, default=None, help="fail below this slope")
    fit_parser.add_argument("--max-slope", type=float, default=None, help="fail above this slope")
    fit_parser.add_argument("--max-ratio-spread", type=float, default=None,
                            help="fail unless max/min of mean T(n)/g(n) stays below this")
    fit_parser.add_argument("--max-censored", type=int, default=None,
                            help="fail with more runs lacking a value for the column")

    verify_parser = commands.add_parser("verify", help="property checks against reference computations")
    verify_parser.add_argument("--suite", help=" | ".join(SUITES))
    verify_parser.add_argument("--list", action="store_true", help="list suites with their default parameters")
    verify_parser.add_argument("params", nargs="*", help="suite parameters as key=value")

    oracle_parser = commands.add_parser("oracle", help="independent reference computations")
    oracle_commands = oracle_parser.add_subparsers(dest="oracle_command", required=True)
    cover_parser = oracle_commands.add_parser("cover", help="grid random-walk cover times")
    cover_parser.add_argument("--dims", type=int, required=True)
    cover_parser.add_argument("--axis-nodes", type=int, required=True)
    cover_parser.add_argument("--mode", default="simple", help="simple | lazy")
    cover_parser.add_argument("--n", type=int, default=None, help="lazy step denominator")
    cover_parser.add_argument("--start", type=_int_tuple, default=None, help="start node, e.g. 0,3")
    cover_parser.add_argument("--reps", type=int, default=100)
    cover_parser.add_argument("--seed", type=int, default=0)
    return parser


def _parse_params(items: List[str]) -> Dict[str, str]:
    params = {}
    for item in items:
        if "=" not in item:
            raise argparse.ArgumentTypeError(f"suite parameters are key=value, got {item!r}")
        key, value = item.split("=", 1)
        params[key.strip()] = value.strip()
    return params


def _emit(payload) -> None:
    json.dump(payload, sys.stdout, indent=2, default=str)
    sys.stdout.write("\n")


def command_run(args) -> int:
    benchmark = Benchmark.from_name(args.benchmark, args.n, args.m)
    config = RunConfig(
        benchmark=benchmark,
        archive_size=args.archive_size if args.archive_size is not None else benchmark.front_size,
        mutation=MutationKind.from_name(args.mutation),
        archiver=ArchiverKind.from_name(args.archiver),
        seed=args.seed,
        budget=args.budget,
        stop=StopRule.from_name(args.stop),
        coverage_threshold=args.coverage_threshold,
        aga_grid_range=args.grid_range,
        aga_bisections=args.bisections,
        reference_point=args.reference_point,
        trace_path=args.trace,
        trace_every=args.trace_every,
        debug=args.debug,
    )
    record = run(config)
    payload = record.to_row()
    if args.show_archive:
        payload["archive"] = [list(v) for v in record.archive_fitness]
    _emit(payload)
    return EXIT_OK


def command_sweep(args) -> int:
    spec = load_sweep(args.config)
    if args.output is not None:
        spec = replace(spec, output=args.output)
    if args.workers is not None:
        spec = replace(spec, workers=args.workers)
    monitor = SweepMonitor(total_runs=spec.replicates * len(spec.n_values))
    records = sweep(spec, monitor)
    with ResultStore.from_records(records) as store:
        summary = json.loads(store.summary().to_json(orient="records"))
    _emit({"runs": len(records), "output": spec.output, "config": format_sweep(spec),
           "health": monitor.health_check(), "summary": summary,
           "per_n": {str(n): monitor.get_run_statistics(n) for n in spec.n_values}})
    return EXIT_OK


def command_fit(args) -> int:
    fit = fit_scaling(args.input, args.model, args.column)
    failures = fit.bound_failures(args.min_slope, args.max_slope, args.max_ratio_spread, args.max_censored)
    for failure in failures:
        logger.warning(f"Fit of {args.input}: {failure}")
    _emit({"model": args.model, "column": args.column, "passed": not failures, "failures": failures,
           **fit.to_dict()})
    return EXIT_CHECK_FAILED if failures else EXIT_OK


def command_verify(args) -> int:
    if args.list:
        _emit({name: {"description": suite.description, "defaults": suite.defaults} for name, suite in SUITES.items()})
        return EXIT_OK
    if not args.suite:
        logger.error(f"--suite is required; one of {', '.join(SUITES)}")
        return EXIT_USAGE
    report = verify(args.suite, _parse_params(args.params))
    _emit(report.to_dict())
    return EXIT_OK if report.passed else EXIT_CHECK_FAILED


def command_oracle(args) -> int:
    if args.reps < 1:
        logger.error(f"--reps must be at least 1, got {args.reps}")
        return EXIT_USAGE
    mode = WalkMode.from_name(args.mode)
    cfg = GridWalkConfig(args.dims, args.axis_nodes, mode, args.n, args.start)
    times = [cover_time(cfg, RandomStream(derive_seed(args.seed, rep))) for rep in range(args.reps)]
    _emit({"dims": cfg.dims, "axis_nodes": cfg.axis_nodes, "mode": mode.value, "n": cfg.n,
           "start": list(cfg.start), "reps": args.reps, "mean": mean(times), "std": pstdev(times),
           "min": min(times), "max": max(times)})
    return EXIT_OK


COMMANDS = {
    "run": command_run,
    "sweep": command_sweep,
    "fit": command_fit,
    "verify": command_verify,
    "oracle": command_oracle,
}


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.INFO,
                        format='%(levelname)s: %(message)s')
    try:
        return COMMANDS[args.command](args)
    except InvariantViolation as e:
        logger.error(f"Invariant violated: {e}")
        return EXIT_CHECK_FAILED
    except (PaesLabError, argparse.ArgumentTypeError) as e:
        logger.error(str(e))
        return EXIT_USAGE
    except OSError as e:
        logger.error(f"I/O error: {e}")
        return EXIT_USAGE
