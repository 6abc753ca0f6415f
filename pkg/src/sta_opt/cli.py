"""Command-line entry point: ``sta bench | tsp | gen-instance``."""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import kernels
from .benchmarks import BENCHMARKS
from .core import SearchParams
from .harness import (
    DEFAULT_TRIALS,
    ExperimentSpec,
    emit_results,
    generate_instance,
    parse_instance,
    run_experiment,
    run_tsp,
    write_instance,
    write_traces,
)


def _nonneg_int(text):
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {text}")
    return v


def _pos_int(text):
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return v


def _add_search_args(p, iterations_default):
    p.add_argument("--iterations", type=_nonneg_int, default=iterations_default,
                   help="outer iterations per trial")
    p.add_argument("--se", type=_pos_int, default=32, help="search enforcement (candidates per operator)")
    p.add_argument("--seed", type=_nonneg_int, default=0, help="seed of trial 0; trial t uses seed + t")
    p.add_argument("--jobs", type=_pos_int, default=1, help="worker processes for trials")
    p.add_argument("--format", choices=("csv", "json"), help="output format (default: from --out suffix)")
    p.add_argument("--out", type=Path, help="results file; a summary is printed when omitted")
    p.add_argument("--trace", type=Path, metavar="DIR", help="write iteration,best_value traces per trial")


def build_parser():
    parser = argparse.ArgumentParser(prog="sta", description="State transition algorithm experiments.")
    sub = parser.add_subparsers(dest="command", required=True)

    bench = sub.add_parser("bench", help="continuous benchmark trials")
    bench.add_argument("--function", required=True, choices=sorted(BENCHMARKS))
    bench.add_argument("--dim", type=_pos_int, default=10)
    bench.add_argument("--trials", type=_pos_int, default=DEFAULT_TRIALS)
    bench.add_argument("--alpha-max", type=float, default=1.0)
    bench.add_argument("--alpha-min", type=float, default=1e-4)
    bench.add_argument("--alpha-base", type=float, default=4.0)
    bench.add_argument("--beta", type=float, default=1.0)
    bench.add_argument("--gamma", type=float, default=1.0)
    # default iterations come from DEFAULT_ITERATIONS keyed by --dim
    _add_search_args(bench, None)

    tsp = sub.add_parser("tsp", help="discrete search on a TSP instance")
    tsp.add_argument("--instance", type=Path, required=True)
    tsp.add_argument("--trials", type=_pos_int, default=1)
    _add_search_args(tsp, 2000)

    gen = sub.add_parser("gen-instance", help="random uniform cities in [0, 100]^2")
    gen.add_argument("--n", type=_pos_int, required=True)
    gen.add_argument("--seed", type=_nonneg_int, default=0)
    gen.add_argument("--out", type=Path, required=True)

    parser.add_argument("--version", action="version",
                        version=f"%(prog)s (kernels: {kernels.BACKEND})")
    return parser


def _output_format(args):
    if args.format:
        return args.format
    if args.out is not None and args.out.suffix.lower() == ".json":
        return "json"
    return "csv"


def _finish(result, args):
    if args.out is not None:
        emit_results(result, _output_format(args), args.out)
    if args.trace is not None:
        write_traces(result, args.trace)
    s = result.stats
    print(f"{result.function} dim={result.dim} trials={len(result.records)} "
          f"best={s.best:.6g} mean={s.mean:.6g} std={s.std:.6g}")


def _cmd_bench(args):
    params = SearchParams(
        alpha_max=args.alpha_max,
        alpha_min=args.alpha_min,
        alpha_base=args.alpha_base,
        beta=args.beta,
        gamma=args.gamma,
        se=args.se,
    )
    spec = ExperimentSpec(
        function=args.function,
        dim=args.dim,
        max_iterations=args.iterations,
        trials=args.trials,
        base_seed=args.seed,
        params=params,
    )
    _finish(run_experiment(spec, jobs=args.jobs), args)


def _cmd_tsp(args):
    inst = parse_instance(args.instance)
    params = SearchParams(se=args.se, max_iterations=args.iterations, seed=args.seed)
    _finish(run_tsp(inst, params, trials=args.trials, jobs=args.jobs), args)


def _cmd_gen(args):
    if args.n < 2:
        raise ValueError("an instance needs at least 2 cities")
    write_instance(generate_instance(args.n, args.seed), args.out)


def main(argv=None):
    args = build_parser().parse_args(argv)
    handler = {"bench": _cmd_bench, "tsp": _cmd_tsp, "gen-instance": _cmd_gen}[args.command]
    try:
        handler(args)
    except (OSError, ValueError, KeyError) as exc:
        print(f"sta: error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
