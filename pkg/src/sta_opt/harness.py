"""Seeded multi-trial experiments, summary statistics and result files."""

from __future__ import annotations

import csv
import json
import math
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field, replace
from pathlib import Path

import numpy as np

from .benchmarks import lookup
from .core import SearchParams
from .discrete import TspInstance, display_tour, solve_discrete
from .solver import solve

# dimension -> iteration budget of the standard benchmark protocol
DEFAULT_ITERATIONS = {10: 1000, 20: 1500, 30: 2000}
DEFAULT_TRIALS = 50

CSV_HEADER = ["function", "dim", "trial", "seed", "best_value", "evaluations", "ms"]


class InstanceParseError(ValueError):
    def __init__(self, message, line=None, path=None):
        where = ""
        if path is not None:
            where += f"{path}:"
        if line is not None:
            where += f"{line}:"
        super().__init__(f"{where} {message}" if where else message)
        self.line = line


@dataclass(frozen=True)
class ExperimentSpec:
    function: str
    dim: int
    max_iterations: int | None = None
    trials: int = DEFAULT_TRIALS
    base_seed: int = 0
    params: SearchParams = field(default_factory=SearchParams)

    def __post_init__(self):
        if self.trials < 1:
            raise ValueError("trials must be >= 1")
        if self.base_seed < 0:
            raise ValueError("base_seed must be non-negative")
        if self.max_iterations is None:
            object.__setattr__(
                self, "max_iterations", DEFAULT_ITERATIONS.get(self.dim, self.params.max_iterations)
            )

    def trial_params(self, t):
        return replace(self.params, max_iterations=self.max_iterations, seed=self.base_seed + t)


@dataclass(frozen=True)
class TrialStats:
    best: float
    mean: float
    std: float


@dataclass
class TrialRecord:
    trial: int
    seed: int
    best_value: float
    evaluations: int
    ms: float
    history: list = field(default_factory=list, repr=False)
    tour: list | None = None


@dataclass
class ExperimentResult:
    function: str
    dim: int
    spec: dict
    records: list
    stats: TrialStats


def compute_stats(values):
    """Minimum, mean and sample standard deviation (``n - 1``; 0 for one value)."""
    v = np.asarray(values, dtype=np.float64)
    if v.size == 0:
        raise ValueError("compute_stats needs at least one value")
    std = float(np.std(v, ddof=1)) if v.size > 1 else 0.0
    return TrialStats(best=float(np.min(v)), mean=float(np.mean(v)), std=std)


def _run_bench_trial(args):
    spec, t = args
    bench = lookup(spec.function, spec.dim)
    params = spec.trial_params(t)
    start = time.perf_counter()
    res = solve(bench.evaluator, bench.bounds, params)
    ms = (time.perf_counter() - start) * 1000.0
    return TrialRecord(t, params.seed, res.best_value, res.evaluations, ms, res.history)


def _run_tsp_trial(args):
    inst, params, t = args
    params = replace(params, seed=params.seed + t)
    start = time.perf_counter()
    res = solve_discrete(inst, params)
    ms = (time.perf_counter() - start) * 1000.0
    return TrialRecord(
        t, params.seed, res.best_length, res.evaluations, ms, res.history, display_tour(res.best_tour)
    )


def _map_trials(fn, jobs, jobs_args):
    # results come back in trial order regardless of scheduling
    if jobs <= 1:
        return [fn(a) for a in jobs_args]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, jobs_args))


def run_experiment(spec, jobs=1):
    """Run ``spec.trials`` independent solves with seeds ``base_seed + t``."""
    lookup(spec.function, spec.dim)
    records = _map_trials(_run_bench_trial, jobs, [(spec, t) for t in range(spec.trials)])
    echo = {
        "function": spec.function,
        "dim": spec.dim,
        "max_iterations": spec.max_iterations,
        "trials": spec.trials,
        "base_seed": spec.base_seed,
        "params": asdict(replace(spec.params, max_iterations=spec.max_iterations, seed=spec.base_seed)),
    }
    stats = compute_stats([r.best_value for r in records])
    return ExperimentResult(spec.function, spec.dim, echo, records, stats)


def run_tsp(inst, params, trials=1, jobs=1, name="tsp"):
    """Independent discrete solves of ``inst`` with seeds ``params.seed + t``."""
    if trials < 1:
        raise ValueError("trials must be >= 1")
    records = _map_trials(_run_tsp_trial, jobs, [(inst, params, t) for t in range(trials)])
    echo = {"function": name, "cities": inst.n, "trials": trials, "params": asdict(params)}
    stats = compute_stats([r.best_value for r in records])
    return ExperimentResult(name, inst.n, echo, records, stats)


# ---------------------------------------------------------------- instances


def _parse_tsplib(lines, path):
    header = {}
    coords = {}
    in_coords = False
    for lineno, raw in enumerate(lines, 1):
        line = raw.strip()
        if not line:
            continue
        if line == "EOF":
            break
        if not in_coords:
            if line.startswith("NODE_COORD_SECTION"):
                in_coords = True
            elif ":" in line:
                key, value = line.split(":", 1)
                header[key.strip().upper()] = value.strip()
            elif line.endswith("_SECTION"):
                raise InstanceParseError(f"unsupported section {line}", lineno, path)
            continue
        if line.endswith("_SECTION"):
            break
        _add_city(coords, line, lineno, path)
    kind = header.get("EDGE_WEIGHT_TYPE", "EUC_2D").upper()
    if kind != "EUC_2D":
        raise InstanceParseError(f"unsupported EDGE_WEIGHT_TYPE {kind}", None, path)
    if not in_coords:
        raise InstanceParseError("missing NODE_COORD_SECTION", None, path)
    if "DIMENSION" in header:
        try:
            n = int(header["DIMENSION"])
        except ValueError:
            raise InstanceParseError(f"bad DIMENSION {header['DIMENSION']!r}", None, path) from None
        if n != len(coords):
            raise InstanceParseError(f"DIMENSION is {n} but {len(coords)} nodes were read", None, path)
    return coords


def _add_city(coords, line, lineno, path):
    parts = line.split()
    if len(parts) != 3:
        raise InstanceParseError(f"expected 'id x y', got {line!r}", lineno, path)
    try:
        cid = int(parts[0])
        x, y = float(parts[1]), float(parts[2])
    except ValueError:
        raise InstanceParseError(f"expected 'id x y', got {line!r}", lineno, path) from None
    if not (math.isfinite(x) and math.isfinite(y)):
        raise InstanceParseError("coordinates must be finite", lineno, path)
    if cid in coords:
        raise InstanceParseError(f"duplicate city id {cid}", lineno, path)
    coords[cid] = (x, y)


def _parse_plain(lines, path):
    body = [(k, ln.strip()) for k, ln in enumerate(lines, 1) if ln.strip() and not ln.lstrip().startswith("#")]
    if not body:
        raise InstanceParseError("empty instance file", None, path)
    lineno, first = body[0]
    try:
        n = int(first)
    except ValueError:
        raise InstanceParseError(f"expected city count, got {first!r}", lineno, path) from None
    if n < 2:
        raise InstanceParseError("need at least 2 cities", lineno, path)
    coords = {}
    for lineno, line in body[1:]:
        _add_city(coords, line, lineno, path)
    if len(coords) != n:
        raise InstanceParseError(f"header says {n} cities but {len(coords)} were listed", None, path)
    return coords


def parse_instance(path):
    """Read a TSP instance.

    Two layouts are accepted: a plain file whose first line is the city
    count followed by ``id x y`` lines (1-based ids), or a TSPLIB file with
    an EUC_2D ``NODE_COORD_SECTION``. Distances are always exact Euclidean.
    """
    path = Path(path)
    lines = path.read_text().splitlines()
    is_tsplib = any(ln.strip().startswith("NODE_COORD_SECTION") for ln in lines)
    coords = _parse_tsplib(lines, path) if is_tsplib else _parse_plain(lines, path)
    ids = sorted(coords)
    if ids != list(range(1, len(ids) + 1)):
        raise InstanceParseError("city ids must be exactly 1..n", None, path)
    return TspInstance(np.array([coords[i] for i in ids]))


def generate_instance(n, seed, size=100.0):
    """``n`` cities uniform in ``[0, size]^2``."""
    rng = np.random.default_rng(seed)
    return TspInstance(rng.uniform(0.0, size, size=(n, 2)))


def write_instance(inst, path):
    lines = [str(inst.n)]
    lines += [f"{i} {x!r} {y!r}" for i, (x, y) in enumerate(inst.cities.tolist(), 1)]
    Path(path).write_text("\n".join(lines) + "\n")


# ---------------------------------------------------------------- output


def csv_rows(result):
    for r in result.records:
        yield [
            result.function,
            result.dim,
            r.trial,
            r.seed,
            repr(float(r.best_value)),
            r.evaluations,
            f"{r.ms:.3f}",
        ]


def _json_payload(result):
    trials = []
    for r in result.records:
        entry = {
            "trial": r.trial,
            "seed": r.seed,
            "best_value": r.best_value,
            "evaluations": r.evaluations,
            "ms": r.ms,
        }
        if r.tour is not None:
            entry["tour"] = r.tour
        trials.append(entry)
    return {"spec": result.spec, "trials": trials, "stats": asdict(result.stats)}


def emit_results(result, fmt, path):
    """Write per-trial records as ``csv`` or ``json``."""
    path = Path(path)
    if fmt == "csv":
        with path.open("w", newline="") as fh:
            writer = csv.writer(fh, lineterminator="\n")
            writer.writerow(CSV_HEADER)
            writer.writerows(csv_rows(result))
    elif fmt == "json":
        path.write_text(json.dumps(_json_payload(result), indent=2) + "\n")
    else:
        raise ValueError(f"unknown output format {fmt!r}; use csv or json")
    return path


def write_traces(result, directory):
    """One headerless ``iteration,best_value`` CSV per trial (one line per history entry)."""
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    paths = []
    for r in result.records:
        p = directory / f"{result.function}_d{result.dim}_trial{r.trial:03d}.csv"
        with p.open("w", newline="") as fh:
            writer = csv.writer(fh, lineterminator="\n")
            writer.writerows((k, repr(float(v))) for k, v in r.history)
        paths.append(p)
    return paths
