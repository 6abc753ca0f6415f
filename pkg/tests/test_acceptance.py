"""Exit criteria for the package, one test per criterion.

Each check prints a ``PASS``/``FAIL`` line. Run ``pytest tests/test_acceptance.py -s``
to see them inline, or ``python tests/test_acceptance.py`` for the summary alone.
"""

import csv
import itertools
import math
import sys
import tempfile
import time
from pathlib import Path

import numpy as np

from sta_opt.benchmarks import BENCHMARKS, lookup
from sta_opt.core import SearchParams, make_rng
from sta_opt.discrete import (
    GeneralElementaryTransformation,
    apply_transformation,
    nearest_neighbor_tour,
    solve_discrete,
    tour_length,
)
from sta_opt.harness import ExperimentSpec, emit_results, generate_instance, run_experiment
from sta_opt.operators import expand, rotate, translate
from sta_opt.solver import alpha_schedule, solve


def report(name, ok, detail):
    print(f"{'PASS' if ok else 'FAIL'} {name}: {detail}", flush=True)
    return ok


def _bench_trials(name, trials=10, dim=10, iterations=1000):
    start = time.perf_counter()
    res = run_experiment(ExperimentSpec(name, dim, max_iterations=iterations, trials=trials, base_seed=0))
    return [r.best_value for r in res.records], res.stats, time.perf_counter() - start


def check_sphere():
    values, stats, secs = _bench_trials("sphere")
    ok = max(values) <= 1e-8 and secs < 60
    return report("sphere d10 all trials <= 1e-8", ok,
                  f"max={max(values):.3g} mean={stats.mean:.3g} std={stats.std:.3g} ({secs:.1f}s)")


def check_rosenbrock():
    values, stats, secs = _bench_trials("rosenbrock")
    return report("rosenbrock d10 best <= 1.0", stats.best <= 1.0,
                  f"best={stats.best:.4g} mean={stats.mean:.4g} std={stats.std:.4g} ({secs:.1f}s)")


def check_rastrigin():
    values, stats, secs = _bench_trials("rastrigin")
    hits = sum(v <= 1e-6 for v in values)
    return report("rastrigin d10 some trial <= 1e-6", hits >= 1,
                  f"{hits}/10 at optimum, best={stats.best:.3g} mean={stats.mean:.4g} ({secs:.1f}s)")


def check_griewank():
    values, stats, secs = _bench_trials("griewank")
    hits = sum(v <= 1e-6 for v in values)
    ok = hits >= 1 and stats.mean <= 0.5
    return report("griewank d10 some trial <= 1e-6 and mean <= 0.5", ok,
                  f"{hits}/10 at optimum, mean={stats.mean:.4g} std={stats.std:.4g} ({secs:.1f}s)")


WORKED_EXAMPLES = [
    ([[1, 0, 0, 0, 0], [0, 1, 0, 0, 0], [0, 0, 0, 0, 1], [0, 0, 0, 1, 0], [0, 0, 1, 0, 0]], [1, 2, 5, 4, 3]),
    ([[0, 0, 0, 1, 0], [0, 1, 0, 0, 0], [0, 0, 1, 0, 0], [0, 0, 0, 0, 1], [1, 0, 0, 0, 0]], [4, 2, 3, 5, 1]),
    ([[0, 0, 0, 1, 0], [0, 1, 0, 0, 0], [1, 0, 0, 0, 0], [0, 0, 0, 0, 1], [0, 0, 1, 0, 0]], [4, 2, 1, 5, 3]),
]


def check_permutation_examples():
    got = [
        apply_transformation(GeneralElementaryTransformation.from_matrix(m), np.array([1, 2, 3, 4, 5])).tolist()
        for m, _ in WORKED_EXAMPLES
    ]
    ok = got == [e for _, e in WORKED_EXAMPLES]
    return report("permutation worked examples", ok, f"{got}")


def check_rotation_ball(samples=100_000):
    rng = make_rng(2024)
    max_ratio = 0.0
    for k in range(samples):
        n = 1 + k % 30
        x = rng.normal(size=n) * 10.0 ** rng.uniform(-6, 3)
        alpha = 10.0 ** rng.uniform(-4, 1)
        ratio = np.linalg.norm(rotate(x, alpha, rng) - x) / alpha
        max_ratio = max(max_ratio, ratio)
    ok = max_ratio <= 1.0 + 1e-12 and max_ratio > 0.5
    return report("rotation step within alpha-ball", ok, f"{samples} samples, max |step|/alpha={max_ratio:.4f}")


def check_translation_and_expansion(samples=10_000):
    rng = make_rng(77)
    collinear_bad = 0
    for k in range(samples):
        n = 1 + k % 30
        x = rng.uniform(-50, 50, n)
        prev = x + rng.normal(size=n) * 10.0 ** rng.uniform(-3, 2)
        if not np.any(x != prev):
            continue
        beta = rng.uniform(0, 3)
        d = translate(x, prev, beta, rng) - x
        u = (x - prev) / np.linalg.norm(x - prev)
        proj = float(d @ u)
        tol = 1e-12 * (1 + np.abs(x).max())
        if np.abs(d - proj * u).max() > tol or not (-tol <= proj <= beta + tol):
            collinear_bad += 1
    fixpoint_bad = 0
    for k in range(samples):
        n = 1 + k % 30
        x = rng.uniform(-600, 600, n)
        zero = rng.random(n) < 0.5
        x[zero] = 0.0
        out = expand(x, rng.uniform(0, 10), rng)
        fixpoint_bad += int(np.any(out[zero] != 0.0))
    ok = collinear_bad == 0 and fixpoint_bad == 0
    return report("translation collinear, expansion fixes zeros", ok,
                  f"{samples}+{samples} samples, violations {collinear_bad}/{fixpoint_bad}")


def check_monotone_accounting(seeds=20, iterations=100, dim=10):
    problems = []
    for name in sorted(BENCHMARKS):
        spec = lookup(name, dim)
        for seed in range(seeds):
            p = SearchParams(max_iterations=iterations, seed=seed)
            res = solve(spec.evaluator, spec.bounds, p)
            values = [v for _, v in res.history]
            if any(b > a for a, b in zip(values, values[1:])) or len(values) != iterations + 1:
                problems.append(f"{name}/{seed} history")
            phases = 1 + iterations * (1 + len(alpha_schedule(p))) + res.translation_phases - res.skipped_phases
            if res.evaluations != p.se * phases:
                problems.append(f"{name}/{seed} evaluations")
    return report("greedy monotonicity and evaluation accounting", not problems,
                  f"{4 * seeds} runs, problems: {problems or 'none'}")


def _brute_force(inst):
    D = inst.distances
    n = inst.n
    best = math.inf
    for rest in itertools.permutations(range(1, n)):
        if rest[0] > rest[-1]:
            continue
        order = (0,) + rest
        best = min(best, sum(D[order[k], order[(k + 1) % n]] for k in range(n)))
    return best


def check_tsp_oracle(runs=20):
    start = time.perf_counter()
    optimal, worse_than_nn = 0, 0
    for k in range(runs):
        inst = generate_instance(8, 1000 + k)
        res = solve_discrete(inst, SearchParams(se=32, max_iterations=500, seed=k))
        opt = _brute_force(inst)
        nn = min(tour_length(inst, nearest_neighbor_tour(inst, s)) for s in range(inst.n))
        optimal += res.best_length <= opt * (1 + 1e-9)
        worse_than_nn += res.best_length > nn * (1 + 1e-9)
    secs = time.perf_counter() - start
    ok = optimal >= 0.8 * runs and worse_than_nn == 0 and secs < 30
    return report("TSP 8-city brute-force agreement", ok,
                  f"optimal {optimal}/{runs}, worse than nearest-neighbour {worse_than_nn} ({secs:.1f}s)")


def _csv_without_time(path):
    with open(path, newline="") as fh:
        return [row[:-1] for row in csv.reader(fh)]


def check_determinism():
    spec = ExperimentSpec("rastrigin", 10, max_iterations=100, trials=3, base_seed=42)
    with tempfile.TemporaryDirectory() as tmp:
        a = emit_results(run_experiment(spec), "csv", Path(tmp) / "a.csv")
        b = emit_results(run_experiment(spec), "csv", Path(tmp) / "b.csv")
        ok = _csv_without_time(a) == _csv_without_time(b)
    return report("byte-identical CSV on rerun", ok, "ms column excluded")


def test_sphere():
    assert check_sphere()


def test_rosenbrock():
    assert check_rosenbrock()


def test_rastrigin():
    assert check_rastrigin()


def test_griewank():
    assert check_griewank()


def test_permutation_examples():
    assert check_permutation_examples()


def test_rotation_ball():
    assert check_rotation_ball()


def test_translation_and_expansion():
    assert check_translation_and_expansion()


def test_monotone_accounting():
    assert check_monotone_accounting()


def test_tsp_oracle():
    assert check_tsp_oracle()


def test_determinism():
    assert check_determinism()


CHECKS = [
    check_sphere,
    check_rosenbrock,
    check_rastrigin,
    check_griewank,
    check_permutation_examples,
    check_rotation_ball,
    check_translation_and_expansion,
    check_monotone_accounting,
    check_tsp_oracle,
    check_determinism,
]

if __name__ == "__main__":
    results = [check() for check in CHECKS]
    print(f"{sum(results)}/{len(results)} criteria passed")
    sys.exit(0 if all(results) else 1)
