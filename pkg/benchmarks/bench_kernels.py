"""Time the compiled kernels against the numpy fallback.

    python benchmarks/bench_kernels.py [--repeat N]

Prints per-kernel timings at the sizes the solvers actually use (se=32
candidates, dimensions 10 and 30, 16-city tours) and end-to-end solve times
with each backend patched in.
"""

import argparse
import importlib
import timeit

import numpy as np

import sta_opt.kernels as kernels
from sta_opt import _pykernels
from sta_opt.benchmarks import lookup
from sta_opt.core import SearchParams
from sta_opt.discrete import solve_discrete
from sta_opt.harness import generate_instance
from sta_opt.solver import solve

NAMES = ["evaluate", "rotation_candidates", "translation_candidates", "expansion_candidates", "tour_lengths"]


def _backends():
    found = {"python": _pykernels}
    try:
        found["cython"] = importlib.import_module("sta_opt._ckernels")
    except ImportError:
        pass
    return found


def _use(impl):
    for name in NAMES:
        setattr(kernels, name, getattr(impl, name))


def kernel_cases(n):
    rng = np.random.default_rng(0)
    x = rng.normal(size=n)
    lo, hi = np.full(n, -100.0), np.full(n, 100.0)
    R = rng.uniform(-1, 1, size=(32, n, n))
    G = rng.normal(size=(32, n))
    r = rng.uniform(size=32)
    unit = x / np.linalg.norm(x)
    X = rng.uniform(-5, 5, size=(32, n))
    return {
        f"evaluate rastrigin 32x{n}": lambda k: k.evaluate(2, X),
        f"evaluate griewank 32x{n}": lambda k: k.evaluate(3, X),
        f"rotation 32x{n}x{n}": lambda k: k.rotation_candidates(x, 0.5, R, lo, hi),
        f"translation 32x{n}": lambda k: k.translation_candidates(x, unit, 1.0, r, lo, hi),
        f"expansion 32x{n}": lambda k: k.expansion_candidates(x, 1.0, G, lo, hi),
    }


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--repeat", type=int, default=2000)
    args = parser.parse_args()
    backends = _backends()
    names = list(backends)

    cases = {**kernel_cases(10), **kernel_cases(30)}
    inst = generate_instance(16, 0)
    perms = np.array([np.random.default_rng(i).permutation(16) for i in range(96)])
    cases["tour_lengths 96x16"] = lambda k: k.tour_lengths(inst.distances, perms)

    print(f"{'kernel':32s}" + "".join(f"{n:>12s}" for n in names) + "     speedup")
    for label, fn in cases.items():
        times = [min(timeit.repeat(lambda: fn(backends[b]), number=args.repeat, repeat=3)) / args.repeat
                 for b in names]
        speed = f"{times[0] / times[-1]:9.2f}x" if len(times) > 1 else ""
        print(f"{label:32s}" + "".join(f"{t * 1e6:10.2f}us" for t in times) + "  " + speed)

    print()
    runs = {
        "solve rastrigin d10, 200 it": lambda: solve(
            lookup("rastrigin", 10).evaluator, lookup("rastrigin", 10).bounds, SearchParams(max_iterations=200)
        ),
        "solve griewank d30, 100 it": lambda: solve(
            lookup("griewank", 30).evaluator, lookup("griewank", 30).bounds, SearchParams(max_iterations=100)
        ),
        "solve_discrete 16 cities, 500 it": lambda: solve_discrete(inst, SearchParams(max_iterations=500)),
    }
    for label, fn in runs.items():
        times = []
        for b in names:
            _use(backends[b])
            times.append(min(timeit.repeat(fn, number=1, repeat=3)))
        speed = f"{times[0] / times[-1]:9.2f}x" if len(times) > 1 else ""
        print(f"{label:32s}" + "".join(f"{t * 1e3:10.1f}ms" for t in times) + "  " + speed)


if __name__ == "__main__":
    main()
