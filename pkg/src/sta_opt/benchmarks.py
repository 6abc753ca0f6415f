"""Sphere, Rosenbrock, Rastrigin and Griewank with their conventional boxes."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import kernels
from .core import Bounds


def _point(x):
    x = np.asarray(x, dtype=np.float64)
    if x.ndim != 1 or x.size == 0:
        raise ValueError("expected a non-empty 1-D point")
    return x


def sphere(x):
    x = _point(x)
    return float(np.dot(x, x))


def rosenbrock(x):
    # sum runs over i = 1..n-1 so that x[i+1] exists
    x = _point(x)
    if x.size < 2:
        raise ValueError("rosenbrock needs dimension >= 2")
    head, tail = x[:-1], x[1:]
    return float(np.sum(100.0 * (tail - head**2) ** 2 + (head - 1.0) ** 2))


def rastrigin(x):
    x = _point(x)
    return float(np.sum(x**2 - 10.0 * np.cos(2.0 * np.pi * x) + 10.0))


def griewank(x):
    x = _point(x)
    i = np.arange(1, x.size + 1, dtype=np.float64)
    return float(np.sum(x**2) / 4000.0 - np.prod(np.cos(x / np.sqrt(i))) + 1.0)


class Benchmark:
    """Picklable objective with a kernel-backed ``batch`` method."""

    def __init__(self, name, func, code, min_dim=1):
        self.name = name
        self.func = func
        self.code = code
        self.min_dim = min_dim

    def __call__(self, x):
        return self.func(x)

    def batch(self, X):
        X = np.asarray(X, dtype=np.float64)
        if X.shape[1] < self.min_dim:
            raise ValueError(f"{self.name} needs dimension >= {self.min_dim}")
        return kernels.evaluate(self.code, X)

    def __repr__(self):
        return f"Benchmark({self.name!r})"


@dataclass(frozen=True)
class BenchmarkSpec:
    name: str
    dimension: int
    bounds: Bounds
    evaluator: Benchmark
    optimum: np.ndarray


# name -> (objective, scalar range, optimum coordinate)
BENCHMARKS = {
    "sphere": (Benchmark("sphere", sphere, kernels.SPHERE), (-100.0, 100.0), 0.0),
    "rosenbrock": (
        Benchmark("rosenbrock", rosenbrock, kernels.ROSENBROCK, min_dim=2),
        (-30.0, 30.0),
        1.0,
    ),
    "rastrigin": (Benchmark("rastrigin", rastrigin, kernels.RASTRIGIN), (-5.12, 5.12), 0.0),
    "griewank": (Benchmark("griewank", griewank, kernels.GRIEWANK), (-600.0, 600.0), 0.0),
}


def lookup(name, dimension):
    """Benchmark ``name`` in ``dimension`` variables with its box bounds."""
    try:
        func, (low, high), opt = BENCHMARKS[name]
    except KeyError:
        raise KeyError(
            f"unknown benchmark {name!r}; valid names: {', '.join(sorted(BENCHMARKS))}"
        ) from None
    if int(dimension) != dimension or dimension < func.min_dim:
        raise ValueError(f"{name} needs an integer dimension >= {func.min_dim}")
    dimension = int(dimension)
    return BenchmarkSpec(
        name=name,
        dimension=dimension,
        bounds=Bounds.uniform(low, high, dimension),
        evaluator=func,
        optimum=np.full(dimension, opt),
    )
