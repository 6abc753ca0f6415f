"""States, bounds, search parameters and the selection rule shared by the solvers."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


class DegenerateStateError(ValueError):
    """An operator was asked to move from a state where it is undefined."""


class DegenerateDirectionError(ValueError):
    """Translation was asked to move along a zero-length direction."""


def make_rng(seed):
    """Deterministic random stream for one run (PCG64 seeded with ``seed``)."""
    return np.random.default_rng(seed)


def _frozen(a, dtype=np.float64):
    arr = np.array(a, dtype=dtype)
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True)
class Bounds:
    """Per-dimension box ``lower[i] <= x[i] <= upper[i]``."""

    lower: np.ndarray
    upper: np.ndarray

    def __post_init__(self):
        lower = _frozen(np.atleast_1d(self.lower))
        upper = _frozen(np.atleast_1d(self.upper))
        if lower.ndim != 1 or lower.shape != upper.shape:
            raise ValueError(
                f"lower and upper must be 1-D of equal length, got {lower.shape} and {upper.shape}"
            )
        if lower.size == 0:
            raise ValueError("bounds need at least one dimension")
        if not (np.all(np.isfinite(lower)) and np.all(np.isfinite(upper))):
            raise ValueError("bounds must be finite")
        if np.any(lower >= upper):
            raise ValueError("every lower bound must be strictly below its upper bound")
        object.__setattr__(self, "lower", lower)
        object.__setattr__(self, "upper", upper)

    @classmethod
    def uniform(cls, low, high, dim):
        """The same scalar range replicated over ``dim`` coordinates."""
        return cls(np.full(dim, float(low)), np.full(dim, float(high)))

    @property
    def dim(self):
        return self.lower.size


@dataclass(frozen=True)
class SearchParams:
    """Operator factors, search enforcement and iteration budget.

    Defaults are the standard settings: rotation factor decays from 1
    to 1e-4 dividing by 4, translation and expansion factors fixed at 1,
    search enforcement 32.
    """

    alpha_max: float = 1.0
    alpha_min: float = 1e-4
    alpha_base: float = 4.0
    beta: float = 1.0
    gamma: float = 1.0
    se: int = 32
    max_iterations: int = 1000
    seed: int = 0

    def __post_init__(self):
        if not 0 < self.alpha_min <= self.alpha_max:
            raise ValueError("need 0 < alpha_min <= alpha_max")
        if not self.alpha_base > 1:
            raise ValueError("alpha_base must exceed 1")
        if self.beta < 0 or self.gamma < 0:
            raise ValueError("beta and gamma must be non-negative")
        if int(self.se) != self.se or self.se < 1:
            raise ValueError("search enforcement se must be a positive integer")
        if int(self.max_iterations) != self.max_iterations or self.max_iterations < 0:
            raise ValueError("max_iterations must be a non-negative integer")
        if int(self.seed) != self.seed or self.seed < 0:
            raise ValueError("seed must be a non-negative integer")


@dataclass(frozen=True)
class EvaluatedState:
    """A point together with its cached objective value."""

    point: np.ndarray
    value: float

    def __post_init__(self):
        object.__setattr__(self, "point", _frozen(self.point))
        object.__setattr__(self, "value", float(self.value))


class CountingObjective:
    """Wraps an objective, counting point evaluations and mapping NaN to +inf.

    If the wrapped objective has a ``batch`` method taking an ``(m, n)`` array
    it is used for whole candidate sets; otherwise points are evaluated one
    at a time.
    """

    def __init__(self, objective):
        self.objective = objective
        self.calls = 0
        self._batch = getattr(objective, "batch", None)

    def __call__(self, x):
        return float(self.batch(np.asarray(x, dtype=np.float64)[None, :])[0])

    def batch(self, X):
        X = np.asarray(X, dtype=np.float64)
        self.calls += X.shape[0]
        if self._batch is not None:
            values = np.asarray(self._batch(X), dtype=np.float64)
        else:
            values = np.array([float(self.objective(row)) for row in X], dtype=np.float64)
        return np.where(np.isnan(values), np.inf, values)


def evaluate_batch(objective, X):
    """Objective values for each row of ``X``; NaN ranks as +inf."""
    if isinstance(objective, CountingObjective):
        return objective.batch(X)
    return CountingObjective(objective).batch(X)


def clamp(p, b):
    """Project ``p`` onto the box ``b`` coordinate-wise."""
    p = np.asarray(p, dtype=np.float64)
    if p.shape != b.lower.shape:
        raise ValueError(f"point has shape {p.shape}, bounds have dimension {b.dim}")
    return np.minimum(np.maximum(p, b.lower), b.upper)


def select_best(candidates):
    """Lowest-valued state; the earliest one wins ties."""
    if not candidates:
        raise RuntimeError("select_best called with no candidates")
    best = candidates[0]
    for cand in candidates[1:]:
        if cand.value < best.value:
            best = cand
    return best


def best_row(X, values):
    """``select_best`` over a candidate matrix and its value vector."""
    if len(values) == 0:
        raise RuntimeError("best_row called with no candidates")
    k = int(np.argmin(values))
    return EvaluatedState(X[k], values[k])


def init_continuous(objective, b, se, rng):
    """Draw ``se`` points uniformly in ``b`` and keep the best."""
    if int(se) != se or se < 1:
        raise ValueError("search enforcement se must be a positive integer")
    X = rng.uniform(b.lower, b.upper, size=(int(se), b.dim))
    return best_row(X, evaluate_batch(objective, X))
