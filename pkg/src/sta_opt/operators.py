"""Continuous state transformations: rotation, translation and expansion.

Each operator maps the incumbent ``x`` to a new candidate:

* rotation     ``x + alpha / (n * |x|) * R @ x``, ``R`` uniform on [-1, 1]^(n x n).
  The step never exceeds ``alpha`` in Euclidean norm (local search).
* translation  ``x + beta * r * (x - x_prev) / |x - x_prev|``, ``r`` uniform on [0, 1].
  A random step along the last successful move (line search).
* expansion    ``x + gamma * D @ x``, ``D`` diagonal standard normal (global search).
"""

from __future__ import annotations

import enum

import numpy as np

from . import kernels
from .core import (
    DegenerateDirectionError,
    DegenerateStateError,
    best_row,
    evaluate_batch,
)


class TransformKind(enum.Enum):
    ROTATION = "rotation"
    TRANSLATION = "translation"
    EXPANSION = "expansion"


def _vector(x):
    return np.asarray(x, dtype=np.float64)


def _unit(v):
    # divide by max |v| first so tiny vectors do not underflow in the norm
    m = np.max(np.abs(v))
    if m == 0.0:
        return None
    v = v / m
    return v / np.sqrt(np.dot(v, v))


def rotate(x, alpha, rng):
    x = _vector(x)
    if alpha < 0:
        raise ValueError("alpha must be non-negative")
    unit = _unit(x)
    if unit is None:
        raise DegenerateStateError("rotation is undefined at the origin")
    R = rng.uniform(-1.0, 1.0, size=(x.size, x.size))
    return x + (alpha / x.size) * (R @ unit)


def _unit_direction(x, x_prev):
    unit = _unit(x - _vector(x_prev))
    if unit is None:
        raise DegenerateDirectionError("translation needs x != x_prev")
    return unit


def translate(x, x_prev, beta, rng):
    x = _vector(x)
    if beta < 0:
        raise ValueError("beta must be non-negative")
    unit = _unit_direction(x, x_prev)
    return x + (beta * rng.uniform(0.0, 1.0)) * unit


def expand(x, gamma, rng):
    x = _vector(x)
    if gamma < 0:
        raise ValueError("gamma must be non-negative")
    g = rng.standard_normal(x.size)
    return x + gamma * (g * x)


def sample_candidates(kind, incumbent, prev, factor, se, objective, b, rng):
    """Best of ``se`` clamped candidates produced by one operator.

    Parameters
    ----------
    kind : TransformKind
    incumbent : EvaluatedState
        State the operator is applied to. It is not part of the candidate set.
    prev : array_like or None
        Point the incumbent last moved from; required for translation.
    factor : float
        ``alpha``, ``beta`` or ``gamma`` depending on ``kind``.
    se : int
        Search enforcement, the number of candidates drawn.
    objective : callable
    b : Bounds
    rng : numpy.random.Generator

    Returns
    -------
    EvaluatedState or None
        ``None`` when the operator is degenerate at ``incumbent`` (rotation at
        the origin, translation with no direction). No draws or evaluations
        are spent in that case.
    """
    if int(se) != se or se < 1:
        raise ValueError("search enforcement se must be a positive integer")
    if factor < 0:
        raise ValueError("operator factor must be non-negative")
    se = int(se)
    x = incumbent.point
    n = x.size
    if kind is TransformKind.ROTATION:
        if not np.any(x):
            return None
        R = rng.uniform(-1.0, 1.0, size=(se, n, n))
        X = kernels.rotation_candidates(x, factor, R, b.lower, b.upper)
    elif kind is TransformKind.TRANSLATION:
        if prev is None:
            raise ValueError("translation needs the previous incumbent")
        try:
            unit = _unit_direction(x, prev)
        except DegenerateDirectionError:
            return None
        r = rng.uniform(0.0, 1.0, size=se)
        X = kernels.translation_candidates(x, unit, factor, r, b.lower, b.upper)
    elif kind is TransformKind.EXPANSION:
        G = rng.standard_normal((se, n))
        X = kernels.expansion_candidates(x, factor, G, b.lower, b.upper)
    else:
        raise ValueError(f"unknown transform kind {kind!r}")
    return best_row(X, evaluate_batch(objective, X))
