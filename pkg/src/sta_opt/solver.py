"""Greedy single-incumbent state transition search for box-bounded minimization."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .core import Bounds, CountingObjective, SearchParams, init_continuous, make_rng
from .operators import TransformKind, sample_candidates


@dataclass
class SolveResult:
    """Final incumbent plus the per-iteration trace.

    ``history`` holds ``(iteration, best value so far)`` with iteration 0 the
    initial sample. ``translation_phases`` and ``skipped_phases`` count
    translation phases run and operator phases that were degenerate; together
    with ``se`` they determine ``evaluations`` exactly.
    """

    best_point: np.ndarray
    best_value: float
    history: list = field(default_factory=list)
    evaluations: int = 0
    translation_phases: int = 0
    skipped_phases: int = 0


def alpha_schedule(params):
    """Rotation factors tried within one iteration, largest first."""
    values = []
    alpha = float(params.alpha_max)
    while alpha >= params.alpha_min:
        values.append(alpha)
        alpha /= params.alpha_base
    return values


class _Tally:
    def __init__(self):
        self.translation_phases = 0
        self.skipped_phases = 0


def translation_phase(incumbent, previous, params, objective, b, rng, tally=None):
    """Line search along ``incumbent - previous``; keeps the incumbent unless strictly beaten."""
    if tally is not None:
        tally.translation_phases += 1
    cand = sample_candidates(
        TransformKind.TRANSLATION, incumbent, previous, params.beta, params.se, objective, b, rng
    )
    if cand is None:
        if tally is not None:
            tally.skipped_phases += 1
        return incumbent
    if cand.value < incumbent.value:
        return cand
    return incumbent


def _accept_and_translate(incumbent, previous, cand, params, objective, b, rng, tally):
    if cand is None:
        if tally is not None:
            tally.skipped_phases += 1
        return incumbent, previous
    if not cand.value < incumbent.value:
        return incumbent, previous
    previous, incumbent = incumbent.point, cand
    moved = translation_phase(incumbent, previous, params, objective, b, rng, tally)
    if moved is not incumbent:
        previous, incumbent = incumbent.point, moved
    return incumbent, previous


def iterate(incumbent, previous, params, objective, b, rng, schedule=None, tally=None):
    """One outer iteration: expansion, then rotation at each factor of the schedule.

    Every strict improvement is accepted and immediately followed by one
    translation phase. Returns ``(incumbent, previous)`` where ``previous`` is
    the point the incumbent last moved from (``None`` if it never moved).
    """
    if schedule is None:
        schedule = alpha_schedule(params)
    cand = sample_candidates(
        TransformKind.EXPANSION, incumbent, None, params.gamma, params.se, objective, b, rng
    )
    incumbent, previous = _accept_and_translate(
        incumbent, previous, cand, params, objective, b, rng, tally
    )
    for alpha in schedule:
        cand = sample_candidates(
            TransformKind.ROTATION, incumbent, None, alpha, params.se, objective, b, rng
        )
        incumbent, previous = _accept_and_translate(
            incumbent, previous, cand, params, objective, b, rng, tally
        )
    return incumbent, previous


def solve(objective, b, params=None, callback=None):
    """Minimize ``objective`` over the box ``b``.

    Parameters
    ----------
    objective : callable
        Maps a 1-D float array to a float. An optional ``batch`` attribute
        evaluating an ``(m, n)`` array row-wise is used when present. NaN
        values are treated as +inf.
    b : Bounds
    params : SearchParams, optional
    callback : callable, optional
        Called as ``callback(iteration, incumbent)`` after each iteration.

    Returns
    -------
    SolveResult
    """
    if params is None:
        params = SearchParams()
    if not isinstance(b, Bounds):
        raise TypeError("b must be a Bounds instance")
    rng = make_rng(params.seed)
    counted = CountingObjective(objective)
    schedule = alpha_schedule(params)
    tally = _Tally()

    incumbent = init_continuous(counted, b, params.se, rng)
    previous = None
    history = [(0, incumbent.value)]
    for k in range(1, params.max_iterations + 1):
        incumbent, previous = iterate(
            incumbent, previous, params, counted, b, rng, schedule=schedule, tally=tally
        )
        history.append((k, incumbent.value))
        if callback is not None:
            callback(k, incumbent)

    return SolveResult(
        best_point=np.array(incumbent.point),
        best_value=incumbent.value,
        history=history,
        evaluations=counted.calls,
        translation_phases=tally.translation_phases,
        skipped_phases=tally.skipped_phases,
    )
