"""Permutation transformations and the incumbent-only TSP search.

A sequence is a permutation of ``0..n-1`` held in an integer array. A general
elementary transformation is a permutation matrix ``M``; applying it gives
``M @ s``, i.e. ``result[i] = s[sigma[i]]`` where row ``i`` of ``M`` has its 1
in column ``sigma[i]``. Swap, insertion and reversal moves are the built-in
families.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

from . import kernels
from .core import make_rng


def _check_permutation(s, n=None):
    s = np.asarray(s)
    if s.ndim != 1 or not np.issubdtype(s.dtype, np.integer):
        raise ValueError("a sequence must be a 1-D integer array")
    if n is not None and s.size != n:
        raise ValueError(f"sequence has {s.size} items, expected {n}")
    if not np.array_equal(np.sort(s), np.arange(s.size)):
        raise ValueError("sequence is not a permutation of 0..n-1")
    return s.astype(np.intp, copy=False)


@dataclass(frozen=True)
class GeneralElementaryTransformation:
    """Position mapping ``sigma``: output slot ``i`` takes input slot ``sigma[i]``."""

    mapping: np.ndarray

    def __post_init__(self):
        sigma = _check_permutation(np.asarray(self.mapping)).copy()
        sigma.setflags(write=False)
        object.__setattr__(self, "mapping", sigma)

    @property
    def n(self):
        return self.mapping.size

    @classmethod
    def from_matrix(cls, matrix):
        M = np.asarray(matrix)
        if M.ndim != 2 or M.shape[0] != M.shape[1]:
            raise ValueError("expected a square matrix")
        if not (np.isin(M, (0, 1)).all() and (M.sum(axis=0) == 1).all() and (M.sum(axis=1) == 1).all()):
            raise ValueError("not a permutation matrix")
        return cls(np.argmax(M, axis=1))

    def matrix(self):
        M = np.zeros((self.n, self.n), dtype=np.int64)
        M[np.arange(self.n), self.mapping] = 1
        return M

    def then(self, other):
        """The single transformation equal to applying ``self`` and then ``other``."""
        if other.n != self.n:
            raise ValueError("transformations have different sizes")
        return GeneralElementaryTransformation(self.mapping[other.mapping])

    def __call__(self, s):
        return apply_transformation(self, s)


def apply_transformation(t, s):
    s = np.asarray(s)
    if s.ndim != 1 or s.size != t.n:
        raise ValueError(f"sequence of length {s.size} does not match transformation size {t.n}")
    return s[t.mapping]


def swap(n, i, j):
    sigma = np.arange(n)
    sigma[[i, j]] = sigma[[j, i]]
    return GeneralElementaryTransformation(sigma)


def insert(n, i, j):
    """Move the item at position ``i`` so it ends up at position ``j``."""
    order = list(range(n))
    order.insert(j, order.pop(i))
    return GeneralElementaryTransformation(np.array(order))


def reverse(n, i, j):
    """Reverse positions ``i..j`` inclusive."""
    lo, hi = min(i, j), max(i, j)
    sigma = np.arange(n)
    sigma[lo : hi + 1] = sigma[lo : hi + 1][::-1]
    return GeneralElementaryTransformation(sigma)


# Batched move generators: each returns an (m, n) array of position mappings.


def _distinct_pairs(n, m, rng):
    if n < 2:
        raise ValueError("moves need at least 2 positions")
    i = rng.integers(0, n, size=m)
    j = rng.integers(0, n - 1, size=m)
    j = j + (j >= i)
    return i, j


def swap_mappings(n, m, rng):
    i, j = _distinct_pairs(n, m, rng)
    sigma = np.tile(np.arange(n), (m, 1))
    rows = np.arange(m)
    sigma[rows, i] = j
    sigma[rows, j] = i
    return sigma


def insert_mappings(n, m, rng):
    i, j = _distinct_pairs(n, m, rng)
    pos = np.arange(n)[None, :]
    i_, j_ = i[:, None], j[:, None]
    forward = (i_ < j_) & (pos >= i_) & (pos < j_)
    backward = (i_ > j_) & (pos > j_) & (pos <= i_)
    sigma = pos + forward.astype(np.intp) - backward.astype(np.intp)
    sigma[np.arange(m), j] = i
    return sigma


def reverse_mappings(n, m, rng):
    i, j = _distinct_pairs(n, m, rng)
    lo, hi = np.minimum(i, j)[:, None], np.maximum(i, j)[:, None]
    pos = np.arange(n)[None, :]
    inside = (pos >= lo) & (pos <= hi)
    return np.where(inside, lo + hi - pos, pos)


MOVE_FAMILIES = {"swap": swap_mappings, "insert": insert_mappings, "reverse": reverse_mappings}


def random_swap(n, rng):
    return GeneralElementaryTransformation(swap_mappings(n, 1, rng)[0])


def random_insert(n, rng):
    return GeneralElementaryTransformation(insert_mappings(n, 1, rng)[0])


def random_reverse(n, rng):
    return GeneralElementaryTransformation(reverse_mappings(n, 1, rng)[0])


@dataclass(frozen=True)
class TspInstance:
    """Cities in the plane; distances are Euclidean."""

    cities: np.ndarray

    def __post_init__(self):
        c = np.array(self.cities, dtype=np.float64)
        if c.ndim != 2 or c.shape[1] != 2:
            raise ValueError("cities must be an (n, 2) array of coordinates")
        if c.shape[0] < 2:
            raise ValueError("a TSP instance needs at least 2 cities")
        if not np.all(np.isfinite(c)):
            raise ValueError("city coordinates must be finite")
        c.setflags(write=False)
        object.__setattr__(self, "cities", c)

    @property
    def n(self):
        return self.cities.shape[0]

    @cached_property
    def distances(self):
        diff = self.cities[:, None, :] - self.cities[None, :, :]
        d = np.sqrt(np.sum(diff * diff, axis=2))
        d.setflags(write=False)
        return d


def tour_length(inst, s):
    """Closed tour length, including the edge from the last city back to the first."""
    s = _check_permutation(s, inst.n)
    return float(kernels.tour_lengths(inst.distances, s[None, :])[0])


def display_tour(s):
    """1-based city labels with the start city repeated at the end."""
    labels = [int(v) + 1 for v in s]
    return labels + labels[:1]


def nearest_neighbor_tour(inst, start=0):
    """Greedy tour that always moves to the closest unvisited city."""
    D = inst.distances
    visited = np.zeros(inst.n, dtype=bool)
    tour = [start]
    visited[start] = True
    for _ in range(inst.n - 1):
        d = np.where(visited, np.inf, D[tour[-1]])
        nxt = int(np.argmin(d))
        tour.append(nxt)
        visited[nxt] = True
    return np.array(tour, dtype=np.intp)


@dataclass
class TourResult:
    best_tour: np.ndarray
    best_length: float
    history: list = field(default_factory=list)
    evaluations: int = 0


def solve_discrete(inst, params, callback=None):
    """Incumbent-only permutation search for the closed TSP tour.

    Draws ``params.se`` uniform random tours and keeps the shortest. Each
    iteration applies ``se`` random swaps, ``se`` insertions and ``se``
    reversals to the incumbent and accepts the shortest candidate if it is
    strictly shorter. ``params.max_iterations`` iterations are run.
    """
    rng = make_rng(params.seed)
    n, se = inst.n, int(params.se)
    D = inst.distances

    tours = rng.permuted(np.tile(np.arange(n, dtype=np.intp), (se, 1)), axis=1)
    lengths = kernels.tour_lengths(D, tours)
    k = int(np.argmin(lengths))
    best, best_len = tours[k].copy(), float(lengths[k])
    evaluations = se
    history = [(0, best_len)]

    for it in range(1, params.max_iterations + 1):
        sigma = np.concatenate([gen(n, se, rng) for gen in MOVE_FAMILIES.values()])
        cands = best[sigma]
        lengths = kernels.tour_lengths(D, cands)
        evaluations += cands.shape[0]
        k = int(np.argmin(lengths))
        if lengths[k] < best_len:
            best, best_len = cands[k].copy(), float(lengths[k])
        history.append((it, best_len))
        if callback is not None:
            callback(it, best, best_len)

    return TourResult(best_tour=best, best_length=best_len, history=history, evaluations=evaluations)
