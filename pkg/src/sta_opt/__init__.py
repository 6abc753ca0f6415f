"""State transition algorithm for continuous and permutation problems."""

from .benchmarks import BENCHMARKS, BenchmarkSpec, griewank, lookup, rastrigin, rosenbrock, sphere
from .core import (
    Bounds,
    DegenerateDirectionError,
    DegenerateStateError,
    EvaluatedState,
    SearchParams,
    clamp,
    init_continuous,
    make_rng,
    select_best,
)
from .discrete import (
    GeneralElementaryTransformation,
    TspInstance,
    apply_transformation,
    solve_discrete,
    tour_length,
)
from .kernels import BACKEND
from .operators import TransformKind, expand, rotate, sample_candidates, translate
from .solver import SolveResult, alpha_schedule, iterate, solve, translation_phase

__version__ = "0.1.0"
