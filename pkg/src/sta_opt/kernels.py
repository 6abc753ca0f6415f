"""Hot-loop kernels: candidate construction, batch benchmark evaluation, tour lengths.

The compiled ``_ckernels`` extension is used when it was built; otherwise the
numpy implementation in ``_pykernels`` is used. Set ``STA_OPT_PURE_PYTHON=1``
to force the fallback. ``BACKEND`` names the active implementation.

Both backends consume identical random draws (drawn by the caller), so they
agree up to floating-point summation order.
"""

import os

from . import _pykernels

if os.environ.get("STA_OPT_PURE_PYTHON", "") not in ("", "0"):
    _impl = _pykernels
    BACKEND = "python"
else:
    try:
        from . import _ckernels as _impl
    except ImportError:
        _impl = _pykernels
        BACKEND = "python"
    else:
        BACKEND = "cython"

SPHERE = _pykernels.SPHERE
ROSENBROCK = _pykernels.ROSENBROCK
RASTRIGIN = _pykernels.RASTRIGIN
GRIEWANK = _pykernels.GRIEWANK

evaluate = _impl.evaluate
rotation_candidates = _impl.rotation_candidates
translation_candidates = _impl.translation_candidates
expansion_candidates = _impl.expansion_candidates
tour_lengths = _impl.tour_lengths

__all__ = [
    "BACKEND",
    "evaluate",
    "rotation_candidates",
    "translation_candidates",
    "expansion_candidates",
    "tour_lengths",
]
