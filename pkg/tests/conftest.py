import importlib

import numpy as np
import pytest

from sta_opt import _pykernels, kernels

KERNEL_NAMES = [
    "evaluate",
    "rotation_candidates",
    "translation_candidates",
    "expansion_candidates",
    "tour_lengths",
]


def _compiled():
    try:
        return importlib.import_module("sta_opt._ckernels")
    except ImportError:
        return None


BACKENDS = {"python": _pykernels, "cython": _compiled()}


@pytest.fixture(params=sorted(BACKENDS))
def backend(request, monkeypatch):
    """Route every kernel call through one backend for the duration of a test."""
    impl = BACKENDS[request.param]
    if impl is None:
        pytest.skip("compiled kernels not built")
    for name in KERNEL_NAMES:
        monkeypatch.setattr(kernels, name, getattr(impl, name))
    return request.param


@pytest.fixture
def rng():
    return np.random.default_rng(12345)
