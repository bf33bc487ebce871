"""Shared fixtures and frozen expected values for the test suite."""

from __future__ import annotations

import numpy as np
import pytest

from rmq import backend

#: Independently derived per-decode operation counts of the fast decoder,
#: {(m, q): (complex-addition units, complex multiplications)}.  These values
#: anchor both the predictor formulas and the instrumented decoder.
ALGORITHM_COUNTS: dict[tuple[int, int], tuple[int, int]] = {
    (4, 2): (28, 0),
    (4, 4): (256, 0),
    (4, 8): (1600, 1360),
    (4, 16): (11392, 28080),
    (5, 2): (72, 0),
    (5, 4): (1088, 0),
    (5, 8): (12928, 10912),
    (5, 16): (182528, 449376),
    (6, 2): (176, 0),
    (6, 4): (4480, 0),
    (6, 8): (103680, 87360),
    (6, 16): (2920960, 7190208),
}


def randn_complex(rng: np.random.Generator, *shape: int) -> np.ndarray:
    """Standard complex Gaussian samples for test inputs."""
    return rng.normal(size=shape) + 1j * rng.normal(size=shape)


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(0xC0DE)


@pytest.fixture
def numpy_backend():
    """Force the pure-numpy kernels (used for bitwise-equality assertions)."""
    backend.set_backend("numpy")
    yield
    backend.set_backend("auto")


@pytest.fixture
def numba_backend():
    """Force the numba kernels (skips if numba is unavailable)."""
    if "numba" not in backend.available_backends():
        pytest.skip("numba not importable")
    backend.set_backend("numba")
    yield
    backend.set_backend("auto")
