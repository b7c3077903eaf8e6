import numpy as np
import pytest

from cabletorsion.words import Word


@pytest.fixture
def rng():
    return np.random.default_rng(20260809)


def random_word(rng, generators, max_len=12):
    """A freely reduced random word of length at most max_len."""
    n = int(rng.integers(1, max_len + 1))
    letters = [
        (generators[int(rng.integers(0, len(generators)))], int(rng.choice([-1, 1])))
        for _ in range(n)
    ]
    return Word(letters)


def assert_close(actual, expected, tol=1e-10, label=""):
    actual = np.asarray(actual, dtype=complex)
    expected = np.asarray(expected, dtype=complex)
    scale = max(1.0, float(np.max(np.abs(expected))))
    dev = float(np.max(np.abs(actual - expected)))
    assert dev <= tol * scale, f"{label} deviates by {dev:.3e} (scale {scale:.3e})"
