import numpy as np
import pytest


@pytest.fixture
def rng():
    return np.random.default_rng(20250810)


def composite_simpson(f, lo: float, hi: float, panels: int = 2**20) -> float:
    """Brute-force Simpson rule; the independent quadrature oracle."""
    x = np.linspace(lo, hi, 2 * panels + 1)
    fx = f(x)
    h = (hi - lo) / (2 * panels)
    return float(h / 3.0 * (fx[0] + fx[-1] + 4.0 * fx[1::2].sum() + 2.0 * fx[2:-1:2].sum()))
