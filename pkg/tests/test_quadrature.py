import math

import numpy as np
import pytest

from tcvm.quadrature import ConvergenceError, QuadratureConfig, integrate


def test_polynomial_exact():
    assert integrate(lambda x: 3.0 * x**2, 0.0, 1.0) == pytest.approx(1.0, abs=1e-13)


def test_exponential():
    val = integrate(np.exp, 0.0, 2.0)
    assert val == pytest.approx(math.e**2 - 1.0, rel=1e-12)


def test_oscillatory():
    val = integrate(np.sin, 0.0, 3.0 * math.pi)
    assert val == pytest.approx(2.0, rel=1e-11)


def test_zero_width_interval():
    assert integrate(np.exp, 1.3, 1.3) == 0.0


def test_straddling_zero_matches_halves():
    f = lambda x: np.exp(0.5 * x * x)
    whole = integrate(f, -2.0, 3.0)
    parts = integrate(f, -2.0, 0.0) + integrate(f, 0.0, 3.0)
    assert whole == pytest.approx(parts, rel=1e-12)


def test_reversed_bounds_rejected():
    with pytest.raises(ValueError, match="exceeds"):
        integrate(np.exp, 1.0, 0.0)


def test_nonfinite_bounds_rejected():
    with pytest.raises(ValueError, match="finite"):
        integrate(np.exp, 0.0, math.inf)


def test_convergence_error_carries_estimate():
    config = QuadratureConfig(rel_tol=1e-14, abs_tol=1e-300, max_subdivisions=2)
    with pytest.raises(ConvergenceError) as exc_info:
        integrate(lambda x: np.exp(0.5 * x * x), 0.0, 5.5, config)
    err = exc_info.value
    reference = integrate(lambda x: np.exp(0.5 * x * x), 0.0, 5.5)
    assert err.estimate == pytest.approx(reference, rel=1e-4)
    assert err.error_bound > 0


@pytest.mark.parametrize(
    "kwargs",
    [
        {"rel_tol": 0.0},
        {"rel_tol": -1e-9},
        {"abs_tol": 0.0},
        {"max_subdivisions": 0},
    ],
)
def test_config_validation(kwargs):
    with pytest.raises(ValueError):
        QuadratureConfig(**kwargs)


def test_nonfinite_integrand_rejected():
    with np.errstate(over="ignore"):
        with pytest.raises(Exception, match="non-finite"):
            integrate(lambda x: np.exp(x * x), 0.0, 40.0)
