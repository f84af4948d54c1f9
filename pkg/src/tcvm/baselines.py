"""Comparison statistics for the power study.

Five test kinds enter the comparison harness:

* ``TCVM`` - the truncated weighted statistic (upper-tail rejection);
* ``CVM``  - the same weighted functional integrated over the whole real
  line (upper tail).  This is what the published power column labelled CVM
  measures; the classical quadratic EDF statistic with estimated parameters
  is also provided as :func:`cramer_von_mises` for completeness;
* ``BCMR`` - the L2-Wasserstein distance-to-normality ratio (upper tail);
* ``AD``   - Anderson-Darling with estimated parameters (upper tail);
* ``SW``   - the normal-scores correlation statistic with plain m/||m||
  weights (lower tail), which is the variant the published power column
  tracks.  The Royston-corrected coefficients are available separately as
  :func:`shapiro_wilk`.

All statistics are location-scale invariant, and all critical values are
obtained by simulation (never from published asymptotic tables), so the
rejection decisions are internally consistent.
"""

from __future__ import annotations

import enum
import warnings
from functools import lru_cache
from typing import Dict, Iterable, Sequence

import numpy as np

from .normal import cdf, pdf, quantile
from .statistic import (
    _batch_standardize,
    _tstar_from_sorted_std,
    _untruncated_from_sorted_std,
    as_sample,
    standardize,
)

__all__ = [
    "BaselineKind",
    "REJECTION_TAIL",
    "anderson_darling",
    "cramer_von_mises",
    "shapiro_wilk",
    "shapiro_francia",
    "bcmr",
    "batch_statistics",
]

_U_CLAMP = 1e-15


class BaselineKind(enum.Enum):
    TCVM = "tcvm"
    CVM = "cvm"
    BCMR = "bcmr"
    AD = "ad"
    SW = "sw"

    @classmethod
    def parse(cls, name: str) -> "BaselineKind":
        try:
            return cls(name.strip().lower())
        except ValueError:
            valid = ", ".join(k.value for k in cls)
            raise ValueError(f"unknown test kind {name!r}; choose from {valid}") from None


# which tail of the null distribution rejects
REJECTION_TAIL: Dict[BaselineKind, str] = {
    BaselineKind.TCVM: "upper",
    BaselineKind.CVM: "upper",
    BaselineKind.BCMR: "upper",
    BaselineKind.AD: "upper",
    BaselineKind.SW: "lower",
}


def _clamped_uniforms(y_sorted: np.ndarray) -> np.ndarray:
    u = cdf(y_sorted)
    clipped = np.count_nonzero((u < _U_CLAMP) | (u > 1.0 - _U_CLAMP))
    if clipped:
        warnings.warn(
            f"{clipped} probability value(s) clamped away from 0/1 in the "
            "EDF statistic",
            RuntimeWarning,
            stacklevel=3,
        )
    return np.clip(u, _U_CLAMP, 1.0 - _U_CLAMP)


def anderson_darling(values: Sequence[float]) -> float:
    """A^2 with estimated mean and divisor-n scale (order-statistic form)."""
    std = standardize(as_sample(values))
    u = _clamped_uniforms(np.sort(std.y))
    n = std.n
    i = np.arange(1, n + 1)
    s = np.sum((2 * i - 1) * (np.log(u) + np.log1p(-u[::-1])))
    return float(-n - s / n)


def cramer_von_mises(values: Sequence[float]) -> float:
    """Classical quadratic EDF statistic W^2 with estimated parameters.

    Not the "CVM" column of the power comparison (see the module docstring);
    kept as the textbook order-statistic form 1/(12n) + sum (u_i - (2i-1)/2n)^2.
    """
    std = standardize(as_sample(values))
    u = _clamped_uniforms(np.sort(std.y))
    n = std.n
    i = np.arange(1, n + 1)
    return float(1.0 / (12.0 * n) + np.sum((u - (2 * i - 1) / (2.0 * n)) ** 2))


@lru_cache(maxsize=None)
def _normal_scores(n: int) -> np.ndarray:
    return quantile((np.arange(1, n + 1) - 0.375) / (n + 0.25))


@lru_cache(maxsize=None)
def _sw_coefficients(n: int) -> np.ndarray:
    """Royston's approximate coefficients for the W statistic."""
    m = _normal_scores(n)
    ssm = float(m @ m)
    c = m / np.sqrt(ssm)
    if n == 3:
        return np.array([-np.sqrt(0.5), 0.0, np.sqrt(0.5)])
    u = 1.0 / np.sqrt(n)
    poly_n = np.polyval([-2.706056, 4.434685, -2.071190, -0.147981, 0.221157, 0.0], u)
    a_n = c[-1] + poly_n
    a = m.copy()
    if n <= 5:
        phi = (ssm - 2.0 * m[-1] ** 2) / (1.0 - 2.0 * a_n**2)
        a[1:-1] = m[1:-1] / np.sqrt(phi)
        a[-1] = a_n
        a[0] = -a_n
    else:
        poly_n1 = np.polyval(
            [-3.582633, 5.682633, -1.752461, -0.293762, 0.042981, 0.0], u
        )
        a_n1 = c[-2] + poly_n1
        phi = (ssm - 2.0 * m[-1] ** 2 - 2.0 * m[-2] ** 2) / (
            1.0 - 2.0 * a_n**2 - 2.0 * a_n1**2
        )
        a[2:-2] = m[2:-2] / np.sqrt(phi)
        a[-1] = a_n
        a[0] = -a_n
        a[-2] = a_n1
        a[1] = -a_n1
    return a


@lru_cache(maxsize=None)
def _sf_weights(n: int) -> np.ndarray:
    m = _normal_scores(n)
    return m / np.sqrt(float(m @ m))


@lru_cache(maxsize=None)
def _bcmr_weights(n: int) -> np.ndarray:
    """w_i = int_{(i-1)/n}^{i/n} of the normal quantile = phi drop across the block."""
    qs = pdf(quantile(np.arange(1, n) / n))
    w = np.empty(n)
    w[0] = -qs[0]
    w[1:-1] = qs[:-1] - qs[1:]
    w[-1] = qs[-1]
    return w


def _w_statistic(x: np.ndarray, coeffs: np.ndarray) -> float:
    xs = np.sort(x)
    ssq = float(np.sum((xs - xs.mean()) ** 2))
    if ssq == 0.0:
        raise ValueError("sample is constant")
    return float((coeffs @ xs) ** 2 / ssq)


def shapiro_wilk(values: Sequence[float]) -> float:
    """W statistic with Royston's corrected coefficients (3 <= n <= 5000)."""
    x = as_sample(values)
    if x.size > 5000:
        raise ValueError(f"n = {x.size} exceeds the supported range for W (<= 5000)")
    return _w_statistic(x, _sw_coefficients(x.size))


def shapiro_francia(values: Sequence[float]) -> float:
    """W' statistic: squared correlation with plain normalized normal scores."""
    x = as_sample(values)
    return _w_statistic(x, _sf_weights(x.size))


def bcmr(values: Sequence[float]) -> float:
    """Minimal L2-Wasserstein distance to the normal family over S_n^2.

    R = 1 - (sum X_(i) w_i)^2 / S_n^2 with exact block integrals of the
    normal quantile as weights; 0 <= R <= 1 and small values indicate a
    nearly normal quantile profile.
    """
    x = as_sample(values)
    std = standardize(x)
    w = _bcmr_weights(x.size)
    return float(1.0 - (w @ np.sort(x)) ** 2 / (std.s_n**2))


# ---------------------------------------------------------------------------
# Vectorised kernels for the Monte Carlo engine.
# ---------------------------------------------------------------------------


def _batch_ad(y_sorted: np.ndarray) -> np.ndarray:
    n = y_sorted.shape[1]
    u = np.clip(cdf(y_sorted), _U_CLAMP, 1.0 - _U_CLAMP)
    odd = 2.0 * np.arange(1, n + 1) - 1.0
    s = (np.log(u) + np.log1p(-u[:, ::-1])) @ odd
    return -n - s / n


def _batch_sw_like(x_sorted: np.ndarray, coeffs: np.ndarray) -> np.ndarray:
    ssq = np.sum(
        (x_sorted - x_sorted.mean(axis=1, keepdims=True)) ** 2, axis=1
    )
    return (x_sorted @ coeffs) ** 2 / ssq


def _batch_bcmr(x_sorted: np.ndarray) -> np.ndarray:
    n = x_sorted.shape[1]
    var = x_sorted.var(axis=1)
    return 1.0 - (x_sorted @ _bcmr_weights(n)) ** 2 / var


def batch_statistics(
    samples: np.ndarray, kinds: Iterable[BaselineKind]
) -> Dict[BaselineKind, np.ndarray]:
    """Evaluate several test statistics on a (replications, n) matrix.

    Sorting and standardization are shared across kinds, which is also what
    makes common-random-number power comparisons cheap.
    """
    kinds = list(kinds)
    x_sorted = np.sort(np.asarray(samples, dtype=float), axis=1)
    out: Dict[BaselineKind, np.ndarray] = {}
    need_std = {BaselineKind.TCVM, BaselineKind.CVM, BaselineKind.AD} & set(kinds)
    y_sorted = _batch_standardize(x_sorted) if need_std else None
    for kind in kinds:
        if kind is BaselineKind.TCVM:
            out[kind] = _tstar_from_sorted_std(y_sorted)
        elif kind is BaselineKind.CVM:
            out[kind] = _untruncated_from_sorted_std(y_sorted)
        elif kind is BaselineKind.AD:
            out[kind] = _batch_ad(y_sorted)
        elif kind is BaselineKind.SW:
            out[kind] = _batch_sw_like(x_sorted, _sf_weights(x_sorted.shape[1]))
        elif kind is BaselineKind.BCMR:
            out[kind] = _batch_bcmr(x_sorted)
        else:  # pragma: no cover - enum is exhaustive
            raise ValueError(f"unhandled kind {kind}")
    return out
