"""Alternative-hypothesis families: a small spec grammar and seeded samplers.

Families follow the Gan-Koehler naming used by the power study:

* ``LoConN(p, a)``  - mixture of N(0,1) w.p. 1-p and N(a,1) w.p. p
* ``ScConN(p, a)``  - mixture of N(0,1) w.p. 1-p and N(0, a) w.p. p, where
  ``a`` is the contaminating *variance* (N(mean; variance) notation)
* ``TruncN(a, b)``  - N(0,1) conditioned on (a, b)
* ``SB(a, b)`` / ``SU(a, b)`` - Johnson bounded / unbounded transforms of a
  standard normal draw Z: 1/(1 + exp(-(Z-a)/b)) and sinh((Z-a)/b)
* ``TriangleI(a)``  - symmetric triangle on [-a, a]
* ``TriangleII(a)`` - decreasing triangle on [0, a]
* ``Tukey(lam)``    - quantile (u^lam - (1-u)^lam)/lam, logistic at lam = 0
* plus Unif, Beta, StudentT (``t``), Logistic, Laplace, Weibull, HalfN,
  ChiSq, Lognormal and Normal.

Sampling is inverse-CDF based wherever the family has a closed quantile;
the rest use transforms of normal draws or the generator's dedicated
methods.  Every draw consumes a caller-provided ``numpy.random.Generator``,
so identical (spec, n, seed) triples reproduce bit-identical samples.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from typing import Callable, Dict, Optional, Tuple

import numpy as np

from .normal import cdf, quantile

__all__ = [
    "AlternativeSpec",
    "SpecError",
    "UnknownFamilyError",
    "ArityError",
    "ParamDomainError",
    "UnsupportedFamilyError",
    "parse_spec",
    "sample",
    "draw",
    "quantile_fn",
    "support_interval",
    "TABLE1_ALTERNATIVES",
]


class SpecError(ValueError):
    """Base class for alternative-spec failures."""


class UnknownFamilyError(SpecError):
    pass


class ArityError(SpecError):
    pass


class ParamDomainError(SpecError):
    pass


class UnsupportedFamilyError(SpecError):
    """The family has no closed-form quantile."""


@dataclass(frozen=True)
class AlternativeSpec:
    family: str
    params: Tuple[float, ...]

    def __str__(self) -> str:
        inner = ",".join(format(p, "g") for p in self.params)
        return f"{self.family}({inner})"


def _open_unit(u: np.ndarray) -> np.ndarray:
    # generators produce u in [0, 1); keep quantiles finite at the ends
    return np.clip(u, 5e-324, np.nextafter(1.0, 0.0))


def _tukey_quantile(u: np.ndarray, lam: float) -> np.ndarray:
    u = _open_unit(u)
    if lam == 0.0:
        return np.log(u / (1.0 - u))
    return (u**lam - (1.0 - u) ** lam) / lam


def _triangle1_quantile(u: np.ndarray, a: float) -> np.ndarray:
    lower = a * (np.sqrt(2.0 * u) - 1.0)
    upper = a * (1.0 - np.sqrt(2.0 * (1.0 - u)))
    return np.where(u < 0.5, lower, upper)


@dataclass(frozen=True)
class _Family:
    name: str
    arity: int
    validate: Callable[[Tuple[float, ...]], Optional[str]]
    drawer: Callable[[np.random.Generator, int, Tuple[float, ...]], np.ndarray]
    quantile: Optional[Callable[[np.ndarray, Tuple[float, ...]], np.ndarray]] = None
    support: Optional[Callable[[Tuple[float, ...]], Tuple[float, float]]] = None


def _ok(_params: Tuple[float, ...]) -> Optional[str]:
    return None


def _positive(idx: int, label: str):
    def check(params: Tuple[float, ...]) -> Optional[str]:
        if params[idx] <= 0:
            return f"{label} must be > 0, got {params[idx]}"
        return None

    return check


def _all(*checks):
    def check(params):
        for c in checks:
            msg = c(params)
            if msg:
                return msg
        return None

    return check


def _prob(idx: int, label: str):
    def check(params):
        if not 0.0 <= params[idx] <= 1.0:
            return f"{label} must lie in [0, 1], got {params[idx]}"
        return None

    return check


def _ordered(i: int, j: int):
    def check(params):
        if not params[i] < params[j]:
            return f"interval requires {params[i]} < {params[j]}"
        return None

    return check


def _mix_draw(shift: bool):
    def drawer(rng, n, params):
        p, a = params
        pick = rng.random(n) < p
        z = rng.standard_normal(n)
        if shift:
            return z + np.where(pick, a, 0.0)
        return z * np.where(pick, math.sqrt(a), 1.0)

    return drawer


def _truncn_draw(rng, n, params):
    a, b = params
    lo, hi = cdf(a), cdf(b)
    return quantile(_open_unit(lo + rng.random(n) * (hi - lo)))


def _truncn_quantile(u, params):
    a, b = params
    lo, hi = cdf(a), cdf(b)
    return quantile(_open_unit(lo + u * (hi - lo)))


_FAMILIES: Dict[str, _Family] = {}


def _register(fam: _Family) -> None:
    _FAMILIES[fam.name.lower()] = fam


_register(
    _Family(
        "LoConN",
        2,
        _prob(0, "mixing probability"),
        _mix_draw(shift=True),
    )
)
_register(
    _Family(
        "ScConN",
        2,
        _all(_prob(0, "mixing probability"), _positive(1, "contaminating variance")),
        _mix_draw(shift=False),
    )
)
_register(
    _Family(
        "TruncN",
        2,
        _ordered(0, 1),
        _truncn_draw,
        quantile=_truncn_quantile,
        support=lambda p: (p[0], p[1]),
    )
)
_register(
    _Family(
        "SB",
        2,
        _positive(1, "Johnson delta"),
        lambda rng, n, p: 1.0 / (1.0 + np.exp(-(rng.standard_normal(n) - p[0]) / p[1])),
        quantile=lambda u, p: 1.0
        / (1.0 + np.exp(-(quantile(_open_unit(u)) - p[0]) / p[1])),
        support=lambda p: (0.0, 1.0),
    )
)
_register(
    _Family(
        "SU",
        2,
        _positive(1, "Johnson delta"),
        lambda rng, n, p: np.sinh((rng.standard_normal(n) - p[0]) / p[1]),
        quantile=lambda u, p: np.sinh((quantile(_open_unit(u)) - p[0]) / p[1]),
    )
)
_register(
    _Family(
        "TriangleI",
        1,
        _positive(0, "half-width"),
        lambda rng, n, p: _triangle1_quantile(rng.random(n), p[0]),
        quantile=lambda u, p: _triangle1_quantile(np.asarray(u, float), p[0]),
        support=lambda p: (-p[0], p[0]),
    )
)
_register(
    _Family(
        "TriangleII",
        1,
        _positive(0, "width"),
        lambda rng, n, p: p[0] * (1.0 - np.sqrt(1.0 - rng.random(n))),
        quantile=lambda u, p: p[0] * (1.0 - np.sqrt(1.0 - np.asarray(u, float))),
        support=lambda p: (0.0, p[0]),
    )
)
_register(
    _Family(
        "Unif",
        2,
        _ordered(0, 1),
        lambda rng, n, p: p[0] + (p[1] - p[0]) * rng.random(n),
        quantile=lambda u, p: p[0] + (p[1] - p[0]) * np.asarray(u, float),
        support=lambda p: (p[0], p[1]),
    )
)
_register(
    _Family(
        "Beta",
        2,
        _all(_positive(0, "alpha"), _positive(1, "beta")),
        lambda rng, n, p: rng.beta(p[0], p[1], n),
        support=lambda p: (0.0, 1.0),
    )
)
_register(
    _Family(
        "StudentT",
        1,
        _positive(0, "degrees of freedom"),
        lambda rng, n, p: rng.standard_t(p[0], n),
    )
)
_register(
    _Family(
        "Logistic",
        2,
        _positive(1, "scale"),
        lambda rng, n, p: p[0] + p[1] * _tukey_quantile(rng.random(n), 0.0),
        quantile=lambda u, p: p[0] + p[1] * _tukey_quantile(np.asarray(u, float), 0.0),
    )
)


def _laplace_quantile(u, p):
    u = _open_unit(np.asarray(u, float)) - 0.5
    return p[0] - p[1] * np.sign(u) * np.log1p(-2.0 * np.abs(u))


_register(
    _Family(
        "Laplace",
        2,
        _positive(1, "scale"),
        lambda rng, n, p: _laplace_quantile(rng.random(n), p),
        quantile=_laplace_quantile,
    )
)
_register(
    _Family(
        "Weibull",
        1,
        _positive(0, "shape"),
        lambda rng, n, p: (-np.log1p(-rng.random(n))) ** (1.0 / p[0]),
        quantile=lambda u, p: (-np.log1p(-_open_unit(np.asarray(u, float))))
        ** (1.0 / p[0]),
        support=lambda p: (0.0, math.inf),
    )
)
_register(
    _Family(
        "HalfN",
        2,
        _positive(1, "scale"),
        lambda rng, n, p: p[0] + p[1] * np.abs(rng.standard_normal(n)),
        quantile=lambda u, p: p[0]
        + p[1] * quantile(0.5 * (1.0 + _open_unit(np.asarray(u, float)))),
        support=lambda p: (p[0], math.inf),
    )
)
_register(
    _Family(
        "ChiSq",
        1,
        _positive(0, "degrees of freedom"),
        lambda rng, n, p: rng.chisquare(p[0], n),
        support=lambda p: (0.0, math.inf),
    )
)
_register(
    _Family(
        "Lognormal",
        2,
        _positive(1, "log-scale sigma"),
        lambda rng, n, p: np.exp(p[0] + p[1] * rng.standard_normal(n)),
        quantile=lambda u, p: np.exp(p[0] + p[1] * quantile(_open_unit(np.asarray(u, float)))),
        support=lambda p: (0.0, math.inf),
    )
)
_register(
    _Family(
        "Tukey",
        1,
        _ok,
        lambda rng, n, p: _tukey_quantile(rng.random(n), p[0]),
        quantile=lambda u, p: _tukey_quantile(np.asarray(u, float), p[0]),
    )
)
_register(
    _Family(
        "Normal",
        2,
        _positive(1, "standard deviation"),
        lambda rng, n, p: p[0] + p[1] * rng.standard_normal(n),
        quantile=lambda u, p: p[0] + p[1] * quantile(_open_unit(np.asarray(u, float))),
    )
)

_ALIASES = {
    "t": "studentt",
    "logist": "logistic",
    "chi2": "chisq",
    "lognorm": "lognormal",
    "uniform": "unif",
    "triangle i": "trianglei",
    "triangle ii": "triangleii",
    "n": "normal",
}

_SPEC_RE = re.compile(r"^\s*([A-Za-z][A-Za-z0-9 ]*?)\s*\(\s*([^()]*)\s*\)\s*$")


def parse_spec(text: str) -> AlternativeSpec:
    """Parse strings like ``"LoConN(0.5,4)"`` into a validated spec."""
    m = _SPEC_RE.match(text)
    if not m:
        raise SpecError(
            f"cannot parse {text!r}: expected Family(p1,p2,...) with numeric "
            "parameters"
        )
    raw_name, raw_params = m.groups()
    key = _ALIASES.get(raw_name.strip().lower(), raw_name.strip().lower())
    fam = _FAMILIES.get(key)
    if fam is None:
        known = ", ".join(sorted(f.name for f in _FAMILIES.values()))
        raise UnknownFamilyError(f"unknown family {raw_name!r}; known: {known}")
    parts = [p.strip() for p in raw_params.split(",")] if raw_params.strip() else []
    try:
        params = tuple(float(p) for p in parts)
    except ValueError as exc:
        raise SpecError(f"non-numeric parameter in {text!r}") from exc
    if len(params) != fam.arity:
        raise ArityError(
            f"{fam.name} takes {fam.arity} parameter(s), got {len(params)} in "
            f"{text!r}"
        )
    msg = fam.validate(params)
    if msg:
        raise ParamDomainError(f"{fam.name}: {msg}")
    return AlternativeSpec(family=fam.name, params=params)


def _family(spec: AlternativeSpec) -> _Family:
    fam = _FAMILIES.get(spec.family.lower())
    if fam is None:
        raise UnknownFamilyError(f"unknown family {spec.family!r}")
    return fam


def draw(spec: AlternativeSpec, n: int, rng: np.random.Generator) -> np.ndarray:
    """n iid draws using the supplied generator."""
    if n < 1:
        raise ValueError(f"need n >= 1 draws, got {n}")
    fam = _family(spec)
    msg = fam.validate(spec.params)
    if msg:
        raise ParamDomainError(f"{fam.name}: {msg}")
    return fam.drawer(rng, n, spec.params)


def sample(spec: AlternativeSpec, n: int, seed: int) -> np.ndarray:
    """n iid draws; bit-identical for identical (spec, n, seed)."""
    rng = np.random.Generator(np.random.Philox(key=np.array([seed & (2**64 - 1), 0], dtype=np.uint64)))
    return draw(spec, n, rng)


def quantile_fn(spec: AlternativeSpec, u) -> np.ndarray:
    """Closed-form quantile where the family has one.

    Beta, ChiSq, StudentT and the normal mixtures have no tractable inverse
    CDF and raise UnsupportedFamilyError.
    """
    fam = _family(spec)
    if fam.quantile is None:
        raise UnsupportedFamilyError(
            f"{fam.name} has no closed-form quantile; use sample() instead"
        )
    arr = np.asarray(u, dtype=float)
    if np.any((arr <= 0.0) | (arr >= 1.0)):
        raise ValueError("quantile_fn requires probabilities inside (0, 1)")
    out = fam.quantile(arr, spec.params)
    return float(out) if np.ndim(out) == 0 else out


def support_interval(spec: AlternativeSpec) -> Optional[Tuple[float, float]]:
    """Closed support bounds for bounded/one-sided families, else None."""
    fam = _family(spec)
    return fam.support(spec.params) if fam.support else None


# The 35 alternatives of the published n = 50 power comparison, in table
# order: (type group, row number, spec string).
TABLE1_ALTERNATIVES: Tuple[Tuple[int, int, str], ...] = (
    (1, 1, "LoConN(0.5,4)"),
    (1, 2, "LoConN(0.5,3)"),
    (1, 3, "LoConN(0.5,2)"),
    (2, 4, "SB(0,0.5)"),
    (2, 5, "Unif(0,1)"),
    (2, 6, "SB(0,0.707)"),
    (2, 7, "TruncN(-1,1)"),
    (2, 8, "Beta(2,2)"),
    (2, 9, "TriangleI(1)"),
    (3, 10, "t(10)"),
    (3, 11, "Logistic(0,1)"),
    (4, 12, "ScConN(0.05,3)"),
    (4, 13, "ScConN(0.05,5)"),
    (5, 14, "ScConN(0.1,5)"),
    (5, 15, "ScConN(0.1,7)"),
    (6, 16, "ScConN(0.2,3)"),
    (6, 17, "ScConN(0.2,7)"),
    (7, 18, "Laplace(0,1)"),
    (7, 19, "SU(0,1)"),
    (7, 20, "t(2)"),
    (8, 21, "Beta(2,1)"),
    (8, 22, "TruncN(-2,1)"),
    (8, 23, "Beta(3,2)"),
    (9, 24, "SB(1,2)"),
    (9, 25, "Weibull(2)"),
    (9, 26, "HalfN(0,1)"),
    (10, 27, "LoConN(0.2,3)"),
    (10, 28, "LoConN(0.2,5)"),
    (11, 29, "LoConN(0.1,3)"),
    (11, 30, "LoConN(0.1,5)"),
    (12, 31, "LoConN(0.05,3)"),
    (12, 32, "LoConN(0.05,5)"),
    (13, 33, "TriangleII(1)"),
    (13, 34, "ChiSq(4)"),
    (13, 35, "Lognormal(0,1)"),
)
