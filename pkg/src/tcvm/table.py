"""Critical-value table: embedded rows, CSV round-trip, and n-interpolation."""

from __future__ import annotations

import io
import math
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict, Iterable, Mapping, Tuple

from . import _table_data
from .normal import endpoint

__all__ = [
    "ALPHA_LEVELS",
    "CriticalValueRow",
    "CriticalValueTable",
    "TableCoverageError",
    "UnsupportedAlphaError",
    "embedded_table",
]

ALPHA_LEVELS: Tuple[float, ...] = (0.15, 0.1, 0.075, 0.05, 0.025, 0.01, 0.001)


class TableCoverageError(LookupError):
    """Requested sample size is outside the table's range."""


class UnsupportedAlphaError(ValueError):
    """Requested significance level is not a table column."""


def _fmt(value: float) -> str:
    if float(value).is_integer():
        return str(int(value))
    return repr(float(value))


@dataclass(frozen=True)
class CriticalValueRow:
    """One table row: critical values per level plus a_n and C_n."""

    n: int
    critical_values: Mapping[float, float]
    a_n: float
    c_n: float

    def __post_init__(self) -> None:
        vals = [self.critical_values[a] for a in sorted(self.critical_values, reverse=True)]
        if any(lo >= hi for lo, hi in zip(vals, vals[1:])):
            raise ValueError(
                f"critical values for n={self.n} must increase as alpha decreases"
            )

    def to_csv_line(self, alphas: Iterable[float]) -> str:
        cells = [str(self.n)]
        cells += [_fmt(self.critical_values[a]) for a in alphas]
        cells += [_fmt(self.a_n), _fmt(self.c_n)]
        return ",".join(cells)


@dataclass(frozen=True)
class CriticalValueTable:
    """Critical values indexed by sample size, with metadata columns.

    ``provenance`` records where the quantiles came from: the embedded
    published table or a fresh simulation (replications and seed).
    """

    rows: Dict[int, CriticalValueRow] = field(repr=False)
    provenance: str = "embedded"
    alphas: Tuple[float, ...] = ALPHA_LEVELS

    @property
    def sizes(self) -> Tuple[int, ...]:
        return tuple(sorted(self.rows))

    def critical_value(self, n: int, alpha: float) -> Tuple[float, bool]:
        """Critical value at (n, alpha); second element marks interpolation.

        Sample sizes between table rows interpolate linearly in ln(n); sizes
        outside the covered range raise TableCoverageError.
        """
        alpha = float(alpha)
        if alpha not in self.alphas:
            raise UnsupportedAlphaError(
                f"alpha={alpha!r} is not a table level; choose one of {self.alphas}"
            )
        sizes = self.sizes
        if not sizes or n < sizes[0] or n > sizes[-1]:
            covered = f"[{sizes[0]}, {sizes[-1]}]" if sizes else "(empty)"
            raise TableCoverageError(
                f"n={n} outside the table range {covered}; simulate critical "
                "values instead"
            )
        if n in self.rows:
            return self.rows[n].critical_values[alpha], False
        lo = max(s for s in sizes if s < n)
        hi = min(s for s in sizes if s > n)
        w = (math.log(n) - math.log(lo)) / (math.log(hi) - math.log(lo))
        v_lo = self.rows[lo].critical_values[alpha]
        v_hi = self.rows[hi].critical_values[alpha]
        return (1.0 - w) * v_lo + w * v_hi, True

    def to_csv(self) -> str:
        buf = io.StringIO()
        buf.write("n," + ",".join(_fmt(a) for a in self.alphas) + ",a_n,C_n\n")
        for n in self.sizes:
            buf.write(self.rows[n].to_csv_line(self.alphas) + "\n")
        return buf.getvalue()

    @classmethod
    def from_csv(cls, text: str, provenance: str = "user") -> "CriticalValueTable":
        lines = [ln.strip() for ln in text.strip().splitlines() if ln.strip()]
        if not lines:
            raise ValueError("empty critical-value table")
        header = lines[0].split(",")
        if header[0].lower() != "n" or len(header) < 4:
            raise ValueError("critical-value table must start with a header row")
        alphas = tuple(float(a) for a in header[1:-2])
        rows: Dict[int, CriticalValueRow] = {}
        for ln in lines[1:]:
            cells = ln.split(",")
            if len(cells) != len(alphas) + 3:
                raise ValueError(f"malformed table row: {ln!r}")
            n = int(cells[0])
            crits = {a: float(v) for a, v in zip(alphas, cells[1:-2])}
            rows[n] = CriticalValueRow(
                n=n, critical_values=crits, a_n=float(cells[-2]), c_n=float(cells[-1])
            )
        return cls(rows=rows, provenance=provenance, alphas=alphas)


@lru_cache(maxsize=1)
def embedded_table() -> CriticalValueTable:
    """The package's built-in critical-value table."""
    table = CriticalValueTable.from_csv(
        "n," + ",".join(_fmt(a) for a in ALPHA_LEVELS) + ",a_n,C_n\n"
        + _table_data.CRITICAL_VALUE_ROWS,
        provenance="embedded",
    )
    # metadata sanity: a_n must match the deterministic endpoint to 4 d.p.
    for n, row in table.rows.items():
        if abs(row.a_n - endpoint(n).a_n) > 5e-4:
            raise AssertionError(f"embedded a_n for n={n} is inconsistent")
    return table
