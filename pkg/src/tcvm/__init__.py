"""Truncated weighted goodness-of-fit test for normality.

The test statistic integrates the squared standardized empirical process,
weighted by the reciprocal normal density, over (-a_n, a_n) with
a_n = Phi^{-1}(1 - 1/n).  The package provides the statistic, embedded and
simulated critical values, comparison tests (Anderson-Darling, quadratic
EDF, normal-scores correlation, Wasserstein distance), samplers for the
alternative families of the published power study, and a reproducible
Monte Carlo engine tying them together.
"""

from .alternatives import (
    AlternativeSpec,
    ArityError,
    ParamDomainError,
    SpecError,
    TABLE1_ALTERNATIVES,
    UnknownFamilyError,
    UnsupportedFamilyError,
    parse_spec,
    quantile_fn,
    sample,
)
from .baselines import (
    BaselineKind,
    REJECTION_TAIL,
    anderson_darling,
    batch_statistics,
    bcmr,
    cramer_von_mises,
    shapiro_francia,
    shapiro_wilk,
)
from .engine import (
    ConstantCEstimate,
    MomentCheck,
    PowerReport,
    estimate_constant_c,
    estimate_critical_values,
    estimate_null_critical_values,
    estimate_power,
    replication_rng,
    simulate_table,
    verify_fourth_moment,
    verify_fourth_moments,
)
from .normal import (
    Endpoint,
    c_n,
    cdf,
    d_n,
    endpoint,
    int_cdf_over_pdf,
    int_recip_pdf,
    pdf,
    quantile,
)
from .process import MomentPoint, b_hat_n, b_n, cov_b2, ebb2, fourth_moment_exact
from .quadrature import ConvergenceError, QuadratureConfig, QuadratureError
from .statistic import (
    DegenerateSampleError,
    StandardizedSample,
    TcvmResult,
    TestOutcome,
    compute_tstar,
    compute_tstar_batch,
    compute_tstar_direct,
    compute_untruncated,
    compute_untruncated_batch,
    decide,
    standardize,
    tcvm_test,
)
from .table import (
    ALPHA_LEVELS,
    CriticalValueRow,
    CriticalValueTable,
    TableCoverageError,
    UnsupportedAlphaError,
    embedded_table,
)

__version__ = "1.0.0"

__all__ = [
    "ALPHA_LEVELS",
    "AlternativeSpec",
    "ArityError",
    "BaselineKind",
    "ConstantCEstimate",
    "ConvergenceError",
    "CriticalValueRow",
    "CriticalValueTable",
    "DegenerateSampleError",
    "Endpoint",
    "MomentCheck",
    "MomentPoint",
    "ParamDomainError",
    "PowerReport",
    "QuadratureConfig",
    "QuadratureError",
    "REJECTION_TAIL",
    "SpecError",
    "StandardizedSample",
    "TABLE1_ALTERNATIVES",
    "TableCoverageError",
    "TcvmResult",
    "TestOutcome",
    "UnknownFamilyError",
    "UnsupportedAlphaError",
    "UnsupportedFamilyError",
    "anderson_darling",
    "b_hat_n",
    "b_n",
    "batch_statistics",
    "bcmr",
    "c_n",
    "cdf",
    "compute_tstar",
    "compute_tstar_batch",
    "compute_tstar_direct",
    "compute_untruncated",
    "compute_untruncated_batch",
    "cov_b2",
    "cramer_von_mises",
    "d_n",
    "decide",
    "ebb2",
    "embedded_table",
    "endpoint",
    "estimate_constant_c",
    "estimate_critical_values",
    "estimate_null_critical_values",
    "estimate_power",
    "fourth_moment_exact",
    "int_cdf_over_pdf",
    "int_recip_pdf",
    "parse_spec",
    "pdf",
    "quantile",
    "quantile_fn",
    "replication_rng",
    "sample",
    "shapiro_francia",
    "shapiro_wilk",
    "simulate_table",
    "standardize",
    "tcvm_test",
    "verify_fourth_moment",
    "verify_fourth_moments",
]
