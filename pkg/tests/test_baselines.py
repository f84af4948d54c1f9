
import numpy as np
import pytest
from scipy import stats as sstats

from tcvm import normal as nk
from tcvm.baselines import (
    BaselineKind,
    REJECTION_TAIL,
    anderson_darling,
    batch_statistics,
    bcmr,
    cramer_von_mises,
    shapiro_francia,
    shapiro_wilk,
    _bcmr_weights,
)
from tcvm.quadrature import integrate
from tcvm.statistic import compute_tstar, compute_untruncated


def _edf_integral(x, weight: str) -> float:
    """Direct quadrature of the defining EDF integral, substituting u = P(t).

    With parameters estimated by (mean, divisor-n sd), the integral becomes
    int_0^1 (F_n(t(u)) - u)^2 * w(u) du with w = 1/(u(1-u)) for the
    Anderson-Darling form and w = 1 for the quadratic form, and F_n constant
    between the probability images of the order statistics.
    """
    x = np.asarray(x, dtype=float)
    n = x.size
    u_pts = np.sort(nk.cdf((np.sort(x) - x.mean()) / x.std()))
    cuts = np.concatenate(([0.0], u_pts, [1.0]))
    total = 0.0
    for j in range(n + 1):
        lo, hi = cuts[j], cuts[j + 1]
        if hi <= lo:
            continue
        fn = j / n
        if weight == "ad":
            f = lambda u, fn=fn: (fn - u) ** 2 / (u * (1.0 - u))
            eps = 1e-11  # integrand is finite at 0/1 but 0/0 in floats
            total += integrate(f, max(lo, eps), min(hi, 1.0 - eps))
        else:
            f = lambda u, fn=fn: (fn - u) ** 2
            total += integrate(f, lo, hi)
    return n * total


class TestAndersonDarling:
    def test_negation_symmetry(self, rng):
        x = rng.standard_normal(30)
        assert anderson_darling(-x) == pytest.approx(anderson_darling(x), rel=1e-12)

    def test_affine_invariance(self, rng):
        x = rng.gamma(3.0, size=40)
        assert anderson_darling(2.0 * x + 5.0) == pytest.approx(
            anderson_darling(x), rel=1e-10
        )

    def test_matches_defining_integral(self, rng):
        x = rng.standard_normal(50)
        assert anderson_darling(x) == pytest.approx(
            _edf_integral(x, "ad"), abs=1e-6
        )

    def test_positive(self, rng):
        assert anderson_darling(rng.standard_normal(20)) > 0

    def test_clamp_warns_on_extreme_point(self, rng):
        # one dominant outlier at n = 100 standardizes to ~9.9 sd, where the
        # probability saturates to 1.0 in floats
        x = np.concatenate([rng.standard_normal(99), [1e9]])
        with pytest.warns(RuntimeWarning, match="clamped"):
            anderson_darling(x)


class TestCramerVonMises:
    def test_negation_symmetry(self, rng):
        x = rng.standard_normal(30)
        assert cramer_von_mises(-x) == pytest.approx(cramer_von_mises(x), rel=1e-12)

    def test_affine_invariance(self, rng):
        x = rng.gamma(3.0, size=40)
        assert cramer_von_mises(0.1 * x - 2.0) == pytest.approx(
            cramer_von_mises(x), rel=1e-10
        )

    def test_matches_defining_integral(self, rng):
        x = rng.standard_normal(50)
        assert cramer_von_mises(x) == pytest.approx(
            _edf_integral(x, "cvm"), abs=1e-6
        )


class TestShapiroWilk:
    def test_matches_scipy(self, rng):
        for n in (3, 5, 12, 50, 300):
            x = rng.standard_normal(n)
            assert shapiro_wilk(x) == pytest.approx(
                sstats.shapiro(x).statistic, abs=2e-6
            )

    def test_range(self, rng):
        for _ in range(5):
            w = shapiro_wilk(rng.standard_t(3, 25))
            assert 0.0 < w <= 1.0

    def test_normal_scores_near_one(self):
        scores = nk.quantile((np.arange(1, 51) - 0.375) / 50.25)
        assert shapiro_wilk(scores) > 0.99

    def test_affine_invariance(self, rng):
        x = rng.standard_normal(40)
        assert shapiro_wilk(7.0 * x - 3.0) == pytest.approx(shapiro_wilk(x), rel=1e-10)

    def test_size_limit(self, rng):
        with pytest.raises(ValueError):
            shapiro_wilk(rng.standard_normal(5001))


class TestShapiroFrancia:
    def test_normal_scores_near_one(self):
        scores = nk.quantile((np.arange(1, 51) - 0.375) / 50.25)
        assert shapiro_francia(scores) > 0.995

    def test_is_squared_correlation(self, rng):
        x = np.sort(rng.standard_normal(25))
        m = nk.quantile((np.arange(1, 26) - 0.375) / 25.25)
        r = np.corrcoef(x, m)[0, 1]
        # weights are not centred, but sum(m) = 0 by symmetry so the squared
        # correlation and the statistic agree
        assert shapiro_francia(x) == pytest.approx(r**2, rel=1e-10)

    def test_affine_invariance(self, rng):
        x = rng.random(30)
        assert shapiro_francia(-2.0 * x + 1.0) == pytest.approx(
            shapiro_francia(x), rel=1e-10
        )


class TestBcmr:
    def test_weights_telescope_to_zero(self):
        for n in (5, 50, 200):
            assert _bcmr_weights(n).sum() == pytest.approx(0.0, abs=1e-14)

    def test_weights_match_quadrature(self):
        n = 10
        w = _bcmr_weights(n)
        for i in (1, 4, 9):
            lo, hi = (i - 1) / n, i / n
            ref = integrate(lambda u: nk.quantile(u), max(lo, 1e-12), min(hi, 1 - 1e-12))
            assert w[i - 1] == pytest.approx(ref, abs=1e-9)

    def test_range_and_minimum_at_normal_quantiles(self, rng):
        scores = nk.quantile((np.arange(1, 51) - 0.5) / 50)
        base = bcmr(scores)
        contaminated = scores.copy()
        contaminated[-1] += 4.0
        assert 0.0 <= base < bcmr(contaminated) <= 1.0

    def test_affine_invariance(self, rng):
        x = rng.standard_t(4, 45)
        assert bcmr(0.5 * x + 20.0) == pytest.approx(bcmr(x), rel=1e-9)


class TestBatchStatistics:
    def test_matches_scalar_ops(self, rng):
        block = rng.standard_t(5, size=(4, 30))
        stats = batch_statistics(block, list(BaselineKind))
        scalar = {
            BaselineKind.TCVM: lambda x: compute_tstar(x).t_star,
            BaselineKind.CVM: compute_untruncated,
            BaselineKind.BCMR: bcmr,
            BaselineKind.AD: anderson_darling,
            BaselineKind.SW: shapiro_francia,
        }
        for kind, fn in scalar.items():
            for i in range(block.shape[0]):
                assert stats[kind][i] == pytest.approx(fn(block[i]), rel=1e-8), kind

    def test_tails_registry_complete(self):
        assert set(REJECTION_TAIL) == set(BaselineKind)
        assert REJECTION_TAIL[BaselineKind.SW] == "lower"
        assert REJECTION_TAIL[BaselineKind.TCVM] == "upper"

    def test_kind_parsing(self):
        assert BaselineKind.parse(" SW ") is BaselineKind.SW
        with pytest.raises(ValueError, match="unknown test kind"):
            BaselineKind.parse("banana")


def test_null_quantiles_match_published_tables(rng):
    """5% critical points with well-known reference values.

    Anderson-Darling (estimated parameters) ~ 0.752 and the normal-scores
    correlation statistic at n = 50 ~ 0.953.  A coarse simulation pins each
    within a tight band, which guards against any silent change of
    convention (divisor, tail, weights).
    """
    reps, n = 20_000, 50
    block = rng.standard_normal((reps, n))
    stats = batch_statistics(block, [BaselineKind.AD, BaselineKind.SW])
    ad_crit = np.quantile(stats[BaselineKind.AD], 0.95)
    sf_crit = np.quantile(stats[BaselineKind.SW], 0.05)
    assert ad_crit == pytest.approx(0.752, abs=0.025)
    assert sf_crit == pytest.approx(0.953, abs=0.004)
