import math

import mpmath
import numpy as np
import pytest
from scipy.special import eval_genlaguerre

from ion_jcm.physics.specialfn import LaguerreEval, laguerre, laguerre_table, log_factorial_ratio

mpmath.mp.dps = 50


def explicit_sum(n, k, x):
    """L_n^k(x) = sum_j (-1)^j C(n+k, n-j) x^j / j!, in 50-digit arithmetic."""
    x = mpmath.mpf(x)
    return sum(
        (-1) ** j * mpmath.binomial(n + k, n - j) * x**j / mpmath.factorial(j)
        for j in range(n + 1)
    )


def absolute_sum(n, k, x):
    # Sum of |terms|, the natural error scale of the alternating series.
    return float(explicit_sum(n, k, -x))


def test_trivial_values():
    assert laguerre(0, 3, 0.01) == 1.0
    assert laguerre(1, 1, 0.04) == pytest.approx(1.96, abs=1e-15)


@pytest.mark.parametrize("x", [0.01, 0.04, 0.16])
@pytest.mark.parametrize("k", [0, 1, 2, 3, 4])
def test_matches_explicit_sum(k, x):
    for n in range(31):
        expected = float(explicit_sum(n, k, x))
        assert laguerre(n, k, x) == pytest.approx(expected, rel=1e-10)


@pytest.mark.parametrize("n,k,x", [(40, 2, 0.16), (80, 1, 0.16), (120, 2, 0.04), (7, 0, 2.5)])
def test_matches_explicit_sum_beyond_small_degree(n, k, x):
    expected = float(explicit_sum(n, k, x))
    assert abs(laguerre(n, k, x) - expected) <= 1e-12 * absolute_sum(n, k, x)


def test_matches_scipy():
    xs = [0.01, 0.04, 0.16]
    for k in (1, 2):
        for x in xs:
            table = laguerre_table(150, k, x)
            reference = eval_genlaguerre(np.arange(151), k, x)
            np.testing.assert_allclose(table, reference, rtol=1e-9, atol=1e-9)


def test_table_satisfies_recurrence():
    rng = np.random.default_rng(11)
    for _ in range(200):
        k = int(rng.integers(0, 9))
        x = float(rng.uniform(0.0, 1.0))
        values = laguerre_table(500, k, x)
        for m in rng.integers(1, 500, size=10):
            lhs = (m + 1) * values[m + 1]
            rhs = (2 * m + k + 1 - x) * values[m] - (m + k) * values[m - 1]
            scale = max(abs(lhs), abs((2 * m + k + 1 - x) * values[m]), abs((m + k) * values[m - 1]))
            assert abs(lhs - rhs) <= 1e-12 * scale


def test_single_point_is_last_table_entry():
    table = laguerre_table(30, 1, 0.09)
    assert LaguerreEval(30, 1, 0.09).evaluate() == table[-1]


@pytest.mark.parametrize("n,k,x", [(-1, 1, 0.1), (3, -1, 0.1), (3, 1, -0.5)])
def test_rejects_invalid_arguments(n, k, x):
    with pytest.raises(ValueError):
        LaguerreEval(n, k, x)


def test_log_factorial_ratio_examples():
    assert log_factorial_ratio(5, 5) == 0.0
    assert log_factorial_ratio(3, 0) == pytest.approx(math.log(6), rel=1e-15)
    assert log_factorial_ratio(0, 3) == -log_factorial_ratio(3, 0)


def test_log_factorial_ratio_large_arguments():
    expected = float(mpmath.log(mpmath.fprod(range(151, 171))))
    assert log_factorial_ratio(170, 150) == pytest.approx(expected, rel=1e-14)
    assert log_factorial_ratio(150, 170) == -log_factorial_ratio(170, 150)


def test_log_factorial_ratio_rejects_negative():
    with pytest.raises(ValueError):
        log_factorial_ratio(-1, 2)


def test_finite_over_supported_range():
    table = laguerre_table(10_000, 16, 4.0)
    assert np.all(np.isfinite(table))
    assert laguerre(0, 16, 4.0) == 1.0
