"""Reference implementations: Γ from its limit-product and integral definitions, the integral
Binomial Theorem and the ellipse arc length.  Expected values below are frozen from
independent sources (math.gamma, closed forms), never from the code under test."""

from __future__ import annotations

import math

import pytest

from genbinom.gamma_core import gamma
from genbinom.oracle import (
    OracleConfig,
    brute_series,
    ellipse_arc_length,
    gamma_integral,
    gamma_limit_product,
    integral_binomial_theorem,
)
from genbinom.policy import AccuracyError, DomainError

SPOTS = (-0.5, 0.0, 0.5, 1.0, 2.0, 4.0, 7.3)

# Γ(t + 1) at the spot values, frozen from math.gamma
FROZEN_GAMMA = {
    -0.5: 1.7724538509055159,
    0.0: 1.0,
    0.5: 0.886226925452758,
    1.0: 1.0,
    2.0: 2.0,
    4.0: 24.0,
    7.3: 9281.39252574655,
}


def test_frozen_table_matches_stdlib():
    for t, v in FROZEN_GAMMA.items():
        assert math.gamma(t + 1) == pytest.approx(v, rel=1e-15)


@pytest.mark.parametrize("t", SPOTS)
def test_limit_product(t):
    assert gamma_limit_product(t) == pytest.approx(FROZEN_GAMMA[t], rel=1e-6)
    assert gamma_limit_product(t) == pytest.approx(gamma(t + 1), rel=1e-5)


@pytest.mark.parametrize("t", SPOTS)
def test_integral(t):
    assert gamma_integral(t) == pytest.approx(FROZEN_GAMMA[t], rel=1e-8)
    assert gamma_integral(t) == pytest.approx(gamma(t + 1), rel=1e-7)


def test_reference_examples():
    assert gamma_limit_product(1) == pytest.approx(1, rel=1e-6)
    assert gamma_limit_product(4) == pytest.approx(24, rel=1e-6)
    assert gamma_limit_product(-0.5) == pytest.approx(math.sqrt(math.pi), rel=1e-5)
    assert gamma_integral(4) == pytest.approx(24, abs=1e-8)
    assert gamma_integral(0) == pytest.approx(1, abs=1e-12)
    assert gamma_integral(-0.5) == pytest.approx(math.sqrt(math.pi), rel=1e-7)


def test_limit_product_negative_non_integer():
    # factors 1 + t/k <= 0 are peeled off before the logarithm
    assert gamma_limit_product(-1.5) == pytest.approx(-2 * math.sqrt(math.pi), rel=1e-6)
    assert gamma_limit_product(-2.5) == pytest.approx(4 / 3 * math.sqrt(math.pi), rel=1e-6)


def test_limit_product_ln_gamma_101():
    # Γ(101) via the product, compared in log space
    assert math.log(gamma_limit_product(100, OracleConfig(product_terms=2_000_000))) == pytest.approx(
        363.7393755555635, rel=1e-8
    )


def test_domain_errors():
    with pytest.raises(DomainError):
        gamma_limit_product(-1)
    with pytest.raises(DomainError):
        gamma_limit_product(-3)
    with pytest.raises(DomainError):
        gamma_integral(-1.0)
    with pytest.raises(DomainError):
        OracleConfig(product_terms=999)
    with pytest.raises(DomainError):
        OracleConfig(quad_abs_tol=1e-3)


@pytest.mark.parametrize("y, T, tol", [(4, 60, 0.05), (6, 40, 0.01), (0, 200, 0.1)])
def test_integral_binomial_theorem(y, T, tol):
    r = integral_binomial_theorem(y, OracleConfig(domain_truncation=T))
    assert abs(r.value - 2**y) <= tol
    # the tail estimate must cover the actual truncation error
    assert abs(r.value - 2**y) <= r.tail


@pytest.mark.parametrize("y", [2, 2.5, 3, 4, 6])
def test_integral_binomial_theorem_monotone_periods(y):
    r = integral_binomial_theorem(y, OracleConfig(domain_truncation=40))
    per = r.period_sums
    assert all(p < 0 for p in per) or all(p > 0 for p in per)
    # partial sums over whole periods approach 2^y monotonically
    central = r.value - math.fsum(r.pairs)
    errs = []
    acc = central
    for p in per:
        acc += p
        errs.append(abs(acc - 2**y))
    assert all(b <= a for a, b in zip(errs, errs[1:]))


def test_integral_binomial_theorem_truncation_improves():
    errs = [abs(integral_binomial_theorem(3, OracleConfig(domain_truncation=T)).value - 8) for T in (10, 20, 40)]
    assert errs[0] > errs[1] > errs[2]


def test_integral_binomial_theorem_tail_tolerance():
    with pytest.raises(AccuracyError) as exc:
        integral_binomial_theorem(0, OracleConfig(domain_truncation=20), tail_tol=1e-6)
    assert exc.value.partial == pytest.approx(1, abs=0.1)
    with pytest.raises(DomainError):
        integral_binomial_theorem(-1)


def test_ellipse_arc_length():
    assert ellipse_arc_length(1, 1) == pytest.approx(2 * math.pi, rel=1e-13)
    assert ellipse_arc_length(1, 0) == pytest.approx(4, rel=1e-13)
    # 8 E(3/4) for semi-axes (2, 1), frozen from mpmath.ellipe
    assert ellipse_arc_length(2, 1) == pytest.approx(9.68844822054768, rel=1e-12)


def test_brute_series():
    # geometric series and exp
    assert brute_series(lambda k: 1.0, 0.5, 60) == pytest.approx(2, rel=1e-15)
    assert brute_series(lambda k: 1 / math.factorial(k), 1.0, 30) == pytest.approx(math.e, rel=1e-15)
