"""Acceptance criteria 1-12, each at its stated tolerance and runtime limit.

Run with ``pytest tests/test_acceptance.py`` (or ``python3 tests/test_acceptance.py``);
the terminal summary prints one PASS/FAIL line per criterion.
"""

from __future__ import annotations

import math
import sys
import time
from fractions import Fraction

import numpy as np
import pytest

from genbinom import gamma_core
from genbinom.binomial import binom_beta, identity_residual, identity_sides, relative_residual
from genbinom.exact import ExactHalfValue
from genbinom.genfunc import (
    central_series,
    phi_closed,
    phi_integral,
    phi_recursive,
    phi_series,
    w_series,
    z_series,
)
from genbinom.hypergeom import ellipse_perimeter, gauss_at_one
from genbinom.mittag import CaputoGrid, caputo_derivative, mittag_leffler, ml_square_cauchy, ml_values
from genbinom.oracle import ellipse_arc_length, gamma_integral, gamma_limit_product, integral_binomial_theorem
from genbinom.partial_sum import FINITE_SUMS, finite_sum, phibar_direct, phibar_exact, row_sum, row_sum_exact
from genbinom.verify import float_checks

criterion = pytest.mark.criterion
HALF = Fraction(1, 2)


class Timer:
    def __init__(self, limit: float) -> None:
        self.limit = limit

    def __enter__(self) -> Timer:
        self.start = time.perf_counter()
        return self

    def __exit__(self, *exc) -> None:
        self.elapsed = time.perf_counter() - self.start
        if exc[0] is None:
            assert self.elapsed < self.limit, f"took {self.elapsed:.2f} s, limit {self.limit} s"


@criterion(1, "exact identity suite, zero residual, n <= 60, < 10 s")
def test_criterion_01():
    with Timer(10.0):
        for n in range(61):
            for k in range(-1, n + 2):
                for name in ("pascal", "committee", "recursion", "difference", "reflection"):
                    r = identity_residual(name, n, k, exact=True)
                    assert r == 0, (name, n, k, r)
            for k in range(n + 1):
                for h in range(n - k + 1):
                    assert identity_residual("cancellation", n, k, h, exact=True) == 0
            for name in ("value_k2", "value_minus1"):
                assert identity_residual(name, n, exact=True) == 0
            if n >= 2:
                assert identity_residual("a_sum", n, exact=True) == 0
        for n in range(31):
            for k in range(n + 1):
                assert identity_residual("even_even", n, k, exact=True) == 0


@criterion(2, "float identities, beta in {1/4,1/2,3/4,1,3/2}, n <= 40, <= 1e-10, < 10 s")
def test_criterion_02():
    betas = (Fraction(1, 4), HALF, Fraction(3, 4), Fraction(1), Fraction(3, 2))
    with Timer(10.0):
        for beta in betas:
            for n in range(41):
                for k in range(n + 1):
                    assert relative_residual(*identity_sides("reflection", n, k, beta=beta)) <= 1e-10
                    assert relative_residual(*identity_sides("boundary", n, k, beta=beta)) <= 1e-10
                    for h in range(n - k + 1):
                        assert relative_residual(*identity_sides("cancellation", n, k, h, beta=beta)) <= 1e-10
        checks = {c.name: c for c in float_checks()}
        for name in ("half_identities", "exact_vs_float"):
            assert checks[name].max_residual <= 1e-10, checks[name]


@criterion(3, "generating-function routes, n <= 20; phi_2(1) = 3 + 2/pi by four routes")
def test_criterion_03():
    for n in range(21):
        for t in (-0.9, -0.5, 0.0, 0.3, 0.9):
            ref = phi_closed(n, t)
            assert relative_residual(phi_series(n, t).value, ref) <= 1e-8
            assert relative_residual(phi_recursive(n, t), ref) <= 1e-8
            assert relative_residual(phi_integral(n, t), ref) <= 1e-6
    target = 3 + 2 / math.pi
    for value in (phi_series(2, 1).value, phi_recursive(2, 1), phi_closed(2, 1), phi_integral(2, 1)):
        assert abs(value - target) <= 1e-6


@criterion(4, "partial-sum closed sums at t = 1")
def test_criterion_04():
    assert phibar_exact(3, 1) == ExactHalfValue(5)
    assert phibar_direct(3, 1) == 5.0
    assert abs(row_sum(4) - (4 + 32 / (3 * math.pi))) <= 1e-12
    for n in range(51):
        closed, direct = float(row_sum_exact(n)), phibar_direct(n, 1)
        assert abs(closed - direct) <= 1e-12 * direct


@criterion(5, "asymptotic law 2^{n/2+1}; figure 4/5 trends, < 5 s")
def test_criterion_05():
    with Timer(5.0):
        ratio = lambda n: row_sum(n) / 2 ** (n / 2 + 1)  # noqa: E731
        assert abs(ratio(40) - 1) <= 1e-3
        assert abs(ratio(80) - 1) <= 1e-6
        for f in (lambda n: phi_closed(n, 1.0) / 2 ** (n / 2 + 1), ratio):
            dev = [abs(f(n) - 1) for n in range(0, 51, 2)]
            assert all(b < a for a, b in zip(dev, dev[1:]))
            dev = [abs(f(n) - 1) for n in range(1, 51, 2)]
            assert all(b <= a for a, b in zip(dev, dev[1:]))


@criterion(6, "W(1/2) = pi/2 and Z(1/8) = sqrt 2 from the series within 1e-12")
def test_criterion_06():
    assert abs(w_series(0.5).value - math.pi / 2) <= 1e-12
    assert abs(central_series(1 / 8).value - math.sqrt(2)) <= 1e-12
    assert abs(z_series(0.5).value - math.sqrt(2)) <= 1e-12


@criterion(7, "finite sums s1-s5 exact for n <= 200")
def test_criterion_07():
    for name in FINITE_SUMS:
        for n in range(1 if name == "s4" else 0, 201):
            lhs, rhs = finite_sum(name, n)
            assert lhs == rhs, (name, n)


@criterion(8, "Mittag-Leffler: exp, Cauchy square, non-semigroup")
def test_criterion_08():
    for x in np.linspace(-2, 2, 41):
        assert relative_residual(mittag_leffler(1, x).value, math.exp(x)) <= 1e-12
    for beta in (0.5, 0.75):
        for x in np.linspace(-0.5, 1, 16):
            assert relative_residual(ml_square_cauchy(beta, x, 60), mittag_leffler(beta, x).value ** 2) <= 1e-8
    assert mittag_leffler(0.5, 1).value ** 2 < mittag_leffler(0.5, 2).value


@criterion(9, "Caputo eigenfunction, constant and linear cases")
def test_criterion_09():
    grid = CaputoGrid.graded(2.0, 10_000, grading=2.0)
    picks = np.nonzero(grid.mesh >= 0.25)[0][::100]
    for mu in (-1.0, -0.5):
        samples = ml_values(0.5, mu * np.sqrt(grid.mesh))
        for i in picks:
            d = caputo_derivative(samples, grid, 0.5, index=int(i))
            assert abs(d - mu * samples[i]) <= 1e-2 * abs(mu * samples[i])
    const = np.full(grid.mesh.shape, 2.5)
    assert all(caputo_derivative(const, grid, 0.5, index=int(i)) == 0.0 for i in picks)
    lin = CaputoGrid(np.linspace(0, 1, 101))
    assert abs(caputo_derivative(lambda s: s, lin, 0.5, 1.0) - 2 / math.sqrt(math.pi)) <= 1e-4


@criterion(10, "integral binomial theorem, y = 4 and y = 6, < 30 s")
def test_criterion_10():
    from genbinom.oracle import OracleConfig

    with Timer(30.0):
        assert abs(integral_binomial_theorem(4, OracleConfig(domain_truncation=60)).value - 16) <= 0.05
        assert abs(integral_binomial_theorem(6, OracleConfig(domain_truncation=40)).value - 64) <= 0.01


@criterion(11, "Gauss summation vs binom_beta; ellipse perimeters")
def test_criterion_11():
    for beta in (Fraction(1, 4), HALF, Fraction(1)):
        for n in range(21):
            for k in range(n + 1):
                g = gauss_at_one(-beta * k, -beta * (n - k), 1)
                assert relative_residual(g, binom_beta(n, k, beta)) <= 1e-10
    assert abs(ellipse_perimeter(1, 0) - 4) <= 1e-10
    assert relative_residual(ellipse_perimeter(2, 1), ellipse_arc_length(2, 1)) <= 1e-8


@criterion(12, "Gamma oracles: limit product within 1e-5, integral within 1e-7")
def test_criterion_12():
    for t in (1.0, 4.0, -0.5):
        assert abs(gamma_limit_product(t) - gamma_core.gamma(t + 1)) <= 1e-5
    for t in (4.0, 0.0, -0.5):
        assert abs(gamma_integral(t) - gamma_core.gamma(t + 1)) <= 1e-7


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q"]))
