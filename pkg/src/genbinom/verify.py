"""Deterministic verification suites over the identities and numerical invariants.

Each check sweeps a fixed parameter range, records the largest residual and
where it occurred, and compares against a threshold.  Exact checks use a
threshold of 0 and pass only if every residual is exactly zero.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Iterator

import numpy as np

from . import genfunc, partial_sum
from .binomial import (
    GENERAL_IDENTITIES,
    binom_beta,
    binom_half_exact,
    binom_via_gauss,
    half_row,
    identity_residual,
    identity_sides,
    relative_residual,
    row_via_pascal,
)
from .exact import ExactHalfValue
from .gamma_core import gamma
from .mittag import CaputoGrid, caputo_derivative, ml_square_cauchy, ml_values, mittag_leffler
from .policy import DomainError, SeriesPolicy

SUITES = ("all", "exact", "float", "asymptotic", "ml")
BETA_GRID: tuple[Fraction, ...] = (Fraction(1, 4), Fraction(1, 2), Fraction(3, 4), Fraction(1), Fraction(3, 2))


@dataclass(frozen=True)
class CheckResult:
    name: str
    cases: int
    max_residual: float
    worst: str
    threshold: float
    passed: bool


@dataclass(frozen=True)
class VerifyReport:
    suite: str
    checks: tuple[CheckResult, ...] = field(default_factory=tuple)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def get(self, name: str) -> CheckResult:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)


Case = tuple[str, float]  # (parameter description, residual)


def _collect(name: str, threshold: float, cases: Iterable[Case], exact: bool = False) -> CheckResult:
    count, worst_val, worst_at, ok = 0, 0.0, "", True
    for where, r in cases:
        r = float(r)
        count += 1
        if exact:
            ok = ok and r == 0
        if r > worst_val or (count == 1 and not worst_at):
            worst_val, worst_at = r, where
    if not exact:
        ok = worst_val <= threshold
    return CheckResult(name, count, worst_val, worst_at, threshold, bool(ok))


def _exact_abs(v: ExactHalfValue) -> float:
    return 0.0 if v == 0 else max(abs(float(v)), math.ulp(0.0))


# -- exact -----------------------------------------------------------------------


def _exact_identity(name: str, n_max: int, ks: Callable[[int], Iterable[int]]) -> Iterator[Case]:
    for n in range(n_max + 1):
        for k in ks(n):
            yield f"n={n},k={k}", _exact_abs(identity_residual(name, n, k, exact=True))


def _exact_cancellation(n_max: int) -> Iterator[Case]:
    for n in range(n_max + 1):
        for k in range(n + 1):
            for h in range(n - k + 1):
                yield f"n={n},k={k},h={h}", _exact_abs(identity_residual("cancellation", n, k, h, exact=True))


def _exact_pointwise(name: str, n_range: Iterable[int]) -> Iterator[Case]:
    for n in n_range:
        yield f"n={n}", _exact_abs(identity_residual(name, n, exact=True))


def _row_agreement(n_max: int) -> Iterator[Case]:
    for n in range(n_max + 1):
        a, b = row_via_pascal(n, -9, n + 9), half_row(n, -9, n + 9)
        for k in a.ks:
            yield f"n={n},k={k}", _exact_abs(a[k] - b[k])


def _finite_sums(n_max: int) -> Iterator[Case]:
    for name in partial_sum.FINITE_SUMS:
        for n in range(1 if name == "s4" else 0, n_max + 1):
            forms = partial_sum.finite_sum_forms(name, n)
            yield f"{name},n={n}", max(_exact_abs(f - forms[0]) for f in forms[1:])


def _row_sum_forms(n_max: int) -> Iterator[Case]:
    for n in range(n_max + 1):
        forms = partial_sum.row_sum_forms(n)
        direct = partial_sum.phibar_exact(n, 1)
        yield f"n={n}", max(_exact_abs(f - direct) for f in forms)


def exact_checks(n_max: int = 60, finite_n_max: int = 200) -> list[CheckResult]:
    around = lambda n: range(-1, n + 2)  # noqa: E731
    out = [
        _collect(name, 0.0, _exact_identity(name, n_max, around), exact=True)
        for name in ("pascal", "committee", "recursion", "difference")
    ]
    out.append(_collect("reflection", 0.0, _exact_identity("reflection", n_max, around), exact=True))
    out.append(_collect("cancellation", 0.0, _exact_cancellation(n_max), exact=True))
    out.append(
        _collect("even_even", 0.0, _exact_identity("even_even", n_max // 2, lambda n: range(n + 1)), exact=True)
    )
    for name in ("value_k2", "value_minus1", "k1_closed", "k1_gamma"):
        out.append(_collect(name, 0.0, _exact_pointwise(name, range(n_max + 1)), exact=True))
    for name in ("a_sum", "a_sum_value"):
        out.append(_collect(name, 0.0, _exact_pointwise(name, range(2, n_max + 1)), exact=True))
    out.append(_collect("pascal_rows", 0.0, _row_agreement(40), exact=True))
    out.append(_collect("row_sum_forms", 0.0, _row_sum_forms(50), exact=True))
    out.append(_collect("finite_sums", 0.0, _finite_sums(finite_n_max), exact=True))
    return out


# -- float -----------------------------------------------------------------------


def _float_general(name: str, n_max: int) -> Iterator[Case]:
    for beta in BETA_GRID:
        for n in range(n_max + 1):
            for k in range(n + 1):
                hs = range(n - k + 1) if name == "cancellation" else (0,)
                for h in hs:
                    lhs, rhs = identity_sides(name, n, k, h, beta=beta)
                    yield f"beta={beta},n={n},k={k},h={h}", relative_residual(lhs, rhs)


def _float_half(n_max: int) -> Iterator[Case]:
    for name in ("pascal", "committee", "recursion", "difference"):
        for n in range(n_max + 1):
            for k in range(-1, n + 2):
                lhs, rhs = identity_sides(name, n, k)
                # magnitude of the coefficients involved, for sides that cancel to zero
                scale = sum(abs(binom_beta(a, b, 0.5)) for a, b in ((n, k), (n, k + 2), (n + 2, k + 2)))
                yield f"{name},n={n},k={k}", _mixed(float(lhs), float(rhs), scale)


def _mixed(a: float, b: float, scale: float) -> float:
    """Relative difference, measured against ``scale`` when the values themselves vanish."""
    denom = max(abs(a), abs(b), scale * 1e-3)
    return abs(a - b) / denom if denom else 0.0


def _exact_vs_float(n_max: int) -> Iterator[Case]:
    for n in range(n_max + 1):
        for k in range(-3, n + 4):
            yield f"n={n},k={k}", relative_residual(binom_half_exact(n, k), binom_beta(n, k, 0.5))


def _gauss(n_max: int) -> Iterator[Case]:
    for beta in (Fraction(1, 4), Fraction(1, 2), Fraction(1)):
        for n in range(n_max + 1):
            for k in range(n + 1):
                yield f"beta={beta},n={n},k={k}", relative_residual(binom_via_gauss(n, k, beta), binom_beta(n, k, beta))


GF_TS = (-0.9, -0.5, 0.0, 0.3, 0.9)


def _genfunc_routes(routes: tuple[str, ...], n_max: int) -> Iterator[Case]:
    for n in range(n_max + 1):
        for t in GF_TS:
            ref = genfunc.phi_closed(n, t)
            for r in routes:
                v = genfunc.phi(n, t, r).value  # type: ignore[arg-type]
                yield f"{r},n={n},t={t}", abs(v - ref) / abs(ref)


def _phi2_at_one() -> Iterator[Case]:
    target = 3 + 2 / math.pi
    pol = SeriesPolicy(rel_tol=1e-8)
    yield "series", abs(genfunc.phi_series(2, 1.0, pol).value - target) / target
    for r in ("recursive", "closed", "integral"):
        yield r, abs(genfunc.phi(2, 1.0, r).value - target) / target  # type: ignore[arg-type]


PS_TS = (-1.0, -0.5, 0.0, 0.5, 1.0)


def _partial_routes(routes: tuple[str, ...], n_max: int) -> Iterator[Case]:
    for n in range(n_max + 1):
        for t in PS_TS:
            ref = partial_sum.phibar_direct(n, t)
            scale = partial_sum.phibar_direct(n, abs(t))  # sum of |terms|
            for r in routes:
                v = partial_sum.phibar(n, t, r).value  # type: ignore[arg-type]
                yield f"{r},n={n},t={t}", _mixed(v, ref, scale)


def _wz() -> Iterator[Case]:
    yield "W(1/2)", abs(genfunc.w_series(0.5).value - math.pi / 2) / (math.pi / 2)
    yield "Z(1/8)", abs(genfunc.central_series(1 / 8).value - math.sqrt(2)) / math.sqrt(2)


def _argmax(n_max: int) -> Iterator[Case]:
    for i in range(1, 21):
        beta = Fraction(i, 10)
        for n in range(n_max + 1):
            vals = [binom_beta(n, k, beta) for k in range(n + 1)]
            top = max(vals)
            at = {k for k, v in enumerate(vals) if v >= top * (1 - 1e-14)}
            yield f"beta={beta},n={n}", 0.0 if at <= {n // 2, (n + 1) // 2} and at else 1.0


def float_checks() -> list[CheckResult]:
    out = [
        _collect("reflection", 1e-12, _float_general("reflection", 40)),
        _collect("cancellation", 1e-11, _float_general("cancellation", 40)),
        _collect("boundary", 1e-12, _float_general("boundary", 40)),
        _collect("half_identities", 1e-10, _float_half(40)),
        _collect("exact_vs_float", 1e-12, _exact_vs_float(40)),
        _collect("gauss_at_one", 1e-10, _gauss(20)),
        _collect("genfunc_routes", 1e-8, _genfunc_routes(("series", "recursive"), 20)),
        _collect("genfunc_integral", 1e-6, _genfunc_routes(("integral",), 20)),
        _collect("phi2_at_one", 1e-6, _phi2_at_one()),
        _collect("partial_sum_routes", 1e-11, _partial_routes(("recursive", "closed"), 30)),
        _collect("partial_sum_integral", 1e-7, _partial_routes(("integral",), 30)),
        _collect("w_z_values", 1e-12, _wz()),
        _collect("argmax", 0.0, _argmax(20)),
    ]
    return out


# -- asymptotic -------------------------------------------------------------------


def _ratio(n: int) -> float:
    return partial_sum.row_sum(n) / 2 ** (n / 2 + 1)


def _monotone(seq: list[float], label: str) -> Iterator[Case]:
    """Residual is the size of any step away from 1."""
    for i in range(len(seq) - 1):
        yield f"{label},n={i + 1}", max(0.0, abs(seq[i + 1] - 1) - abs(seq[i] - 1))


def asymptotic_checks() -> list[CheckResult]:
    fig4 = [genfunc.phi_closed(n, 1.0) / 2 ** (n / 2 + 1) for n in range(51)]
    fig5 = [_ratio(n) for n in range(51)]
    phi_t03 = [genfunc.phi_closed(n, 0.3) / genfunc.phi_asymptotic(n, 0.3) for n in range(0, 401, 20)]
    return [
        _collect("row_sum_n40", 1e-3, [("n=40", abs(_ratio(40) - 1))]),
        _collect("row_sum_n80", 1e-6, [("n=80", abs(_ratio(80) - 1))]),
        _collect("phi_ratio_t1_n40", 1e-3, [("n=40", abs(fig4[40] - 1))]),
        _collect("phi_ratio_t03_n400", 1e-3, [("n=400", abs(phi_t03[-1] - 1))]),
        _collect("figure4_monotone", 0.0, _monotone(fig4, "phi")),
        _collect("figure5_monotone", 0.0, _monotone(fig5, "phibar")),
        _collect("phi_t03_monotone", 0.0, _monotone(phi_t03, "phi(0.3)")),
    ]


# -- Mittag-Leffler / Caputo -------------------------------------------------------


def _exp_cases() -> Iterator[Case]:
    for x in np.linspace(-2.0, 2.0, 41):
        yield f"x={x:.2f}", abs(mittag_leffler(1, float(x)).value / math.exp(x) - 1)


def _cauchy_cases() -> Iterator[Case]:
    for beta in (Fraction(1, 2), Fraction(3, 4)):
        for x in np.linspace(-0.5, 1.0, 16):
            e = mittag_leffler(float(beta), float(x)).value
            yield f"beta={beta},x={x:.2f}", abs(ml_square_cauchy(beta, float(x), 60) / e**2 - 1)


def _eigen_cases(nodes: int) -> Iterator[Case]:
    grid = CaputoGrid.graded(2.0, nodes, 2.0)
    picks = [i for i in range(grid.mesh.size) if grid.mesh[i] >= 0.25]
    picks = picks[:: max(1, len(picks) // 40)] + [grid.mesh.size - 1]
    for mu in (-1.0, -0.5):
        u = ml_values(0.5, mu * np.sqrt(grid.mesh))
        for i in picks:
            d = caputo_derivative(u, grid, 0.5, index=i)
            yield f"mu={mu},x={grid.mesh[i]:.4f}", abs(d - mu * u[i]) / abs(mu * u[i])


def _caputo_simple() -> Iterator[Case]:
    grid = CaputoGrid.graded(1.0, 10_000, 2.0)
    const = np.full(grid.mesh.size, 3.0)
    for i in (1, 100, 5000, grid.mesh.size - 1):
        yield f"const,i={i}", abs(caputo_derivative(const, grid, 0.5, index=i))
    yield "linear,x=1", abs(caputo_derivative(grid.mesh, grid, 0.5, 1.0) - 2 / math.sqrt(math.pi))


def ml_checks(nodes: int = 10_000) -> list[CheckResult]:
    sq = ml_square_cauchy(0.5, 1.0, 60)
    e2 = mittag_leffler(0.5, 2.0).value
    return [
        _collect("exp_identity", 1e-12, _exp_cases()),
        _collect("cauchy_square", 1e-8, _cauchy_cases()),
        _collect("non_semigroup", 0.0, [("beta=1/2", 0.0 if sq < e2 else sq - e2)]),
        _collect("caputo_basic", 1e-4, _caputo_simple()),
        _collect("eigenfunction", 1e-2, _eigen_cases(nodes)),
        _collect("envelope_half", 5e-3, [("x=100", abs(mittag_leffler(0.5, -10.0).value / (0.1 / gamma(0.5)) - 1))]),
    ]


_SUITE_FUNCS: dict[str, Callable[[], list[CheckResult]]] = {
    "exact": exact_checks,
    "float": float_checks,
    "asymptotic": asymptotic_checks,
    "ml": ml_checks,
}


def run_suite(suite: str = "all", thresholds: dict[str, float] | None = None) -> VerifyReport:
    """Run a named suite.  ``thresholds`` overrides float thresholds by check name."""
    if suite not in SUITES:
        raise DomainError(f"unknown suite {suite!r}; choose from {', '.join(SUITES)}")
    names = [s for s in SUITES if s != "all"] if suite == "all" else [suite]
    checks: list[CheckResult] = []
    for s in names:
        for c in _SUITE_FUNCS[s]():
            c = _rethreshold(c, thresholds)
            if suite == "all":
                c = CheckResult(f"{s}.{c.name}", c.cases, c.max_residual, c.worst, c.threshold, c.passed)
            checks.append(c)
    return VerifyReport(suite, tuple(checks))


def _rethreshold(c: CheckResult, thresholds: dict[str, float] | None) -> CheckResult:
    # exact checks keep their zero threshold
    if not thresholds or c.name not in thresholds or c.threshold == 0.0:
        return c
    t = float(thresholds[c.name])
    return CheckResult(c.name, c.cases, c.max_residual, c.worst, t, c.max_residual <= t)


__all__ = [
    "BETA_GRID",
    "CheckResult",
    "GENERAL_IDENTITIES",
    "SUITES",
    "VerifyReport",
    "asymptotic_checks",
    "exact_checks",
    "float_checks",
    "ml_checks",
    "run_suite",
]
