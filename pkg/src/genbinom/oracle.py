"""Slow, independent reference implementations used by the tests.

Nothing here is on a hot path.  Each routine follows a textbook definition
as literally as is numerically reasonable, so that agreement with the main
modules is evidence rather than tautology.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .binomial import binom_continuous
from .gamma_core import is_gamma_pole
from .policy import AccuracyError, DomainError, QuadraturePolicy


@dataclass(frozen=True)
class OracleConfig:
    product_terms: int = 1_000_000
    quad_abs_tol: float = 1e-10
    domain_truncation: float = 60.0

    def __post_init__(self) -> None:
        if self.product_terms < 1000:
            raise DomainError("product_terms must be at least 1000")
        if not 0 < self.quad_abs_tol <= 1e-6:
            raise DomainError("quad_abs_tol must lie in (0, 1e-6]")
        if not self.domain_truncation > 0:
            raise DomainError("domain_truncation must be positive")

    @property
    def quadrature(self) -> QuadraturePolicy:
        return QuadraturePolicy(abs_tol=self.quad_abs_tol, rel_tol=1e-12, max_subintervals=500)


DEFAULT_ORACLE = OracleConfig()


# -- Γ from its definitions -------------------------------------------------------


def _log_product(t: float, n: int) -> float:
    k = np.arange(1, n + 1, dtype=float)
    return t * math.log(n) - float(np.sum(np.log1p(t / k)))


def gamma_limit_product(t: float, cfg: OracleConfig = DEFAULT_ORACLE) -> float:
    """Γ(t+1) = lim n^t Π_{k=1}^n (1 + t/k)^{-1}.

    The truncation error is a power series in 1/n, so one Richardson step on the
    products at ``n`` and ``2n`` removes the leading term.
    """
    if is_gamma_pole(t + 1):
        raise DomainError(f"Γ(t+1) has a pole at t = {t}")
    n = cfg.product_terms
    # factors with 1 + t/k <= 0 would break the logarithm; peel them off exactly
    head = 1.0
    k0 = 1
    while k0 <= n and 1 + t / k0 <= 0:
        head /= 1 + t / k0
        k0 += 1
    if k0 > 1:
        return head * _shifted_product(t, k0, n)
    g_n = math.exp(_log_product(t, n))
    g_2n = math.exp(_log_product(t, 2 * n))
    return 2 * g_2n - g_n


def _shifted_product(t: float, k0: int, n: int) -> float:
    def prod(m: int) -> float:
        k = np.arange(k0, m + 1, dtype=float)
        return math.exp(t * math.log(m) - float(np.sum(np.log1p(t / k))))

    return 2 * prod(2 * n) - prod(n)


def gamma_integral(t: float, cfg: OracleConfig = DEFAULT_ORACLE) -> float:
    """Γ(t+1) = ∫₀^∞ τ^t e^{-τ} dτ for t > -1.

    [0, 1] uses an algebraic weight so the τ^t singularity is integrated exactly
    by the rule; [1, T] is cut where e^{-T} T^t drops below the tolerance.
    """
    if not t > -1:
        raise DomainError(f"the Euler integral needs t > -1, got {t}")
    qp = cfg.quadrature
    head = qp.integrate(lambda s: math.exp(-s), 0.0, 1.0, weight="alg", wvar=(t, 0.0))
    big_t = max(2.0, t + 2.0)
    while math.exp(-big_t + t * math.log(big_t)) * (1 + abs(t)) > cfg.quad_abs_tol * 1e-2:
        big_t *= 1.5
    body = 0.0
    # split at multiples of the peak so the adaptive rule sees smooth pieces
    edges = np.unique(np.concatenate([[1.0], np.linspace(1.0, big_t, 9)]))
    for lo, hi in zip(edges[:-1], edges[1:]):
        body += qp.integrate(lambda s: s**t * math.exp(-s), float(lo), float(hi))
    return head + body


# -- brute-force series ------------------------------------------------------------


def brute_series(coef: Callable[[int], float], t: float, terms: int) -> float:
    """Plain partial sum Σ_{k<terms} coef(k) t^k, with math.fsum."""
    return math.fsum(coef(k) * t**k for k in range(terms))


# -- the integral Binomial Theorem ------------------------------------------------


@dataclass(frozen=True)
class IntegralSum:
    value: float
    tail: float
    pairs: tuple[float, ...]

    @property
    def period_sums(self) -> tuple[float, ...]:
        """Contributions of whole periods (two consecutive unit pairs)."""
        p = self.pairs
        return tuple(p[i] + p[i + 1] for i in range(0, len(p) - 1, 2))


def integral_binomial_theorem(
    y: float, cfg: OracleConfig = DEFAULT_ORACLE, tail_tol: float | None = None
) -> IntegralSum:
    """∫ binom(y, x) dx over the real line, expected to equal 2^y.

    The central piece [-1, y+1] is integrated once; beyond it the integrand
    oscillates with period 2 and decays like |x|^{-y-1}, so unit intervals
    mirrored about y/2 are added pairwise out to the truncation ``T``.  The tail
    is estimated from the decay rate of the last pair contributions.
    """
    if not y > -1:
        raise DomainError(f"need y > -1 for a convergent integral, got {y}")
    qp = cfg.quadrature
    f = lambda x: binom_continuous(y, x)  # noqa: E731
    total = qp.integrate(f, -1.0, y + 1.0, points=_integers_between(-1.0, y + 1.0))
    pairs: list[float] = []
    n_pairs = int(math.ceil(cfg.domain_truncation))
    for m in range(1, n_pairs + 1):
        left = qp.integrate(f, -m - 1.0, -float(m))
        right = qp.integrate(f, y + m, y + m + 1.0)
        pairs.append(left + right)
    total += math.fsum(pairs)
    tail = _tail_estimate(pairs)
    if tail_tol is not None and tail > tail_tol:
        raise AccuracyError(f"tail estimate {tail:.3g} exceeds {tail_tol:.3g}", partial=total)
    return IntegralSum(total, tail, tuple(pairs))


def _integers_between(a: float, b: float) -> list[float]:
    return [float(k) for k in range(math.ceil(a), math.floor(b) + 1) if a < k < b]


def _tail_estimate(pairs: list[float]) -> float:
    """Estimate of Σ_{m>M} p_m.

    Neighbouring pairs are combined, c_m = p_m + p_{m-1} ≈ C m^{-q}, with q fitted
    from c at M/2 and M; the combined tail is then about |c_M| M / (2(q-1)).  When
    the pairs still alternate in sign a Leibniz term |p_M| is added.
    """
    m = len(pairs)
    if m < 4:
        return math.inf
    a = abs(pairs[m // 2 - 1] + pairs[m // 2 - 2])
    b = abs(pairs[m - 1] + pairs[m - 2])
    alternating = pairs[-1] * pairs[-2] < 0
    leibniz = abs(pairs[-1]) if alternating else 0.0
    if b == 0:
        return leibniz
    if a == 0 or b >= a:
        return math.inf
    q = math.log(a / b) / math.log((m - 0.5) / (m // 2 - 0.5))
    if q <= 1:
        return math.inf
    return b * m / (2 * (q - 1)) + leibniz


def ellipse_arc_length(a: float, b: float, cfg: OracleConfig = DEFAULT_ORACLE) -> float:
    """4 ∫₀^{π/2} sqrt(a² sin²θ + b² cos²θ) dθ."""
    if a < 0 or b < 0 or a + b <= 0:
        raise DomainError("semi-axes must be non-negative and not both zero")
    qp = QuadraturePolicy(abs_tol=1e-13, rel_tol=1e-13, max_subintervals=500)
    return 4 * qp.integrate(lambda th: math.hypot(a * math.sin(th), b * math.cos(th)), 0.0, math.pi / 2)
