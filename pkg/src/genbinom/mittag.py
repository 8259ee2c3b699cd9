"""Real-argument Mittag-Leffler function, its Cauchy-product square and a Caputo derivative.

``E_beta(x) = sum_n x^n / Γ(beta n + 1)`` is summed directly.  Terms are formed
in log-space.  When the alternating series for negative ``x`` cancels beyond
what double precision can carry, the same sum is repeated in multiprecision
(mpmath) at a working precision derived from the size of the largest term.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Sequence

import mpmath
import numpy as np

from .binomial import binom_beta
from .gamma_core import gamma, reciprocal_gamma
from .policy import DEFAULT_SERIES, AccuracyError, DomainError, SeriesOutcome, SeriesPolicy

_EPS = np.finfo(float).eps
_LOG_MAX = 700.0  # largest term kept in double precision


@dataclass(frozen=True)
class MLQuery:
    beta: float
    x: float
    policy: SeriesPolicy = DEFAULT_SERIES

    def __post_init__(self) -> None:
        if not self.beta > 0:
            raise DomainError(f"beta must be positive, got {self.beta}")


def _log_term(beta: float, n: int, log_ax: float) -> float:
    return n * log_ax - math.lgamma(beta * n + 1)


def _peak_index(beta: float, ax: float) -> int:
    # term magnitude peaks where Γ(βn+1) grows as fast as ax^n, i.e. βn ≈ ax^{1/β}
    if ax <= 1:
        return 0
    return int(ax ** (1.0 / beta) / beta) + 1


def mittag_leffler(q: MLQuery | float, x: float | None = None, policy: SeriesPolicy | None = None) -> SeriesOutcome:
    """E_beta(x) for real ``x``.

    Accepts either an :class:`MLQuery` or ``(beta, x[, policy])``.  Past the
    largest term the ratio of consecutive terms decreases monotonically to 0, so
    ``t_{n+1} / (1 - t_{n+2}/t_{n+1})`` bounds the tail.
    """
    if not isinstance(q, MLQuery):
        q = MLQuery(q, x, policy or DEFAULT_SERIES)  # type: ignore[arg-type]
    beta, x, policy = float(q.beta), float(q.x), q.policy
    if x == 0:
        return SeriesOutcome(1.0, 1, 0.0, True)
    log_ax = math.log(abs(x))
    start = _peak_index(beta, abs(x))
    if start + 8 > policy.max_terms:
        raise AccuracyError(f"E_{beta}({x}) needs more than {policy.max_terms} terms")

    logs: list[float] = []
    log_tail = math.inf
    for n in range(policy.max_terms):
        logs.append(_log_term(beta, n, log_ax))
        if n < start:
            continue
        lt1, lt2 = _log_term(beta, n + 1, log_ax), _log_term(beta, n + 2, log_ax)
        if lt2 >= lt1:
            continue
        log_tail = lt1 - math.log1p(-math.exp(lt2 - lt1))
        # against the largest term: below it nothing changes in double precision
        if log_tail < max(logs) + math.log(_EPS * 1e-2):
            break
    else:
        raise AccuracyError(f"E_{beta}({x}) did not converge within {policy.max_terms} terms")
    n_used = len(logs)
    peak = max(logs)
    if x > 0:
        if peak > _LOG_MAX:
            raise OverflowError(f"E_{beta}({x}) exceeds the double range")
        mags = np.exp(np.array(logs) - peak)
        value = math.fsum(mags) * math.exp(peak)
        bound = 4 * _EPS * abs(value) + math.exp(log_tail)
        return SeriesOutcome(value, n_used, bound, True)
    if peak > _LOG_MAX:
        return _mp_sum(beta, x, start, peak, policy)

    signs = np.where(np.arange(n_used) % 2 == 0, 1.0, -1.0)
    mags = np.exp(np.array(logs))
    value = math.fsum(mags * signs)
    rounding = 4 * _EPS * math.fsum(mags)
    bound = rounding + math.exp(log_tail)
    if bound <= max(policy.rel_tol * abs(value), policy.abs_tol):
        return SeriesOutcome(value, n_used, bound, True)
    return _mp_sum(beta, x, start, peak, policy)


def _mp_sum(beta: float, x: float, start: int, log_peak: float, policy: SeriesPolicy) -> SeriesOutcome:
    """Alternating sum in multiprecision, with enough digits to absorb the cancellation."""
    digits = int(max(log_peak, 0.0) / math.log(10)) + 25
    log_ax = math.log(abs(x))
    with mpmath.workdps(digits):
        xm = mpmath.mpf(x)
        bm = mpmath.mpf(beta)
        total = mpmath.mpf(0)
        power = mpmath.mpf(1)
        for n in range(policy.max_terms):
            total += power * mpmath.rgamma(bm * n + 1)
            power *= xm
            if n < start:
                continue
            lt1, lt2 = _log_term(beta, n + 1, log_ax), _log_term(beta, n + 2, log_ax)
            if lt2 >= lt1:
                continue
            log_tail = lt1 - math.log1p(-math.exp(lt2 - lt1))
            if log_tail > 0:
                continue
            tail = math.exp(log_tail)
            value = float(total)
            if policy.satisfied(value, tail) or tail <= _EPS * abs(value) * 1e-2:
                return SeriesOutcome(value, n + 1, tail, True)
    raise AccuracyError(f"E_{beta}({x}) did not converge within {policy.max_terms} terms", partial=float(total))


def ml_values(beta: float, xs: Sequence[float] | np.ndarray, policy: SeriesPolicy = DEFAULT_SERIES) -> np.ndarray:
    """E_beta at each point of ``xs``."""
    xs = np.asarray(xs, dtype=float)
    return np.array([mittag_leffler(MLQuery(beta, float(v), policy)).value for v in xs.ravel()]).reshape(xs.shape)


def ml_square_cauchy(beta: float, x: float, n_terms: int) -> float:
    """Cauchy-product square sum_{n<N} sum_{k<=n} [n k]_beta x^n / Γ(beta n + 1)."""
    if n_terms < 4:
        raise DomainError("n_terms must be at least 4")
    if not beta > 0:
        raise DomainError(f"beta must be positive, got {beta}")
    terms = []
    for n in range(n_terms):
        inner = math.fsum(binom_beta(n, k, beta) for k in range(n + 1))
        terms.append(inner * x**n * reciprocal_gamma(beta * n + 1))
    return math.fsum(terms)


def ml_envelopes(beta: float, x: float) -> tuple[float, float]:
    """Small- and large-argument envelopes ``(e0(x), einf(x))`` of E_beta(-x^beta).

    e0(x) = exp(-x^beta / Γ(1+beta)), einf(x) = x^-beta / Γ(1-beta).  The
    limits E_beta(-x^beta)/e0 → 1 (x → 0) and E_beta(-x^beta)/einf → 1
    (x → ∞) hold for the completely monotone branch, i.e. negative argument.
    """
    if not 0 < beta < 1:
        raise DomainError(f"envelopes need 0 < beta < 1, got {beta}")
    if not x > 0:
        raise DomainError(f"envelopes need x > 0, got {x}")
    xb = x**beta
    return math.exp(-xb / gamma(1 + beta)), xb ** -1 / gamma(1 - beta)


# -- Caputo derivative ---------------------------------------------------------


@dataclass(frozen=True)
class CaputoGrid:
    mesh: np.ndarray
    grading: float = 1.0

    def __post_init__(self) -> None:
        mesh = np.asarray(self.mesh, dtype=float)
        if mesh.ndim != 1 or mesh.size < 16:
            raise DomainError("a Caputo grid needs at least 16 nodes")
        if mesh[0] != 0.0:
            raise DomainError("the mesh must start at 0")
        if np.any(np.diff(mesh) <= 0):
            raise DomainError("the mesh must be strictly increasing")
        if self.grading < 1:
            raise DomainError("grading exponent must be >= 1")
        mesh.setflags(write=False)
        object.__setattr__(self, "mesh", mesh)

    @classmethod
    def graded(cls, x_max: float, nodes: int, grading: float = 2.0) -> CaputoGrid:
        """Nodes ``x_max (i / (nodes-1))**grading``, clustered near 0."""
        s = np.linspace(0.0, 1.0, nodes)
        return cls(x_max * s**grading, grading)

    def index_of(self, x: float) -> int:
        i = int(np.searchsorted(self.mesh, x))
        if i >= self.mesh.size or self.mesh[i] != x:
            raise DomainError(f"{x} is not a mesh node")
        return i


def caputo_derivative(
    u: Callable[[np.ndarray], np.ndarray] | np.ndarray,
    grid: CaputoGrid,
    beta: float,
    x: float | None = None,
    *,
    index: int | None = None,
) -> float:
    """Caputo derivative of order ``beta`` at a mesh node by L1 product integration.

    ``u`` is either a callable evaluated on the mesh or the samples themselves.
    On each cell ``u`` is replaced by its linear interpolant and the kernel
    ``(x - s)^-beta`` is integrated exactly, so the weak singularity at ``s = x`` is
    handled without quadrature error.
    """
    if not 0 < beta < 1:
        raise DomainError(f"Caputo order must lie in (0, 1), got {beta}")
    m = grid.index_of(x) if index is None else index
    if not 0 <= m < grid.mesh.size:
        raise DomainError(f"node index {m} out of range")
    samples = np.asarray(u(grid.mesh) if callable(u) else u, dtype=float)
    if samples.shape != grid.mesh.shape:
        raise DomainError("samples must match the mesh")
    return float(_l1_weights_dot(samples, grid.mesh, m, beta))


def _l1_weights_dot(samples: np.ndarray, mesh: np.ndarray, m: int, beta: float) -> float:
    if m == 0:
        return 0.0
    s = mesh[: m + 1]
    xm = s[-1]
    du = np.diff(samples[: m + 1])
    h = np.diff(s)
    w = ((xm - s[:-1]) ** (1 - beta) - (xm - s[1:]) ** (1 - beta)) / (1 - beta)
    return float(np.dot(du / h, w)) / gamma(1 - beta)
