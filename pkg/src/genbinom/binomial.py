"""Generalized binomial coefficients ``[n k]_beta`` and their identities.

``[n k]_beta = Γ(βn+1) / (Γ(βk+1) Γ(β(n-k)+1))`` with the reciprocal Gamma
factors extended by zero, so ``k`` ranges over all integers.  At ``beta = 1/2``
every coefficient is rational or rational over pi and is handled exactly by
:func:`binom_half_exact`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Union

from .exact import ONE, ZERO, ExactHalfValue
from .gamma_core import Real, gamma_half_exact, gamma_quotient, is_gamma_pole
from .policy import DomainError

HALF = Fraction(1, 2)


def as_exact(beta: Real) -> Fraction:
    """Exact rational value of ``beta``; a float converts to its binary value, no rounding."""
    return Fraction(beta)


@dataclass(frozen=True)
class BetaBinomialQuery:
    n: int
    k: int
    beta: Real

    def __post_init__(self) -> None:
        if self.n < 0:
            raise DomainError(f"n must be a natural number, got {self.n}")
        if not self.beta > 0:
            raise DomainError(f"beta must be positive, got {self.beta}")


def _gamma_ratio(a: Fraction, b: Fraction, c: Fraction) -> float:
    return gamma_quotient((a,), (b, c))


def binom_beta(n: int, k: int, beta: Real) -> float:
    """``[n k]_beta`` as a float.

    >>> binom_beta(4, 2, 0.5)
    2.0
    >>> binom_beta(2, 4, 0.5)
    0.0
    """
    BetaBinomialQuery(n, k, beta)
    # evaluate at min(k, n-k) so the reflection symmetry holds bit for bit
    return _binom_beta_cached(n, min(k, n - k), beta)


@lru_cache(maxsize=1 << 16)
def _binom_beta_cached(n: int, k: int, beta: Real) -> float:
    b = as_exact(beta)
    return _gamma_ratio(b * n + 1, b * k + 1, b * (n - k) + 1)


def is_half(beta: Real) -> bool:
    return as_exact(beta) == HALF


@lru_cache(maxsize=65536)
def binom_half_exact(n: int, k: int) -> ExactHalfValue:
    """Exact ``[n k]_{1/2}`` as ``q * pi**e`` with ``e`` in {-1, 0}.

    >>> str(binom_half_exact(2, 1))
    '4/pi'
    """
    if n < 0:
        raise DomainError(f"n must be a natural number, got {n}")
    lower = (k + 2, n - k + 2)  # twice the arguments of the two denominator Gammas
    if any(m <= 0 and m % 2 == 0 for m in lower):
        return ZERO
    top = gamma_half_exact(n + 2)
    g1, g2 = (gamma_half_exact(m) for m in lower)
    q = top.rational_part / (g1.rational_part * g2.rational_part)
    sqrt_pi = top.sqrt_pi_power - g1.sqrt_pi_power - g2.sqrt_pi_power
    return ExactHalfValue(q, sqrt_pi // 2)


def binom_continuous(y: Real, x: Real) -> float:
    """Γ(y+1) / (Γ(x+1) Γ(y-x+1)), set to zero where ``x`` and ``y - x`` are both negative integers."""
    a = as_exact(y) + 1
    b = as_exact(x) + 1
    c = a - b + 1
    if is_gamma_pole(a):
        if is_gamma_pole(b) and is_gamma_pole(c):
            return 0.0
        raise DomainError(f"binomial function undefined at y={y}, x={x}")
    return _gamma_ratio(a, b, c)


def binom_via_gauss(n: int, k: int, beta: Real) -> float:
    """``[n k]_beta`` through Gauss summation of 2F1(-βk, -β(n-k); 1; 1)."""
    from .hypergeom import gauss_at_one

    BetaBinomialQuery(n, k, beta)
    b = as_exact(beta)
    return gauss_at_one(-b * k, -b * (n - k), Fraction(1))


# -- tabulation --------------------------------------------------------------


@dataclass(frozen=True)
class RowSlice:
    """Coefficients ``[n k]_{1/2}`` for ``k_min <= k <= k_max``."""

    n: int
    k_min: int
    k_max: int
    values: tuple[ExactHalfValue, ...]

    def __post_init__(self) -> None:
        if self.n < 0 or self.k_max < self.k_min:
            raise DomainError("a row slice needs n >= 0 and k_min <= k_max")
        if len(self.values) != self.k_max - self.k_min + 1:
            raise DomainError("values length does not match the k range")
        # Γ(k/2+1) or Γ((n-k)/2+1) at a pole forces a zero
        for k, v in zip(self.ks, self.values):
            if (k < 0 and k % 2 == 0 or k > self.n and (k - self.n) % 2 == 0) and v != ZERO:
                raise DomainError(f"[{self.n} {k}] must vanish")

    def __getitem__(self, k: int) -> ExactHalfValue:
        if not self.k_min <= k <= self.k_max:
            raise KeyError(k)
        return self.values[k - self.k_min]

    @property
    def ks(self) -> range:
        return range(self.k_min, self.k_max + 1)

    def floats(self) -> list[float]:
        return [float(v) for v in self.values]


def _seed(n: int, k: int) -> ExactHalfValue:
    """Rows 0 and 1 from their explicit series coefficients."""
    if n == 0:
        if k == 0:
            return ONE
        if k % 2 == 0:
            return ZERO
        j = (k - 1) // 2  # k = 2j + 1, j may be negative
        return ExactHalfValue(Fraction(2 * (-1) ** (j % 2), 2 * j + 1), -1)
    if k < 0:
        k = 1 - k  # reflection inside row 1
    if k == 1:
        return ONE
    if k % 2 == 1:
        return ZERO
    j = k // 2
    return ExactHalfValue(
        Fraction((-1) ** ((j + 1) % 2) * math.comb(2 * j, j), (2 * j - 1) * 4**j)
    )


def row_via_pascal(n: int, k_min: int, k_max: int) -> RowSlice:
    """Row ``n`` built up from row 0 or 1 with the step-two Pascal rule.

    Entries with ``k >= 1`` come from ``[m+2 k] = [m k-2] + [m k]``; the rest
    are filled downward with ``[m k] = (k+2)/(m-k) [m k+2]``.
    """
    if k_min > k_max:
        raise DomainError("k_min must not exceed k_max")
    if n < 0:
        raise DomainError(f"n must be a natural number, got {n}")
    lo, hi = min(k_min, -1), max(k_max, 2)
    m = n % 2
    row = {k: _seed(m, k) for k in range(lo, hi + 1)}
    while m < n:
        m += 2
        cur: dict[int, ExactHalfValue] = {}
        for k in range(1, hi + 1):
            cur[k] = row[k - 2] + row[k]
        for k in range(0, lo - 1, -1):
            cur[k] = cur[k + 2] * Fraction(k + 2, m - k)
        row = cur
    return RowSlice(n, k_min, k_max, tuple(row[k] for k in range(k_min, k_max + 1)))


def half_row(n: int, k_min: int, k_max: int) -> RowSlice:
    """Row ``n`` evaluated entry by entry from the Gamma closed form."""
    return RowSlice(n, k_min, k_max, tuple(binom_half_exact(n, k) for k in range(k_min, k_max + 1)))


# -- identity catalogue ------------------------------------------------------

Value = Union[float, ExactHalfValue]
Coef = Callable[[int, int], Value]


def _need(cond: bool, what: str) -> None:
    if not cond:
        raise DomainError(what)


def _comb(n: int, k: int) -> int:
    return math.comb(n, k) if 0 <= k <= n else 0


def _sides_reflection(c: Coef, n: int, k: int, h: int) -> tuple[Value, Value]:
    return c(n, k), c(n, n - k)


def _sides_cancellation(c: Coef, n: int, k: int, h: int) -> tuple[Value, Value]:
    _need(h <= n and k <= n, "cancellation needs h, k <= n")
    return c(n, h) * c(n - h, k), c(n, k) * c(n - k, h)


def _sides_boundary(c: Coef, n: int, k: int, h: int) -> tuple[Value, Value]:
    return c(n, 0) + c(n, n), 2


def _sides_pascal(c: Coef, n: int, k: int, h: int) -> tuple[Value, Value]:
    _need(k >= -1, "Pascal's rule needs k >= -1")
    return c(n, k) + c(n, k + 2), c(n + 2, k + 2)


def _sides_committee(c: Coef, n: int, k: int, h: int) -> tuple[Value, Value]:
    _need(k >= -1, "committee/chair identity needs k >= -1")
    return c(n + 2, k + 2), c(n, k) * Fraction(n + 2, k + 2)


def _sides_recursion(c: Coef, n: int, k: int, h: int) -> tuple[Value, Value]:
    _need(k >= -1, "recursion needs k >= -1")
    return c(n, k + 2), c(n, k) * Fraction(n - k, k + 2)


def _sides_difference(c: Coef, n: int, k: int, h: int) -> tuple[Value, Value]:
    _need(k >= -1, "difference formula needs k >= -1")
    return c(n, k + 2) - c(n, k), c(n + 2, k + 2) * Fraction(n - 2 - 2 * k, n + 2)


def _sides_even_even(c: Coef, n: int, k: int, h: int) -> tuple[Value, Value]:
    return c(2 * n, 2 * k), _comb(n, k)


def _sides_value_k2(c: Coef, n: int, k: int, h: int) -> tuple[Value, Value]:
    return c(n, 2), Fraction(n, 2)


def _sides_value_minus1(c: Coef, n: int, k: int, h: int) -> tuple[Value, Value]:
    return c(n, -1), c(n, 1) * Fraction(1, n + 1)


def _sides_a_sum(c: Coef, n: int, k: int, h: int) -> tuple[Value, Value]:
    _need(n >= 2, "the sum identity needs n >= 2")
    return c(n, 2) + c(n - 2, 2), c(n - 1, 2) * 2


def _sides_a_sum_value(c: Coef, n: int, k: int, h: int) -> tuple[Value, Value]:
    _need(n >= 2, "the sum identity needs n >= 2")
    return c(n, 2) + c(n - 2, 2), n - 1


def _sides_k1_closed(c: Coef, n: int, k: int, h: int) -> tuple[Value, Value]:
    # [2m 1] = 2^{2m+1} / (pi C(2m, m)),  [2m+1 1] = (2m+1) C(2m, m) / 4^m
    m = n // 2
    if n % 2 == 0:
        return c(n, 1), ExactHalfValue(Fraction(2 ** (2 * m + 1), math.comb(2 * m, m)), -1)
    return c(n, 1), ExactHalfValue(Fraction((2 * m + 1) * math.comb(2 * m, m), 4**m))


def _sides_k1_gamma(c: Coef, n: int, k: int, h: int) -> tuple[Value, Value]:
    # [n 1] = 2 Γ(n/2 + 1) / (sqrt(pi) Γ(n/2 + 1/2))
    top, bot = gamma_half_exact(n + 2), gamma_half_exact(n + 1)
    s = top.sqrt_pi_power - 1 - bot.sqrt_pi_power
    return c(n, 1), ExactHalfValue(2 * top.rational_part / bot.rational_part, s // 2)


_IDENTITIES = {
    "reflection": (_sides_reflection, False),
    "cancellation": (_sides_cancellation, False),
    "boundary": (_sides_boundary, False),
    "pascal": (_sides_pascal, True),
    "committee": (_sides_committee, True),
    "recursion": (_sides_recursion, True),
    "difference": (_sides_difference, True),
    "even_even": (_sides_even_even, True),
    "value_k2": (_sides_value_k2, True),
    "value_minus1": (_sides_value_minus1, True),
    "a_sum": (_sides_a_sum, True),
    "a_sum_value": (_sides_a_sum_value, True),
    "k1_closed": (_sides_k1_closed, True),
    "k1_gamma": (_sides_k1_gamma, True),
}

#: identities valid for every beta > 0; the rest are specific to beta = 1/2
GENERAL_IDENTITIES = tuple(k for k, (_, half) in _IDENTITIES.items() if not half)
HALF_IDENTITIES = tuple(k for k, (_, half) in _IDENTITIES.items() if half)
IDENTITIES = tuple(_IDENTITIES)


def identity_sides(
    name: str, n: int, k: int = 0, h: int = 0, beta: Real = HALF, exact: bool = False
) -> tuple[Value, Value]:
    """Left- and right-hand side of a named identity."""
    try:
        sides, half_only = _IDENTITIES[name]
    except KeyError:
        raise DomainError(f"unknown identity {name!r}; choose from {', '.join(IDENTITIES)}") from None
    _need(n >= 0, "n must be a natural number")
    if (exact or half_only) and not is_half(beta):
        raise DomainError(f"identity {name!r} in this form holds only for beta = 1/2")
    if exact:
        return sides(binom_half_exact, n, k, h)
    return sides(lambda a, b: binom_beta(a, b, beta), n, k, h)


def identity_residual(
    name: str, n: int, k: int = 0, h: int = 0, beta: Real = HALF, exact: bool = False
) -> Value:
    """``|LHS - RHS|`` of a named identity; in exact mode the signed exact difference."""
    lhs, rhs = identity_sides(name, n, k, h, beta, exact)
    if exact:
        return lhs - rhs
    return abs(float(lhs) - float(rhs))


def relative_residual(lhs: Value, rhs: Value) -> float:
    a, b = float(lhs), float(rhs)
    scale = max(abs(a), abs(b))
    return abs(a - b) / scale if scale else 0.0
