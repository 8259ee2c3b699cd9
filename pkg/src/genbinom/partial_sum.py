"""Finite partial sums ``phibar_n(t) = sum_{k=0}^n [n k] t^k`` and related finite identities."""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass
from fractions import Fraction
from typing import Literal

from .binomial import binom_half_exact
from .exact import ExactHalfValue
from .gamma_core import Real
from .policy import DEFAULT_QUADRATURE, DomainError, QuadraturePolicy

Route = Literal["direct", "recursive", "closed", "integral"]
ROUTES: tuple[Route, ...] = ("direct", "recursive", "closed", "integral")


@dataclass(frozen=True)
class PartialSumPoint:
    n: int
    t: float
    value: float
    route: Route


def _check_n(n: int) -> None:
    if n < 0:
        raise DomainError(f"n must be a natural number, got {n}")


def _k1(n: int) -> float:
    return float(binom_half_exact(n, 1))


# -- routes ----------------------------------------------------------------------


def phibar_exact(n: int, t: Real) -> ExactHalfValue:
    """Exact partial sum for rational ``t`` (floats are taken at their exact binary value)."""
    _check_n(n)
    tq = Fraction(t)
    total = ExactHalfValue(0)
    power = Fraction(1)
    for k in range(n + 1):
        total = total + binom_half_exact(n, k) * power
        power *= tq
    return total


def phibar_direct(n: int, t: float) -> float:
    """Sum of the ``n + 1`` exact coefficients, rounded to float once."""
    return float(phibar_exact(n, t))


def phibar_recursive(n: int, t: float) -> float:
    """Iterate phibar_{m+2} = (1 + t²) phibar_m + [m -1] (t^{m+1} + t)."""
    _check_n(n)
    m = n % 2
    value = 1.0 if m == 0 else 1.0 + t
    while m < n:
        value = (1.0 + t * t) * value + float(binom_half_exact(m, -1)) * (t ** (m + 1) + t)
        m += 2
    return value


def phibar_closed(n: int, t: float) -> float:
    """Closed form in central binomial coefficients, by parity of ``n``."""
    _check_n(n)
    m, odd = divmod(n, 2)
    u = 1.0 + t * t
    b = 1.0  # C(2k, k) / 4^k
    terms = []
    if odd:
        for k in range(m + 1):
            if k:
                b *= (2 * k - 1) / (2 * k)
            terms.append(b * (t ** (2 * k) + t) / u**k)
        return u**m * math.fsum(terms)
    for k in range(1, m + 1):
        b *= (2 * k - 1) / (2 * k)
        terms.append((t ** (2 * k - 1) + t) / (k * b * u**k))
    return u**m * (1.0 + math.fsum(terms) / math.pi)


def phibar_integral(n: int, t: float, qp: QuadraturePolicy = DEFAULT_QUADRATURE) -> float:
    """(1+t²)^{n/2} (1 - [n 1] ∫₀ᵗ (s^n - 1) / (1+s²)^{n/2+1} ds).

    The exponent ``n/2 + 1`` is the one for which this solves
    ``(1+t²) y' - n t y + [n 1](t^n - 1) = 0`` with ``y(0) = 1``.
    """
    _check_n(n)
    expo = -(n / 2 + 1)
    integral = qp.integrate(lambda s: (s**n - 1.0) * (1.0 + s * s) ** expo, 0.0, t)
    return (1.0 + t * t) ** (n / 2) * (1.0 - _k1(n) * integral)


_ROUTE_FUNCS = {
    "direct": phibar_direct,
    "recursive": phibar_recursive,
    "closed": phibar_closed,
    "integral": phibar_integral,
}


def phibar(n: int, t: float, route: Route = "direct") -> PartialSumPoint:
    if route not in _ROUTE_FUNCS:
        raise DomainError(f"unknown route {route!r}; choose from {', '.join(ROUTES)}")
    return PartialSumPoint(n, t, _ROUTE_FUNCS[route](n, t), route)


# -- the value at t = 1 ------------------------------------------------------------


def _central(k: int) -> int:
    return math.comb(2 * k, k)


def row_sum_exact(n: int) -> ExactHalfValue:
    """phibar_n(1) from the parity-specific closed sums, exactly."""
    _check_n(n)
    m, odd = divmod(n, 2)
    if odd:
        return ExactHalfValue(2 ** (m + 1) * sum(Fraction(_central(k), 8**k) for k in range(m + 1)))
    inner = sum((Fraction(2**k, k * _central(k)) for k in range(1, m + 1)), Fraction(0))
    return ExactHalfValue(2**m) + ExactHalfValue(2 ** (m + 1) * inner, -1)


def row_sum(n: int) -> float:
    """phibar_n(1) = sum_{k=0}^n [n k]."""
    return float(row_sum_exact(n))


def row_sum_forms(n: int) -> tuple[ExactHalfValue, ExactHalfValue, ExactHalfValue]:
    """Three equivalent expressions for phibar_n(1), evaluated exactly.

    Even ``n = 2m``::

        2^m (1 + (2/π) sum_{k=1}^m 2^k / (k C(2k,k)))
        2^m (1 + sum_{k<m} [2k -1] / 2^k)
        2^m (1 + sum_{k<m} [2k 1] / ((2k+1) 2^k))

    Odd ``n = 2m+1``::

        2^{m+1} sum_{k<=m} C(2k,k) / 8^k
        2^m (2 + sum_{k<m} [2k+1 -1] / 2^k)
        2^m (2 + sum_{k<m} [2k+1 1] / ((2k+2) 2^k))
    """
    _check_n(n)
    m, odd = divmod(n, 2)
    first = row_sum_exact(n)
    head = 2 if odd else 1
    second = ExactHalfValue(head)
    third = ExactHalfValue(head)
    for k in range(m):
        row = 2 * k + odd
        second = second + binom_half_exact(row, -1) * Fraction(1, 2**k)
        third = third + binom_half_exact(row, 1) * Fraction(1, (row + 1) * 2**k)
    return first, second * 2**m, third * 2**m


# -- finite identities -----------------------------------------------------------


class HarmonicCache:
    """Exact harmonic numbers H_n, memoized append-only.

    Reads never block; extensions are serialized by a lock, so concurrent callers see
    a prefix that only ever grows.
    """

    def __init__(self) -> None:
        self._values: list[Fraction] = [Fraction(0)]
        self._lock = threading.Lock()

    def __call__(self, n: int) -> Fraction:
        if n < 0:
            raise DomainError("harmonic numbers need n >= 0")
        values = self._values
        if n < len(values):
            return values[n]
        with self._lock:
            while len(self._values) <= n:
                k = len(self._values)
                self._values.append(self._values[-1] + Fraction(1, k))
            return self._values[n]

    def __len__(self) -> int:
        return len(self._values)


harmonic = HarmonicCache()

FINITE_SUMS = ("s1", "s2", "s3", "s4", "s5")


def finite_sum(name: str, n: int) -> tuple[ExactHalfValue, ExactHalfValue]:
    """``(lhs, rhs)`` of one of the finite identities, both exact.

    s1: sum_{k<n} [2k 1]/(2k+1)        = [2n 1] - 2/π
    s2: sum_{k<n} [2k+1 1]/(2k+2)      = [2n+1 1] - 1
    s3: sum_{k<=n} [k 2]               = n(n+1)/4
    s4: sum_{1<=k<=n} [k 2]/k          = n/2            (n >= 1)
    s5: sum_{k<=n} [k 2]/(k+1)         = (n+1)/2 - H_{n+1}/2
    """
    _check_n(n)
    c = binom_half_exact
    zero = ExactHalfValue(0)
    if name == "s1":
        lhs = sum((c(2 * k, 1) * Fraction(1, 2 * k + 1) for k in range(n)), zero)
        return lhs, c(2 * n, 1) - ExactHalfValue(2, -1)
    if name == "s2":
        lhs = sum((c(2 * k + 1, 1) * Fraction(1, 2 * k + 2) for k in range(n)), zero)
        return lhs, c(2 * n + 1, 1) - 1
    if name == "s3":
        lhs = sum((c(k, 2) for k in range(n + 1)), zero)
        return lhs, ExactHalfValue(Fraction(n * (n + 1), 4))
    if name == "s4":
        if n < 1:
            raise DomainError("s4 needs n >= 1")
        lhs = sum((c(k, 2) * Fraction(1, k) for k in range(1, n + 1)), zero)
        return lhs, ExactHalfValue(Fraction(n, 2))
    if name == "s5":
        lhs = sum((c(k, 2) * Fraction(1, k + 1) for k in range(n + 1)), zero)
        return lhs, ExactHalfValue(Fraction(n + 1, 2) - harmonic(n + 1) / 2)
    raise DomainError(f"unknown finite sum {name!r}; choose from {', '.join(FINITE_SUMS)}")


def finite_sum_forms(name: str, n: int) -> tuple[ExactHalfValue, ...]:
    """All tabulated formulations of a finite sum (lhs first), each evaluated exactly."""
    lhs, rhs = finite_sum(name, n)
    if name == "s1":
        mid = ExactHalfValue(sum((Fraction(4**k, k * _central(k)) for k in range(1, n + 1)), Fraction(0)), -1)
        closed = ExactHalfValue(Fraction(2 ** (2 * n + 1), _central(n)), -1) - ExactHalfValue(2, -1)
        return lhs, mid, closed, rhs
    if name == "s2":
        mid = ExactHalfValue(sum((Fraction(_central(k), 4**k) for k in range(1, n + 1)), Fraction(0)))
        closed = ExactHalfValue(Fraction((2 * n + 1) * _central(n), 4**n) - 1)
        return lhs, mid, closed, rhs
    if name == "s3":
        mid = ExactHalfValue(sum((Fraction(k, 2) for k in range(n + 1)), Fraction(0)))
        return lhs, mid, rhs, binom_half_exact(n, 2) * binom_half_exact(n + 1, 2)
    if name == "s4":
        return lhs, ExactHalfValue(Fraction(n, 2)), rhs, binom_half_exact(n, 2)
    mid = ExactHalfValue(sum((Fraction(k, 2 * (k + 1)) for k in range(n + 1)), Fraction(0)))
    return lhs, mid, rhs
