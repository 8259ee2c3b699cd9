"""Generating functions ``phi_n(t) = sum_{k>=0} [n k] t^k`` of the half-order coefficients.

Five evaluation routes are offered and cross-checked in the tests:

``series``      direct summation of the power series
``recursive``   phi_{n+2} = (1+t²) phi_n + [n 1] t / (n+1) from phi_0 or phi_1
``closed``      the finite closed forms in arctan / sqrt(1+t²)
``integral``    (1+t²)^{n/2} (1 + [n 1] ∫₀ᵗ (1+s²)^{-(n/2+1)} ds)
``asymptotic``  leading behaviour as n → ∞

plus the two auxiliary generating functions of the central binomial
coefficients (``W`` and ``Z``) the closed forms are built from.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Literal

from .binomial import binom_half_exact
from .policy import (
    DEFAULT_QUADRATURE,
    DEFAULT_SERIES,
    DivergenceError,
    DomainError,
    QuadraturePolicy,
    SeriesOutcome,
    SeriesPolicy,
)

Route = Literal["series", "recursive", "closed", "integral", "asymptotic"]
ROUTES: tuple[Route, ...] = ("series", "recursive", "closed", "integral", "asymptotic")


@dataclass(frozen=True)
class GenFuncPoint:
    n: int
    t: float
    value: float
    route: Route

    def __post_init__(self) -> None:
        if self.route not in ROUTES:
            raise ValueError(f"unknown route {self.route!r}")
        if self.route == "series" and abs(self.t) > 1:
            raise DivergenceError("the power series diverges for |t| > 1")


def _check_n(n: int) -> None:
    if n < 0:
        raise DomainError(f"n must be a natural number, got {n}")


def _k1(n: int) -> float:
    return float(binom_half_exact(n, 1))


def central_ratio(k: int) -> float:
    """C(2k, k) / 4^k, the coefficients of Z."""
    b = 1.0
    for j in range(1, k + 1):
        b *= (2 * j - 1) / (2 * j)
    return b


def _central_ratios(m: int) -> list[float]:
    out = [1.0]
    for j in range(1, m + 1):
        out.append(out[-1] * (2 * j - 1) / (2 * j))
    return out


# -- base cases ------------------------------------------------------------------


def phi0(t: float) -> float:
    """phi_0(t) = 1 + (2/π) arctan t on (-1, 1]."""
    if not -1 < t <= 1:
        raise DomainError(f"phi0 is defined on (-1, 1], got {t}")
    return 1.0 + 2.0 / math.pi * math.atan(t)


def phi1(t: float) -> float:
    """phi_1(t) = t + sqrt(1 + t²) on [-1, 1]."""
    if not -1 <= t <= 1:
        raise DomainError(f"phi1 is defined on [-1, 1], got {t}")
    return t + math.sqrt(1.0 + t * t)


# -- routes --------------------------------------------------------------------


def phi_series(n: int, t: float, policy: SeriesPolicy = DEFAULT_SERIES) -> SeriesOutcome:
    """Sum the power series directly.

    Coefficients come from ``[n k+2] = (n-k)/(k+2) [n k]`` along the even and
    odd chains.  Beyond ``k = n`` each surviving chain alternates in sign with
    ratio ``t²``.  For ``|t| < 1`` the tail is bounded geometrically.  At ``|t| = 1``
    the returned value is the midpoint of the last Leibniz bracket and the
    bound is half its width.
    """
    _check_n(n)
    if abs(t) > 1:
        raise DivergenceError(f"phi_n series diverges for |t| > 1, got {t}")
    coef = [1.0, _k1(n)]  # current [n k] on the even and odd chains
    power = [1.0, t]
    total = comp = 0.0
    tail = math.inf
    t2 = t * t
    for k in range(policy.max_terms):
        chain = k % 2
        term = coef[chain] * power[chain]
        y = term - comp
        s = total + y
        comp = (s - total) - y
        total = s
        coef[chain] *= (n - k) / (k + 2)
        power[chain] *= t2
        if k <= n + 1:
            continue
        # both next terms (one per chain) after index k
        nxt = (coef[0] * power[0], coef[1] * power[1])
        if abs(t) < 1:
            tail = (abs(nxt[0]) + abs(nxt[1])) / (1.0 - t2)
            if policy.satisfied(total, tail):
                return SeriesOutcome(total, k + 1, tail, True)
        elif chain == (n + 1) % 2:
            # only the chain of parity opposite to n survives past k = n
            nx = nxt[chain]
            value, tail = total + 0.5 * nx, 0.5 * abs(nx)
            if policy.satisfied(value, tail):
                return SeriesOutcome(value, k + 1, tail, True)
    if abs(t) < 1:
        return SeriesOutcome(total, policy.max_terms, tail, False)
    nx = coef[(n + 1) % 2] * power[(n + 1) % 2]
    return SeriesOutcome(total + 0.5 * nx, policy.max_terms, 0.5 * abs(nx), False)


def phi_recursive(n: int, t: float) -> float:
    """Iterate phi_{m+2} = (1 + t²) phi_m + [m 1] t / (m + 1) from phi_0 or phi_1."""
    _check_n(n)
    m = n % 2
    value = phi0(t) if m == 0 else phi1(t)
    while m < n:
        value = (1.0 + t * t) * value + _k1(m) / (m + 1) * t
        m += 2
    return value


def phi_closed(n: int, t: float) -> float:
    """Finite closed form by parity of ``n``."""
    _check_n(n)
    m, odd = divmod(n, 2)
    if odd:
        if not -1 <= t <= 1:
            raise DomainError(f"phi_closed for odd n is defined on [-1, 1], got {t}")
    elif not -1 < t <= 1:
        raise DomainError(f"phi_closed for even n is defined on (-1, 1], got {t}")
    u = 1.0 + t * t
    b = _central_ratios(m)
    if odd:
        inner = math.fsum(b[k] * u**-k for k in range(m + 1))
        return u**m * (math.sqrt(u) + t * inner)
    inner = math.fsum(1.0 / (k * b[k]) * u**-k for k in range(1, m + 1))
    return u**m * (1.0 + 2.0 / math.pi * math.atan(t) + t / math.pi * inner)


def phi_integral(n: int, t: float, qp: QuadraturePolicy = DEFAULT_QUADRATURE) -> float:
    """(1+t²)^{n/2} (1 + [n 1] ∫₀ᵗ (1+s²)^{-(n/2+1)} ds) by adaptive quadrature."""
    _check_n(n)
    expo = -(n / 2 + 1)
    integral = qp.integrate(lambda s: (1.0 + s * s) ** expo, 0.0, t)
    return (1.0 + t * t) ** (n / 2) * (1.0 + _k1(n) * integral)


def phi_asymptotic(n: int, t: float) -> float:
    """Leading-order behaviour of phi_n(t) as n → ∞ for t in (-1, 1].

    For both parities phi_n(t) / (1+t²)^{n/2} tends to ``1 + sign(t)``: in the
    even case the limit is ``phi_0(t) + (t/π) W(1/(1+t²)) = 1 + (2/π)(arctan t + arctan(1/t))``.
    The frequently quoted even form ``1 + (4/π) arctan t`` agrees with it only
    at t = 0 and t = 1 (see :func:`phi_asymptotic_even_printed`).  At t = 1 both give 2^{n/2+1}.
    """
    _check_n(n)
    if not -1 < t <= 1:
        raise DomainError(f"asymptotic form is stated for t in (-1, 1], got {t}")
    sign = (t > 0) - (t < 0)
    return (1.0 + t * t) ** (n / 2) * (1 + sign)


def phi_asymptotic_even_printed(n: int, t: float) -> float:
    """(1+t²)^{n/2} (1 + (4/π) arctan t), kept for comparison with :func:`phi_asymptotic`."""
    _check_n(n)
    return (1.0 + t * t) ** (n / 2) * (1.0 + 4.0 / math.pi * math.atan(t))


_ROUTE_FUNCS: dict[str, Callable[[int, float], float]] = {
    "series": lambda n, t: phi_series(n, t).value,
    "recursive": phi_recursive,
    "closed": phi_closed,
    "integral": phi_integral,
    "asymptotic": phi_asymptotic,
}


def phi(n: int, t: float, route: Route | None = None) -> GenFuncPoint:
    """Evaluate phi_n(t) by the named route; by default the series inside |t| < 0.99, else the closed form."""
    if route is None:
        route = "series" if abs(t) < 0.99 else "closed"
    if route not in _ROUTE_FUNCS:
        raise DomainError(f"unknown route {route!r}; choose from {', '.join(ROUTES)}")
    return GenFuncPoint(n, t, _ROUTE_FUNCS[route](n, t), route)


# -- central-binomial generating functions ----------------------------------------


def _power_series(
    first: float, ratio: Callable[[int], float], x: float, rho: float, policy: SeriesPolicy, start: int = 0
) -> SeriesOutcome:
    """Sum ``sum_k c_k x^k`` from index ``start`` given ``c_{k+1}/c_k = ratio(k)`` with ``|ratio·x| <= rho``."""
    term, total = first * x**start, 0.0
    tail = math.inf
    for i in range(policy.max_terms):
        k = start + i
        total += term
        term *= ratio(k) * x
        if rho < 1:
            tail = abs(term) / (1.0 - rho)
        else:
            tail = abs(term)  # only reached alternating at x = -1: Leibniz bound
        if policy.satisfied(total, tail):
            return SeriesOutcome(total, i + 1, tail, True)
    return SeriesOutcome(total, policy.max_terms, tail, False)


def w_closed(x: float) -> float:
    """W(x) = 2 sqrt(x/(1-x)) arctan sqrt(x/(1-x)) on [-1, 1), continued through artanh for x < 0."""
    if not -1 <= x < 1:
        raise DomainError(f"W is defined on [-1, 1), got {x}")
    r = x / (1.0 - x)
    if r >= 0:
        y = math.sqrt(r)
        return 2.0 * y * math.atan(y)
    y = math.sqrt(-r)
    return -2.0 * y * math.atanh(y)


def w_series(x: float, policy: SeriesPolicy = DEFAULT_SERIES) -> SeriesOutcome:
    """W(x) = sum_{k>=1} 4^k / (k C(2k,k)) x^k."""
    if not -1 <= x < 1:
        raise DomainError(f"W is defined on [-1, 1), got {x}")
    # c_{k+1}/c_k = 2k/(2k+1) < 1, c_1 = 2
    return _power_series(2.0, lambda k: 2 * k / (2 * k + 1), x, abs(x), policy, start=1)


def z_closed(x: float) -> float:
    """Z(x) = sum C(2k,k) 4^-k x^k = 1/sqrt(1-x) on (-1, 1)."""
    if not -1 < x < 1:
        raise DomainError(f"Z is defined on (-1, 1), got {x}")
    return 1.0 / math.sqrt(1.0 - x)


def z_series(x: float, policy: SeriesPolicy = DEFAULT_SERIES) -> SeriesOutcome:
    if not -1 < x < 1:
        raise DomainError(f"Z is defined on (-1, 1), got {x}")
    return _power_series(1.0, lambda k: (2 * k + 1) / (2 * k + 2), x, abs(x), policy)


def central_closed(x: float) -> float:
    """sum C(2k,k) x^k = 1/sqrt(1-4x) on (-1/4, 1/4); equals z_closed(4x)."""
    if not -0.25 < x < 0.25:
        raise DomainError(f"central-binomial series needs |x| < 1/4, got {x}")
    return 1.0 / math.sqrt(1.0 - 4.0 * x)


def central_series(x: float, policy: SeriesPolicy = DEFAULT_SERIES) -> SeriesOutcome:
    if not -0.25 < x < 0.25:
        raise DomainError(f"central-binomial series needs |x| < 1/4, got {x}")
    return _power_series(1.0, lambda k: 2 * (2 * k + 1) / (k + 1), x, 4 * abs(x), policy)
