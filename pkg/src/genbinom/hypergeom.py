"""Gauss hypergeometric function 2F1 on the closed unit interval.

Three routes: the power series (:func:`hyp2f1`), Gauss summation at ``x = 1``
(:func:`gauss_at_one`, the authoritative route there) and the Euler integral
(:func:`hyp2f1_euler`, a cross-check restricted to ``c > b > 0``).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .gamma_core import Real, gamma_quotient, is_gamma_pole
from .policy import (
    DEFAULT_QUADRATURE,
    DEFAULT_SERIES,
    DivergenceError,
    DomainError,
    QuadraturePolicy,
    SeriesOutcome,
    SeriesPolicy,
)


@dataclass(frozen=True)
class HypParams:
    a: Real
    b: Real
    c: Real
    x: float

    def __post_init__(self) -> None:
        if is_gamma_pole(self.c):
            raise DomainError(f"c = {self.c} is a pole of Gamma")
        if abs(self.x) > 1:
            raise DivergenceError(f"2F1 series needs |x| <= 1, got {self.x}")

    @property
    def terminating(self) -> bool:
        return is_gamma_pole(self.a) or is_gamma_pole(self.b)

    @property
    def excess(self) -> float:
        """c - a - b, which controls convergence on the unit circle."""
        return float(self.c) - float(self.a) - float(self.b)


# partial sums at these term counts feed the extrapolation at x = 1
_RICHARDSON_BASE = 128
_RICHARDSON_LEVELS = 5


def hyp2f1(p: HypParams, policy: SeriesPolicy = DEFAULT_SERIES) -> SeriesOutcome:
    """Gauss series ``sum (a)_j (b)_j / ((c)_j j!) x^j``.

    For ``|x| < 1`` the tail is bounded geometrically from the term ratio.  At
    ``x = 1`` the remainder decays only like ``N^-(c-a-b)``; there the partial
    sums at doubling term counts are extrapolated in the known powers
    ``N^-(c-a-b) , N^-(c-a-b)-1, ...`` and the change between the last two
    extrapolation orders is reported as the tail bound.
    """
    a, b, c, x = float(p.a), float(p.b), float(p.c), float(p.x)
    if p.terminating:
        return _terminating(a, b, c, x, p)
    if x == 1.0:
        if p.excess <= 0:
            raise DivergenceError(f"2F1 at x = 1 diverges for c - a - b = {p.excess} <= 0")
        return _at_one(a, b, c, p.excess, policy)
    if x == -1.0 and p.excess <= -1:
        raise DivergenceError(f"2F1 at x = -1 diverges for c - a - b = {p.excess} <= -1")

    term, total = 1.0, 1.0
    comp, tail = 0.0, math.inf
    for j in range(policy.max_terms):
        ratio = (a + j) * (b + j) / ((c + j) * (j + 1))
        term *= ratio * x
        # Kahan summation keeps long slowly-decaying sums honest
        y = term - comp
        t = total + y
        comp = (t - total) - y
        total = t
        n = j + 1
        if n < 2 * (abs(a) + abs(b) + abs(c)) + 8:
            continue
        nxt = (a + n) * (b + n) / ((c + n) * (n + 1))
        if abs(x) < 1:
            rho = abs(x) * max(abs(nxt), 1.0)
            if rho >= 1:
                continue
            tail = abs(term) * rho / (1 - rho)
        else:
            # alternating at x = -1 with eventually decreasing magnitudes
            tail = abs(term * nxt)
        if policy.satisfied(total, tail):
            return SeriesOutcome(total, n + 1, tail, True)
    return SeriesOutcome(total, policy.max_terms + 1, tail, False)


def _terminating(a: float, b: float, c: float, x: float, p: HypParams) -> SeriesOutcome:
    m = int(min(-v for v in (p.a, p.b) if is_gamma_pole(v)))
    term, total = 1.0, 1.0
    for j in range(m):
        term *= (a + j) * (b + j) / ((c + j) * (j + 1)) * x
        total += term
    return SeriesOutcome(total, m + 1, 0.0, True)


def _at_one(a: float, b: float, c: float, s: float, policy: SeriesPolicy) -> SeriesOutcome:
    checkpoints = [_RICHARDSON_BASE * 2**i for i in range(_RICHARDSON_LEVELS)]
    if checkpoints[-1] > policy.max_terms:
        checkpoints = [c_ for c_ in checkpoints if c_ <= policy.max_terms]
    if len(checkpoints) < 3:
        raise DomainError("max_terms too small for the x = 1 series")
    partial: list[float] = []
    term, total, comp = 1.0, 1.0, 0.0
    n = 1
    for stop in checkpoints:
        while n < stop:
            j = n - 1
            term *= (a + j) * (b + j) / ((c + j) * (j + 1))
            y = term - comp
            t = total + y
            comp = (t - total) - y
            total = t
            n += 1
        partial.append(total)

    def extrapolate(levels: int) -> float:
        ns = np.array(checkpoints[-levels:], dtype=float)
        rows = [np.ones_like(ns)] + [ns ** -(s + i) for i in range(levels - 1)]
        sol = np.linalg.solve(np.stack(rows, axis=1), np.array(partial[-levels:]))
        return float(sol[0])

    best = extrapolate(len(checkpoints))
    prev = extrapolate(len(checkpoints) - 1)
    tail = abs(best - prev)
    return SeriesOutcome(best, checkpoints[-1], tail, policy.satisfied(best, tail))


def gauss_at_one(a: Real, b: Real, c: Real) -> float:
    """2F1(a, b; c; 1) = Γ(c) Γ(c-a-b) / (Γ(c-a) Γ(c-b)) for ``c - a - b > 0``."""
    fa, fb, fc = (Fraction(v) for v in (a, b, c))
    s = fc - fa - fb
    if s <= 0:
        raise DomainError(f"Gauss summation needs c - a - b > 0, got {s}")
    if is_gamma_pole(fc):
        raise DomainError(f"c = {c} is a pole of Gamma")
    return gamma_quotient((fc, s), (fc - fa, fc - fb))


def hyp2f1_euler(a: Real, b: Real, c: Real, x: float, qp: QuadraturePolicy = DEFAULT_QUADRATURE) -> float:
    """Euler integral Γ(c)/(Γ(b)Γ(c-b)) ∫₀¹ t^(b-1) (1-t)^(c-b-1) (1-xt)^(-a) dt, for ``c > b > 0``."""
    a, b, c, x = float(a), float(b), float(c), float(x)
    if not c > b > 0:
        raise DomainError("the Euler integral needs c > b > 0")
    if not -1 <= x <= 1:
        raise DomainError(f"need |x| <= 1, got {x}")
    prefactor = gamma_quotient((c,), (b, c - b))
    if x == 1.0:
        if c - a - b <= 0:
            raise DivergenceError("Euler integral diverges at x = 1 when c - a - b <= 0")
        integral = qp.integrate(lambda t: 1.0, 0.0, 1.0, weight="alg", wvar=(b - 1, c - b - 1 - a))
    else:
        integral = qp.integrate(
            lambda t: (1 - x * t) ** (-a), 0.0, 1.0, weight="alg", wvar=(b - 1, c - b - 1)
        )
    return prefactor * integral


def ellipse_perimeter(a: float, b: float) -> float:
    """Perimeter of the ellipse with semi-axes ``a`` and ``b``.

    Uses π(a+b) 2F1(-1/2, -1/2; 1; h) with h = ((a-b)/(a+b))²; the degenerate
    ``h = 1`` case goes through Gauss summation.
    """
    if a < 0 or b < 0 or a + b <= 0:
        raise DomainError("semi-axes must be non-negative and not both zero")
    h = ((a - b) / (a + b)) ** 2
    half = Fraction(-1, 2)
    if h == 1.0:
        f = gauss_at_one(half, half, 1)
    else:
        f = hyp2f1(HypParams(half, half, 1, h)).value
    return math.pi * (a + b) * f
