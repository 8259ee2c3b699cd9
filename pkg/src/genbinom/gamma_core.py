"""Real Gamma function, its reciprocal, and exact values at half-integers.

Floating evaluation is delegated to :func:`math.gamma` / :func:`math.lgamma`;
this module adds the pole bookkeeping the rest of the package depends on:

* a float argument is a pole only on an exact hit (``-3.0`` is, ``-3.0 + 1e-15`` is not);
* ``int`` and :class:`~fractions.Fraction` arguments are classified exactly;
* :func:`reciprocal_gamma` is total and returns ``0.0`` at every pole.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from numbers import Rational
from typing import Union

from .policy import DomainError

Real = Union[int, float, Fraction]

SQRT_PI = math.sqrt(math.pi)
#: above this argument Γ overflows a double
GAMMA_OVERFLOW = 171.6
# ratio evaluations switch to log-space once an argument gets this large
LOG_SPACE_THRESHOLD = 170.0


def is_gamma_pole(x: Real) -> bool:
    """True iff ``x`` is one of 0, -1, -2, ... (exact comparison, no snapping)."""
    if isinstance(x, Rational):
        return x.denominator == 1 and x <= 0
    x = float(x)
    return x <= 0 and x == math.floor(x)


def _sinpi(x: float) -> float:
    # reduce exactly to [-1, 1] so large arguments keep full accuracy
    r = math.fmod(x, 2.0)
    if r > 1.0:
        r -= 2.0
    elif r < -1.0:
        r += 2.0
    if r == 0.0 or abs(r) == 1.0:
        return 0.0
    if abs(r) == 0.5:
        return math.copysign(1.0, r)
    if abs(r) > 0.5:
        # sin(πr) = sin(π(1-|r|)) sign(r); 1-|r| is exact, keeping accuracy near the zero at ±1
        return math.copysign(math.sin(math.pi * (1.0 - abs(r))), r)
    return math.sin(math.pi * r)


def gamma(x: Real) -> float:
    """Γ(x) for real ``x`` off the poles.

    Raises :class:`DomainError` at a pole and :class:`OverflowError` once the
    result leaves the double range (x above ~171.6).
    """
    if is_gamma_pole(x):
        raise DomainError(f"Gamma has a pole at {x}")
    xf = float(x)
    if xf > GAMMA_OVERFLOW:
        raise OverflowError(f"Gamma({xf}) overflows double precision; use ln_gamma")
    return math.gamma(xf)


def ln_gamma(x: Real) -> float:
    """log Γ(x) for ``x > 0``."""
    if x <= 0:
        raise DomainError(f"ln_gamma requires x > 0, got {x}")
    return math.lgamma(float(x))


def log_abs_gamma(x: Real) -> tuple[float, int]:
    """``(log|Γ(x)|, sign Γ(x))`` off the poles, valid far beyond the overflow range."""
    if is_gamma_pole(x):
        raise DomainError(f"Gamma has a pole at {x}")
    xf = float(x)
    if xf > 0:
        return math.lgamma(xf), 1
    sign = 1 if math.floor(xf) % 2 == 0 else -1
    return math.lgamma(xf), sign


def reciprocal_gamma(x: Real) -> float:
    """1/Γ(x), extended by zero at the poles."""
    if is_gamma_pole(x):
        return 0.0
    xf = float(x)
    if xf > GAMMA_OVERFLOW:
        return math.exp(-math.lgamma(xf))
    if xf < 0.5:
        # 1/Γ(x) = sin(πx) Γ(1-x) / π
        s = _sinpi(xf)
        if 1.0 - xf > LOG_SPACE_THRESHOLD:
            return math.copysign(math.exp(math.lgamma(1.0 - xf) + math.log(abs(s)) - math.log(math.pi)), s)
        return s * gamma(1.0 - xf) / math.pi
    return 1.0 / math.gamma(xf)


@dataclass(frozen=True)
class HalfGammaExact:
    """``rational_part * sqrt(pi) ** sqrt_pi_power`` with ``sqrt_pi_power`` in {0, 1}."""

    rational_part: Fraction
    sqrt_pi_power: int

    def __post_init__(self) -> None:
        if self.sqrt_pi_power not in (0, 1):
            raise ValueError("sqrt_pi_power must be 0 or 1")
        object.__setattr__(self, "rational_part", Fraction(self.rational_part))

    def __float__(self) -> float:
        return float(self.rational_part) * SQRT_PI**self.sqrt_pi_power


@lru_cache(maxsize=None)
def gamma_half_exact(two_x: int) -> HalfGammaExact:
    """Exact Γ(two_x / 2) for integer ``two_x`` away from the poles.

    >>> gamma_half_exact(5)
    HalfGammaExact(rational_part=Fraction(3, 4), sqrt_pi_power=1)
    """
    if not isinstance(two_x, int):
        raise DomainError("two_x must be an integer")
    if two_x <= 0 and two_x % 2 == 0:
        raise DomainError(f"Gamma has a pole at {two_x // 2}")
    if two_x % 2 == 0:
        return HalfGammaExact(Fraction(math.factorial(two_x // 2 - 1)), 0)
    if two_x > 0:
        # Γ(j + 1/2) = (2j)! / (4^j j!) √π
        j = (two_x - 1) // 2
        return HalfGammaExact(Fraction(math.factorial(2 * j), 4**j * math.factorial(j)), 1)
    # Γ(1/2 - j) = (-4)^j j! / (2j)! √π
    j = (1 - two_x) // 2
    return HalfGammaExact(Fraction((-4) ** j * math.factorial(j), math.factorial(2 * j)), 1)


def gamma_quotient(numer: tuple[Real, ...], denom: tuple[Real, ...]) -> float:
    """Π Γ(numer) / Π Γ(denom), zero when a denominator argument is a pole.

    Switches to log-space once any argument exceeds ``LOG_SPACE_THRESHOLD`` in magnitude.
    """
    if any(is_gamma_pole(x) for x in denom):
        return 0.0
    for x in numer:
        if is_gamma_pole(x):
            raise DomainError(f"Gamma has a pole at {x}")
    if max(abs(float(x)) for x in numer + denom) <= LOG_SPACE_THRESHOLD:
        out = 1.0
        for x in numer:
            out *= gamma(x)
        for x in denom:
            out *= reciprocal_gamma(x)
        return out
    log_mag, sign = 0.0, 1
    for x in numer:
        lg, s = log_abs_gamma(x)
        log_mag += lg
        sign *= s
    for x in denom:
        lg, s = log_abs_gamma(x)
        log_mag -= lg
        sign *= s
    return sign * math.exp(log_mag)
