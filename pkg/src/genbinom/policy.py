"""Truncation and quadrature contracts shared by the series and integral routes."""

from __future__ import annotations

from dataclasses import dataclass, field
import warnings
from typing import Any, Callable

from scipy import integrate


class DomainError(ValueError):
    """Argument outside the mathematical domain of an operation."""


class DivergenceError(DomainError):
    """A series was requested outside its region of convergence."""


class AccuracyError(ArithmeticError):
    """A tolerance could not be met; ``partial`` carries the best estimate."""

    def __init__(self, message: str, partial: float | None = None) -> None:
        super().__init__(message)
        self.partial = partial


@dataclass(frozen=True)
class SeriesPolicy:
    rel_tol: float = 1e-14
    abs_tol: float = 0.0
    max_terms: int = 200_000

    def __post_init__(self) -> None:
        if not (0 < self.rel_tol <= 1e-3):
            raise DomainError(f"rel_tol must lie in (0, 1e-3], got {self.rel_tol}")
        if self.abs_tol < 0:
            raise DomainError("abs_tol must be non-negative")
        if self.max_terms < 8:
            raise DomainError("max_terms must be at least 8")

    def satisfied(self, value: float, tail_bound: float) -> bool:
        return tail_bound <= max(self.rel_tol * abs(value), self.abs_tol)


@dataclass(frozen=True)
class SeriesOutcome:
    value: float
    terms_used: int
    tail_bound: float
    converged: bool

    def __float__(self) -> float:
        return self.value


@dataclass(frozen=True)
class QuadraturePolicy:
    """Adaptive Gauss-Kronrod integration settings (QUADPACK underneath)."""

    abs_tol: float = 1e-12
    rel_tol: float = 1e-12
    max_subintervals: int = 200
    extra: dict[str, Any] = field(default_factory=dict, compare=False)

    def __post_init__(self) -> None:
        if self.abs_tol <= 0 and self.rel_tol <= 0:
            raise DomainError("at least one quadrature tolerance must be positive")
        if self.max_subintervals < 1:
            raise DomainError("max_subintervals must be positive")

    def integrate(self, f: Callable[[float], float], a: float, b: float, **kw: Any) -> float:
        """Integrate ``f`` over ``[a, b]``; raise :class:`AccuracyError` if the error estimate is too large."""
        if a == b:
            return 0.0
        opts = {**self.extra, **kw}
        with warnings.catch_warnings():
            # the error estimate is checked below instead
            warnings.simplefilter("ignore", integrate.IntegrationWarning)
            value, err = integrate.quad(
                f, a, b, epsabs=self.abs_tol, epsrel=self.rel_tol, limit=self.max_subintervals, **opts
            )
        if err > max(self.abs_tol, self.rel_tol * abs(value)) * 10:
            raise AccuracyError(f"quadrature error estimate {err:.3g} exceeds tolerance", partial=value)
        return value


DEFAULT_SERIES = SeriesPolicy()
DEFAULT_QUADRATURE = QuadraturePolicy()
