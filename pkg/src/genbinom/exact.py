"""Exact arithmetic on rational multiples of powers of pi.

Every coefficient of the half-order binomial is ``q`` or ``q / pi`` with ``q``
rational.  Sums such as a row total mix both kinds, so :class:`ExactHalfValue`
stores a finite sum ``sum_e q_e * pi**e``.  Since pi is transcendental two
such sums are equal iff their coefficients agree, which is what lets the
identity checks demand a literally zero residual.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Union

Scalar = Union[int, Fraction]

_TERM = re.compile(r"^\s*([+-]?\d+)(?:/(\d+))?((?:\s*[/*]\s*pi(?:\^-?\d+)?)?)\s*$")


class ExactHalfValue:
    """A value ``sum_e q_e * pi**e`` with rational ``q_e``.

    The common case is a monomial, exposed through :attr:`q` and
    :attr:`pi_power`; zero is the canonical ``(0, 0)``.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, q: Scalar = 0, pi_power: int = 0) -> None:
        q = Fraction(q)
        self._terms: tuple[tuple[int, Fraction], ...] = ((pi_power, q),) if q else ()
        self._hash: int | None = None

    @classmethod
    def _from_terms(cls, terms: Iterable[tuple[int, Fraction]]) -> ExactHalfValue:
        acc: dict[int, Fraction] = {}
        for e, q in terms:
            acc[e] = acc.get(e, Fraction(0)) + q
        obj = cls.__new__(cls)
        obj._terms = tuple(sorted((e, q) for e, q in acc.items() if q))
        obj._hash = None
        return obj

    @property
    def terms(self) -> dict[int, Fraction]:
        return dict(self._terms)

    @property
    def is_monomial(self) -> bool:
        return len(self._terms) <= 1

    @property
    def q(self) -> Fraction:
        if not self._terms:
            return Fraction(0)
        if len(self._terms) > 1:
            raise ValueError(f"{self} is not a single rational multiple of a pi power")
        return self._terms[0][1]

    @property
    def pi_power(self) -> int:
        if not self._terms:
            return 0
        if len(self._terms) > 1:
            raise ValueError(f"{self} is not a single rational multiple of a pi power")
        return self._terms[0][0]

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __float__(self) -> float:
        return math.fsum(float(q) * math.pi**e for e, q in self._terms)

    @staticmethod
    def _coerce(other: object) -> ExactHalfValue | None:
        if isinstance(other, ExactHalfValue):
            return other
        if isinstance(other, Rational):
            return ExactHalfValue(Fraction(other))
        return None

    def __add__(self, other: object) -> ExactHalfValue:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return ExactHalfValue._from_terms(self._terms + o._terms)

    __radd__ = __add__

    def __neg__(self) -> ExactHalfValue:
        return ExactHalfValue._from_terms((e, -q) for e, q in self._terms)

    def __sub__(self, other: object) -> ExactHalfValue:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other: object) -> ExactHalfValue:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other: object) -> ExactHalfValue:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return ExactHalfValue._from_terms(
            (e1 + e2, q1 * q2) for e1, q1 in self._terms for e2, q2 in o._terms
        )

    __rmul__ = __mul__

    def __truediv__(self, other: object) -> ExactHalfValue:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not o:
            raise ZeroDivisionError("division by exact zero")
        if not o.is_monomial:
            raise ValueError("can only divide by a single rational multiple of a pi power")
        e2, q2 = o._terms[0]
        return ExactHalfValue._from_terms((e - e2, q / q2) for e, q in self._terms)

    def __rtruediv__(self, other: object) -> ExactHalfValue:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def __eq__(self, other: object) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self._terms == o._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self._terms)
        return self._hash

    def __repr__(self) -> str:
        return f"ExactHalfValue({str(self)!r})"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = [_format_term(q, e) for e, q in reversed(self._terms)]
        out = parts[0]
        for p in parts[1:]:
            out += " - " + p[1:] if p.startswith("-") else " + " + p
        return out

    @classmethod
    def parse(cls, text: str) -> ExactHalfValue:
        """Inverse of :func:`str` for monomials and ``+``-joined sums."""
        text = text.strip()
        if not text:
            raise ValueError("empty exact value")
        chunks = re.split(r"\s+([+-])\s+", text)
        total = cls()
        sign = 1
        for i, chunk in enumerate(chunks):
            if i % 2 == 1:
                sign = 1 if chunk == "+" else -1
                continue
            m = _TERM.match(chunk)
            if m is None:
                raise ValueError(f"cannot parse exact value {text!r}")
            q = Fraction(int(m.group(1)), int(m.group(2) or 1))
            e = 0
            suffix = m.group(3).replace(" ", "")
            if suffix:
                power = int(suffix.split("^")[1]) if "^" in suffix else 1
                e = -power if suffix.startswith("/") else power
            total = total + cls(sign * q, e)
        return total


def _format_term(q: Fraction, e: int) -> str:
    base = str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"
    if e == 0:
        return base
    op = "/" if e < 0 else "*"
    power = "" if abs(e) == 1 else f"^{abs(e)}"
    return f"{base}{op}pi{power}"


ZERO = ExactHalfValue(0)
ONE = ExactHalfValue(1)
INV_PI = ExactHalfValue(1, -1)
