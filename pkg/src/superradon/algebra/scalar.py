"""Exact scalars: finite sums of rationals times half-integer powers of pi."""

from __future__ import annotations

import math
from fractions import Fraction
from numbers import Rational
from typing import Dict, Iterable, Tuple, Union

Number = Union[int, Fraction]


def _as_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, Rational)):
        return Fraction(value)
    raise TypeError(f"cannot convert {type(value).__name__} to an exact rational")


class Scalar:
    """A value ``sum_q c_q * pi^(q/2)`` with rational ``c_q``.

    Terms with equal ``q`` are merged; zero coefficients are never stored.
    Mixing with ``int``/``Fraction`` stays exact, mixing with ``float`` or
    ``complex`` collapses to a plain number.
    """

    __slots__ = ("_terms",)

    def __init__(self, value: Number = 0, pi_half_power: int = 0):
        c = _as_fraction(value)
        self._terms: Dict[int, Fraction] = {int(pi_half_power): c} if c else {}

    @classmethod
    def from_terms(cls, items: Iterable[Tuple[int, Number]]) -> "Scalar":
        out = cls()
        acc: Dict[int, Fraction] = {}
        for q, c in items:
            acc[q] = acc.get(q, Fraction(0)) + _as_fraction(c)
        out._terms = {q: c for q, c in acc.items() if c}
        return out

    @classmethod
    def pi_power(cls, q: int) -> "Scalar":
        """pi^(q/2)."""
        return cls(1, q)

    @property
    def terms(self) -> Tuple[Tuple[int, Fraction], ...]:
        return tuple(sorted(self._terms.items()))

    def is_zero(self) -> bool:
        return not self._terms

    def is_rational(self) -> bool:
        return all(q == 0 for q in self._terms)

    def rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self._terms.get(0, Fraction(0))

    def single_term(self) -> Tuple[Fraction, int]:
        """Return ``(c, q)`` for a one-term scalar; zero gives ``(0, 0)``."""
        if not self._terms:
            return Fraction(0), 0
        if len(self._terms) != 1:
            raise ValueError(f"{self} has more than one pi-power term")
        (q, c), = self._terms.items()
        return c, q

    # arithmetic -----------------------------------------------------------
    @staticmethod
    def _coerce(other):
        if isinstance(other, Scalar):
            return other
        if isinstance(other, (int, Fraction)):
            return Scalar(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            if isinstance(other, (float, complex)):
                return float(self) + other
            return NotImplemented
        return Scalar.from_terms(list(self._terms.items()) + list(o._terms.items()))

    __radd__ = __add__

    def __neg__(self):
        return Scalar.from_terms((q, -c) for q, c in self._terms.items())

    def __pos__(self):
        return self

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            if isinstance(other, (float, complex)):
                return float(self) - other
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            if isinstance(other, (float, complex)):
                return float(self) * other
            return NotImplemented
        acc: Dict[int, Fraction] = {}
        for q1, c1 in self._terms.items():
            for q2, c2 in o._terms.items():
                acc[q1 + q2] = acc.get(q1 + q2, Fraction(0)) + c1 * c2
        return Scalar.from_terms(acc.items())

    __rmul__ = __mul__

    def inverse(self) -> "Scalar":
        c, q = self.single_term()
        if not c:
            raise ZeroDivisionError("inverse of zero scalar")
        return Scalar(1 / c, -q)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            if isinstance(other, (float, complex)):
                return float(self) / other
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            if isinstance(other, (float, complex)):
                return other / float(self)
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        out = Scalar(1)
        for _ in range(k):
            out = out * self
        return out

    # comparison / conversion ---------------------------------------------
    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            if isinstance(other, (float, complex)):
                return float(self) == other
            return NotImplemented
        return self._terms == o._terms

    def __hash__(self):
        if self.is_rational():
            return hash(self.rational())
        return hash(frozenset(self._terms.items()))

    def __bool__(self):
        return bool(self._terms)

    def __float__(self):
        return float(sum(float(c) * math.pi ** (q / 2) for q, c in self._terms.items()))

    def __complex__(self):
        return complex(float(self))

    def __repr__(self):
        return f"Scalar({self})"

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for q, c in self.terms:
            if q == 0:
                parts.append(str(c))
                continue
            e = Fraction(q, 2)
            exp = str(e) if e.denominator == 1 and e >= 0 else f"({e})"
            parts.append(f"{c} * pi^{exp}")
        return " + ".join(parts)


PI = Scalar.pi_power(2)


def as_scalar(value) -> Scalar:
    if isinstance(value, Scalar):
        return value
    return Scalar(value)
