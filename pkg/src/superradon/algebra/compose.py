"""Composition of smooth functions with even superpolynomials.

F(a_1, ..., a_l) is defined by Taylor expansion around the bodies: the
nilpotent parts are nilpotent, so the series terminates.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, List, Sequence, Tuple

from .gamma import falling
from .grassmann import GrassmannElement
from .superpoly import SuperPolynomial


class DomainError(ValueError):
    """An argument lies outside the domain of the outer function."""


@dataclass(frozen=True)
class CompositionSeries:
    """Outer function given by its partial derivatives, applied to even arguments.

    ``derivative(k, bodies)`` returns the mixed partial of order ``k`` at the
    body values.  ``in_domain(bodies)`` (optional) validates the bodies.
    """

    derivative: Callable[[Tuple[int, ...], Tuple], object]
    args: Tuple[SuperPolynomial, ...]
    in_domain: Callable[[Tuple], bool] | None = None


def _split(args: Sequence[SuperPolynomial]):
    dims = args[0].dims
    for a in args:
        if a.dims != dims:
            raise ValueError("arguments must share dimensions")
        if not a.is_even():
            raise ValueError("composition needs even arguments")
    return dims, [a.body() for a in args], [a.nilpotent() for a in args]


def taylor_terms(args: Sequence[SuperPolynomial]) -> List[Tuple[Tuple[int, ...], SuperPolynomial]]:
    """Non-vanishing terms (k, prod nilpotent_i^{k_i} / k!) of the expansion."""
    dims, _, nils = _split(args)
    order = dims.nferm // 2
    out = []
    for k in itertools.product(range(order + 1), repeat=len(args)):
        if sum(k) > order:
            continue
        prod = SuperPolynomial.constant(dims, Fraction(1, math.prod(math.factorial(i) for i in k)))
        for nil, ki in zip(nils, k):
            if ki:
                prod = prod * nil ** ki
        if not prod.is_zero():
            out.append((k, prod))
    return out


def taylor_compose(series: CompositionSeries, at=None):
    """Expand the composed superfunction.

    With ``at=None`` every body must be a constant and the result is a
    SuperPolynomial.  Otherwise bodies and nilpotent parts are evaluated at
    the bosonic point ``at`` and a GrassmannElement is returned.
    """
    dims, bodies, _ = _split(series.args)
    if at is None:
        values = []
        for b in bodies:
            if b.degree() > 0:
                raise ValueError("non-constant bodies need an evaluation point")
            values.append(b.constant_term())
        values = tuple(values)
    else:
        values = tuple(b.evaluate_bosonic(at).body() for b in bodies)
    if series.in_domain is not None and not series.in_domain(values):
        raise DomainError(f"bodies {values} lie outside the domain of the outer function")
    total = SuperPolynomial.zero(dims) if at is None else GrassmannElement(dims.nferm)
    for k, prod in taylor_terms(series.args):
        d = series.derivative(k, values)
        if at is None:
            total = total + prod * d
        else:
            total = total + prod.evaluate_bosonic(at) * d
    return total


def power_series(lam) -> Callable[[Tuple[int, ...], Tuple], object]:
    """Derivatives of t -> t^lam: falling(lam, k) t^(lam - k)."""
    exact = isinstance(lam, (int, Fraction))

    def derivative(k, bodies):
        (kk,), (t,) = k, bodies
        coeff = falling(lam, kk) if exact else math.prod(lam - i for i in range(kk))
        if exact and isinstance(t, (int, Fraction)):
            if t == 1:
                return coeff
            if Fraction(lam - kk).denominator == 1:
                return coeff * Fraction(t) ** int(lam - kk)
        return float(coeff) * float(t) ** float(lam - kk)

    return derivative


def generalized_power(a: SuperPolynomial, lam, at=None):
    """a^lam for an even superpolynomial with positive body."""
    def positive(bodies):
        t = bodies[0]
        if isinstance(lam, int) or (isinstance(lam, Fraction) and lam.denominator == 1 and lam >= 0):
            return True
        return float(t) > 0

    return taylor_compose(CompositionSeries(power_series(lam), (a,), positive), at)
