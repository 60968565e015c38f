"""Parser for superpolynomial literals such as ``3/2*x1^2*xf1*xf2 - x2 + 1``.

Grammar: a sum of terms joined by ``+``/``-``; a term is a product of
rationals ``p`` or ``p/q``, bosonic powers ``x<k>`` or ``x<k>^e`` and
fermionic generators ``xf<k>``.  Fermionic factors must appear in strictly
ascending index order.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import List, Tuple

from .algebra.dims import Dims
from .algebra.superpoly import SuperPolynomial

_TOKEN = re.compile(r"\s*(?:(xf)(\d+)|(x)(\d+)|(\d+)|([-+*/^]))")


class LiteralError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


def _tokens(text: str) -> List[Tuple[str, str, int]]:
    out, pos = [], 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m:
            start = pos + len(text[pos:]) - len(text[pos:].lstrip())
            raise LiteralError(f"unexpected character {text[start]!r}", start)
        start = m.start(1) if m.group(1) else m.start(3) if m.group(3) else m.start(m.lastindex)
        if m.group(1):
            out.append(("xf", m.group(2), start))
        elif m.group(3):
            out.append(("x", m.group(4), start))
        elif m.group(5):
            out.append(("int", m.group(5), start))
        else:
            out.append((m.group(6), m.group(6), start))
        pos = m.end()
    out.append(("end", "", len(text)))
    return out


class _Parser:
    def __init__(self, text: str, dims: Dims):
        self.toks = _tokens(text)
        self.i = 0
        self.dims = dims

    def peek(self):
        return self.toks[self.i]

    def take(self, kind=None):
        tok = self.toks[self.i]
        if kind is not None and tok[0] != kind:
            raise LiteralError(f"expected {kind}, found {tok[1] or 'end of input'!r}", tok[2])
        self.i += 1
        return tok

    def expr(self) -> SuperPolynomial:
        total = SuperPolynomial.zero(self.dims)
        sign = 1
        if self.peek()[0] in "+-":
            sign = -1 if self.take()[0] == "-" else 1
        total = total + self.term() * sign
        while self.peek()[0] in ("+", "-"):
            sign = -1 if self.take()[0] == "-" else 1
            total = total + self.term() * sign
        self.take("end")
        return total

    def term(self) -> SuperPolynomial:
        coeff = Fraction(1)
        alpha = [0] * self.dims.m
        mask, last = 0, 0
        while True:
            kind, val, pos = self.peek()
            if kind == "int":
                self.take()
                num = Fraction(int(val))
                if self.peek()[0] == "/":
                    self.take()
                    den = int(self.take("int")[1])
                    if den == 0:
                        raise LiteralError("division by zero", pos)
                    num /= den
                coeff *= num
            elif kind == "x":
                self.take()
                k = int(val)
                if not 1 <= k <= self.dims.m:
                    raise LiteralError(f"x{k} is outside 1..{self.dims.m}", pos)
                e = 1
                if self.peek()[0] == "^":
                    self.take()
                    e = int(self.take("int")[1])
                alpha[k - 1] += e
            elif kind == "xf":
                self.take()
                k = int(val)
                if not 1 <= k <= self.dims.nferm:
                    raise LiteralError(f"xf{k} is outside 1..{self.dims.nferm}", pos)
                if k <= last:
                    raise LiteralError("fermionic factors must be in ascending index order", pos)
                if self.peek()[0] == "^":
                    raise LiteralError("fermionic factors take no exponent", self.peek()[2])
                mask |= 1 << (k - 1)
                last = k
            else:
                raise LiteralError(f"expected a factor, found {val or 'end of input'!r}", pos)
            if self.peek()[0] != "*":
                break
            self.take()
        return SuperPolynomial.monomial(self.dims, tuple(alpha), mask, coeff)


def parse_polynomial(text: str, dims: Dims) -> SuperPolynomial:
    """Parse a literal into a SuperPolynomial on ``dims``; raises LiteralError."""
    return _Parser(text, dims).expr()


__all__ = ["LiteralError", "parse_polynomial"]
