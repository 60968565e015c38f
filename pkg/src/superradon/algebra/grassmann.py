"""Grassmann algebra on a finite number of anticommuting generators.

Monomials are bitmasks: bit ``i`` stands for generator ``i+1``, and a mask
always denotes the product in ascending index order.
"""

from __future__ import annotations

from typing import Dict, Iterable, Iterator, Tuple

from .scalar import Scalar


def merge_sign(a: int, b: int) -> int:
    """Sign of reordering x_A x_B into ascending order (A, B disjoint)."""
    inversions = 0
    while b:
        low = b & -b
        inversions += (a & ~((low << 1) - 1)).bit_count()
        b ^= low
    return -1 if inversions & 1 else 1


def derivative_sign(mask: int, bit: int) -> int:
    """Sign produced by a left derivative removing ``bit`` from ``mask``."""
    return -1 if (mask & (bit - 1)).bit_count() & 1 else 1


def right_derivative_sign(mask: int, bit: int) -> int:
    """Sign produced by a right derivative removing ``bit`` from ``mask``."""
    return -1 if (mask & ~((bit << 1) - 1)).bit_count() & 1 else 1


def bits(mask: int) -> Iterator[int]:
    """Zero-based generator indices present in ``mask``, ascending."""
    i = 0
    while mask:
        if mask & 1:
            yield i
        mask >>= 1
        i += 1


def mask_of(indices: Iterable[int]) -> int:
    """Bitmask for one-based generator indices."""
    out = 0
    for j in indices:
        out |= 1 << (j - 1)
    return out


class GrassmannElement:
    """Element of the Grassmann algebra on ``ngen`` generators."""

    __slots__ = ("ngen", "_terms")

    def __init__(self, ngen: int, terms: Dict[int, object] | None = None):
        self.ngen = ngen
        clean = {}
        if terms:
            full = (1 << ngen) - 1
            for mask, c in terms.items():
                if mask & ~full:
                    raise ValueError(f"mask {mask:b} exceeds {ngen} generators")
                if c != 0:
                    clean[mask] = c
        self._terms = clean

    @classmethod
    def one(cls, ngen: int, value=1) -> "GrassmannElement":
        return cls(ngen, {0: value})

    @classmethod
    def generator(cls, ngen: int, j: int) -> "GrassmannElement":
        """The one-based generator x_j."""
        if not 1 <= j <= ngen:
            raise ValueError(f"generator index {j} outside 1..{ngen}")
        return cls(ngen, {1 << (j - 1): 1})

    @property
    def terms(self) -> Dict[int, object]:
        return dict(self._terms)

    def items(self):
        return sorted(self._terms.items())

    def coefficient(self, mask: int):
        return self._terms.get(mask, 0)

    def body(self):
        return self._terms.get(0, 0)

    def is_zero(self) -> bool:
        return not self._terms

    def parity(self) -> int | None:
        """0 for even, 1 for odd, None for mixed (zero counts as even)."""
        ps = {m.bit_count() & 1 for m in self._terms}
        if not ps:
            return 0
        return ps.pop() if len(ps) == 1 else None

    def _check(self, other: "GrassmannElement"):
        if self.ngen != other.ngen:
            raise ValueError(f"dimension mismatch: {self.ngen} vs {other.ngen} generators")

    def __add__(self, other):
        if not isinstance(other, GrassmannElement):
            other = GrassmannElement.one(self.ngen, other)
        self._check(other)
        acc = dict(self._terms)
        for m, c in other._terms.items():
            acc[m] = acc.get(m, 0) + c
        return GrassmannElement(self.ngen, acc)

    __radd__ = __add__

    def __neg__(self):
        return GrassmannElement(self.ngen, {m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, GrassmannElement):
            return GrassmannElement(self.ngen, {m: c * other for m, c in self._terms.items()})
        self._check(other)
        acc: Dict[int, object] = {}
        for a, ca in self._terms.items():
            for b, cb in other._terms.items():
                if a & b:
                    continue
                m = a | b
                acc[m] = acc.get(m, 0) + merge_sign(a, b) * (ca * cb)
        return GrassmannElement(self.ngen, acc)

    def __rmul__(self, other):
        return GrassmannElement(self.ngen, {m: other * c for m, c in self._terms.items()})

    def __pow__(self, k: int):
        out = GrassmannElement.one(self.ngen)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, GrassmannElement):
            return self.ngen == other.ngen and self._terms == other._terms
        return self._terms == ({0: other} if other != 0 else {})

    def __hash__(self):
        return hash((self.ngen, frozenset(self._terms.items())))

    def map(self, fn) -> "GrassmannElement":
        return GrassmannElement(self.ngen, {m: fn(c) for m, c in self._terms.items()})

    def derivative(self, j: int) -> "GrassmannElement":
        """Left derivative with respect to the one-based generator j."""
        bit = 1 << (j - 1)
        return GrassmannElement(
            self.ngen,
            {m ^ bit: derivative_sign(m, bit) * c for m, c in self._terms.items() if m & bit},
        )

    def embed(self, ngen: int, offset: int = 0) -> "GrassmannElement":
        """Reinterpret generators 1..k as offset+1..offset+k of a larger algebra."""
        return GrassmannElement(ngen, {m << offset: c for m, c in self._terms.items()})

    def to_text(self, symbol: str = "xf") -> str:
        if not self._terms:
            return "0"
        parts = []
        for m, c in sorted(self._terms.items(), key=lambda t: (t[0].bit_count(), t[0])):
            mono = "*".join(f"{symbol}{i + 1}" for i in bits(m))
            parts.append(f"({c})" + (f"*{mono}" if mono else ""))
        return " + ".join(parts)

    def __repr__(self):
        return f"GrassmannElement({self.ngen}, {self.to_text()})"


def berezin(element: GrassmannElement, first: int = 1, count: int | None = None, exact: bool = True):
    """Berezin integral over the generators ``first .. first+count-1``.

    Applies the left derivatives in the order first, first+1, ..., last and
    multiplies by pi^(-count/2).  Returns a GrassmannElement on the remaining
    generators (renumbered), or a bare coefficient when none remain.
    ``exact=False`` uses a float normalisation.
    """
    if count is None:
        count = element.ngen - first + 1
    if count % 2:
        raise ValueError("Berezin integration needs an even number of generators")
    out = element
    for j in range(first, first + count):
        # after removing earlier generators the current one stays at index `first`
        out = out.derivative(first)
        out = _drop_generator(out, first)
    norm = Scalar.pi_power(-count) if exact else float(Scalar.pi_power(-count))
    out = out.map(lambda c: c * norm)
    if out.ngen == 0:
        return out.body()
    return out


def _drop_generator(element: GrassmannElement, j: int) -> GrassmannElement:
    """Renumber after generator j (absent from every term) is removed."""
    low = (1 << (j - 1)) - 1
    acc = {}
    for m, c in element._terms.items():
        acc[(m & low) | ((m >> j) << (j - 1))] = c
    return GrassmannElement(element.ngen - 1, acc)


def top_coefficient(element: GrassmannElement):
    return element.coefficient((1 << element.ngen) - 1)

