"""Superpolynomials: polynomials in bosonic variables with Grassmann coefficients."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, Tuple

from .dims import Dims
from .grassmann import GrassmannElement, bits, derivative_sign, merge_sign, right_derivative_sign

Key = Tuple[Tuple[int, ...], int]


class SuperPolynomial:
    """Finite map ``(alpha, mask) -> coefficient`` over ``Dims(m, n)``.

    ``alpha`` is the bosonic exponent tuple of length m and ``mask`` the
    fermionic subset over the 2n generators.  Coefficients may be any ring
    elements (Fraction, Scalar, float); zero coefficients are dropped.
    """

    __slots__ = ("dims", "_terms")

    def __init__(self, dims: Dims, terms: Dict[Key, object] | None = None):
        self.dims = dims
        clean: Dict[Key, object] = {}
        if terms:
            for (alpha, mask), c in terms.items():
                if len(alpha) != dims.m:
                    raise ValueError(f"exponent {alpha} does not match m={dims.m}")
                if mask >> dims.nferm:
                    raise ValueError(f"fermionic mask {mask:b} exceeds 2n={dims.nferm}")
                if c != 0:
                    clean[(tuple(alpha), mask)] = c
        self._terms = clean

    # constructors ---------------------------------------------------------
    @classmethod
    def constant(cls, dims: Dims, value=1) -> "SuperPolynomial":
        return cls(dims, {((0,) * dims.m, 0): value})

    @classmethod
    def zero(cls, dims: Dims) -> "SuperPolynomial":
        return cls(dims)

    @classmethod
    def bosonic(cls, dims: Dims, j: int) -> "SuperPolynomial":
        """The one-based bosonic coordinate x_j."""
        alpha = [0] * dims.m
        alpha[j - 1] = 1
        return cls(dims, {(tuple(alpha), 0): 1})

    @classmethod
    def fermionic(cls, dims: Dims, j: int) -> "SuperPolynomial":
        """The one-based fermionic coordinate x`_j."""
        if not 1 <= j <= dims.nferm:
            raise ValueError(f"fermionic index {j} outside 1..{dims.nferm}")
        return cls(dims, {((0,) * dims.m, 1 << (j - 1)): 1})

    @classmethod
    def monomial(cls, dims: Dims, alpha: Iterable[int], mask: int = 0, coeff=1) -> "SuperPolynomial":
        return cls(dims, {(tuple(alpha), mask): coeff})

    @classmethod
    def from_grassmann(cls, dims: Dims, g: GrassmannElement) -> "SuperPolynomial":
        if g.ngen != dims.nferm:
            raise ValueError("Grassmann element does not match the fermionic dimension")
        zero = (0,) * dims.m
        return cls(dims, {(zero, m): c for m, c in g.terms.items()})

    # queries --------------------------------------------------------------
    @property
    def terms(self) -> Dict[Key, object]:
        return dict(self._terms)

    def items(self):
        return sorted(self._terms.items())

    def coefficient(self, alpha, mask: int = 0):
        return self._terms.get((tuple(alpha), mask), 0)

    def is_zero(self) -> bool:
        return not self._terms

    def constant_term(self):
        return self._terms.get(((0,) * self.dims.m, 0), 0)

    def degrees(self) -> set:
        return {sum(a) + m.bit_count() for a, m in self._terms}

    def degree(self) -> int:
        """Maximal total degree |alpha| + |A| (-1 for the zero polynomial)."""
        return max(self.degrees(), default=-1)

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def parity(self) -> int | None:
        ps = {m.bit_count() & 1 for _, m in self._terms}
        if not ps:
            return 0
        return ps.pop() if len(ps) == 1 else None

    def is_even(self) -> bool:
        return self.parity() == 0

    def homogeneous_part(self, d: int) -> "SuperPolynomial":
        return SuperPolynomial(
            self.dims, {k: c for k, c in self._terms.items() if sum(k[0]) + k[1].bit_count() == d}
        )

    def fermionic_part(self, mask: int) -> "SuperPolynomial":
        """Bosonic polynomial multiplying x`_mask (returned with mask 0)."""
        return SuperPolynomial(self.dims, {(a, 0): c for (a, m), c in self._terms.items() if m == mask})

    def masks(self) -> set:
        return {m for _, m in self._terms}

    def body(self) -> "SuperPolynomial":
        return self.fermionic_part(0)

    def nilpotent(self) -> "SuperPolynomial":
        return SuperPolynomial(self.dims, {k: c for k, c in self._terms.items() if k[1]})

    # arithmetic -----------------------------------------------------------
    def _check(self, other: "SuperPolynomial"):
        if self.dims != other.dims:
            raise ValueError(f"dimension mismatch: {self.dims} vs {other.dims}")

    def _lift(self, other):
        if isinstance(other, SuperPolynomial):
            self._check(other)
            return other
        return SuperPolynomial.constant(self.dims, other)

    def __add__(self, other):
        other = self._lift(other)
        acc = dict(self._terms)
        for k, c in other._terms.items():
            acc[k] = acc.get(k, 0) + c
        return SuperPolynomial(self.dims, acc)

    __radd__ = __add__

    def __neg__(self):
        return SuperPolynomial(self.dims, {k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, SuperPolynomial):
            return SuperPolynomial(self.dims, {k: c * other for k, c in self._terms.items()})
        self._check(other)
        acc: Dict[Key, object] = {}
        for (a1, m1), c1 in self._terms.items():
            for (a2, m2), c2 in other._terms.items():
                if m1 & m2:
                    continue
                key = (tuple(x + y for x, y in zip(a1, a2)), m1 | m2)
                acc[key] = acc.get(key, 0) + merge_sign(m1, m2) * (c1 * c2)
        return SuperPolynomial(self.dims, acc)

    def __rmul__(self, other):
        return SuperPolynomial(self.dims, {k: other * c for k, c in self._terms.items()})

    def __pow__(self, k: int):
        out = SuperPolynomial.constant(self.dims)
        base = self
        while k:
            if k & 1:
                out = out * base
            k >>= 1
            if k:
                base = base * base
        return out

    def __eq__(self, other):
        if isinstance(other, SuperPolynomial):
            return self.dims == other.dims and self._terms == other._terms
        return self == SuperPolynomial.constant(self.dims, other)

    def __hash__(self):
        return hash((self.dims, frozenset(self._terms.items())))

    def map(self, fn) -> "SuperPolynomial":
        return SuperPolynomial(self.dims, {k: fn(c) for k, c in self._terms.items()})

    # calculus helpers -------------------------------------------------------
    def d_bosonic(self, j: int) -> "SuperPolynomial":
        """Partial derivative with respect to the one-based bosonic x_j."""
        i = j - 1
        acc = {}
        for (a, m), c in self._terms.items():
            if a[i]:
                b = list(a)
                b[i] -= 1
                acc[(tuple(b), m)] = a[i] * c
        return SuperPolynomial(self.dims, acc)

    def d_fermionic(self, j: int) -> "SuperPolynomial":
        """Left derivative with respect to the one-based fermionic x`_j."""
        bit = 1 << (j - 1)
        return SuperPolynomial(
            self.dims,
            {(a, m ^ bit): derivative_sign(m, bit) * c for (a, m), c in self._terms.items() if m & bit},
        )

    def d_fermionic_right(self, j: int) -> "SuperPolynomial":
        """Right derivative with respect to x`_j."""
        bit = 1 << (j - 1)
        return SuperPolynomial(
            self.dims,
            {(a, m ^ bit): right_derivative_sign(m, bit) * c for (a, m), c in self._terms.items() if m & bit},
        )

    def evaluate_bosonic(self, point) -> GrassmannElement:
        """Substitute numbers for the bosonic variables; returns the Grassmann value."""
        acc: Dict[int, object] = {}
        for (a, m), c in self._terms.items():
            v = c
            for x, e in zip(point, a):
                if e:
                    v = v * x ** e
            acc[m] = acc.get(m, 0) + v
        return GrassmannElement(self.dims.nferm, acc)

    def restrict(self, keep_bos, keep_ferm, dims: Dims) -> "SuperPolynomial":
        """Set all variables outside the kept index lists to zero.

        ``keep_bos`` and ``keep_ferm`` are zero-based positions that survive,
        listed in their new order; the result lives over ``dims``.
        """
        keep_bos = list(keep_bos)
        keep_ferm = list(keep_ferm)
        if keep_ferm != sorted(keep_ferm):
            raise ValueError("kept fermionic positions must be ascending")
        drop_b = set(range(self.dims.m)) - set(keep_bos)
        kept_mask = sum(1 << i for i in keep_ferm)
        acc: Dict[Key, object] = {}
        for (a, m), c in self._terms.items():
            if any(a[i] for i in drop_b) or m & ~kept_mask:
                continue
            new_a = tuple(a[i] for i in keep_bos)
            new_m = 0
            for pos, i in enumerate(keep_ferm):
                if m >> i & 1:
                    new_m |= 1 << pos
            # ascending kept positions preserve the monomial order: no sign
            acc[(new_a, new_m)] = acc.get((new_a, new_m), 0) + c
        return SuperPolynomial(dims, acc)

    def embed(self, dims: Dims, bos_offset: int = 0, ferm_offset: int = 0) -> "SuperPolynomial":
        """Place this polynomial's variables inside a larger variable set."""
        acc = {}
        for (a, m), c in self._terms.items():
            b = [0] * dims.m
            b[bos_offset:bos_offset + len(a)] = a
            acc[(tuple(b), m << ferm_offset)] = c
        return SuperPolynomial(dims, acc)

    # text -------------------------------------------------------------------
    def to_text(self) -> str:
        """Deterministic text form using the ``x<k>`` / ``xf<k>`` literal grammar."""
        if not self._terms:
            return "0"
        ordered = sorted(
            self._terms.items(),
            key=lambda t: (sum(t[0][0]) + t[0][1].bit_count(), tuple(-e for e in t[0][0]), t[0][1]),
        )
        parts = []
        for (a, m), c in ordered:
            factors = [f"x{i + 1}" + (f"^{e}" if e > 1 else "") for i, e in enumerate(a) if e]
            factors += [f"xf{i + 1}" for i in bits(m)]
            parts.append(_format_term(c, factors))
        text = " + ".join(parts)
        return text.replace("+ -", "- ")

    def __repr__(self):
        return f"SuperPolynomial({self.dims}, {self.to_text()})"

    __str__ = to_text


def _format_term(c, factors) -> str:
    from .scalar import Scalar

    if isinstance(c, Scalar) and not c.is_rational():
        coeff = f"({c})"
    else:
        if isinstance(c, Scalar):
            c = c.rational()
        coeff = str(c)
    if not factors:
        return coeff
    if coeff == "1":
        return "*".join(factors)
    if coeff == "-1":
        return "-" + "*".join(factors)
    return coeff + "*" + "*".join(factors)


@dataclass(frozen=True)
class SuperVector:
    """A block of variables (bosonic and fermionic) inside an ambient space.

    ``role`` is a free tag such as ``"x"``, ``"w"`` or ``"y"``.  The block uses
    bosonic positions ``bos_offset .. bos_offset+m-1`` and fermionic generators
    ``ferm_offset .. ferm_offset+2n-1`` (zero-based) of ``ambient``.
    """

    dims: Dims
    role: str = "x"
    bos_offset: int = 0
    ferm_offset: int = 0
    ambient: Dims | None = None

    @property
    def space(self) -> Dims:
        return self.ambient if self.ambient is not None else self.dims

    def bosonic(self, j: int) -> SuperPolynomial:
        return SuperPolynomial.bosonic(self.space, self.bos_offset + j)

    def fermionic(self, j: int) -> SuperPolynomial:
        return SuperPolynomial.fermionic(self.space, self.ferm_offset + j)

    def bos_index(self, j: int) -> int:
        """One-based ambient index of the block's bosonic x_j."""
        return self.bos_offset + j

    def ferm_index(self, j: int) -> int:
        """One-based ambient index of the block's fermionic x`_j."""
        return self.ferm_offset + j


def joint_vectors(dims: Dims, roles: Iterable[str]) -> Tuple[SuperVector, ...]:
    """Several copies of R^{m|2n} laid out consecutively in one ambient space."""
    roles = list(roles)
    k = len(roles)
    ambient = Dims(dims.m * k, dims.n * k)
    return tuple(
        SuperVector(dims, r, i * dims.m, i * dims.nferm, ambient) for i, r in enumerate(roles)
    )


def inner_product(x: SuperVector, y: SuperVector) -> SuperPolynomial:
    """<x, y> = sum x_j y_j - 1/2 sum (x`_{2j-1} y`_{2j} - x`_{2j} y`_{2j-1})."""
    if x.dims != y.dims or x.space != y.space:
        raise ValueError("inner product needs vectors of equal dimensions in one space")
    out = SuperPolynomial.zero(x.space)
    for j in range(1, x.dims.m + 1):
        out = out + x.bosonic(j) * y.bosonic(j)
    half = Fraction(1, 2)
    for j in range(1, x.dims.n + 1):
        a, b = 2 * j - 1, 2 * j
        out = out - half * (x.fermionic(a) * y.fermionic(b) - x.fermionic(b) * y.fermionic(a))
    return out


def norm_squared(x: SuperVector) -> SuperPolynomial:
    """|x|^2 = <x, x> = sum x_j^2 - sum x`_{2j-1} x`_{2j}."""
    return inner_product(x, x)


def fermionic_square(x: SuperVector) -> SuperPolynomial:
    """Clifford square of the fermionic part: x`^2 = sum x`_{2j-1} x`_{2j}."""
    out = SuperPolynomial.zero(x.space)
    for j in range(1, x.dims.n + 1):
        out = out + x.fermionic(2 * j - 1) * x.fermionic(2 * j)
    return out


def clifford_square(x: SuperVector) -> SuperPolynomial:
    """Clifford square of the full supervector, x^2 = -|x|^2."""
    return -norm_squared(x)


def vector(dims: Dims, role: str = "x") -> SuperVector:
    return SuperVector(dims, role)
