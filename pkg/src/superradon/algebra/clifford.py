"""Normal-ordered super Clifford (Weyl-Clifford) algebra.

Bosonic generators e_j square to -1 and anticommute; symplectic generators
e`_j satisfy e`_j e`_k - e`_k e`_j = g_jk with g_{2i-1,2i} = 1 = -g_{2i,2i-1};
e_j and e`_k anticommute.  Superpolynomial coefficients commute with every
generator.  A basis word is e_E e`^beta with E ascending and beta a sorted
multi-index.
"""

from __future__ import annotations

from typing import Dict, Tuple

from .dims import Dims
from .superpoly import SuperPolynomial

WordKey = Tuple[int, Tuple[int, ...]]

DEFAULT_DEGREE_CAP = 16


def symplectic_form(j: int, k: int) -> int:
    """g_jk for one-based indices."""
    if j % 2 == 1 and k == j + 1:
        return 1
    if k % 2 == 1 and j == k + 1:
        return -1
    return 0


def _clifford_sign(a: int, b: int) -> int:
    """Sign of e_A e_B = sign * e_{A xor B} with e_j^2 = -1."""
    sign = 1
    # bring each e_b (ascending) to its place inside A, cancelling squares
    cur = a
    bb = b
    while bb:
        low = bb & -bb
        above = (cur & ~((low << 1) - 1)).bit_count()
        if above & 1:
            sign = -sign
        if cur & low:
            sign = -sign  # e_j e_j = -1
        cur ^= low
        bb ^= low
    return sign


def _word_times_generator(beta: Tuple[int, ...], k: int) -> Dict[Tuple[int, ...], int]:
    """e`^beta * e`_k in normal order (k zero-based)."""
    out: Dict[Tuple[int, ...], int] = {}
    up = list(beta)
    up[k] += 1
    out[tuple(up)] = 1
    # move e`_k left past e`_j^{beta_j} for j > k: e`_j e`_k = e`_k e`_j + g_jk
    for j in range(k + 1, len(beta)):
        if beta[j]:
            g = symplectic_form(j + 1, k + 1)
            if g:
                down = list(beta)
                down[j] -= 1
                key = tuple(down)
                out[key] = out.get(key, 0) + beta[j] * g
    return out


class WeylCliffordElement:
    """Finite map ``(E, beta) -> SuperPolynomial`` in normal order."""

    __slots__ = ("dims", "cap", "_terms")

    def __init__(self, dims: Dims, terms: Dict[WordKey, SuperPolynomial] | None = None,
                 cap: int = DEFAULT_DEGREE_CAP):
        self.dims = dims
        self.cap = cap
        clean: Dict[WordKey, SuperPolynomial] = {}
        if terms:
            for (E, beta), c in terms.items():
                if not isinstance(c, SuperPolynomial):
                    c = SuperPolynomial.constant(dims, c)
                if len(beta) != dims.nferm:
                    raise ValueError("fermionic word length must be 2n")
                if sum(beta) > cap:
                    raise OverflowError(f"Weyl word degree {sum(beta)} exceeds cap {cap}")
                if not c.is_zero():
                    clean[(E, tuple(beta))] = c
        self._terms = clean

    @classmethod
    def scalar(cls, dims: Dims, value) -> "WeylCliffordElement":
        return cls(dims, {(0, (0,) * dims.nferm): value})

    @classmethod
    def e(cls, dims: Dims, j: int) -> "WeylCliffordElement":
        """Bosonic generator e_j (one-based)."""
        return cls(dims, {(1 << (j - 1), (0,) * dims.nferm): 1})

    @classmethod
    def ef(cls, dims: Dims, j: int) -> "WeylCliffordElement":
        """Symplectic generator e`_j (one-based)."""
        beta = [0] * dims.nferm
        beta[j - 1] = 1
        return cls(dims, {(0, tuple(beta)): 1})

    @property
    def terms(self) -> Dict[WordKey, SuperPolynomial]:
        return dict(self._terms)

    def scalar_part(self) -> SuperPolynomial:
        return self._terms.get((0, (0,) * self.dims.nferm), SuperPolynomial.zero(self.dims))

    def is_scalar(self) -> bool:
        return all(k == (0, (0,) * self.dims.nferm) for k in self._terms)

    def _check(self, other):
        if self.dims != other.dims:
            raise ValueError("dimension mismatch")

    def _lift(self, other):
        if isinstance(other, WeylCliffordElement):
            self._check(other)
            return other
        return WeylCliffordElement.scalar(self.dims, other)

    def __add__(self, other):
        other = self._lift(other)
        acc = dict(self._terms)
        for k, c in other._terms.items():
            acc[k] = acc[k] + c if k in acc else c
        return WeylCliffordElement(self.dims, acc, self.cap)

    __radd__ = __add__

    def __neg__(self):
        return WeylCliffordElement(self.dims, {k: -c for k, c in self._terms.items()}, self.cap)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, WeylCliffordElement):
            return WeylCliffordElement(self.dims, {k: c * other for k, c in self._terms.items()}, self.cap)
        self._check(other)
        acc: Dict[WordKey, SuperPolynomial] = {}
        for (E, beta), c1 in self._terms.items():
            for (F, gamma), c2 in other._terms.items():
                sign = _clifford_sign(E, F)
                if sum(beta) % 2 and F.bit_count() % 2:
                    sign = -sign
                coeff = c1 * c2
                for word, mult in _word_product(beta, gamma, self.cap).items():
                    key = (E ^ F, word)
                    term = coeff * (sign * mult)
                    acc[key] = acc[key] + term if key in acc else term
        return WeylCliffordElement(self.dims, acc, self.cap)

    def __rmul__(self, other):
        return WeylCliffordElement(self.dims, {k: other * c for k, c in self._terms.items()}, self.cap)

    def __eq__(self, other):
        if isinstance(other, WeylCliffordElement):
            return self.dims == other.dims and self._terms == other._terms
        return self == WeylCliffordElement.scalar(self.dims, other)

    def __hash__(self):
        return hash((self.dims, frozenset(self._terms.items())))

    def map(self, fn) -> "WeylCliffordElement":
        return WeylCliffordElement(self.dims, {k: fn(c) for k, c in self._terms.items()}, self.cap)

    def normal_order(self) -> "WeylCliffordElement":
        """Already canonical; re-normalising is the identity."""
        return WeylCliffordElement(self.dims, dict(self._terms), self.cap)

    def to_text(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for (E, beta), c in sorted(self._terms.items()):
            gens = [f"e{i + 1}" for i in range(self.dims.m) if E >> i & 1]
            gens += [f"ef{i + 1}" + (f"^{b}" if b > 1 else "") for i, b in enumerate(beta) if b]
            parts.append(f"({c.to_text()})" + ("*" + "*".join(gens) if gens else ""))
        return " + ".join(parts)

    def __repr__(self):
        return f"WeylCliffordElement({self.dims}, {self.to_text()})"


def _word_product(beta: Tuple[int, ...], gamma: Tuple[int, ...], cap: int) -> Dict[Tuple[int, ...], int]:
    """e`^beta e`^gamma in normal order."""
    current: Dict[Tuple[int, ...], int] = {beta: 1}
    for k, times in enumerate(gamma):
        for _ in range(times):
            nxt: Dict[Tuple[int, ...], int] = {}
            for word, c in current.items():
                for w2, c2 in _word_times_generator(word, k).items():
                    nxt[w2] = nxt.get(w2, 0) + c * c2
            current = {w: c for w, c in nxt.items() if c}
    for w in current:
        if sum(w) > cap:
            raise OverflowError(f"Weyl word degree {sum(w)} exceeds cap {cap}")
    return current


def vector_element(dims: Dims) -> WeylCliffordElement:
    """The supervector x = sum x_j e_j + sum x`_j e`_j."""
    out = WeylCliffordElement(dims)
    for j in range(1, dims.m + 1):
        out = out + WeylCliffordElement.e(dims, j) * SuperPolynomial.bosonic(dims, j)
    for j in range(1, dims.nferm + 1):
        out = out + WeylCliffordElement.ef(dims, j) * SuperPolynomial.fermionic(dims, j)
    return out


def embed_polynomial(F: SuperPolynomial) -> WeylCliffordElement:
    return WeylCliffordElement.scalar(F.dims, F)
