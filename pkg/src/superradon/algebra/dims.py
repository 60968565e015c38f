"""Dimensions of the superspace R^{m|2n}."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class Dims:
    """Bosonic dimension ``m`` and number ``n`` of fermionic pairs."""

    m: int
    n: int

    def __post_init__(self):
        if self.m < 0 or self.n < 0:
            raise ValueError(f"dimensions must be non-negative, got ({self.m}, {self.n})")

    @property
    def M(self) -> int:
        """Superdimension m - 2n."""
        return self.m - 2 * self.n

    @property
    def nferm(self) -> int:
        return 2 * self.n

    def __add__(self, other: "Dims") -> "Dims":
        return Dims(self.m + other.m, self.n + other.n)

    def __str__(self):
        return f"({self.m}|{2 * self.n})"

    @classmethod
    def parse(cls, text: str) -> "Dims":
        parts = [p.strip() for p in text.split(",")]
        if len(parts) != 2:
            raise ValueError(f"expected 'm,n', got {text!r}")
        return cls(int(parts[0]), int(parts[1]))
