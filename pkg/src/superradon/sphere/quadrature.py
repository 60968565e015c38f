"""Product quadrature rules on the unit sphere S^{m-1} in R^m.

The rule is built recursively: w = (t, sqrt(1 - t^2) v) with v on S^{m-2}
and dS = (1 - t^2)^{(m-3)/2} dt dS_v, so the t-nodes are Gauss-Jacobi with
alpha = beta = (m-3)/2 and the circle is an equispaced trapezoid rule.  All
rules are symmetric under w -> -w, which keeps odd-degree terms exact.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from pathlib import Path

import numpy as np
from scipy.special import roots_jacobi

DEFAULT_DEGREE = 24


@dataclass(frozen=True)
class SphereQuadrature:
    m: int
    nodes: np.ndarray    # (N, m) unit vectors
    weights: np.ndarray  # (N,)
    degree: int          # exact for polynomials of degree <= this

    def __post_init__(self):
        self.nodes.setflags(write=False)
        self.weights.setflags(write=False)

    @property
    def size(self) -> int:
        return len(self.weights)

    def coords(self):
        """Node coordinates as a list of m arrays."""
        return [self.nodes[:, i] for i in range(self.m)]

    def integrate(self, values) -> np.ndarray:
        """sum_i w_i f(node_i); ``values`` has the node axis first."""
        values = np.asarray(values)
        return np.tensordot(self.weights, values, axes=(0, 0))


def _circle(degree: int):
    n = degree + 1
    n += n % 2
    theta = 2 * np.pi * np.arange(n) / n
    return np.stack([np.cos(theta), np.sin(theta)], axis=1), np.full(n, 2 * np.pi / n)


@lru_cache(maxsize=None)
def _rule(m: int, degree: int):
    if m < 1:
        raise ValueError("sphere quadrature needs m >= 1")
    if m == 1:
        return np.array([[1.0], [-1.0]]), np.array([1.0, 1.0])
    if m == 2:
        return _circle(degree)
    a = (m - 3) / 2
    t, wt = roots_jacobi(degree // 2 + 1, a, a)
    inner_nodes, inner_w = _rule(m - 1, degree)
    s = np.sqrt(1 - t * t)
    nodes = np.concatenate(
        [np.concatenate([np.full((len(inner_w), 1), ti), si * inner_nodes], axis=1) for ti, si in zip(t, s)]
    )
    weights = np.concatenate([wi * inner_w for wi in wt])
    return nodes, weights


def sphere_quadrature(m: int, degree: int = DEFAULT_DEGREE) -> SphereQuadrature:
    nodes, weights = _rule(m, degree)
    return SphereQuadrature(m, nodes.copy(), weights.copy(), degree)


def load_quadrature(path, degree: int = 0) -> SphereQuadrature:
    """Read a rule from text rows ``weight x1 ... xm``; '#' starts a comment."""
    rows = []
    for line in Path(path).read_text().splitlines():
        line = line.split("#", 1)[0].strip()
        if line:
            rows.append([float(v) for v in line.split()])
    if not rows:
        raise ValueError(f"no quadrature nodes in {path}")
    data = np.array(rows)
    nodes = data[:, 1:]
    norms = np.linalg.norm(nodes, axis=1)
    if not np.allclose(norms, 1.0, atol=1e-12):
        raise ValueError("quadrature nodes must be unit vectors")
    return SphereQuadrature(nodes.shape[1], nodes, data[:, 0], degree)


def save_quadrature(q: SphereQuadrature, path) -> None:
    lines = [" ".join(repr(float(v)) for v in (w, *x)) for w, x in zip(q.weights, q.nodes)]
    Path(path).write_text("\n".join(lines) + "\n")


def sphere_area_float(m: int) -> float:
    return 2 * math.pi ** (m / 2) / math.gamma(m / 2)
