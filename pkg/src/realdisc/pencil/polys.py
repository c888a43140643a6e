"""Ternary homogeneous polynomials in a fixed graded-lex monomial order."""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache

import numpy as np


@lru_cache(maxsize=None)
def monomials(d: int) -> tuple[tuple[int, int, int], ...]:
    """Exponents of all degree-``d`` monomials in x, y, z, lexicographically descending.

    >>> monomials(1)
    ((1, 0, 0), (0, 1, 0), (0, 0, 1))
    """
    if d < 0:
        raise ValueError("degree must be non-negative")
    return tuple((a, b, d - a - b) for a in range(d, -1, -1) for b in range(d - a, -1, -1))


@lru_cache(maxsize=None)
def monomial_index(d: int) -> dict[tuple[int, int, int], int]:
    return {e: j for j, e in enumerate(monomials(d))}


def n_monomials(d: int) -> int:
    return (d + 1) * (d + 2) // 2


@lru_cache(maxsize=None)
def _exponent_array(d: int) -> np.ndarray:
    return np.array(monomials(d), dtype=int).reshape(-1, 3)


def monomial_vector(p, d: int) -> np.ndarray:
    """All degree-``d`` monomials evaluated at the (possibly complex) point ``p``."""
    p = np.asarray(p)
    e = _exponent_array(d)
    return p[0] ** e[:, 0] * p[1] ** e[:, 1] * p[2] ** e[:, 2]


@lru_cache(maxsize=None)
def _derivative_map(d: int, var: int) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Source index, target index and multiplier for d/dx_var on degree ``d``."""
    target = monomial_index(d - 1)
    src, dst, mult = [], [], []
    for j, e in enumerate(monomials(d)):
        if e[var]:
            lowered = list(e)
            lowered[var] -= 1
            src.append(j)
            dst.append(target[tuple(lowered)])
            mult.append(e[var])
    return np.array(src, dtype=int), np.array(dst, dtype=int), np.array(mult, dtype=float)


@dataclass(frozen=True, eq=False)
class HomogeneousPoly:
    degree: int
    coeffs: np.ndarray

    def __post_init__(self):
        coeffs = np.asarray(self.coeffs)
        if coeffs.shape != (n_monomials(self.degree),):
            raise ValueError(f"degree {self.degree} needs {n_monomials(self.degree)} coefficients, got {coeffs.shape}")
        object.__setattr__(self, "coeffs", coeffs)

    @classmethod
    def from_terms(cls, degree: int, terms: dict[tuple[int, int, int], float]) -> "HomogeneousPoly":
        """Build from ``{(a, b, c): coefficient}``; every exponent must have total ``degree``."""
        coeffs = np.zeros(n_monomials(degree))
        index = monomial_index(degree)
        for e, v in terms.items():
            coeffs[index[tuple(e)]] += v
        return cls(degree, coeffs)

    def __call__(self, p):
        return self.coeffs @ monomial_vector(p, self.degree)

    def __add__(self, other: "HomogeneousPoly") -> "HomogeneousPoly":
        if other.degree != self.degree:
            raise ValueError("degree mismatch")
        return HomogeneousPoly(self.degree, self.coeffs + other.coeffs)

    def __mul__(self, scalar) -> "HomogeneousPoly":
        return HomogeneousPoly(self.degree, self.coeffs * scalar)

    __rmul__ = __mul__

    def normalized(self) -> "HomogeneousPoly":
        norm = np.linalg.norm(self.coeffs)
        if norm == 0:
            raise ValueError("zero polynomial")
        return HomogeneousPoly(self.degree, self.coeffs / norm)

    def partial(self, var: int) -> "HomogeneousPoly":
        if self.degree == 0:
            return HomogeneousPoly(0, np.zeros(1, dtype=self.coeffs.dtype))
        src, dst, mult = _derivative_map(self.degree, var)
        out = np.zeros(n_monomials(self.degree - 1), dtype=np.result_type(self.coeffs, float))
        np.add.at(out, dst, self.coeffs[src] * mult)
        return HomogeneousPoly(self.degree - 1, out)

    @cached_property
    def _gradient_polys(self) -> tuple["HomogeneousPoly", ...]:
        return tuple(self.partial(v) for v in range(3))

    @cached_property
    def _hessian_polys(self) -> tuple[tuple["HomogeneousPoly", ...], ...]:
        return tuple(tuple(g.partial(b) for b in range(3)) for g in self._gradient_polys)

    def gradient_polys(self) -> tuple["HomogeneousPoly", "HomogeneousPoly", "HomogeneousPoly"]:
        return self._gradient_polys

    def gradient(self, p) -> np.ndarray:
        return np.array([g(p) for g in self._gradient_polys])

    def hessian(self, p) -> np.ndarray:
        return np.array([[h(p) for h in row] for row in self._hessian_polys])


def affine_hessian(f: HomogeneousPoly, p, chart: int) -> np.ndarray:
    """Hessian of ``f`` in the affine chart ``x_chart = 1`` at the point ``p``.

    ``p`` is rescaled so its chart coordinate is 1; the result is the 2x2
    block of second partials in the remaining two variables.
    """
    p = np.asarray(p)
    if p[chart] == 0:
        raise ValueError("point lies on the chart's line at infinity")
    h = f.hessian(p / p[chart])
    keep = [v for v in range(3) if v != chart]
    return h[np.ix_(keep, keep)]


def projective_distance(p, q) -> float:
    """Sine of the angle between the lines spanned by ``p`` and ``q`` (complex allowed)."""
    p = np.asarray(p, dtype=complex)
    q = np.asarray(q, dtype=complex)
    p = p / np.linalg.norm(p)
    q = q / np.linalg.norm(q)
    return float(np.sqrt(max(0.0, 1.0 - abs(np.vdot(p, q)) ** 2)))
