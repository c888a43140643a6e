"""Polynomial roots from companion-matrix eigenvalues, polished by Newton's method."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np


@dataclass
class PolyRoots:
    roots: np.ndarray         # complex, sorted by (real, imag)
    residuals: np.ndarray     # |p(root)| / sum_j |c_j| |root|^j
    clustered: bool
    min_separation: float

    def __len__(self):
        return len(self.roots)

    def __iter__(self):
        return iter(self.roots)

    @property
    def real(self) -> np.ndarray:
        return self.roots[self.roots.imag == 0].real


def _horner(c: np.ndarray, z):
    """Value and derivative of the ascending-coefficient polynomial ``c`` at ``z``."""
    p = np.zeros_like(z, dtype=complex) + c[-1]
    dp = np.zeros_like(p)
    for a in c[-2::-1]:
        dp = dp * z + p
        p = p * z + a
    return p, dp


def companion(c: np.ndarray) -> np.ndarray:
    """Companion matrix of the monic normalisation of ascending coefficients ``c``."""
    n = len(c) - 1
    A = np.zeros((n, n), dtype=np.result_type(c, float))
    A[1:, :-1] = np.eye(n - 1)
    A[:, -1] = -c[:-1] / c[-1]
    return A


def poly_roots(coeffs, cluster_tol: float = 1e-5, newton_steps: int = 8,
               real_tol: float = 1e-12) -> PolyRoots:
    """All complex roots of ``sum_j coeffs[j] t**j``.

    Exactly-zero leading coefficients are stripped first.  Roots whose
    imaginary part is below ``real_tol`` (relative) are snapped to the real
    axis before polishing so real roots stay real.
    """
    c = np.trim_zeros(np.asarray(coeffs, dtype=float), "b")
    if len(c) < 2:
        raise ValueError("need a polynomial of degree >= 1")
    z = np.linalg.eigvals(companion(c)).astype(complex)
    snap = np.abs(z.imag) <= real_tol * np.maximum(1.0, np.abs(z))
    z[snap] = z[snap].real

    absc = np.abs(c)
    def rel_residual(z):
        p, _ = _horner(c, z)
        size = np.polynomial.polynomial.polyval(np.abs(z), absc)
        return np.divide(np.abs(p), size, out=np.zeros_like(size), where=size > 0)

    res = rel_residual(z)
    for _ in range(newton_steps):
        p, dp = _horner(c, z)
        with np.errstate(divide="ignore", invalid="ignore"):
            step = np.where(dp != 0, p / dp, 0)
        cand = z - step
        cand[snap] = cand[snap].real
        cres = rel_residual(cand)
        better = np.isfinite(cres) & (cres < res)
        z = np.where(better, cand, z)
        res = np.where(better, cres, res)
        if not better.any():
            break

    order = np.lexsort((z.imag, z.real))
    z, res = z[order], res[order]
    if len(z) > 1:
        gaps = np.abs(z[:, None] - z[None, :])
        gaps[np.diag_indices(len(z))] = np.inf
        sep = float(gaps.min())
    else:
        sep = float("inf")
    return PolyRoots(z, res, sep < cluster_tol, sep)
