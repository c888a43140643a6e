"""Resultant of three ternary quadrics and the discriminant of a cubic pencil.

A member ``F + t G`` is singular exactly when its three partial derivatives
share a projective zero, i.e. when the Macaulay resultant of those quadrics
vanishes.  The resultant is a degree-12 polynomial in ``t``; we sample it at
Chebyshev nodes and interpolate instead of expanding it symbolically.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np
import scipy.linalg
from numpy.polynomial import chebyshev as C

from .config import NonGenericError, Pencil, Tolerances
from .polys import HomogeneousPoly, monomial_index, monomials

CRITICAL_DEGREE = 4  # sum(d_i - 1) + 1 for three quadrics
DISCRIMINANT_DEGREE = 12


@lru_cache(maxsize=None)
def _macaulay_layout() -> tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
    """Sparse pattern of the 15x15 Macaulay matrix and its extraneous minor.

    Row ``m`` (a degree-4 monomial) holds ``q_j * m / x_j^2`` for the first
    ``j`` with ``x_j^2 | m``.  Returns (rows, cols, poly index, coefficient
    index) of every structural entry; the minor uses monomials divisible by
    two of the squares.
    """
    cols = monomial_index(CRITICAL_DEGREE)
    quad = monomials(2)
    rows_, cols_, which, coef = [], [], [], []
    for r, m in enumerate(monomials(CRITICAL_DEGREE)):
        j = next(v for v in range(3) if m[v] >= 2)
        shift = list(m)
        shift[j] -= 2
        for qi, e in enumerate(quad):
            rows_.append(r)
            cols_.append(cols[tuple(a + b for a, b in zip(shift, e))])
            which.append(j)
            coef.append(qi)
    return tuple(np.array(v, dtype=int) for v in (rows_, cols_, which, coef))


@lru_cache(maxsize=None)
def extraneous_indices() -> np.ndarray:
    """Degree-4 monomials divisible by at least two of x^2, y^2, z^2."""
    return np.array([r for r, m in enumerate(monomials(CRITICAL_DEGREE))
                     if sum(a >= 2 for a in m) >= 2], dtype=int)


def macaulay_matrix(q1: HomogeneousPoly, q2: HomogeneousPoly, q3: HomogeneousPoly) -> np.ndarray:
    qs = (q1, q2, q3)
    if any(q.degree != 2 for q in qs):
        raise ValueError("Macaulay matrix here is for three quadrics")
    coeffs = np.array([q.coeffs for q in qs])
    rows, cols, which, coef = _macaulay_layout()
    M = np.zeros((15, 15), dtype=coeffs.dtype)
    M[rows, cols] = coeffs[which, coef]
    return M


def macaulay_det(q1: HomogeneousPoly, q2: HomogeneousPoly, q3: HomogeneousPoly) -> tuple[float, float]:
    """``(det M, det minor)``; the resultant is their ratio when the minor is nonzero."""
    M = macaulay_matrix(q1, q2, q3)
    idx = extraneous_indices()
    return np.linalg.det(M), np.linalg.det(M[np.ix_(idx, idx)])


def resultant(q1, q2, q3, rel_tol: float = 1e-12) -> float:
    num, den = macaulay_det(q1, q2, q3)
    scale = max(np.linalg.norm(q.coeffs) for q in (q1, q2, q3)) ** 3
    if abs(den) <= rel_tol * scale:
        raise ZeroDivisionError("extraneous Macaulay minor vanishes; perturb and retry")
    return num / den


def _pencil_matrices(pencil: Pencil) -> tuple[np.ndarray, np.ndarray]:
    """``M(t) = MF + t MG`` since the partials of ``F + tG`` are linear in ``t``."""
    return (macaulay_matrix(*pencil.F.gradient_polys()),
            macaulay_matrix(*pencil.G.gradient_polys()))


def resultant_along(pencil: Pencil, ts, rel_tol: float = 1e-12) -> np.ndarray:
    """Resultant of the gradient of ``F + tG`` at each sample ``t``."""
    MF, MG = _pencil_matrices(pencil)
    idx = extraneous_indices()
    ts = np.asarray(ts)
    Ms = MF[None] + ts[:, None, None] * MG[None]
    num = np.linalg.det(Ms)
    den = np.linalg.det(Ms[:, idx][:, :, idx])
    scale = max(np.linalg.norm(pencil.F.coeffs), np.linalg.norm(pencil.G.coeffs)) ** 3 * np.maximum(1, np.abs(ts)) ** 3
    if np.any(np.abs(den) <= rel_tol * scale):
        raise ZeroDivisionError("extraneous Macaulay minor vanishes at a sample")
    return num / den


@dataclass
class Discriminant:
    """Degree-12 polynomial in ``t`` whose roots are the singular members."""

    coef: np.ndarray          # power basis in t, ascending
    scale: float              # L; samples were taken on [-L, L]
    fit_residual: float
    samples: int

    @property
    def degree(self) -> int:
        return len(self.coef) - 1

    def scaled_coef(self) -> np.ndarray:
        """Coefficients in ``s = t / L``, normalised to unit max-norm."""
        c = self.coef * self.scale ** np.arange(len(self.coef))
        return c / np.abs(c).max()

    def __call__(self, t):
        return np.polynomial.polynomial.polyval(t, self.coef)


def chebyshev_nodes(n: int, L: float = 1.0) -> np.ndarray:
    return L * np.cos(np.pi * (np.arange(n) + 0.5) / n)


def discriminant_poly(pencil: Pencil, n_samples: int = 25, n_holdout: int = 12,
                      tol: Tolerances = Tolerances(), scales=(1.0, 2.0, 0.5, 4.0)) -> Discriminant:
    """Interpolate the resultant of the pencil's gradient along ``t``.

    The basis ``F, G`` is orthonormal, so singular members sit at ``|t|``
    of order one and ``L = 1`` is tried first; the other scales are the
    rescale-and-retry ladder.
    """
    if np.allclose(pencil.F.coeffs, pencil.G.coeffs) or np.linalg.matrix_rank(
            np.array([pencil.F.coeffs, pencil.G.coeffs]), tol=1e-12) < 2:
        raise NonGenericError("pencil basis is linearly dependent")
    last = None
    for L in scales:
        fit_t = chebyshev_nodes(n_samples, L)
        hold_t = L * np.cos(np.pi * np.arange(1, n_holdout + 1) / (n_holdout + 1))
        for jitter in (0.0, 1e-3, 2e-3):
            try:
                fit_v = resultant_along(pencil, fit_t * (1 - jitter))
                hold_v = resultant_along(pencil, hold_t * (1 - jitter))
                break
            except ZeroDivisionError:
                continue
        else:
            last = "vanishing Macaulay minor"
            continue
        s_fit, s_hold = fit_t * (1 - jitter) / L, hold_t * (1 - jitter) / L
        cheb = C.chebfit(s_fit, fit_v, DISCRIMINANT_DEGREE)
        size = max(np.abs(fit_v).max(), np.abs(hold_v).max())
        if size == 0:
            raise NonGenericError("discriminant vanishes identically")
        residual = float(np.abs(C.chebval(s_hold, cheb) - hold_v).max() / size)
        if residual > tol.fit:
            last = f"held-out residual {residual:.2e}"
            continue
        power_s = C.cheb2poly(cheb)
        coef = power_s / L ** np.arange(len(power_s))
        return Discriminant(coef, L, residual, n_samples)
    raise NonGenericError(f"discriminant interpolation failed ({last})")


def hidden_variable_roots(pencil: Pencil, match_tol: float = 1e-6) -> np.ndarray:
    """Singular-member parameters from the eigenvalues of the Macaulay pencil.

    ``det(MF + t MG) = 0`` is the generalized eigenproblem ``MF v = -t MG v``;
    its 15 eigenvalues are the 12 discriminant roots plus the 3 roots of the
    extraneous minor, which are removed by nearest match.  Infinite
    eigenvalues are returned as ``inf``.
    """
    MF, MG = _pencil_matrices(pencil)
    idx = extraneous_indices()
    ev = scipy.linalg.eigvals(MF, -MG, homogeneous_eigvals=False)
    ex = scipy.linalg.eigvals(MF[np.ix_(idx, idx)], -MG[np.ix_(idx, idx)])
    ev = list(np.where(np.isfinite(ev), ev, np.inf))
    for e in ex:
        if not ev:
            break
        dist = [abs(v - e) / max(1.0, abs(e)) if np.isfinite(v) and np.isfinite(e)
                else (0.0 if not np.isfinite(v) and not np.isfinite(e) else np.inf) for v in ev]
        j = int(np.argmin(dist))
        if dist[j] > match_tol:
            raise NonGenericError(f"extraneous root {e} has no match among Macaulay eigenvalues")
        ev.pop(j)
    return np.array(ev, dtype=complex)
