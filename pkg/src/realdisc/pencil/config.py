"""Real point configurations and the curves interpolating them."""
from __future__ import annotations

import logging
from dataclasses import dataclass

import numpy as np

from .polys import HomogeneousPoly, monomial_vector, n_monomials, projective_distance

log = logging.getLogger(__name__)

MAX_RESAMPLES = 100


class NonGenericError(RuntimeError):
    """The configuration (or pencil) is too close to a degenerate one; draw another."""


class GenericityExhausted(RuntimeError):
    """No generic configuration was found within the resampling budget."""


@dataclass(frozen=True)
class Tolerances:
    interp: float = 1e-10      # relative interpolation residual
    rank: float = 1e-8         # smallest/largest singular value for full rank
    root_residual: float = 1e-8
    cluster: float = 1e-5
    hess: float = 1e-8         # relative to the Hessian's scale
    node: float = 1e-8         # relative gradient norm at a node
    base_distance: float = 1e-6
    fit: float = 1e-6          # held-out discriminant interpolation residual


def n_conditions(d: int) -> int:
    """Point conditions cutting out a pencil (d = 3) or a unique curve (d < 3)."""
    return n_monomials(d) - (2 if d >= 3 else 1)


def _unit(v: np.ndarray) -> np.ndarray:
    return v / np.linalg.norm(v)


@dataclass(eq=False)
class RealPointConfig:
    """``r`` real points and ``c`` conjugate pairs in the projective plane.

    Each pair is stored by one complex representative ``p``; a real curve
    through ``p`` automatically passes through ``conj(p)``.
    """

    real_points: np.ndarray   # (r, 3) float, unit rows
    conj_pairs: np.ndarray    # (c, 3) complex, unit rows
    seed: int | None = None
    degree: int = 3
    rank: int | None = None
    cond: float | None = None
    attempts: int = 1

    def __post_init__(self):
        self.real_points = np.asarray(self.real_points, dtype=float).reshape(-1, 3)
        self.conj_pairs = np.asarray(self.conj_pairs, dtype=complex).reshape(-1, 3)

    @property
    def r(self) -> int:
        return len(self.real_points)

    @property
    def c(self) -> int:
        return len(self.conj_pairs)

    def conditions(self) -> list[np.ndarray]:
        """All ``r + 2c`` points, conjugates included."""
        return [p for p in self.real_points] + [q for p in self.conj_pairs for q in (p, p.conj())]

    @classmethod
    def from_affine(cls, real_xy, conj_xy=(), degree: int = 3, seed: int | None = None) -> "RealPointConfig":
        real = [_unit(np.array([x, y, 1.0])) for x, y in real_xy]
        pairs = [_unit(np.array([x, y, 1.0], dtype=complex)) for x, y in conj_xy]
        return cls(np.array(real).reshape(-1, 3), np.array(pairs, dtype=complex).reshape(-1, 3), seed, degree)


def interpolation_matrix(config: RealPointConfig, d: int | None = None) -> np.ndarray:
    """Rows of monomial evaluations: one per real point, real and imaginary parts per pair."""
    d = config.degree if d is None else d
    rows = [monomial_vector(p, d) for p in config.real_points]
    for p in config.conj_pairs:
        v = monomial_vector(p, d)
        rows += [v.real, v.imag]
    return np.array(rows, dtype=float).reshape(-1, n_monomials(d))


def genericity_certificate(config: RealPointConfig, tol: Tolerances = Tolerances()) -> tuple[int, float]:
    """Numerical rank and condition number of the interpolation matrix."""
    s = np.linalg.svd(interpolation_matrix(config), compute_uv=False)
    rank = int(np.sum(s > tol.rank * s[0]))
    return rank, float(s[0] / s[-1]) if s[-1] > 0 else float("inf")


def _conditions_distinct(config: RealPointConfig, threshold: float = 1e-3) -> bool:
    pts = config.conditions()
    return all(projective_distance(pts[a], pts[b]) > threshold
               for a in range(len(pts)) for b in range(a + 1, len(pts)))


def sample_config(seed: int, r: int, c: int, degree: int = 3, tol: Tolerances = Tolerances()) -> RealPointConfig:
    """Draw a generic configuration deterministically from ``seed``.

    Real points are uniform in the unit affine disc; each conjugate pair has
    real parts in the disc and imaginary parts uniform in [0.1, 1].
    """
    need = n_conditions(degree)
    if r < 1:
        raise ValueError("a real configuration needs at least one real point")
    if c < 0 or r + 2 * c != need:
        raise ValueError(f"degree {degree} needs r + 2c = {need}, got r={r}, c={c}")
    rng = np.random.default_rng(seed)

    def disc(m):
        rad = np.sqrt(rng.uniform(0, 1, m))
        ang = rng.uniform(0, 2 * np.pi, m)
        return np.column_stack([rad * np.cos(ang), rad * np.sin(ang)])

    for attempt in range(1, MAX_RESAMPLES + 1):
        real_xy = disc(r)
        conj_xy = disc(c) + 1j * rng.uniform(0.1, 1.0, (c, 2))
        config = RealPointConfig.from_affine(real_xy, conj_xy, degree=degree, seed=seed)
        config.rank, config.cond = genericity_certificate(config, tol)
        config.attempts = attempt
        if config.rank == need and _conditions_distinct(config):
            return config
        log.debug("seed %s attempt %d not generic (rank %d)", seed, attempt, config.rank)
    raise GenericityExhausted(f"no generic configuration for seed {seed} in {MAX_RESAMPLES} draws")


def scale_config(config: RealPointConfig, factor: float) -> RealPointConfig:
    """Multiply every affine coordinate by ``factor`` (a real projective transformation)."""
    s = np.array([factor, factor, 1.0])
    real = np.array([_unit(p * s) for p in config.real_points]).reshape(-1, 3)
    pairs = np.array([_unit(p * s) for p in config.conj_pairs], dtype=complex).reshape(-1, 3)
    out = RealPointConfig(real, pairs, config.seed, config.degree)
    out.rank, out.cond = genericity_certificate(out)
    return out


@dataclass(eq=False)
class Pencil:
    """The cubics ``F + t G``; ``t = inf`` is the member ``G``."""

    F: HomogeneousPoly
    G: HomogeneousPoly
    config: RealPointConfig | None = None
    residual: float = 0.0
    cond: float | None = None

    def member(self, t) -> HomogeneousPoly:
        if np.isinf(t):
            return self.G
        return HomogeneousPoly(self.F.degree, self.F.coeffs + t * self.G.coeffs)

    def recombined(self, mat) -> "Pencil":
        """Pencil with basis ``(a F + b G, c F + d G)`` for ``mat = [[a, b], [c, d]]``."""
        (a, b), (c, d) = np.asarray(mat, dtype=float)
        if abs(a * d - b * c) < 1e-12:
            raise ValueError("recombination matrix is singular")
        return Pencil(self.F * a + self.G * b, self.F * c + self.G * d, self.config, self.residual, self.cond)


def mobius(mat, t):
    """Parameter of the original pencil matching parameter ``t`` of ``recombined(mat)``."""
    (a, b), (c, d) = np.asarray(mat, dtype=float)
    t = np.asarray(t, dtype=complex)
    with np.errstate(divide="ignore", invalid="ignore"):
        return (b + d * t) / (a + c * t)


def _nullspace(config: RealPointConfig, d: int, dim: int, tol: Tolerances):
    A = interpolation_matrix(config, d)
    _, s, vh = np.linalg.svd(A)
    need = n_monomials(d) - dim
    if len(s) < need or s[need - 1] <= tol.rank * s[0]:
        raise NonGenericError(f"interpolation matrix has rank < {need}")
    basis = vh[need:]
    scale = np.linalg.norm(A, axis=1).max()
    residual = float(np.abs(A @ basis.T).max() / scale)
    if residual > tol.interp:
        raise NonGenericError(f"interpolation residual {residual:.2e} above {tol.interp:.0e}")
    return basis, residual, float(s[0] / s[need - 1])


def pencil_through(config: RealPointConfig, tol: Tolerances = Tolerances()) -> Pencil:
    """Orthonormal basis ``F, G`` of the cubics through the eight conditions."""
    if config.degree != 3:
        raise ValueError("pencil_through needs a cubic configuration")
    basis, residual, cond = _nullspace(config, 3, 2, tol)
    return Pencil(HomogeneousPoly(3, basis[0]), HomogeneousPoly(3, basis[1]), config, residual, cond)


def curve_through(config: RealPointConfig, tol: Tolerances = Tolerances()) -> HomogeneousPoly:
    """The unique line (2 points) or conic (5 points) through a low-degree configuration."""
    if config.degree not in (1, 2):
        raise ValueError("curve_through handles degrees 1 and 2")
    basis, _, _ = _nullspace(config, config.degree, 1, tol)
    return HomogeneousPoly(config.degree, basis[0])


def conic_matrix(q: HomogeneousPoly) -> np.ndarray:
    """Symmetric 3x3 form with ``q(p) = p^T S p``."""
    if q.degree != 2:
        raise ValueError("not a conic")
    a, b, c, d, e, f = q.coeffs  # x2, xy, xz, y2, yz, z2
    return np.array([[a, b / 2, c / 2], [b / 2, d, e / 2], [c / 2, e / 2, f]])
