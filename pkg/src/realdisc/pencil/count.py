"""Signed counts of real rational cubics through a real configuration.

The rational cubics through eight conditions are the singular members of the
pencil of cubics through them.  Each real one has a single real node, which is
either a crossing (two real branches, weight +1) or solitary (isolated real
point, weight -1).  The signed count is the sum of these weights.
"""
from __future__ import annotations

import enum
import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from .config import (
    MAX_RESAMPLES,
    GenericityExhausted,
    NonGenericError,
    Pencil,
    RealPointConfig,
    Tolerances,
    conic_matrix,
    curve_through,
    pencil_through,
    sample_config,
)
from .polys import affine_hessian, monomial_index, projective_distance
from .resultant import CRITICAL_DEGREE, discriminant_poly, hidden_variable_roots, macaulay_matrix
from .roots import poly_roots

log = logging.getLogger(__name__)

EXPECTED_MEMBERS = 12


class NodeType(str, enum.Enum):
    CROSSING = "crossing"
    SOLITARY = "solitary"
    COMPLEX = "complexMember"
    DEGENERATE = "degenerate"


@dataclass
class NodalMember:
    t: complex
    node: np.ndarray | None
    node_type: NodeType
    sign: int | None
    hessian_det: float | None = None
    gradient_norm: float | None = None
    chart: int | None = None

    def to_json(self) -> dict:
        real_node = self.node_type in (NodeType.CROSSING, NodeType.SOLITARY)
        at_inf = bool(np.isinf(self.t))
        return {
            "tRe": None if at_inf else float(np.real(self.t)),
            "tIm": None if at_inf else float(np.imag(self.t)),
            "node": [float(v) for v in np.real(self.node)] if real_node else None,
            "type": self.node_type.value,
            "sign": self.sign,
        }


# ---------------------------------------------------------------------------
# node location


def node_seed(pencil: Pencil, t) -> np.ndarray:
    """Common zero of the partials of ``F + tG`` read off the Macaulay null vector.

    The right null vector of the Macaulay matrix is the vector of degree-4
    monomials at the node, so ``x_j^3 x_i / x_j^4`` recovers the coordinates.
    """
    if np.isinf(t):
        M = macaulay_matrix(*pencil.G.gradient_polys())
    else:
        MF = macaulay_matrix(*pencil.F.gradient_polys())
        MG = macaulay_matrix(*pencil.G.gradient_polys())
        M = MF + t * MG
    _, _, vh = np.linalg.svd(M)
    v = vh[-1].conj()
    idx = monomial_index(CRITICAL_DEGREE)
    pure = [idx[tuple(4 if a == j else 0 for a in range(3))] for j in range(3)]
    j = int(np.argmax(np.abs(v[pure])))
    p = np.array([v[idx[tuple(3 * (a == j) + (a == i) for a in range(3))]] for i in range(3)])
    p = p / p[np.argmax(np.abs(p))]
    return p


@dataclass
class NodeSolution:
    t: complex
    p: np.ndarray
    converged: bool
    gradient_norm: float
    jacobian_cond: float


def refine_node(pencil: Pencil, t0, p0=None, max_iter: int = 40, tol: Tolerances = Tolerances()) -> NodeSolution:
    """Newton's method on ``grad(F + tG)(p) = 0`` with ``p`` normalised against its seed.

    Runs in real arithmetic when ``t0`` and the seed are real.  For
    ``|t0| > 1`` the member is written ``sF + G`` with ``s = 1/t`` so the
    unknowns stay bounded; ``t0 = inf`` is ``s = 0``.
    """
    flipped = np.isinf(t0) or abs(t0) > 1
    u = 0.0 if np.isinf(t0) else (1 / t0 if flipped else t0)
    A, B = (pencil.G, pencil.F) if flipped else (pencil.F, pencil.G)  # member A + u B
    p = node_seed(pencil, t0) if p0 is None else np.asarray(p0)
    dtype = complex if (np.iscomplexobj(p) or np.iscomplexobj(u)) else float
    p = p.astype(dtype)
    u = dtype(u)
    a = p.conj() / np.vdot(p, p).real
    scale = max(np.linalg.norm(A.coeffs), np.linalg.norm(B.coeffs))

    cond = np.inf
    for _ in range(max_iter):
        g = A.gradient(p) + u * B.gradient(p)
        R = np.append(g, a @ p - 1)
        J = np.zeros((4, 4), dtype=dtype)
        J[:3, :3] = A.hessian(p) + u * B.hessian(p)
        J[:3, 3] = B.gradient(p)
        J[3, :3] = a
        try:
            step = np.linalg.solve(J, R)
        except np.linalg.LinAlgError:
            break
        p = p - step[:3]
        u = u - step[3]
        if np.linalg.norm(step) < 1e-15 * max(1.0, np.linalg.norm(p)):
            break
    try:
        cond = float(np.linalg.cond(J))
    except np.linalg.LinAlgError:
        pass
    pn = p / np.linalg.norm(p)
    gnorm = float(np.linalg.norm(A.gradient(pn) + u * B.gradient(pn)) / (scale * max(1.0, abs(u))))
    if flipped:
        t = np.inf if u == 0 else 1 / u
    else:
        t = u
    return NodeSolution(t, pn, bool(gnorm < tol.node and np.isfinite(gnorm)), gnorm, cond)


# ---------------------------------------------------------------------------
# classification


def _real_node(p: np.ndarray, tol: float = 1e-7) -> np.ndarray | None:
    """Real representative of a projective point, or None if it is not real."""
    p = np.asarray(p, dtype=complex)
    p = p / p[np.argmax(np.abs(p))]
    if np.abs(p.imag).max() > tol:
        return None
    q = p.real
    return q / np.linalg.norm(q)


def classify_member(pencil: Pencil, t_real: float, chart: int | None = None,
                    tol: Tolerances = Tolerances(), p0=None) -> NodalMember:
    """Locate and classify the node of the real singular member at ``t_real``.

    The sign of the affine Hessian determinant at the node decides the type:
    negative is a crossing (+1), positive a solitary point (-1).  Anything
    that fails to refine, lands on a base condition, or has a near-zero
    determinant is reported as degenerate.
    """
    sol = refine_node(pencil, t_real, p0=p0, tol=tol)
    t = sol.t if np.isinf(sol.t) else float(np.real(sol.t))
    bad = NodalMember(t, sol.p, NodeType.DEGENERATE, None, gradient_norm=sol.gradient_norm)
    if not sol.converged:
        return bad
    p = _real_node(sol.p)
    if p is None:
        return bad
    bad.node = p
    if pencil.config is not None and any(
            projective_distance(p, q) < tol.base_distance for q in pencil.config.conditions()):
        return bad
    if chart is None:
        chart = int(np.argmax(np.abs(p)))
    elif abs(p[chart]) < 1e-3:
        raise ValueError(f"node is too close to the line at infinity of chart {chart}")
    member = pencil.member(t).normalized()
    h = affine_hessian(member, p, chart)
    det = float(np.linalg.det(h))
    bad.hessian_det, bad.chart = det, chart
    if abs(det) <= tol.hess * max(float(np.sum(h * h)), 1e-300):
        return bad
    if det < 0:
        return NodalMember(t, p, NodeType.CROSSING, +1, det, sol.gradient_norm, chart)
    return NodalMember(t, p, NodeType.SOLITARY, -1, det, sol.gradient_norm, chart)


# ---------------------------------------------------------------------------
# counting


@dataclass
class ExperimentReport:
    seed: int | None
    r: int
    c: int
    complex_member_count: int
    members: list[NodalMember]
    signed_count: int
    diagnostics: dict = field(default_factory=dict)
    resamples: int = 0

    @property
    def real_members(self) -> list[NodalMember]:
        return [m for m in self.members if m.sign is not None]

    def to_json(self) -> dict:
        return {
            "trialSeed": self.seed,
            "complexCount": self.complex_member_count,
            "members": [m.to_json() for m in self.members],
            "signedCount": self.signed_count,
            "resamples": self.resamples,
            "condNumbers": {k: None if self.diagnostics.get(k) is None else float(self.diagnostics[k])
                            for k in ("interpolation", "nullspace", "newtonMax")},
        }


def _conjugate_symmetric(roots: np.ndarray, tol: float = 1e-6) -> bool:
    nonreal = roots[roots.imag != 0]
    return all(np.min(np.abs(nonreal - z.conjugate())) <= tol * max(1.0, abs(z)) for z in nonreal)


def _chordal(a, b) -> float:
    """Distance between parameters on the Riemann sphere (handles ``inf``)."""
    if np.isinf(a) and np.isinf(b):
        return 0.0
    if np.isinf(a) or np.isinf(b):
        z = b if np.isinf(a) else a
        return 2 / np.sqrt(1 + abs(z) ** 2)
    return 2 * abs(a - b) / np.sqrt((1 + abs(a) ** 2) * (1 + abs(b) ** 2))


def _solve_members(pencil: Pencil, seeds, tol: Tolerances) -> list[NodeSolution] | None:
    """Refine every seed; None unless all converge to pairwise distinct members.

    A member of a generic pencil has a single node, so distinct solutions
    have distinct parameters.  With exactly 12 singular members, 12 distinct
    converged solutions are all of them.
    """
    sols = []
    for t in seeds:
        sol = refine_node(pencil, t if np.isinf(t) else complex(t), tol=tol)
        if not sol.converged:
            return None
        sols.append(sol)
    for a in range(len(sols)):
        for b in range(a + 1, len(sols)):
            if _chordal(sols[a].t, sols[b].t) < 1e-8:
                return None
    return sols


def _is_real(sol: NodeSolution, tol: float = 1e-9) -> bool:
    if np.isinf(sol.t):
        return _real_node(sol.p) is not None
    return abs(np.imag(sol.t)) <= tol * max(1.0, abs(sol.t)) and _real_node(sol.p) is not None


def count_pencil(pencil: Pencil, tol: Tolerances = Tolerances(), seed: int | None = None) -> ExperimentReport:
    """Find, count and classify all singular members of a real cubic pencil.

    Roots of the interpolated discriminant seed Newton's method on the
    gradient system.  If those seeds do not yield twelve distinct members
    (near-clusters make the sampled determinant lose accuracy), the
    eigenvalues of the Macaulay pencil are used as seeds instead.
    """
    disc = discriminant_poly(pencil, tol=tol)
    coef = disc.coef.copy()
    at_infinity = bool(abs(disc.scaled_coef()[-1]) < 1e-9)
    if at_infinity:
        coef = coef[:-1]
    roots = poly_roots(coef, cluster_tol=tol.cluster)
    if roots.clustered:
        raise NonGenericError(f"discriminant roots cluster (separation {roots.min_separation:.1e})")
    if roots.residuals.max() > tol.root_residual:
        raise NonGenericError(f"root residual {roots.residuals.max():.1e} above {tol.root_residual:.0e}")
    seeds = list(roots.roots) + ([np.inf] if at_infinity else [])
    if len(seeds) != EXPECTED_MEMBERS:
        raise NonGenericError(f"discriminant has {len(seeds)} roots, expected {EXPECTED_MEMBERS}")

    source = "discriminant"
    sols = _solve_members(pencil, seeds, tol)
    if sols is None:
        source = "macaulayEigen"
        eig = hidden_variable_roots(pencil)
        if len(eig) != EXPECTED_MEMBERS:
            raise NonGenericError(f"Macaulay pencil has {len(eig)} finite+infinite roots")
        sols = _solve_members(pencil, eig, tol)
    if sols is None:
        raise NonGenericError("Newton refinement did not separate the singular members")

    members = []
    for sol in sorted(sols, key=lambda s: (np.inf, 0) if np.isinf(s.t) else (s.t.real, s.t.imag)):
        if _is_real(sol):
            t = sol.t if np.isinf(sol.t) else float(np.real(sol.t))
            m = classify_member(pencil, t, tol=tol, p0=_real_node(sol.p))
            if m.node_type is NodeType.DEGENERATE:
                raise NonGenericError(f"degenerate real member at t={t:.6g}")
        else:
            m = NodalMember(sol.t, sol.p, NodeType.COMPLEX, None, gradient_norm=sol.gradient_norm)
        members.append(m)

    ts = np.array([m.t for m in members], dtype=complex)
    finite = ts[np.isfinite(ts)]
    deviation = max(min(_chordal(r, t) for t in ts) for r in seeds)
    cfg = pencil.config
    diagnostics = {
        "interpolation": cfg.cond if cfg is not None else None,
        "nullspace": pencil.cond,
        "newtonMax": float(max(s.jacobian_cond for s in sols)),
        "discFitResidual": disc.fit_residual,
        "discScale": disc.scale,
        "minRootSeparation": roots.min_separation,
        "maxRootResidual": float(roots.residuals.max()),
        "clustered": roots.clustered,
        "rootSource": source,
        "discRootDeviation": float(deviation),
        "conjugateSymmetric": _conjugate_symmetric(np.where(np.abs(finite.imag) <= 1e-9 * np.maximum(1, np.abs(finite)),
                                                            finite.real, finite)),
        "memberAtInfinity": at_infinity,
    }
    return ExperimentReport(
        seed=seed,
        r=cfg.r if cfg is not None else 0,
        c=cfg.c if cfg is not None else 0,
        complex_member_count=len(members),
        members=members,
        signed_count=sum(m.sign for m in members if m.sign is not None),
        diagnostics=diagnostics,
    )


def _count_low_degree(config: RealPointConfig, tol: Tolerances) -> ExperimentReport:
    """A line or a conic is unique through its conditions; it counts +1 when smooth."""
    curve = curve_through(config, tol)
    diagnostics = {"interpolation": config.cond, "curve": curve.coeffs.tolist()}
    if config.degree == 2:
        S = conic_matrix(curve.normalized())
        det = float(np.linalg.det(S))
        diagnostics["conicDeterminant"] = det
        if abs(det) < 1e-10:
            raise NonGenericError("the interpolating conic is reducible")
    return ExperimentReport(config.seed, config.r, config.c, 1, [], 1, diagnostics)


def signed_count(config: RealPointConfig, tol: Tolerances = Tolerances()) -> ExperimentReport:
    """Signed count of real rational curves of degree ``config.degree`` through ``config``."""
    if config.degree < 3:
        return _count_low_degree(config, tol)
    if config.degree != 3:
        raise ValueError("only degrees 1, 2 and 3 are supported")
    return count_pencil(pencil_through(config, tol), tol, seed=config.seed)


# ---------------------------------------------------------------------------
# experiments


def attempt_seed(trial_seed: int, attempt: int) -> int:
    """Seed for the ``attempt``-th resample of a trial (attempt 0 is the trial seed)."""
    if attempt == 0:
        return trial_seed
    return int(np.random.SeedSequence([trial_seed, attempt]).generate_state(1, np.uint64)[0])


def run_trial(trial_seed: int, r: int, c: int, tol: Tolerances = Tolerances()) -> ExperimentReport:
    """One generic trial, resampling the configuration until the count is clean."""
    reasons = []
    for attempt in range(MAX_RESAMPLES):
        try:
            config = sample_config(attempt_seed(trial_seed, attempt), r, c, tol=tol)
            report = signed_count(config, tol)
        except NonGenericError as exc:
            reasons.append(str(exc))
            log.info("trial %d resample %d: %s", trial_seed, attempt + 1, exc)
            continue
        report.seed = trial_seed
        report.resamples = attempt + config.attempts - 1
        report.diagnostics["configSeed"] = config.seed
        return report
    raise GenericityExhausted(f"trial {trial_seed}: {MAX_RESAMPLES} non-generic draws; last: {reasons[-1]}")


def _run_trial_args(args):
    return run_trial(*args)


@dataclass
class ExperimentSummary:
    r: int
    c: int
    base_seed: int
    trials: list[ExperimentReport]

    @property
    def counts(self) -> list[int]:
        return [t.signed_count for t in self.trials]

    @property
    def passed(self) -> bool:
        return (len(set(self.counts)) == 1
                and all(t.complex_member_count == EXPECTED_MEMBERS for t in self.trials))

    @property
    def common_value(self) -> int | None:
        return self.counts[0] if self.passed else None

    @property
    def disagreement(self) -> tuple[int, int] | None:
        """Seeds of the first two trials whose signed counts differ."""
        first = self.trials[0]
        for t in self.trials[1:]:
            if t.signed_count != first.signed_count:
                return first.seed, t.seed
        return None

    def to_json(self) -> dict:
        return {
            "seed": self.base_seed,
            "r": self.r,
            "c": self.c,
            "trials": [t.to_json() for t in self.trials],
            "commonValue": self.common_value,
            "pass": self.passed,
        }

    def csv_rows(self) -> list[dict]:
        return [{"trialSeed": t.seed, "signedCount": t.signed_count,
                 "complexCount": t.complex_member_count,
                 "pass": t.signed_count == self.trials[0].signed_count
                 and t.complex_member_count == EXPECTED_MEMBERS}
                for t in self.trials]


def invariance_experiment(r: int, c: int, trials: int = 20, base_seed: int = 42,
                          tol: Tolerances = Tolerances(), jobs: int = 1) -> ExperimentSummary:
    """Signed counts for ``trials`` configurations with seeds ``base_seed + index``.

    Results are ordered by trial index and do not depend on ``jobs``.
    """
    if r < 1:
        raise ValueError("a real configuration needs at least one real point")
    if r + 2 * c != 8:
        raise ValueError(f"cubics need r + 2c = 8, got r={r}, c={c}")
    if trials < 2:
        raise ValueError("an invariance experiment needs at least two trials")
    args = [(base_seed + j, r, c, tol) for j in range(trials)]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            reports = list(pool.map(_run_trial_args, args))
    else:
        reports = [run_trial(*a) for a in args]
    return ExperimentSummary(r, c, base_seed, reports)
