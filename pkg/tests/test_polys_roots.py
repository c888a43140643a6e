import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from realdisc.pencil.config import (
    RealPointConfig,
    interpolation_matrix,
    n_conditions,
    sample_config,
)
from realdisc.pencil.polys import (
    HomogeneousPoly,
    affine_hessian,
    monomial_vector,
    monomials,
    n_monomials,
    projective_distance,
)
from realdisc.pencil.resultant import extraneous_indices, macaulay_det, macaulay_matrix, resultant
from realdisc.pencil.roots import poly_roots


def _quad(**terms):
    names = {"xx": (2, 0, 0), "xy": (1, 1, 0), "xz": (1, 0, 1), "yy": (0, 2, 0), "yz": (0, 1, 1), "zz": (0, 0, 2)}
    return HomogeneousPoly.from_terms(2, {names[k]: v for k, v in terms.items()})


def test_monomial_counts():
    for d in range(6):
        assert len(monomials(d)) == n_monomials(d)
        assert all(sum(e) == d for e in monomials(d))


def test_partial_derivatives_by_finite_difference():
    rng = np.random.default_rng(0)
    f = HomogeneousPoly(3, rng.normal(size=10))
    p = rng.normal(size=3)
    h = 1e-6
    for v in range(3):
        e = np.eye(3)[v]
        fd = (f(p + h * e) - f(p - h * e)) / (2 * h)
        assert abs(f.gradient(p)[v] - fd) < 1e-6
    H = f.hessian(p)
    assert np.allclose(H, H.T)


def test_euler_identity():
    rng = np.random.default_rng(1)
    f = HomogeneousPoly(3, rng.normal(size=10))
    p = rng.normal(size=3)
    assert np.isclose(p @ f.gradient(p), 3 * f(p))


def test_affine_hessian_of_node():
    f = HomogeneousPoly.from_terms(3, {(1, 1, 1): 1.0, (3, 0, 0): 1.0})  # xyz + x^3
    h = affine_hessian(f, [0, 0, 2.0], chart=2)
    assert np.allclose(h, [[0, 1], [1, 0]])


def test_projective_distance():
    assert projective_distance([1, 2, 3], [-2, -4, -6]) < 1e-12
    assert np.isclose(projective_distance([1, 0, 0], [0, 1, 0]), 1.0)


def test_resultant_of_coordinate_squares_nonzero():
    assert abs(resultant(_quad(xx=1), _quad(yy=1), _quad(zz=1))) > 0.5


def test_resultant_of_equal_quadrics_is_zero():
    q = _quad(xx=1, yz=2, zz=-1)
    num, _ = macaulay_det(q, q, _quad(yy=1, xz=1))
    assert num == 0


def test_resultant_with_planted_zero():
    rng = np.random.default_rng(7)
    p = rng.normal(size=3)
    qs = []
    for _ in range(3):
        c = rng.normal(size=6)
        c -= (c @ monomial_vector(p, 2)) * monomial_vector(p, 2) / np.linalg.norm(monomial_vector(p, 2)) ** 2
        qs.append(HomogeneousPoly(2, c))
    assert abs(qs[0](p)) < 1e-12
    generic = [HomogeneousPoly(2, rng.normal(size=6)) for _ in range(3)]
    assert abs(resultant(*qs)) < 1e-8 * abs(resultant(*generic))


def test_resultant_is_multilinear_degree_four():
    # the resultant of three quadrics has degree 4 in the coefficients of each one
    rng = np.random.default_rng(3)
    qs = [HomogeneousPoly(2, rng.normal(size=6)) for _ in range(3)]
    base = resultant(*qs)
    assert np.isclose(resultant(qs[0] * 2.0, qs[1], qs[2]), 16 * base, rtol=1e-8)
    assert np.isclose(resultant(qs[0], qs[1], qs[2] * -3.0), 81 * base, rtol=1e-8)


def test_macaulay_shape_and_minor():
    q = [_quad(xx=1), _quad(yy=1), _quad(zz=1)]
    assert macaulay_matrix(*q).shape == (15, 15)
    assert len(extraneous_indices()) == 3


def test_poly_roots_simple():
    r = poly_roots([-1.0, 0.0, 1.0])
    assert np.allclose(np.sort(r.real), [-1, 1])
    assert not r.clustered


def test_poly_roots_wilkinson6():
    coeffs = np.polynomial.polynomial.polyfromroots(np.arange(1, 7))
    r = poly_roots(coeffs)
    assert np.abs(np.sort(r.roots.real) - np.arange(1, 7)).max() < 1e-6
    assert np.all(r.roots.imag == 0)


def test_poly_roots_flags_clusters():
    coeffs = np.polynomial.polynomial.polyfromroots([1.0, 1.0 + 1e-7, 3.0])
    assert poly_roots(coeffs, cluster_tol=1e-5).clustered


def test_poly_roots_strips_leading_zeros():
    r = poly_roots([2.0, -3.0, 1.0, 0.0, 0.0])
    assert len(r) == 2


@settings(max_examples=30, deadline=None)
@given(st.lists(st.floats(-3, 3), min_size=1, max_size=8))
def test_poly_roots_recovers_well_separated_roots(roots):
    roots = np.sort(roots)
    if len(roots) > 1 and np.diff(roots).min() < 0.2:
        return
    r = poly_roots(np.polynomial.polynomial.polyfromroots(roots))
    assert np.abs(np.sort(r.roots.real) - roots).max() < 1e-6


def test_interpolation_matrix_shapes():
    cfg = sample_config(5, 4, 2)
    A = interpolation_matrix(cfg)
    assert A.shape == (8, 10)
    assert np.linalg.matrix_rank(A) == 8
    assert n_conditions(1) == 2 and n_conditions(2) == 5 and n_conditions(3) == 8


def test_conjugate_rows_span_both_points():
    cfg = sample_config(9, 6, 1)
    A = interpolation_matrix(cfg)
    _, _, vh = np.linalg.svd(A)
    for f in vh[8:]:
        for q in cfg.conditions():
            assert abs(np.asarray(f) @ monomial_vector(q, 3)) < 1e-10


def test_sample_config_validation():
    with pytest.raises(ValueError):
        sample_config(1, 0, 4)
    with pytest.raises(ValueError):
        sample_config(1, 3, 1)


def test_sample_config_deterministic():
    a, b = sample_config(11, 4, 2), sample_config(11, 4, 2)
    assert np.array_equal(a.real_points, b.real_points)
    assert np.array_equal(a.conj_pairs, b.conj_pairs)


def test_from_affine_homogenises():
    cfg = RealPointConfig.from_affine([(0.5, 0.5)])
    p = cfg.real_points[0]
    assert np.allclose(p[:2] / p[2], [0.5, 0.5])
