import itertools

import pytest
from hypothesis import given, strategies as st

from realdisc.perm_oracle import reversal_sign
from realdisc.sign_calculus import (
    REFERENCE_TABLE,
    CountMode,
    ModuliDescriptor,
    OpenClosedProblem,
    Sign,
    SplittingDescriptor,
    ab_table_entry,
    admissible_splittings,
    boundary_epsilon,
    cancellation_check,
    conjugation_sign,
    count_comparison_sign,
    cyclic_reversal_exponent,
    maslov_from_dimension,
    open_closed_dimension_check,
    open_closed_marked_point_bound,
    real_config_cancellation_check,
    real_config_conjugation_sign,
    rigid_bubble_maslov,
    table_cells,
    theorem_invariance_check,
)

A, B = CountMode.A, CountMode.B

# The reference table, row by row (dim L mod 4), columns k = 0..3.
REFERENCE_ROWS = {
    A: ["X 1 X -1", "-1 1 -1 1", "X 1 X -1", "1 1 1 1"],
    B: ["X 1 X 1", "1 1 -1 -1", "X 1 X 1", "-1 1 1 -1"],
}


def _cell(mode, n, k):
    return REFERENCE_ROWS[mode][n].split()[k]


@pytest.mark.parametrize("n,k,expected", [(3, 2, 4), (2, 3, 4), (2, 2, None), (3, 0, 0), (1, 7, 2)])
def test_maslov_from_dimension(n, k, expected):
    assert maslov_from_dimension(n, k) == expected


def test_maslov_solves_dimension_equation():
    for n in range(0, 9):
        for k in range(0, 12):
            mu = maslov_from_dimension(n, k)
            if mu is not None:
                assert n + mu - 3 + k * (1 - n) == 0
            else:
                assert (k * (n - 1) + 3 - n) % 2 == 1


@pytest.mark.parametrize("mu,k,expected", [(2, 1, Sign.PLUS), (2, 2, Sign.MINUS), (0, 0, Sign.PLUS)])
def test_conjugation_sign(mu, k, expected):
    assert conjugation_sign(mu, k) is expected


def test_odd_maslov_rejected():
    with pytest.raises(ValueError):
        conjugation_sign(3, 1)
    with pytest.raises(ValueError):
        count_comparison_sign(A, 1, 1)
    with pytest.raises(ValueError):
        cancellation_check(B, 3, 1)
    with pytest.raises(ValueError):
        real_config_conjugation_sign(A, 1, 0, 1, 3)
    with pytest.raises(ValueError):
        real_config_cancellation_check(A, 3, 1, 0, 1)


@pytest.mark.parametrize("k,expected", [(3, 1), (1, 0), (5, 0), (4, 1), (2, 0)])
def test_cyclic_reversal_exponent(k, expected):
    assert cyclic_reversal_exponent(k) == expected


def test_cyclic_reversal_matches_inversion_count():
    for k in range(1, 41):
        assert Sign.from_parity(cyclic_reversal_exponent(k)) is reversal_sign(k)


@pytest.mark.parametrize("mode,mu,k,expected", [
    (A, 4, 2, Sign.PLUS),
    (B, 4, 3, Sign.PLUS),
    (A, 4, 3, Sign.MINUS),
])
def test_count_comparison_sign(mode, mu, k, expected):
    assert count_comparison_sign(mode, mu, k) is expected


@pytest.mark.parametrize("n,k,mode,expected", [(3, 1, A, Sign.PLUS), (1, 0, A, Sign.MINUS), (0, 3, B, Sign.PLUS)])
def test_ab_table_examples(n, k, mode, expected):
    assert ab_table_entry(n, k, mode) is expected


def test_table_matches_reference_rows():
    for mode, n, k in itertools.product(CountMode, range(4), range(4)):
        assert str(ab_table_entry(n, k, mode)) == _cell(mode, n, k), (mode, n, k)
        assert str(REFERENCE_TABLE[mode][n][k]) == _cell(mode, n, k)


def _oracle_cell(mode, n, k):
    """Same cell via the conjugation sign and an inversion-counted reversal."""
    mu = k * (n - 1) + 3 - n
    if mu % 2:
        return Sign.UNDEFINED
    sign = conjugation_sign(mu, k)
    if mode is B:
        sign = sign * (reversal_sign(k) if k >= 1 else Sign.MINUS)  # k=0: (-2)(-1)/2 = 1
    return sign


def test_table_independent_derivation():
    for mode, n, k in itertools.product(CountMode, range(4), range(4)):
        for a, b in itertools.product(range(3), range(3)):
            assert ab_table_entry(n, k, mode, n=n + 4 * a, k=k + 4 * b) is _oracle_cell(mode, n + 4 * a, k + 4 * b)


def test_table_has_four_x_cells_per_mode():
    cells = table_cells()
    assert len(cells) == 32
    assert all(c.verified for c in cells)
    for mode in CountMode:
        assert sum(c.sign is Sign.UNDEFINED for c in cells if c.mode is mode) == 4


def test_first_row_reductions():
    # dim L = 4i: k must be odd; A sign is (k+3)/2 mod 2, B is always even
    for n in (4, 8, 12):
        for k in range(1, 30, 2):
            mu = maslov_from_dimension(n, k)
            assert count_comparison_sign(A, mu, k) is Sign.from_parity((k + 3) // 2)
            assert count_comparison_sign(B, mu, k) is Sign.PLUS


def test_representatives_must_reduce():
    with pytest.raises(ValueError):
        ab_table_entry(1, 1, A, n=6)


@pytest.mark.parametrize("k1,k2,i,n,expected", [(2, 1, 1, 2, 0), (1, 1, 1, 3, 0)])
def test_boundary_epsilon(k1, k2, i, n, expected):
    assert boundary_epsilon(k1, k2, i, n) == expected


def test_boundary_epsilon_at_first_point_is_unshifted_formula():
    for k1, k2, n in itertools.product(range(8), range(8), range(1, 6)):
        assert boundary_epsilon(k1, k2, 1, n) == ((k1 - 1) * (k2 - 1) + n + k1) % 2


def test_boundary_epsilon_depends_on_i_through_shift_only():
    for k1, k2, n in itertools.product(range(6), range(6), range(1, 4)):
        for i in range(1, k1 + 2):
            shift = (boundary_epsilon(k1, k2, i, n) - boundary_epsilon(k1, k2, 1, n)) % 2
            assert shift == ((i - 1) * (k2 + 1)) % 2


@pytest.mark.parametrize("mode,mu2,k2,expected", [
    (A, 4, 2, True),
    (B, 2, 1, True),
    (A, 2, 1, True),
    (A, 4, 1, False),
])
def test_cancellation_check(mode, mu2, k2, expected):
    assert cancellation_check(mode, mu2, k2) is expected


def _brute_splittings(n, k):
    """Every (k1, mu1, k2, mu2) whose bubbles meet a generic path, from the dimension inequality."""
    mu = k * (n - 1) + 3 - n
    out = set()
    for k1 in range(k + 1):
        k2 = k - k1
        for mu1 in range(-4 * (k + n) - 4, 4 * (k + n) + 6, 2):
            mu2 = mu - mu1
            # dim M_{0,k_i}(beta_i) >= k_i n - 1 for each side
            if n + mu1 - 3 + k1 >= k1 * n - 1 and n + mu2 - 3 + k2 >= k2 * n - 1:
                out.add((k1, mu1, k2, mu2))
    return out


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
def test_admissible_splittings_match_brute_force(n):
    for k in range(0, 12):
        if maslov_from_dimension(n, k) is None:
            continue
        got = admissible_splittings(n, k)
        assert {(s.k1, s.mu1, s.k2, s.mu2) for s in got} == _brute_splittings(n, k)
        assert all(s.admissible for s in got)
        for s in got:
            assert {t.i for t in got if (t.k1, t.mu1) == (s.k1, s.mu1)} == set(range(1, s.k1 + 2))


def test_n3_splittings_have_mu_twice_k():
    for k in range(0, 26):
        for s in admissible_splittings(3, k):
            assert (s.mu1, s.mu2) == (2 * s.k1, 2 * s.k2)


def test_n2_splittings_even_odd_pattern():
    got = {(s.k1, s.mu1, s.k2, s.mu2) for s in admissible_splittings(2, 5)}
    expected = set()
    for k1 in range(0, 6):
        k2 = 5 - k1
        if k1 % 2 == 0:
            expected.add((k1, k1, k2, k2 + 1))
        else:
            expected.add((k1, k1 + 1, k2, k2))
    assert got == expected


def test_n2_maslov_uniquely_determined_by_parity():
    for k in range(1, 26, 2):
        for s in admissible_splittings(2, k):
            assert s.mu1 == rigid_bubble_maslov(2, s.k1)
            assert s.mu2 == rigid_bubble_maslov(2, s.k2)


def test_n4_has_two_maslov_values_for_one_point():
    mus = {s.mu1 for s in admissible_splittings(4, 3) if s.k1 == 1}
    assert mus == {2, 4}


def test_undefined_parent_rejected():
    with pytest.raises(ValueError):
        admissible_splittings(2, 2)


@given(st.integers(1, 8), st.integers(0, 14))
def test_swap_symmetry(n, k):
    if maslov_from_dimension(n, k) is None:
        return
    got = {(s.k1, s.mu1, s.k2, s.mu2) for s in admissible_splittings(n, k)}
    assert got == {(k2, mu2, k1, mu1) for k1, mu1, k2, mu2 in got}
    for s in admissible_splittings(n, k):
        assert s.swapped().admissible


def test_splitting_descriptor_flags_inadmissible():
    s = SplittingDescriptor(k1=1, k2=2, mu1=8, mu2=0, i=1, n=3)
    assert not s.admissible
    with pytest.raises(ValueError):
        SplittingDescriptor(1, 1, 2, 2, i=3, n=3)


@pytest.mark.parametrize("mode,n", [(A, 3), (B, 2)])
def test_theorem_parity_holds(mode, n):
    rep = theorem_invariance_check(mode, n, 25)
    assert rep.checked > 0
    assert rep.failures == []


def test_higher_dimension_fails():
    rep = theorem_invariance_check(A, 4, 9)
    assert rep.failures
    # and the other rows of dimension >= 4 fail in both modes
    for n in (4, 5, 8, 9):
        for mode in CountMode:
            assert not theorem_invariance_check(mode, n, 9).passed


def test_wrong_mode_for_dimension_fails():
    assert not theorem_invariance_check(A, 2, 25).passed
    assert not theorem_invariance_check(B, 3, 25).passed


# -- real configurations ------------------------------------------------------

def test_real_config_sign_n3():
    for c in range(0, 8):
        for r in range(1, 10):
            k = r + 2 * c
            mu = maslov_from_dimension(3, k)
            assert real_config_conjugation_sign(A, mu, c, r, 3) is Sign.PLUS


def test_real_config_sign_n2_b():
    for c in range(0, 8):
        for r in range(1, 12, 2):
            k = r + 2 * c
            assert real_config_conjugation_sign(B, k + 1, c, r, 2) is Sign.PLUS


def test_real_config_sign_reduces_to_boundary_sign():
    assert real_config_conjugation_sign(A, 2, 0, 1, 3) is conjugation_sign(2, 1)
    for mu in range(-4, 12, 2):
        for r in range(1, 10):
            for n in range(1, 5):
                assert real_config_conjugation_sign(A, mu, 0, r, n) is count_comparison_sign(A, mu, r)
                assert real_config_conjugation_sign(B, mu, 0, r, n) is count_comparison_sign(B, mu, r)


def test_real_config_cancellation_exhaustive():
    for c in range(11):
        for r in range(11):
            k = r + 2 * c
            assert real_config_cancellation_check(A, 3, 2 * k, c, r)
            assert real_config_cancellation_check(B, 2, rigid_bubble_maslov(2, k), c, r)


def test_real_config_cancellation_reduces_at_c0():
    assert real_config_cancellation_check(A, 2, 2, 0, 1) == cancellation_check(A, 2, 1)
    for mode, mu, r, n in itertools.product(CountMode, range(-2, 10, 2), range(0, 9), range(1, 5)):
        assert real_config_cancellation_check(mode, n, mu, 0, r) == cancellation_check(mode, mu, r)


def test_pair_swap_identity_mod4():
    # 2c + 2r + 2nc == 2k (mod 4) when n == 3 (mod 4)
    for n in (3, 7, 11):
        for c in range(21):
            for r in range(21):
                assert (2 * c + 2 * r + 2 * n * c) % 4 == (2 * (r + 2 * c)) % 4


def test_moduli_descriptor_validation():
    d = ModuliDescriptor(n=3, mu=4, k=2)
    assert d.is_rigid
    assert ModuliDescriptor.real(n=2, mu=4, c=1, r=1).k == 3
    with pytest.raises(ValueError):
        ModuliDescriptor(n=2, mu=3, k=2)
    with pytest.raises(ValueError):
        ModuliDescriptor.real(n=2, mu=4, c=2, r=0)
    with pytest.raises(ValueError):
        ModuliDescriptor(n=2, mu=4, k=5, c=1, r=1)


# -- open-closed ---------------------------------------------------------------

def test_open_closed_dimension():
    assert open_closed_dimension_check(OpenClosedProblem(n=3, mu=4, k=2, l=1, degQ=(2,)))
    assert not open_closed_dimension_check(OpenClosedProblem(n=3, mu=4, k=2, l=2, degQ=(1, 1)))


def test_open_closed_problem_validation():
    with pytest.raises(ValueError):
        OpenClosedProblem(n=2, mu=3, k=1, l=1, degQ=(1,))
    with pytest.raises(ValueError):
        OpenClosedProblem(n=2, mu=4, k=1, l=2, degQ=(1,))


@pytest.mark.parametrize("l,mu,mc,expected", [(1, 4, 1, True), (2, 4, 3, False), (1, 2, 5, False)])
def test_marked_point_bound(l, mu, mc, expected):
    assert open_closed_marked_point_bound(l, mu, mc) is expected
