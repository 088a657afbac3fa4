from fractions import Fraction
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from monogenic.axial import AxialPair, EVEN, ODD, RadialPolynomial, lift
from monogenic.clifford import Multivector
from monogenic.linalg import InconsistentSystem, RowReducer, nullspace
from monogenic.polynomial import CliffordPolynomial, dirac, is_homogeneous, is_monogenic, multiply
from monogenic.spherical import (
    FischerDecomposition,
    NotHomogeneousError,
    SphericalMonogenic,
    ck_axial_coefficients,
    ck_axial_form,
    ck_extend,
    dirac_power_on_xn_p,
    fischer_decompose,
    monogenic_basis,
    random_axial_monogenic,
    random_homogeneous,
    random_monogenic,
    vector_power,
)

X = CliffordPolynomial.variable
C = CliffordPolynomial.constant


def xvec(m):
    return CliffordPolynomial.vector_variable(m)


def test_nullspace_small():
    # x + y - z = 0, y + z = 0  ->  kernel spanned by (2, -1, 1)
    (vec,) = nullspace([{0: 1, 1: 1, 2: -1}, {1: 1, 2: 1}], 3)
    assert vec == {2: 1, 0: 2, 1: -1}


def test_solution_and_inconsistency():
    red = RowReducer(2)
    red.add_row({0: 1, 1: 1, 2: 3})
    red.add_row({0: 1, 1: -1, 2: 1})
    assert red.solution(2) == {0: 2, 1: 1}
    with pytest.raises(InconsistentSystem):
        red.add_row({0: 1, 1: 1, 2: 4})


@pytest.mark.parametrize("m", [3, 5])
def test_ck_extend_examples(m):
    assert ck_extend(C(m, 1)) == C(m, 1)
    assert ck_extend(xvec(m)) == xvec(m) + X(m, 0).scale(m)
    P = random_monogenic(2, m, 5).poly
    assert ck_extend(P) == P


def test_ck_extend_rejects_x0():
    with pytest.raises(ValueError):
        ck_extend(X(3, 0))


@pytest.mark.parametrize("m", [3, 5])
def test_fischer_of_vector_square(m):
    dec = fischer_decompose(multiply(xvec(m), xvec(m)), 2)
    assert dec.components[0].poly.is_zero()
    assert dec.components[1].poly.is_zero()
    assert dec.components[2].poly == C(m, 1)


def test_fischer_of_monogenic_is_trivial():
    P = random_monogenic(3, 5, 2).poly
    dec = fischer_decompose(P, 3)
    assert dec.components[0].poly == P
    assert all(c.poly.is_zero() for c in dec.components[1:])


def test_fischer_x1_squared():
    # Oracle by hand: x1^2 = H - x^2/3 with H = x1^2 - |x|^2/3 harmonic, and
    # H = M2 + x M1 where dirac(x M1) = -(2 + m) M1 fixes M1 = -dirac(H)/5.
    m = 3
    dec = fischer_decompose(X(m, 1) ** 2, 2)
    e1 = Multivector.basis(m, 1)
    M1 = (X(m, 1) * C(m, e1)).scale(Fraction(-2, 5)) + xvec(m).scale(Fraction(2, 15))
    assert dec.components[2].poly == C(m, Fraction(-1, 3))
    assert dec.components[1].poly == M1
    H = X(m, 1) ** 2 + CliffordPolynomial.norm_squared(m).scale(Fraction(-1, 3))
    assert dec.components[0].poly == H - multiply(xvec(m), M1)
    assert dec.reassemble() == X(m, 1) ** 2


def test_fischer_preconditions():
    with pytest.raises(NotHomogeneousError):
        fischer_decompose(X(3, 1) ** 2 + X(3, 2), 2)
    with pytest.raises(ValueError):
        fischer_decompose(X(3, 0) * X(3, 1), 2)


def test_fischer_json_round_trip():
    dec = fischer_decompose(random_homogeneous(2, 3, 8), 2)
    again = FischerDecomposition.from_json(dec.to_json())
    assert again == dec


@pytest.mark.parametrize("m,k", [(3, 0), (3, 1), (3, 2), (3, 3), (5, 1), (5, 2)])
def test_monogenic_basis_dimension(m, k):
    # dim of left-monogenic degree-k homogeneous R_0,m-valued polynomials
    assert len(monogenic_basis(k, m)) == 2 ** m * comb(k + m - 2, m - 2)


def test_dirac_power_examples():
    m = 3
    M = random_monogenic(2, m, 4)
    assert dirac_power_on_xn_p(1, M) == M.poly.scale(-(2 * 2 + m))
    assert dirac_power_on_xn_p(0, M).is_zero()
    one = SphericalMonogenic(C(m, 1), 0)
    assert dirac_power_on_xn_p(2, one) == xvec(m).scale(-2)


def test_ck_axial_form_examples():
    assert ck_axial_form(0, 2, 5) == AxialPair(RadialPolynomial(EVEN, {(0, 0): 1}), RadialPolynomial.zero(ODD))
    assert ck_axial_form(1, 0, 3) == AxialPair(RadialPolynomial(EVEN, {(1, 0): 3}), RadialPolynomial(ODD, {(0, 1): 1}))
    for l in range(4):
        for m in (3, 5, 7):
            assert ck_axial_form(1, l, m) == AxialPair(
                RadialPolynomial(EVEN, {(1, 0): 2 * l + m}), RadialPolynomial(ODD, {(0, 1): 1})
            )
    assert ck_axial_coefficients(0, 1, 3) == [1]


def test_random_generators():
    assert random_monogenic(0, 3, 1).poly.degree() == 0
    assert dirac(random_monogenic(3, 3, 1).poly).is_zero()
    assert is_homogeneous(random_homogeneous(2, 3, 9), 2)
    assert all(sum(e) == 2 for e in random_homogeneous(2, 3, 9).terms)
    Q = random_axial_monogenic(2, 3, 9)
    assert is_monogenic(Q) and is_homogeneous(Q, 2)


def test_spherical_monogenic_validation():
    with pytest.raises(ValueError):
        SphericalMonogenic(xvec(3), 1)
    with pytest.raises(NotHomogeneousError):
        SphericalMonogenic(C(3, 1), 1)


# properties

dims = st.sampled_from([3, 5])
seeds = st.integers(0, 10 ** 6)


@settings(max_examples=15, deadline=None)
@given(dims, st.integers(0, 3), seeds)
def test_fischer_reassembles(m, k, seed):
    P = random_homogeneous(k, m, seed)
    dec = fischer_decompose(P, k)
    assert dec.reassemble() == P
    assert all(dirac(c.poly).is_zero() for c in dec.components)


@settings(max_examples=15, deadline=None)
@given(dims, st.integers(0, 3), st.integers(0, 3), seeds)
def test_fischer_picks_out_single_slot(m, n, l, seed):
    M = random_monogenic(l, m, seed).poly
    dec = fischer_decompose(multiply(vector_power(m, n), M), n + l)
    for j, comp in enumerate(dec.components):
        assert comp.poly == (M if j == n else CliffordPolynomial.zero(m))


@settings(max_examples=20, deadline=None)
@given(dims, st.integers(0, 6), st.integers(0, 3), seeds)
def test_dirac_closed_form(m, n, l, seed):
    M = random_monogenic(l, m, seed)
    assert dirac_power_on_xn_p(n, M) == dirac(multiply(vector_power(m, n), M.poly))


@settings(max_examples=20, deadline=None)
@given(dims, st.integers(0, 4), st.integers(0, 3), seeds)
def test_ck_axial_form_matches_ck_extend(m, n, l, seed):
    M = random_monogenic(l, m, seed).poly
    assert lift(ck_axial_form(n, l, m), M) == ck_extend(multiply(vector_power(m, n), M))


@settings(max_examples=10, deadline=None)
@given(dims, st.integers(1, 3), seeds)
def test_ck_reassembly(m, k, seed):
    Q = random_axial_monogenic(k, m, seed)
    dec = fischer_decompose(Q.at_x0_zero(), k)
    total = CliffordPolynomial.zero(m)
    for n, M in enumerate(dec.components):
        total = total + ck_extend(multiply(vector_power(m, n), M.poly))
    assert total == Q


@settings(max_examples=20, deadline=None)
@given(dims, st.integers(0, 4), seeds)
def test_ck_extension_is_monogenic(m, k, seed):
    g = random_homogeneous(k, m, seed)
    ext = ck_extend(g)
    assert is_monogenic(ext)
    assert ext.at_x0_zero() == g
